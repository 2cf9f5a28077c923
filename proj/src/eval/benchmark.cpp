// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "eval/benchmark.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "eval/metrics.hpp"
#include "util/parallel.hpp"

namespace folkrec::eval {

namespace {

struct Query {
    UserId user;
    ResourceId resource;
    std::vector<TagId> relevant; // sorted
};

std::vector<Query> collect_queries(std::span<const Post> test,
                                   std::span<const UserId> eval_users) {
    std::vector<Query> queries;
    queries.reserve(test.size());
    for (const Post& p : test) {
        if (!std::binary_search(eval_users.begin(), eval_users.end(), p.user)) continue;
        Query q{p.user, p.resource, p.tags};
        assert(std::is_sorted(q.relevant.begin(), q.relevant.end()));
        queries.push_back(std::move(q));
    }
    return queries;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

std::vector<AlgorithmRun> run_benchmark(const Folksonomy& train,
                                        std::span<const Post> test,
                                        std::span<const UserId> eval_users,
                                        std::span<const Algorithm> algorithms,
                                        const topics::TopicModel* model,
                                        const EvalParams& params) {
    for (Algorithm alg : algorithms) {
        if (needs_topic_model(alg) && model == nullptr)
            throw Error(ErrorCode::BadState, "topic model required");
    }

    RecommendParams rec_params = params.recommend;
    rec_params.k = kMaxCutoff; // the protocol compares top-10 lists
    Recommender recommender(train, model, rec_params);
    recommender.prepare(algorithms);

    const std::vector<Query> queries = collect_queries(test, eval_users);

    std::vector<AlgorithmRun> runs;
    runs.reserve(algorithms.size());
    for (Algorithm alg : algorithms) {
        AlgorithmRun run;
        run.report.algorithm = std::string(algorithm_name(alg));
        run.report.user_count = queries.size();
        run.queries.resize(queries.size());

        std::vector<uint8_t> failed(queries.size(), 0);
        parallel_for(queries.size(), params.threads, [&](size_t qi) {
            const Query& q = queries[qi];
            QueryLogRow row;
            row.user = q.user;
            row.resource = q.resource;
            row.relevant = q.relevant;
            try {
                rank::Ranking ranking = recommender.recommend(alg, q.user, q.resource);
                row.recommended.reserve(ranking.size());
                for (const auto& rt : ranking) row.recommended.push_back(rt.tag);
            } catch (const std::exception&) {
                row.recommended.clear();
                failed[qi] = 1;
            }
            run.queries[qi] = std::move(row);
        });

        for (size_t qi = 0; qi < queries.size(); ++qi) {
            const QueryLogRow& row = run.queries[qi];
            if (failed[qi]) ++run.report.failures;

            double prev_recall = 0.0;
            for (uint32_t k = 1; k <= kMaxCutoff; ++k) {
                const double p =
                    precision_at_k(row.recommended, row.relevant, k, params.strict_k_precision);
                const double r = recall_at_k(row.recommended, row.relevant, k);
                assert(r >= prev_recall); // recall is non-decreasing in k per query
                prev_recall = r;
                run.report.precision[k - 1] += p;
                run.report.recall[k - 1] += r;
            }
            (void)prev_recall;
            run.report.f1_at_5 +=
                f1_at_k(row.recommended, row.relevant, 5, params.strict_k_precision);
            run.report.mrr += mrr(row.recommended, row.relevant);
            run.report.map += average_precision(row.recommended, row.relevant);
            run.report.ndcg_at_10 += ndcg_at_k(row.recommended, row.relevant, kMaxCutoff);
        }

        if (!queries.empty()) {
            const double n = static_cast<double>(queries.size());
            for (uint32_t k = 0; k < kMaxCutoff; ++k) {
                run.report.precision[k] /= n;
                run.report.recall[k] /= n;
            }
            run.report.f1_at_5 /= n;
            run.report.mrr /= n;
            run.report.map /= n;
            run.report.ndcg_at_10 /= n;
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

void write_summary_csv(const std::filesystem::path& path,
                       std::span<const AlgorithmRun> runs) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write file: " + path.string());
    out << "algorithm,k,precision,recall\n";
    for (const auto& run : runs) {
        for (uint32_t k = 1; k <= kMaxCutoff; ++k) {
            out << run.report.algorithm << ',' << k << ','
                << format_double(run.report.precision[k - 1]) << ','
                << format_double(run.report.recall[k - 1]) << '\n';
        }
    }
    out << "algorithm,metric,value\n";
    for (const auto& run : runs) {
        out << run.report.algorithm << ",f1@5," << format_double(run.report.f1_at_5) << '\n';
        out << run.report.algorithm << ",mrr," << format_double(run.report.mrr) << '\n';
        out << run.report.algorithm << ",map," << format_double(run.report.map) << '\n';
        out << run.report.algorithm << ",ndcg@10," << format_double(run.report.ndcg_at_10)
            << '\n';
    }
}

void write_query_log(const std::filesystem::path& path, const AlgorithmRun& run,
                     const Vocabulary& vocab) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write file: " + path.string());
    for (const QueryLogRow& row : run.queries) {
        out << vocab.user_label(row.user) << '\t' << vocab.resource_label(row.resource) << '\t';
        for (size_t i = 0; i < row.relevant.size(); ++i) {
            if (i) out << '|';
            out << vocab.tag_label(row.relevant[i]);
        }
        out << '\t';
        for (size_t i = 0; i < row.recommended.size(); ++i) {
            if (i) out << '|';
            out << vocab.tag_label(row.recommended[i]);
        }
        out << '\n';
    }
}

std::string format_report_table(std::span<const AlgorithmRun> runs) {
    std::ostringstream out;
    char buf[160];
    out << "algorithm      metric ";
    for (uint32_t k = 1; k <= kMaxCutoff; ++k) {
        std::snprintf(buf, sizeof(buf), "   k=%-2u", k);
        out << buf;
    }
    out << '\n';
    for (const auto& run : runs) {
        std::snprintf(buf, sizeof(buf), "%-14s", run.report.algorithm.c_str());
        out << buf << " prec   ";
        for (uint32_t k = 0; k < kMaxCutoff; ++k) {
            std::snprintf(buf, sizeof(buf), " %.4f", run.report.precision[k]);
            out << buf;
        }
        out << '\n';
        std::snprintf(buf, sizeof(buf), "%-14s", "");
        out << buf << " recall ";
        for (uint32_t k = 0; k < kMaxCutoff; ++k) {
            std::snprintf(buf, sizeof(buf), " %.4f", run.report.recall[k]);
            out << buf;
        }
        std::snprintf(buf, sizeof(buf),
                      "   (users=%llu, failures=%llu, mrr=%.4f, map=%.4f, ndcg@10=%.4f)",
                      static_cast<unsigned long long>(run.report.user_count),
                      static_cast<unsigned long long>(run.report.failures), run.report.mrr,
                      run.report.map, run.report.ndcg_at_10);
        out << buf << '\n';
    }
    return out.str();
}

} // namespace folkrec::eval
