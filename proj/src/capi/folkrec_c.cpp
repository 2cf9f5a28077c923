// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "folkrec/folkrec.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/folksonomy.hpp"
#include "eval/benchmark.hpp"
#include "ingest/preprocess.hpp"
#include "ingest/split.hpp"
#include "ingest/tsv.hpp"
#include "recommend.hpp"
#include "topics/lda.hpp"
#include "util/digest.hpp"

// Handle definitions. Each wraps an immutable core object; the split also
// embeds a folksonomy wrapper so the train view can be borrowed.
struct folkrec_posts {
    std::vector<folkrec::PostRecord> records;
    folkrec::ingest::ParseReport report;
};

struct folkrec_folksonomy {
    folkrec::Folksonomy impl;
};

struct folkrec_split {
    folkrec_folksonomy train;
    std::vector<folkrec::Post> test;
    std::vector<folkrec::UserId> eval_users;
};

struct folkrec_topic_model {
    folkrec::topics::TopicModel impl;
};

struct folkrec_ranking {
    std::vector<std::string> tags;
    std::vector<double> scores;
};

struct folkrec_reports {
    std::vector<folkrec::eval::EvalReport> reports;
};

namespace {

thread_local std::string g_last_error;

folkrec_status map_code(folkrec::ErrorCode code) {
    using folkrec::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return FOLKREC_ERR_INVALID_ARGUMENT;
    case ErrorCode::EmptyInput: return FOLKREC_ERR_EMPTY_INPUT;
    case ErrorCode::UnknownEntity: return FOLKREC_ERR_UNKNOWN_ENTITY;
    case ErrorCode::ColdUser: return FOLKREC_ERR_COLD_USER;
    case ErrorCode::Io: return FOLKREC_ERR_IO;
    case ErrorCode::BadState: return FOLKREC_ERR_BAD_STATE;
    }
    return FOLKREC_ERR_INTERNAL;
}

template <typename Fn>
folkrec_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return FOLKREC_OK;
    } catch (const folkrec::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FOLKREC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FOLKREC_ERR_INTERNAL;
    }
}

folkrec_status invalid(const char* message) {
    g_last_error = message;
    return FOLKREC_ERR_INVALID_ARGUMENT;
}

folkrec::RecommendParams to_recommend_params(const folkrec_params& p) {
    folkrec::RecommendParams out;
    out.k = p.k;
    out.beta = p.beta;
    out.decay = p.decay;
    out.cf_neighbors = p.cf_neighbors;
    out.girptm_mu = p.girptm_mu;
    out.folkrank.damping = p.damping;
    out.folkrank.tol = p.tolerance;
    out.folkrank.max_iter = p.max_iterations;
    return out;
}

} // namespace

extern "C" {

const char* folkrec_last_error(void) { return g_last_error.c_str(); }

void folkrec_preprocess_config_init(folkrec_preprocess_config* cfg) {
    if (!cfg) return;
    cfg->blacklist = nullptr;
    cfg->blacklist_len = 0;
    cfg->lowercase = 1;
    cfg->user_sample_fraction = 1.0;
    cfg->sample_seed = 0;
}

void folkrec_lda_config_init(folkrec_lda_config* cfg) {
    if (!cfg) return;
    cfg->num_topics = 1000;
    cfg->alpha = 0.0;
    cfg->eta = 0.01;
    cfg->iterations = 500;
    cfg->seed = 0;
}

void folkrec_params_init(folkrec_params* params) {
    if (!params) return;
    params->k = 10;
    params->beta = 0.5;
    params->decay = 0.5;
    params->cf_neighbors = 20;
    params->girptm_mu = 1e-6;
    params->damping = 0.7;
    params->tolerance = 1e-8;
    params->max_iterations = 200;
    params->threads = 1;
    params->strict_k_precision = 0;
}

folkrec_status folkrec_posts_parse_tsv(const char* path, folkrec_posts** out) {
    if (!path || !out) return invalid("null argument");
    return wrap([&] {
        auto parsed = folkrec::ingest::parse_tsv(path);
        *out = new folkrec_posts{std::move(parsed.posts), parsed.report};
    });
}

uint64_t folkrec_posts_count(const folkrec_posts* posts) {
    return posts ? posts->records.size() : 0;
}

uint64_t folkrec_posts_skipped(const folkrec_posts* posts) {
    return posts ? posts->report.skipped : 0;
}

folkrec_status folkrec_posts_preprocess(const folkrec_posts* posts,
                                        const folkrec_preprocess_config* cfg,
                                        folkrec_posts** out) {
    if (!posts || !cfg || !out) return invalid("null argument");
    return wrap([&] {
        folkrec::ingest::PreprocessConfig config;
        config.blacklist.clear();
        for (size_t i = 0; i < cfg->blacklist_len; ++i) {
            if (cfg->blacklist && cfg->blacklist[i]) config.blacklist.insert(cfg->blacklist[i]);
        }
        config.lowercase = cfg->lowercase != 0;
        config.user_sample_fraction = cfg->user_sample_fraction;
        config.sample_seed = cfg->sample_seed;
        auto records = folkrec::ingest::preprocess(posts->records, config);
        folkrec::ingest::ParseReport report = posts->report;
        *out = new folkrec_posts{std::move(records), report};
    });
}

folkrec_status folkrec_posts_write_tsv(const folkrec_posts* posts, const char* path) {
    if (!posts || !path) return invalid("null argument");
    return wrap([&] { folkrec::ingest::write_tsv(path, posts->records); });
}

void folkrec_posts_free(folkrec_posts* posts) { delete posts; }

folkrec_status folkrec_folksonomy_build(const folkrec_posts* posts, folkrec_folksonomy** out) {
    if (!posts || !out) return invalid("null argument");
    return wrap([&] {
        *out = new folkrec_folksonomy{folkrec::Folksonomy::build(posts->records)};
    });
}

folkrec_status folkrec_folksonomy_stats(const folkrec_folksonomy* f, folkrec_stats* out) {
    if (!f || !out) return invalid("null argument");
    const auto& s = f->impl.stats();
    out->posts = s.posts;
    out->users = s.users;
    out->resources = s.resources;
    out->tags = s.tags;
    out->assignments = s.assignments;
    return FOLKREC_OK;
}

folkrec_status folkrec_folksonomy_write_tsv(const folkrec_folksonomy* f, const char* path) {
    if (!f || !path) return invalid("null argument");
    return wrap([&] { folkrec::ingest::write_tsv(path, f->impl); });
}

void folkrec_folksonomy_free(folkrec_folksonomy* f) { delete f; }

folkrec_status folkrec_split_train_test(const folkrec_folksonomy* f, uint32_t min_posts_for_eval,
                                        folkrec_split** out) {
    if (!f || !out) return invalid("null argument");
    if (min_posts_for_eval < 1) return invalid("min_posts_for_eval must be >= 1");
    return wrap([&] {
        auto split = folkrec::ingest::split_train_test(f->impl, min_posts_for_eval);
        *out = new folkrec_split{folkrec_folksonomy{std::move(split.train)},
                                 std::move(split.test), std::move(split.eval_users)};
    });
}

const folkrec_folksonomy* folkrec_split_train(const folkrec_split* split) {
    return split ? &split->train : nullptr;
}

uint64_t folkrec_split_test_count(const folkrec_split* split) {
    return split ? split->test.size() : 0;
}

uint64_t folkrec_split_eval_user_count(const folkrec_split* split) {
    return split ? split->eval_users.size() : 0;
}

void folkrec_split_free(folkrec_split* split) { delete split; }

folkrec_status folkrec_lda_train(const folkrec_folksonomy* train, const folkrec_lda_config* cfg,
                                 folkrec_topic_model** out) {
    if (!train || !cfg || !out) return invalid("null argument");
    return wrap([&] {
        folkrec::topics::LdaConfig config;
        config.num_topics = cfg->num_topics;
        config.alpha = cfg->alpha;
        config.eta = cfg->eta;
        config.iterations = cfg->iterations;
        config.seed = cfg->seed;
        auto docs = folkrec::topics::build_documents(train->impl);
        *out = new folkrec_topic_model{folkrec::topics::train_lda(docs, config)};
    });
}

folkrec_status folkrec_topic_model_save(const folkrec_topic_model* model, const char* path) {
    if (!model || !path) return invalid("null argument");
    return wrap([&] { model->impl.save(path); });
}

folkrec_status folkrec_topic_model_load(const char* path, folkrec_topic_model** out) {
    if (!path || !out) return invalid("null argument");
    return wrap([&] {
        *out = new folkrec_topic_model{folkrec::topics::TopicModel::load(path)};
    });
}

uint32_t folkrec_topic_model_topics(const folkrec_topic_model* model) {
    return model ? model->impl.num_topics() : 0;
}

uint64_t folkrec_topic_model_resources(const folkrec_topic_model* model) {
    return model ? model->impl.resource_count() : 0;
}

void folkrec_topic_model_free(folkrec_topic_model* model) { delete model; }

folkrec_status folkrec_recommend(const folkrec_folksonomy* train,
                                 const folkrec_topic_model* model, const char* algorithm,
                                 const char* user, const char* resource,
                                 const folkrec_params* params, folkrec_ranking** out) {
    if (!train || !algorithm || !user || !resource || !params || !out)
        return invalid("null argument");
    auto alg = folkrec::parse_algorithm(algorithm);
    if (!alg) return invalid("unknown algorithm");
    return wrap([&] {
        const folkrec::Folksonomy& f = train->impl;
        std::optional<folkrec::UserId> u;
        if (auto idx = f.vocab().users().find(user)) u = folkrec::UserId{*idx};
        std::optional<folkrec::ResourceId> r;
        if (auto idx = f.vocab().resources().find(resource)) r = folkrec::ResourceId{*idx};

        folkrec::Recommender recommender(f, model ? &model->impl : nullptr,
                                         to_recommend_params(*params));
        folkrec::rank::Ranking ranking = recommender.recommend(*alg, u, r);

        auto result = std::make_unique<folkrec_ranking>();
        result->tags.reserve(ranking.size());
        result->scores.reserve(ranking.size());
        for (const auto& rt : ranking) {
            result->tags.push_back(f.vocab().tag_label(rt.tag));
            result->scores.push_back(rt.score);
        }
        *out = result.release();
    });
}

uint32_t folkrec_ranking_size(const folkrec_ranking* ranking) {
    return ranking ? static_cast<uint32_t>(ranking->tags.size()) : 0;
}

const char* folkrec_ranking_tag(const folkrec_ranking* ranking, uint32_t i) {
    if (!ranking || i >= ranking->tags.size()) return nullptr;
    return ranking->tags[i].c_str();
}

double folkrec_ranking_score(const folkrec_ranking* ranking, uint32_t i) {
    if (!ranking || i >= ranking->scores.size()) return std::nan("");
    return ranking->scores[i];
}

void folkrec_ranking_free(folkrec_ranking* ranking) { delete ranking; }

folkrec_status folkrec_evaluate(const folkrec_split* split, const folkrec_topic_model* model,
                                const char* const* algorithms, uint32_t algorithm_count,
                                const folkrec_params* params, const char* output_dir,
                                folkrec_reports** out) {
    if (!split || !algorithms || algorithm_count == 0 || !params || !out)
        return invalid("null argument");

    std::vector<folkrec::Algorithm> algs;
    algs.reserve(algorithm_count);
    for (uint32_t i = 0; i < algorithm_count; ++i) {
        if (!algorithms[i]) return invalid("null algorithm name");
        auto alg = folkrec::parse_algorithm(algorithms[i]);
        if (!alg) {
            g_last_error = std::string("unknown algorithm: ") + algorithms[i];
            return FOLKREC_ERR_INVALID_ARGUMENT;
        }
        algs.push_back(*alg);
    }

    return wrap([&] {
        folkrec::eval::EvalParams eval_params;
        eval_params.recommend = to_recommend_params(*params);
        eval_params.strict_k_precision = params->strict_k_precision != 0;
        eval_params.threads = params->threads == 0 ? 1 : params->threads;

        auto runs = folkrec::eval::run_benchmark(split->train.impl, split->test,
                                                 split->eval_users, algs,
                                                 model ? &model->impl : nullptr, eval_params);

        if (output_dir) {
            std::filesystem::path dir(output_dir);
            std::filesystem::create_directories(dir);
            folkrec::eval::write_summary_csv(dir / "summary.csv", runs);
            for (const auto& run : runs) {
                folkrec::eval::write_query_log(
                    dir / ("queries_" + run.report.algorithm + ".tsv"), run,
                    split->train.impl.vocab());
            }
        }

        auto result = std::make_unique<folkrec_reports>();
        result->reports.reserve(runs.size());
        for (auto& run : runs) result->reports.push_back(std::move(run.report));
        *out = result.release();
    });
}

uint32_t folkrec_reports_count(const folkrec_reports* reports) {
    return reports ? static_cast<uint32_t>(reports->reports.size()) : 0;
}

const char* folkrec_reports_algorithm(const folkrec_reports* reports, uint32_t i) {
    if (!reports || i >= reports->reports.size()) return nullptr;
    return reports->reports[i].algorithm.c_str();
}

double folkrec_reports_precision_at(const folkrec_reports* reports, uint32_t i, uint32_t k) {
    if (!reports || i >= reports->reports.size() || k < 1 || k > folkrec::eval::kMaxCutoff)
        return std::nan("");
    return reports->reports[i].precision[k - 1];
}

double folkrec_reports_recall_at(const folkrec_reports* reports, uint32_t i, uint32_t k) {
    if (!reports || i >= reports->reports.size() || k < 1 || k > folkrec::eval::kMaxCutoff)
        return std::nan("");
    return reports->reports[i].recall[k - 1];
}

double folkrec_reports_metric(const folkrec_reports* reports, uint32_t i, const char* name) {
    if (!reports || i >= reports->reports.size() || !name) return std::nan("");
    const auto& r = reports->reports[i];
    if (std::strcmp(name, "f1@5") == 0) return r.f1_at_5;
    if (std::strcmp(name, "mrr") == 0) return r.mrr;
    if (std::strcmp(name, "map") == 0) return r.map;
    if (std::strcmp(name, "ndcg@10") == 0) return r.ndcg_at_10;
    return std::nan("");
}

uint64_t folkrec_reports_user_count(const folkrec_reports* reports, uint32_t i) {
    if (!reports || i >= reports->reports.size()) return 0;
    return reports->reports[i].user_count;
}

uint64_t folkrec_reports_failures(const folkrec_reports* reports, uint32_t i) {
    if (!reports || i >= reports->reports.size()) return 0;
    return reports->reports[i].failures;
}

void folkrec_reports_free(folkrec_reports* reports) { delete reports; }

folkrec_status folkrec_file_digest(const char* path, char out[17]) {
    if (!path || !out) return invalid("null argument");
    return wrap([&] {
        std::string digest = folkrec::file_digest(path);
        std::memcpy(out, digest.c_str(), 17);
    });
}

} // extern "C"
