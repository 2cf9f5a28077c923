// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "eval/benchmark.hpp"
#include "eval/metrics.hpp"
#include "ingest/split.hpp"
#include "support/synthetic.hpp"
#include "util/rng.hpp"

using namespace folkrec;
using namespace folkrec::eval;

namespace {

std::vector<TagId> ids(std::initializer_list<uint32_t> values) {
    std::vector<TagId> out;
    for (uint32_t v : values) out.push_back(TagId{v});
    return out;
}

} // namespace

TEST_CASE("precision examples") {
    auto rel = ids({0, 2});
    CHECK(precision_at_k(ids({0, 1, 2}), rel, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(precision_at_k(ids({}), rel, 5) == 0.0);
    // Short list: denominator min(k, |rec|).
    CHECK(precision_at_k(ids({0, 1}), ids({0}), 10) == doctest::Approx(0.5).epsilon(1e-12));
    // Strict variant divides by k.
    CHECK(precision_at_k(ids({0, 1}), ids({0}), 10, true) ==
          doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("recall examples") {
    auto rel = ids({0, 2});
    CHECK(recall_at_k(ids({0, 1, 2}), rel, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(recall_at_k(ids({0, 1, 2}), rel, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(recall_at_k(ids({5, 6}), rel, 2) == 0.0);
}

TEST_CASE("f1 examples") {
    // P = R = 0.5: rec = [hit, miss], rel = {hit, missing}.
    CHECK(f1_at_k(ids({0, 9}), ids({0, 1}), 2) == doctest::Approx(0.5).epsilon(1e-12));
    // P = 1, R = 0 is impossible; P = 0, R = 0 clamps to 0.
    CHECK(f1_at_k(ids({9}), ids({0}), 1) == 0.0);
    // P = 2/3, R = 1 -> 0.8.
    CHECK(f1_at_k(ids({0, 9, 1}), ids({0, 1}), 3) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("mrr, map and ndcg examples") {
    CHECK(mrr(ids({9, 0}), ids({0})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mrr(ids({9, 8}), ids({0})) == 0.0);

    CHECK(average_precision(ids({0, 1}), ids({0, 1})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ndcg_at_k(ids({0, 1}), ids({0, 1}), 2) == doctest::Approx(1.0).epsilon(1e-12));

    // rec = [x, a], rel = {a, b}: dcg = 1/log2(3), idcg = 1 + 1/log2(3).
    const double expected = (1.0 / std::log2(3.0)) / (1.0 + 1.0 / std::log2(3.0));
    CHECK(ndcg_at_k(ids({9, 0}), ids({0, 1}), 2) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.3869).epsilon(1e-3));
}

namespace {

// Reference implementations, deliberately written from the definitions
// with no shared helpers, used as the oracle for the random sweep.
double ref_precision(const std::vector<TagId>& rec, const std::set<uint32_t>& rel, size_t k,
                     bool strict) {
    size_t hits = 0;
    for (size_t i = 0; i < rec.size() && i < k; ++i) hits += rel.count(rec[i].value);
    const size_t denom = strict ? k : std::min(k, rec.size());
    return denom == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(denom);
}

double ref_recall(const std::vector<TagId>& rec, const std::set<uint32_t>& rel, size_t k) {
    size_t hits = 0;
    for (size_t i = 0; i < rec.size() && i < k; ++i) hits += rel.count(rec[i].value);
    return rel.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(rel.size());
}

double ref_f1(const std::vector<TagId>& rec, const std::set<uint32_t>& rel, size_t k,
              bool strict) {
    const double p = ref_precision(rec, rel, k, strict);
    const double r = ref_recall(rec, rel, k);
    return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

double ref_mrr(const std::vector<TagId>& rec, const std::set<uint32_t>& rel) {
    for (size_t i = 0; i < rec.size(); ++i)
        if (rel.count(rec[i].value)) return 1.0 / static_cast<double>(i + 1);
    return 0.0;
}

double ref_map(const std::vector<TagId>& rec, const std::set<uint32_t>& rel) {
    if (rel.empty()) return 0.0;
    double sum = 0.0;
    size_t hits = 0;
    for (size_t i = 0; i < rec.size(); ++i) {
        if (rel.count(rec[i].value)) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(rel.size());
}

double ref_ndcg(const std::vector<TagId>& rec, const std::set<uint32_t>& rel, size_t k) {
    double dcg = 0.0;
    for (size_t i = 0; i < rec.size() && i < k; ++i)
        if (rel.count(rec[i].value)) dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    double idcg = 0.0;
    for (size_t i = 0; i < rel.size() && i < k; ++i)
        idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    return idcg == 0.0 ? 0.0 : dcg / idcg;
}

} // namespace

TEST_CASE("metrics match the reference implementations on random pairs") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 1000; ++round) {
        // Duplicate-free ranked list, |rec| <= 10; relevant set, |rel| <= 6.
        std::vector<TagId> rec;
        std::set<uint32_t> used;
        const size_t rec_len = next_bounded(rng, 11);
        while (rec.size() < rec_len) {
            uint32_t t = static_cast<uint32_t>(next_bounded(rng, 20));
            if (used.insert(t).second) rec.push_back(TagId{t});
        }
        std::set<uint32_t> rel;
        const size_t rel_len = 1 + next_bounded(rng, 6);
        while (rel.size() < rel_len) rel.insert(static_cast<uint32_t>(next_bounded(rng, 20)));

        std::vector<TagId> rel_sorted;
        for (uint32_t v : rel) rel_sorted.push_back(TagId{v});

        for (size_t k = 1; k <= 10; ++k) {
            const bool strict = (round % 2) == 0;
            CHECK(precision_at_k(rec, rel_sorted, k, strict) ==
                  doctest::Approx(ref_precision(rec, rel, k, strict)).epsilon(1e-12));
            CHECK(recall_at_k(rec, rel_sorted, k) ==
                  doctest::Approx(ref_recall(rec, rel, k)).epsilon(1e-12));
            CHECK(f1_at_k(rec, rel_sorted, k, strict) ==
                  doctest::Approx(ref_f1(rec, rel, k, strict)).epsilon(1e-12));
            CHECK(ndcg_at_k(rec, rel_sorted, k) ==
                  doctest::Approx(ref_ndcg(rec, rel, k)).epsilon(1e-12));
        }
        CHECK(mrr(rec, rel_sorted) == doctest::Approx(ref_mrr(rec, rel)).epsilon(1e-12));
        CHECK(average_precision(rec, rel_sorted) ==
              doctest::Approx(ref_map(rec, rel)).epsilon(1e-12));
    }
}

TEST_CASE("permuting items below the last relevant hit changes nothing") {
    auto rel = ids({3, 7});
    auto rec_a = ids({3, 7, 1, 2, 4});
    auto rec_b = ids({3, 7, 4, 1, 2});
    for (size_t k = 1; k <= 5; ++k) {
        CHECK(precision_at_k(rec_a, rel, k) == precision_at_k(rec_b, rel, k));
        CHECK(recall_at_k(rec_a, rel, k) == recall_at_k(rec_b, rel, k));
        CHECK(ndcg_at_k(rec_a, rel, k) == ndcg_at_k(rec_b, rel, k));
    }
    CHECK(mrr(rec_a, rel) == mrr(rec_b, rel));
    CHECK(average_precision(rec_a, rel) == average_precision(rec_b, rel));
}

TEST_CASE("recall is non-decreasing in k per query") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 100; ++round) {
        std::vector<TagId> rec;
        std::set<uint32_t> used;
        while (rec.size() < next_bounded(rng, 11)) {
            uint32_t t = static_cast<uint32_t>(next_bounded(rng, 15));
            if (used.insert(t).second) rec.push_back(TagId{t});
        }
        std::vector<TagId> rel = ids({1, 4, 9});
        double prev = 0.0;
        for (size_t k = 1; k <= 10; ++k) {
            const double r = recall_at_k(rec, rel, k);
            CHECK(r >= prev);
            CHECK(r >= 0.0);
            CHECK(r <= 1.0);
            prev = r;
        }
        const double p1 = precision_at_k(rec, rel, 1);
        CHECK((p1 == 0.0 || p1 == 1.0));
    }
}

TEST_CASE("benchmark on a hand-run two-user split") {
    // u1: (r1 {a,b} t1), (r2 {a,c} t2), test (r3 {b} t3)
    // u2: (r1 {a} t1), test (r4 {d} t5)
    // Train counts: a 3, b 1, c 1 -> MP list [a, b, c].
    // Query u1: rel {b}: hit at rank 2.
    // Query u2: rel {d}: no hits.
    std::vector<PostRecord> posts = {
        {"u1", "r1", {"a", "b"}, 1}, {"u1", "r2", {"a", "c"}, 2}, {"u1", "r3", {"b"}, 3},
        {"u2", "r1", {"a"}, 1},      {"u2", "r4", {"d"}, 5},
    };
    Folksonomy full = Folksonomy::build(posts);
    ingest::SplitResult split = ingest::split_train_test(full, 2);
    REQUIRE(split.test.size() == 2);
    REQUIRE(split.eval_users.size() == 2);

    const Algorithm algs[] = {Algorithm::Mp};
    auto runs = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr,
                              EvalParams{});
    REQUIRE(runs.size() == 1);
    const EvalReport& report = runs[0].report;

    CHECK(report.user_count == 2);
    CHECK(report.failures == 0);
    // Means over the two queries, computed on paper.
    CHECK(report.precision[0] == doctest::Approx(0.0).epsilon(1e-12));          // P@1
    CHECK(report.precision[1] == doctest::Approx(0.25).epsilon(1e-12));         // P@2
    CHECK(report.precision[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));    // P@3
    CHECK(report.precision[9] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));    // P@10
    CHECK(report.recall[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(report.recall[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.recall[9] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.f1_at_5 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.mrr == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.map == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.ndcg_at_10 ==
          doctest::Approx(0.5 / std::log2(3.0)).epsilon(1e-12));
}

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("folkrec_eval_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("summary csv and query log have the documented shape") {
    std::vector<PostRecord> posts = {
        {"u1", "r1", {"a"}, 1}, {"u1", "r2", {"b"}, 2}, {"u1", "r3", {"a"}, 3},
        {"u2", "r1", {"a"}, 1}, {"u2", "r4", {"b"}, 4},
    };
    Folksonomy full = Folksonomy::build(posts);
    ingest::SplitResult split = ingest::split_train_test(full, 2);

    const Algorithm algs[] = {Algorithm::Mp, Algorithm::MpU};
    auto runs = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr,
                              EvalParams{});

    TempDir dir;
    write_summary_csv(dir.path / "summary.csv", runs);
    std::ifstream in(dir.path / "summary.csv");
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    // header + 2*10 per-k rows + header + 2*4 scalar rows
    CHECK(lines.size() == 1 + 20 + 1 + 8);
    CHECK(lines[0] == "algorithm,k,precision,recall");
    CHECK(lines[1].rfind("mp,1,", 0) == 0);
    CHECK(lines[21] == "algorithm,metric,value");

    write_query_log(dir.path / "queries_mp.tsv", runs[0], split.train.vocab());
    std::ifstream qin(dir.path / "queries_mp.tsv");
    size_t rows = 0;
    while (std::getline(qin, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), '\t') == 3);
    }
    CHECK(rows == runs[0].report.user_count);
}

TEST_CASE("a recommender that always fails scores zero but the run survives") {
    std::vector<PostRecord> posts = {
        {"u1", "r1", {"a"}, 1}, {"u1", "r2", {"b"}, 2},
        {"u2", "r1", {"a"}, 1}, {"u2", "r3", {"c"}, 3},
    };
    Folksonomy full = Folksonomy::build(posts);
    ingest::SplitResult split = ingest::split_train_test(full, 2);

    // 3L without a model is rejected up front, before any query runs.
    const Algorithm needs_model[] = {Algorithm::ThreeL};
    CHECK_THROWS(run_benchmark(split.train, split.test, split.eval_users, needs_model,
                               nullptr, EvalParams{}));

    // A per-query throw (cf rejects a zero neighborhood) is isolated:
    // the query scores as empty and lands in the failure tally.
    EvalParams broken;
    broken.recommend.cf_neighbors = 0;
    const Algorithm algs[] = {Algorithm::Cf, Algorithm::Mp};
    auto runs = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr, broken);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].report.failures == runs[0].report.user_count);
    for (const auto& row : runs[0].queries) CHECK(row.recommended.empty());
    for (uint32_t k = 0; k < kMaxCutoff; ++k) CHECK(runs[0].report.recall[k] == 0.0);
    CHECK(runs[1].report.failures == 0); // mp in the same run is unaffected
}

TEST_CASE("benchmark results are identical across thread counts") {
    std::mt19937_64 rng(77);
    testing::RandomPostsConfig cfg;
    cfg.max_users = 6;
    cfg.min_posts = 30;
    cfg.max_posts = 60;
    Folksonomy full = testing::random_folksonomy(rng, cfg);
    ingest::SplitResult split = ingest::split_train_test(full, 3);

    const Algorithm algs[] = {Algorithm::Mp, Algorithm::MpUR, Algorithm::BllC};
    EvalParams serial;
    serial.threads = 1;
    EvalParams parallel;
    parallel.threads = 4;

    auto a = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr, serial);
    auto b = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr, parallel);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].report.precision == b[i].report.precision);
        CHECK(a[i].report.recall == b[i].report.recall);
        CHECK(a[i].report.mrr == b[i].report.mrr);
    }
}

TEST_CASE("perfect and empty recommenders bound the metrics") {
    // With a single-tag universe the MP list is exactly the relevant tag:
    // a perfect recommender. An unknown-user mp_u is the empty one.
    std::vector<PostRecord> posts = {
        {"u1", "r1", {"only"}, 1}, {"u1", "r2", {"only"}, 2},
        {"u2", "r3", {"only"}, 1}, {"u2", "r4", {"only"}, 3},
    };
    Folksonomy full = Folksonomy::build(posts);
    ingest::SplitResult split = ingest::split_train_test(full, 2);

    const Algorithm algs[] = {Algorithm::Mp};
    auto runs = run_benchmark(split.train, split.test, split.eval_users, algs, nullptr,
                              EvalParams{});
    const EvalReport& perfect = runs[0].report;
    for (uint32_t k = 0; k < kMaxCutoff; ++k) {
        CHECK(perfect.precision[k] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(perfect.recall[k] == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(perfect.mrr == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.map == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.ndcg_at_10 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.f1_at_5 == doctest::Approx(1.0).epsilon(1e-12));
}
