// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "recommend.hpp"

namespace folkrec::eval {

inline constexpr uint32_t kMaxCutoff = 10;

struct EvalParams {
    RecommendParams recommend;
    bool strict_k_precision = false;
    unsigned threads = 1;
};

struct QueryLogRow {
    UserId user;
    ResourceId resource;
    std::vector<TagId> relevant;    // sorted
    std::vector<TagId> recommended; // ranked
};

struct EvalReport {
    std::string algorithm;
    std::array<double, kMaxCutoff> precision{}; // index k-1
    std::array<double, kMaxCutoff> recall{};
    double f1_at_5 = 0.0;
    double mrr = 0.0;
    double map = 0.0;
    double ndcg_at_10 = 0.0;
    uint64_t user_count = 0;
    uint64_t failures = 0;
};

struct AlgorithmRun {
    EvalReport report;
    std::vector<QueryLogRow> queries;
};

// Scores every test post whose user passed the post-filter against the
// top-10 recommendation computed on the train graph, then macro-averages
// per cutoff. The recommender never sees the test tags; queries carry
// only (user, resource). A query that throws is scored with an empty
// recommendation and counted as a failure. Deterministic for any thread
// count: each query writes its own slot, aggregation runs in test order.
std::vector<AlgorithmRun> run_benchmark(const Folksonomy& train,
                                        std::span<const Post> test,
                                        std::span<const UserId> eval_users,
                                        std::span<const Algorithm> algorithms,
                                        const topics::TopicModel* model,
                                        const EvalParams& params);

// `algorithm,k,precision,recall` rows for k = 1..10 per algorithm, then
// `algorithm,metric,value` rows for f1@5, mrr, map, ndcg@10.
void write_summary_csv(const std::filesystem::path& path,
                       std::span<const AlgorithmRun> runs);

// One row per query: user, resource, relevant tags, recommended tags;
// tab-separated columns, pipe-separated lists.
void write_query_log(const std::filesystem::path& path, const AlgorithmRun& run,
                     const Vocabulary& vocab);

// Console table: per-k precision/recall per algorithm.
std::string format_report_table(std::span<const AlgorithmRun> runs);

} // namespace folkrec::eval
