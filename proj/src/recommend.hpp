// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "baselines/cf.hpp"
#include "baselines/graph.hpp"
#include "baselines/popularity.hpp"
#include "baselines/temporal.hpp"
#include "cognitive/three_layers.hpp"
#include "rank/ranking.hpp"

namespace folkrec {

enum class Algorithm {
    Mp,
    MpU,
    MpR,
    MpUR,
    Cf,
    FolkRank,
    Girptm,
    BllC,
    ThreeL,
    ThreeLt,
    ThreeLtMpr,
};

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg); // the CLI / CSV identifier
bool needs_topic_model(Algorithm alg);
std::span<const Algorithm> all_algorithms();

struct RecommendParams {
    uint32_t k = 10;
    double beta = 0.5;
    double decay = 0.5;
    uint32_t cf_neighbors = 20;
    double girptm_mu = 1e-6; // per second
    baselines::FolkRankParams folkrank;
};

// One query surface for every algorithm. nullopt ids mean the entity is
// unknown to the train vocabulary; recommenders degrade to their defined
// fallbacks instead of erroring. The FolkRank base run is cached on first
// use, so construct one Recommender per train graph and reuse it.
class Recommender {
public:
    Recommender(const Folksonomy& train, const topics::TopicModel* model,
                RecommendParams params);

    // Builds the cached FolkRank engine up front (call before concurrent use).
    void prepare(std::span<const Algorithm> algorithms);

    rank::Ranking recommend(Algorithm alg, std::optional<UserId> u,
                            std::optional<ResourceId> r) const;

    const RecommendParams& params() const { return params_; }
    const Folksonomy& train() const { return *train_; }
    const topics::TopicModel* model() const { return model_; }

private:
    const baselines::FolkRankEngine& folkrank_engine() const;

    const Folksonomy* train_;
    const topics::TopicModel* model_;
    RecommendParams params_;
    mutable std::unique_ptr<baselines::FolkRankEngine> folkrank_;
};

} // namespace folkrec
