// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/folksonomy.hpp"
#include "rank/ranking.hpp"

namespace folkrec::baselines {

// Undirected tripartite co-occurrence graph over users, resources and
// tags. Per post: user-tag and resource-tag edges weighted by
// co-occurrence count, plus one user-resource edge.
class FolksonomyGraph {
public:
    explicit FolksonomyGraph(const Folksonomy& train);

    size_t node_count() const { return out_weight_.size(); }
    size_t user_node(UserId u) const { return u.value; }
    size_t resource_node(ResourceId r) const { return n_users_ + r.value; }
    size_t tag_node(TagId t) const { return n_users_ + static_cast<size_t>(n_resources_) + t.value; }
    uint32_t user_nodes() const { return n_users_; }
    uint32_t resource_nodes() const { return n_resources_; }
    uint32_t tag_nodes() const { return n_tags_; }

    std::span<const size_t> offsets() const { return offsets_; }
    std::span<const uint32_t> targets() const { return targets_; }
    std::span<const double> edge_weights() const { return weights_; }
    std::span<const double> out_weights() const { return out_weight_; }

private:
    uint32_t n_users_ = 0;
    uint32_t n_resources_ = 0;
    uint32_t n_tags_ = 0;
    std::vector<size_t> offsets_;
    std::vector<uint32_t> targets_;
    std::vector<double> weights_;
    std::vector<double> out_weight_;
};

struct GraphWeights {
    std::vector<double> weights; // per node, sums to 1
    uint32_t iterations = 0;
    double residual = 0.0;       // L1 change of the final sweep
    double max_mass_drift = 0.0; // max |sum(w) - 1| seen across sweeps
};

// w <- d * (P^T w + dangling * p) + (1 - d) * p with row-stochastic P;
// the preference is normalized to sum 1 internally (uniform when all
// zero), so total mass is conserved every sweep. Stops when the L1
// residual drops below tol or after max_iter sweeps, whichever first.
GraphWeights adapted_pagerank(const FolksonomyGraph& graph, std::span<const double> preference,
                              double damping, double tol, uint32_t max_iter);

struct FolkRankParams {
    double damping = 0.7;
    double tol = 1e-8;
    uint32_t max_iter = 200;
};

// Differential PageRank: the base run uses a uniform preference and is
// computed once; each query boosts the preference of the query user by
// |U| and of the query resource by |R| on top of the uniform mass, and
// ranks tags by the positive part of (boosted - base).
class FolkRankEngine {
public:
    FolkRankEngine(const Folksonomy& train, const FolkRankParams& params);

    rank::Ranking recommend(std::optional<UserId> u, std::optional<ResourceId> r,
                            uint32_t k) const;

    const FolksonomyGraph& graph() const { return graph_; }
    const GraphWeights& base() const { return base_; }
    const FolkRankParams& params() const { return params_; }

private:
    const Folksonomy* train_;
    FolkRankParams params_;
    FolksonomyGraph graph_;
    GraphWeights base_;
};

// One-query convenience; builds the engine per call.
rank::Ranking folkrank(const Folksonomy& train, std::optional<UserId> u,
                       std::optional<ResourceId> r, uint32_t k, const FolkRankParams& params);

} // namespace folkrec::baselines
