// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "baselines/graph.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace folkrec::baselines {

FolksonomyGraph::FolksonomyGraph(const Folksonomy& train)
    : n_users_(train.user_count()),
      n_resources_(train.resource_count()),
      n_tags_(train.tag_count()) {
    const size_t n = static_cast<size_t>(n_users_) + n_resources_ + n_tags_;

    // Directed edge list with both directions; weights accumulate over
    // posts before the CSR is frozen.
    struct Edge {
        uint32_t from;
        uint32_t to;
        double weight;
    };
    std::vector<Edge> edges;
    edges.reserve(train.posts().size() * 6);

    auto add = [&](size_t a, size_t b, double w) {
        edges.push_back({static_cast<uint32_t>(a), static_cast<uint32_t>(b), w});
        edges.push_back({static_cast<uint32_t>(b), static_cast<uint32_t>(a), w});
    };

    for (const Post& p : train.posts()) {
        const size_t un = user_node(p.user);
        const size_t rn = resource_node(p.resource);
        add(un, rn, 1.0);
        for (TagId t : p.tags) {
            const size_t tn = tag_node(t);
            add(un, tn, 1.0);
            add(rn, tn, 1.0);
        }
    }

    // Merge parallel edges (repeat co-occurrences) by summing weights.
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.from < b.from || (a.from == b.from && a.to < b.to);
    });

    offsets_.assign(n + 1, 0);
    for (size_t i = 0; i < edges.size();) {
        size_t j = i;
        double w = 0.0;
        while (j < edges.size() && edges[j].from == edges[i].from && edges[j].to == edges[i].to) {
            w += edges[j].weight;
            ++j;
        }
        targets_.push_back(edges[i].to);
        weights_.push_back(w);
        ++offsets_[edges[i].from + 1];
        i = j;
    }
    for (size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

    out_weight_.assign(n, 0.0);
    for (size_t v = 0; v < n; ++v) {
        double s = 0.0;
        for (size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) s += weights_[e];
        out_weight_[v] = s;
    }
}

GraphWeights adapted_pagerank(const FolksonomyGraph& graph, std::span<const double> preference,
                              double damping, double tol, uint32_t max_iter) {
    const size_t n = graph.node_count();
    if (preference.size() != n)
        throw Error(ErrorCode::InvalidArgument, "preference size must match node count");
    if (!(damping > 0.0 && damping < 1.0))
        throw Error(ErrorCode::InvalidArgument, "damping must be in (0, 1)");

    std::vector<double> pref(preference.begin(), preference.end());
    double pref_sum = 0.0;
    for (double v : pref) {
        if (v < 0.0) throw Error(ErrorCode::InvalidArgument, "preference must be non-negative");
        pref_sum += v;
    }
    if (pref_sum > 0.0) {
        for (double& v : pref) v /= pref_sum;
    } else {
        std::fill(pref.begin(), pref.end(), 1.0 / static_cast<double>(n));
    }

    const auto offsets = graph.offsets();
    const auto targets = graph.targets();
    const auto weights = graph.edge_weights();
    const auto out = graph.out_weights();

    GraphWeights result;
    result.weights = pref;
    std::vector<double> next(n, 0.0);

    for (uint32_t iter = 0; iter < max_iter; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        double dangling = 0.0;
        for (size_t v = 0; v < n; ++v) {
            const double w = result.weights[v];
            if (out[v] == 0.0) {
                dangling += w;
                continue;
            }
            const double share = w / out[v];
            for (size_t e = offsets[v]; e < offsets[v + 1]; ++e)
                next[targets[e]] += share * weights[e];
        }

        double residual = 0.0;
        double mass = 0.0;
        for (size_t v = 0; v < n; ++v) {
            const double value = damping * (next[v] + dangling * pref[v]) +
                                 (1.0 - damping) * pref[v];
            residual += std::abs(value - result.weights[v]);
            mass += value;
            next[v] = value;
        }
        result.weights.swap(next);
        result.iterations = iter + 1;
        result.residual = residual;
        result.max_mass_drift = std::max(result.max_mass_drift, std::abs(mass - 1.0));
        if (residual < tol) break;
    }
    return result;
}

FolkRankEngine::FolkRankEngine(const Folksonomy& train, const FolkRankParams& params)
    : train_(&train), params_(params), graph_(train) {
    std::vector<double> uniform(graph_.node_count(), 1.0);
    base_ = adapted_pagerank(graph_, uniform, params_.damping, params_.tol, params_.max_iter);
}

rank::Ranking FolkRankEngine::recommend(std::optional<UserId> u, std::optional<ResourceId> r,
                                        uint32_t k) const {
    std::vector<double> pref(graph_.node_count(), 1.0);
    if (u && u->value < graph_.user_nodes())
        pref[graph_.user_node(*u)] += static_cast<double>(graph_.user_nodes());
    if (r && r->value < graph_.resource_nodes())
        pref[graph_.resource_node(*r)] += static_cast<double>(graph_.resource_nodes());

    GraphWeights boosted =
        adapted_pagerank(graph_, pref, params_.damping, params_.tol, params_.max_iter);

    rank::TagScores diff;
    for (uint32_t t = 0; t < graph_.tag_nodes(); ++t) {
        const size_t node = graph_.tag_node(TagId{t});
        const double d = boosted.weights[node] - base_.weights[node];
        if (d > 0.0) diff.emplace_back(TagId{t}, d);
    }
    return rank::top_k(diff, k, *train_, r);
}

rank::Ranking folkrank(const Folksonomy& train, std::optional<UserId> u,
                       std::optional<ResourceId> r, uint32_t k, const FolkRankParams& params) {
    return FolkRankEngine(train, params).recommend(u, r, k);
}

} // namespace folkrec::baselines
