// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "baselines/cf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/error.hpp"

namespace folkrec::baselines {

namespace {

double cosine(std::span<const Folksonomy::TagCount> a, double norm_a,
              std::span<const Folksonomy::TagCount> b, double norm_b) {
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    double dot = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else {
            dot += static_cast<double>(a[i].second) * b[j].second;
            ++i;
            ++j;
        }
    }
    return dot / (norm_a * norm_b);
}

double profile_norm(std::span<const Folksonomy::TagCount> counts) {
    double s = 0.0;
    for (const auto& [tag, count] : counts) s += static_cast<double>(count) * count;
    return std::sqrt(s);
}

} // namespace

rank::Ranking cf_user(const Folksonomy& train, std::optional<UserId> u,
                      std::optional<ResourceId> r, const CfConfig& cfg, uint32_t k) {
    if (cfg.neighborhood < 1)
        throw Error(ErrorCode::InvalidArgument, "neighborhood size must be >= 1");
    if (!u || u->value >= train.user_count()) return {};

    const auto own = train.user_tag_counts(*u);
    const double own_norm = profile_norm(own);

    struct Neighbor {
        UserId user;
        double sim;
    };
    std::vector<Neighbor> neighbors;
    neighbors.reserve(train.user_count());
    for (uint32_t v = 0; v < train.user_count(); ++v) {
        if (v == u->value) continue;
        const auto other = train.user_tag_counts(UserId{v});
        if (other.empty()) continue;
        neighbors.push_back({UserId{v}, cosine(own, own_norm, other, profile_norm(other))});
    }
    const size_t take = std::min<size_t>(cfg.neighborhood, neighbors.size());
    std::partial_sort(neighbors.begin(), neighbors.begin() + take, neighbors.end(),
                      [](const Neighbor& a, const Neighbor& b) {
                          if (a.sim != b.sim) return a.sim > b.sim;
                          return a.user < b.user;
                      });
    neighbors.resize(take);

    // Primary route: tags the neighbors put on r itself.
    std::map<TagId, double> scores;
    if (r && r->value < train.resource_count()) {
        for (const auto& n : neighbors) {
            if (n.sim <= 0.0) continue;
            if (const Post* p = train.find_post(n.user, *r)) {
                for (TagId t : p->tags) scores[t] += n.sim;
            }
        }
    }

    // Fallback: no neighbor tagged r; use the neighbors' whole profiles.
    if (scores.empty()) {
        for (const auto& n : neighbors) {
            if (n.sim <= 0.0) continue;
            for (const auto& [tag, count] : train.user_tag_counts(n.user))
                scores[tag] += n.sim * count;
        }
    }

    rank::TagScores flat(scores.begin(), scores.end());
    return rank::top_k(flat, k, train, r);
}

} // namespace folkrec::baselines
