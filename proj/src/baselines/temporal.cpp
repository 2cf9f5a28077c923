// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "baselines/temporal.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace folkrec::baselines {

rank::TagScores girp_user_scores(const Folksonomy& train, UserId u, double mu) {
    if (mu < 0.0) throw Error(ErrorCode::InvalidArgument, "mu must be >= 0");
    if (u.value >= train.user_count()) return {};
    auto post_indices = train.user_post_indices(u);
    if (post_indices.empty()) return {};

    const int64_t t_ref = train.posts()[post_indices.back()].timestamp;
    rank::TagScores scores;
    for (uint32_t idx : post_indices) {
        const Post& p = train.posts()[idx];
        const double w = std::exp(-mu * static_cast<double>(t_ref - p.timestamp));
        for (TagId t : p.tags) scores.emplace_back(t, w);
    }
    std::sort(scores.begin(), scores.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rank::TagScores merged;
    for (size_t i = 0; i < scores.size();) {
        size_t j = i;
        double sum = 0.0;
        while (j < scores.size() && scores[j].first == scores[i].first) sum += scores[j++].second;
        merged.emplace_back(scores[i].first, sum);
        i = j;
    }
    return merged;
}

rank::TagScores bll_user_scores(const Folksonomy& train, UserId u, double decay) {
    if (u.value >= train.user_count()) return {};
    if (train.user_post_indices(u).empty()) return {};
    return cognitive::bll_softmax(cognitive::recency_table(train, u, decay));
}

namespace {

rank::TagScores resource_counts(const Folksonomy& train, std::optional<ResourceId> r) {
    rank::TagScores scores;
    if (r && r->value < train.resource_count()) {
        for (const auto& [tag, count] : train.resource_tag_counts(*r))
            scores.emplace_back(tag, static_cast<double>(count));
    }
    return scores;
}

} // namespace

rank::Ranking girptm(const Folksonomy& train, std::optional<UserId> u,
                     std::optional<ResourceId> r, const cognitive::MixParams& params,
                     double mu) {
    params.validate();
    rank::TagScores user_scores;
    if (u && u->value < train.user_count()) user_scores = girp_user_scores(train, *u, mu);

    rank::TagScores mixed = rank::mix(params.beta, rank::sum_normalize(std::move(user_scores)),
                                      rank::sum_normalize(resource_counts(train, r)));
    return rank::top_k(mixed, params.k, train, r);
}

rank::Ranking bll_c(const Folksonomy& train, std::optional<UserId> u,
                    std::optional<ResourceId> r, const cognitive::MixParams& params,
                    double decay) {
    params.validate();
    rank::TagScores user_scores;
    if (u && u->value < train.user_count()) user_scores = bll_user_scores(train, *u, decay);

    rank::TagScores mixed = rank::mix(params.beta, rank::sum_normalize(std::move(user_scores)),
                                      rank::sum_normalize(resource_counts(train, r)));
    return rank::top_k(mixed, params.k, train, r);
}

} // namespace folkrec::baselines
