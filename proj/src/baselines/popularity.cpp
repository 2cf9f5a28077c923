// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "baselines/popularity.hpp"

namespace folkrec::baselines {

namespace {

rank::TagScores counts_as_scores(std::span<const Folksonomy::TagCount> counts) {
    rank::TagScores scores;
    scores.reserve(counts.size());
    for (const auto& [tag, count] : counts)
        scores.emplace_back(tag, static_cast<double>(count));
    return scores;
}

} // namespace

rank::Ranking mp(const Folksonomy& train, uint32_t k) {
    rank::TagScores scores;
    const auto& global = train.global_tag_counts();
    scores.reserve(global.size());
    for (uint32_t t = 0; t < global.size(); ++t) {
        if (global[t] > 0) scores.emplace_back(TagId{t}, static_cast<double>(global[t]));
    }
    return rank::top_k(scores, k, train, std::nullopt);
}

rank::Ranking mp_u(const Folksonomy& train, std::optional<UserId> u, uint32_t k,
                   std::optional<ResourceId> tie_context) {
    if (!u || u->value >= train.user_count()) return {};
    return rank::top_k(counts_as_scores(train.user_tag_counts(*u)), k, train, tie_context);
}

rank::Ranking mp_r(const Folksonomy& train, std::optional<ResourceId> r, uint32_t k) {
    if (!r || r->value >= train.resource_count()) return {};
    return rank::top_k(counts_as_scores(train.resource_tag_counts(*r)), k, train, r);
}

rank::Ranking mp_u_r(const Folksonomy& train, std::optional<UserId> u,
                     std::optional<ResourceId> r, const cognitive::MixParams& params) {
    params.validate();
    rank::TagScores user_scores;
    if (u && u->value < train.user_count())
        user_scores = counts_as_scores(train.user_tag_counts(*u));
    rank::TagScores resource_scores;
    if (r && r->value < train.resource_count())
        resource_scores = counts_as_scores(train.resource_tag_counts(*r));

    rank::TagScores mixed = rank::mix(params.beta, rank::sum_normalize(std::move(user_scores)),
                                      rank::sum_normalize(std::move(resource_scores)));
    return rank::top_k(mixed, params.k, train, r);
}

} // namespace folkrec::baselines
