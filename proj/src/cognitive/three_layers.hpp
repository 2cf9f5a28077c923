// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "cognitive/memory.hpp"
#include "rank/ranking.hpp"

namespace folkrec::cognitive {

// Sparse output scores with the algorithm that produced them. Only
// nonzero entries are stored; scores are finite by construction.
struct ScoredTags {
    rank::TagScores scores;
    std::string_view provenance;
};

struct MixParams {
    double beta = 0.5; // in [0, 1]
    uint32_t k = 10;   // >= 1
    double decay = 0.5;

    void validate() const;
};

// o_j = sum_i L_{i,j} * A_i: tags of strongly activated posts win.
ScoredTags score_3l(const UserMemory& memory, std::span<const double> cue);

// o^T_j = nBLL(j) * sum_i L_{i,j} * A_i, where nBLL is the normalized
// power-law recency weight of tag j. The recency factor is constant in i,
// so it is applied outside the sum.
ScoredTags score_3lt(const UserMemory& memory, std::span<const double> cue, double decay);

// Convenience overloads that build the memory and cue from the train
// graph; they throw ColdUser for users without train posts.
ScoredTags score_3l(UserId u, ResourceId r, const Folksonomy& train,
                    const topics::TopicModel& model);
ScoredTags score_3lt(UserId u, ResourceId r, const Folksonomy& train,
                     const topics::TopicModel& model, double decay);

rank::Ranking recommend_3l(UserId u, ResourceId r, const Folksonomy& train,
                           const topics::TopicModel& model, uint32_t k);
rank::Ranking recommend_3lt(UserId u, ResourceId r, const Folksonomy& train,
                            const topics::TopicModel& model, uint32_t k, double decay);

// beta * ||o^T_j|| + (1 - beta) * |||Y_{j,r}||| over the union of the
// user's tags and the resource's tags, both components sum-normalized.
// Degrades gracefully: a cold user leaves the personal component empty
// (pure resource popularity), an untagged resource leaves the imitation
// component empty, and both missing yields an empty list.
rank::Ranking recommend_3lt_mpr(std::optional<UserId> u, std::optional<ResourceId> r,
                                const Folksonomy& train, const topics::TopicModel& model,
                                const MixParams& params);

} // namespace folkrec::cognitive
