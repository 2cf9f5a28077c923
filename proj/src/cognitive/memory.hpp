// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/folksonomy.hpp"
#include "topics/lda.hpp"

namespace folkrec::cognitive {

// A user's episodic store: one row per train post, time ascending. The
// semantic side holds the post resource's topic distribution, the lexical
// side the post's tags.
struct UserMemory {
    UserId user;
    uint32_t rows = 0;   // l
    uint32_t topics = 0; // n
    std::vector<double> semantic;          // rows x topics, row-major (M_S)
    std::vector<double> row_norm;          // L2 norm per semantic row
    std::vector<std::vector<TagId>> row_tags; // M_L, sparse rows, tags sorted
    std::vector<int64_t> timestamps;       // non-decreasing
    std::vector<TagId> tag_universe;       // sorted distinct tags (size m)

    std::span<const double> row(uint32_t i) const {
        return {semantic.data() + static_cast<size_t>(i) * topics, topics};
    }
};

// Throws ColdUser when u has no train posts.
UserMemory build_user_memory(UserId u, const Folksonomy& train,
                             const topics::TopicModel& model);

// A_i = cos(cue, M_S row i)^3; a zero-norm pair has cosine 0. Requires
// cue.size() == memory.topics.
std::vector<double> activate(std::span<const double> cue, const UserMemory& memory);

// Per-tag last-use timestamps against the user's most recent post.
struct RecencyTable {
    UserId user;
    int64_t t_ref = 0;
    std::vector<std::pair<TagId, int64_t>> last_use; // sorted by tag id
    double decay = 0.5;                              // d > 0
};

RecencyTable recency_table(const UserMemory& memory, double decay);
RecencyTable recency_table(const Folksonomy& train, UserId u, double decay);

// BLL at elapsed time delta (seconds): -d * ln(max(delta, 1)). The clamp
// keeps the log finite when the tag appeared in the reference post itself.
double bll_activation(double delta_seconds, double decay);

// Throws UnknownEntity for a tag the user never used.
double bll_weight(const RecencyTable& rt, TagId tag);

// exp(BLL(j)) = delta_j^(-d), normalized to sum 1 over the user's tags:
// the retrieval-probability transform that keeps the recency weights
// positive while preserving the BLL ordering.
std::vector<std::pair<TagId, double>> bll_softmax(const RecencyTable& rt);

} // namespace folkrec::cognitive
