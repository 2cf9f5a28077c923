// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/folksonomy.hpp"

namespace folkrec::rank {

// Sparse tag scores, sorted by tag id, nonzero entries only. A tag absent
// from the list scores 0.
using TagScores = std::vector<std::pair<TagId, double>>;

struct RankedTag {
    TagId tag;
    double score;
};
using Ranking = std::vector<RankedTag>;

// Throws on NaN or infinity; scores must stay finite end to end.
void check_finite(const TagScores& scores);

// x_j / sum(x); an all-zero or empty vector stays as it is.
TagScores sum_normalize(TagScores scores);

// beta * a + (1 - beta) * b over the union of both supports. Inputs must
// be sorted by tag id.
TagScores mix(double beta, const TagScores& a, const TagScores& b);

// Top-k by score with the shared tie rules: score desc, then raw
// |Y_{j,r}| desc (0 when no resource context), then tag label asc.
// Zero and negative scores are dropped: no-evidence tags never pad a
// recommendation list.
Ranking top_k(const TagScores& scores, uint32_t k, const Folksonomy& train,
              std::optional<ResourceId> resource);

} // namespace folkrec::rank
