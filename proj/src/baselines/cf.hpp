// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rank/ranking.hpp"

namespace folkrec::baselines {

struct CfConfig {
    uint32_t neighborhood = 20; // >= 1
};

// User-based collaborative filtering over user-tag count vectors.
// Neighbors are the top-N users by cosine similarity (excluding u, ties
// by user index). Candidate tags are the tags neighbors assigned to r,
// scored by summed neighbor similarity; when no neighbor tagged r the
// fallback scores every neighbor tag by similarity-weighted frequency.
rank::Ranking cf_user(const Folksonomy& train, std::optional<UserId> u,
                      std::optional<ResourceId> r, const CfConfig& cfg, uint32_t k);

} // namespace folkrec::baselines
