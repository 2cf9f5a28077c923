// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "cognitive/three_layers.hpp"
#include "rank/ranking.hpp"

namespace folkrec::baselines {

// Unpersonalized most-popular tags over all assignments.
rank::Ranking mp(const Folksonomy& train, uint32_t k);

// Most popular tags of one user / one resource. Unknown or empty-profile
// entities yield an empty list. The optional resource context only feeds
// the shared tie rule.
rank::Ranking mp_u(const Folksonomy& train, std::optional<UserId> u, uint32_t k,
                   std::optional<ResourceId> tie_context = std::nullopt);
rank::Ranking mp_r(const Folksonomy& train, std::optional<ResourceId> r, uint32_t k);

// beta * ||user counts|| + (1 - beta) * ||resource counts||, same
// normalization and tie rules as the cognitive mix.
rank::Ranking mp_u_r(const Folksonomy& train, std::optional<UserId> u,
                     std::optional<ResourceId> r, const cognitive::MixParams& params);

} // namespace folkrec::baselines
