// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "cognitive/memory.hpp"
#include "cognitive/three_layers.hpp"
#include "rank/ranking.hpp"

namespace folkrec::baselines {

// Exponential recency-weighted tag frequency of one user:
// g(j) = sum over the user's posts containing j of exp(-mu * (t_ref - t)).
// mu = 0 degenerates to plain tag frequency. Empty for cold users.
rank::TagScores girp_user_scores(const Folksonomy& train, UserId u, double mu);

// Power-law recency weights of one user's tags (normalized exp(BLL), last
// use anchored). Empty for cold users.
rank::TagScores bll_user_scores(const Folksonomy& train, UserId u, double decay);

// beta * ||g|| + (1 - beta) * ||Y_r||; exponential-decay counterpart of
// BLL+C, mixed and tie-broken exactly like the cognitive recommenders.
rank::Ranking girptm(const Folksonomy& train, std::optional<UserId> u,
                     std::optional<ResourceId> r, const cognitive::MixParams& params,
                     double mu);

// beta * ||BLL|| + (1 - beta) * ||Y_r||.
rank::Ranking bll_c(const Folksonomy& train, std::optional<UserId> u,
                    std::optional<ResourceId> r, const cognitive::MixParams& params,
                    double decay);

} // namespace folkrec::baselines
