// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "recommend.hpp"

#include <array>

#include "core/error.hpp"

namespace folkrec {

namespace {

constexpr std::array<std::pair<std::string_view, Algorithm>, 11> kNames = {{
    {"mp", Algorithm::Mp},
    {"mp_u", Algorithm::MpU},
    {"mp_r", Algorithm::MpR},
    {"mp_u_r", Algorithm::MpUR},
    {"cf", Algorithm::Cf},
    {"folkrank", Algorithm::FolkRank},
    {"girptm", Algorithm::Girptm},
    {"bll_c", Algorithm::BllC},
    {"3l", Algorithm::ThreeL},
    {"3lt", Algorithm::ThreeLt},
    {"3lt_mpr", Algorithm::ThreeLtMpr},
}};

constexpr std::array<Algorithm, 11> kAll = {
    Algorithm::Mp,     Algorithm::MpU,    Algorithm::MpR,  Algorithm::MpUR,
    Algorithm::Cf,     Algorithm::FolkRank, Algorithm::Girptm, Algorithm::BllC,
    Algorithm::ThreeL, Algorithm::ThreeLt, Algorithm::ThreeLtMpr,
};

} // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const auto& [n, alg] : kNames)
        if (n == name) return alg;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm alg) {
    for (const auto& [n, a] : kNames)
        if (a == alg) return n;
    return "?";
}

bool needs_topic_model(Algorithm alg) {
    return alg == Algorithm::ThreeL || alg == Algorithm::ThreeLt ||
           alg == Algorithm::ThreeLtMpr;
}

std::span<const Algorithm> all_algorithms() { return kAll; }

Recommender::Recommender(const Folksonomy& train, const topics::TopicModel* model,
                         RecommendParams params)
    : train_(&train), model_(model), params_(params) {
    cognitive::MixParams{params_.beta, params_.k, params_.decay}.validate();
}

void Recommender::prepare(std::span<const Algorithm> algorithms) {
    for (Algorithm alg : algorithms) {
        if (alg == Algorithm::FolkRank && !folkrank_)
            folkrank_ = std::make_unique<baselines::FolkRankEngine>(*train_, params_.folkrank);
    }
}

const baselines::FolkRankEngine& Recommender::folkrank_engine() const {
    if (!folkrank_)
        folkrank_ = std::make_unique<baselines::FolkRankEngine>(*train_, params_.folkrank);
    return *folkrank_;
}

rank::Ranking Recommender::recommend(Algorithm alg, std::optional<UserId> u,
                                     std::optional<ResourceId> r) const {
    const cognitive::MixParams mix{params_.beta, params_.k, params_.decay};
    switch (alg) {
    case Algorithm::Mp:
        return baselines::mp(*train_, params_.k);
    case Algorithm::MpU:
        return baselines::mp_u(*train_, u, params_.k, r);
    case Algorithm::MpR:
        return baselines::mp_r(*train_, r, params_.k);
    case Algorithm::MpUR:
        return baselines::mp_u_r(*train_, u, r, mix);
    case Algorithm::Cf:
        return baselines::cf_user(*train_, u, r, baselines::CfConfig{params_.cf_neighbors},
                                  params_.k);
    case Algorithm::FolkRank:
        return folkrank_engine().recommend(u, r, params_.k);
    case Algorithm::Girptm:
        return baselines::girptm(*train_, u, r, mix, params_.girptm_mu);
    case Algorithm::BllC:
        return baselines::bll_c(*train_, u, r, mix, params_.decay);
    case Algorithm::ThreeL: {
        if (!model_) throw Error(ErrorCode::BadState, "topic model required");
        if (!u) throw Error(ErrorCode::ColdUser, "cold user");
        if (!r) throw Error(ErrorCode::UnknownEntity, "unknown entity");
        return cognitive::recommend_3l(*u, *r, *train_, *model_, params_.k);
    }
    case Algorithm::ThreeLt: {
        if (!model_) throw Error(ErrorCode::BadState, "topic model required");
        if (!u) throw Error(ErrorCode::ColdUser, "cold user");
        if (!r) throw Error(ErrorCode::UnknownEntity, "unknown entity");
        return cognitive::recommend_3lt(*u, *r, *train_, *model_, params_.k, params_.decay);
    }
    case Algorithm::ThreeLtMpr:
        if (!model_) throw Error(ErrorCode::BadState, "topic model required");
        return cognitive::recommend_3lt_mpr(u, r, *train_, *model_, mix);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

} // namespace folkrec
