// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "cognitive/three_layers.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace folkrec::cognitive {

void MixParams::validate() const {
    if (beta < 0.0 || beta > 1.0)
        throw Error(ErrorCode::InvalidArgument, "beta must be in [0, 1]");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (decay <= 0.0) throw Error(ErrorCode::InvalidArgument, "decay must be > 0");
}

namespace {

// Accumulates sum_i L_{i,j} * A_i into a sparse per-tag map.
rank::TagScores lexical_sums(const UserMemory& memory, const std::vector<double>& activation) {
    rank::TagScores sums;
    sums.reserve(memory.tag_universe.size());
    for (TagId t : memory.tag_universe) sums.emplace_back(t, 0.0);

    auto slot = [&](TagId t) {
        auto it = std::lower_bound(sums.begin(), sums.end(), t,
                                   [](const auto& e, TagId tag) { return e.first < tag; });
        return it;
    };
    for (uint32_t i = 0; i < memory.rows; ++i) {
        if (activation[i] == 0.0) continue;
        for (TagId t : memory.row_tags[i]) slot(t)->second += activation[i];
    }
    std::erase_if(sums, [](const auto& e) { return e.second == 0.0; });
    return sums;
}

} // namespace

ScoredTags score_3l(const UserMemory& memory, std::span<const double> cue) {
    auto activation = activate(cue, memory);
    ScoredTags out{lexical_sums(memory, activation), "3L"};
    rank::check_finite(out.scores);
    return out;
}

ScoredTags score_3lt(const UserMemory& memory, std::span<const double> cue, double decay) {
    auto activation = activate(cue, memory);
    rank::TagScores sums = lexical_sums(memory, activation);

    const auto weights = bll_softmax(recency_table(memory, decay));
    // Both lists are sorted by tag id; sums' support is a subset of the
    // user's tag universe, which is exactly weights' support.
    size_t w = 0;
    for (auto& [tag, score] : sums) {
        while (weights[w].first < tag) ++w;
        score *= weights[w].second;
    }
    std::erase_if(sums, [](const auto& e) { return e.second == 0.0; });

    ScoredTags out{std::move(sums), "3LT"};
    rank::check_finite(out.scores);
    return out;
}

ScoredTags score_3l(UserId u, ResourceId r, const Folksonomy& train,
                    const topics::TopicModel& model) {
    UserMemory memory = build_user_memory(u, train, model);
    auto cue = model.topic_vector(train.vocab().resource_label(r));
    return score_3l(memory, cue);
}

ScoredTags score_3lt(UserId u, ResourceId r, const Folksonomy& train,
                     const topics::TopicModel& model, double decay) {
    UserMemory memory = build_user_memory(u, train, model);
    auto cue = model.topic_vector(train.vocab().resource_label(r));
    return score_3lt(memory, cue, decay);
}

rank::Ranking recommend_3l(UserId u, ResourceId r, const Folksonomy& train,
                           const topics::TopicModel& model, uint32_t k) {
    return rank::top_k(score_3l(u, r, train, model).scores, k, train, r);
}

rank::Ranking recommend_3lt(UserId u, ResourceId r, const Folksonomy& train,
                            const topics::TopicModel& model, uint32_t k, double decay) {
    return rank::top_k(score_3lt(u, r, train, model, decay).scores, k, train, r);
}

rank::Ranking recommend_3lt_mpr(std::optional<UserId> u, std::optional<ResourceId> r,
                                const Folksonomy& train, const topics::TopicModel& model,
                                const MixParams& params) {
    params.validate();

    rank::TagScores personal;
    if (u && u->value < train.user_count() && !train.user_post_indices(*u).empty()) {
        std::vector<double> cue = r ? model.topic_vector(train.vocab().resource_label(*r))
                                    : std::vector<double>(model.num_topics(),
                                                          1.0 / model.num_topics());
        personal = score_3lt(build_user_memory(*u, train, model), cue, params.decay).scores;
    }

    rank::TagScores imitation;
    if (r && r->value < train.resource_count()) {
        for (const auto& [tag, count] : train.resource_tag_counts(*r))
            imitation.emplace_back(tag, static_cast<double>(count));
    }

    rank::TagScores mixed = rank::mix(params.beta, rank::sum_normalize(std::move(personal)),
                                      rank::sum_normalize(std::move(imitation)));
    return rank::top_k(mixed, params.k, train, r);
}

} // namespace folkrec::cognitive
