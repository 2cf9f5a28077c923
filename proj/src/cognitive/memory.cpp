// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "cognitive/memory.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace folkrec::cognitive {

UserMemory build_user_memory(UserId u, const Folksonomy& train,
                             const topics::TopicModel& model) {
    if (u.value >= train.user_count())
        throw Error(ErrorCode::ColdUser, "cold user");
    auto post_indices = train.user_post_indices(u);
    if (post_indices.empty())
        throw Error(ErrorCode::ColdUser, "cold user");

    UserMemory m;
    m.user = u;
    m.rows = static_cast<uint32_t>(post_indices.size());
    m.topics = model.num_topics();
    m.semantic.reserve(static_cast<size_t>(m.rows) * m.topics);
    m.row_norm.reserve(m.rows);
    m.row_tags.reserve(m.rows);
    m.timestamps.reserve(m.rows);

    std::vector<TagId> universe;
    for (uint32_t idx : post_indices) {
        const Post& p = train.posts()[idx];
        std::vector<double> row = model.topic_vector(train.vocab().resource_label(p.resource));
        double norm_sq = 0.0;
        for (double v : row) norm_sq += v * v;
        m.row_norm.push_back(std::sqrt(norm_sq));
        m.semantic.insert(m.semantic.end(), row.begin(), row.end());
        m.row_tags.push_back(p.tags);
        m.timestamps.push_back(p.timestamp);
        universe.insert(universe.end(), p.tags.begin(), p.tags.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    m.tag_universe = std::move(universe);
    return m;
}

std::vector<double> activate(std::span<const double> cue, const UserMemory& memory) {
    if (cue.size() != memory.topics)
        throw Error(ErrorCode::InvalidArgument, "cue dimension mismatch");

    double cue_norm_sq = 0.0;
    for (double v : cue) cue_norm_sq += v * v;
    const double cue_norm = std::sqrt(cue_norm_sq);

    std::vector<double> activation(memory.rows, 0.0);
    if (cue_norm == 0.0) return activation;

    for (uint32_t i = 0; i < memory.rows; ++i) {
        const double denom = cue_norm * memory.row_norm[i];
        if (denom == 0.0) continue;
        auto row = memory.row(i);
        double dot = 0.0;
        for (uint32_t k = 0; k < memory.topics; ++k) dot += cue[k] * row[k];
        const double sim = dot / denom;
        activation[i] = sim * sim * sim;
    }
    return activation;
}

RecencyTable recency_table(const UserMemory& memory, double decay) {
    if (decay <= 0.0) throw Error(ErrorCode::InvalidArgument, "decay must be > 0");
    RecencyTable rt;
    rt.user = memory.user;
    rt.decay = decay;
    rt.t_ref = memory.timestamps.back();

    std::vector<std::pair<TagId, int64_t>> last;
    for (uint32_t i = 0; i < memory.rows; ++i) {
        for (TagId t : memory.row_tags[i]) last.emplace_back(t, memory.timestamps[i]);
    }
    std::sort(last.begin(), last.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    });
    // Rows are time-ascending, so the last entry per tag is its last use.
    for (size_t i = 0; i < last.size();) {
        size_t j = i;
        while (j + 1 < last.size() && last[j + 1].first == last[i].first) ++j;
        rt.last_use.push_back(last[j]);
        i = j + 1;
    }
    return rt;
}

RecencyTable recency_table(const Folksonomy& train, UserId u, double decay) {
    if (decay <= 0.0) throw Error(ErrorCode::InvalidArgument, "decay must be > 0");
    auto post_indices = train.user_post_indices(u);
    if (post_indices.empty())
        throw Error(ErrorCode::ColdUser, "cold user");

    RecencyTable rt;
    rt.user = u;
    rt.decay = decay;
    rt.t_ref = train.posts()[post_indices.back()].timestamp;

    std::vector<std::pair<TagId, int64_t>> last;
    for (uint32_t idx : post_indices) {
        const Post& p = train.posts()[idx];
        for (TagId t : p.tags) last.emplace_back(t, p.timestamp);
    }
    std::sort(last.begin(), last.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    });
    for (size_t i = 0; i < last.size();) {
        size_t j = i;
        while (j + 1 < last.size() && last[j + 1].first == last[i].first) ++j;
        rt.last_use.push_back(last[j]);
        i = j + 1;
    }
    return rt;
}

double bll_activation(double delta_seconds, double decay) {
    const double delta = std::max(delta_seconds, 1.0);
    return -decay * std::log(delta);
}

double bll_weight(const RecencyTable& rt, TagId tag) {
    auto it = std::lower_bound(rt.last_use.begin(), rt.last_use.end(), tag,
                               [](const auto& entry, TagId t) { return entry.first < t; });
    if (it == rt.last_use.end() || it->first != tag)
        throw Error(ErrorCode::UnknownEntity, "tag never used by user");
    return bll_activation(static_cast<double>(rt.t_ref - it->second), rt.decay);
}

std::vector<std::pair<TagId, double>> bll_softmax(const RecencyTable& rt) {
    std::vector<std::pair<TagId, double>> weights;
    weights.reserve(rt.last_use.size());
    double total = 0.0;
    for (const auto& [tag, t_last] : rt.last_use) {
        const double delta = std::max(static_cast<double>(rt.t_ref - t_last), 1.0);
        const double w = std::pow(delta, -rt.decay); // == exp(BLL)
        weights.emplace_back(tag, w);
        total += w;
    }
    for (auto& [tag, w] : weights) w /= total;
    return weights;
}

} // namespace folkrec::cognitive
