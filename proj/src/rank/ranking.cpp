// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "rank/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace folkrec::rank {

void check_finite(const TagScores& scores) {
    for (const auto& [tag, score] : scores) {
        (void)tag;
        if (!std::isfinite(score))
            throw Error(ErrorCode::BadState, "non-finite tag score");
    }
}

TagScores sum_normalize(TagScores scores) {
    double total = 0.0;
    for (const auto& [tag, score] : scores) total += score;
    if (total > 0.0) {
        for (auto& [tag, score] : scores) score /= total;
    }
    return scores;
}

TagScores mix(double beta, const TagScores& a, const TagScores& b) {
    TagScores out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, beta * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, (1.0 - beta) * b[j].second);
            ++j;
        } else {
            out.emplace_back(a[i].first, beta * a[i].second + (1.0 - beta) * b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Ranking top_k(const TagScores& scores, uint32_t k, const Folksonomy& train,
              std::optional<ResourceId> resource) {
    check_finite(scores);

    struct Entry {
        TagId tag;
        double score;
        uint32_t y_count;
    };
    std::vector<Entry> entries;
    entries.reserve(scores.size());
    for (const auto& [tag, score] : scores) {
        if (score <= 0.0) continue;
        uint32_t y = resource ? train.resource_tag_count(tag, *resource) : 0;
        entries.push_back({tag, score, y});
    }

    const Vocabulary& vocab = train.vocab();
    auto better = [&](const Entry& a, const Entry& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.y_count != b.y_count) return a.y_count > b.y_count;
        return vocab.tag_label(a.tag) < vocab.tag_label(b.tag);
    };

    const size_t take = std::min<size_t>(k, entries.size());
    std::partial_sort(entries.begin(), entries.begin() + take, entries.end(), better);

    Ranking out;
    out.reserve(take);
    for (size_t i = 0; i < take; ++i) out.push_back({entries[i].tag, entries[i].score});
    return out;
}

} // namespace folkrec::rank
