// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "ingest/preprocess.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "util/rng.hpp"
#include "util/text.hpp"

namespace folkrec::ingest {

void PreprocessConfig::validate() const {
    if (!(user_sample_fraction > 0.0 && user_sample_fraction <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "user_sample_fraction must be in (0, 1]");
    if (min_user_posts_for_eval < 1)
        throw Error(ErrorCode::InvalidArgument, "min_user_posts_for_eval must be >= 1");
}

std::vector<PostRecord> preprocess(std::vector<PostRecord> posts, const PreprocessConfig& cfg) {
    cfg.validate();

    // Pass 1: tag cleanup.
    std::vector<PostRecord> cleaned;
    cleaned.reserve(posts.size());
    for (auto& post : posts) {
        std::vector<std::string> tags;
        tags.reserve(post.tags.size());
        for (auto& tag : post.tags) {
            std::string t = cfg.lowercase ? to_lower(tag) : std::move(tag);
            if (!cfg.blacklist.contains(t)) tags.push_back(std::move(t));
        }
        std::sort(tags.begin(), tags.end());
        tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
        if (tags.empty()) continue;
        post.tags = std::move(tags);
        cleaned.push_back(std::move(post));
    }

    // Pass 2: user sampling. A user passes iff hash(label, seed) maps below
    // the fraction threshold, which makes the sample reproducible and the
    // whole preprocess idempotent.
    if (cfg.user_sample_fraction < 1.0) {
        const double threshold = cfg.user_sample_fraction;
        std::erase_if(cleaned, [&](const PostRecord& p) {
            double h = static_cast<double>(seeded_hash(p.user, cfg.sample_seed) >> 11) * 0x1.0p-53;
            return h >= threshold;
        });
    }

    return cleaned;
}

} // namespace folkrec::ingest
