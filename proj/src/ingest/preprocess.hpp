// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "core/ids.hpp"

namespace folkrec::ingest {

struct PreprocessConfig {
    std::unordered_set<std::string> blacklist = {"no-tag", "bibtex-import"};
    bool lowercase = true;
    double user_sample_fraction = 1.0; // in (0, 1]
    uint64_t sample_seed = 0;
    uint32_t min_user_posts_for_eval = 20;

    void validate() const;
};

// Tag cleanup plus user sampling. Tags are lowercased (if configured),
// blacklisted tags removed, posts whose tag set becomes empty dropped.
// Users are sampled with a per-user hash predicate on (label, seed):
// the pass decision depends only on the user, so reapplying the same
// config is a no-op and the retained set is stable across runs.
std::vector<PostRecord> preprocess(std::vector<PostRecord> posts, const PreprocessConfig& cfg);

} // namespace folkrec::ingest
