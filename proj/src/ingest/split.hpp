// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/folksonomy.hpp"
#include "ingest/preprocess.hpp"

namespace folkrec::ingest {

// Chronological leave-most-recent-post-out split. Every user with two or
// more posts donates exactly their latest post to the test set (ties on
// the max timestamp go to the post latest in input order); single-post
// users keep their post in train. eval_users lists the users whose
// pre-split post count reached min_user_posts_for_eval; accuracy is
// reported only for them (post-filtering).
struct SplitResult {
    Folksonomy train;
    std::vector<Post> test;            // one per multi-post user, user id ascending
    std::vector<UserId> eval_users;    // sorted ascending
};

SplitResult split_train_test(const Folksonomy& f, uint32_t min_user_posts_for_eval);

inline SplitResult split_train_test(const Folksonomy& f, const PreprocessConfig& cfg) {
    return split_train_test(f, cfg.min_user_posts_for_eval);
}

} // namespace folkrec::ingest
