// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "ingest/split.hpp"

#include <vector>

namespace folkrec::ingest {

SplitResult split_train_test(const Folksonomy& f, uint32_t min_user_posts_for_eval) {
    const uint32_t n_users = f.user_count();
    std::vector<char> is_test(f.posts().size(), 0);
    std::vector<Post> test;
    std::vector<UserId> eval_users;

    for (uint32_t u = 0; u < n_users; ++u) {
        auto idx = f.user_post_indices(UserId{u});
        if (idx.size() >= 2) {
            // Sorted ascending with stable ties, so the back is the most
            // recent post (latest in input order among equal timestamps).
            is_test[idx.back()] = 1;
            test.push_back(f.posts()[idx.back()]);
        }
        if (idx.size() >= min_user_posts_for_eval)
            eval_users.push_back(UserId{u});
    }

    std::vector<Post> train_posts;
    train_posts.reserve(f.posts().size() - test.size());
    for (size_t i = 0; i < f.posts().size(); ++i) {
        if (!is_test[i]) train_posts.push_back(f.posts()[i]);
    }

    return SplitResult{Folksonomy::from_posts(f.vocab_ptr(), std::move(train_posts)),
                       std::move(test), std::move(eval_users)};
}

} // namespace folkrec::ingest
