// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "core/ids.hpp"
#include "core/interner.hpp"

namespace folkrec {

struct FolksonomyStats {
    uint64_t posts = 0;       // |P|
    uint64_t users = 0;       // |U|
    uint64_t resources = 0;   // |R|
    uint64_t tags = 0;        // |T|
    uint64_t assignments = 0; // |TAS|
};

// Immutable training graph: the post list plus the count indices every
// recommender reads. Exactly one post per (user, resource) pair; duplicate
// bookmarks are merged at build time, the latest timestamp wins.
class Folksonomy {
public:
    using TagCount = std::pair<TagId, uint32_t>;

    // Interns labels and builds all indices. Duplicate (user, resource)
    // records are merged before interning, so the vocabulary holds exactly
    // the entities present in the surviving posts.
    static Folksonomy build(std::span<const PostRecord> records);

    // Rebuild the derived indices over a post subset that reuses an existing
    // vocabulary (the train side of a split). Posts must already be unique
    // per (user, resource).
    static Folksonomy from_posts(std::shared_ptr<const Vocabulary> vocab,
                                 std::vector<Post> posts);

    const Vocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }

    const std::vector<Post>& posts() const { return posts_; }
    const FolksonomyStats& stats() const { return stats_; }

    // Post indices of one user, sorted by timestamp ascending (stable in
    // input order on ties). Empty for users without posts.
    std::span<const uint32_t> user_post_indices(UserId u) const;

    // |Y_{j,r}|: number of posts on r whose tag set contains j.
    uint32_t resource_tag_count(TagId tag, ResourceId resource) const;

    // Per-entity (tag, count) lists sorted by tag id.
    std::span<const TagCount> resource_tag_counts(ResourceId r) const;
    std::span<const TagCount> user_tag_counts(UserId u) const;

    uint64_t global_tag_count(TagId t) const;
    const std::vector<uint64_t>& global_tag_counts() const { return global_tag_counts_; }

    // The unique post of (u, r), or nullptr.
    const Post* find_post(UserId u, ResourceId r) const;

    uint32_t user_count() const { return vocab_->users().size(); }
    uint32_t resource_count() const { return vocab_->resources().size(); }
    uint32_t tag_count() const { return vocab_->tags().size(); }

private:
    Folksonomy() = default;
    void build_indices();
    void check_user(UserId u) const;
    void check_resource(ResourceId r) const;
    void check_tag(TagId t) const;

    std::shared_ptr<const Vocabulary> vocab_;
    std::vector<Post> posts_;
    std::vector<std::vector<uint32_t>> user_posts_;       // per user, time asc
    std::vector<std::vector<TagCount>> resource_tag_counts_;
    std::vector<std::vector<TagCount>> user_tag_counts_;
    std::vector<uint64_t> global_tag_counts_;
    FolksonomyStats stats_;
};

} // namespace folkrec
