// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "core/folksonomy.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "core/error.hpp"

namespace folkrec {

namespace {

std::vector<TagId> intern_tags(Vocabulary& vocab, const std::vector<std::string>& tags) {
    std::vector<TagId> out;
    out.reserve(tags.size());
    for (const auto& t : tags) out.push_back(TagId{vocab.tags().intern(t)});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

Folksonomy Folksonomy::build(std::span<const PostRecord> records) {
    if (records.empty()) throw Error(ErrorCode::EmptyInput, "empty folksonomy");

    for (const auto& rec : records) {
        if (rec.tags.empty())
            throw Error(ErrorCode::InvalidArgument, "post with empty tag set");
        if (rec.timestamp < 0)
            throw Error(ErrorCode::InvalidArgument, "negative timestamp");
    }

    // Merge duplicate (user, resource) pairs before interning: the latest
    // timestamp wins, ties go to the later record in input order. The
    // surviving post keeps the position of the pair's first occurrence.
    std::unordered_map<std::string, size_t> slot; // "user\0resource" -> index into `order`
    std::vector<size_t> order;                    // winning record index per pair
    slot.reserve(records.size());
    order.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        std::string key = records[i].user;
        key.push_back('\0');
        key += records[i].resource;
        auto [it, inserted] = slot.emplace(std::move(key), order.size());
        if (inserted) {
            order.push_back(i);
        } else if (records[i].timestamp >= records[order[it->second]].timestamp) {
            // Winner keeps the position of the pair's first occurrence.
            order[it->second] = i;
        }
    }

    Folksonomy f;
    auto vocab = std::make_shared<Vocabulary>();
    f.posts_.reserve(order.size());
    for (size_t idx : order) {
        const PostRecord& rec = records[idx];
        Post p;
        p.user = UserId{vocab->users().intern(rec.user)};
        p.resource = ResourceId{vocab->resources().intern(rec.resource)};
        p.tags = intern_tags(*vocab, rec.tags);
        p.timestamp = rec.timestamp;
        f.posts_.push_back(std::move(p));
    }
    f.vocab_ = std::move(vocab);
    f.build_indices();
    return f;
}

Folksonomy Folksonomy::from_posts(std::shared_ptr<const Vocabulary> vocab,
                                  std::vector<Post> posts) {
    if (posts.empty()) throw Error(ErrorCode::EmptyInput, "empty folksonomy");
    Folksonomy f;
    f.vocab_ = std::move(vocab);
    f.posts_ = std::move(posts);
    f.build_indices();
    return f;
}

void Folksonomy::build_indices() {
    const uint32_t n_users = vocab_->users().size();
    const uint32_t n_resources = vocab_->resources().size();
    const uint32_t n_tags = vocab_->tags().size();

    user_posts_.assign(n_users, {});
    global_tag_counts_.assign(n_tags, 0);

    std::vector<std::vector<TagId>> by_resource(n_resources);
    std::vector<std::vector<TagId>> by_user(n_users);
    std::unordered_set<uint32_t> seen_users, seen_resources, seen_tags;

    uint64_t assignments = 0;
    for (uint32_t i = 0; i < posts_.size(); ++i) {
        const Post& p = posts_[i];
        assert(!p.tags.empty());
        user_posts_[p.user.value].push_back(i);
        seen_users.insert(p.user.value);
        seen_resources.insert(p.resource.value);
        for (TagId t : p.tags) {
            by_resource[p.resource.value].push_back(t);
            by_user[p.user.value].push_back(t);
            ++global_tag_counts_[t.value];
            seen_tags.insert(t.value);
        }
        assignments += p.tags.size();
    }

    // Stable sort keeps input order among equal timestamps, which is the
    // tie rule the train/test split relies on.
    for (auto& idx : user_posts_) {
        std::stable_sort(idx.begin(), idx.end(), [this](uint32_t a, uint32_t b) {
            return posts_[a].timestamp < posts_[b].timestamp;
        });
    }

    auto compress = [](std::vector<TagId>& tags) {
        std::sort(tags.begin(), tags.end());
        std::vector<TagCount> counts;
        for (size_t i = 0; i < tags.size();) {
            size_t j = i;
            while (j < tags.size() && tags[j] == tags[i]) ++j;
            counts.emplace_back(tags[i], static_cast<uint32_t>(j - i));
            i = j;
        }
        return counts;
    };

    resource_tag_counts_.resize(n_resources);
    for (uint32_t r = 0; r < n_resources; ++r)
        resource_tag_counts_[r] = compress(by_resource[r]);
    user_tag_counts_.resize(n_users);
    for (uint32_t u = 0; u < n_users; ++u)
        user_tag_counts_[u] = compress(by_user[u]);

    stats_.posts = posts_.size();
    stats_.users = seen_users.size();
    stats_.resources = seen_resources.size();
    stats_.tags = seen_tags.size();
    stats_.assignments = assignments;
}

void Folksonomy::check_user(UserId u) const {
    if (u.value >= vocab_->users().size())
        throw Error(ErrorCode::UnknownEntity, "unknown entity");
}

void Folksonomy::check_resource(ResourceId r) const {
    if (r.value >= vocab_->resources().size())
        throw Error(ErrorCode::UnknownEntity, "unknown entity");
}

void Folksonomy::check_tag(TagId t) const {
    if (t.value >= vocab_->tags().size())
        throw Error(ErrorCode::UnknownEntity, "unknown entity");
}

std::span<const uint32_t> Folksonomy::user_post_indices(UserId u) const {
    check_user(u);
    return user_posts_[u.value];
}

uint32_t Folksonomy::resource_tag_count(TagId tag, ResourceId resource) const {
    check_tag(tag);
    check_resource(resource);
    const auto& counts = resource_tag_counts_[resource.value];
    auto it = std::lower_bound(counts.begin(), counts.end(), tag,
                               [](const TagCount& tc, TagId t) { return tc.first < t; });
    if (it == counts.end() || it->first != tag) return 0;
    return it->second;
}

std::span<const Folksonomy::TagCount> Folksonomy::resource_tag_counts(ResourceId r) const {
    check_resource(r);
    return resource_tag_counts_[r.value];
}

std::span<const Folksonomy::TagCount> Folksonomy::user_tag_counts(UserId u) const {
    check_user(u);
    return user_tag_counts_[u.value];
}

uint64_t Folksonomy::global_tag_count(TagId t) const {
    check_tag(t);
    return global_tag_counts_[t.value];
}

const Post* Folksonomy::find_post(UserId u, ResourceId r) const {
    check_user(u);
    check_resource(r);
    for (uint32_t idx : user_posts_[u.value]) {
        if (posts_[idx].resource == r) return &posts_[idx];
    }
    return nullptr;
}

} // namespace folkrec
