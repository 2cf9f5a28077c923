// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/error.hpp"

namespace folkrec {

// Bijective string <-> dense index mapping. Indices are handed out
// contiguously from 0 in insertion order.
class Interner {
public:
    uint32_t intern(std::string_view label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(labels_.size());
        labels_.emplace_back(label);
        index_.emplace(labels_.back(), id);
        return id;
    }

    std::optional<uint32_t> find(std::string_view label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& label(uint32_t id) const {
        if (id >= labels_.size()) throw Error(ErrorCode::UnknownEntity, "unknown entity");
        return labels_[id];
    }

    uint32_t size() const { return static_cast<uint32_t>(labels_.size()); }

private:
    struct Hash {
        using is_transparent = void;
        size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    struct Eq {
        using is_transparent = void;
        bool operator()(std::string_view a, std::string_view b) const { return a == b; }
    };

    // index_ keys view into labels_; std::deque-like stability is not needed
    // because std::string heap storage survives vector reallocation.
    std::unordered_map<std::string, uint32_t, Hash, Eq> index_;
    std::vector<std::string> labels_;
};

// The three per-kind interners shared by a folksonomy and everything
// derived from it (train split, test posts, topic models bound to it).
class Vocabulary {
public:
    Interner& users() { return users_; }
    Interner& resources() { return resources_; }
    Interner& tags() { return tags_; }

    const Interner& users() const { return users_; }
    const Interner& resources() const { return resources_; }
    const Interner& tags() const { return tags_; }

    const std::string& user_label(UserId u) const { return users_.label(u.value); }
    const std::string& resource_label(ResourceId r) const { return resources_.label(r.value); }
    const std::string& tag_label(TagId t) const { return tags_.label(t.value); }

private:
    Interner users_;
    Interner resources_;
    Interner tags_;
};

} // namespace folkrec
