// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace folkrec {

// Dense, per-kind indices. Interning keeps them contiguous from 0.
struct UserId {
    uint32_t value = 0;
    auto operator<=>(const UserId&) const = default;
};

struct ResourceId {
    uint32_t value = 0;
    auto operator<=>(const ResourceId&) const = default;
};

struct TagId {
    uint32_t value = 0;
    auto operator<=>(const TagId&) const = default;
};

// One bookmark event with string labels, as read from a dump. Interning
// happens when a Folksonomy is built.
struct PostRecord {
    std::string user;
    std::string resource;
    std::vector<std::string> tags; // non-empty, duplicate-free
    int64_t timestamp = 0;         // seconds since epoch, >= 0
};

// The interned counterpart stored inside a Folksonomy.
struct Post {
    UserId user;
    ResourceId resource;
    std::vector<TagId> tags; // sorted ascending, duplicate-free, non-empty
    int64_t timestamp = 0;
};

} // namespace folkrec
