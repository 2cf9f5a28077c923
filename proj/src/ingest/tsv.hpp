// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "core/folksonomy.hpp"
#include "core/ids.hpp"

namespace folkrec::ingest {

struct ParseReport {
    uint64_t parsed = 0;
    uint64_t skipped = 0;
};

struct ParsedPosts {
    std::vector<PostRecord> posts;
    ParseReport report;
};

// Canonical post TSV, UTF-8, one row per post, no header:
//   user<TAB>resource<TAB>unix_timestamp<TAB>tag1,tag2,...
// Malformed rows (wrong column count, non-integer or negative timestamp,
// empty tag list) are counted and skipped.
ParsedPosts parse_tsv(const std::filesystem::path& path);

void write_tsv(const std::filesystem::path& path, std::span<const PostRecord> posts);

// Canonical rows from an already-built folksonomy (deduplicated posts, in
// storage order).
void write_tsv(const std::filesystem::path& path, const Folksonomy& f);

} // namespace folkrec::ingest
