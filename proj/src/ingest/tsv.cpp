// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "ingest/tsv.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "core/error.hpp"
#include "util/text.hpp"

namespace folkrec::ingest {

namespace {

bool parse_row(std::string_view line, PostRecord& out) {
    auto cols = split_view(line, '\t');
    if (cols.size() != 4) return false;
    if (cols[0].empty() || cols[1].empty()) return false;

    int64_t ts = 0;
    if (!parse_int64(cols[2], ts) || ts < 0) return false;

    std::vector<std::string> tags;
    for (auto piece : split_view(cols[3], ',')) {
        if (!piece.empty()) tags.emplace_back(piece);
    }
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    if (tags.empty()) return false;

    out.user = std::string(cols[0]);
    out.resource = std::string(cols[1]);
    out.tags = std::move(tags);
    out.timestamp = ts;
    return true;
}

} // namespace

ParsedPosts parse_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open file: " + path.string());

    ParsedPosts result;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        PostRecord rec;
        if (parse_row(line, rec)) {
            result.posts.push_back(std::move(rec));
            ++result.report.parsed;
        } else {
            ++result.report.skipped;
        }
    }
    if (result.posts.empty())
        throw Error(ErrorCode::EmptyInput, "no posts parsed");
    return result;
}

namespace {

void write_row(std::ofstream& out, const std::string& user, const std::string& resource,
               int64_t timestamp, const std::vector<std::string>& tags) {
    out << user << '\t' << resource << '\t' << timestamp << '\t';
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i) out << ',';
        out << tags[i];
    }
    out << '\n';
}

} // namespace

void write_tsv(const std::filesystem::path& path, std::span<const PostRecord> posts) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write file: " + path.string());
    for (const auto& p : posts) write_row(out, p.user, p.resource, p.timestamp, p.tags);
}

void write_tsv(const std::filesystem::path& path, const Folksonomy& f) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write file: " + path.string());
    const Vocabulary& vocab = f.vocab();
    std::vector<std::string> tags;
    for (const Post& p : f.posts()) {
        tags.clear();
        for (TagId t : p.tags) tags.push_back(vocab.tag_label(t));
        write_row(out, vocab.user_label(p.user), vocab.resource_label(p.resource),
                  p.timestamp, tags);
    }
}

} // namespace folkrec::ingest
