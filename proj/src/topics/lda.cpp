// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "topics/lda.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <random>

#include "core/error.hpp"
#include "util/rng.hpp"
#include "util/text.hpp"

namespace folkrec::topics {

void LdaConfig::validate() const {
    if (num_topics < 1) throw Error(ErrorCode::InvalidArgument, "num_topics must be >= 1");
    if (eta <= 0.0) throw Error(ErrorCode::InvalidArgument, "eta must be > 0");
    if (iterations < 1) throw Error(ErrorCode::InvalidArgument, "iterations must be >= 1");
    if (resolved_alpha() <= 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be > 0");
}

Documents build_documents(const Folksonomy& train) {
    const uint32_t n_resources = train.resource_count();
    std::vector<std::vector<TagId>> bags(n_resources);
    for (const Post& p : train.posts()) {
        auto& bag = bags[p.resource.value];
        bag.insert(bag.end(), p.tags.begin(), p.tags.end());
    }

    // Dense token ids in ascending train tag id order.
    std::vector<int64_t> token_of_tag(train.tag_count(), -1);
    Documents docs;
    for (uint32_t r = 0; r < n_resources; ++r) {
        if (bags[r].empty()) continue;
        std::sort(bags[r].begin(), bags[r].end());
        std::vector<uint32_t> tokens;
        tokens.reserve(bags[r].size());
        for (TagId t : bags[r]) {
            if (token_of_tag[t.value] < 0) {
                token_of_tag[t.value] = -2; // mark used; ids assigned below
            }
            tokens.push_back(t.value);
        }
        docs.resource_labels.push_back(train.vocab().resource_label(ResourceId{r}));
        docs.tokens.push_back(std::move(tokens));
    }

    std::vector<uint32_t> remap(train.tag_count(), 0);
    for (uint32_t t = 0; t < train.tag_count(); ++t) {
        if (token_of_tag[t] == -2) {
            remap[t] = static_cast<uint32_t>(docs.tag_labels.size());
            docs.tag_labels.push_back(train.vocab().tag_label(TagId{t}));
        }
    }
    for (auto& tokens : docs.tokens)
        for (auto& tok : tokens) tok = remap[tok];

    return docs;
}

TopicModel::TopicModel(LdaConfig config, std::vector<std::string> resource_labels,
                       std::vector<std::vector<double>> rows,
                       std::vector<std::string> tag_labels,
                       std::vector<std::vector<uint32_t>> topic_tag_counts)
    : config_(config),
      resource_labels_(std::move(resource_labels)),
      rows_(std::move(rows)),
      tag_labels_(std::move(tag_labels)),
      topic_tag_counts_(std::move(topic_tag_counts)) {
    index_.reserve(resource_labels_.size());
    for (size_t i = 0; i < resource_labels_.size(); ++i) index_[resource_labels_[i]] = i;
}

const std::vector<double>* TopicModel::find(const std::string& resource_label) const {
    auto it = index_.find(resource_label);
    if (it == index_.end()) return nullptr;
    return &rows_[it->second];
}

std::vector<double> TopicModel::topic_vector(const std::string& resource_label) const {
    if (const auto* row = find(resource_label)) return *row;
    return std::vector<double>(config_.num_topics, 1.0 / config_.num_topics);
}

TopicModel train_lda(const Documents& docs, const LdaConfig& cfg) {
    cfg.validate();
    if (docs.tokens.empty()) throw Error(ErrorCode::EmptyInput, "no documents");
    const uint32_t V = static_cast<uint32_t>(docs.tag_labels.size());
    if (V == 0) throw Error(ErrorCode::EmptyInput, "no documents");

    const uint32_t Z = cfg.num_topics;
    const double alpha = cfg.resolved_alpha();
    const double eta = cfg.eta;
    const size_t n_docs = docs.tokens.size();

    std::vector<std::vector<uint32_t>> doc_topic(n_docs, std::vector<uint32_t>(Z, 0));
    std::vector<std::vector<uint32_t>> topic_token(Z, std::vector<uint32_t>(V, 0));
    std::vector<uint64_t> topic_total(Z, 0);
    std::vector<std::vector<uint32_t>> assignment(n_docs);

    std::mt19937_64 rng(cfg.seed);

    for (size_t d = 0; d < n_docs; ++d) {
        assignment[d].resize(docs.tokens[d].size());
        for (size_t i = 0; i < docs.tokens[d].size(); ++i) {
            uint32_t w = docs.tokens[d][i];
            assert(w < V);
            uint32_t k = static_cast<uint32_t>(next_bounded(rng, Z));
            assignment[d][i] = k;
            ++doc_topic[d][k];
            ++topic_token[k][w];
            ++topic_total[k];
        }
    }

    std::vector<double> cumulative(Z);
    for (uint32_t iter = 0; iter < cfg.iterations; ++iter) {
        for (size_t d = 0; d < n_docs; ++d) {
            for (size_t i = 0; i < docs.tokens[d].size(); ++i) {
                const uint32_t w = docs.tokens[d][i];
                const uint32_t old_k = assignment[d][i];
                --doc_topic[d][old_k];
                --topic_token[old_k][w];
                --topic_total[old_k];

                double total = 0.0;
                for (uint32_t k = 0; k < Z; ++k) {
                    total += (doc_topic[d][k] + alpha) * (topic_token[k][w] + eta) /
                             (static_cast<double>(topic_total[k]) + V * eta);
                    cumulative[k] = total;
                }
                const double u = next_double(rng) * total;
                uint32_t new_k = static_cast<uint32_t>(
                    std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                    cumulative.begin());
                if (new_k >= Z) new_k = Z - 1;

                assignment[d][i] = new_k;
                ++doc_topic[d][new_k];
                ++topic_token[new_k][w];
                ++topic_total[new_k];
            }
        }
#ifndef NDEBUG
        for (size_t d = 0; d < n_docs; ++d) {
            uint64_t s = 0;
            for (uint32_t k = 0; k < Z; ++k) s += doc_topic[d][k];
            assert(s == docs.tokens[d].size());
        }
        for (uint32_t k = 0; k < Z; ++k) {
            uint64_t s = 0;
            for (uint32_t w = 0; w < V; ++w) s += topic_token[k][w];
            assert(s == topic_total[k]);
        }
#endif
    }

    std::vector<std::vector<double>> rows(n_docs);
    for (size_t d = 0; d < n_docs; ++d) {
        const double denom = static_cast<double>(docs.tokens[d].size()) + Z * alpha;
        rows[d].resize(Z);
        for (uint32_t k = 0; k < Z; ++k)
            rows[d][k] = (doc_topic[d][k] + alpha) / denom;
    }

    return TopicModel(cfg, docs.resource_labels, std::move(rows), docs.tag_labels,
                      std::move(topic_token));
}

void TopicModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write file: " + path.string());
    out << "#folkrec-topics v1\n";
    out << "#topics=" << config_.num_topics << '\n';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", config_.resolved_alpha());
    out << "#alpha=" << buf << '\n';
    std::snprintf(buf, sizeof(buf), "%.17g", config_.eta);
    out << "#eta=" << buf << '\n';
    out << "#iterations=" << config_.iterations << '\n';
    out << "#seed=" << config_.seed << '\n';
    for (size_t i = 0; i < resource_labels_.size(); ++i) {
        out << resource_labels_[i] << '\t';
        const auto& row = rows_[i];
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
            out << buf;
        }
        out << '\n';
    }
}

TopicModel TopicModel::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open file: " + path.string());

    std::string line;
    if (!std::getline(in, line) || !line.starts_with("#folkrec-topics"))
        throw Error(ErrorCode::Io, "not a topic model file: " + path.string());

    LdaConfig cfg;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            std::string value = line.substr(eq + 1);
            if (key == "topics") cfg.num_topics = static_cast<uint32_t>(std::stoul(value));
            else if (key == "alpha") cfg.alpha = std::stod(value);
            else if (key == "eta") cfg.eta = std::stod(value);
            else if (key == "iterations") cfg.iterations = static_cast<uint32_t>(std::stoul(value));
            else if (key == "seed") cfg.seed = std::stoull(value);
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(ErrorCode::Io, "malformed topic model row");
        std::vector<double> row;
        row.reserve(cfg.num_topics);
        for (auto piece : split_view(std::string_view(line).substr(tab + 1), ','))
            row.push_back(std::stod(std::string(piece)));
        if (row.size() != cfg.num_topics)
            throw Error(ErrorCode::Io, "topic model row has wrong width");
        labels.push_back(line.substr(0, tab));
        rows.push_back(std::move(row));
    }
    return TopicModel(cfg, std::move(labels), std::move(rows), {}, {});
}

} // namespace folkrec::topics
