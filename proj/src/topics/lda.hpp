// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/folksonomy.hpp"

namespace folkrec::topics {

struct LdaConfig {
    uint32_t num_topics = 1000;
    double alpha = 0.0; // <= 0 means the 50/Z default
    double eta = 0.01;
    uint32_t iterations = 500;
    uint64_t seed = 0;

    double resolved_alpha() const { return alpha > 0.0 ? alpha : 50.0 / num_topics; }
    void validate() const;
};

// One document per resource: the multiset union of tag sets over the
// resource's posts. Tokens index into tag_labels.
struct Documents {
    std::vector<std::string> resource_labels;
    std::vector<std::vector<uint32_t>> tokens;
    std::vector<std::string> tag_labels;
};

Documents build_documents(const Folksonomy& train);

// Per-resource latent topic distributions, keyed by resource label so a
// persisted model can be reused against a rebuilt folksonomy.
class TopicModel {
public:
    TopicModel(LdaConfig config, std::vector<std::string> resource_labels,
               std::vector<std::vector<double>> rows,
               std::vector<std::string> tag_labels,
               std::vector<std::vector<uint32_t>> topic_tag_counts);

    uint32_t num_topics() const { return config_.num_topics; }
    const LdaConfig& config() const { return config_; }
    size_t resource_count() const { return resource_labels_.size(); }

    // Stored distribution for a known resource, nullptr for an unseen one.
    const std::vector<double>* find(const std::string& resource_label) const;

    // Stored distribution, or the uniform fallback for unseen resources.
    std::vector<double> topic_vector(const std::string& resource_label) const;

    const std::vector<std::string>& resource_labels() const { return resource_labels_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    // Final-sample topic x token counts, for diagnostics. Empty on a model
    // loaded from disk.
    const std::vector<std::vector<uint32_t>>& topic_tag_counts() const { return topic_tag_counts_; }
    const std::vector<std::string>& tag_labels() const { return tag_labels_; }

    void save(const std::filesystem::path& path) const;
    static TopicModel load(const std::filesystem::path& path);

private:
    LdaConfig config_;
    std::vector<std::string> resource_labels_;
    std::vector<std::vector<double>> rows_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<std::string> tag_labels_;
    std::vector<std::vector<uint32_t>> topic_tag_counts_;
};

// Collapsed Gibbs sampling for cfg.iterations sweeps with a fixed seed.
// Deterministic: the same (docs, cfg) yields a bit-identical model. Row d
// is the smoothed proportion (n_{d,k} + alpha) / (|doc_d| + Z alpha) from
// the final sweep's assignments.
TopicModel train_lda(const Documents& docs, const LdaConfig& cfg);

} // namespace folkrec::topics
