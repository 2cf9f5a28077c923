// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#include "eval/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace folkrec::eval {

namespace {

bool is_relevant(std::span<const TagId> rel_sorted, TagId t) {
    return std::binary_search(rel_sorted.begin(), rel_sorted.end(), t);
}

size_t hits_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k) {
    const size_t depth = std::min(k, rec.size());
    size_t hits = 0;
    for (size_t i = 0; i < depth; ++i)
        if (is_relevant(rel_sorted, rec[i])) ++hits;
    return hits;
}

} // namespace

double precision_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted,
                      size_t k, bool strict_k) {
    if (k == 0) return 0.0;
    const size_t denom = strict_k ? k : std::min(k, rec.size());
    if (denom == 0) return 0.0;
    return static_cast<double>(hits_at_k(rec, rel_sorted, k)) / static_cast<double>(denom);
}

double recall_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k) {
    if (rel_sorted.empty()) return 0.0;
    return static_cast<double>(hits_at_k(rec, rel_sorted, k)) /
           static_cast<double>(rel_sorted.size());
}

double f1_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k,
               bool strict_k) {
    const double p = precision_at_k(rec, rel_sorted, k, strict_k);
    const double r = recall_at_k(rec, rel_sorted, k);
    if (p + r == 0.0) return 0.0;
    return 2.0 * p * r / (p + r);
}

double mrr(std::span<const TagId> rec, std::span<const TagId> rel_sorted) {
    for (size_t i = 0; i < rec.size(); ++i)
        if (is_relevant(rel_sorted, rec[i])) return 1.0 / static_cast<double>(i + 1);
    return 0.0;
}

double average_precision(std::span<const TagId> rec, std::span<const TagId> rel_sorted) {
    if (rel_sorted.empty()) return 0.0;
    size_t hits = 0;
    double sum = 0.0;
    for (size_t i = 0; i < rec.size(); ++i) {
        if (is_relevant(rel_sorted, rec[i])) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(rel_sorted.size());
}

double ndcg_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k) {
    const size_t depth = std::min(k, rec.size());
    double dcg = 0.0;
    for (size_t i = 0; i < depth; ++i) {
        if (is_relevant(rel_sorted, rec[i]))
            dcg += 1.0 / std::log2(static_cast<double>(i + 2));
    }
    const size_t ideal = std::min(rel_sorted.size(), k);
    double idcg = 0.0;
    for (size_t i = 0; i < ideal; ++i) idcg += 1.0 / std::log2(static_cast<double>(i + 2));
    if (idcg == 0.0) return 0.0;
    return dcg / idcg;
}

} // namespace folkrec::eval
