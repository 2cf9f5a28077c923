// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "core/ids.hpp"

namespace folkrec::eval {

// rec is a ranked, duplicate-free tag list; rel the relevant set as a
// sorted vector. All metrics land in [0, 1].

// Hits in the top-k over min(k, |rec|) by default; the strict variant
// divides by k itself.
double precision_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted,
                      size_t k, bool strict_k = false);

double recall_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k);

double f1_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k,
               bool strict_k = false);

// 1 / rank of the first relevant item, 0 if none.
double mrr(std::span<const TagId> rec, std::span<const TagId> rel_sorted);

// Mean over all relevant items of precision at each relevant hit;
// relevant items missing from rec contribute 0.
double average_precision(std::span<const TagId> rec, std::span<const TagId> rel_sorted);

// Binary-gain DCG with 1/log2(rank + 1), normalized by the ideal DCG of
// min(|rel|, k) items.
double ndcg_at_k(std::span<const TagId> rec, std::span<const TagId> rel_sorted, size_t k);

} // namespace folkrec::eval
