// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace folkrec {

// Uniform double in [0, 1) from the top 53 bits. mt19937_64 output is
// standardized, so results are identical across platforms, unlike the
// std:: distributions.
inline double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection-free multiply-shift; the bias is
// below 2^-32 for the n used here.
inline uint64_t next_bounded(std::mt19937_64& rng, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

// splitmix64, used for seed-derived per-key hashing.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded FNV-1a over a string, finalized through splitmix64. Stable across
// platforms and runs; drives the user-sampling predicate.
inline uint64_t seeded_hash(std::string_view s, uint64_t seed) {
    uint64_t h = 0xcbf29ce484222325ULL ^ mix64(seed);
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(h);
}

} // namespace folkrec
