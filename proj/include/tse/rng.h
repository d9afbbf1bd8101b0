// include/tse/rng.h
//
// Copyright 2026  The tse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSE_RNG_H_
#define TSE_RNG_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "tse/errors.h"

namespace tse {

// splitmix64; used for seed derivation only, never for sample streams.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives an independent sub-seed from a base seed and a tag path, e.g.
// derive_seed(master, "mix", split_index, item_index). Items generated from
// distinct tag paths have independent streams regardless of scheduling.
inline uint64_t derive_seed(uint64_t base) { return splitmix64(base); }

template <typename T, typename... Rest>
uint64_t derive_seed(uint64_t base, T tag, Rest... rest) {
  uint64_t t;
  if constexpr (std::is_convertible_v<T, std::string_view>) {
    t = fnv1a64(std::string_view(tag));
  } else {
    t = static_cast<uint64_t>(tag);
  }
  return derive_seed(splitmix64(base ^ splitmix64(t)), rest...);
}

// Deterministic RNG with platform-independent real/integer draws. The raw
// stream is std::mt19937_64 (bit-exact everywhere); uniform/normal/bounded-int
// conversions are implemented here rather than with std:: distributions,
// whose outputs are not specified across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t bits() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased uniform integer in [0, n). Lemire's multiply-shift rejection.
  uint64_t uniform_int(uint64_t n) {
    if (n == 0) throw IndexError("uniform_int: n must be positive");
    uint64_t x = bits();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = bits();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; one value cached per pair.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // First k entries of a Fisher-Yates-shuffled [0, n) index set.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    if (k > n) throw SubsetTooLargeError("sample of " + std::to_string(k) +
                                         " from " + std::to_string(n));
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    for (size_t i = 0; i < k; ++i) {
      size_t j = i + static_cast<size_t>(uniform_int(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

  template <typename T>
  void shuffle(std::vector<T>* v) {
    for (size_t i = v->size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(i));
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace tse

#endif  // TSE_RNG_H_
