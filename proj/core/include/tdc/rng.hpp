// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace tdc {

// SplitMix64. Hand-rolled so that seeded runs are reproducible across
// platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from {0..universe-1}, sorted.
    std::vector<int> sample_subset(int universe, int k) {
        std::vector<int> pool(universe);
        for (int i = 0; i < universe; ++i) pool[i] = i;
        shuffle(pool);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

  private:
    std::uint64_t state_;
};

}  // namespace tdc
