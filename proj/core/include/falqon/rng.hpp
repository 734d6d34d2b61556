// Copyright 2026 The falqon-lab authors.
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
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace falqon {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace detail

/// Combines a master seed with a stream id into an independent sub-seed.
/// Ensemble runs derive one stream per (instance, purpose) so results do
/// not depend on scheduling order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    (void)detail::splitmix64(state);
    state ^= 0xD1B54A32D192ED03ULL * (stream + 1);
    (void)detail::splitmix64(state);
    return detail::splitmix64(state);
}

/// Seeded random stream. All sampling helpers are hand-rolled on top of
/// mt19937_64 so that sequences are identical across platforms and
/// standard-library versions.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mmix(seed)) {}

    static RandomStream derive(std::uint64_t seed, std::uint64_t stream) {
        return RandomStream(mix_seed(seed, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform_open01() { return 1.0 - uniform01(); }

    /// Unbiased uniform integer in [0, bound).
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller (uniform01 based, platform stable).
    double normal() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[uniform_below(i)]);
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t seed) {
        std::uint64_t state = seed;
        return detail::splitmix64(state);
    }

    std::mt19937_64 engine_;
};

} // namespace falqon
