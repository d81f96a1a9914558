/*
   Copyright 2026 the spirs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPIRS_RNG_HPP
#define SPIRS_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "spirs/gf.hpp"

namespace spirs {

namespace detail {

/// splitmix64 step; used only to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic random stream: std::mt19937_64 (the 64-bit Mersenne
/// Twister, fully specified by the C++ standard and therefore identical
/// across platforms) with uniform sampling done by rejection instead of
/// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent per-trial stream so that parallel and serial harness
    /// runs tally identically: the stream seed mixes (seed, trial).
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (trial + 1));
        std::uint64_t mixed = detail::splitmix64(s);
        return Rng(mixed);
    }

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, n), n >= 1, by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t v = gen_();
            if (v < limit) return v % n;
        }
    }

    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return static_cast<double>(below(1u << 30)) < p * (1u << 30); }

    std::uint32_t field_elem(const Field& f) { return static_cast<std::uint32_t>(below(f.q())); }

    std::uint32_t field_nonzero(const Field& f) {
        return 1 + static_cast<std::uint32_t>(below(f.q() - 1));
    }

    /// t distinct positions from {0,...,n-1}, sorted ascending.
    std::vector<long> support(long n, long t) {
        std::vector<long> all(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        for (long i = 0; i < t; ++i) {
            long j = i + static_cast<long>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
        }
        all.resize(static_cast<std::size_t>(t));
        std::sort(all.begin(), all.end());
        return all;
    }

   private:
    std::mt19937_64 gen_;
};

}  // namespace spirs

#endif  // SPIRS_RNG_HPP
