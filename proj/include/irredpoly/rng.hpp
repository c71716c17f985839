/*
   Copyright 2026 the irredpoly authors

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

#ifndef IRREDPOLY_RNG_HPP
#define IRREDPOLY_RNG_HPP

#include <cstdint>
#include <random>

#include "irredpoly/natural.hpp"

namespace irredpoly {

/// The one source of randomness. Every randomized routine takes an explicit
/// SeededRng&; canonical outputs never depend on the seed, only runtimes do.
///
/// mt19937_64 has a standard-pinned output sequence, so a (seed, word count)
/// pair reproduces a run exactly on any platform.
class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Number of 64-bit words drawn so far (runtime instrumentation).
    std::uint64_t words_drawn() const { return words_; }

    std::uint64_t next_word() {
        ++words_;
        return engine_();
    }

    /// Uniform value in [0, bound) by rejection sampling on bit_length(bound)
    /// random bits. Acceptance probability is at least 1/2 per attempt.
    Natural below(const Natural& bound) {
        if (bound < 1) throw InvalidInputError("SeededRng::below: bound must be positive");
        if (bound == 1) return 0;
        const std::size_t bits = bit_length(bound - 1);
        const std::size_t words = (bits + 63) / 64;
        const std::size_t top_bits = bits - 64 * (words - 1);
        for (;;) {
            Natural r = 0;
            for (std::size_t i = 0; i < words; ++i) {
                std::uint64_t w = next_word();
                // The first word drawn lands in the most significant position.
                if (i == 0 && top_bits < 64) w &= (std::uint64_t(1) << top_bits) - 1;
                Natural chunk(static_cast<unsigned long>(w >> 32));
                chunk <<= 32;
                chunk |= Natural(static_cast<unsigned long>(w & 0xffffffffULL));
                r <<= 64;
                r |= chunk;
            }
            if (r < bound) return r;
        }
    }

   private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t words_ = 0;
};

}  // namespace irredpoly

#endif
