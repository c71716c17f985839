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

#ifndef IRREDPOLY_BENCH_HPP
#define IRREDPOLY_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <vector>

#include "irredpoly/construct.hpp"

namespace irredpoly {

struct BenchPoint {
    Natural p;
    unsigned d = 1;
};

struct BenchRow {
    Natural p;
    unsigned d = 1;
    std::string algorithm;  // "construct" or "random"
    double median_ms = 0.0;
    unsigned runs = 0;
};

namespace detail {

inline double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace detail

/// Wall-clock medians over `runs` runs per grid point, for both the
/// canonical construction and the trial-and-error baseline. Two rows per
/// point; growth is reported, not asserted.
inline std::vector<BenchRow> run_bench(const std::vector<BenchPoint>& grid, unsigned runs,
                                       std::uint64_t seed_base) {
    using clock = std::chrono::steady_clock;
    if (runs < 1) throw InvalidInputError("run_bench: runs must be >= 1");
    std::vector<BenchRow> rows;
    for (const auto& point : grid) {
        const Fp P(point.p);
        std::vector<double> construct_ms, random_ms;
        for (unsigned r = 0; r < runs; ++r) {
            SeededRng rng(seed_base + r);
            auto t0 = clock::now();
            construct_irreducible_fp(P, point.d, rng);
            construct_ms.push_back(
                std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        }
        for (unsigned r = 0; r < runs; ++r) {
            SeededRng rng(seed_base + 1000003 * (r + 1));
            auto t0 = clock::now();
            random_irreducible(P, point.d, rng);
            random_ms.push_back(
                std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        }
        rows.push_back(BenchRow{point.p, point.d, "construct",
                                detail::median_of(construct_ms), runs});
        rows.push_back(
            BenchRow{point.p, point.d, "random", detail::median_of(random_ms), runs});
    }
    return rows;
}

}  // namespace irredpoly

#endif
