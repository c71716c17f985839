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

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations for small fields.
 *
 * These are ground truth for the test suite. They are naive by policy and
 * share nothing with the main pipeline beyond the arithmetic layer, so
 * agreement is evidence rather than tautology. Every enumeration is gated
 * by an explicit budget.
 */

#ifndef IRREDPOLY_ORACLE_HPP
#define IRREDPOLY_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "irredpoly/ext_field.hpp"

namespace irredpoly {

/// Cap on p^deg for exhaustive loops, enforced before any enumeration.
struct EnumBudget {
    Natural max_field_size;
};

inline const EnumBudget kElementEnumBudget{Natural(1) << 16};
inline const EnumBudget kPolynomialEnumBudget{Natural(1) << 20};

namespace detail {

inline void require_budget(const Natural& size, const EnumBudget& budget, const char* what) {
    if (size > budget.max_field_size)
        throw BudgetExceededError(std::string(what) + ": enumeration budget exceeded");
}

/// All monic polynomials of degree exactly m, ascending enumeration
/// (which is ascending lex order within the degree).
template <class F>
Poly<F> monic_poly_at(const F& K, unsigned m, const Natural& index) {
    Natural rest = index;
    const Natural s = K.enum_size();
    std::vector<typename F::Elem> c;
    c.reserve(m + 1);
    for (unsigned i = 0; i < m; ++i) {
        c.push_back(K.element_at(rest % s));
        rest /= s;
    }
    c.push_back(K.one());
    return Poly<F>(K, std::move(c));
}

}  // namespace detail

/// Enumeration helper shared with the test suite: the index-th monic
/// polynomial of degree m, ascending (= ascending lex within the degree).
template <class F>
Poly<F> monic_poly_at(const F& K, unsigned m, const Natural& index) {
    return detail::monic_poly_at(K, m, index);
}

/// Trial division by all monic polynomials of degree <= deg f / 2.
template <class F>
bool brute_is_irreducible(const Poly<F>& f, const EnumBudget& budget = kPolynomialEnumBudget) {
    const F& K = f.field();
    if (f.degree() < 1) throw InvalidInputError("brute_is_irreducible: degree must be >= 1");
    Natural domain;
    mpz_pow_ui(domain.get_mpz_t(), K.enum_size().get_mpz_t(),
               static_cast<unsigned long>(f.degree()));
    detail::require_budget(domain, budget, "brute_is_irreducible");
    for (unsigned m = 1; 2 * static_cast<int>(m) <= f.degree(); ++m) {
        Natural count;
        mpz_pow_ui(count.get_mpz_t(), K.enum_size().get_mpz_t(), m);
        for (Natural idx(0); idx < count; ++idx) {
            Poly<F> div = detail::monic_poly_at(K, m, idx);
            if (poly_divmod(f, div).second.is_zero()) return false;
        }
    }
    return true;
}

/// Complete monic irreducible factorization (with multiplicity) by
/// recursive trial division, smallest divisors first. Sorted by degree
/// then lex order.
template <class F>
std::vector<Poly<F>> brute_factor_set(const Poly<F>& f,
                                      const EnumBudget& budget = kPolynomialEnumBudget) {
    const F& K = f.field();
    if (f.degree() < 1) throw InvalidInputError("brute_factor_set: degree must be >= 1");
    Natural domain;
    mpz_pow_ui(domain.get_mpz_t(), K.enum_size().get_mpz_t(),
               static_cast<unsigned long>(f.degree()));
    detail::require_budget(domain, budget, "brute_factor_set");

    std::vector<Poly<F>> out;
    Poly<F> rest = f.monic();
    while (rest.degree() > 0) {
        // The smallest-degree divisor found in enumeration order is
        // irreducible: any proper factor of it would have shown up earlier.
        bool found = false;
        for (unsigned m = 1; 2 * static_cast<int>(m) <= rest.degree() && !found; ++m) {
            Natural count;
            mpz_pow_ui(count.get_mpz_t(), K.enum_size().get_mpz_t(), m);
            for (Natural idx(0); idx < count; ++idx) {
                Poly<F> div = detail::monic_poly_at(K, m, idx);
                auto [quot, rem] = poly_divmod(rest, div);
                if (rem.is_zero()) {
                    out.push_back(div);
                    rest = quot.monic();
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            out.push_back(rest);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Poly<F>& a, const Poly<F>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return lex_poly_less(a, b);
    });
    return out;
}

namespace detail {

inline int moebius(const Natural& n) {
    int mu = 1;
    for (const auto& [prime, exp] : factor_integer(n)) {
        if (exp > 1) return 0;
        mu = -mu;
    }
    return mu;
}

}  // namespace detail

/// Exact count of monic irreducible polynomials of degree d over F_p by
/// exhaustive enumeration (a product sieve over packed coefficient
/// encodings), cross-checked internally against the necklace formula
/// (1/d) sum_{e | d} mu(e) p^(d/e).
inline Natural count_irreducibles(const PrimeModulus& prime, unsigned d,
                                  const EnumBudget& budget = kPolynomialEnumBudget) {
    if (d < 1) throw InvalidInputError("count_irreducibles: d must be >= 1");
    const Natural& p_nat = prime.value();
    Natural domain;
    mpz_pow_ui(domain.get_mpz_t(), p_nat.get_mpz_t(), d);
    detail::require_budget(domain, budget, "count_irreducibles");

    const std::uint64_t p = p_nat.get_ui();
    const auto total = static_cast<std::size_t>(domain.get_ui());

    // Encode a monic degree-m polynomial by its m low coefficients, base p.
    auto decode = [&](std::uint64_t code, unsigned m, std::vector<std::uint64_t>& c) {
        c.assign(m + 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            c[i] = code % p;
            code /= p;
        }
        c[m] = 1;
    };

    std::vector<bool> composite(total, false);
    std::vector<std::uint64_t> g, h, prod;
    for (unsigned dg = 1; 2 * dg <= d; ++dg) {
        const unsigned dh = d - dg;
        std::uint64_t g_count = 1, h_count = 1;
        for (unsigned i = 0; i < dg; ++i) g_count *= p;
        for (unsigned i = 0; i < dh; ++i) h_count *= p;
        for (std::uint64_t gi = 0; gi < g_count; ++gi) {
            decode(gi, dg, g);
            for (std::uint64_t hi = 0; hi < h_count; ++hi) {
                decode(hi, dh, h);
                prod.assign(d + 1, 0);
                for (unsigned i = 0; i <= dg; ++i)
                    for (unsigned j = 0; j <= dh; ++j) prod[i + j] += g[i] * h[j];
                std::uint64_t code = 0;
                for (unsigned i = d; i-- > 0;) code = code * p + prod[i] % p;
                composite[static_cast<std::size_t>(code)] = true;
            }
        }
    }
    std::uint64_t count = 0;
    for (bool b : composite)
        if (!b) ++count;

    // Internal cross-check against the necklace formula.
    Natural necklace(0);
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = detail::moebius(Natural(e));
        if (mu == 0) continue;
        Natural term;
        mpz_pow_ui(term.get_mpz_t(), p_nat.get_mpz_t(), d / e);
        necklace += mu * term;
    }
    necklace /= d;
    if (necklace != Natural(count))
        throw VerificationError("count_irreducibles disagrees with the necklace formula");
    return Natural(count);
}

/// Least j > 0 with alpha^j = 1, by successive multiplication.
template <class F>
Natural brute_element_order(const typename F::Elem& alpha,
                            const EnumBudget& budget = kElementEnumBudget) {
    const F& K = *alpha.field;
    if (K.is_zero(alpha)) throw InvalidInputError("brute_element_order: zero element");
    detail::require_budget(K.size(), budget, "brute_element_order");
    typename F::Elem cur = alpha;
    Natural order(1);
    while (!K.eq(cur, K.one())) {
        cur = K.mul(cur, alpha);
        ++order;
        if (order > K.size())
            throw VerificationError("element order exceeded the group size");
    }
    return order;
}

}  // namespace irredpoly

#endif
