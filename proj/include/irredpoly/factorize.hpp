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
 * @file factorize.hpp
 * @brief Rabin irreducibility testing and randomized equal-degree
 *        factorization (Cantor-Zassenhaus).
 *
 * EDF is Las Vegas: the seed only affects how long splitting takes, never
 * what comes out. The returned factor list is sorted ascending in the
 * normative lexicographic order, so downstream canonical choices do not
 * depend on discovery order. Output is always verified (product equals the
 * input, every factor passes Rabin at the stated degree); a verification
 * failure means the caller violated the equal-degree precondition.
 */

#ifndef IRREDPOLY_FACTORIZE_HPP
#define IRREDPOLY_FACTORIZE_HPP

#include <cstdint>
#include <vector>

#include "irredpoly/poly.hpp"
#include "irredpoly/rng.hpp"

namespace irredpoly {

/// true iff X^(Q^n) = X (mod f) and gcd(X^(Q^(n/r)) - X mod f, f) = 1 for
/// every prime r | n, where Q is the coefficient field size and n = deg f.
/// Deterministic given f. Frobenius powers are computed as a chain of n
/// successive Q-th power exponentiations, checking each subcondition as its
/// index comes up.
template <class F>
bool rabin_is_irreducible(const Poly<F>& f) {
    const F& K = f.field();
    const int n = f.degree();
    if (n < 1 || !f.is_monic())
        throw InvalidInputError("rabin_is_irreducible: f must be monic of degree >= 1");
    if (n == 1) return true;

    std::vector<int> check_at;  // n/r for each prime r | n
    for (const auto& [r, e] : factor_integer(Natural(n)))
        check_at.push_back(n / static_cast<int>(r.get_ui()));
    std::sort(check_at.begin(), check_at.end());

    const Natural q = K.size();
    const Poly<F> x = Poly<F>::x(K);
    Poly<F> frob = poly_mod(x, f);
    std::size_t next = 0;
    for (int i = 1; i <= n; ++i) {
        frob = poly_powmod(frob, q, f);
        while (next < check_at.size() && check_at[next] == i) {
            if (poly_gcd(frob - x, f).degree() != 0) return false;
            ++next;
        }
    }
    return frob == poly_mod(x, f);
}

struct EdfStats {
    std::uint64_t attempts = 0;  // random elements drawn
    std::uint64_t splits = 0;    // proper splits found
};

namespace detail {

/// Uniform polynomial of degree < bound (possibly zero).
template <class F>
Poly<F> random_poly_below(const F& K, int bound, SeededRng& rng) {
    std::vector<typename F::Elem> c;
    c.reserve(bound);
    for (int i = 0; i < bound; ++i) c.push_back(K.sample(rng));
    return Poly<F>(K, std::move(c));
}

/// One Cantor-Zassenhaus splitting attempt on monic f, all of whose
/// irreducible factors have degree m. Returns a proper monic divisor or a
/// polynomial of degree <= 0 when the attempt failed.
template <class F>
Poly<F> cz_try_split(const Poly<F>& f, unsigned m, SeededRng& rng) {
    const F& K = f.field();
    Poly<F> w = random_poly_below(K, f.degree(), rng);
    if (w.degree() < 1) return Poly<F>(K);
    Poly<F> g = poly_gcd(w, f);
    if (g.degree() > 0 && g.degree() < f.degree()) return g;

    if (K.characteristic() == 2) {
        // Trace map over F_2: T(w) = sum_{i < m*e} w^(2^i) mod f, field size 2^e.
        const std::size_t e = bit_length(K.size()) - 1;
        Poly<F> term = poly_mod(w, f);
        Poly<F> trace = term;
        for (std::size_t i = 1; i < m * e; ++i) {
            term = poly_powmod(term, Natural(2), f);
            trace = trace + term;
        }
        g = poly_gcd(trace, f);
    } else {
        Natural qm;
        mpz_pow_ui(qm.get_mpz_t(), K.size().get_mpz_t(), m);
        Poly<F> u = poly_powmod(w, (qm - 1) / 2, f);
        g = poly_gcd(u - Poly<F>::one(K), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) return g;
    return Poly<F>(K);
}

template <class F>
void edf_recurse(const Poly<F>& f, unsigned m, SeededRng& rng, EdfStats& stats,
                 std::vector<Poly<F>>& out) {
    if (f.degree() == static_cast<int>(m)) {
        out.push_back(f);
        return;
    }
    constexpr std::uint64_t kMaxAttempts = 4096;
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ++stats.attempts;
        Poly<F> g = cz_try_split(f, m, rng);
        if (g.degree() > 0) {
            ++stats.splits;
            auto [quot, rem] = poly_divmod(f, g);
            if (!rem.is_zero())
                throw VerificationError("equal-degree split does not divide its input");
            edf_recurse(g, m, rng, stats, out);
            edf_recurse(quot.monic(), m, rng, stats, out);
            return;
        }
    }
    throw VerificationError(
        "equal-degree factorization exhausted its attempt budget; "
        "input is probably not a squarefree product of equal-degree irreducibles");
}

}  // namespace detail

/// Complete factor list of monic f, all factors of degree factor_degree,
/// ascending in the normative lexicographic polynomial order.
template <class F>
std::vector<Poly<F>> edf(const Poly<F>& f, unsigned factor_degree, SeededRng& rng,
                         EdfStats* stats = nullptr) {
    const F& K = f.field();
    if (factor_degree < 1) throw InvalidInputError("edf: factor degree must be >= 1");
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInputError("edf: input must be monic of degree >= 1");
    if (f.degree() % factor_degree != 0)
        throw InvalidInputError("edf: factor degree does not divide deg f");

    EdfStats local;
    EdfStats& st = stats ? *stats : local;
    std::vector<Poly<F>> out;
    detail::edf_recurse(f, factor_degree, rng, st, out);

    // Defensive verification, always on: cheap at this scale and converts
    // silent misuse into errors.
    Poly<F> product = Poly<F>::one(K);
    for (const Poly<F>& g : out) {
        if (g.degree() != static_cast<int>(factor_degree) || !g.is_monic() ||
            !rabin_is_irreducible(g))
            throw VerificationError("edf produced a non-irreducible or wrong-degree factor");
        product = product * g;
    }
    if (product != f)
        throw VerificationError("edf factor product does not reconstruct the input");

    std::sort(out.begin(), out.end(),
              [](const Poly<F>& a, const Poly<F>& b) { return lex_poly_less(a, b); });
    return out;
}

/// All q roots of X^q - alpha in alpha's field, ascending in the element
/// order. Preconditions (alpha a q-th residue, q | field size - 1) make the
/// binomial split into distinct linear factors; anything short of q roots
/// surfaces as a verification error.
template <class F>
std::vector<typename F::Elem> binomial_roots(const Natural& q, const typename F::Elem& alpha,
                                             SeededRng& rng, EdfStats* stats = nullptr) {
    const F& K = *alpha.field;
    if (q < 1 || !q.fits_ulong_p())
        throw InvalidInputError("binomial_roots: unsupported exponent");
    const auto n = static_cast<std::size_t>(q.get_ui());
    Poly<F> f = Poly<F>::binomial(K, n, alpha);
    std::vector<Poly<F>> factors = edf(f, 1, rng, stats);
    if (factors.size() != n)
        throw VerificationError("binomial_roots: fewer roots than expected");
    std::vector<typename F::Elem> roots;
    roots.reserve(n);
    for (const auto& lin : factors) roots.push_back(K.neg(lin.coeff(0)));
    std::sort(roots.begin(), roots.end(),
              [&](const auto& a, const auto& b) {
                  return K.lex_cmp(a, b) == std::strong_ordering::less;
              });
    return roots;
}

}  // namespace irredpoly

#endif
