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
 * @file construct.hpp
 * @brief Pseudo-deterministic construction of canonical irreducible
 *        polynomials over F_p and F_{p^k}.
 *
 * The randomized ingredient is equal-degree factorization; every choice
 * among factors or roots is canonized by the normative lexicographic
 * order, so a given (p, k, d) always yields the same polynomial, bit for
 * bit, whatever the seed. Seeds only move runtimes.
 *
 * Construction plan for degree d over F_p:
 *   - split d into prime powers q^e;
 *   - for q != p: build the splitting field K of X^q - 1 (lex-min factor h
 *     of the q-th cyclotomic polynomial), walk the canonical q-th
 *     non-residue chain in K (repeatedly replacing alpha by its lex-min
 *     q-th root); the exit alpha makes X^(q^e) - alpha irreducible over K;
 *     a trace descent into the degree-q^e subfield plus a minimal
 *     polynomial brings the piece down to F_p;
 *   - for q == p: climb an Artin-Schreier ladder X^p - X - c, with c the
 *     first element of nonzero absolute trace in ascending lex order;
 *   - fold the per-prime-power pieces with composed sums (root sets add),
 *     ascending in q. The folding order is part of the output contract.
 *
 * Every emitted polynomial is re-checked with Rabin's test before return.
 */

#ifndef IRREDPOLY_CONSTRUCT_HPP
#define IRREDPOLY_CONSTRUCT_HPP

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irredpoly/ext_field.hpp"

namespace irredpoly {

inline constexpr const char* kRecordFormatVersion = "1";

/// Generalized Euler criterion: alpha is a q-th residue iff
/// alpha^((Q-1)/q) == 1, Q the field size.
template <class F>
bool qth_residue_test(const typename F::Elem& alpha, const Natural& q) {
    const F& K = *alpha.field;
    if (K.is_zero(alpha)) throw InvalidInputError("qth_residue_test: alpha must be nonzero");
    const Natural unit_order = K.size() - 1;
    if (q < 2 || unit_order % q != 0)
        throw InvalidInputError("qth_residue_test: q does not divide the unit group order");
    return K.eq(K.pow(alpha, unit_order / q), K.one());
}

namespace detail {

/// Shared square-root descent: alpha starts at -1 and is replaced by its
/// lexicographically smallest square root until it is a non-residue.
/// Returns the whole alpha chain; the iteration count is asserted against
/// the 2-adic valuation of the unit group order.
template <class F>
std::vector<typename F::Elem> qnr_descent_chain(const F& K, SeededRng& rng) {
    const unsigned ell = valuation(K.size() - 1, Natural(2));
    std::vector<typename F::Elem> chain;
    chain.push_back(K.make(K.characteristic() - 1));  // -1
    unsigned iterations = 0;
    while (qth_residue_test<F>(chain.back(), Natural(2))) {
        if (++iterations > ell)
            throw VerificationError("square-root descent exceeded its valuation bound");
        auto roots = binomial_roots<F>(Natural(2), chain.back(), rng);
        chain.push_back(roots.front());
    }
    return chain;
}

inline std::atomic<std::uint64_t> g_trace_sweep_fallbacks{0};

}  // namespace detail

/// Times the trace-descent fallback sweep was ever needed (expected: 0; it
/// is instrumented because its guarantee lives in an external proof).
inline std::uint64_t trace_sweep_fallback_count() {
    return detail::g_trace_sweep_fallbacks.load();
}

struct QnrResult {
    std::vector<FpElem> chain;  // alpha values, from -1 to the first non-residue
    Poly<Fp> poly;              // X^2 - final alpha
};

/// Canonical quadratic non-residue in F_p (p odd) and the quadratic
/// irreducible it certifies. Chain and output are seed-independent.
inline QnrResult canonical_qnr(const Fp& P, SeededRng& rng) {
    if (P.p() == 2) throw InvalidInputError("canonical_qnr requires an odd prime");
    auto chain = detail::qnr_descent_chain(P, rng);
    Poly<Fp> out = Poly<Fp>::binomial(P, 2, chain.back());
    if (!rabin_is_irreducible(out))
        throw VerificationError("canonical_qnr produced a reducible polynomial");
    return QnrResult{std::move(chain), std::move(out)};
}

/// Per-prime data for the reduction: the canonical splitting-field modulus
/// h (the lex-min degree-k factor of X^(q-1) + ... + 1) and the canonical
/// q-th non-residue alpha in F_p[X]/h.
struct QthData {
    Natural q;
    unsigned k;                            // order of p mod q
    Poly<Fp> h;                            // splitting-field modulus
    std::shared_ptr<const FpExt> field;    // K = F_p[X]/h
    FpExt::Elem alpha;                     // canonical q-th non-residue
    unsigned ell;                          // v_q(p^k - 1)
    unsigned iterations;                   // while-loop count
    std::vector<FpExt::Elem> alpha_chain;  // instrumentation
};

/// Builds QthData for prime q != p. Randomness is confined to the
/// equal-degree factorizations; h, alpha and the whole chain are canonical.
inline QthData canonical_qth_data(const Fp& P, const Natural& q, SeededRng& rng) {
    if (!is_probable_prime(q)) throw InvalidInputError("canonical_qth_data: q must be prime");
    if (q == P.p()) throw InvalidInputError("canonical_qth_data: q must differ from p");
    if (!q.fits_ulong_p() || q.get_ui() > (1u << 20))
        throw InvalidInputError("canonical_qth_data: q too large");
    const auto qi = static_cast<std::size_t>(q.get_ui());

    const Natural k_nat = multiplicative_order(P.p(), q);
    const auto k = static_cast<unsigned>(k_nat.get_ui());

    // X^(q-1) + X^(q-2) + ... + X + 1 splits into (q-1)/k irreducibles of
    // degree k; the lex-min one is the canonical splitting-field modulus.
    std::vector<FpElem> ones(qi, P.one());
    Poly<Fp> cyclotomic(P, std::move(ones));
    auto factors = edf(cyclotomic, k, rng);
    if (factors.size() * k != qi - 1)
        throw VerificationError("cyclotomic factorization has the wrong factor count");

    Poly<Fp> h = lex_min_poly(factors);
    auto field = std::make_shared<const FpExt>(P, h);
    const unsigned ell = valuation(field->size() - 1, q);

    // alpha starts as the residue class of X (a primitive q-th root of
    // unity) and is replaced by its lex-min q-th root until it stops being
    // a q-th residue. Each replacement multiplies its order by exactly q,
    // so the loop runs at most ell times.
    FpExt::Elem alpha = field->generator();
    std::vector<FpExt::Elem> chain{alpha};
    unsigned iterations = 0;
    while (qth_residue_test<FpExt>(alpha, q)) {
        if (++iterations > ell)
            throw VerificationError("q-th root descent exceeded its valuation bound");
        auto roots = binomial_roots<FpExt>(q, alpha, rng);
        alpha = roots.front();
        chain.push_back(alpha);
    }
    return QthData{q,   k,          std::move(h),    std::move(field),
                   alpha, ell, iterations, std::move(chain)};
}

namespace detail {

/// X^n - a (n a power of the prime q) is irreducible over K exactly when a
/// is a q-th non-residue whose order carries the full q-valuation of |K*|
/// (one Euler test) and, should 4 divide n, |K| = 1 (mod 4).
template <class K>
void check_binomial_irreducible(const K& field, std::size_t n, const typename K::Elem& a,
                                const Natural& q) {
    if (qth_residue_test<K>(a, q))
        throw VerificationError("binomial step modulus fails the non-residue criterion");
    if (n % 4 == 0 && field.size() % 4 != 1)
        throw VerificationError("binomial step modulus fails the mod-4 criterion");
}

/// Closed-form powers of the root Z of a binomial tower L = K[Z]/(Z^n - a):
/// Z^t = a^(floor(t/n) mod |K*|) * Z^(t mod n). Keeps Frobenius chains and
/// trace sums cheap without modular composition.
template <class K>
class BinomialTower {
   public:
    explicit BinomialTower(const Ext<K>& L) : L_(&L) {
        const auto& h = L.modulus();
        n_ = static_cast<std::size_t>(h.degree());
        for (int i = 1; i < h.degree(); ++i)
            if (!L.base().is_zero(h.coeff(i)))
                throw InvalidInputError("BinomialTower: modulus is not a binomial");
        a_ = L.base().neg(h.coeff(0));
        unit_order_ = L.base().size() - 1;
        index_modulus_ = Natural(static_cast<unsigned long>(n_)) * unit_order_;
    }

    /// z^(p^s) * Z^(p^s) for z in K, z != 0. Pass K.one() for a plain
    /// Frobenius power of the root.
    typename Ext<K>::Elem frobenius_term(std::uint64_t s, const typename K::Elem& z) const {
        const K& B = L_->base();
        const Natural p = L_->characteristic();
        Natural reduced;  // p^s mod n|K*|
        const Natural s_nat(static_cast<unsigned long>(s));
        mpz_powm(reduced.get_mpz_t(), p.get_mpz_t(), s_nat.get_mpz_t(),
                 index_modulus_.get_mpz_t());
        const Natural r = reduced % Natural(static_cast<unsigned long>(n_));
        const Natural m = ((reduced - r) / Natural(static_cast<unsigned long>(n_))) % unit_order_;
        typename K::Elem coeff = B.pow(a_, m);
        if (!B.eq(z, B.one())) {
            // z^(p^s) with the exponent reduced mod |K*| (valid for z != 0).
            coeff = B.mul(coeff, B.pow(z, reduced % unit_order_));
        }
        auto out = L_->zero();
        out.c[static_cast<std::size_t>(r.get_ui())] = std::move(coeff);
        return out;
    }

    /// (Tr(z Z))^(p^j) = sum_i z^(p^(stride i + j)) Z^(p^(stride i + j)).
    typename Ext<K>::Elem trace_conjugate(std::size_t steps, std::uint64_t stride,
                                          std::uint64_t j, const typename K::Elem& z) const {
        auto acc = L_->zero();
        for (std::size_t i = 0; i < steps; ++i)
            acc = L_->add(acc, frobenius_term(stride * i + j, z));
        return acc;
    }

   private:
    const Ext<K>* L_;
    std::size_t n_;
    typename K::Elem a_;
    Natural unit_order_;    // |K| - 1
    Natural index_modulus_; // n * |K*|
};

/// Degree-q^e piece over F_p from a binomial tower L = K[Z]/(Z^n - alpha):
/// descend delta = Tr_{L/M}(z Z) into the degree-n subfield M and return
/// its minimal polynomial over F_p. z sweeps K in ascending lex order
/// starting from 1 until the conjugates of delta are distinct; the sweep
/// beyond z = 1 is never expected to trigger and is logged when it does.
template <class K>
Poly<Fp> trace_descent_min_poly(const Ext<K>& L, std::size_t n, std::size_t k_steps) {
    const K& B = L.base();
    const BinomialTower<K> tower(L);
    const Natural cap = std::min(B.enum_size(), Natural(4096));
    for (Natural idx(1); idx < cap; ++idx) {
        const typename K::Elem z = B.element_at(idx);
        if (B.is_zero(z)) continue;
        // Fixedness under the subfield power map: delta^(p^n) == delta.
        auto delta = tower.trace_conjugate(k_steps, n, 0, z);
        auto shifted = tower.trace_conjugate(k_steps, n, n, z);
        if (!L.eq(delta, shifted))
            throw VerificationError("trace is not fixed by the subfield power map");
        std::vector<typename Ext<K>::Elem> conj;
        conj.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            conj.push_back(tower.trace_conjugate(k_steps, n, j, z));
        if (!pairwise_distinct(L, conj)) {
            g_trace_sweep_fallbacks.fetch_add(1);
            std::fprintf(stderr,
                         "irredpoly: trace descent fallback sweep advanced past z index %s\n",
                         natural_to_string(idx).c_str());
            continue;
        }
        return min_poly_from_conjugate_list(L, conj, L.characteristic());
    }
    throw VerificationError("trace descent exhausted its candidate sweep");
}

}  // namespace detail

/// Monic irreducible of degree q^e over F_p built from QthData, q != p.
/// Deterministic given the data; internal factorizations never influence
/// the output. Rabin-verified before return.
inline Poly<Fp> prime_power_irreducible(const QthData& data, unsigned e, SeededRng& rng) {
    if (e < 1) throw InvalidInputError("prime_power_irreducible: e must be >= 1");
    const FpExt& K = *data.field;
    const Fp& P = K.base();
    const Natural n_nat = natural_pow(data.q, e);
    if (!n_nat.fits_ulong_p() || n_nat > Natural(1 << 20))
        throw InvalidInputError("prime_power_irreducible: degree too large");
    const auto n = static_cast<std::size_t>(n_nat.get_ui());

    Poly<Fp> out(P);
    if (data.q == 2) {
        const FpElem a0 = data.alpha.c[0];  // k == 1 whenever q == 2
        if (e == 1 || P.p() % 4 == 1) {
            // The binomial criterion holds over F_p directly.
            out = Poly<Fp>::binomial(P, n, a0);
        } else {
            // p = 3 (mod 4): 4 does not divide p - 1, so step through
            // K1 = F_p[Y]/(Y^2 - a0) first; 4 | p^2 - 1 always does.
            const FpExt K1(P, Poly<Fp>::binomial(P, 2, a0));
            auto chain = detail::qnr_descent_chain(K1, rng);
            const FpExt::Elem a1 = chain.back();
            detail::check_binomial_irreducible(K1, n / 2, a1, Natural(2));
            const FpTower L(K1, Poly<FpExt>::binomial(K1, n / 2, a1),
                            /*verify_irreducible=*/false);
            const detail::BinomialTower<FpExt> tower(L);
            std::vector<FpTower::Elem> conj;
            conj.reserve(n);
            for (std::size_t j = 0; j < n; ++j)
                conj.push_back(tower.frobenius_term(j, K1.one()));
            if (!pairwise_distinct(L, conj))
                throw VerificationError("binomial root conjugates are not distinct");
            out = min_poly_from_conjugate_list(L, conj, P.p());
        }
    } else if (data.k == 1) {
        // K is F_p itself; the binomial is already the minimal polynomial.
        out = Poly<Fp>::binomial(P, n, data.alpha.c[0]);
    } else {
        detail::check_binomial_irreducible(K, n, data.alpha, data.q);
        const FpTower L(K, Poly<FpExt>::binomial(K, n, data.alpha),
                        /*verify_irreducible=*/false);
        out = detail::trace_descent_min_poly(L, n, data.k);
    }

    if (out.degree() != static_cast<int>(n) || !out.is_monic() || !rabin_is_irreducible(out))
        throw VerificationError("prime_power_irreducible output failed verification");
    return out;
}

/// Monic irreducible of degree p^e over F_p, fully deterministic.
/// Base case X^p - X - 1; each further level extends by Y^p - Y - c where
/// c is the first element of the current field, in ascending lex order,
/// with nonzero absolute trace, then re-bases on the minimal polynomial of
/// the new generator.
inline Poly<Fp> artin_schreier_irreducible(const Fp& P, unsigned e) {
    if (e < 1) throw InvalidInputError("artin_schreier_irreducible: e must be >= 1");
    const Natural& p = P.p();
    const Natural deg_nat = natural_pow(p, e);
    if (!deg_nat.fits_ulong_p() || deg_nat > Natural(1 << 20))
        throw InvalidInputError("artin_schreier_irreducible: degree too large");

    const auto pi = static_cast<std::size_t>(p.get_ui());
    std::vector<FpElem> base_coeffs(pi + 1, P.zero());
    base_coeffs[0] = P.make(p - 1);  // -1
    base_coeffs[1] = P.make(p - 1);  // -X
    base_coeffs[pi] = P.one();
    Poly<Fp> g(P, std::move(base_coeffs));

    for (unsigned level = 2; level <= e; ++level) {
        const FpExt K(P, g);  // verified irreducible at construction
        const std::size_t dim = K.deg();
        // First element with nonzero absolute trace, ascending lex order.
        std::optional<FpExt::Elem> c;
        const Natural cap = std::min(K.enum_size(), Natural(65536));
        for (Natural idx(0); idx < cap; ++idx) {
            FpExt::Elem cand = K.element_at(idx);
            if (K.is_zero(cand)) continue;
            FpExt::Elem tr = trace_to_subfield<FpExt>(cand, p, dim);
            if (!K.is_zero(tr)) {
                c = std::move(cand);
                break;
            }
        }
        if (!c) throw VerificationError("no element of nonzero trace found");

        // Y^p - Y - c, irreducible over K by the Artin-Schreier criterion.
        std::vector<FpExt::Elem> step(pi + 1, K.zero());
        step[0] = K.neg(*c);
        step[1] = K.neg(K.one());
        step[pi] = K.one();
        const FpTower L(K, Poly<FpExt>(K, std::move(step)), /*verify_irreducible=*/false);
        g = min_poly_from_conjugates<FpTower>(L.generator(), p, dim * pi);
    }

    if (!rabin_is_irreducible(g))
        throw VerificationError("artin_schreier_irreducible output failed verification");
    return g;
}

/// Minimal polynomial of alpha + beta for roots alpha of f and beta of g,
/// with f, g monic irreducible of coprime degrees: the resultant in an
/// auxiliary variable of f(Y) and g(X - Y), evaluated with the fixed
/// convention as prod g(X - u_j) over the conjugates u_j of the generator
/// u of F_p[U]/(f). Monic of degree deg(f)deg(g), Rabin-verified.
inline Poly<Fp> composed_sum(const Poly<Fp>& f, const Poly<Fp>& g) {
    const Fp& P = f.field();
    if (f.degree() < 1 || g.degree() < 1 || !f.is_monic() || !g.is_monic())
        throw InvalidInputError("composed_sum: inputs must be monic of degree >= 1");
    if (std::gcd(f.degree(), g.degree()) != 1)
        throw InvalidInputError("composed_sum: degrees must be coprime");
    if (!rabin_is_irreducible(f) || !rabin_is_irreducible(g))
        throw InvalidInputError("composed_sum: inputs must be irreducible");

    // The smaller side supplies the field; the product is symmetric in the
    // two root sets, so this does not change the value.
    const Poly<Fp>& s = (f.degree() <= g.degree()) ? f : g;
    const Poly<Fp>& t = (f.degree() <= g.degree()) ? g : f;

    const FpExt M(P, s, /*verify_irreducible=*/false);  // just Rabin-checked above
    const auto conj = conjugates<FpExt>(M.generator(), P.p(), static_cast<std::size_t>(s.degree()));
    const Poly<FpExt> lifted = lift_poly(M, t);
    Poly<FpExt> acc = Poly<FpExt>::one(M);
    for (const auto& u : conj) acc = acc * compose_linear_shift(lifted, M.neg(u));

    std::vector<FpElem> coeffs;
    coeffs.reserve(acc.coeffs().size());
    for (const auto& e : acc.coeffs()) coeffs.push_back(M.extract_prime(e));
    Poly<Fp> out(P, std::move(coeffs));

    if (out.degree() != f.degree() * g.degree() || !out.is_monic() ||
        !rabin_is_irreducible(out))
        throw VerificationError("composed_sum output failed verification");
    return out;
}

/// Canonical irreducible polynomial of degree d over F_p. Randomness only
/// affects runtime. Optionally exposes the per-prime QthData for
/// instrumentation.
inline Poly<Fp> construct_irreducible_fp(const Fp& P, unsigned d, SeededRng& rng,
                                         std::vector<QthData>* collect = nullptr) {
    if (d < 1) throw InvalidInputError("construct_irreducible_fp: d must be >= 1");
    if (d == 1) return Poly<Fp>::x(P);

    std::vector<Poly<Fp>> pieces;
    for (const auto& [q, e] : factor_integer(Natural(d))) {
        if (q == P.p()) {
            pieces.push_back(artin_schreier_irreducible(P, e));
        } else {
            QthData data = canonical_qth_data(P, q, rng);
            pieces.push_back(prime_power_irreducible(data, e, rng));
            if (collect) collect->push_back(std::move(data));
        }
    }
    // factor_integer returns ascending primes; fold in that order.
    Poly<Fp> out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) out = composed_sum(out, pieces[i]);

    if (out.degree() != static_cast<int>(d) || !rabin_is_irreducible(out))
        throw VerificationError("construct_irreducible_fp output failed verification");
    return out;
}

/// Canonical irreducible polynomial of degree d over the extension field
/// ctx = F_p[X]/h: construct the canonical degree-dk polynomial over F_p,
/// lift it, split it over ctx into exactly k degree-d factors and keep the
/// lexicographically smallest.
inline Poly<FpExt> construct_irreducible_ext(const FpExt& ctx, unsigned d, SeededRng& rng) {
    if (d < 1) throw InvalidInputError("construct_irreducible_ext: d must be >= 1");
    const Fp& P = ctx.base();
    const auto k = static_cast<unsigned>(ctx.deg());
    Poly<Fp> f = construct_irreducible_fp(P, d * k, rng);
    Poly<FpExt> lifted = lift_poly(ctx, f);
    auto factors = edf(lifted, d, rng);
    if (factors.size() != k)
        throw VerificationError("extension split yielded an unexpected factor count");
    return lex_min_poly(factors);
}

/// Baseline trial-and-error sampler: uniformly random monic degree-d
/// polynomials until one passes Rabin's test. Not pseudo-deterministic.
/// Candidates with a factor of degree <= d/2 are discarded early by a
/// Frobenius-gcd scan, which rejects only reducibles; accepted candidates
/// still get the full test.
template <class F>
Poly<F> random_irreducible(const F& K, unsigned d, SeededRng& rng,
                           std::uint64_t* attempts = nullptr) {
    if (d < 1) throw InvalidInputError("random_irreducible: d must be >= 1");
    const Natural q = K.size();
    for (;;) {
        if (attempts) ++*attempts;
        std::vector<typename F::Elem> c;
        c.reserve(d + 1);
        for (unsigned i = 0; i < d; ++i) c.push_back(K.sample(rng));
        c.push_back(K.one());
        Poly<F> f(K, std::move(c));

        const Poly<F> x = Poly<F>::x(K);
        Poly<F> frob = poly_mod(x, f);
        bool small_factor = false;
        for (unsigned i = 1; 2 * i <= d && !small_factor; ++i) {
            frob = poly_powmod(frob, q, f);
            if (poly_gcd(frob - x, f).degree() != 0) small_factor = true;
        }
        if (small_factor) continue;
        if (rabin_is_irreducible(f)) return f;
    }
}

// ---------------------------------------------------------------------------
// Records

/// A cacheable, verifiable (p, k, d) -> canonical polynomial result.
/// seeds_consumed counts generator seeds used by the run; the retry
/// convention is realized as internal retries against one generator, so a
/// successful run always consumes exactly one seed and records stay
/// byte-identical across seeds.
struct ConstructionRecord {
    Natural p;
    unsigned k = 1;
    unsigned d = 1;
    std::optional<std::string> modulus_text;  // absent when k == 1
    std::string poly_text;
    bool verified = true;
    std::uint64_t seeds_consumed = 1;
    std::string version = kRecordFormatVersion;
};

/// End-to-end driver shared by the CLI and the bindings. For k > 1 the
/// representation modulus is the given one (validated) or the canonical
/// degree-k polynomial over F_p.
inline ConstructionRecord construct_record(const Natural& p, unsigned k, unsigned d,
                                           const std::optional<std::string>& modulus_text,
                                           SeededRng& rng) {
    if (k < 1) throw InvalidInputError("k must be >= 1");
    if (d < 1) throw InvalidInputError("d must be >= 1");
    if (modulus_text && k == 1)
        throw InvalidInputError("a modulus is only meaningful for k > 1");
    const Fp P(p);

    ConstructionRecord rec;
    rec.p = p;
    rec.k = k;
    rec.d = d;
    if (k == 1) {
        rec.poly_text = poly_to_text(construct_irreducible_fp(P, d, rng));
    } else {
        Poly<Fp> h(P);
        if (modulus_text) {
            h = poly_from_text(P, *modulus_text);
            if (h.degree() != static_cast<int>(k) || !h.is_monic())
                throw InvalidInputError("modulus must be monic of degree k");
            if (!rabin_is_irreducible(h)) throw InvalidInputError("modulus is reducible");
        } else {
            h = construct_irreducible_fp(P, k, rng);
        }
        const FpExt ctx(P, h, /*verify_irreducible=*/false);  // checked just above
        rec.modulus_text = poly_to_text(h);
        rec.poly_text = poly_to_text(construct_irreducible_ext(ctx, d, rng));
    }
    return rec;
}

}  // namespace irredpoly

#endif
