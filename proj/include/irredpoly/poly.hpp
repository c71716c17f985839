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
 * @file poly.hpp
 * @brief Dense univariate polynomials over an abstract field context.
 *
 * Coefficients are stored ascending (index i holds the coefficient of X^i)
 * and the representation is normalized: the highest stored coefficient is
 * nonzero, the zero polynomial stores nothing. Multiplication is schoolbook;
 * over F_p it runs on raw GMP limbs with one modular reduction per output
 * coefficient.
 *
 * Normative text form over F_p: space-separated decimal coefficients,
 * ascending ("63 0 1" is X^2 + 63). Over an extension: bracketed ascending
 * coordinate vectors, ascending by degree ("[0 1] [1 0]" is X + t).
 */

#ifndef IRREDPOLY_POLY_HPP
#define IRREDPOLY_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "irredpoly/prime_field.hpp"

namespace irredpoly {

namespace detail {

/// c[i+j] += a[i] * b[j] on raw mpz values, one reduction per coefficient.
inline std::vector<FpElem> fp_mul_kernel(const Fp& K, const std::vector<FpElem>& a,
                                         const std::vector<FpElem>& b) {
    std::vector<Natural> acc(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].v.get_mpz_t(), b[j].v.get_mpz_t());
    }
    std::vector<FpElem> out;
    out.reserve(acc.size());
    for (auto& n : acc) {
        n %= K.p();
        out.push_back(FpElem{std::move(n), &K});
    }
    return out;
}

/// In-place remainder of c modulo the monic polynomial h, both over F_p.
/// Intermediate values go negative; everything is reduced at the end.
inline void fp_rem_monic_kernel(const Fp& K, std::vector<Natural>& c,
                                const std::vector<FpElem>& h) {
    const std::size_t k = h.size() - 1;  // deg h
    while (c.size() > k) {
        Natural lead = c.back() % K.p();
        c.pop_back();
        if (lead == 0) continue;
        const std::size_t base = c.size() - k;
        for (std::size_t j = 0; j < k; ++j)
            mpz_submul(c[base + j].get_mpz_t(), lead.get_mpz_t(), h[j].v.get_mpz_t());
    }
    for (auto& n : c) {
        n %= K.p();
        if (n < 0) n += K.p();
    }
}

}  // namespace detail

template <class F>
class Poly {
   public:
    using Field = F;
    using Elem = typename F::Elem;

    explicit Poly(const F& field) : field_(&field) {}
    Poly(const F& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) {
        for (const Elem& e : c_) field.check(e);
        normalize();
    }

    static Poly zero(const F& field) { return Poly(field); }
    static Poly one(const F& field) { return constant(field, field.one()); }
    static Poly constant(const F& field, Elem e) {
        std::vector<Elem> c;
        c.push_back(std::move(e));
        return Poly(field, std::move(c));
    }
    /// The polynomial X.
    static Poly x(const F& field) {
        std::vector<Elem> c;
        c.push_back(field.zero());
        c.push_back(field.one());
        return Poly(field, std::move(c));
    }
    /// X^n - c, the binomials this pipeline lives on.
    static Poly binomial(const F& field, std::size_t n, const Elem& root_power) {
        std::vector<Elem> c(n + 1, field.zero());
        c[0] = field.neg(root_power);
        c[n] = field.one();
        return Poly(field, std::move(c));
    }

    const F& field() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const {
        return !c_.empty() && field_->eq(c_.back(), field_->one());
    }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    const Elem& lead() const {
        if (c_.empty()) throw InvalidInputError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_->eq(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        const F& K = *a.field_;
        std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), K.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = K.add(a.coeff(i), b.coeff(i));
        return Poly(K, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        const F& K = *a.field_;
        std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), K.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = K.sub(a.coeff(i), b.coeff(i));
        return Poly(K, std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        const F& K = *a.field_;
        std::vector<Elem> c = a.c_;
        for (Elem& e : c) e = K.neg(e);
        return Poly(K, std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        const F& K = *a.field_;
        if (a.is_zero() || b.is_zero()) return Poly(K);
        if constexpr (std::is_same_v<F, Fp>) {
            return Poly(K, detail::fp_mul_kernel(K, a.c_, b.c_));
        } else {
            std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, K.zero());
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (K.is_zero(a.c_[i])) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    c[i + j] = K.add(c[i + j], K.mul(a.c_[i], b.c_[j]));
            }
            return Poly(K, std::move(c));
        }
    }

    Poly scaled(const Elem& s) const {
        const F& K = *field_;
        std::vector<Elem> c = c_;
        for (Elem& e : c) e = K.mul(e, s);
        return Poly(K, std::move(c));
    }

    Poly monic() const {
        if (is_zero()) throw InvalidInputError("monic of zero polynomial");
        if (is_monic()) return *this;
        return scaled(field_->inv(c_.back()));
    }

    Elem eval(const Elem& x) const {
        const F& K = *field_;
        Elem acc = K.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = K.add(K.mul(acc, x), c_[i]);
        return acc;
    }

   private:
    void normalize() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }
    void check_same_field(const Poly& o) const {
        if (field_ != o.field_ && !field_->same(*o.field_))
            throw InvalidInputError("polynomial context mismatch");
    }

    const F* field_;
    std::vector<Elem> c_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    const F& K = a.field();
    if (b.is_zero()) throw InvalidInputError("polynomial division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly<F>(K), a};
    const auto inv_lead = K.inv(b.lead());
    std::vector<typename F::Elem> rem(a.coeffs());
    std::vector<typename F::Elem> quo(a.degree() - b.degree() + 1, K.zero());
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (K.is_zero(rem[i])) continue;
        auto q = K.mul(rem[i], inv_lead);
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = K.sub(rem[i - db + j], K.mul(q, b.coeff(j)));
        quo[i - db] = std::move(q);
    }
    return {Poly<F>(K, std::move(quo)), Poly<F>(K, std::move(rem))};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& m) {
    if constexpr (std::is_same_v<F, Fp>) {
        // Fast path for a monic modulus over F_p.
        if (m.is_monic() && m.degree() >= 1 && a.degree() >= m.degree()) {
            std::vector<Natural> c;
            c.reserve(a.coeffs().size());
            for (const auto& e : a.coeffs()) c.push_back(e.v);
            detail::fp_rem_monic_kernel(a.field(), c, m.coeffs());
            std::vector<FpElem> out;
            out.reserve(c.size());
            for (auto& n : c) out.push_back(FpElem{std::move(n), &a.field()});
            return Poly<F>(a.field(), std::move(out));
        }
    }
    return poly_divmod(a, m).second;
}

/// Monic greatest common divisor; gcd(f, 0) = monic(f).
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero())
        throw InvalidInputError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b.monic());
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
struct PolyEgcd {
    Poly<F> g;  // monic gcd
    Poly<F> u;  // u*a + v*b = g
    Poly<F> v;
};

template <class F>
PolyEgcd<F> poly_egcd(const Poly<F>& a, const Poly<F>& b) {
    const F& K = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0 = Poly<F>::one(K), u1 = Poly<F>(K);
    Poly<F> v0 = Poly<F>(K), v1 = Poly<F>::one(K);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly<F> u2 = u0 - q * u1;
        Poly<F> v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) throw InvalidInputError("egcd of two zero polynomials");
    auto scale = K.inv(r0.lead());
    return PolyEgcd<F>{r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

/// a^e mod m by square-and-multiply, scanning exponent bits from the top.
template <class F>
Poly<F> poly_powmod(const Poly<F>& a, const Natural& e, const Poly<F>& m) {
    if (m.degree() < 1) throw InvalidInputError("powmod modulus must have degree >= 1");
    if (e < 0) throw InvalidInputError("negative exponent");
    const F& K = a.field();
    Poly<F> base = poly_mod(a, m);
    Poly<F> result = poly_mod(Poly<F>::one(K), m);
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mod(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(result * base, m);
    }
    return result;
}

/// X^(Q^i) mod m, Q the coefficient field size, computed as i successive
/// Q-th power exponentiations of the previous result.
template <class F>
Poly<F> frobenius_power(const Poly<F>& m, std::uint64_t i) {
    if (m.degree() < 1) throw InvalidInputError("frobenius modulus must have degree >= 1");
    const F& K = m.field();
    Poly<F> r = poly_mod(Poly<F>::x(K), m);
    const Natural q = K.size();
    for (std::uint64_t step = 0; step < i; ++step) r = poly_powmod(r, q, m);
    return r;
}

/// Res(f, g) = prod g(alpha_j) over the roots alpha_j of f (with
/// multiplicity), for monic f of degree >= 1. Euclidean remainder sequence;
/// the convention is fixed so results are bit-exact deterministic.
template <class F>
typename F::Elem resultant(const Poly<F>& f, const Poly<F>& g) {
    const F& K = f.field();
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInputError("resultant: f must be monic of degree >= 1");
    typename F::Elem acc = K.one();
    Poly<F> a = f;  // monic throughout
    Poly<F> b = g;
    for (;;) {
        Poly<F> r = poly_mod(b, a);
        if (r.is_zero()) return K.zero();
        if (r.degree() == 0) {
            // prod of a constant over deg(a) roots
            return K.mul(acc, K.pow(r.coeff(0), Natural(a.degree())));
        }
        // prod_i r(alpha_i) = lc(r)^deg(a) * (-1)^(deg a * deg r) * prod_j a(gamma_j)
        typename F::Elem factor = K.pow(r.lead(), Natural(a.degree()));
        if ((static_cast<long>(a.degree()) * r.degree()) % 2 != 0) factor = K.neg(factor);
        acc = K.mul(acc, factor);
        Poly<F> next = r.monic();
        b = std::move(a);
        a = std::move(next);
    }
}

/// g(X + c): synthetic Taylor shift by Horner in (X + c).
template <class F>
Poly<F> compose_linear_shift(const Poly<F>& g, const typename F::Elem& c) {
    const F& K = g.field();
    Poly<F> result(K);
    const Poly<F> shift = Poly<F>(K, {c, K.one()});
    for (int i = g.degree(); i >= 0; --i)
        result = result * shift + Poly<F>::constant(K, g.coeff(i));
    return result;
}

template <class F>
Poly<F> poly_derivative(const Poly<F>& f) {
    const F& K = f.field();
    if (f.degree() < 1) return Poly<F>(K);
    std::vector<typename F::Elem> c;
    c.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i) {
        typename F::Elem n = K.make(Natural(i));
        c.push_back(K.mul(f.coeff(i), n));
    }
    return Poly<F>(K, std::move(c));
}

/// Lexicographic order on monic polynomials of equal degree: coefficients
/// are compared from degree d-1 down to the constant term (the shared
/// leading 1 carries no information), each by the coefficient field's
/// lexicographic element order. Normative for every canonical choice.
template <class F>
std::strong_ordering lex_compare_poly(const Poly<F>& g, const Poly<F>& h) {
    const F& K = g.field();
    if (!K.same(h.field())) throw InvalidInputError("lex_compare_poly: context mismatch");
    if (g.degree() != h.degree())
        throw InvalidInputError("lex_compare_poly: degree mismatch");
    if (g.degree() < 0 || !g.is_monic() || !h.is_monic())
        throw InvalidInputError("lex_compare_poly: operands must be monic");
    for (int i = g.degree() - 1; i >= 0; --i) {
        auto c = K.lex_cmp(g.coeff(i), h.coeff(i));
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

template <class F>
bool lex_poly_less(const Poly<F>& g, const Poly<F>& h) {
    return lex_compare_poly(g, h) == std::strong_ordering::less;
}

/// Single linear scan keeping the running minimum.
template <class F>
Poly<F> lex_min_poly(const std::vector<Poly<F>>& polys) {
    if (polys.empty()) throw InvalidInputError("lex_min_poly: empty list");
    const Poly<F>* best = &polys.front();
    for (std::size_t i = 1; i < polys.size(); ++i)
        if (lex_poly_less(polys[i], *best)) best = &polys[i];
    return *best;
}

template <class F>
std::string poly_to_text(const Poly<F>& f) {
    if (f.is_zero()) return f.field().elem_to_text(f.field().zero());
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) out += ' ';
        out += f.field().elem_to_text(f.coeff(i));
    }
    return out;
}

/// Parses the normative text form. Coefficient tokens are either plain
/// decimals (prime field) or bracketed vectors (extension field).
template <class F>
Poly<F> poly_from_text(const F& field, const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
            ++i;
            continue;
        }
        if (text[i] == '[') {
            auto close = text.find(']', i);
            if (close == std::string::npos)
                throw InvalidInputError("unbalanced '[' in polynomial text");
            tokens.push_back(text.substr(i, close - i + 1));
            i = close + 1;
        } else {
            auto end = i;
            while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
                   text[end] != '\n')
                ++end;
            tokens.push_back(text.substr(i, end - i));
            i = end;
        }
    }
    if (tokens.empty()) throw InvalidInputError("empty polynomial text");
    std::vector<typename F::Elem> coeffs;
    coeffs.reserve(tokens.size());
    for (const auto& t : tokens) coeffs.push_back(field.elem_from_text(t));
    return Poly<F>(field, std::move(coeffs));
}

}  // namespace irredpoly

#endif
