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
 * @file ext_field.hpp
 * @brief Concrete extension fields B[X]/(h(X)) with h monic irreducible,
 *        coordinate (Phi) maps, lexicographic element order, conjugates,
 *        minimal polynomials from conjugates, and traces to subfields.
 *
 * Ext<Fp> is a plain extension of a prime field; Ext<Ext<Fp>> is the one
 * tower shape the pipeline needs (a binomial or Artin-Schreier step over a
 * single extension base). The step modulus is verified irreducible at
 * construction.
 *
 * Element coordinates are ascending (coordinate i multiplies X^i). The
 * normative lexicographic element order compares coordinates from the
 * highest index down, recursing into the base field's order, which makes
 * ascending enumeration index = ascending lex order.
 */

#ifndef IRREDPOLY_EXT_FIELD_HPP
#define IRREDPOLY_EXT_FIELD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "irredpoly/factorize.hpp"
#include "irredpoly/poly.hpp"

namespace irredpoly {

template <class B>
class Ext;

template <class B>
struct ExtElem {
    std::vector<typename B::Elem> c;  // exactly deg(h) coordinates, reduced
    const Ext<B>* field = nullptr;

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        if (a.field == nullptr || b.field == nullptr || !a.field->same(*b.field))
            throw InvalidInputError("comparing extension elements from different fields");
        return a.field->eq(a, b);
    }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }
};

template <class B>
class Ext {
   public:
    using Base = B;
    using Elem = ExtElem<B>;

    /// Builds B[X]/(h). h must be monic of degree >= 1; unless the caller
    /// asserts otherwise it is verified irreducible over B here.
    Ext(const B& base, Poly<B> h, bool verify_irreducible = true)
        : base_(&base), h_(std::move(h)) {
        if (h_.degree() < 1 || !h_.is_monic())
            throw InvalidInputError("extension modulus must be monic of degree >= 1");
        if (!base.same(h_.field()))
            throw InvalidInputError("extension modulus context mismatch");
        if (verify_irreducible && !rabin_is_irreducible(h_))
            throw InvalidInputError("extension modulus is reducible");
        mpz_pow_ui(size_.get_mpz_t(), base.size().get_mpz_t(),
                   static_cast<unsigned long>(h_.degree()));
    }

    const B& base() const { return *base_; }
    const Poly<B>& modulus() const { return h_; }
    std::size_t deg() const { return static_cast<std::size_t>(h_.degree()); }
    const Natural& size() const { return size_; }
    const Natural& characteristic() const { return base_->characteristic(); }
    const Fp& prime_field() const { return base_->prime_field(); }

    bool same(const Ext& o) const {
        if (this == &o) return true;
        return base_->same(*o.base_) && h_ == o.h_;
    }

    Elem zero() const { return Elem{std::vector<typename B::Elem>(deg(), base_->zero()), this}; }
    Elem one() const { return make(Natural(1)); }
    Elem make(const Natural& n) const { return from_prime(prime_field().make(n)); }

    /// Embeds a prime-subfield element as a constant.
    Elem from_prime(const FpElem& a) const {
        auto z = zero();
        z.c[0] = base_->from_prime(a);
        return z;
    }

    /// Inverse of from_prime; verifies the element really is a constant
    /// embedding of the prime subfield.
    FpElem extract_prime(const Elem& a) const {
        check(a);
        for (std::size_t i = 1; i < a.c.size(); ++i)
            if (!base_->is_zero(a.c[i]))
                throw VerificationError("element does not lie in the prime subfield");
        return base_->extract_prime(a.c[0]);
    }

    /// The residue class of X, i.e. the canonical generator.
    Elem generator() const { return from_poly(Poly<B>::x(*base_)); }

    Elem from_poly(const Poly<B>& f) const {
        Poly<B> r = poly_mod(f, h_);
        std::vector<typename B::Elem> c(deg(), base_->zero());
        for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
        return Elem{std::move(c), this};
    }
    Poly<B> to_poly(const Elem& a) const {
        check(a);
        return Poly<B>(*base_, a.c);
    }
    Elem from_coords(std::vector<typename B::Elem> c) const {
        if (c.size() != deg()) throw InvalidInputError("wrong coordinate count");
        for (const auto& e : c) base_->check(e);
        return Elem{std::move(c), this};
    }

    bool is_zero(const Elem& a) const {
        check(a);
        for (const auto& e : a.c)
            if (!base_->is_zero(e)) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!base_->eq(a.c[i], b.c[i])) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        std::vector<typename B::Elem> c(deg(), base_->zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base_->add(a.c[i], b.c[i]);
        return Elem{std::move(c), this};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        std::vector<typename B::Elem> c(deg(), base_->zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base_->sub(a.c[i], b.c[i]);
        return Elem{std::move(c), this};
    }
    Elem neg(const Elem& a) const {
        check(a);
        std::vector<typename B::Elem> c(deg(), base_->zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base_->neg(a.c[i]);
        return Elem{std::move(c), this};
    }

    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        const std::size_t k = deg();
        if (k == 1) {
            // Elements are constants; no reduction needed.
            std::vector<typename B::Elem> c;
            c.push_back(base_->mul(a.c[0], b.c[0]));
            return Elem{std::move(c), this};
        }
        if constexpr (std::is_same_v<B, Fp>) {
            std::vector<Natural> acc(2 * k - 1);
            for (std::size_t i = 0; i < k; ++i) {
                if (a.c[i].v == 0) continue;
                for (std::size_t j = 0; j < k; ++j)
                    mpz_addmul(acc[i + j].get_mpz_t(), a.c[i].v.get_mpz_t(),
                               b.c[j].v.get_mpz_t());
            }
            detail::fp_rem_monic_kernel(*base_, acc, h_.coeffs());
            acc.resize(k, Natural(0));
            std::vector<FpElem> c;
            c.reserve(k);
            for (auto& n : acc) c.push_back(FpElem{std::move(n), base_});
            return Elem{std::move(c), this};
        } else {
            std::vector<typename B::Elem> acc(2 * k - 1, base_->zero());
            for (std::size_t i = 0; i < k; ++i) {
                if (base_->is_zero(a.c[i])) continue;
                for (std::size_t j = 0; j < k; ++j)
                    acc[i + j] = base_->add(acc[i + j], base_->mul(a.c[i], b.c[j]));
            }
            // Reduce by the monic step modulus.
            for (std::size_t top = acc.size(); top-- > k;) {
                if (base_->is_zero(acc[top])) continue;
                for (std::size_t j = 0; j < k; ++j)
                    acc[top - k + j] =
                        base_->sub(acc[top - k + j], base_->mul(acc[top], h_.coeff(j)));
            }
            acc.resize(k);
            return Elem{std::move(acc), this};
        }
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw InvalidInputError("inversion of zero in extension field");
        auto e = poly_egcd(to_poly(a), h_);
        if (e.g.degree() != 0)
            throw VerificationError("non-invertible element; modulus not irreducible?");
        return from_poly(e.u.scaled(base_->inv(e.g.coeff(0))));
    }

    Elem pow(const Elem& a, const Natural& e) const {
        check(a);
        if (e < 0) throw InvalidInputError("negative exponent");
        Elem result = one();
        const std::size_t bits = bit_length(e);
        for (std::size_t i = bits; i-- > 0;) {
            result = mul(result, result);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
        }
        return result;
    }

    /// Coordinates compared from the highest index down, each by the base
    /// field's lexicographic order.
    std::strong_ordering lex_cmp(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        for (std::size_t i = a.c.size(); i-- > 0;) {
            auto c = base_->lex_cmp(a.c[i], b.c[i]);
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    Elem sample(SeededRng& rng) const {
        std::vector<typename B::Elem> c;
        c.reserve(deg());
        for (std::size_t i = 0; i < deg(); ++i) c.push_back(base_->sample(rng));
        return Elem{std::move(c), this};
    }

    Natural enum_size() const { return size_; }

    /// element_at(i) for ascending i walks the field in ascending
    /// lexicographic order (coordinates are the base-|B| digits of i).
    Elem element_at(const Natural& index) const {
        if (index < 0 || index >= size_) throw InvalidInputError("element index out of range");
        Natural rest = index;
        const Natural s = base_->enum_size();
        std::vector<typename B::Elem> c;
        c.reserve(deg());
        for (std::size_t i = 0; i < deg(); ++i) {
            c.push_back(base_->element_at(rest % s));
            rest /= s;
        }
        return Elem{std::move(c), this};
    }

    /// "[a0 a1 ... a(k-1)]", ascending coordinates. Normative over F_p bases.
    std::string elem_to_text(const Elem& a) const {
        check(a);
        std::string out = "[";
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (i) out += ' ';
            out += base_->elem_to_text(a.c[i]);
        }
        out += ']';
        return out;
    }

    Elem elem_from_text(const std::string& text) const {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw InvalidInputError("extension element text must be bracketed: " + text);
        std::string inner = text.substr(1, text.size() - 2);
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < inner.size()) {
            if (inner[i] == ' ') {
                ++i;
                continue;
            }
            std::size_t end = i;
            int depth = 0;
            while (end < inner.size() && (depth > 0 || inner[end] != ' ')) {
                if (inner[end] == '[') ++depth;
                if (inner[end] == ']') --depth;
                ++end;
            }
            tokens.push_back(inner.substr(i, end - i));
            i = end;
        }
        if (tokens.size() != deg())
            throw InvalidInputError("wrong coordinate count in element text: " + text);
        std::vector<typename B::Elem> c;
        c.reserve(deg());
        for (const auto& t : tokens) c.push_back(base_->elem_from_text(t));
        return Elem{std::move(c), this};
    }

    void check(const Elem& a) const {
        if (a.field == nullptr || !same(*a.field))
            throw InvalidInputError("extension element used with a mismatched field");
        if (a.c.size() != deg())
            throw InvalidInputError("extension element has wrong coordinate count");
    }

   private:
    const B* base_;
    Poly<B> h_;
    Natural size_;
};

/// The n successive base_size-power images beta, beta^s, beta^(s^2), ...
template <class F>
std::vector<typename F::Elem> conjugates(const typename F::Elem& beta, const Natural& base_size,
                                         std::size_t n) {
    const F& K = *beta.field;
    std::vector<typename F::Elem> out;
    out.reserve(n);
    typename F::Elem cur = beta;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) cur = K.pow(cur, base_size);
        out.push_back(cur);
    }
    return out;
}

template <class F>
bool pairwise_distinct(const F& K, const std::vector<typename F::Elem>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (K.eq(xs[i], xs[j])) return false;
    return true;
}

/// prod (X - c) over an already-computed, pairwise-distinct conjugate list;
/// every coefficient is verified fixed by the base_size power map and
/// coerced down to the prime field. base_size must be the characteristic
/// (the only base the pipeline descends to).
template <class F>
Poly<Fp> min_poly_from_conjugate_list(const F& K, const std::vector<typename F::Elem>& conj,
                                      const Natural& base_size) {
    const Fp& P = K.prime_field();
    if (base_size != K.characteristic())
        throw InvalidInputError("min_poly_from_conjugate_list: base must be the prime subfield");
    if (conj.empty()) throw InvalidInputError("min_poly_from_conjugate_list: empty list");

    // Multiply the linear factors out; coefficients stay in the ambient
    // field. In-place top-down update: new[i] = old[i-1] - c * old[i].
    std::vector<typename F::Elem> acc;
    acc.push_back(K.one());
    for (const auto& c : conj) {
        acc.push_back(K.zero());
        for (std::size_t i = acc.size(); i-- > 0;) {
            auto prod = K.mul(c, acc[i]);
            auto lower = (i == 0) ? K.zero() : acc[i - 1];
            acc[i] = K.sub(lower, prod);
        }
    }
    std::vector<FpElem> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& e : acc) {
        if (!K.eq(K.pow(e, base_size), e))
            throw VerificationError("minimal polynomial coefficient escapes the base field");
        if constexpr (std::is_same_v<F, Fp>)
            coeffs.push_back(e);
        else
            coeffs.push_back(K.extract_prime(e));
    }
    Poly<Fp> result(P, std::move(coeffs));
    if (result.degree() != static_cast<int>(conj.size()) || !result.is_monic())
        throw VerificationError("minimal polynomial has unexpected shape");
    return result;
}

/// prod (X - beta^(base_size^i)) for i < n. The n conjugates must be
/// pairwise distinct (otherwise the degree would collapse).
template <class F>
Poly<Fp> min_poly_from_conjugates(const typename F::Elem& beta, const Natural& base_size,
                                  std::size_t n) {
    const F& K = *beta.field;
    auto conj = conjugates<F>(beta, base_size, n);
    if (!pairwise_distinct(K, conj))
        throw InvalidInputError("min_poly_from_conjugates: conjugates not distinct");
    return min_poly_from_conjugate_list(K, conj, base_size);
}

/// sum of gamma^(sub_size^i) for i < steps; the result is verified fixed by
/// the sub_size power map.
template <class F>
typename F::Elem trace_to_subfield(const typename F::Elem& gamma, const Natural& sub_size,
                                   std::size_t steps) {
    const F& K = *gamma.field;
    if (steps < 1) throw InvalidInputError("trace_to_subfield: steps must be >= 1");
    typename F::Elem term = gamma;
    typename F::Elem acc = gamma;
    for (std::size_t i = 1; i < steps; ++i) {
        term = K.pow(term, sub_size);
        acc = K.add(acc, term);
    }
    if (!K.eq(K.pow(acc, sub_size), acc))
        throw VerificationError("trace is not fixed by the subfield power map");
    return acc;
}

using FpExt = Ext<Fp>;
using FpTower = Ext<Ext<Fp>>;

/// Lifts a prime-field polynomial coefficientwise into an extension.
template <class B>
Poly<Ext<B>> lift_poly(const Ext<B>& K, const Poly<Fp>& f) {
    std::vector<typename Ext<B>::Elem> c;
    c.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) c.push_back(K.from_prime(e));
    return Poly<Ext<B>>(K, std::move(c));
}

}  // namespace irredpoly

#endif
