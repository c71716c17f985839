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
 * @file prime_field.hpp
 * @brief Validated prime moduli and F_p scalar arithmetic.
 *
 * Elements are least non-negative residues, always reduced. The element
 * order used everywhere for canonization is the integer order of those
 * residues.
 */

#ifndef IRREDPOLY_PRIME_FIELD_HPP
#define IRREDPOLY_PRIME_FIELD_HPP

#include <compare>
#include <string>
#include <utility>

#include "irredpoly/natural.hpp"
#include "irredpoly/rng.hpp"

namespace irredpoly {

/// A prime p >= 2, checked probabilistically at construction
/// (error probability below 2^-80).
class PrimeModulus {
   public:
    explicit PrimeModulus(Natural p) : p_(std::move(p)) {
        if (!is_probable_prime(p_))
            throw InvalidInputError("not a prime modulus: " + natural_to_string(p_));
    }

    const Natural& value() const { return p_; }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
        return a.p_ == b.p_;
    }

   private:
    Natural p_;
};

class Fp;

/// A reduced residue together with the field it belongs to. Arithmetic on
/// elements from different fields is a usage error and throws.
struct FpElem {
    Natural v;
    const Fp* field = nullptr;

    friend bool operator==(const FpElem& a, const FpElem& b);
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }
};

/// The field F_p. Field objects are immutable; all operations are pure, so
/// concurrent use needs no coordination. Elements hold a pointer to their
/// field, which must outlive them.
class Fp {
   public:
    using Elem = FpElem;

    explicit Fp(PrimeModulus m) : mod_(std::move(m)) {}
    explicit Fp(const Natural& p) : mod_(PrimeModulus(p)) {}

    const Natural& p() const { return mod_.value(); }
    const PrimeModulus& modulus() const { return mod_; }

    /// Field size and characteristic coincide here; extensions override both.
    const Natural& size() const { return mod_.value(); }
    const Natural& characteristic() const { return mod_.value(); }
    const Fp& prime_field() const { return *this; }

    bool same(const Fp& o) const { return this == &o || mod_ == o.mod_; }

    Elem make(Natural value) const {
        Natural r = value % p();
        if (r < 0) r += p();
        return Elem{std::move(r), this};
    }
    Elem zero() const { return Elem{Natural(0), this}; }
    Elem one() const { return make(1); }
    Elem from_prime(const Elem& a) const {
        check(a);
        return a;
    }
    Elem extract_prime(const Elem& a) const {
        check(a);
        return a;
    }

    bool is_zero(const Elem& a) const { return a.v == 0; }
    bool eq(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        return a.v == b.v;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Natural r = a.v + b.v;
        if (r >= p()) r -= p();
        return Elem{std::move(r), this};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Natural r = a.v - b.v;
        if (r < 0) r += p();
        return Elem{std::move(r), this};
    }
    Elem neg(const Elem& a) const {
        check(a);
        if (a.v == 0) return a;
        return Elem{p() - a.v, this};
    }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Natural r = a.v * b.v;
        r %= p();
        return Elem{std::move(r), this};
    }
    Elem inv(const Elem& a) const {
        check(a);
        if (a.v == 0) throw InvalidInputError("inversion of zero in F_p");
        Natural r;
        mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), p().get_mpz_t());
        return Elem{std::move(r), this};
    }

    /// a^e by square-and-multiply; 0^0 == 1 by convention.
    Elem pow(const Elem& a, const Natural& e) const {
        check(a);
        if (e < 0) throw InvalidInputError("negative exponent");
        Natural r;
        mpz_powm(r.get_mpz_t(), a.v.get_mpz_t(), e.get_mpz_t(), p().get_mpz_t());
        return Elem{std::move(r), this};
    }

    /// Integer order on least non-negative residues. Normative for all
    /// lexicographic comparisons downstream.
    std::strong_ordering lex_cmp(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        return mpz_cmp(a.v.get_mpz_t(), b.v.get_mpz_t()) <=> 0;
    }

    Elem sample(SeededRng& rng) const { return Elem{rng.below(p()), this}; }

    /// Number of elements enumerable; element_at(i) for i = 0..p-1 walks the
    /// field in ascending lexicographic (= integer) order.
    Natural enum_size() const { return p(); }
    Elem element_at(const Natural& index) const {
        if (index < 0 || index >= p()) throw InvalidInputError("element index out of range");
        return Elem{index, this};
    }

    std::string elem_to_text(const Elem& a) const {
        check(a);
        return natural_to_string(a.v);
    }
    Elem elem_from_text(const std::string& text) const {
        Natural n = parse_natural(text);
        if (n >= p()) throw InvalidInputError("residue out of range: " + text);
        return Elem{std::move(n), this};
    }

    void check(const Elem& a) const {
        if (a.field == nullptr || !same(*a.field))
            throw InvalidInputError("F_p element used with a mismatched modulus");
    }

   private:
    PrimeModulus mod_;
};

inline bool operator==(const FpElem& a, const FpElem& b) {
    if (a.field == nullptr || b.field == nullptr || !a.field->same(*b.field))
        throw InvalidInputError("comparing F_p elements from different fields");
    return a.v == b.v;
}

// Operator sugar; the heavy lifting stays in Fp so generic code can use one
// field interface for F_p and for extensions.
inline FpElem operator+(const FpElem& a, const FpElem& b) { return a.field->add(a, b); }
inline FpElem operator-(const FpElem& a, const FpElem& b) { return a.field->sub(a, b); }
inline FpElem operator*(const FpElem& a, const FpElem& b) { return a.field->mul(a, b); }
inline FpElem operator-(const FpElem& a) { return a.field->neg(a); }

/// a^e mod p as a standalone operation (square-and-multiply).
inline FpElem mod_pow(const FpElem& a, const Natural& e) { return a.field->pow(a, e); }

}  // namespace irredpoly

#endif
