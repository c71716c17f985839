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
 * @file natural.hpp
 * @brief Arbitrary-precision non-negative integers and the small
 *        number-theoretic helpers the construction pipeline needs
 *        (trial-division factoring, valuations, multiplicative orders).
 *
 * Backed by GMP. Values are kept non-negative by convention; the helpers
 * below never produce negatives.
 */

#ifndef IRREDPOLY_NATURAL_HPP
#define IRREDPOLY_NATURAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irredpoly/errors.hpp"

namespace irredpoly {

using Natural = mpz_class;

/// Decimal text form: digits only, no separators, no leading zeros
/// (except "0" itself). This is the normative external format.
inline std::string natural_to_string(const Natural& n) { return n.get_str(10); }

/// Strict inverse of natural_to_string. Rejects empty strings, signs,
/// non-digits and redundant leading zeros.
inline Natural parse_natural(const std::string& text) {
    if (text.empty()) throw InvalidInputError("empty natural");
    if (text.size() > 1 && text[0] == '0')
        throw InvalidInputError("leading zeros in natural: " + text);
    for (char ch : text)
        if (ch < '0' || ch > '9')
            throw InvalidInputError("bad digit in natural: " + text);
    return Natural(text, 10);
}

inline Natural natural_pow(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline std::size_t bit_length(const Natural& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Miller–Rabin backed primality check. 40 rounds keep the error
/// probability below 2^-80 for the "probably prime" verdict.
inline bool is_probable_prime(const Natural& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Trial-division factorization, intended for desk-scale inputs (degrees,
/// small prime divisors, q - 1). Returns (prime, exponent) pairs with
/// nondecreasing primes; factor_integer(1) == {}.
inline std::vector<std::pair<Natural, unsigned>> factor_integer(const Natural& n) {
    if (n < 1) throw InvalidInputError("factor_integer requires n >= 1");
    std::vector<std::pair<Natural, unsigned>> out;
    Natural rest = n;
    auto strip = [&](const Natural& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (Natural p = 3; p * p <= rest; p += 2) strip(p);
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

/// Largest l with q^l | n.
inline unsigned valuation(const Natural& n, const Natural& q) {
    if (q < 2) throw InvalidInputError("valuation requires q >= 2");
    if (n < 1) throw InvalidInputError("valuation requires n >= 1");
    unsigned l = 0;
    Natural rest = n;
    while (rest % q == 0) {
        rest /= q;
        ++l;
    }
    return l;
}

/// Least k > 0 with a^k = 1 (mod q), for prime q and a not divisible by q.
/// Factors q - 1 by trial division, then strips primes from the exponent.
inline Natural multiplicative_order(const Natural& a, const Natural& q) {
    if (!is_probable_prime(q)) throw InvalidInputError("multiplicative_order: q must be prime");
    Natural base = a % q;
    if (base == 0) throw InvalidInputError("multiplicative_order: a is divisible by q");
    Natural ord = q - 1;
    for (const auto& [r, e] : factor_integer(q - 1)) {
        for (unsigned i = 0; i < e; ++i) {
            Natural cand = ord / r;
            Natural pw;
            mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), cand.get_mpz_t(), q.get_mpz_t());
            if (pw == 1)
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

}  // namespace irredpoly

#endif
