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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "irredpoly/prime_field.hpp"
#include "irredpoly/rng.hpp"

using namespace irredpoly;

TEST_CASE("natural text form is strict") {
    CHECK(natural_to_string(Natural(0)) == "0");
    CHECK(natural_to_string(Natural("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK(parse_natural("0") == 0);
    CHECK(parse_natural("907") == 907);
    CHECK_THROWS_AS(parse_natural(""), InvalidInputError);
    CHECK_THROWS_AS(parse_natural("007"), InvalidInputError);
    CHECK_THROWS_AS(parse_natural("-3"), InvalidInputError);
    CHECK_THROWS_AS(parse_natural("12x"), InvalidInputError);
}

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(PrimeModulus(Natural(2)));
    CHECK_NOTHROW(PrimeModulus(Natural(73)));
    CHECK_NOTHROW(PrimeModulus(Natural("2147483647")));
    CHECK_NOTHROW(PrimeModulus(Natural("2305843009213693951")));
    CHECK_THROWS_AS(PrimeModulus(Natural(1)), InvalidInputError);
    CHECK_THROWS_AS(PrimeModulus(Natural(4)), InvalidInputError);
    CHECK_THROWS_AS(PrimeModulus(Natural(91)), InvalidInputError);
    // Carmichael number; fools Fermat but not Miller-Rabin.
    CHECK_THROWS_AS(PrimeModulus(Natural(561)), InvalidInputError);
}

TEST_CASE("field operations on F_73") {
    Fp F(Natural(73));
    // 27 is a square root of -1 mod 73.
    CHECK((F.make(27) * F.make(27)).v == 72);
    CHECK((F.make(72) + F.make(1)).v == 0);
    CHECK(F.inv(F.make(1)).v == 1);
    CHECK((F.make(5) - F.make(9)).v == 69);
    CHECK(F.neg(F.make(0)).v == 0);
    for (int a = 1; a < 73; ++a) CHECK((F.make(a) * F.inv(F.make(a))).v == 1);
    CHECK_THROWS_AS(F.inv(F.zero()), InvalidInputError);
}

TEST_CASE("elements from different moduli do not mix") {
    Fp a(Natural(7)), b(Natural(11));
    CHECK_THROWS_AS((void)(a.make(3) + b.make(3)), InvalidInputError);
    CHECK_THROWS_AS((void)a.add(a.make(1), b.make(1)), InvalidInputError);
}

TEST_CASE("mod_pow") {
    Fp F73(Natural(73));
    // Euler criterion certificate that 10 is a quadratic non-residue.
    CHECK(mod_pow(F73.make(10), Natural(36)).v == 72);
    CHECK(mod_pow(F73.make(0), Natural(0)).v == 1);  // 0^0 == 1 by convention
    CHECK(mod_pow(F73.make(15), Natural(0)).v == 1);
    Fp F7(Natural(7));
    CHECK(mod_pow(F7.make(2), Natural(2)).v == 4);
}

TEST_CASE("Fermat sampling over several primes") {
    for (const char* pt : {"3", "7", "73", "101", "257", "2147483647"}) {
        Fp F(parse_natural(pt));
        SeededRng rng(42);
        for (int i = 0; i < 100; ++i) {
            FpElem a = F.sample(rng);
            if (F.is_zero(a)) continue;
            CHECK(F.pow(a, F.p() - 1).v == 1);
        }
    }
}

namespace {
// Independent oracle: order by successive multiplication.
Natural order_by_enumeration(const Natural& a, const Natural& q) {
    Natural cur = a % q, ord(1);
    while (cur != 1) {
        cur = cur * a % q;
        ++ord;
    }
    return ord;
}
}  // namespace

TEST_CASE("multiplicative order") {
    CHECK(order_by_enumeration(Natural(2), Natural(5)) == 4);
    CHECK(multiplicative_order(Natural(2), Natural(5)) == 4);
    CHECK(multiplicative_order(Natural(73), Natural(2)) == 1);
    CHECK(order_by_enumeration(Natural(2), Natural(7)) == 3);
    CHECK(multiplicative_order(Natural(2), Natural(7)) == 3);
    CHECK_THROWS_AS(multiplicative_order(Natural(14), Natural(7)), InvalidInputError);
    CHECK_THROWS_AS(multiplicative_order(Natural(3), Natural(8)), InvalidInputError);

    // vs the enumeration oracle, plus divisibility and minimality.
    for (const char* qt : {"5", "7", "11", "31", "101"}) {
        const Natural q = parse_natural(qt);
        for (Natural a(1); a < q; ++a) {
            const Natural ord = multiplicative_order(a, q);
            CHECK(ord == order_by_enumeration(a, q));
            CHECK((q - 1) % ord == 0);
            for (const auto& [r, e] : factor_integer(ord)) {
                Natural pw;
                Natural exp = ord / r;
                mpz_powm(pw.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), q.get_mpz_t());
                CHECK(pw != 1);
            }
        }
    }
}

TEST_CASE("factor_integer") {
    using Pair = std::pair<Natural, unsigned>;
    CHECK(factor_integer(Natural(12)) == std::vector<Pair>{{Natural(2), 2}, {Natural(3), 1}});
    CHECK(factor_integer(Natural(1)).empty());
    CHECK(factor_integer(Natural(72)) == std::vector<Pair>{{Natural(2), 3}, {Natural(3), 2}});
    CHECK_THROWS_AS(factor_integer(Natural(0)), InvalidInputError);

    // Round trip for every n up to 10^4.
    for (int n = 1; n <= 10000; ++n) {
        Natural prod(1);
        Natural prev(1);
        for (const auto& [p, e] : factor_integer(Natural(n))) {
            CHECK(is_probable_prime(p));
            CHECK(p > prev);
            prev = p;
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(Natural(72), Natural(2)) == 3);
    CHECK(valuation(Natural(72), Natural(3)) == 2);
    CHECK(valuation(Natural(15), Natural(5)) == 1);
    CHECK(valuation(Natural(7), Natural(2)) == 0);
    CHECK_THROWS_AS(valuation(Natural(0), Natural(2)), InvalidInputError);
    CHECK_THROWS_AS(valuation(Natural(8), Natural(1)), InvalidInputError);
}

TEST_CASE("seeded rng is reproducible and uniform-rejecting") {
    SeededRng a(123), b(123), c(124);
    for (int i = 0; i < 50; ++i) {
        const Natural bound("123456789123456789123456789");
        Natural x = a.below(bound);
        CHECK(x == b.below(bound));
        CHECK(x < bound);
    }
    CHECK(a.words_drawn() == b.words_drawn());
    bool differs = false;
    SeededRng a2(123);
    for (int i = 0; i < 50; ++i)
        if (a2.below(Natural(1000)) != c.below(Natural(1000))) differs = true;
    CHECK(differs);
    CHECK(a.below(Natural(1)) == 0);
    CHECK_THROWS_AS(a.below(Natural(0)), InvalidInputError);
}
