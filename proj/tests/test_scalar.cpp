/*
   Copyright 2026 The plethyverify authors

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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "plethyverify/scalar.hpp"

using namespace plethy;

TEST_CASE("field spec parse and name") {
    CHECK(FieldSpec::parse("Q").is_rationals());
    CHECK(FieldSpec::parse("GF(3)").prime() == 3);
    CHECK(FieldSpec::parse("GF(3)").name() == "GF(3)");
    CHECK(FieldSpec::rationals().name() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("GF(4)"), OutOfRange);
    CHECK_THROWS_AS(FieldSpec::parse("GF(abc)"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
    CHECK_THROWS_AS(FieldSpec::gf(1), OutOfRange);
    CHECK_NOTHROW(FieldSpec::gf((1ull << 61) - 1));  // Mersenne prime
    CHECK_THROWS_AS(FieldSpec::gf(1ull << 61), OutOfRange);
}

TEST_CASE("basic inverses") {
    const FieldSpec g5 = FieldSpec::gf(5);
    CHECK(Scalar::from_integer(2, g5).inverse() == Scalar::from_integer(3, g5));

    const FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::from_integer(2, q).inverse() ==
          Scalar::from_rational(mpq_class(1, 2), q));

    CHECK(reduce_integer(6, FieldSpec::gf(3)).is_zero());
    CHECK(reduce_integer(-1, FieldSpec::gf(2)) == Scalar::one(FieldSpec::gf(2)));
    CHECK(reduce_integer(7, q) == Scalar::from_integer(7, q));
    CHECK(reduce_integer(10, g5).is_zero());

    CHECK_THROWS_AS(Scalar::zero(g5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(g5) / Scalar::zero(g5), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(g5) + Scalar::one(q), FieldMismatch);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<long> dist(-40, 40);

    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3),
                                  FieldSpec::gf(5), FieldSpec::gf(7)};
    for (const auto& f : fields) {
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar a = f.is_rationals()
                                 ? Scalar::from_rational(mpq_class(dist(rng), 1 + std::abs(dist(rng))), f)
                                 : Scalar::from_integer(dist(rng), f);
            const Scalar b = Scalar::from_integer(dist(rng), f);
            const Scalar c = Scalar::from_integer(dist(rng), f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!b.is_zero()) CHECK(b * b.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("reduce_integer is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (const auto& f : {FieldSpec::gf(2), FieldSpec::gf(7), FieldSpec::rationals()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const long a = dist(rng), b = dist(rng);
            CHECK(reduce_integer(a * b, f) == reduce_integer(a, f) * reduce_integer(b, f));
            CHECK(reduce_integer(a + b, f) == reduce_integer(a, f) + reduce_integer(b, f));
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(7, 5) == 21);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(127, 63) == mpz_class("11975573020964041433067793888190275875"));
}
