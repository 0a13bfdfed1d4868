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

#include <set>

#include "plethyverify/combinat.hpp"

using namespace plethy;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("partition basics") {
    CHECK(Partition({3, 2, 1}).size() == 6);
    CHECK(Partition({}).length() == 0);
    CHECK(Partition({2, 2, 0, 0}).length() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), OutOfRange);
    CHECK(HookShape(2, 3).shape() == Partition({3, 1, 1}));
    CHECK(partitions_in_box(1, 2).size() == 3);  // {}, (1), (1,1)
    CHECK(partitions_in_box(2, 2).size() == 6);
}

TEST_CASE("ssyt enumeration") {
    const auto eight = enumerate_ssyt(Partition({2, 1}), 2);
    REQUIRE(eight.size() == 8);
    // the eight fillings, in row-reading-word order
    std::vector<std::string> expected{"[[0,0],[1]]", "[[0,0],[2]]", "[[0,1],[1]]", "[[0,1],[2]]",
                                      "[[0,2],[1]]", "[[0,2],[2]]", "[[1,1],[2]]", "[[1,2],[2]]"};
    std::vector<std::string> got;
    for (const auto& t : eight) {
        CHECK(t.is_semistandard());
        got.push_back(t.to_string());
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::string> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    CHECK(sorted_got == expected);
    CHECK(got == sorted_got);  // enumeration order is lexicographic on reading words

    for (int d = 0; d <= 5; ++d)
        CHECK(enumerate_ssyt(Partition({1}), d).size() == static_cast<std::size_t>(d + 1));
    CHECK(enumerate_ssyt(Partition({1, 1, 1}), 1).empty());
}

TEST_CASE("tableau parse/render round trip") {
    const Tableau t = Tableau::parse("[[0,2,2,5],[2],[4]]");
    CHECK(t.shape() == Partition({4, 1, 1}));
    CHECK(t.to_string() == "[[0,2,2,5],[2],[4]]");
    CHECK(t.is_semistandard());
    CHECK(t.entry_sum() == 15);
    CHECK_FALSE(Tableau({{1, 0}}).is_semistandard());
    CHECK_FALSE(Tableau({{0}, {0}}).is_semistandard());
}

TEST_CASE("hook dimension formula") {
    CHECK(hook_dimension(1, 2, 2) == 8);
    for (int d = 0; d <= 5; ++d) CHECK(hook_dimension(0, 1, d) == d + 1);
    CHECK(hook_dimension(2, 3, 4) == 126);  // C(7,5)*C(4,2)

    for (int M = 0; M <= 3; ++M)
        for (int N = 1; N <= 4; ++N)
            for (int d = 0; d <= 6; ++d)
                CHECK(mpz_class(enumerate_ssyt(HookShape(M, N).shape(), d).size()) ==
                      hook_dimension(M, N, d));
}

TEST_CASE("subset pair encoding is a bijection") {
    // round trip on the eight (2,1)-tableaux with d = 2
    for (const auto& t : enumerate_ssyt(Partition({2, 1}), 2)) {
        const auto [S, A] = ssyt_to_subset_pair(t, 1, 2, 2);
        CHECK(subset_pair_to_ssyt(S, A, 1, 2, 2) == t);
    }

    // single-row case: S = {a0, a1+1, ..., a_M+M}, empty column part
    const Tableau row({{0, 1, 3}});
    const auto [S, A] = ssyt_to_subset_pair(row, 2, 1, 3);
    CHECK(S == std::vector<int>{0, 2, 5});
    CHECK(A == std::vector<int>{2, 5});

    // injectivity and full image over (M,N,d) = (2,2,3)
    const int M = 2, N = 2, d = 3;
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    const auto all = enumerate_ssyt(HookShape(M, N).shape(), d);
    for (const auto& t : all) {
        const auto pair = ssyt_to_subset_pair(t, M, N, d);
        CHECK(static_cast<int>(pair.first.size()) == M + N);
        CHECK(pair.first.front() >= 0);
        CHECK(pair.first.back() <= d + M);
        images.insert(pair);
        CHECK(subset_pair_to_ssyt(pair.first, pair.second, M, N, d) == t);
    }
    CHECK(images.size() == all.size());
    // cardinality double count: every (S, A) pair is hit
    CHECK(mpz_class(images.size()) == binomial(d + M + 1, M + N) * binomial(M + N - 1, M));
}

TEST_CASE("q binomials") {
    CHECK(q_binomial(2, 1) == QPoly({mpz_class(1), mpz_class(1)}));
    CHECK(q_binomial(4, 2).to_string() == "1 + q + 2q^2 + q^3 + q^4");
    CHECK(q_int(4).to_string() == "1 + q + q^2 + q^3");
    CHECK_THROWS_AS(q_binomial(2, 3), OutOfRange);
    CHECK_THROWS_AS(q_binomial(2, -1), OutOfRange);

    for (int n = 0; n <= 9; ++n)
        for (int m = 0; m <= n; ++m) CHECK(q_binomial(n, m).eval_at_one() == binomial(n, m));
}

TEST_CASE("catalan numbers") {
    CHECK(catalan_number(3) == 5);
    CHECK(catalan_number(5) == 42);
    CHECK(catalan_number(7) == 429);
    CHECK(catalan_number(0) == 1);
}

TEST_CASE("hook character identity") {
    const QPoly expected({mpz_class(0), mpz_class(1), mpz_class(2), mpz_class(2), mpz_class(2),
                          mpz_class(1)});
    CHECK(hook_character_tableau_sum(1, 2, 2) == expected);
    CHECK(hook_character_product(1, 2, 2) == expected);
    CHECK(expected.to_string() == "q + 2q^2 + 2q^3 + 2q^4 + q^5");

    for (int d = 0; d <= 4; ++d)
        CHECK(hook_character_tableau_sum(0, 1, d) == q_int(d + 1));

    // N = 1 row case reduces to a single q-binomial
    for (int M = 0; M <= 3; ++M)
        for (int d = 0; d <= 4; ++d)
            CHECK(hook_character_product(M, 1, d) == q_binomial(M + d + 1, M + 1));

    // M = 0 column case
    for (int N = 1; N <= 4; ++N)
        for (int d = N - 1; d <= 5; ++d)
            CHECK(hook_character_product(0, N, d) ==
                  QPoly::q_power(N * (N - 1) / 2) * q_binomial(d + 1, N));

    for (int M = 0; M <= 4; ++M)
        for (int N = 1; N <= 4; ++N)
            for (int d = 0; d <= 6; ++d)
                CHECK(hook_character_product(M, N, d) == hook_character_tableau_sum(M, N, d));
}

TEST_CASE("trinomial revision as integers and q-polynomials") {
    for (int M = 0; M <= 4; ++M)
        for (int N = 0; N <= 4; ++N)
            for (int d = 0; d <= 4; ++d) {
                CHECK(binomial(M + N, M) * binomial(M + N + d, M + N) ==
                      binomial(N + d, N) * binomial(M + N + d, M));
                CHECK(q_binomial(M + N, M) * q_binomial(M + N + d, M + N) ==
                      q_binomial(N + d, N) * q_binomial(M + N + d, M));
            }
}

namespace {

// Expansion of a symmetric polynomial in the Schur basis by leading-monomial
// elimination; returns the coefficient of each partition of the given degree.
std::vector<std::pair<Partition, Scalar>> schur_expand(MultiPoly p, const Alphabet& alph,
                                                       const FieldSpec& f, int degree) {
    std::vector<std::pair<Partition, Scalar>> out;
    std::vector<Partition> basis;
    for (const auto& lam : partitions_in_box(degree, alph.size))
        if (lam.size() == degree) basis.push_back(lam);
    while (!p.is_zero()) {
        bool hit = false;
        for (const auto& lam : basis) {
            const MultiPoly s = schur_poly(lam, alph, f);
            std::vector<std::pair<VarId, int>> exps;
            for (int i = 1; i <= alph.size; ++i) exps.emplace_back(alph.var(i), lam.part(i));
            if (p.leading_monomial() == s.leading_monomial() &&
                MultiPoly::term(f, s.varset(), exps, Scalar::one(f)).leading_monomial() ==
                    s.leading_monomial()) {
                const Scalar c = p.leading_coefficient();
                p.add_scaled(s, -c);
                out.emplace_back(lam, c);
                hit = true;
                break;
            }
        }
        if (!hit) throw OutOfRange("schur_expand: polynomial is not in the Schur span");
    }
    return out;
}

Scalar coeff_of(const std::vector<std::pair<Partition, Scalar>>& expansion, const Partition& lam,
                const FieldSpec& f) {
    for (const auto& [p, c] : expansion)
        if (p == lam) return c;
    return Scalar::zero(f);
}

}  // namespace

TEST_CASE("schur polynomials") {
    const Alphabet x2("x", 2), x3("x", 3);
    CHECK(schur_poly(Partition({1}), x2, Q) == MultiPoly::parse("x1 + x2", Q));
    CHECK(schur_poly(Partition({2}), x2, Q) == MultiPoly::parse("x1^2 + x1*x2 + x2^2", Q));

    // structure constants depend on the field: the coefficient of s_(3,2,1) in
    // s_(2,1)^2 is 2 over Q and vanishes over GF(2)
    const FieldSpec g2 = FieldSpec::gf(2);
    for (const auto& f : {Q, g2}) {
        const MultiPoly s21 = schur_poly(Partition({2, 1}), x3, f);
        const auto expansion = schur_expand(s21 * s21, x3, f, 6);
        const Scalar c321 = coeff_of(expansion, Partition({3, 2, 1}), f);
        if (f.is_rationals())
            CHECK(c321 == Scalar::from_integer(2, f));
        else
            CHECK(c321.is_zero());
        // the other multiplicities are 1 in every characteristic
        for (const auto& lam :
             {Partition({2, 2, 2}), Partition({3, 3}), Partition({4, 1, 1}), Partition({4, 2})})
            CHECK(coeff_of(expansion, lam, f) == Scalar::one(f));
    }
}
