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

#include "plethyverify/poly.hpp"
#include "plethyverify/ratfunc.hpp"

using namespace plethy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MultiPoly P(const std::string& s, const FieldSpec& f = Q) { return MultiPoly::parse(s, f); }

MultiPoly random_poly(std::mt19937& rng, const FieldSpec& f, const VarSetPtr& vars, int maxdeg,
                      int nterms) {
    std::uniform_int_distribution<int> expd(0, maxdeg);
    std::uniform_int_distribution<long> coeffd(-5, 5);
    MultiPoly r = MultiPoly::zero(f, vars);
    for (int t = 0; t < nterms; ++t) {
        std::vector<std::pair<VarId, int>> exps;
        for (const auto& v : *vars) exps.emplace_back(v, expd(rng));
        r += MultiPoly::term(f, vars, exps, Scalar::from_integer(coeffd(rng), f));
    }
    return r;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    CHECK((P("x1 + 3*x2^2") * MultiPoly::zero(Q, make_varset({Alphabet("x", 2)}))).is_zero());

    const FieldSpec g2 = FieldSpec::gf(2);
    const MultiPoly one_plus_q = P("1 + q1", g2);
    CHECK(one_plus_q * one_plus_q == P("1 + q1^2", g2));

    CHECK_THROWS_AS(P("x1") + P("x1", g2), FieldMismatch);
}

TEST_CASE("render and parse round trip") {
    const MultiPoly p = P("x1^2*x2 - 1/2*x1*x2^2 + 3");
    CHECK(p.to_string() == "x1^2*x2 - 1/2*x1*x2^2 + 3");
    CHECK(MultiPoly::parse(p.to_string(), Q) == p);

    const FieldSpec g5 = FieldSpec::gf(5);
    const MultiPoly q = P("4*x1^2 + 3*x1 + 2", g5);
    CHECK(MultiPoly::parse(q.to_string(), g5) == q);
    CHECK(MultiPoly::zero(Q, make_varset(VarSet{})).to_string() == "0");
}

TEST_CASE("substitute") {
    const VarId z1("z", 1), y1("y", 1), s1("s", 1);
    const MultiPoly zs = P("z1*s1");
    CHECK(zs.substitute({{z1, P("y1")}}) == P("y1*s1"));
    CHECK(zs.substitute({}) == zs);

    // matrix action by substitution: X -> aX + cY, Y -> bX + dY with (a,b,c,d)=(1,2,3,4)
    const VarId X("X", 1), Y("Y", 1);
    const MultiPoly p = P("X1^2");
    const MultiPoly image = p.substitute({{X, P("X1 + 3*Y1")}, {Y, P("2*X1 + 4*Y1")}});
    CHECK(image == P("X1^2 + 6*X1*Y1 + 9*Y1^2"));
}

TEST_CASE("permute action") {
    const VarId x1("x", 1), x2("x", 2), y1("y", 1);
    CHECK(permute_action({{x1, x2}, {x2, x1}}, P("x1^2*x2")) == P("x1*x2^2"));
    CHECK(permute_action({{x1, x1}}, P("x1^2*x2")) == P("x1^2*x2"));

    const MultiPoly p = P("x1^2*y1 + x2");
    const MultiPoly swapped = permute_action({{x1, y1}, {y1, x1}}, p);
    CHECK(permute_action({{x1, y1}, {y1, x1}}, swapped) == p);
    CHECK_THROWS_AS(permute_action({{x1, y1}}, p), OutOfRange);
}

TEST_CASE("symmetrize orbit sums over distinct images only") {
    const Alphabet x2("x", 2), x3("x", 3);
    CHECK(symmetrize_orbit(P("x1^2*x2"), x2) == P("x1^2*x2 + x1*x2^2"));
    // stabilized monomial stays a single term, never 2*x1*x2
    CHECK(symmetrize_orbit(P("x1*x2"), x2) == P("x1*x2"));
    CHECK(symmetrize_orbit(P("x1"), x3) == P("x1 + x2 + x3"));

    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> expd(0, 4);
        const VarSetPtr vars = make_varset({x3});
        std::vector<std::pair<VarId, int>> exps;
        for (const auto& v : *vars) exps.emplace_back(v, expd(rng));
        const MultiPoly m = MultiPoly::term(Q, vars, exps, Scalar::one(Q));
        const MultiPoly s = symmetrize_orbit(m, x3);
        CHECK(is_symmetric(s, x3));
        CHECK(s.coefficient(exps) == Scalar::one(Q));
    }
}

TEST_CASE("symmetry predicates") {
    const Alphabet x2("x", 2), x3("x", 3);
    CHECK(is_antisymmetric(vandermonde(Q, x3), x3));
    CHECK(is_symmetric(P("x1 + x2"), x2));
    CHECK_FALSE(is_symmetric(P("x1"), x2));
    // over GF(2) antisymmetric and symmetric coincide
    CHECK(is_antisymmetric(P("x1 + x2", FieldSpec::gf(2)), x2));
}

TEST_CASE("vandermonde") {
    const Alphabet x1("x", 1), x2("x", 2), x3("x", 3);
    CHECK(vandermonde(Q, x2) == P("x1 - x2"));
    CHECK(vandermonde(Q, x1) == P("1"));
    // expansion of det(x_j^{3-i})
    CHECK(vandermonde(Q, x3) ==
          P("x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2"));
}

TEST_CASE("alternant") {
    const Alphabet x2("x", 2), x3("x", 3);
    CHECK(alternant({}, x2, Q) == P("x1 - x2"));
    // det [[x1^2, x2^2], [1, 1]]
    CHECK(alternant({1}, x2, Q) == P("x1^2 - x2^2"));
    CHECK(is_antisymmetric(alternant({2, 1}, x3, Q), x3));
    CHECK_THROWS_AS(alternant({1, 1, 1}, x2, Q), ShapeTooLong);
}

TEST_CASE("exact divide") {
    const Alphabet x2("x", 2);
    CHECK(exact_divide(alternant({1}, x2, Q), vandermonde(Q, x2)) == P("x1 + x2"));
    CHECK(exact_divide(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
    const MultiPoly p = P("x1^3*x2 - 7*x1 + 2");
    CHECK(exact_divide(p, P("1")) == p);
    CHECK_THROWS_AS(exact_divide(P("x1"), P("x2")), InexactDivision);
    CHECK_THROWS_AS(exact_divide(P("x1^2 + x2"), P("x1 + 1")), InexactDivision);
    CHECK_THROWS_AS(exact_divide(P("x1"), P("0")), DivisionByZero);
}

TEST_CASE("alternant / vandermonde quotients are symmetric") {
    const Alphabet x3("x", 3);
    const std::vector<std::vector<int>> shapes{{}, {1}, {2}, {1, 1}, {2, 1}, {3, 2, 1}, {4}};
    for (const auto& f : {Q, FieldSpec::gf(2), FieldSpec::gf(3)}) {
        for (const auto& lam : shapes) {
            const MultiPoly quot = exact_divide(alternant(lam, x3, f), vandermonde(f, x3));
            CHECK(is_symmetric(quot, x3));
        }
    }
}

TEST_CASE("partial derivative") {
    const VarId x1("x", 1), x2("x", 2);
    CHECK(P("x1^3").partial_derivative(x1) == P("3*x1^2"));
    const FieldSpec g3 = FieldSpec::gf(3);
    CHECK(P("x1^3", g3).partial_derivative(x1).is_zero());
    CHECK(P("x1").partial_derivative(x2).is_zero());
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937 rng(99);
    const Alphabet xa("x", 2);
    const VarSetPtr vars = make_varset({xa});
    const VarId x1("x", 1);
    for (const auto& f : {Q, FieldSpec::gf(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const MultiPoly p = random_poly(rng, f, vars, 3, 4);
            const MultiPoly q = random_poly(rng, f, vars, 3, 4);
            CHECK((p * q).partial_derivative(x1) ==
                  p.partial_derivative(x1) * q + p * q.partial_derivative(x1));
        }
    }
}

TEST_CASE("lagrange interpolation over scalars") {
    auto s = [&](long v) { return Scalar::from_integer(v, Q); };
    const UniPoly<Scalar> X(Scalar::zero(Q), {s(0), s(1)});
    CHECK(lagrange_interpolate(X, {s(0), s(1)}) == X);

    const UniPoly<Scalar> c = UniPoly<Scalar>::constant(s(17));
    CHECK(lagrange_interpolate(c, {s(4)}) == c);

    const UniPoly<Scalar> sq(Scalar::zero(Q), {s(0), s(0), s(1)});
    CHECK(lagrange_interpolate(sq, {s(0), s(1), s(2)}) == sq);

    CHECK_THROWS_AS(lagrange_interpolate(sq, {s(0), s(1)}), DegreeTooHigh);
    CHECK_THROWS_AS(lagrange_interpolate(X, {s(1), s(1)}), RepeatedNode);
}

TEST_CASE("lagrange interpolation identity property") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coeffd(-9, 9);
    for (const auto& f : {Q, FieldSpec::gf(7)}) {
        for (int deg = 0; deg <= 4; ++deg) {
            std::vector<Scalar> cs;
            for (int i = 0; i <= deg; ++i) cs.push_back(Scalar::from_integer(coeffd(rng), f));
            const UniPoly<Scalar> p(Scalar::zero(f), cs);
            std::vector<Scalar> nodes;
            for (int i = 0; i <= deg; ++i) nodes.push_back(Scalar::from_integer(i, f));
            CHECK(lagrange_interpolate(p, nodes) == p);
        }
    }
}

TEST_CASE("lagrange interpolation with rational function coefficients") {
    // coefficients and nodes in Q(x1): P(t) = x1*t + 1/(x1), nodes {0, x1}
    const MultiPoly x1 = P("x1");
    const MultiPoly one = P("1");
    const RationalFunction rx(x1);
    const RationalFunction rinv(one, x1);
    const RationalFunction rzero = RationalFunction::zero_like(rx);
    const UniPoly<RationalFunction> p(rzero, {rinv, rx});
    CHECK(lagrange_interpolate(p, {rzero, rx}) == p);
}

TEST_CASE("rational function identities") {
    const RationalFunction a(P("x1"), P("x2"));
    const RationalFunction b(P("x1^2"), P("x1*x2"));
    CHECK(a == b);  // cross-multiplication equality, no gcd reduction
    CHECK(a + (-a) == RationalFunction::zero_like(a));
    CHECK((a / a) == RationalFunction::one_like(a));
    CHECK_THROWS_AS(RationalFunction(P("x1"), P("0")), DivisionByZero);
    const RationalFunction c = a - b;
    CHECK(c.is_zero());
}
