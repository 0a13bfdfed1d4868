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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace plethy {

/// num/den with den != 0. Fractions are not reduced; equality is decided by
/// cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(MultiPoly::one(FieldSpec::rationals(), make_varset(VarSet{}))) {}

    RationalFunction(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
        if (num.field() != den.field()) throw FieldMismatch("RationalFunction: field mismatch");
        if (num.is_zero()) den = MultiPoly::one(num.field(), num.varset());
        num_ = std::move(num);
        den_ = std::move(den);
    }

    explicit RationalFunction(MultiPoly p)
        : num_(std::move(p)), den_(MultiPoly::one(num_.field(), num_.varset())) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const FieldSpec& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const { return den_.num_terms() == 1 && den_.total_degree() == 0; }

    /// Exact polynomial value; throws InexactDivision if den does not divide num.
    MultiPoly to_polynomial() const { return exact_divide(num_, den_); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return zero_like(a);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("RationalFunction: division by zero");
        if (a.is_zero()) return zero_like(a);
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    static RationalFunction zero_like(const RationalFunction& like) {
        return RationalFunction(MultiPoly::zero(like.field(), like.num_.varset()));
    }
    static RationalFunction one_like(const RationalFunction& like) {
        return RationalFunction(MultiPoly::one(like.field(), like.num_.varset()));
    }

    std::string to_string() const {
        if (is_polynomial()) return to_polynomial().to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    MultiPoly num_;
    MultiPoly den_;
};

namespace coeff {

inline Scalar zero_like(const Scalar& like) { return Scalar::zero(like.field()); }
inline Scalar one_like(const Scalar& like) { return Scalar::one(like.field()); }
inline RationalFunction zero_like(const RationalFunction& like) {
    return RationalFunction::zero_like(like);
}
inline RationalFunction one_like(const RationalFunction& like) {
    return RationalFunction::one_like(like);
}

}  // namespace coeff

/// Dense univariate polynomial over a coefficient field K (Scalar or
/// RationalFunction); coefficient i belongs to X^i.
template <class K>
class UniPoly {
public:
    explicit UniPoly(K zero) : zero_(std::move(zero)) {}
    UniPoly(K zero, std::vector<K> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly constant(const K& value) {
        UniPoly p(coeff::zero_like(value));
        p.c_.push_back(value);
        p.trim();
        return p;
    }
    /// X - a
    static UniPoly linear_root(const K& a) {
        UniPoly p(coeff::zero_like(a));
        p.c_ = {coeff::zero_like(a) - a, coeff::one_like(a)};
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& zero_value() const { return zero_; }

    K coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

    K eval(const K& x) const {
        K acc = zero_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.zero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coefficient(i) + b.coefficient(i);
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.zero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coefficient(i) - b.coefficient(i);
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.zero_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    UniPoly operator*(const K& s) const {
        UniPoly r(zero_);
        for (const auto& x : c_) r.c_.push_back(x * s);
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == zero_) c_.pop_back();
    }

    K zero_;
    std::vector<K> c_;
};

/// Reconstructs P as sum_j P(x_j) prod_{i != j} (X - x_i)/(x_j - x_i); requires
/// deg P < #nodes and pairwise distinct nodes.
template <class K>
UniPoly<K> lagrange_interpolate(const UniPoly<K>& p, const std::vector<K>& nodes) {
    if (nodes.empty()) throw DegreeTooHigh("lagrange_interpolate: need at least one node");
    if (p.degree() >= static_cast<int>(nodes.size()))
        throw DegreeTooHigh("lagrange_interpolate: degree " + std::to_string(p.degree()) +
                            " needs more than " + std::to_string(nodes.size()) + " nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw RepeatedNode("lagrange_interpolate: repeated node");

    UniPoly<K> result(p.zero_value());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        UniPoly<K> basis = UniPoly<K>::constant(coeff::one_like(nodes[j]));
        K denom = coeff::one_like(nodes[j]);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i == j) continue;
            basis = basis * UniPoly<K>::linear_root(nodes[i]);
            denom = denom * (nodes[j] - nodes[i]);
        }
        result = result + basis * (p.eval(nodes[j]) / denom);
    }
    return result;
}

}  // namespace plethy
