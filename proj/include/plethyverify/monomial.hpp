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

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"

namespace plethy {

/// Identifies one variable, e.g. x3 = {"x", 3}. Ordering is (alphabet name, index);
/// that order is also the monomial-order precedence (earlier = higher).
struct VarId {
    std::array<char, 4> alph{};  // NUL-padded, 1..3 characters
    std::uint32_t index = 0;     // 1-based

    VarId() = default;
    VarId(const std::string& a, std::uint32_t i) : index(i) {
        if (a.empty() || a.size() > 3)
            throw OutOfRange("VarId: alphabet name must have 1..3 characters, got '" + a + "'");
        std::copy(a.begin(), a.end(), alph.begin());
    }

    std::string alphabet() const { return std::string(alph.data()); }
    std::string name() const { return alphabet() + std::to_string(index); }

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.alph == b.alph && a.index == b.index;
    }
    friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
    friend bool operator<(const VarId& a, const VarId& b) {
        if (a.alph != b.alph) return a.alph < b.alph;
        return a.index < b.index;
    }
};

/// An ordered set of variables x1,...,xD sharing one name.
struct Alphabet {
    std::string name;
    int size = 0;

    Alphabet() = default;
    Alphabet(std::string n, int d) : name(std::move(n)), size(d) {
        if (d < 0) throw OutOfRange("Alphabet: negative size");
    }

    VarId var(int i) const {
        if (i < 1 || i > size) throw OutOfRange("Alphabet " + name + ": index " + std::to_string(i));
        return VarId(name, static_cast<std::uint32_t>(i));
    }

    std::vector<VarId> vars() const {
        std::vector<VarId> v;
        v.reserve(static_cast<std::size_t>(size));
        for (int i = 1; i <= size; ++i) v.push_back(var(i));
        return v;
    }
};

/// Sorted, duplicate-free variable list shared between polynomials.
using VarSet = std::vector<VarId>;
using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(VarSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return std::make_shared<const VarSet>(std::move(v));
}

inline VarSetPtr make_varset(std::initializer_list<Alphabet> alphs) {
    VarSet v;
    for (const auto& a : alphs) {
        auto w = a.vars();
        v.insert(v.end(), w.begin(), w.end());
    }
    return make_varset(std::move(v));
}

inline VarSetPtr merge_varsets(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b || *a == *b) return a;
    VarSet m;
    m.reserve(a->size() + b->size());
    std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(m));
    return std::make_shared<const VarSet>(std::move(m));
}

/// Exponent key. Slot 0 holds the total degree, slots 1..n the per-variable
/// exponents in VarSet order, so plain lexicographic comparison of keys is
/// exactly graded-lexicographic comparison of monomials.
using ExpVec = boost::container::small_vector<std::uint8_t, 24>;

namespace mono {

inline ExpVec unit(std::size_t nvars) { return ExpVec(nvars + 1, std::uint8_t{0}); }

inline int degree(const ExpVec& e) { return e[0]; }
inline int exp_at(const ExpVec& e, std::size_t var_pos) { return e[var_pos + 1]; }

inline void set_exp(ExpVec& e, std::size_t var_pos, int v) {
    if (v < 0 || v > 255) throw OutOfRange("monomial exponent out of range: " + std::to_string(v));
    const int old = e[var_pos + 1];
    const int deg = e[0] - old + v;
    if (deg > 255) throw OutOfRange("monomial total degree overflow");
    e[var_pos + 1] = static_cast<std::uint8_t>(v);
    e[0] = static_cast<std::uint8_t>(deg);
}

inline ExpVec mul(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const int s = r[i] + b[i];
        if (s > 255) throw OutOfRange("monomial exponent overflow in multiply");
        r[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

/// a / b; requires b to divide a.
inline ExpVec div(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (b[i] > r[i]) throw InexactDivision("monomial division is not exact");
        r[i] = static_cast<std::uint8_t>(r[i] - b[i]);
    }
    return r;
}

inline bool divides(const ExpVec& b, const ExpVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline bool is_constant(const ExpVec& e) { return e[0] == 0; }

}  // namespace mono

struct ExpVecGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

}  // namespace plethy
