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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "poly.hpp"

namespace plethy {

enum class FactorKind { Symmetric, Antisymmetric };

/// One tensor factor of a model space: symmetric polynomials with internal
/// bound e on the given variables, or the Vandermonde multiples thereof.
/// Each variable of a factor is homogenized to the factor's degree D_h.
struct FactorSpec {
    std::vector<Alphabet> alphabets;
    int bound = 0;
    FactorKind kind = FactorKind::Symmetric;

    FactorSpec(std::vector<Alphabet> alphs, int e, FactorKind k)
        : alphabets(std::move(alphs)), bound(e), kind(k) {
        if (e < 0) throw OutOfRange("FactorSpec: negative bound");
    }
    FactorSpec(const Alphabet& a, int e, FactorKind k) : FactorSpec(std::vector<Alphabet>{a}, e, k) {}

    int num_vars() const {
        int n = 0;
        for (const auto& a : alphabets) n += a.size;
        return n;
    }

    std::vector<VarId> vars() const {
        std::vector<VarId> v;
        for (const auto& a : alphabets)
            for (const auto& w : a.vars()) v.push_back(w);
        std::sort(v.begin(), v.end());
        return v;
    }

    int homog_degree() const {
        return kind == FactorKind::Symmetric ? bound : bound + num_vars() - 1;
    }

    mpz_class dimension() const { return binomial(bound + num_vars(), num_vars()); }

    std::string to_string() const {
        std::string names, sizes;
        for (std::size_t i = 0; i < alphabets.size(); ++i) {
            names += (i ? "," : "") + alphabets[i].name;
            sizes += (i ? "+" : "") + std::to_string(alphabets[i].size);
        }
        return std::string(kind == FactorKind::Symmetric ? "Sym(" : "Wedge(") + names + ";" + sizes +
               ";bound " + std::to_string(bound) + ")";
    }
};

/// Basis elements of one factor: orbit sums of monomials x^lambda for
/// Symmetric factors, alternants a_{lambda+rho} for Antisymmetric ones, over
/// all partitions lambda in the (bound x num_vars) box, in canonical order.
inline std::vector<MultiPoly> factor_basis(const FactorSpec& f, const FieldSpec& field) {
    const std::vector<VarId> vs = f.vars();
    const VarSetPtr vp = make_varset(VarSet(vs.begin(), vs.end()));
    std::vector<MultiPoly> out;
    for (const auto& lam : partitions_in_box(f.bound, f.num_vars())) {
        if (f.kind == FactorKind::Symmetric) {
            // monomial symmetric polynomial m_lambda: one term per distinct arrangement
            std::vector<int> e;
            for (std::size_t i = 0; i < vs.size(); ++i)
                e.push_back(lam.part(static_cast<int>(i) + 1));
            std::sort(e.begin(), e.end());
            std::vector<MultiPoly::Term> terms;
            do {
                ExpVec key = mono::unit(vp->size());
                for (std::size_t i = 0; i < vs.size(); ++i) mono::set_exp(key, i, e[i]);
                terms.emplace_back(std::move(key), Scalar::one(field));
            } while (std::next_permutation(e.begin(), e.end()));
            out.push_back(MultiPoly::from_terms(field, vp, std::move(terms)));
        } else {
            std::vector<int> exps;
            const int d = f.num_vars();
            for (int i = 1; i <= d; ++i) exps.push_back(lam.part(i) + d - i);
            out.push_back(alternant_on(field, vs, exps));
        }
    }
    return out;
}

/// 2x2 matrix of scalars acting on the models.
class GroupElement {
public:
    GroupElement(Scalar a, Scalar b, Scalar c, Scalar d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_.field() != b_.field() || a_.field() != c_.field() || a_.field() != d_.field())
            throw FieldMismatch("GroupElement: mixed fields");
    }

    static GroupElement from_integers(long a, long b, long c, long d, const FieldSpec& f) {
        return GroupElement(Scalar::from_integer(a, f), Scalar::from_integer(b, f),
                            Scalar::from_integer(c, f), Scalar::from_integer(d, f));
    }
    static GroupElement identity(const FieldSpec& f) { return from_integers(1, 0, 0, 1, f); }
    /// (1 gamma; 0 1)
    static GroupElement unipotent_upper(const Scalar& gamma) {
        const FieldSpec& f = gamma.field();
        return GroupElement(Scalar::one(f), gamma, Scalar::zero(f), Scalar::one(f));
    }
    /// (1 0; gamma 1)
    static GroupElement unipotent_lower(const Scalar& gamma) {
        const FieldSpec& f = gamma.field();
        return GroupElement(Scalar::one(f), Scalar::zero(f), gamma, Scalar::one(f));
    }
    static GroupElement diagonal(const Scalar& q) {
        const FieldSpec& f = q.field();
        return GroupElement(Scalar::one(f), Scalar::zero(f), Scalar::zero(f), q);
    }

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Scalar& d() const { return d_; }
    const FieldSpec& field() const { return a_.field(); }

    Scalar det() const { return a_ * d_ - b_ * c_; }

    GroupElement transposed() const { return GroupElement(a_, c_, b_, d_); }

    /// Conjugation by the antidiagonal involution: (a b; c d) -> (d c; b a).
    GroupElement swap_conjugate() const { return GroupElement(d_, c_, b_, a_); }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return GroupElement(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                            g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
    }

    friend bool operator==(const GroupElement& g, const GroupElement& h) {
        return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
    }

    std::string to_string() const {
        return "(" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() + " " +
               d_.to_string() + ")";
    }

private:
    Scalar a_, b_, c_, d_;
};

/// The SL2 generator sample used by the verification drivers: both unipotent
/// families over the whole prime field (for p <= 13), or a fixed rational list.
inline std::vector<GroupElement> standard_generators(const FieldSpec& f) {
    std::vector<GroupElement> gens;
    if (f.is_prime_field()) {
        const std::uint64_t limit = f.prime() <= 13 ? f.prime() : 14;
        for (std::uint64_t g = 0; g < limit; ++g) {
            const Scalar s = Scalar::from_integer(static_cast<long>(g), f);
            gens.push_back(GroupElement::unipotent_upper(s));
            gens.push_back(GroupElement::unipotent_lower(s));
        }
    } else {
        for (const auto& [num, den] : std::vector<std::pair<long, long>>{
                 {1, 1}, {-1, 1}, {2, 1}, {1, 2}, {3, 5}}) {
            const Scalar s = Scalar::from_rational(mpq_class(num, den), f);
            gens.push_back(GroupElement::unipotent_upper(s));
            gens.push_back(GroupElement::unipotent_lower(s));
        }
    }
    return gens;
}

/// A tensor product of factors with pairwise disjoint variables, over a fixed
/// field; carries its basis, the leading-monomial lookup used for coordinates,
/// and the per-variable homogenization degrees that define the group action.
class SpaceSpec {
public:
    SpaceSpec(const FieldSpec& f, std::vector<FactorSpec> factors)
        : field_(f), factors_(std::move(factors)) {
        VarSet all;
        for (const auto& fac : factors_)
            for (const auto& v : fac.vars()) all.push_back(v);
        const std::size_t total = all.size();
        vars_ = make_varset(std::move(all));
        if (vars_->size() != total)
            throw OutOfRange("SpaceSpec: factors must have pairwise disjoint variables");

        homog_.assign(vars_->size(), 0);
        for (const auto& fac : factors_)
            for (const auto& v : fac.vars()) homog_[position(v)] = fac.homog_degree();

        build_basis();
    }

    const FieldSpec& field() const { return field_; }
    const std::vector<FactorSpec>& factors() const { return factors_; }
    const VarSetPtr& varset() const { return vars_; }

    mpz_class dimension() const {
        mpz_class d(1);
        for (const auto& f : factors_) d *= f.dimension();
        return d;
    }

    const std::vector<MultiPoly>& basis() const { return basis_; }

    int homog_degree_of_position(std::size_t pos) const { return homog_[pos]; }
    int homog_degree_of(const VarId& v) const { return homog_[position(v)]; }

    std::string to_string() const {
        if (factors_.empty()) return "Scalars";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            s += (i ? std::string(" (x) ") : std::string()) + factors_[i].to_string();
        return s;
    }

    /// Coefficients of p on the space basis; the basis expansion is
    /// unitriangular w.r.t. graded lex, so greedy elimination of leading
    /// monomials is exact. Throws NotInSpace when p is outside the span.
    std::vector<Scalar> coordinates(const MultiPoly& p) const {
        if (p.field() != field_) throw FieldMismatch("coordinates: field mismatch");
        for (const auto& v : p.vars()) {
            const auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
            const bool known = it != vars_->end() && *it == v;
            if (!known && p.deg_in_var(v) > 0)
                throw NotInSpace("coordinates: foreign variable " + v.name());
        }
        MultiPoly r = p.aligned_to(merge_varsets(p.varset(), vars_));
        r = MultiPoly::from_terms(field_, vars_, strip_to(r), /*presorted=*/true);
        std::vector<Scalar> coords(basis_.size(), Scalar::zero(field_));
        while (!r.is_zero()) {
            const auto it = lm_index_.find(r.leading_monomial());
            if (it == lm_index_.end())
                throw NotInSpace("coordinates: leading monomial " +
                                 std::to_string(r.leading_monomial()[0]) + "-deg term not in span");
            const Scalar c = r.leading_coefficient();  // basis elements are monic
            r.add_scaled(basis_[it->second], -c);
            coords[it->second] = c;
        }
        return coords;
    }

    bool contains(const MultiPoly& p) const {
        try {
            coordinates(p);
            return true;
        } catch (const NotInSpace&) {
            return false;
        }
    }

    MultiPoly from_coordinates(const std::vector<Scalar>& coords) const {
        if (coords.size() != basis_.size()) throw OutOfRange("from_coordinates: size mismatch");
        MultiPoly r = MultiPoly::zero(field_, vars_);
        for (std::size_t i = 0; i < coords.size(); ++i) r.add_scaled(basis_[i], coords[i]);
        return r;
    }

    std::size_t position(const VarId& v) const {
        const auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
        if (it == vars_->end() || !(*it == v))
            throw OutOfRange("SpaceSpec: variable " + v.name() + " not in space");
        return static_cast<std::size_t>(it - vars_->begin());
    }

private:
    void build_basis() {
        std::vector<std::vector<MultiPoly>> per_factor;
        for (const auto& f : factors_) per_factor.push_back(factor_basis(f, field_));
        basis_.clear();
        std::vector<std::size_t> idx(per_factor.size(), 0);
        const MultiPoly unit = MultiPoly::one(field_, vars_);
        bool done = false;
        while (!done) {
            MultiPoly b = unit;
            for (std::size_t i = 0; i < per_factor.size(); ++i) b *= per_factor[i][idx[i]];
            basis_.push_back(b.aligned_to(vars_));
            done = true;
            for (std::size_t k = per_factor.size(); k-- > 0;) {
                if (++idx[k] < per_factor[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
        }
        finish_basis();
    }

    void finish_basis() {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].is_zero() || !basis_[i].leading_coefficient().is_one())
                throw OutOfRange("SpaceSpec: basis element is not monic");
            const bool fresh = lm_index_.emplace(basis_[i].leading_monomial(), i).second;
            if (!fresh) throw OutOfRange("SpaceSpec: duplicate leading monomial in basis");
        }
    }

    FieldSpec field_;
    std::vector<FactorSpec> factors_;
    VarSetPtr vars_;
    std::vector<int> homog_;
    std::vector<MultiPoly> basis_;
    std::map<ExpVec, std::size_t> lm_index_;
};

/// Transported SL2 action: each variable v with exponent a and homogenization
/// degree D contributes the factor (a(g) v + c(g))^a (b(g) v + d(g))^{D-a};
/// the degree bookkeeping per factor makes the product land in the model again.
inline MultiPoly group_act(const GroupElement& g, const SpaceSpec& s, const MultiPoly& p) {
    if (g.field() != s.field() || p.field() != s.field())
        throw FieldMismatch("group_act: field mismatch");
    const MultiPoly q = p.aligned_to(s.varset());
    const std::size_t n = s.varset()->size();
    const FieldSpec& f = s.field();

    // dense coefficient tables of (a v + c)^alpha (b v + d)^{D-alpha}, cached per (slot, alpha)
    std::map<std::pair<std::size_t, int>, std::vector<Scalar>> cache;
    auto univariate = [&](std::size_t slot, int alpha) -> const std::vector<Scalar>& {
        const auto key = std::make_pair(slot, alpha);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const int D = s.homog_degree_of_position(slot);
        if (alpha > D)
            throw NotInSpace("group_act: exponent " + std::to_string(alpha) +
                             " exceeds homogenization degree " + std::to_string(D));
        std::vector<Scalar> first(static_cast<std::size_t>(alpha) + 1, Scalar::zero(f));
        for (int k = 0; k <= alpha; ++k)
            first[static_cast<std::size_t>(k)] = Scalar::from_integer(binomial(alpha, k), f) *
                                                 g.a().pow(k) * g.c().pow(alpha - k);
        const int beta = D - alpha;
        std::vector<Scalar> second(static_cast<std::size_t>(beta) + 1, Scalar::zero(f));
        for (int k = 0; k <= beta; ++k)
            second[static_cast<std::size_t>(k)] = Scalar::from_integer(binomial(beta, k), f) *
                                                  g.b().pow(k) * g.d().pow(beta - k);
        std::vector<Scalar> conv(static_cast<std::size_t>(D) + 1, Scalar::zero(f));
        for (int i = 0; i <= alpha; ++i)
            for (int j = 0; j <= beta; ++j)
                conv[static_cast<std::size_t>(i + j)] +=
                    first[static_cast<std::size_t>(i)] * second[static_cast<std::size_t>(j)];
        return cache.emplace(key, std::move(conv)).first->second;
    };

    std::map<ExpVec, Scalar, ExpVecGreater> acc;
    std::vector<std::pair<ExpVec, Scalar>> partial, next;
    for (const auto& [key, coeff] : q.terms()) {
        partial.clear();
        partial.emplace_back(mono::unit(n), coeff);
        for (std::size_t slot = 0; slot < n; ++slot) {
            const int alpha = key[slot + 1];
            const int D = s.homog_degree_of_position(slot);
            if (D == 0) {
                if (alpha != 0) throw NotInSpace("group_act: variable outside its factor bound");
                continue;
            }
            const auto& table = univariate(slot, alpha);
            next.clear();
            next.reserve(partial.size() * table.size());
            for (const auto& [k, c] : partial) {
                for (std::size_t e = 0; e < table.size(); ++e) {
                    if (table[e].is_zero()) continue;
                    ExpVec k2 = k;
                    mono::set_exp(k2, slot, static_cast<int>(e));
                    next.emplace_back(std::move(k2), c * table[e]);
                }
            }
            partial.swap(next);
        }
        for (auto& [k, c] : partial) {
            auto [it, inserted] = acc.try_emplace(std::move(k), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    std::vector<MultiPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) terms.emplace_back(k, std::move(c));
    return MultiPoly::from_terms(f, s.varset(), std::move(terms), /*presorted=*/true);
}

/// Lowering operator on the model: the sum of all partial derivatives.
/// Defined over Q only.
inline MultiPoly sl2_f_act(const SpaceSpec& s, const MultiPoly& p) {
    if (!s.field().is_rationals())
        throw WrongCharacteristic("sl2_f_act: Lie algebra action requires Q");
    if (p.field() != s.field()) throw FieldMismatch("sl2_f_act: field mismatch");
    MultiPoly r = MultiPoly::zero(s.field(), s.varset());
    for (const auto& v : *s.varset()) r += p.partial_derivative(v);
    return r;
}

/// Raising operator: homogenize each variable to its factor degree, apply
/// sum_v X_v d/dY_v, dehomogenize. On a monomial this sends x^a to
/// sum_v (D_v - a_v) x^a x_v.
inline MultiPoly sl2_e_act(const SpaceSpec& s, const MultiPoly& p) {
    if (!s.field().is_rationals())
        throw WrongCharacteristic("sl2_e_act: Lie algebra action requires Q");
    if (p.field() != s.field()) throw FieldMismatch("sl2_e_act: field mismatch");
    const MultiPoly q = p.aligned_to(s.varset());
    MultiPoly r = MultiPoly::zero(s.field(), s.varset());
    std::vector<MultiPoly::Term> terms;
    for (const auto& [key, c] : q.terms()) {
        for (std::size_t slot = 0; slot < s.varset()->size(); ++slot) {
            const int alpha = key[slot + 1];
            const int D = s.homog_degree_of_position(slot);
            if (alpha > D) throw NotInSpace("sl2_e_act: exponent exceeds homogenization degree");
            if (alpha == D) continue;
            ExpVec k2 = key;
            mono::set_exp(k2, slot, alpha + 1);
            terms.emplace_back(std::move(k2), c * Scalar::from_integer(D - alpha, s.field()));
        }
    }
    return MultiPoly::from_terms(s.field(), s.varset(), std::move(terms));
}

}  // namespace plethy
