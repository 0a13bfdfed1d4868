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

#include <cassert>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace plethy {

/// Sparse multivariate polynomial over an exact field. Terms are kept in
/// strictly descending graded-lexicographic order with nonzero coefficients;
/// the variable order is the global (alphabet, index) order.
class MultiPoly {
public:
    using Term = std::pair<ExpVec, Scalar>;

    MultiPoly() : field_(FieldSpec::rationals()), vars_(make_varset(VarSet{})) {}

    static MultiPoly zero(const FieldSpec& f, VarSetPtr vars) {
        return MultiPoly(f, std::move(vars), {});
    }
    static MultiPoly constant(const FieldSpec& f, VarSetPtr vars, const Scalar& c) {
        if (c.field() != f) throw FieldMismatch("MultiPoly::constant: scalar field mismatch");
        if (c.is_zero()) return zero(f, std::move(vars));
        std::vector<Term> t;
        t.emplace_back(mono::unit(vars->size()), c);
        return MultiPoly(f, std::move(vars), std::move(t));
    }
    static MultiPoly constant(const FieldSpec& f, VarSetPtr vars, long c) {
        return constant(f, std::move(vars), Scalar::from_integer(c, f));
    }
    static MultiPoly one(const FieldSpec& f, VarSetPtr vars) {
        return constant(f, std::move(vars), Scalar::one(f));
    }

    static MultiPoly variable(const FieldSpec& f, VarSetPtr vars, const VarId& v, int exp = 1) {
        return term(f, std::move(vars), {{v, exp}}, Scalar::one(f));
    }

    static MultiPoly term(const FieldSpec& f, VarSetPtr vars,
                          const std::vector<std::pair<VarId, int>>& exps, const Scalar& c) {
        if (c.field() != f) throw FieldMismatch("MultiPoly::term: scalar field mismatch");
        if (c.is_zero()) return zero(f, std::move(vars));
        ExpVec key = mono::unit(vars->size());
        for (const auto& [v, e] : exps) {
            const std::size_t pos = var_position(*vars, v);
            mono::set_exp(key, pos, mono::exp_at(key, pos) + e);
        }
        std::vector<Term> t;
        t.emplace_back(std::move(key), c);
        return MultiPoly(f, std::move(vars), std::move(t));
    }

    static MultiPoly from_terms(const FieldSpec& f, VarSetPtr vars, std::vector<Term> terms,
                                bool presorted = false) {
        MultiPoly p(f, std::move(vars), std::move(terms));
        if (!presorted) p.normalize();
        return p;
    }

    const FieldSpec& field() const { return field_; }
    const VarSet& vars() const { return *vars_; }
    const VarSetPtr& varset() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    int total_degree() const { return is_zero() ? 0 : mono::degree(terms_.front().first); }

    const ExpVec& leading_monomial() const {
        if (is_zero()) throw OutOfRange("MultiPoly: leading term of zero");
        return terms_.front().first;
    }
    const Scalar& leading_coefficient() const {
        if (is_zero()) throw OutOfRange("MultiPoly: leading term of zero");
        return terms_.front().second;
    }

    int deg_in_var(const VarId& v) const {
        const auto pos = find_var(v);
        if (!pos) return 0;
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, mono::exp_at(t.first, *pos));
        return d;
    }

    Scalar coefficient(const std::vector<std::pair<VarId, int>>& exps) const {
        ExpVec key = mono::unit(vars_->size());
        for (const auto& [v, e] : exps) {
            const auto pos = find_var(v);
            if (!pos) {
                if (e != 0) return Scalar::zero(field_);
                continue;
            }
            mono::set_exp(key, *pos, e);
        }
        for (const auto& t : terms_)
            if (t.first == key) return t.second;
        return Scalar::zero(field_);
    }

    /// Copy of this polynomial expressed on a superset variable list.
    MultiPoly aligned_to(const VarSetPtr& target) const {
        if (target == vars_ || *target == *vars_) {
            MultiPoly r = *this;
            r.vars_ = target;
            return r;
        }
        std::vector<std::size_t> posmap(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) posmap[i] = var_position(*target, (*vars_)[i]);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [key, c] : terms_) {
            ExpVec k = mono::unit(target->size());
            k[0] = key[0];
            for (std::size_t i = 0; i < vars_->size(); ++i) k[posmap[i] + 1] = key[i + 1];
            out.emplace_back(std::move(k), c);
        }
        // relative graded-lex order is unchanged by inserting zero columns
        return MultiPoly(field_, target, std::move(out));
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    MultiPoly& operator*=(const Scalar& c) {
        if (c.field() != field_) throw FieldMismatch("MultiPoly: scalar field mismatch");
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly p, const Scalar& c) { return p *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly p) { return p *= c; }

    /// this += c * o  (single fused merge; the workhorse of elimination).
    void add_scaled(const MultiPoly& o, const Scalar& c) {
        check_field(o);
        if (c.is_zero() || o.is_zero()) return;
        if (!(vars_ == o.vars_ || *vars_ == *o.vars_)) {
            const VarSetPtr merged = merge_varsets(vars_, o.vars_);
            *this = aligned_to(merged);
            add_scaled(o.aligned_to(merged), c);
            return;
        }
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        ExpVecGreater gt;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (gt(terms_[i].first, o.terms_[j].first)) {
                out.push_back(std::move(terms_[i++]));
            } else if (gt(o.terms_[j].first, terms_[i].first)) {
                out.emplace_back(o.terms_[j].first, c * o.terms_[j].second);
                ++j;
            } else {
                Scalar s = terms_[i].second + c * o.terms_[j].second;
                if (!s.is_zero()) out.emplace_back(std::move(terms_[i].first), std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
        for (; j < o.terms_.size(); ++j) out.emplace_back(o.terms_[j].first, c * o.terms_[j].second);
        terms_ = std::move(out);
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        add_scaled(o, Scalar::one(field_));
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        add_scaled(o, -Scalar::one(field_));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_field(b);
        const VarSetPtr merged = merge_varsets(a.vars_, b.vars_);
        if (a.is_zero() || b.is_zero()) return zero(a.field_, merged);
        const MultiPoly xa = a.aligned_to(merged);
        const MultiPoly xb = b.aligned_to(merged);
        std::map<ExpVec, Scalar, ExpVecGreater> acc;
        const MultiPoly& small = xa.num_terms() <= xb.num_terms() ? xa : xb;
        const MultiPoly& large = xa.num_terms() <= xb.num_terms() ? xb : xa;
        for (const auto& [ks, cs] : small.terms_) {
            for (const auto& [kl, cl] : large.terms_) {
                ExpVec k = mono::mul(ks, kl);
                auto [it, inserted] = acc.try_emplace(std::move(k), cs * cl);
                if (!inserted) {
                    it->second += cs * cl;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [k, c] : acc) out.emplace_back(k, std::move(c));
        return MultiPoly(a.field_, merged, std::move(out));
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = one(field_, vars_);
        MultiPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    /// Relabel variables; images may collide (e.g. z1 -> y1 merging with an
    /// existing y1 slot), in which case exponents add.
    MultiPoly rename_vars(const std::vector<std::pair<VarId, VarId>>& mapping) const {
        VarSet target;
        std::vector<std::optional<VarId>> image(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            VarId v = (*vars_)[i];
            for (const auto& [from, to] : mapping)
                if (from == v) {
                    v = to;
                    break;
                }
            image[i] = v;
            target.push_back(v);
        }
        VarSetPtr tp = make_varset(std::move(target));
        std::vector<std::size_t> posmap(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) posmap[i] = var_position(*tp, *image[i]);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [key, c] : terms_) {
            ExpVec k = mono::unit(tp->size());
            k[0] = key[0];
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                const int s = k[posmap[i] + 1] + key[i + 1];
                if (s > 255) throw OutOfRange("rename_vars: exponent overflow");
                k[posmap[i] + 1] = static_cast<std::uint8_t>(s);
            }
            out.emplace_back(std::move(k), c);
        }
        return from_terms(field_, tp, std::move(out));
    }

    /// Swap two variables (a transposition acting on the polynomial ring).
    MultiPoly transpose_vars(const VarId& u, const VarId& v) const {
        if (u == v) return *this;
        const VarSetPtr target = merge_varsets(vars_, make_varset(VarSet{u, v}));
        MultiPoly p = aligned_to(target);
        const std::size_t pu = var_position(*target, u), pv = var_position(*target, v);
        for (auto& [key, c] : p.terms_) std::swap(key[pu + 1], key[pv + 1]);
        p.normalize();
        return p;
    }

    /// Algebra map determined by variable assignments; unassigned variables stay fixed.
    MultiPoly substitute(const std::vector<std::pair<VarId, MultiPoly>>& assignment) const {
        VarSet target;
        for (const auto& v : *vars_) {
            bool assigned = false;
            for (const auto& [from, to] : assignment)
                if (from == v) {
                    assigned = true;
                    for (const auto& w : to.vars()) target.push_back(w);
                    break;
                }
            if (!assigned) target.push_back(v);
        }
        VarSetPtr tp = make_varset(std::move(target));
        MultiPoly result = zero(field_, tp);
        for (const auto& [key, c] : terms_) {
            MultiPoly acc = constant(field_, tp, c);
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                const int e = key[i + 1];
                if (e == 0) continue;
                const VarId v = (*vars_)[i];
                const MultiPoly* repl = nullptr;
                for (const auto& [from, to] : assignment)
                    if (from == v) {
                        repl = &to;
                        break;
                    }
                if (repl) {
                    if (repl->field() != field_) throw FieldMismatch("substitute: field mismatch");
                    acc *= repl->pow(static_cast<unsigned>(e));
                } else {
                    acc *= variable(field_, tp, v, e);
                }
            }
            result += acc;
        }
        return result;
    }

    MultiPoly partial_derivative(const VarId& v) const {
        const auto pos = find_var(v);
        if (!pos) return zero(field_, vars_);
        std::vector<Term> out;
        for (const auto& [key, c] : terms_) {
            const int e = key[*pos + 1];
            if (e == 0) continue;
            const Scalar s = c * Scalar::from_integer(e, field_);
            if (s.is_zero()) continue;
            ExpVec k = key;
            k[*pos + 1] = static_cast<std::uint8_t>(e - 1);
            k[0] = static_cast<std::uint8_t>(k[0] - 1);
            out.emplace_back(std::move(k), s);
        }
        return MultiPoly(field_, vars_, std::move(out));  // derivative preserves term order
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.field_ != b.field_) return false;
        if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
        const VarSetPtr merged = merge_varsets(a.vars_, b.vars_);
        return a.aligned_to(merged).terms_ == b.aligned_to(merged).terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            std::string cs = c.to_string();
            bool negative = false;
            if (!cs.empty() && cs[0] == '-') {
                negative = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            const std::string ms = monomial_string(key);
            if (ms.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << ms;
            } else {
                os << cs << "*" << ms;
            }
        }
        return os.str();
    }

    /// Parses the format produced by to_string.
    static MultiPoly parse(const std::string& s, const FieldSpec& f);

private:
    MultiPoly(FieldSpec f, VarSetPtr vars, std::vector<Term> terms)
        : field_(std::move(f)), vars_(std::move(vars)), terms_(std::move(terms)) {}

    static std::size_t var_position(const VarSet& vs, const VarId& v) {
        const auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v)
            throw OutOfRange("MultiPoly: variable " + v.name() + " not in variable set");
        return static_cast<std::size_t>(it - vs.begin());
    }

    std::optional<std::size_t> find_var(const VarId& v) const {
        const auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
        if (it == vars_->end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - vars_->begin());
    }

    void check_field(const MultiPoly& o) const {
        if (field_ != o.field_)
            throw FieldMismatch("MultiPoly: mixed fields " + field_.name() + " and " + o.field_.name());
    }

    void normalize() {
        ExpVecGreater gt;
        std::sort(terms_.begin(), terms_.end(),
                  [&gt](const Term& a, const Term& b) { return gt(a.first, b.first); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!t.second.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    std::string monomial_string(const ExpVec& key) const {
        std::string s;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const int e = key[i + 1];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += (*vars_)[i].name();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    FieldSpec field_;
    VarSetPtr vars_;
    std::vector<Term> terms_;

    friend class PolyParser;
};

class PolyParser {
public:
    PolyParser(const std::string& s, const FieldSpec& f) : s_(s), f_(f) {}

    MultiPoly run() {
        std::vector<std::pair<std::vector<std::pair<VarId, int>>, Scalar>> collected;
        VarSet vars;
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("poly parse: expected '+' or '-' at position " + std::to_string(pos_));
            }
            auto [exps, coeff] = parse_term();
            if (sign < 0) coeff = -coeff;
            for (const auto& [v, e] : exps) vars.push_back(v);
            collected.emplace_back(std::move(exps), std::move(coeff));
            first = false;
            skip_ws();
        }
        VarSetPtr vp = make_varset(std::move(vars));
        MultiPoly r = MultiPoly::zero(f_, vp);
        for (const auto& [exps, coeff] : collected)
            r += MultiPoly::term(f_, vp, exps, coeff);
        return r;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    unsigned long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("poly parse: expected digit at position " + std::to_string(pos_));
        unsigned long v = 0;
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        v = std::stoul(digits);
        return v;
    }

    std::pair<std::vector<std::pair<VarId, int>>, Scalar> parse_term() {
        Scalar coeff = Scalar::one(f_);
        std::vector<std::pair<VarId, int>> exps;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(static_cast<unsigned long>(parse_uint()));
            mpz_class den(1);
            if (peek() == '/') {
                ++pos_;
                den = mpz_class(static_cast<unsigned long>(parse_uint()));
            }
            coeff = Scalar::from_rational(mpq_class(num, den), f_);
            have_factor = true;
        }
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (have_factor && !std::isalpha(static_cast<unsigned char>(peek()))) {
                break;
            }
            if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                if (!have_factor)
                    throw ParseError("poly parse: expected term at position " + std::to_string(pos_));
                break;
            }
            std::string name;
            while (std::isalpha(static_cast<unsigned char>(peek()))) name += s_[pos_++];
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("poly parse: variable '" + name + "' needs an index");
            const unsigned long idx = parse_uint();
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = static_cast<int>(parse_uint());
            }
            exps.emplace_back(VarId(name, static_cast<std::uint32_t>(idx)), e);
            have_factor = true;
        }
        return {std::move(exps), std::move(coeff)};
    }

    const std::string& s_;
    FieldSpec f_;
    std::size_t pos_ = 0;
};

inline MultiPoly MultiPoly::parse(const std::string& s, const FieldSpec& f) {
    return PolyParser(s, f).run();
}

/// Orbit sum of a single monomial under the symmetric group of alph: each
/// distinct image appears exactly once (coset representatives, never scaled
/// by stabilizer orders).
inline MultiPoly symmetrize_orbit(const MultiPoly& p, const Alphabet& alph) {
    if (p.num_terms() != 1)
        throw OutOfRange("symmetrize_orbit: input must be a single monomial");
    const VarSetPtr target = merge_varsets(p.varset(), make_varset({alph}));
    const MultiPoly q = p.aligned_to(target);
    const auto& [key, coeff] = q.terms().front();

    std::vector<std::size_t> positions;
    for (int i = 1; i <= alph.size; ++i) {
        const auto it = std::lower_bound(target->begin(), target->end(), alph.var(i));
        positions.push_back(static_cast<std::size_t>(it - target->begin()));
    }
    std::vector<std::uint8_t> exps;
    for (const auto pos : positions) exps.push_back(key[pos + 1]);
    std::sort(exps.begin(), exps.end());

    std::vector<MultiPoly::Term> out;
    do {
        ExpVec k = key;
        for (std::size_t i = 0; i < positions.size(); ++i) k[positions[i] + 1] = exps[i];
        out.emplace_back(std::move(k), coeff);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return MultiPoly::from_terms(p.field(), target, std::move(out));
}

/// sigma acting on the ring by relabelling each variable v to sigma(v).
inline MultiPoly permute_action(const std::vector<std::pair<VarId, VarId>>& sigma,
                                const MultiPoly& p) {
    std::vector<VarId> from, to;
    for (const auto& [f2, t2] : sigma) {
        from.push_back(f2);
        to.push_back(t2);
    }
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    if (from != to || std::adjacent_find(from.begin(), from.end()) != from.end())
        throw OutOfRange("permute_action: mapping is not a permutation");
    return p.rename_vars(sigma);
}

inline bool is_symmetric(const MultiPoly& p, const Alphabet& alph) {
    for (int i = 1; i + 1 <= alph.size; ++i)
        if (p.transpose_vars(alph.var(i), alph.var(i + 1)) != p) return false;
    return true;
}

inline bool is_antisymmetric(const MultiPoly& p, const Alphabet& alph) {
    const MultiPoly m = -p;
    for (int i = 1; i + 1 <= alph.size; ++i)
        if (p.transpose_vars(alph.var(i), alph.var(i + 1)) != m) return false;
    return true;
}

/// prod_{i<j} (v_i - v_j) over the given ascending variable list; empty product is 1.
inline MultiPoly vandermonde_on(const FieldSpec& f, const std::vector<VarId>& vs) {
    VarSetPtr vp = make_varset(VarSet(vs.begin(), vs.end()));
    MultiPoly r = MultiPoly::one(f, vp);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            r *= MultiPoly::variable(f, vp, vs[i]) - MultiPoly::variable(f, vp, vs[j]);
    return r;
}

inline MultiPoly vandermonde(const FieldSpec& f, const Alphabet& alph) {
    return vandermonde_on(f, alph.vars());
}

/// det(v_j^{e_i}) for strictly decreasing exponents e, expanded over Z with
/// signs and reduced into the field. Leading term is monic.
inline MultiPoly alternant_on(const FieldSpec& f, const std::vector<VarId>& vs,
                              const std::vector<int>& exps) {
    const std::size_t d = vs.size();
    if (exps.size() != d) throw OutOfRange("alternant_on: exponent count mismatch");
    if (d > 10) throw OutOfRange("alternant_on: more than 10 variables");
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (exps[i] <= exps[i + 1]) throw OutOfRange("alternant_on: exponents must strictly decrease");
    VarSetPtr vp = make_varset(VarSet(vs.begin(), vs.end()));
    if (d == 0) return MultiPoly::one(f, vp);

    const Scalar pos = Scalar::one(f);
    const Scalar neg = -pos;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::vector<MultiPoly::Term> out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (idx[i] > idx[j]) ++inversions;
        ExpVec key = mono::unit(d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto it = std::lower_bound(vp->begin(), vp->end(), vs[j]);
            mono::set_exp(key, static_cast<std::size_t>(it - vp->begin()), exps[idx[j]]);
        }
        out.emplace_back(std::move(key), (inversions % 2 == 0) ? pos : neg);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return MultiPoly::from_terms(f, vp, std::move(out));
}

/// a_{lambda+rho} = det(x_j^{lambda_i + D - i}).
inline MultiPoly alternant(const std::vector<int>& lambda, const Alphabet& alph,
                           const FieldSpec& f) {
    const int d = alph.size;
    if (static_cast<int>(lambda.size()) > d)
        throw ShapeTooLong("alternant: partition has more than " + std::to_string(d) + " parts");
    std::vector<int> exps;
    for (int i = 1; i <= d; ++i) {
        const int part = i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
        exps.push_back(part + d - i);
    }
    return alternant_on(f, alph.vars(), exps);
}

/// Exact quotient p / q w.r.t. graded lex; throws InexactDivision when no such
/// polynomial exists, DivisionByZero when q = 0.
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw DivisionByZero("exact_divide: division by zero polynomial");
    const VarSetPtr merged = merge_varsets(p.varset(), q.varset());
    const MultiPoly pa = p.aligned_to(merged);
    const MultiPoly qa = q.aligned_to(merged);
    if (pa.is_zero()) return pa;

    std::map<ExpVec, Scalar, ExpVecGreater> work;
    for (const auto& t : pa.terms()) work.insert(t);
    const ExpVec& qlm = qa.leading_monomial();
    const Scalar& qlc = qa.leading_coefficient();

    std::vector<MultiPoly::Term> quotient;
    while (!work.empty()) {
        const auto it = work.begin();
        if (!mono::divides(qlm, it->first))
            throw InexactDivision("exact_divide: remainder is nonzero");
        ExpVec t = mono::div(it->first, qlm);
        Scalar c = it->second / qlc;
        for (const auto& [k2, c2] : qa.terms()) {
            ExpVec key = mono::mul(t, k2);
            auto [pos, inserted] = work.try_emplace(std::move(key), Scalar::zero(p.field()));
            pos->second -= c * c2;
            if (pos->second.is_zero()) work.erase(pos);
        }
        quotient.emplace_back(std::move(t), std::move(c));
    }
    return MultiPoly::from_terms(p.field(), merged, std::move(quotient), /*presorted=*/true);
}

}  // namespace plethy
