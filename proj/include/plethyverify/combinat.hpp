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
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace plethy {

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw OutOfRange("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw OutOfRange("Partition: parts must be weakly decreasing");
        }
        parts_ = std::move(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int i) const {  // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool fits_in_box(int max_part, int max_len) const {
        return length() <= max_len && (parts_.empty() || parts_[0] <= max_part);
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// All partitions with at most max_len parts, each at most max_part, ordered by
/// size and then lexicographically. This is the canonical basis order used by
/// the model spaces.
inline std::vector<Partition> partitions_in_box(int max_part, int max_len) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining_len, int cap) {
        all.push_back(cur);
        if (remaining_len == 0) return;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(remaining_len - 1, p);
            cur.pop_back();
        }
    };
    rec(max_len, max_part);
    std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Partition> out;
    out.reserve(all.size());
    for (auto& v : all) out.emplace_back(std::move(v));
    return out;
}

/// The hook (M+1, 1^{N-1}): arm M >= 0, leg N-1 with N >= 1.
struct HookShape {
    int M = 0;
    int N = 1;

    HookShape(int m, int n) : M(m), N(n) {
        if (m < 0 || n < 1) throw OutOfRange("HookShape: need M >= 0 and N >= 1");
    }

    Partition shape() const {
        std::vector<int> parts{M + 1};
        for (int i = 1; i < N; ++i) parts.push_back(1);
        return Partition(parts);
    }
};

/// A filling of a Young diagram by integers >= 0.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lens;
        for (const auto& r : rows_) {
            lens.push_back(static_cast<int>(r.size()));
            for (int e : r)
                if (e < 0) throw OutOfRange("Tableau: entries must be >= 0");
        }
        shape_ = Partition(lens);  // validates weakly decreasing row lengths
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int e : r) m = std::max(m, e);
        return m;
    }

    int entry_sum() const {
        int s = 0;
        for (const auto& r : rows_)
            for (int e : r) s += e;
        return s;
    }

    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
                if (r > 0 && c < rows_[r - 1].size() && rows_[r][c] <= rows_[r - 1][c]) return false;
            }
        }
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) s += ",";
            s += "[";
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) s += ",";
                s += std::to_string(rows_[r][c]);
            }
            s += "]";
        }
        return s + "]";
    }

    static Tableau parse(const std::string& s) {
        std::vector<std::vector<int>> rows;
        std::size_t i = 0;
        auto expect = [&](char c) {
            if (i >= s.size() || s[i] != c)
                throw ParseError("Tableau: expected '" + std::string(1, c) + "' in " + s);
            ++i;
        };
        expect('[');
        while (i < s.size() && s[i] != ']') {
            expect('[');
            std::vector<int> row;
            while (i < s.size() && s[i] != ']') {
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw ParseError("Tableau: expected digit in " + s);
                row.push_back(std::stoi(s.substr(i, j - i)));
                i = j;
                if (i < s.size() && s[i] == ',') ++i;
            }
            expect(']');
            rows.push_back(std::move(row));
            if (i < s.size() && s[i] == ',') ++i;
        }
        expect(']');
        return Tableau(rows);
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// All semistandard fillings of the shape with entries in {0..max_entry},
/// in lexicographic order of the row reading word.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.length() == 0) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.part(i), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == shape.length()) {
            out.emplace_back(rows);
            return;
        }
        const int next_r = (c + 1 < shape.part(r + 1)) ? r : r + 1;
        const int next_c = (c + 1 < shape.part(r + 1)) ? c + 1 : 0;
        int lo = 0;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && c < shape.part(r)) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int e = lo; e <= max_entry; ++e) {
            rows[r][c] = e;
            fill(next_r, next_c);
        }
        rows[r][c] = 0;
    };
    fill(0, 0);
    return out;
}

/// binom(d+M+1, M+N) * binom(M+N-1, M); the number of semistandard hook fillings.
inline mpz_class hook_dimension(int M, int N, int d) {
    if (N < 1 || M < 0) throw OutOfRange("hook_dimension: need N >= 1, M >= 0");
    return binomial(d + M + 1, M + N) * binomial(M + N - 1, M);
}

/// Encodes a semistandard hook tableau as (S, A): S an (M+N)-subset of
/// {0..d+M}, A an M-subset of S minus its minimum.
inline std::pair<std::vector<int>, std::vector<int>> ssyt_to_subset_pair(const Tableau& t, int M,
                                                                         int N, int d) {
    if (t.shape() != HookShape(M, N).shape())
        throw ShapeMismatch("ssyt_to_subset_pair: tableau is not the (M+1,1^{N-1}) hook");
    if (!t.is_semistandard() || t.max_entry() > d)
        throw OutOfRange("ssyt_to_subset_pair: tableau must be semistandard with entries <= d");
    const auto& rows = t.rows();
    std::vector<int> a(rows[0]);                    // a_0 <= a_1 <= ... <= a_M
    std::vector<int> b;                             // b_1 < ... < b_{N-1}
    for (int i = 1; i < N; ++i) b.push_back(rows[i][0]);

    std::vector<int> S, A;
    S.push_back(a[0]);
    for (int j = 1; j <= M; ++j) {
        S.push_back(a[j] + j);
        A.push_back(a[j] + j);
    }
    for (int i = 1; i <= N - 1; ++i) {
        int s_i = 0;
        for (int j = 1; j <= M; ++j)
            if (a[j] < b[i - 1]) ++s_i;
        S.push_back(b[i - 1] + s_i);
    }
    std::sort(S.begin(), S.end());
    std::sort(A.begin(), A.end());
    return {S, A};
}

/// Inverse of ssyt_to_subset_pair.
inline Tableau subset_pair_to_ssyt(const std::vector<int>& S_in, const std::vector<int>& A_in,
                                   int M, int N, int d) {
    std::vector<int> S(S_in), A(A_in);
    std::sort(S.begin(), S.end());
    std::sort(A.begin(), A.end());
    if (static_cast<int>(S.size()) != M + N || static_cast<int>(A.size()) != M)
        throw OutOfRange("subset_pair_to_ssyt: wrong subset sizes");

    const int a0 = S.front();
    std::vector<int> a{a0};
    for (int j = 1; j <= M; ++j) a.push_back(A[j - 1] - j);

    std::vector<int> rest;
    {
        std::vector<int> tmp;
        std::set_difference(S.begin(), S.end(), A.begin(), A.end(), std::back_inserter(tmp));
        for (int v : tmp)
            if (v != a0) rest.push_back(v);
    }
    std::vector<int> b;
    for (int c : rest) {
        bool found = false;
        for (int s = 0; s <= M && !found; ++s) {
            const int cand = c - s;
            int count = 0;
            for (int j = 1; j <= M; ++j)
                if (a[j] < cand) ++count;
            if (count == s) {
                b.push_back(cand);
                found = true;
            }
        }
        if (!found) throw OutOfRange("subset_pair_to_ssyt: no consistent column entry");
    }

    std::vector<std::vector<int>> rows{a};
    for (int v : b) rows.push_back({v});
    Tableau t(rows);
    if (!t.is_semistandard() || t.max_entry() > d)
        throw OutOfRange("subset_pair_to_ssyt: reconstruction is not semistandard");
    return t;
}

/// Univariate polynomial in q with exact integer coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return constant(1); }
    static QPoly constant(long v) { return QPoly(std::vector<mpz_class>{mpz_class(v)}); }
    static QPoly q_power(int k) {
        std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, mpz_class(0));
        c.back() = 1;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coefficient(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpz_class(0);
    }

    mpz_class eval_at_one() const {
        mpz_class s = 0;
        for (const auto& c : c_) s += c;
        return s;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(int(i)) + b.coefficient(int(i));
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(int(i)) - b.coefficient(int(i));
        return QPoly(std::move(c));
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const bool neg = c_[i] < 0;
            mpz_class mag = abs(c_[i]);
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            const std::string qs = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
            if (qs.empty()) {
                s += mag.get_str();
            } else {
                if (mag != 1) s += mag.get_str();
                s += qs;
            }
        }
        return s;
    }

    /// Coefficient list, ascending: "[0,1,2,2,2,1]".
    std::string coefficient_list() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
        return s + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1}.
inline QPoly q_int(int n) {
    if (n < 0) throw OutOfRange("q_int: negative n");
    return QPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

/// Gaussian binomial via the q-Pascal recurrence over Z (no division).
inline QPoly q_binomial(int n, int m) {
    if (m < 0 || m > n) throw OutOfRange("q_binomial: need 0 <= m <= n");
    // row i of the table holds [i choose j]_q for j = 0..min(i,m)
    std::vector<std::vector<QPoly>> row(2);
    row[0] = {QPoly::one()};
    for (int i = 1; i <= n; ++i) {
        const auto& prev = row[(i + 1) % 2];
        auto& cur = row[i % 2];
        cur.assign(static_cast<std::size_t>(std::min(i, m)) + 1, QPoly::zero());
        cur[0] = QPoly::one();
        for (int j = 1; j <= std::min(i, m); ++j) {
            // [i,j] = [i-1,j-1] + q^j [i-1,j]
            QPoly t = prev[static_cast<std::size_t>(j - 1)];
            if (j < static_cast<int>(prev.size()))
                t += QPoly::q_power(j) * prev[static_cast<std::size_t>(j)];
            cur[static_cast<std::size_t>(j)] = std::move(t);
        }
    }
    return row[n % 2][static_cast<std::size_t>(m)];
}

inline mpz_class catalan_number(int k) {
    if (k < 0) throw OutOfRange("catalan_number: negative k");
    return binomial(2 * k, k) / (k + 1);
}

/// q^{binom(N,2)} [M+N-1 over M]_q [M+d+1 over M+N]_q; zero when the column
/// cannot be filled (N > d+1).
inline QPoly hook_character_product(int M, int N, int d) {
    if (N < 1 || M < 0) throw OutOfRange("hook_character_product: need N >= 1, M >= 0");
    if (N > d + 1) return QPoly::zero();
    return QPoly::q_power(N * (N - 1) / 2) * q_binomial(M + N - 1, M) * q_binomial(M + d + 1, M + N);
}

/// sum over semistandard hook fillings of q^(entry sum).
inline QPoly hook_character_tableau_sum(int M, int N, int d) {
    if (N < 1 || M < 0) throw OutOfRange("hook_character_tableau_sum: need N >= 1, M >= 0");
    QPoly s = QPoly::zero();
    for (const auto& t : enumerate_ssyt(HookShape(M, N).shape(), d))
        s += QPoly::q_power(t.entry_sum());
    return s;
}

/// s_lambda = a_{lambda+rho} / a_rho, computed from integer alternants reduced
/// into the field.
inline MultiPoly schur_poly(const Partition& lambda, const Alphabet& alph, const FieldSpec& f) {
    return exact_divide(alternant(lambda.parts(), alph, f), vandermonde(f, alph));
}

}  // namespace plethy
