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

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "errors.hpp"

namespace plethy {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline mpz_class to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

}  // namespace detail

/// Names the coefficient field: the rationals or GF(p) for machine-word prime p.
class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::Rationals), p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }

    static FieldSpec gf(std::uint64_t p) {
        if (p >= (1ull << 61))
            throw OutOfRange("FieldSpec: prime must satisfy p < 2^61, got " + std::to_string(p));
        if (!detail::is_prime_u64(p))
            throw OutOfRange("FieldSpec: " + std::to_string(p) + " is not prime");
        FieldSpec f;
        f.kind_ = FieldKind::PrimeField;
        f.p_ = p;
        return f;
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint64_t characteristic() const { return is_prime_field() ? p_ : 0; }
    std::uint64_t prime() const {
        if (!is_prime_field()) throw OutOfRange("FieldSpec::prime: field is Q");
        return p_;
    }

    std::string name() const {
        return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

    /// Accepts "Q" or "GF(p)".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return rationals();
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
            const std::string digits = s.substr(3, s.size() - 4);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("FieldSpec: cannot parse '" + s + "'");
            return gf(std::stoull(digits));
        }
        throw ParseError("FieldSpec: cannot parse '" + s + "' (expected \"Q\" or \"GF(p)\")");
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact element of Q (arbitrary-precision rational, lowest terms, positive
/// denominator) or of GF(p) (canonical residue in [0, p)). All arithmetic is exact.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f) {
        return f.is_rationals() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
    }
    static Scalar one(const FieldSpec& f) {
        return f.is_rationals() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1 % f.prime()});
    }

    /// Canonical image of an integer in the field (the ring homomorphism Z -> F).
    static Scalar from_integer(const mpz_class& n, const FieldSpec& f) {
        if (f.is_rationals()) return Scalar(f, mpq_class(n));
        mpz_class r = n % mpz_class(detail::to_mpz(f.prime()));
        if (r < 0) r += detail::to_mpz(f.prime());
        return Scalar(f, static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t())));
    }
    static Scalar from_integer(long n, const FieldSpec& f) { return from_integer(mpz_class(n), f); }

    /// Exact rational value; only meaningful over Q.
    static Scalar from_rational(const mpq_class& q, const FieldSpec& f) {
        if (f.is_rationals()) {
            mpq_class c = q;
            c.canonicalize();
            return Scalar(f, c);
        }
        Scalar num = from_integer(mpz_class(q.get_num()), f);
        Scalar den = from_integer(mpz_class(q.get_den()), f);
        return num / den;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        return field_.is_rationals() ? sgn(rat()) == 0 : res() == 0;
    }
    bool is_one() const { return *this == one(field_); }

    const mpq_class& rational_value() const {
        if (!field_.is_rationals()) throw FieldMismatch("Scalar: not a rational value");
        return rat();
    }
    std::uint64_t residue() const {
        if (!field_.is_prime_field()) throw FieldMismatch("Scalar: not a prime-field residue");
        return res();
    }

    Scalar operator-() const {
        if (field_.is_rationals()) return Scalar(field_, mpq_class(-rat()));
        return Scalar(field_, res() == 0 ? 0 : field_.prime() - res());
    }

    Scalar& operator+=(const Scalar& o) {
        check_field(o);
        if (field_.is_rationals()) {
            rat() += o.rat();
        } else {
            const std::uint64_t p = field_.prime();
            std::uint64_t r = res() + o.res();  // p < 2^61: no overflow
            if (r >= p) r -= p;
            res() = r;
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check_field(o);
        if (field_.is_rationals()) {
            rat() -= o.rat();
        } else {
            const std::uint64_t p = field_.prime();
            res() = res() >= o.res() ? res() - o.res() : res() + (p - o.res());
        }
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check_field(o);
        if (field_.is_rationals())
            rat() *= o.rat();
        else
            res() = detail::mulmod_u64(res(), o.res(), field_.prime());
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero("Scalar: inverse of zero in " + field_.name());
        if (field_.is_rationals()) return Scalar(field_, mpq_class(1) / rat());
        const std::uint64_t p = field_.prime();
        return Scalar(field_, detail::powmod_u64(res(), p - 2, p));
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r = one(field_);
        Scalar b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_) return false;
        return a.field_.is_rationals() ? a.rat() == b.rat() : a.res() == b.res();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const {
        if (field_.is_rationals()) return rat().get_str();
        return std::to_string(res());
    }

private:
    Scalar(const FieldSpec& f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(const FieldSpec& f, std::uint64_t r) : field_(f), v_(r) {}

    void check_field(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatch("Scalar: mixed fields " + field_.name() + " and " + o.field_.name());
    }

    mpq_class& rat() { return std::get<mpq_class>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint64_t& res() { return std::get<std::uint64_t>(v_); }
    std::uint64_t res() const { return std::get<std::uint64_t>(v_); }

    FieldSpec field_;
    std::variant<std::uint64_t, mpq_class> v_;
};

/// Canonical image of n in f; a ring homomorphism Z -> F.
inline Scalar reduce_integer(const mpz_class& n, const FieldSpec& f) {
    return Scalar::from_integer(n, f);
}
inline Scalar reduce_integer(long n, const FieldSpec& f) { return Scalar::from_integer(n, f); }

/// Exact binomial coefficient over Z; zero when k < 0 or k > n.
inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace plethy
