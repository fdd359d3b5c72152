/*
   Copyright 2026 The bicanon Authors

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

#ifndef BICANON_RATIONAL_HPP
#define BICANON_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace bicanon {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) {
        if (d == 0) throw division_by_zero();
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class &n) : q_(n) {}
    Rational(const mpz_class &n, const mpz_class &d) {
        if (d == 0) throw division_by_zero();
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    /// Parses "p" or "p/q" with optional sign; surrounding blanks allowed.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        num = trim(num);
        den = trim(den);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw parse_error("malformed rational '" + std::string(text) + "'", 0);
        std::string n(num);
        if (!n.empty() && n.front() == '+') n.erase(0, 1);
        mpz_class nz(n, 10), dz(std::string(den), 10);
        return Rational(nz, dz);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Value as a machine integer; throws when not an integer or out of range.
    std::int64_t to_int64() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw error("rational " + to_string() + " is not a machine integer");
        return q_.get_num().get_si();
    }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    /// Exact square root when this is the square of a rational.
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        if (!mpz_perfect_square_p(q_.get_num().get_mpz_t()) || !mpz_perfect_square_p(q_.get_den().get_mpz_t()))
            return std::nullopt;
        return Rational(mpz_class(sqrt(q_.get_num())), mpz_class(sqrt(q_.get_den())));
    }

    std::string to_string() const { return q_.get_str(10); }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }
    Rational &operator+=(const Rational &o) {
        q_ += o.q_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        q_ -= o.q_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        q_ *= o.q_;
        return *this;
    }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw division_by_zero();
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

} // namespace bicanon

#endif
