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

#ifndef BICANON_CYCLOTOMIC_HPP
#define BICANON_CYCLOTOMIC_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bicanon {

/// An element of Q(zeta) with zeta a primitive eighth root of unity, stored
/// as coordinates in the power basis 1, zeta, zeta^2, zeta^3. The minimal
/// polynomial is x^4 + 1, so the representation is unique and equality is a
/// coordinate comparison. zeta^2 plays the role of sqrt(-1) and
/// zeta - zeta^3 that of sqrt(2).
class FieldElem {
public:
    using Coords = std::array<Rational, 4>;

    FieldElem() = default;
    FieldElem(long n) : c_{Rational(n), 0, 0, 0} {} // NOLINT(google-explicit-constructor)
    FieldElem(const Rational &r) : c_{r, 0, 0, 0} {} // NOLINT(google-explicit-constructor)
    explicit FieldElem(Coords c) : c_(std::move(c)) {}

    static FieldElem zeta() { return FieldElem(Coords{0, 1, 0, 0}); }
    static FieldElem imag() { return FieldElem(Coords{0, 0, 1, 0}); }
    static FieldElem sqrt2() { return FieldElem(Coords{0, 1, 0, -1}); }
    /// zeta^k for any integer k.
    static FieldElem zeta_pow(long k) {
        k %= 8;
        if (k < 0) k += 8;
        Coords c{0, 0, 0, 0};
        c[static_cast<std::size_t>(k % 4)] = k < 4 ? 1 : -1;
        return FieldElem(c);
    }

    const Coords &coords() const { return c_; }
    const Rational &operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const { return c_[0].is_zero() && is_rational(); }
    bool is_one() const { return c_[0].is_one() && is_rational(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    FieldElem operator-() const { return FieldElem(Coords{-c_[0], -c_[1], -c_[2], -c_[3]}); }
    FieldElem &operator+=(const FieldElem &o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    FieldElem &operator-=(const FieldElem &o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FieldElem &operator*=(const FieldElem &o) {
        *this = *this * o;
        return *this;
    }
    FieldElem &operator/=(const FieldElem &o) {
        *this = *this * o.inverse();
        return *this;
    }
    friend FieldElem operator+(FieldElem a, const FieldElem &b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem &b) { return a -= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem &b) { return a /= b; }

    // zeta^4 = -1 folds the degree 4..6 part of the product back with a sign flip.
    friend FieldElem operator*(const FieldElem &a, const FieldElem &b) {
        std::array<Rational, 7> acc{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (b.c_[j].is_zero()) continue;
                acc[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return FieldElem(Coords{acc[0] - acc[4], acc[1] - acc[5], acc[2] - acc[6], acc[3]});
    }

    friend bool operator==(const FieldElem &a, const FieldElem &b) { return a.c_ == b.c_; }

    /// Multiplicative inverse, by solving the 4x4 system of multiplication by
    /// this element against the unit vector.
    FieldElem inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero field element");
        if (is_rational()) return FieldElem(c_[0].inverse());
        // Column k holds the coordinates of this * zeta^k.
        std::array<std::array<Rational, 5>, 4> m{};
        for (std::size_t k = 0; k < 4; ++k) {
            const FieldElem col = *this * zeta_pow(static_cast<long>(k));
            for (std::size_t r = 0; r < 4; ++r) m[r][k] = col.c_[r];
        }
        m[0][4] = 1;
        for (std::size_t col = 0; col < 4; ++col) {
            std::size_t piv = col;
            while (piv < 4 && m[piv][col].is_zero()) ++piv;
            if (piv == 4) throw division_by_zero("singular multiplication matrix");
            std::swap(m[piv], m[col]);
            const Rational inv = m[col][col].inverse();
            for (std::size_t c = col; c < 5; ++c) m[col][c] *= inv;
            for (std::size_t r = 0; r < 4; ++r) {
                if (r == col || m[r][col].is_zero()) continue;
                const Rational f = m[r][col];
                for (std::size_t c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
            }
        }
        return FieldElem(Coords{m[0][4], m[1][4], m[2][4], m[3][4]});
    }

    /// Integer power; negative exponents invert first.
    FieldElem pow(long e) const {
        FieldElem base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        FieldElem result(1);
        while (n) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return result;
    }

    /// Complex conjugation, zeta -> zeta^7.
    FieldElem conj() const { return FieldElem(Coords{c_[0], -c_[3], -c_[2], -c_[1]}); }

    /// Square root inside Q(zeta), if it exists. Works in the tower
    /// Q(i)(sqrt 2): the element is split as a + b*sqrt2 with a, b in Q(i).
    std::optional<FieldElem> sqrt() const;

    /// "c0,c1,c2,c3" with each coordinate "p" or "p/q".
    std::string encode() const {
        std::string s;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i) s += ',';
            s += c_[i].to_string();
        }
        return s;
    }

    static FieldElem decode(std::string_view text) {
        Coords c{};
        std::size_t start = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto comma = text.find(',', start);
            if ((i < 3) == (comma == std::string_view::npos))
                throw parse_error("field element needs exactly four comma separated rationals", start);
            const auto piece = text.substr(start, i < 3 ? comma - start : std::string_view::npos);
            try {
                c[i] = Rational::parse(piece);
            } catch (const parse_error &e) {
                throw parse_error(e.what(), start);
            }
            start = comma + 1;
        }
        return FieldElem(c);
    }

    /// Expression form readable by the polynomial parser, e.g.
    /// "1/2 + zeta8 - 3*zeta8^3".
    std::string to_expression() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < 4; ++k) {
            const Rational &r = c_[k];
            if (r.is_zero()) continue;
            Rational mag = r.sign() < 0 ? -r : r;
            if (first) {
                if (r.sign() < 0) os << '-';
            } else {
                os << (r.sign() < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                os << mag;
            } else {
                if (!mag.is_one()) os << mag << '*';
                os << "zeta8";
                if (k > 1) os << '^' << k;
            }
        }
        if (first) os << '0';
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const FieldElem &a) { return os << a.to_expression(); }

private:
    Coords c_{0, 0, 0, 0};
};

namespace detail {

// Square root in Q(i), with a + b*i given by two rationals.
inline std::optional<std::pair<Rational, Rational>> sqrt_gaussian(const Rational &a, const Rational &b) {
    if (b.is_zero()) {
        if (a.sign() >= 0) {
            if (auto r = a.sqrt_exact()) return std::pair{*r, Rational(0)};
            return std::nullopt;
        }
        if (auto r = (-a).sqrt_exact()) return std::pair{Rational(0), *r};
        return std::nullopt;
    }
    auto norm_root = (a * a + b * b).sqrt_exact();
    if (!norm_root) return std::nullopt;
    auto x = ((a + *norm_root) / Rational(2)).sqrt_exact();
    if (!x || x->is_zero()) return std::nullopt;
    return std::pair{*x, b / (Rational(2) * *x)};
}

inline FieldElem gaussian(const Rational &re, const Rational &im) {
    return FieldElem(FieldElem::Coords{re, 0, im, 0});
}

} // namespace detail

inline std::optional<FieldElem> FieldElem::sqrt() const {
    if (is_zero()) return FieldElem(0);
    // this = alpha + beta*sqrt2, alpha = c0 + c2 i, beta = p + q i with
    // sqrt2*(p + q i) = (p+q) zeta + (q-p) zeta^3.
    const Rational half(1, 2);
    const Rational ar = c_[0], ai = c_[2];
    const Rational bq = (c_[1] + c_[3]) * half, bp = (c_[1] - c_[3]) * half;
    const FieldElem alpha = detail::gaussian(ar, ai);
    const FieldElem beta = detail::gaussian(bp, bq);
    std::vector<FieldElem> candidates;
    if (beta.is_zero()) {
        if (auto x = detail::sqrt_gaussian(ar, ai)) candidates.push_back(detail::gaussian(x->first, x->second));
        const FieldElem half_alpha = alpha * FieldElem(half);
        if (auto y = detail::sqrt_gaussian(half_alpha[0], half_alpha[2]))
            candidates.push_back(detail::gaussian(y->first, y->second) * sqrt2());
    } else {
        // x^2 + 2y^2 = alpha, 2xy = beta  =>  x^2 = (alpha +- sqrt(alpha^2 - 2 beta^2)) / 2.
        const FieldElem disc = alpha * alpha - FieldElem(2) * beta * beta;
        if (auto d = detail::sqrt_gaussian(disc[0], disc[2])) {
            const FieldElem droot = detail::gaussian(d->first, d->second);
            for (const FieldElem &x2 : {(alpha + droot) * FieldElem(half), (alpha - droot) * FieldElem(half)}) {
                auto x = detail::sqrt_gaussian(x2[0], x2[2]);
                if (!x) continue;
                const FieldElem xe = detail::gaussian(x->first, x->second);
                if (xe.is_zero()) continue;
                const FieldElem ye = beta / (FieldElem(2) * xe);
                candidates.push_back(xe + ye * sqrt2());
            }
        }
    }
    for (const auto &s : candidates)
        if (s * s == *this) return s;
    return std::nullopt;
}

/// Smallest n <= 8 with a^n = 1, if any. Every root of unity in Q(zeta8)
/// has order dividing 8.
inline std::optional<int> root_of_unity_order(const FieldElem &a) {
    if (a.is_zero()) return std::nullopt;
    FieldElem p = a;
    for (int n = 1; n <= 8; ++n) {
        if (p.is_one()) return n;
        p *= a;
    }
    return std::nullopt;
}

} // namespace bicanon

#endif
