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

#ifndef BICANON_RATFUNC_HPP
#define BICANON_RATFUNC_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace bicanon {

/// Quotient of two polynomials. Normalization cancels the common monomial
/// content, divides out the denominator (or numerator) when one divides the
/// other, and makes the denominator's leading coefficient 1. The result is
/// not a fully reduced fraction; equality is decided by cross
/// multiplication.
class RatFunc {
public:
    RatFunc() : num_(VarTable::standard()), den_(MPoly::constant(VarTable::standard(), 1)) {}
    RatFunc(MPoly p) // NOLINT(google-explicit-constructor)
        : num_(std::move(p)), den_(MPoly::constant(num_.vars(), 1)) {}
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        num_.require_same_table(den_);
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        normalize();
    }

    static RatFunc constant(VarTablePtr vars, const FieldElem &c) { return RatFunc(MPoly::constant(std::move(vars), c)); }
    static RatFunc variable(VarTablePtr vars, std::size_t i) { return RatFunc(MPoly::variable(std::move(vars), i)); }

    const MPoly &num() const { return num_; }
    const MPoly &den() const { return den_; }
    const VarTablePtr &vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// True when both numerator and denominator are constants.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    FieldElem constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool depends_on(std::size_t var) const { return num_.depends_on(var) || den_.depends_on(var); }

    /// The polynomial value when the denominator is a constant.
    MPoly as_polynomial() const {
        if (!is_polynomial()) throw invariant_error("rational function is not a polynomial: " + to_string());
        return num_ * den_.constant_value().inverse();
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
        if (a.is_zero() || b.is_zero()) return RatFunc(MPoly(a.vars()));
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) {
        if (b.is_zero()) throw division_by_zero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Formal derivative by the quotient rule.
    RatFunc derivative(std::size_t var) const {
        if (den_.is_constant()) return RatFunc(num_.derivative(var), den_);
        return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    /// Equality as rational functions: r.num*s.den - s.num*r.den == 0.
    friend bool operator==(const RatFunc &r, const RatFunc &s) {
        if (r.den_ == s.den_) return r.num_ == s.num_;
        return r.num_ * s.den_ == s.num_ * r.den_;
    }

    std::string to_string() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    friend std::ostream &operator<<(std::ostream &os, const RatFunc &r) { return os << r.to_string(); }

private:
    struct raw_tag {};
    RatFunc(MPoly num, MPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = MPoly::constant(num_.vars(), 1);
            return;
        }
        // Monomial content.
        Exponent common = num_.min_exponent();
        const Exponent dmin = den_.min_exponent();
        bool any = false;
        for (std::size_t i = 0; i < common.size(); ++i) {
            common[i] = std::min(common[i], dmin[i]);
            any = any || common[i] != 0;
        }
        if (any) {
            num_ = num_.unshifted(common);
            den_ = den_.unshifted(common);
        }
        // One side divides the other.
        if (!den_.is_monomial()) {
            if (auto q = try_divide(num_, den_)) {
                num_ = std::move(*q);
                den_ = MPoly::constant(num_.vars(), 1);
            } else if (!num_.is_monomial()) {
                if (auto q2 = try_divide(den_, num_)) {
                    den_ = std::move(*q2);
                    num_ = MPoly::constant(den_.vars(), 1);
                }
            }
        }
        const FieldElem lc = den_.leading_coefficient();
        if (!lc.is_one()) {
            const FieldElem inv = lc.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    MPoly num_;
    MPoly den_;
};

inline bool ratfunc_eq(const RatFunc &r, const RatFunc &s) { return r == s; }

/// Variable index -> replacement. Unassigned variables stay themselves.
using Assignment = std::map<std::size_t, RatFunc>;

/// Evaluates p at the assignment over a common denominator
/// prod den_v^{deg_v(p)}, which keeps every intermediate step polynomial.
inline RatFunc poly_substitute(const MPoly &p, const Assignment &assignment) {
    const auto &vars = p.vars();
    if (p.is_zero()) return RatFunc(MPoly(vars));
    struct Slot {
        std::size_t var;
        unsigned max_deg;
        std::vector<MPoly> num_pows;
        std::vector<MPoly> den_pows;
    };
    std::vector<Slot> slots;
    MPoly common = MPoly::constant(vars, 1);
    for (const auto &[v, r] : assignment) {
        r.num().require_same_table(p);
        const unsigned d = p.degree_in(v);
        if (d == 0) continue;
        Slot s{v, d, {MPoly::constant(vars, 1)}, {MPoly::constant(vars, 1)}};
        for (unsigned k = 1; k <= d; ++k) {
            s.num_pows.push_back(s.num_pows.back() * r.num());
            s.den_pows.push_back(s.den_pows.back() * r.den());
        }
        common *= s.den_pows.back();
        slots.push_back(std::move(s));
    }
    MPoly total(vars);
    for (const auto &[e, c] : p.terms()) {
        Exponent rest = e;
        for (const auto &s : slots) rest[s.var] = 0;
        MPoly term = MPoly::monomial(vars, rest, c);
        for (const auto &s : slots) {
            const unsigned k = e[s.var];
            if (k) term *= s.num_pows[k];
            if (k != s.max_deg) term *= s.den_pows[s.max_deg - k];
        }
        total += term;
    }
    return RatFunc(std::move(total), std::move(common));
}

inline RatFunc ratfunc_substitute(const RatFunc &r, const Assignment &assignment) {
    if (assignment.empty()) return r;
    return poly_substitute(r.num(), assignment) / poly_substitute(r.den(), assignment);
}

inline RatFunc partial_derivative(const RatFunc &r, std::size_t var) { return r.derivative(var); }

/// det [[d fy/dy, d fy/dz], [d fz/dy, d fz/dz]].
inline RatFunc jacobian_det2(const RatFunc &fy, const RatFunc &fz, std::size_t y, std::size_t z) {
    return fy.derivative(y) * fz.derivative(z) - fy.derivative(z) * fz.derivative(y);
}

} // namespace bicanon

#endif
