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

#ifndef BICANON_QAUT_HPP
#define BICANON_QAUT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birational.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"

namespace bicanon {

/// Mobius transformation t -> (a t + b) / (c t + d), stored up to scalar
/// with the first nonzero entry (in the order a, b, c, d) equal to 1.
class Mobius {
public:
    Mobius() : Mobius(1, 0, 0, 1) {}
    Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) throw invariant_error("singular Mobius matrix");
        normalize();
    }

    static Mobius scale(const FieldElem &s) { return {s, 0, 0, 1}; }
    static Mobius reciprocal(const FieldElem &s = FieldElem(1)) { return {0, s, 1, 0}; }

    const FieldElem &a() const { return m_[0]; }
    const FieldElem &b() const { return m_[1]; }
    const FieldElem &c() const { return m_[2]; }
    const FieldElem &d() const { return m_[3]; }

    bool is_identity() const { return m_[1].is_zero() && m_[2].is_zero() && m_[0] == m_[3]; }

    /// (this o o)(t) = this(o(t)).
    friend Mobius operator*(const Mobius &x, const Mobius &y) {
        return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
                x.c() * y.b() + x.d() * y.d()};
    }
    Mobius inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

    /// Image of a point of P1; nullopt is infinity.
    std::optional<FieldElem> apply(const std::optional<FieldElem> &t) const {
        if (!t) {
            if (c().is_zero()) return std::nullopt;
            return a() / c();
        }
        const FieldElem den = c() * *t + d();
        if (den.is_zero()) return std::nullopt;
        return (a() * *t + b()) / den;
    }

    RatFunc apply(const RatFunc &t) const {
        const auto &vars = t.vars();
        auto k = [&](const FieldElem &x) { return RatFunc::constant(vars, x); };
        return (k(a()) * t + k(b())) / (k(c()) * t + k(d()));
    }

    friend bool operator==(const Mobius &, const Mobius &) = default;

    std::string to_string() const {
        return "[[" + a().to_expression() + ", " + b().to_expression() + "], [" + c().to_expression() + ", " +
               d().to_expression() + "]]";
    }

private:
    void normalize() {
        for (const auto &x : m_) {
            if (x.is_zero()) continue;
            if (!x.is_one()) {
                const FieldElem inv = x.inverse();
                for (auto &y : m_) y *= inv;
            }
            return;
        }
    }

    std::array<FieldElem, 4> m_;
};

/// Point of P1; nullopt stands for infinity.
using P1Point = std::optional<FieldElem>;

inline std::string p1_to_string(const P1Point &p) { return p ? p->to_expression() : "inf"; }

struct MobiusFixedPoints {
    unsigned count = 0;
    bool parabolic = false;
    /// Present when every fixed point lies in Q(zeta8).
    std::optional<std::vector<P1Point>> points;
};

/// Fixed points in P1 of a non-identity Mobius map: roots of
/// c t^2 + (d - a) t - b = 0, with infinity when c = 0, counted without
/// multiplicity.
inline MobiusFixedPoints mobius_fixed_points(const Mobius &m) {
    if (m.is_identity()) throw invariant_error("identity Mobius map has a fixed line");
    MobiusFixedPoints r;
    const FieldElem &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    if (c.is_zero()) {
        if (a == d) {
            r.count = 1;
            r.parabolic = true;
            r.points = std::vector<P1Point>{std::nullopt};
        } else {
            r.count = 2;
            r.points = std::vector<P1Point>{std::nullopt, b / (d - a)};
        }
        return r;
    }
    const FieldElem disc = (d - a) * (d - a) + FieldElem(4) * b * c;
    const FieldElem two_c = FieldElem(2) * c;
    if (disc.is_zero()) {
        r.count = 1;
        r.parabolic = true;
        r.points = std::vector<P1Point>{(a - d) / two_c};
        return r;
    }
    r.count = 2;
    if (auto s = disc.sqrt()) r.points = std::vector<P1Point>{(a - d + *s) / two_c, (a - d - *s) / two_c};
    return r;
}

enum class QAutShape { direct, swap };

/// Automorphism of P1 x P1 = Q preserving or exchanging the rulings:
/// direct acts as (Y, Z) -> (m1 Y, m2 Z), swap as (Y, Z) -> (m1 Z, m2 Y).
struct QAut {
    QAutShape shape = QAutShape::direct;
    Mobius m1;
    Mobius m2;
    std::string label;

    static QAut identity() { return {}; }

    bool is_identity() const { return shape == QAutShape::direct && m1.is_identity() && m2.is_identity(); }

    friend bool operator==(const QAut &x, const QAut &y) {
        return x.shape == y.shape && x.m1 == y.m1 && x.m2 == y.m2;
    }

    std::string to_string() const {
        return std::string(shape == QAutShape::direct ? "direct" : "swap") + " " + m1.to_string() + " " +
               m2.to_string();
    }
};

/// (g o h)(p) = g(h(p)).
inline QAut compose(const QAut &g, const QAut &h) {
    using enum QAutShape;
    if (g.shape == direct && h.shape == direct) return {direct, g.m1 * h.m1, g.m2 * h.m2, {}};
    if (g.shape == direct && h.shape == swap) return {swap, g.m1 * h.m1, g.m2 * h.m2, {}};
    if (g.shape == swap && h.shape == direct) return {swap, g.m1 * h.m2, g.m2 * h.m1, {}};
    return {direct, g.m1 * h.m2, g.m2 * h.m1, {}};
}

inline std::optional<unsigned> qaut_order(const QAut &g, unsigned max_n = 16) {
    QAut p = g;
    for (unsigned n = 1; n <= max_n; ++n) {
        if (p.is_identity()) return n;
        p = compose(g, p);
    }
    return std::nullopt;
}

inline QAut qaut_inverse(const QAut &g) {
    if (g.shape == QAutShape::direct) return {QAutShape::direct, g.m1.inverse(), g.m2.inverse(), {}};
    // (m1 Z, m2 Y) inverts to (m2^-1 Z, m1^-1 Y).
    return {QAutShape::swap, g.m2.inverse(), g.m1.inverse(), {}};
}

/// Lift to the K3 frame with the cover coordinate left unchanged.
inline BirMap qaut_to_birmap(const QAut &g, const VarTablePtr &vars = VarTable::standard()) {
    const Frame fr = Frame::k3(*vars);
    const RatFunc Y = RatFunc::variable(vars, fr.u), Z = RatFunc::variable(vars, fr.v);
    if (g.shape == QAutShape::direct) return {fr, RatFunc::variable(vars, fr.cover), g.m1.apply(Y), g.m2.apply(Z), g.label};
    return {fr, RatFunc::variable(vars, fr.cover), g.m1.apply(Z), g.m2.apply(Y), g.label};
}

struct QAutFixedPoints {
    unsigned count = 0;
    bool parabolic = false;
    std::optional<std::vector<std::pair<P1Point, P1Point>>> points;
};

/// Fixed points of a non-identity automorphism of Q. Direct shape: product
/// of the per-factor counts (a trivial factor is an error since it fixes a
/// whole ruling line). Swap shape: Y = m1(m2(Y)) and Z = m2(Y).
inline QAutFixedPoints qaut_fixed_points(const QAut &g) {
    if (g.is_identity()) throw invariant_error("identity has no isolated fixed points");
    QAutFixedPoints r;
    if (g.shape == QAutShape::direct) {
        if (g.m1.is_identity() || g.m2.is_identity()) throw invariant_error("trivial factor fixes a curve");
        const auto f1 = mobius_fixed_points(g.m1), f2 = mobius_fixed_points(g.m2);
        r.count = f1.count * f2.count;
        r.parabolic = f1.parabolic || f2.parabolic;
        if (f1.points && f2.points) {
            r.points.emplace();
            for (const auto &p : *f1.points)
                for (const auto &q : *f2.points) r.points->emplace_back(p, q);
        }
        return r;
    }
    const Mobius n = g.m1 * g.m2;
    if (n.is_identity()) throw invariant_error("swap map fixes a curve");
    const auto f = mobius_fixed_points(n);
    r.count = f.count;
    r.parabolic = f.parabolic;
    if (f.points) {
        r.points.emplace();
        for (const auto &p : *f.points) r.points->emplace_back(p, g.m2.apply(p));
    }
    return r;
}

/// Trace on NS(Q) = Z^2: 2 when both rulings are kept, 0 when exchanged.
inline int qaut_ns_trace(const QAut &g) { return g.shape == QAutShape::direct ? 2 : 0; }

/// The concrete automorphisms of Q used by the normal-form argument.
namespace qauts {
inline QAut iota() { return {QAutShape::direct, Mobius::scale(-1), Mobius::scale(-1), "iota"}; }
inline QAut phi1() { return {QAutShape::direct, Mobius::reciprocal(), Mobius::reciprocal(), "phi1"}; }
inline QAut iota_phi1() { return {QAutShape::direct, Mobius::reciprocal(-1), Mobius::reciprocal(-1), "iota_phi1"}; }
/// (Y, Z) -> (s/Z, sY) for s = +-1.
inline QAut phi2(int sign) {
    return {QAutShape::swap, Mobius::reciprocal(sign), Mobius::scale(sign), sign > 0 ? "phi2+" : "phi2-"};
}
} // namespace qauts

struct K4NormalForm {
    bool klein_four = false;        ///< iota, phi1 commuting involutions with (iota phi1)^2 = id
    bool phi2_squares = false;      ///< phi2+- squared equals phi1, both of order 4
    std::size_t candidates = 0;     ///< size of the monomial candidate set searched
    std::vector<QAut> square_roots; ///< every candidate g with g^2 = phi1
    std::vector<QAut> direct_roots; ///< the direct-shape ones among them
    /// Square roots up to inversion (each generates the same cyclic group as
    /// its inverse); expected to be exactly phi2+ and phi2-.
    std::vector<QAut> roots_up_to_inverse;
    bool ok = false;
};

/// Normal form of the residual Klein four-group acting on Q, and a
/// brute-force search for square roots of phi1 among the maps whose
/// coordinates are a*Y, a/Y, a*Z or a/Z with a an eighth root of unity.
inline K4NormalForm k4_normal_form_details() {
    using namespace qauts;
    K4NormalForm r;
    const QAut id = QAut::identity();
    const QAut i = iota(), p1 = phi1();
    r.klein_four = !i.is_identity() && !p1.is_identity() && compose(i, i).is_identity() &&
                   compose(p1, p1).is_identity() && compose(i, p1) == compose(p1, i) &&
                   compose(compose(i, p1), compose(i, p1)).is_identity() && compose(i, p1) == iota_phi1() &&
                   !(compose(i, p1) == id);
    r.phi2_squares = true;
    for (int s : {1, -1}) {
        const QAut p2 = phi2(s);
        r.phi2_squares = r.phi2_squares && compose(p2, p2) == p1 && qaut_order(p2) == 4u;
    }

    // Coordinate kinds: 0 = aY, 1 = a/Y, 2 = aZ, 3 = a/Z.
    auto factor = [](int kind, const FieldElem &a) { return kind % 2 == 0 ? Mobius::scale(a) : Mobius::reciprocal(a); };
    for (int k1 = 0; k1 < 4; ++k1)
        for (int k2 = 0; k2 < 4; ++k2) {
            const bool first_y = k1 < 2, second_y = k2 < 2;
            if (first_y == second_y) continue; // not an automorphism
            for (long a = 0; a < 8; ++a)
                for (long b = 0; b < 8; ++b) {
                    ++r.candidates;
                    QAut g{first_y ? QAutShape::direct : QAutShape::swap, factor(k1, FieldElem::zeta_pow(a)),
                           factor(k2, FieldElem::zeta_pow(b)), {}};
                    if (!(compose(g, g) == p1)) continue;
                    r.square_roots.push_back(g);
                    if (g.shape == QAutShape::direct) r.direct_roots.push_back(g);
                    const QAut gi = qaut_inverse(g);
                    const bool seen = std::any_of(r.roots_up_to_inverse.begin(), r.roots_up_to_inverse.end(),
                                                  [&](const QAut &h) { return h == g || h == gi; });
                    if (!seen) r.roots_up_to_inverse.push_back(g);
                }
        }
    for (auto &g : r.roots_up_to_inverse) {
        if (g == phi2(1) || qaut_inverse(g) == phi2(1)) g = phi2(1);
        else if (g == phi2(-1) || qaut_inverse(g) == phi2(-1)) g = phi2(-1);
    }
    const auto has = [&](const QAut &q) {
        return std::any_of(r.roots_up_to_inverse.begin(), r.roots_up_to_inverse.end(), [&](const QAut &h) { return h == q; });
    };
    r.ok = r.klein_four && r.phi2_squares && r.direct_roots.empty() && r.roots_up_to_inverse.size() == 2 &&
           has(phi2(1)) && has(phi2(-1));
    return r;
}

inline bool k4_normal_form_check() { return k4_normal_form_details().ok; }

} // namespace bicanon

#endif
