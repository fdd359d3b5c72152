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

#ifndef BICANON_COVER_RING_HPP
#define BICANON_COVER_RING_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "expr_parser.hpp"
#include "ratfunc.hpp"

namespace bicanon {

/// Which variables play the roles of the cover coordinate and the two base
/// coordinates of P1 x P1.
struct Frame {
    std::size_t cover;
    std::size_t u;
    std::size_t v;

    /// (w, y, z): the Horikawa double cover.
    static Frame enriques(const VarTable &t) { return {t.index("w"), t.index("y"), t.index("z")}; }
    /// (W, Y, Z): the K3 cover.
    static Frame k3(const VarTable &t) { return {t.index("W"), t.index("Y"), t.index("Z")}; }

    friend bool operator==(const Frame &, const Frame &) = default;
};

enum class FamilyKind { enriques_horikawa, k3_cover };

inline const char *to_string(FamilyKind k) {
    return k == FamilyKind::enriques_horikawa ? "enriques_horikawa" : "k3_cover";
}

/// Exponent pairs (i, j) of the monomials y^i z^j allowed in a Horikawa
/// branch curve: 4 <= i + 2j <= 8 with 0 <= i, j <= 4.
inline std::set<std::pair<int, int>> horikawa_support() {
    std::set<std::pair<int, int>> s;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
            if (i + 2 * j >= 4 && i + 2 * j <= 8) s.emplace(i, j);
    return s;
}

/// A family of double covers of P1 x P1. For the Horikawa kind the surface
/// is w^2 = z * f(y, z); for the K3 kind it is W^2 = g(Y, Z). The branch
/// polynomial is linear in the parameters.
struct SurfaceFamily {
    std::string name;
    FamilyKind kind = FamilyKind::enriques_horikawa;
    MPoly branch;
    std::vector<std::string> parameters;

    const VarTablePtr &vars() const { return branch.vars(); }
    Frame frame() const {
        return kind == FamilyKind::enriques_horikawa ? Frame::enriques(*vars()) : Frame::k3(*vars());
    }

    /// Right-hand side of the defining equation (cover coordinate)^2 = relation.
    MPoly relation() const {
        if (kind == FamilyKind::k3_cover) return branch;
        return MPoly::variable(vars(), frame().v) * branch;
    }

    /// Throws invariant_error naming the first violated invariant.
    void validate() const {
        const auto &t = *vars();
        const Frame fr = frame();
        std::vector<bool> declared(t.size(), false);
        for (const auto &p : parameters) {
            const auto idx = t.index(p);
            if (!t.is_parameter(idx)) throw invariant_error("'" + p + "' is not a parameter variable");
            declared[idx] = true;
        }
        const auto support = horikawa_support();
        for (const auto &[e, c] : branch.terms()) {
            unsigned param_degree = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (t.is_parameter(i)) {
                    if (!declared[i]) throw invariant_error("undeclared parameter '" + t.name(i) + "' in branch");
                    param_degree += e[i];
                } else if (i != fr.u && i != fr.v) {
                    throw invariant_error("branch depends on '" + t.name(i) + "'");
                }
            }
            if (param_degree > 1) throw invariant_error("branch is not linear in the parameters");
            const int a = e[fr.u], b = e[fr.v];
            if (kind == FamilyKind::enriques_horikawa && !support.contains({a, b}))
                throw invariant_error("support outside 4 <= i+2j <= 8: monomial " + t.name(fr.u) + "^" +
                                      std::to_string(a) + "*" + t.name(fr.v) + "^" + std::to_string(b));
            if (kind == FamilyKind::k3_cover && (a > 4 || b > 4))
                throw invariant_error("bidegree exceeds (4,4)");
        }
    }

    friend bool operator==(const SurfaceFamily &a, const SurfaceFamily &b) {
        return a.name == b.name && a.kind == b.kind && a.branch == b.branch && a.parameters == b.parameters;
    }
};

namespace detail {
inline SurfaceFamily make_family(std::string name, const char *branch, std::vector<std::string> params) {
    SurfaceFamily f{std::move(name), FamilyKind::enriques_horikawa, parse_poly(branch), std::move(params)};
    f.validate();
    return f;
}
} // namespace detail

/// The three built-in Horikawa families: order 4 / index 2 (k = 1),
/// order 8 / index 4 (k = 2) and order 8 / index 2 (k = 3). The stored
/// polynomial is f, the bracket after the factor z.
inline SurfaceFamily family(int k) {
    switch (k) {
    case 1:
        return detail::make_family("family1",
                                   "A*(y^4*z^2 - z^2) + B*(y^4*z - z^3) + C*(y^4 - z^4) + D*(y^3*z^2 - y*z^2)"
                                   " + E*(y^3*z - y*z^3) + F*(y^2*z - y^2*z^3)",
                                   {"A", "B", "C", "D", "E", "F"});
    case 2:
        return detail::make_family("family2",
                                   "A*(y^4*z^2 + i*z^4 - z^2 - i*y^4) + B*(y^4*z + i*y^2*z^3 - z^3 - i*y^2*z)"
                                   " + D*(y^3*z^2 + i*y*z^3 - y*z^2 - i*y^3*z)",
                                   {"A", "B", "D"});
    case 3:
        return detail::make_family("family3", "A*y^4*z^2 + B*(y^4 + z^4) + C*(y^3*z - i*y*z^3) + D*z^2",
                                   {"A", "B", "C", "D"});
    default:
        throw schema_error("unknown built-in family " + std::to_string(k));
    }
}

/// Substitutes each parameter by an affine expression in parameters. The
/// result is re-validated, so substitutions that break parameter linearity
/// are rejected.
inline SurfaceFamily specialize(const SurfaceFamily &fam, const std::map<std::string, MPoly> &subst,
                                std::string new_name = {}) {
    const auto &t = *fam.vars();
    Assignment assignment;
    std::vector<bool> used(t.size(), false);
    for (const auto &p : fam.parameters)
        if (!subst.contains(p)) throw schema_error("specialization does not assign parameter '" + p + "'");
    for (const auto &[name, value] : subst) {
        const auto idx = t.index(name);
        if (!t.is_parameter(idx)) throw schema_error("'" + name + "' is not a parameter");
        for (const auto &[e, c] : value.terms()) {
            unsigned deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!t.is_parameter(i)) throw schema_error("specialization of '" + name + "' uses a geometric variable");
                deg += e[i];
                used[i] = true;
            }
            if (deg > 1) throw invariant_error("specialization of '" + name + "' is not linear in the parameters");
        }
        assignment.emplace(idx, RatFunc(value));
    }
    SurfaceFamily out{new_name.empty() ? fam.name + "_specialized" : std::move(new_name), fam.kind,
                      poly_substitute(fam.branch, assignment).as_polynomial(), {}};
    for (std::size_t i = 0; i < t.size(); ++i)
        if (used[i]) out.parameters.push_back(t.name(i));
    out.validate();
    return out;
}

/// Convenience overload taking expression strings.
inline SurfaceFamily specialize(const SurfaceFamily &fam, const std::map<std::string, std::string> &subst,
                                std::string new_name = {}) {
    std::map<std::string, MPoly> parsed;
    for (const auto &[k, v] : subst) parsed.emplace(k, parse_poly(v, fam.vars()));
    return specialize(fam, parsed, std::move(new_name));
}

/// g(-Y,-Z) == g(Y,Z) for a polynomial in the K3 base coordinates.
inline bool iota_invariant(const MPoly &g, const Frame &k3) {
    for (const auto &[e, c] : g.terms())
        if ((e[k3.u] + e[k3.v]) % 2 != 0) return false;
    return true;
}

/// K3 cover of a Horikawa family: g(Y,Z) = f(YZ, Z^2) / Z^4, with
/// W = w / Z^3. The division must be exact; the result has bidegree at most
/// (4,4) and is invariant under (Y,Z) -> (-Y,-Z).
inline SurfaceFamily k3_cover(const SurfaceFamily &fam) {
    if (fam.kind != FamilyKind::enriques_horikawa) throw invariant_error("k3_cover needs a Horikawa family");
    const auto &vars = fam.vars();
    const Frame src = fam.frame();
    const Frame dst = Frame::k3(*vars);
    const MPoly Y = MPoly::variable(vars, dst.u), Z = MPoly::variable(vars, dst.v);
    const Assignment pullback{{src.u, RatFunc(Y * Z)}, {src.v, RatFunc(Z * Z)}};
    const MPoly pulled = poly_substitute(fam.branch, pullback).as_polynomial();
    MPoly g = exact_divide(pulled, Z.pow(4));
    SurfaceFamily out{fam.name + "_k3", FamilyKind::k3_cover, std::move(g), fam.parameters};
    out.validate();
    if (!iota_invariant(out.branch, dst)) throw invariant_error("K3 branch is not invariant under (Y,Z) -> (-Y,-Z)");
    return out;
}

enum class BisCondition {
    iota_invariance,     ///< g(-Y,-Z) = g(Y,Z)
    reciprocal_negation, ///< Y^4 Z^4 g(1/Y, 1/Z) = -g(Y,Z)
    swap_twist,          ///< Z^4 g(1/Z, Y) = i g(Y,Z)
};

inline const char *to_string(BisCondition c) {
    switch (c) {
    case BisCondition::iota_invariance: return "iota_invariance";
    case BisCondition::reciprocal_negation: return "reciprocal_negation";
    case BisCondition::swap_twist: return "swap_twist";
    }
    return "?";
}

/// Checks one of the symmetry conditions on a bidegree <= (4,4) polynomial
/// in (Y, Z), as an identity in all remaining variables.
inline bool check_bis_condition(const MPoly &g, BisCondition which) {
    const auto &vars = g.vars();
    const Frame fr = Frame::k3(*vars);
    if (g.degree_in(fr.u) > 4 || g.degree_in(fr.v) > 4) throw invariant_error("bidegree exceeds (4,4)");
    const RatFunc Y = RatFunc::variable(vars, fr.u), Z = RatFunc::variable(vars, fr.v);
    const RatFunc one = RatFunc::constant(vars, 1);
    switch (which) {
    case BisCondition::iota_invariance:
        return iota_invariant(g, fr);
    case BisCondition::reciprocal_negation: {
        const RatFunc lhs = Y.pow(4) * Z.pow(4) * poly_substitute(g, {{fr.u, one / Y}, {fr.v, one / Z}});
        return lhs == RatFunc(-g);
    }
    case BisCondition::swap_twist: {
        const RatFunc lhs = Z.pow(4) * poly_substitute(g, {{fr.u, one / Z}, {fr.v, Y}});
        return lhs == RatFunc(g * FieldElem::imag());
    }
    }
    return false;
}

/// Element a + b*c of the ring R[c] / (c^2 - rel), where c is the cover
/// coordinate and a, b, rel do not involve c.
class CoverElement {
public:
    CoverElement(RatFunc a, RatFunc b, std::shared_ptr<const MPoly> rel)
        : a_(std::move(a)), b_(std::move(b)), rel_(std::move(rel)) {}

    const RatFunc &a() const { return a_; }
    const RatFunc &b() const { return b_; }
    const MPoly &relation() const { return *rel_; }
    const std::shared_ptr<const MPoly> &relation_ptr() const { return rel_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend CoverElement operator+(const CoverElement &x, const CoverElement &y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.rel_};
    }
    friend CoverElement operator-(const CoverElement &x, const CoverElement &y) {
        return {x.a_ - y.a_, x.b_ - y.b_, x.rel_};
    }
    CoverElement operator-() const { return {-a_, -b_, rel_}; }
    friend CoverElement operator*(const CoverElement &x, const CoverElement &y) {
        const RatFunc rel(*x.rel_);
        return {x.a_ * y.a_ + x.b_ * y.b_ * rel, x.a_ * y.b_ + x.b_ * y.a_, x.rel_};
    }
    /// (a - b c) / (a^2 - b^2 rel).
    CoverElement inverse() const {
        const RatFunc norm = a_ * a_ - b_ * b_ * RatFunc(*rel_);
        if (norm.is_zero()) throw division_by_zero("cover element has zero norm");
        return {a_ / norm, -b_ / norm, rel_};
    }
    friend CoverElement operator/(const CoverElement &x, const CoverElement &y) { return x * y.inverse(); }

    friend bool operator==(const CoverElement &x, const CoverElement &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    std::string to_string(const std::string &cover_name) const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string() + " + ";
        return s + "(" + b_.to_string() + ")*" + cover_name;
    }

private:
    RatFunc a_;
    RatFunc b_;
    std::shared_ptr<const MPoly> rel_;
};

namespace detail {
// p = sum_k p_k c^k with c^2 -> rel.
inline CoverElement reduce_poly(const MPoly &p, std::size_t cover, const std::shared_ptr<const MPoly> &rel) {
    const auto &vars = p.vars();
    MPoly a(vars), b(vars);
    const unsigned deg = p.degree_in(cover);
    MPoly rel_pow = MPoly::constant(vars, 1);
    for (unsigned k = 0; k <= deg; ++k) {
        if (k >= 2 && k % 2 == 0) rel_pow *= *rel;
        const MPoly coeff = p.coefficient_of({{cover, k}});
        if (coeff.is_zero()) continue;
        if (k % 2 == 0) a += coeff * rel_pow;
        else b += coeff * rel_pow;
    }
    return {RatFunc(a), RatFunc(b), rel};
}
} // namespace detail

inline CoverElement cover_element(const SurfaceFamily &fam, const RatFunc &a, const RatFunc &b) {
    return {a, b, std::make_shared<const MPoly>(fam.relation())};
}

/// Canonical form of a rational expression in the cover coordinate, using
/// (cover)^2 = relation until only degree <= 1 remains. Denominators
/// involving the cover coordinate are cleared with the conjugate.
inline CoverElement cover_reduce(const RatFunc &expr, const std::shared_ptr<const MPoly> &rel, std::size_t cover) {
    const CoverElement n = detail::reduce_poly(expr.num(), cover, rel);
    if (!expr.den().depends_on(cover)) {
        const RatFunc d(expr.den());
        return {n.a() / d, n.b() / d, rel};
    }
    return n / detail::reduce_poly(expr.den(), cover, rel);
}

inline CoverElement cover_reduce(const RatFunc &expr, const SurfaceFamily &fam) {
    return cover_reduce(expr, std::make_shared<const MPoly>(fam.relation()), fam.frame().cover);
}

/// Corner coefficients of a bidegree (4,4) polynomial in (Y,Z): the values
/// of its bihomogenization at the four points {0,inf} x {0,inf}, i.e. the
/// coefficients of 1, Y^4, Z^4 and Y^4 Z^4, as polynomials in the
/// parameters.
inline std::array<MPoly, 4> corner_coefficients(const MPoly &g) {
    const Frame fr = Frame::k3(*g.vars());
    return {g.coefficient_of({{fr.u, 0}, {fr.v, 0}}), g.coefficient_of({{fr.u, 4}, {fr.v, 0}}),
            g.coefficient_of({{fr.u, 0}, {fr.v, 4}}), g.coefficient_of({{fr.u, 4}, {fr.v, 4}})};
}

struct EpsilonCheck {
    bool fixed_point_free = false;
    /// Order: 1, Y^4, Z^4, Y^4 Z^4.
    std::array<MPoly, 4> corners;
};

/// (W,Y,Z) -> (-W,-Y,-Z) has a fixed point exactly when g vanishes at one
/// of the four iota-fixed points of P1 x P1, so it is free for generic
/// parameters iff no corner coefficient is identically zero.
inline EpsilonCheck epsilon_fixed_point_free_g(const MPoly &g) {
    EpsilonCheck r{true, corner_coefficients(g)};
    for (const auto &c : r.corners) r.fixed_point_free = r.fixed_point_free && !c.is_zero();
    return r;
}

inline EpsilonCheck epsilon_fixed_point_free(const SurfaceFamily &fam) {
    const MPoly g = fam.kind == FamilyKind::k3_cover ? fam.branch : k3_cover(fam).branch;
    return epsilon_fixed_point_free_g(g);
}

} // namespace bicanon

#endif
