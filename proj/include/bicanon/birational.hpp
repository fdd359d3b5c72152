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

#ifndef BICANON_BIRATIONAL_HPP
#define BICANON_BIRATIONAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "cover_ring.hpp"
#include "expr_parser.hpp"

namespace bicanon {

/// A birational self-map (c, u, v) -> (c', u', v') of a double cover of
/// P1 x P1, one rational function per coordinate. The cover coordinate
/// enters c' at most linearly and does not enter u', v'.
class BirMap {
public:
    BirMap(Frame frame, RatFunc cover, RatFunc u, RatFunc v, std::string label = {})
        : frame_(frame), cover_(std::move(cover)), u_(std::move(u)), v_(std::move(v)), label_(std::move(label)) {
        validate();
    }

    static BirMap identity(const VarTablePtr &vars, Frame frame, std::string label = "id") {
        return {frame, RatFunc::variable(vars, frame.cover), RatFunc::variable(vars, frame.u),
                RatFunc::variable(vars, frame.v), std::move(label)};
    }

    /// Parses the three coordinate expressions.
    static BirMap parse(Frame frame, std::string_view cover, std::string_view u, std::string_view v,
                        std::string label = {}, const VarTablePtr &vars = VarTable::standard()) {
        return {frame, parse_ratfunc(cover, vars), parse_ratfunc(u, vars), parse_ratfunc(v, vars), std::move(label)};
    }

    const Frame &frame() const { return frame_; }
    const RatFunc &cover() const { return cover_; }
    const RatFunc &u() const { return u_; }
    const RatFunc &v() const { return v_; }
    const std::string &label() const { return label_; }
    const VarTablePtr &vars() const { return u_.vars(); }
    BirMap relabeled(std::string label) const {
        BirMap m = *this;
        m.label_ = std::move(label);
        return m;
    }

    Assignment as_assignment() const { return {{frame_.cover, cover_}, {frame_.u, u_}, {frame_.v, v_}}; }

private:
    void validate() const {
        if (u_.depends_on(frame_.cover) || v_.depends_on(frame_.cover))
            throw invariant_error("base coordinates of a map must not involve the cover coordinate");
        if (cover_.num().degree_in(frame_.cover) > 1 || cover_.den().depends_on(frame_.cover))
            throw invariant_error("cover coordinate must enter its image at most linearly");
    }

    Frame frame_;
    RatFunc cover_;
    RatFunc u_;
    RatFunc v_;
    std::string label_;
};

namespace detail {
inline void require_frame(const BirMap &m, const SurfaceFamily *fam) {
    if (fam && !(fam->frame() == m.frame())) throw invariant_error("map and family use different coordinates");
}
inline RatFunc to_ratfunc(const CoverElement &e, const VarTablePtr &vars, std::size_t cover) {
    return e.a() + e.b() * RatFunc::variable(vars, cover);
}
} // namespace detail

/// phi o psi: substitutes psi's coordinates into phi's. With a family the
/// cover coordinate of the result is brought to canonical form modulo the
/// defining relation.
inline BirMap compose(const BirMap &phi, const BirMap &psi, const SurfaceFamily *fam = nullptr) {
    if (!(phi.frame() == psi.frame())) throw invariant_error("cannot compose maps in different coordinates");
    detail::require_frame(phi, fam);
    const Assignment a = psi.as_assignment();
    RatFunc c = ratfunc_substitute(phi.cover(), a);
    if (fam) c = detail::to_ratfunc(cover_reduce(c, *fam), phi.vars(), phi.frame().cover);
    return {phi.frame(), std::move(c), ratfunc_substitute(phi.u(), a), ratfunc_substitute(phi.v(), a)};
}

inline BirMap compose(const BirMap &phi, const BirMap &psi, const SurfaceFamily &fam) { return compose(phi, psi, &fam); }

/// Equality as rational maps, the cover coordinate compared modulo the
/// defining relation when a family is given.
inline bool maps_equal(const BirMap &phi, const BirMap &psi, const SurfaceFamily *fam = nullptr) {
    if (!(phi.frame() == psi.frame())) return false;
    if (!(phi.u() == psi.u()) || !(phi.v() == psi.v())) return false;
    if (!fam) return phi.cover() == psi.cover();
    return cover_reduce(phi.cover(), *fam) == cover_reduce(psi.cover(), *fam);
}

inline BirMap map_power(const BirMap &phi, unsigned n, const SurfaceFamily *fam = nullptr) {
    BirMap r = BirMap::identity(phi.vars(), phi.frame());
    for (unsigned k = 0; k < n; ++k) r = compose(phi, r, fam);
    return r;
}

/// Smallest n <= max_n with phi^n = id, if any.
inline std::optional<unsigned> map_order(const BirMap &phi, const SurfaceFamily *fam = nullptr, unsigned max_n = 16) {
    if (max_n < 1) throw invariant_error("max_n must be at least 1");
    detail::require_frame(phi, fam);
    const BirMap id = BirMap::identity(phi.vars(), phi.frame());
    BirMap p = phi;
    for (unsigned n = 1; n <= max_n; ++n) {
        if (maps_equal(p, id, fam)) return n;
        if (n < max_n) p = compose(phi, p, fam);
    }
    return std::nullopt;
}

inline std::optional<unsigned> map_order(const BirMap &phi, const SurfaceFamily &fam, unsigned max_n = 16) {
    return map_order(phi, &fam, max_n);
}

struct InvarianceResult {
    bool holds = false;
    /// Numerators of the reduced difference (phi*c)^2 - phi*(relation),
    /// split as a + b*c. Both zero iff the identity holds.
    MPoly witness_a;
    MPoly witness_b;
};

/// Does phi preserve c^2 = relation? Computes (phi*c)^2 - phi*(relation)
/// modulo the relation and tests it for zero in all variables and
/// parameters.
inline InvarianceResult check_equation_invariance(const SurfaceFamily &fam, const BirMap &phi) {
    detail::require_frame(phi, &fam);
    const auto rel = std::make_shared<const MPoly>(fam.relation());
    const Frame fr = fam.frame();
    const CoverElement image = cover_reduce(phi.cover(), rel, fr.cover);
    const RatFunc pulled = poly_substitute(*rel, {{fr.u, phi.u()}, {fr.v, phi.v()}});
    const CoverElement diff = image * image - CoverElement(pulled, RatFunc(MPoly(fam.vars())), rel);
    return {diff.is_zero(), diff.a().num(), diff.b().num()};
}

} // namespace bicanon

#endif
