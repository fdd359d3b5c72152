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

#ifndef BICANON_BIFORM_HPP
#define BICANON_BIFORM_HPP

#include <optional>
#include <string>

#include "birational.hpp"

namespace bicanon {

/// The scalar by which a map pulls back a nowhere-vanishing (bi-)form.
struct FormRatio {
    FieldElem value;
    /// Set when every dependence on coordinates and parameters cancelled.
    bool constancy_certificate = false;
};

namespace detail {
inline FormRatio require_constant(const RatFunc &r, const std::string &what) {
    if (!r.is_constant()) throw verification_error(what + " is not constant: " + r.to_string());
    return {r.constant_value(), true};
}
} // namespace detail

/// Pullback of the bi-canonical form z (dy ^ dz / w)^2 on a Horikawa
/// model, as the constant
///   (phi*z / z) * J(phi_y, phi_z)^2 * (w / phi*w)^2
/// with the last factor reduced modulo w^2 = z f.
inline FormRatio bitwoform_pullback_ratio(const SurfaceFamily &fam, const BirMap &phi) {
    if (fam.kind != FamilyKind::enriques_horikawa) throw invariant_error("bi-form ratio needs a Horikawa family");
    if (!check_equation_invariance(fam, phi).holds)
        throw verification_error("map '" + phi.label() + "' does not preserve " + fam.name);
    const auto rel = std::make_shared<const MPoly>(fam.relation());
    const Frame fr = fam.frame();
    const auto &vars = fam.vars();
    const CoverElement w(RatFunc(MPoly(vars)), RatFunc::constant(vars, 1), rel);
    const CoverElement w_ratio = w / cover_reduce(phi.cover(), rel, fr.cover);
    const CoverElement w_ratio_sq = w_ratio * w_ratio;
    if (!w_ratio_sq.b().is_zero()) throw verification_error("(w / phi*w)^2 still involves w");
    const RatFunc jac = jacobian_det2(phi.u(), phi.v(), fr.u, fr.v);
    const RatFunc z = RatFunc::variable(vars, fr.v);
    const RatFunc ratio = (phi.v() / z) * jac * jac * w_ratio_sq.a();
    return detail::require_constant(ratio, "bi-form pullback ratio of '" + phi.label() + "'");
}

/// Pullback of dY ^ dZ / W on the K3 cover W^2 = g(Y,Z):
/// J(phi_Y, phi_Z) * (W / phi*W), reduced modulo W^2 = g.
inline FormRatio k3_twoform_ratio(const SurfaceFamily &k3, const BirMap &phi) {
    if (k3.kind != FamilyKind::k3_cover) throw invariant_error("two-form ratio needs a K3 cover family");
    if (!check_equation_invariance(k3, phi).holds)
        throw verification_error("map '" + phi.label() + "' does not preserve " + k3.name);
    const auto rel = std::make_shared<const MPoly>(k3.relation());
    const Frame fr = k3.frame();
    const auto &vars = k3.vars();
    const CoverElement W(RatFunc(MPoly(vars)), RatFunc::constant(vars, 1), rel);
    const CoverElement w_ratio = W / cover_reduce(phi.cover(), rel, fr.cover);
    if (!w_ratio.b().is_zero()) throw verification_error("W / phi*W still involves W");
    const RatFunc ratio = jacobian_det2(phi.u(), phi.v(), fr.u, fr.v) * w_ratio.a();
    return detail::require_constant(ratio, "two-form pullback ratio of '" + phi.label() + "'");
}

/// Order of the root of unity by which the map acts.
inline int index_of(const FormRatio &r) {
    if (!r.constancy_certificate) throw verification_error("ratio carries no constancy certificate");
    if (auto n = root_of_unity_order(r.value)) return *n;
    throw verification_error("ratio " + r.value.to_expression() + " is not a root of unity");
}

} // namespace bicanon

#endif
