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

#ifndef BICANON_LEFSCHETZ_HPP
#define BICANON_LEFSCHETZ_HPP

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace bicanon {

/// A smooth curve on a K3 surface; adjunction forces C^2 = 2g - 2.
struct FixedCurveData {
    unsigned genus = 0;
    long self_intersection = 0;

    bool satisfies_adjunction() const { return self_intersection == 2 * static_cast<long>(genus) - 2; }
};

enum class Sign { plus, minus };

/// +sqrt(-1) or -sqrt(-1): the eigenvalue of the lift on the 2-form.
inline FieldElem signed_imag(Sign s) { return s == Sign::plus ? FieldElem::imag() : -FieldElem::imag(); }

/// Number N of isolated fixed points forced by the holomorphic Lefschetz
/// identity 1 - s = N / ((1 + 1)(1 + s)) for an automorphism acting on the
/// 2-form by s = +-sqrt(-1) whose square fixes a curve pointwise.
inline long holomorphic_lefschetz_case_b(Sign sign) {
    const FieldElem s = signed_imag(sign);
    const FieldElem n = (FieldElem(1) - s) * FieldElem(2) * (FieldElem(1) + s);
    if (!n.is_rational() || !n[0].is_integer()) throw verification_error("fixed point count is not an integer");
    return n[0].to_int64();
}

struct LefschetzComparison {
    FieldElem lhs;
    FieldElem rhs;
    bool equal = false;
};

/// Both sides of the holomorphic Lefschetz identity when the fixed locus is
/// the curve itself:
///   1 - s  vs  (1 - g) / (1 - s) - s C^2 / (1 - s)^2.
inline LefschetzComparison holomorphic_lefschetz_case_a(Sign sign, const FixedCurveData &curve) {
    const FieldElem s = signed_imag(sign);
    const FieldElem one_minus = FieldElem(1) - s;
    const FieldElem lhs = one_minus;
    const FieldElem rhs = FieldElem(1 - static_cast<long>(curve.genus)) / one_minus -
                          s * FieldElem(curve.self_intersection) / (one_minus * one_minus);
    return {lhs, rhs, lhs == rhs};
}

/// Fixed points of an automorphism of a rational surface acting trivially
/// on H^0 and H^4: 1 + trace(H^2) + 1.
inline long topological_lefschetz_count(long trace_h2) { return 2 + trace_h2; }

} // namespace bicanon

#endif
