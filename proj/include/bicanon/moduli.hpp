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

#ifndef BICANON_MODULI_HPP
#define BICANON_MODULI_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover_ring.hpp"
#include "expr_parser.hpp"

namespace bicanon {

/// A one-dimensional torus acting on a family: each parameter p goes to
/// alpha^weight(p) * p while (y, z) -> (u(y,z,alpha), v(y,z,alpha)). The
/// cover coordinate absorbs a square root of the resulting scalar, which is
/// recorded but never constructed.
struct ParameterAction {
    std::string name;
    std::map<std::string, int> weights;
    RatFunc u;
    RatFunc v;

    int weight(const std::string &param) const {
        auto it = weights.find(param);
        return it == weights.end() ? 0 : it->second;
    }
};

struct ActionCheck {
    bool holds = false;
    /// k with phi*(z f(.; p)) = c alpha^k z f(.; rho(p)), i.e. the exponent
    /// by which w^2 has to be rescaled.
    std::optional<int> w_square_weight;
    std::string witness;
};

/// Checks that phi*z * f(phi*y, phi*z; p) equals z * f(y, z; rho(p)) up to
/// a factor c * alpha^k.
inline ActionCheck check_parameter_action(const SurfaceFamily &fam, const ParameterAction &act) {
    if (fam.kind != FamilyKind::enriques_horikawa) throw invariant_error("parameter actions act on Horikawa families");
    const auto &vars = fam.vars();
    const Frame fr = fam.frame();
    const std::size_t alpha = vars->index("alpha");
    const RatFunc a = RatFunc::variable(vars, alpha);

    Assignment rho;
    for (const auto &p : fam.parameters) {
        const std::size_t idx = vars->index(p);
        rho.emplace(idx, a.pow(act.weight(p)) * RatFunc::variable(vars, idx));
    }
    const RatFunc z = RatFunc::variable(vars, fr.v);
    const RatFunc target = z * poly_substitute(fam.branch, rho);
    const RatFunc moved = act.v * poly_substitute(fam.branch, {{fr.u, act.u}, {fr.v, act.v}});

    const MPoly n = moved.num() * target.den();
    const MPoly d = target.num() * moved.den();
    ActionCheck r;
    if (n.is_zero() || d.is_zero()) {
        r.witness = "degenerate equation";
        return r;
    }
    auto alpha_only = [&](const MPoly &q) -> std::optional<int> {
        if (!q.is_monomial()) return std::nullopt;
        const Exponent &e = q.leading_exponent();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && i != alpha) return std::nullopt;
        return static_cast<int>(e[alpha]);
    };
    if (auto q = try_divide(n, d)) {
        if (auto k = alpha_only(*q)) {
            r.holds = true;
            r.w_square_weight = *k;
            return r;
        }
        r.witness = "quotient " + q->to_string() + " is not a power of alpha";
        return r;
    }
    if (auto q = try_divide(d, n)) {
        if (auto k = alpha_only(*q)) {
            r.holds = true;
            r.w_square_weight = -*k;
            return r;
        }
        r.witness = "quotient " + q->to_string() + " is not a power of alpha";
        return r;
    }
    try {
        (void)exact_divide(n, d);
    } catch (const indivisible_error &e) {
        r.witness = e.remainder();
    }
    return r;
}

namespace detail {
inline long rational_rank(std::vector<std::vector<Rational>> m) {
    long rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto &p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / p[col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * p[c];
        }
        ++rank;
    }
    return rank;
}
} // namespace detail

/// Rank of the integer weight matrix (actions x parameters).
inline long weight_rank(const SurfaceFamily &fam, const std::vector<ParameterAction> &actions) {
    std::vector<std::vector<Rational>> m;
    for (const auto &act : actions) {
        std::vector<Rational> row;
        for (const auto &p : fam.parameters) row.emplace_back(static_cast<long>(act.weight(p)));
        m.push_back(std::move(row));
    }
    return detail::rational_rank(std::move(m));
}

/// Parameter count minus the dimension of the torus generated by the
/// declared identifications. Completeness of the action list is an input
/// assumption.
inline long moduli_number(const SurfaceFamily &fam, const std::vector<ParameterAction> &actions) {
    for (const auto &act : actions)
        if (!check_parameter_action(fam, act).holds)
            throw verification_error("action '" + act.name + "' does not preserve " + fam.name);
    return static_cast<long>(fam.parameters.size()) - weight_rank(fam, actions);
}

/// All parameters scaled by alpha; base coordinates fixed.
inline ParameterAction homothety(const SurfaceFamily &fam) {
    ParameterAction act{"homothety", {}, parse_ratfunc("y", fam.vars()), parse_ratfunc("z", fam.vars())};
    for (const auto &p : fam.parameters) act.weights[p] = 1;
    return act;
}

/// (y, z) -> (alpha y, alpha z) with (A, B, C, D) -> (alpha^6 A, alpha^4 B,
/// alpha^4 C, alpha^2 D).
inline ParameterAction diagonal_scaling(const VarTablePtr &vars = VarTable::standard()) {
    return {"diagonal_scaling", {{"A", 6}, {"B", 4}, {"C", 4}, {"D", 2}}, parse_ratfunc("alpha*y", vars),
            parse_ratfunc("alpha*z", vars)};
}

/// The identification actions declared for built-in family k.
inline std::vector<ParameterAction> builtin_actions(int k) {
    const SurfaceFamily fam = family(k);
    if (k == 3) return {homothety(fam), diagonal_scaling(fam.vars())};
    return {homothety(fam)};
}

} // namespace bicanon

#endif
