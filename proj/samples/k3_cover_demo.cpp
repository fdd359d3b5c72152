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

// K3 cover of the first family, its symmetry conditions, and the two lifts.

#include <iostream>

#include <bicanon/bicanon.hpp>

int main() {
    using namespace bicanon;
    const SurfaceFamily g = k3_cover(family(1));
    std::cout << "W^2 = " << g.branch << "\n";
    std::cout << "iota-invariant: " << iota_invariant(g.branch, g.frame()) << "\n";
    std::cout << "Y^4 Z^4 g(1/Y,1/Z) = -g: " << check_bis_condition(g.branch, BisCondition::reciprocal_negation) << "\n";

    const auto eps = epsilon_fixed_point_free(family(1));
    std::cout << "epsilon corner coefficients:";
    for (const auto &c : eps.corners) std::cout << " [" << c << "]";
    std::cout << "\n";

    const BirMap lift = maps::k3_lift1();
    const BirMap other = compose(maps::epsilon(), lift, g);
    std::cout << "2-form ratio of " << lift.label() << ": " << k3_twoform_ratio(g, lift).value.to_expression() << "\n";
    std::cout << "2-form ratio of epsilon o " << lift.label() << ": "
              << k3_twoform_ratio(g, other).value.to_expression() << "\n";

    const auto k4 = k4_normal_form_details();
    std::cout << "square roots of (1/Y,1/Z) among " << k4.candidates << " monomial candidates:\n";
    for (const auto &q : k4.square_roots) std::cout << "  " << q.to_string() << "\n";
}
