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

// Order and index of the three built-in automorphisms.

#include <iostream>

#include <bicanon/bicanon.hpp>

int main() {
    using namespace bicanon;
    for (int k = 1; k <= 3; ++k) {
        const SurfaceFamily f = family(k);
        const BirMap s = maps::sigma(k);
        const auto inv = check_equation_invariance(f, s);
        const auto n = map_order(s, f);
        const FormRatio r = bitwoform_pullback_ratio(f, s);
        std::cout << f.name << ": w^2 = z*(" << f.branch << ")\n"
                  << "  " << s.label() << " = (" << s.cover() << ", " << s.u() << ", " << s.v() << ")\n"
                  << "  invariant: " << (inv.holds ? "yes" : "no") << ", order " << n.value_or(0) << ", ratio "
                  << r.value.to_expression() << ", index " << index_of(r) << "\n";
    }
    const SurfaceFamily f2 = family(2);
    std::cout << "sigma2^2 == sigma1 on family2: "
              << (maps_equal(compose(maps::sigma2(), maps::sigma2(), f2), maps::sigma1(), &f2) ? "yes" : "no") << "\n";
}
