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

// Seeded generators for randomized property tests.

#ifndef BICANON_TESTS_RANDOM_HPP
#define BICANON_TESTS_RANDOM_HPP

#include <random>
#include <vector>

#include <bicanon/bicanon.hpp>

namespace bicanon::testing {

inline constexpr int kInstances = 120;

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() {
        const long den = integer(1, 6);
        return Rational(integer(-9, 9), den);
    }

    FieldElem field() { return FieldElem(FieldElem::Coords{rational(), rational(), rational(), rational()}); }

    FieldElem nonzero_field() {
        for (;;)
            if (auto x = field(); !x.is_zero()) return x;
    }

    /// Small polynomial in the given variables.
    MPoly poly(const std::vector<std::size_t> &vars, int max_terms = 4, int max_exp = 3) {
        const auto table = VarTable::standard();
        MPoly p(table);
        const int n = static_cast<int>(integer(1, max_terms));
        for (int t = 0; t < n; ++t) {
            Exponent e(table->size(), 0);
            for (auto v : vars) e[v] = static_cast<std::uint16_t>(integer(0, max_exp));
            FieldElem c = FieldElem::zeta_pow(integer(0, 7)) * FieldElem(integer(1, 5));
            p.add_term(e, c);
        }
        return p;
    }

    MPoly nonzero_poly(const std::vector<std::size_t> &vars, int max_terms = 4, int max_exp = 3) {
        for (;;)
            if (auto p = poly(vars, max_terms, max_exp); !p.is_zero()) return p;
    }

    std::mt19937 &engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline std::size_t var(const char *name) { return VarTable::standard()->index(name); }

} // namespace bicanon::testing

#endif
