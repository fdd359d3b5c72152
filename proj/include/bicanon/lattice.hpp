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

#ifndef BICANON_LATTICE_HPP
#define BICANON_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bicanon {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Integral lattice given by a symmetric Gram matrix.
class GramLattice {
public:
    GramLattice() = default;
    explicit GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
        for (const auto &row : gram_)
            if (row.size() != gram_.size()) throw invariant_error("Gram matrix is not square");
        for (std::size_t i = 0; i < gram_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i]) throw invariant_error("Gram matrix is not symmetric");
    }

    static GramLattice U() { return GramLattice({{0, 1}, {1, 0}}); }
    /// U with the form scaled by 2.
    static GramLattice U2() { return GramLattice({{0, 2}, {2, 0}}); }

    std::size_t dimension() const { return gram_.size(); }
    const IntMatrix &gram() const { return gram_; }

private:
    IntMatrix gram_;
};

struct LatticeInvariants {
    std::size_t rank = 0;
    mpz_class determinant;
};

/// Rank and determinant of the Gram matrix by exact elimination. The empty
/// lattice has determinant 1.
inline LatticeInvariants lattice_invariants(const GramLattice &lattice) {
    const std::size_t n = lattice.dimension();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(lattice.gram()[i][j]));
    Rational det(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) {
            det = 0;
            continue;
        }
        if (piv != rank) {
            std::swap(m[piv], m[rank]);
            det = -det;
        }
        det *= m[rank][col];
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return {rank, det.numerator()};
}

/// All integer matrices M with |entries| <= entry_bound, M^T G M = G and
/// trace(M) = trace. Brute force, so limited to rank <= 3.
inline std::vector<IntMatrix> isometries_with_trace(const GramLattice &lattice, std::int64_t trace,
                                                    std::int64_t entry_bound = 2) {
    const std::size_t n = lattice.dimension();
    if (n > 3) throw invariant_error("isometry enumeration is limited to rank <= 3");
    if (entry_bound < 0) throw invariant_error("entry bound must be non-negative");
    const auto &g = lattice.gram();
    const std::size_t cells = n * n;
    std::vector<IntMatrix> found;
    std::vector<std::int64_t> flat(cells, -entry_bound);
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (;;) {
        std::int64_t tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += flat[i * n + i];
        if (tr == trace) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m[i][j] = flat[i * n + j];
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = i; j < n && ok; ++j) {
                    std::int64_t s = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l) s += m[k][i] * g[k][l] * m[l][j];
                    ok = s == g[i][j];
                }
            if (ok) found.push_back(m);
        }
        std::size_t pos = 0;
        while (pos < cells && flat[pos] == entry_bound) flat[pos++] = -entry_bound;
        if (pos == cells) break;
        ++flat[pos];
    }
    return found;
}

} // namespace bicanon

#endif
