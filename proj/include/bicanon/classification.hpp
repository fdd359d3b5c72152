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

#ifndef BICANON_CLASSIFICATION_HPP
#define BICANON_CLASSIFICATION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bicanon {

inline long euler_phi(long n) {
    if (n < 1) throw invariant_error("euler_phi needs n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Dimension of the projectivized primitive eigenspace of an order-n action
/// on a transcendental lattice of the given rank: rank / phi(n) - 1.
inline long moduli_dimension(long rank_t, long n) {
    const long phi = euler_phi(n);
    if (rank_t % phi != 0)
        throw invariant_error("phi(" + std::to_string(n) + ") = " + std::to_string(phi) + " does not divide rank " +
                              std::to_string(rank_t));
    return rank_t / phi - 1;
}

/// Rank of the root lattice of an ADE singularity ("A3", "D4", "E8", ...).
inline int ade_rank(const std::string &type) {
    if (type.size() < 2 || (type[0] != 'A' && type[0] != 'D' && type[0] != 'E'))
        throw schema_error("unknown singularity type '" + type + "'");
    const int n = std::stoi(type.substr(1));
    if ((type[0] == 'A' && n < 1) || (type[0] == 'D' && n < 4) || (type[0] == 'E' && (n < 6 || n > 8)))
        throw schema_error("invalid singularity type '" + type + "'");
    return n;
}

struct PicardBound {
    int exceptional_rank = 0; ///< sum of the ADE ranks
    int with_ample = 0;       ///< plus one ample class
    int rho_bound = 0;        ///< rounded up to even
    int rank_t_bound = 0;     ///< 22 - rho_bound
};

/// Picard bound for the K3 cover in the order 8 / index 2 case: the
/// quotient by a symplectic order-4 automorphism has four A3 and two A1
/// points; an ample class adds one, and the Picard number is even.
inline PicardBound picard_bound_for_82() {
    PicardBound b;
    for (int k = 0; k < 4; ++k) b.exceptional_rank += ade_rank("A3");
    for (int k = 0; k < 2; ++k) b.exceptional_rank += ade_rank("A1");
    b.with_ample = b.exceptional_rank + 1;
    b.rho_bound = b.with_ample % 2 == 0 ? b.with_ample : b.with_ample + 1;
    b.rank_t_bound = 22 - b.rho_bound;
    return b;
}

/// Numerical data of a lifted automorphism on the K3 cover.
struct NumericalHodgeData {
    int rank_t = 0;
    int picard_rho = 0;
    int order_n = 0;
    int index_i = 0;

    bool valid() const {
        return rank_t > 0 && picard_rho > 0 && rank_t + picard_rho == 22 && index_i > 0 && order_n > 0 &&
               order_n % index_i == 0;
    }
};

/// Candidate (order, index) pair.
struct OrderIndex {
    int order;
    int index;
    friend auto operator<=>(const OrderIndex &, const OrderIndex &) = default;
};

/// Survivors at lower indices, consulted by the index-halving rule.
using SurvivorTable = std::map<int, std::set<int>>;

struct ClassificationRule {
    std::string id;
    std::string citation;
    std::function<bool(const OrderIndex &, const SurvivorTable &)> prunes;
};

inline bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

/// The exclusion rules, in the order they are tried.
inline std::vector<ClassificationRule> classification_rules() {
    return {
        {"index-power-of-two", "the index of a finite non-semi-symplectic automorphism is a power of 2",
         [](const OrderIndex &c, const SurvivorTable &) { return !is_power_of_two(c.index) || c.order % c.index; }},
        {"semi-symplectic-order-bound",
         "finite semi-symplectic automorphisms have order at most 6, and sigma^I is semi-symplectic",
         [](const OrderIndex &c, const SurvivorTable &) { return c.order / c.index > 6; }},
        {"odd-order",
         "automorphisms of order 2 or odd order are semi-symplectic, so the semi-symplectic square cannot have odd order",
         [](const OrderIndex &c, const SurvivorTable &) { return c.order % 4 == 2 || c.order % 2 == 1; }},
        {"index2-square-order6",
         "index 2 with ord(sigma^2) = 6: the unique symplectic fixed point forces (det d sigma)^2 = -1 = det d tau = 1",
         [](const OrderIndex &c, const SurvivorTable &) { return c.index == 2 && c.order == 12; }},
        {"index-halving", "sigma^2 has index I/2 and order n/2, so (n/2, I/2) must itself be admissible",
         [](const OrderIndex &c, const SurvivorTable &s) {
             if (c.index < 4) return false;
             auto it = s.find(c.index / 2);
             return it == s.end() || !it->second.contains(c.order / 2);
         }},
        {"index4-square-order8",
         "index 4 with ord(sigma^2) = 8: sigma^2 fixes both symplectic fixed points of sigma^4, contradiction",
         [](const OrderIndex &c, const SurvivorTable &) { return c.index == 4 && c.order == 16; }},
        {"index8-four-points",
         "index 8 or higher: sigma^4 fixes the four isolated symplectic fixed points of sigma^8, contradiction",
         [](const OrderIndex &c, const SurvivorTable &) { return c.index >= 8; }},
    };
}

struct PrunedCandidate {
    OrderIndex candidate;
    std::string rule_id;
    std::string citation;
};

struct ClassificationResult {
    std::vector<OrderIndex> candidates;
    std::set<OrderIndex> admissible;
    std::vector<PrunedCandidate> trace;
};

/// Candidates are (I*m, I) for each index I and 1 <= m <= max_multiplier;
/// indices are processed in increasing order so the halving rule sees the
/// final survivors of I/2. Each pruned candidate records the first rule
/// that removed it.
inline ClassificationResult admissible_pairs(const std::vector<int> &indices = {2, 4, 8}, int max_multiplier = 6) {
    ClassificationResult r;
    const auto rules = classification_rules();
    SurvivorTable survivors;
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (int idx : sorted) {
        if (idx < 2) throw invariant_error("index candidates must be at least 2");
        survivors[idx];
        for (int m = 1; m <= max_multiplier; ++m) {
            const OrderIndex c{idx * m, idx};
            r.candidates.push_back(c);
            const ClassificationRule *hit = nullptr;
            for (const auto &rule : rules)
                if (rule.prunes(c, survivors)) {
                    hit = &rule;
                    break;
                }
            if (hit) {
                r.trace.push_back({c, hit->id, hit->citation});
            } else {
                r.admissible.insert(c);
                survivors[idx].insert(c.order);
            }
        }
    }
    return r;
}

/// Orders of finite automorphisms: semi-symplectic ones (1..6) together with
/// the orders of the admissible non-semi-symplectic pairs.
inline std::set<int> allowed_orders() {
    std::set<int> s{1, 2, 3, 4, 5, 6};
    for (const auto &p : admissible_pairs().admissible) s.insert(p.order);
    return s;
}

} // namespace bicanon

#endif
