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

#ifndef BICANON_VERIFY_HPP
#define BICANON_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biform.hpp"
#include "classification.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "lefschetz.hpp"
#include "qaut.hpp"

#ifndef BICANON_VERSION
#define BICANON_VERSION "1.0.0"
#endif

namespace bicanon {

inline constexpr const char *certificate_schema = "bicanon-certificate/1";

/// Claim labels a certificate record may cite. Keys are stable; the label is
/// what gets written into the certificate.
inline const std::vector<std::pair<std::string, std::string>> &citation_catalogue() {
    static const std::vector<std::pair<std::string, std::string>> c = {
        {"support", "Horikawa model: bidegree (4,4) branch support satisfies 4 <= i+2j <= 8"},
        {"family", "Horikawa-model families with a non-semi-symplectic automorphism"},
        {"invariance", "the defining equation is invariant under the automorphism"},
        {"order", "order of the explicit automorphism"},
        {"square", "the order-8 automorphism of the second family squares to the first automorphism"},
        {"index", "index read off from the action on the bi-canonical form z(dy^dz/w)^2"},
        {"pairs", "admissible (order, index) pairs are realized by the three families"},
        {"specialization", "the second family is the specialization C=-iA, E=-iD, F=-iB of the first"},
        {"mukai-namikawa", "the one-parameter subfamily A=1, B=-C-1, D=E=0, F=-C+1 of the first family"},
        {"k3-cover", "K3 cover via (y,z)=(YZ,Z^2), g(Y,Z)=f(YZ,Z^2)/Z^4"},
        {"bis", "symmetry conditions on g for the lifted automorphism"},
        {"epsilon", "covering involution (W,Y,Z) -> (-W,-Y,-Z) is fixed-point free"},
        {"k3-ratio", "action of a lift on the holomorphic 2-form of the K3 cover"},
        {"k4", "normal form of the Klein four-group and the square roots (Y,Z) -> +-(1/Z,Y)"},
        {"fixed-points", "topological Lefschetz count 2 + trace on the Neron-Severi group of P1xP1"},
        {"lefschetz-b", "holomorphic Lefschetz formula: isolated fixed set of N=4 points"},
        {"lefschetz-a", "holomorphic Lefschetz formula with a fixed genus 9 curve is inconsistent"},
        {"lattice", "invariant lattice of the involution is U(2)"},
        {"lattice-trace", "an isometry of U(2) with trace 2 is the identity"},
        {"moduli", "moduli number: parameters minus the dimension of the identification group"},
        {"moduli-dimension", "moduli bound m = rank(T_X)/phi(n) - 1"},
        {"picard", "four A3 and two A1 singularities force rho >= 16 and rank(T_X) <= 6"},
        {"classification", "exclusion rules leave exactly the admissible (order, index) pairs"},
        {"allowed-orders", "orders of finite automorphisms of Enriques surfaces"},
        {"input", "user-supplied family or map"},
    };
    return c;
}

inline const std::string &citation(const std::string &key) {
    for (const auto &[k, label] : citation_catalogue())
        if (k == key) return label;
    throw invariant_error("unknown citation key '" + key + "'");
}

inline bool is_catalogued_citation(const std::string &label) {
    for (const auto &[k, l] : citation_catalogue())
        if (l == label) return true;
    return false;
}

/// Statements recorded as assumptions rather than checked.
inline std::vector<std::string> certificate_assumptions() {
    return {
        "identities are certified for symbolic parameters; degenerate parameter loci are not characterized",
        "uniqueness of the square roots of (1/Y,1/Z) is verified on the monomial candidate set only",
        "both lifts of each automorphism to the K3 cover are reported; neither is singled out",
        "the sublattice where the covering involution and the non-symplectic involution both act by -1 "
        "has rank at least rank(T_X) = 12 (recorded, not computed)",
        "the quotient of the K3 cover by the Klein four-group is P1xP1 (the F2 alternative is not treated)",
        "the declared identification actions are all identifications between members of each family",
    };
}

struct CheckRecord {
    std::string id;
    std::string category;
    int family = 0; ///< built-in family number, 0 if not family specific
    bool pass = false;
    json inputs = json::object();
    json value = nullptr;
    json witness = nullptr;
    std::string citation;
};

struct Certificate {
    std::string generated_at;
    std::vector<CheckRecord> records;
    std::vector<std::string> assumptions;

    bool pass() const {
        return std::all_of(records.begin(), records.end(), [](const CheckRecord &r) { return r.pass; });
    }
    const CheckRecord *first_failure() const {
        for (const auto &r : records)
            if (!r.pass) return &r;
        return nullptr;
    }
    const CheckRecord *find(const std::string &id) const {
        for (const auto &r : records)
            if (r.id == id) return &r;
        return nullptr;
    }
    json to_json() const;
};

inline json record_to_json(const CheckRecord &r) {
    json j;
    j["id"] = r.id;
    j["category"] = r.category;
    j["family"] = r.family ? json(r.family) : json(nullptr);
    j["inputs"] = r.inputs;
    j["result"] = r.pass ? "pass" : "fail";
    j["value"] = r.value;
    j["witness"] = r.witness;
    j["citation"] = r.citation;
    return j;
}

inline json Certificate::to_json() const {
    std::size_t passed = 0;
    for (const auto &r : records) passed += r.pass;
    json j;
    j["schema"] = certificate_schema;
    j["engine"] = "bicanon";
    j["version"] = BICANON_VERSION;
    j["generated_at"] = generated_at;
    j["status"] = pass() ? "pass" : "fail";
    j["summary"] = {{"total", records.size()}, {"passed", passed}, {"failed", records.size() - passed}};
    if (const auto *f = first_failure())
        j["first_failure"] = {{"id", f->id}, {"witness", f->witness}};
    else
        j["first_failure"] = nullptr;
    j["records"] = json::array();
    for (const auto &r : records) j["records"].push_back(record_to_json(r));
    j["assumptions"] = assumptions;
    return j;
}

struct VerifyOptions {
    int family = 0;             ///< 0 = all families
    std::string check = "all";  ///< category filter
    std::optional<InputBundle> input;
    std::string timestamp;
};

inline const std::vector<std::string> &check_categories() {
    static const std::vector<std::string> c = {"support", "family",    "invariance", "order",   "index",
                                               "specialization", "cover", "k4", "lefschetz", "lattice",
                                               "moduli", "classification"};
    return c;
}

namespace detail {

struct Outcome {
    bool pass = false;
    json inputs = json::object();
    json value = nullptr;
    json witness = nullptr;
};

struct CheckSpec {
    std::string id;
    std::string category;
    int family;
    std::string citation_key;
    std::function<Outcome()> run;
};

inline json field_json(const FieldElem &x) {
    const auto ord = root_of_unity_order(x);
    return {{"coords", x.encode()}, {"expr", x.to_expression()}, {"root_of_unity_order", ord ? json(*ord) : json(nullptr)}};
}

inline json poly_list(const std::vector<MPoly> &ps) {
    json a = json::array();
    for (const auto &p : ps) a.push_back(p.to_string());
    return a;
}

inline json map_json(const BirMap &m) { return map_to_json(m); }

inline json qaut_json(const QAut &q) { return q.to_string(); }

inline const std::array<unsigned, 4> expected_order = {0, 4, 8, 8};
inline const std::array<int, 4> expected_index = {0, 2, 4, 2};

inline FieldElem expected_ratio(int k) { return k == 2 ? -FieldElem::imag() : FieldElem(-1); }

inline const std::array<long, 4> expected_moduli = {0, 5, 2, 2};

inline std::vector<CheckSpec> builtin_checks() {
    std::vector<CheckSpec> v;
    auto add = [&](std::string id, std::string cat, int fam, std::string cite, std::function<Outcome()> f) {
        v.push_back({std::move(id), std::move(cat), fam, std::move(cite), std::move(f)});
    };

    add("support.horikawa", "support", 0, "support", [] {
        Outcome o;
        const auto s = horikawa_support();
        json pts = json::array();
        for (const auto &[i, j] : s) pts.push_back({i, j});
        o.value = {{"size", s.size()}, {"monomials", pts}};
        bool all_families = true;
        for (int k = 1; k <= 3; ++k) {
            try {
                family(k).validate();
            } catch (const error &) {
                all_families = false;
            }
        }
        o.pass = s.size() == 13 && all_families;
        return o;
    });

    for (int k = 1; k <= 3; ++k) {
        const std::string ks = std::to_string(k);
        add("family." + ks, "family", k, "family", [k] {
            Outcome o;
            const auto f = family(k);
            f.validate();
            o.inputs = {{"family", f.name}};
            o.value = {{"branch", f.branch.to_string()}, {"parameters", f.parameters}};
            o.pass = true;
            return o;
        });
    }

    for (int k = 1; k <= 3; ++k) {
        add("invariance." + std::to_string(k), "invariance", k, "invariance", [k] {
            Outcome o;
            const auto f = family(k);
            const auto s = maps::sigma(k);
            o.inputs = {{"family", f.name}, {"map", map_json(s)}};
            const auto r = check_equation_invariance(f, s);
            o.pass = r.holds;
            o.value = r.holds;
            if (!r.holds) o.witness = {{"remainder_a", r.witness_a.to_string()}, {"remainder_b", r.witness_b.to_string()}};
            return o;
        });
    }

    for (int k = 1; k <= 3; ++k) {
        add("order." + std::to_string(k), "order", k, "order", [k] {
            Outcome o;
            const auto f = family(k);
            const auto s = maps::sigma(k);
            o.inputs = {{"family", f.name}, {"map", s.label()}, {"expected", expected_order[k]}};
            const auto n = map_order(s, f);
            o.value = n ? json(*n) : json(nullptr);
            o.pass = n && *n == expected_order[k];
            if (n) o.witness = {{"power", *n}, {"map", map_json(map_power(s, *n, &f))}};
            return o;
        });
    }

    add("order.sigma2-squared", "order", 2, "square", [] {
        Outcome o;
        const auto f = family(2);
        const auto sq = compose(maps::sigma2(), maps::sigma2(), f);
        o.inputs = {{"family", f.name}, {"lhs", "sigma2 o sigma2"}, {"rhs", map_json(maps::sigma1())}};
        o.pass = maps_equal(sq, maps::sigma1(), &f);
        o.value = o.pass;
        o.witness = map_json(sq);
        return o;
    });

    for (int k = 1; k <= 3; ++k) {
        add("index." + std::to_string(k), "index", k, "index", [k] {
            Outcome o;
            const auto f = family(k);
            const auto s = maps::sigma(k);
            o.inputs = {{"family", f.name}, {"map", s.label()}, {"expected_ratio", expected_ratio(k).to_expression()},
                        {"expected_index", expected_index[k]}};
            const auto r = bitwoform_pullback_ratio(f, s);
            const int idx = index_of(r);
            o.value = {{"ratio", field_json(r.value)}, {"index", idx}, {"constancy_certificate", r.constancy_certificate}};
            o.pass = r.value == expected_ratio(k) && idx == expected_index[k];
            return o;
        });
    }

    add("index.multiplicativity", "index", 2, "index", [] {
        Outcome o;
        const auto f = family(2);
        const auto r2 = bitwoform_pullback_ratio(f, maps::sigma2());
        const auto r1 = bitwoform_pullback_ratio(f, maps::sigma1());
        o.inputs = {{"family", f.name}, {"claim", "ratio(sigma2)^2 = ratio(sigma1)"}};
        o.value = {{"ratio_sigma2_squared", field_json(r2.value * r2.value)}, {"ratio_sigma1", field_json(r1.value)}};
        o.pass = r2.value * r2.value == r1.value && r1.value == FieldElem(-1);
        return o;
    });

    add("index.pairs", "index", 0, "pairs", [] {
        Outcome o;
        std::set<OrderIndex> realized;
        json wit = json::array();
        for (int k = 1; k <= 3; ++k) {
            const auto f = family(k);
            const auto s = maps::sigma(k);
            const auto n = map_order(s, f);
            const int idx = index_of(bitwoform_pullback_ratio(f, s));
            if (n) realized.insert({static_cast<int>(*n), idx});
            wit.push_back({{"family", f.name}, {"order", n ? json(*n) : json(nullptr)}, {"index", idx}});
        }
        json pairs = json::array();
        for (const auto &p : realized) pairs.push_back({p.order, p.index});
        o.value = pairs;
        o.witness = wit;
        o.pass = realized == admissible_pairs().admissible;
        return o;
    });

    add("specialization.family2", "specialization", 1, "specialization", [] {
        Outcome o;
        const std::map<std::string, std::string> sub = {{"A", "A"}, {"B", "B"}, {"C", "-i*A"},
                                                        {"D", "D"}, {"E", "-i*D"}, {"F", "-i*B"}};
        o.inputs = sub;
        const auto sp = specialize(family(1), sub, "family1_special");
        const auto f2 = family(2);
        o.pass = sp.branch == f2.branch;
        o.value = sp.branch.to_string();
        if (!o.pass) o.witness = (sp.branch - f2.branch).to_string();
        return o;
    });

    add("specialization.mukai-namikawa", "specialization", 1, "mukai-namikawa", [] {
        Outcome o;
        const std::map<std::string, std::string> sub = {{"A", "1"}, {"B", "-C-1"}, {"C", "C"},
                                                        {"D", "0"}, {"E", "0"}, {"F", "-C+1"}};
        o.inputs = sub;
        const auto sp = specialize(family(1), sub, "family1_mn");
        const MPoly expected = parse_poly(
            "(y^4*z^2 - z^2) - (C+1)*(y^4*z - z^3) + C*(y^4 - z^4) + (1-C)*(y^2*z - y^2*z^3)");
        const bool same = sp.branch == expected;
        const bool inv = check_equation_invariance(sp, maps::sigma1()).holds;
        o.pass = same && inv;
        o.value = {{"branch", sp.branch.to_string()}, {"parameters", sp.parameters}, {"sigma1_invariant", inv}};
        if (!same) o.witness = (sp.branch - expected).to_string();
        return o;
    });

    for (int k = 1; k <= 3; ++k) {
        add("cover.k3." + std::to_string(k), "cover", k, "k3-cover", [k] {
            Outcome o;
            const auto f = family(k);
            const auto g = k3_cover(f);
            const Frame fr = g.frame();
            const unsigned dy = g.branch.degree_in(fr.u), dz = g.branch.degree_in(fr.v);
            const bool iota = iota_invariant(g.branch, fr);
            o.inputs = {{"family", f.name}};
            o.value = {{"g", g.branch.to_string()}, {"bidegree", {dy, dz}}, {"iota_invariant", iota}};
            o.pass = dy == 4 && dz == 4 && iota;
            return o;
        });
    }

    add("cover.bis.1", "cover", 1, "bis", [] {
        Outcome o;
        const auto g = k3_cover(family(1));
        o.inputs = {{"family", "family1"}, {"condition", "Y^4 Z^4 g(1/Y,1/Z) = -g"}};
        o.pass = check_bis_condition(g.branch, BisCondition::reciprocal_negation);
        o.value = o.pass;
        return o;
    });

    add("cover.bis.2", "cover", 2, "bis", [] {
        Outcome o;
        const auto g = k3_cover(family(2));
        o.inputs = {{"family", "family2"}, {"condition", "Z^4 g(1/Z,Y) = i g"}};
        o.pass = check_bis_condition(g.branch, BisCondition::swap_twist);
        o.value = o.pass;
        return o;
    });

    add("cover.epsilon", "cover", 1, "epsilon", [] {
        Outcome o;
        const auto e = epsilon_fixed_point_free(family(1));
        o.inputs = {{"family", "family1"}, {"map", map_json(maps::epsilon())}};
        const auto vars = VarTable::standard();
        const std::array<MPoly, 4> expected = {parse_poly("-A"), parse_poly("C"), parse_poly("-C"), parse_poly("A")};
        o.witness = {{"corners", poly_list({e.corners.begin(), e.corners.end()})},
                     {"points", {"(0,0)", "(inf,0)", "(0,inf)", "(inf,inf)"}}};
        o.value = e.fixed_point_free;
        o.pass = e.fixed_point_free && e.corners == expected;
        return o;
    });

    add("cover.k3-ratio.1", "cover", 1, "k3-ratio", [] {
        Outcome o;
        const auto g = k3_cover(family(1));
        const auto lift = maps::k3_lift1();
        const auto other = compose(maps::epsilon(), lift, g);
        const auto r = k3_twoform_ratio(g, lift);
        const auto r2 = k3_twoform_ratio(g, other);
        o.inputs = {{"family", g.name}, {"lift", map_json(lift)}};
        o.value = {{"lift", field_json(r.value)}, {"epsilon_lift", field_json(r2.value)}};
        o.pass = r.value == -r2.value && r.value * r.value == FieldElem(-1);
        return o;
    });

    add("cover.k3-ratio.2", "cover", 2, "k3-ratio", [] {
        Outcome o;
        const auto g = k3_cover(family(2));
        const auto lift = maps::k3_lift2();
        const auto other = compose(maps::epsilon(), lift, g);
        const auto r = k3_twoform_ratio(g, lift);
        const auto r2 = k3_twoform_ratio(g, other);
        const auto r1 = k3_twoform_ratio(g, maps::k3_lift1());
        const bool squares = maps_equal(compose(lift, lift, g), maps::k3_lift1(), &g);
        o.inputs = {{"family", g.name}, {"lift", map_json(lift)}};
        o.value = {{"lift", field_json(r.value)},
                   {"epsilon_lift", field_json(r2.value)},
                   {"lift_squared_is_first_lift", squares},
                   {"first_lift", field_json(r1.value)}};
        o.pass = squares && r.value == -r2.value && r.value * r.value == r1.value &&
                 root_of_unity_order(r.value) == 8;
        return o;
    });

    add("k4.normal-form", "k4", 0, "k4", [] {
        Outcome o;
        const auto k = k4_normal_form_details();
        json roots = json::array(), classes = json::array();
        for (const auto &q : k.square_roots) roots.push_back(qaut_json(q));
        for (const auto &q : k.roots_up_to_inverse) classes.push_back(qaut_json(q));
        o.inputs = {{"candidates", k.candidates}, {"target", qaut_json(qauts::phi1())}};
        o.value = {{"klein_four", k.klein_four},
                   {"phi2_squares", k.phi2_squares},
                   {"square_roots", roots},
                   {"square_roots_up_to_inverse", classes},
                   {"direct_shape_roots", k.direct_roots.size()}};
        o.pass = k.ok;
        return o;
    });

    const std::vector<std::pair<QAut, unsigned>> fp = {{qauts::iota(), 4},    {qauts::phi1(), 4},
                                                       {qauts::iota_phi1(), 4}, {qauts::phi2(1), 2},
                                                       {qauts::phi2(-1), 2}};
    for (const auto &[q, expected] : fp) {
        add("k4.fixed-points." + q.label, "k4", 0, "fixed-points", [q = q, expected = expected] {
            Outcome o;
            const auto r = qaut_fixed_points(q);
            const int trace = qaut_ns_trace(q);
            o.inputs = {{"map", qaut_json(q)}, {"expected", expected}};
            json pts = json::array();
            if (r.points)
                for (const auto &[a, b] : *r.points) pts.push_back({p1_to_string(a), p1_to_string(b)});
            o.value = {{"count", r.count}, {"ns_trace", trace}, {"lefschetz", topological_lefschetz_count(trace)}};
            o.witness = pts;
            o.pass = r.count == expected && static_cast<long>(r.count) == topological_lefschetz_count(trace);
            return o;
        });
    }

    for (Sign s : {Sign::plus, Sign::minus}) {
        const std::string sn = s == Sign::plus ? "plus" : "minus";
        add("lefschetz.isolated." + sn, "lefschetz", 0, "lefschetz-b", [s] {
            Outcome o;
            o.inputs = {{"eigenvalue", signed_imag(s).to_expression()}};
            const long n = holomorphic_lefschetz_case_b(s);
            o.value = n;
            o.pass = n == 4;
            return o;
        });
    }
    for (Sign s : {Sign::plus, Sign::minus}) {
        const std::string sn = s == Sign::plus ? "plus" : "minus";
        add("lefschetz.curve." + sn, "lefschetz", 0, "lefschetz-a", [s] {
            Outcome o;
            const FixedCurveData c{9, 16};
            o.inputs = {{"eigenvalue", signed_imag(s).to_expression()}, {"genus", c.genus},
                        {"self_intersection", c.self_intersection}, {"adjunction", c.satisfies_adjunction()}};
            const auto r = holomorphic_lefschetz_case_a(s, c);
            o.value = {{"lhs", field_json(r.lhs)}, {"rhs", field_json(r.rhs)}, {"equal", r.equal}};
            o.pass = !r.equal && c.satisfies_adjunction();
            return o;
        });
    }

    add("lattice.u2", "lattice", 0, "lattice", [] {
        Outcome o;
        const auto inv = lattice_invariants(GramLattice::U2());
        o.inputs = {{"gram", GramLattice::U2().gram()}};
        o.value = {{"rank", inv.rank}, {"determinant", inv.determinant.get_str()}};
        o.pass = inv.rank == 2 && inv.determinant == -4;
        return o;
    });

    add("lattice.u2-trace2", "lattice", 0, "lattice-trace", [] {
        Outcome o;
        const auto isos = isometries_with_trace(GramLattice::U2(), 2, 2);
        o.inputs = {{"gram", GramLattice::U2().gram()}, {"trace", 2}, {"entry_bound", 2}};
        o.value = isos;
        o.pass = isos.size() == 1 && isos.front() == IntMatrix{{1, 0}, {0, 1}};
        return o;
    });

    for (int k = 1; k <= 3; ++k) {
        add("moduli." + std::to_string(k), "moduli", k, "moduli", [k] {
            Outcome o;
            const auto f = family(k);
            const auto acts = builtin_actions(k);
            json checks = json::array(), names = json::array();
            bool all = true;
            for (const auto &a : acts) {
                const auto c = check_parameter_action(f, a);
                all = all && c.holds;
                names.push_back(a.name);
                checks.push_back({{"action", a.name},
                                  {"holds", c.holds},
                                  {"w_square_weight", c.w_square_weight ? json(*c.w_square_weight) : json(nullptr)}});
            }
            o.inputs = {{"family", f.name}, {"actions", names}, {"expected", expected_moduli[k]}};
            const long m = static_cast<long>(f.parameters.size()) - weight_rank(f, acts);
            o.value = {{"parameters", f.parameters.size()}, {"identification_rank", weight_rank(f, acts)}, {"moduli", m}};
            o.witness = checks;
            o.pass = all && m == expected_moduli[k];
            return o;
        });
    }

    add("moduli.diagonal-scaling-family1", "moduli", 1, "moduli", [] {
        Outcome o;
        const auto c = check_parameter_action(family(1), diagonal_scaling());
        o.inputs = {{"family", "family1"}, {"action", "diagonal_scaling"}, {"expected", "not an identification"}};
        o.value = c.holds;
        o.witness = c.witness;
        o.pass = !c.holds;
        return o;
    });

    for (const auto &[rank_t, n, expected] :
         std::vector<std::tuple<long, long, long>>{{12, 4, 5}, {12, 8, 2}, {6, 4, 2}}) {
        add("moduli.dimension." + std::to_string(rank_t) + "-" + std::to_string(n), "moduli", 0, "moduli-dimension",
            [rank_t = rank_t, n = n, expected = expected] {
                Outcome o;
                o.inputs = {{"rank_T", rank_t}, {"order", n}, {"phi", euler_phi(n)}, {"expected", expected}};
                const long m = moduli_dimension(rank_t, n);
                o.value = m;
                o.pass = m == expected;
                return o;
            });
    }

    add("classification.picard-bound", "classification", 0, "picard", [] {
        Outcome o;
        const auto b = picard_bound_for_82();
        o.inputs = {{"singularities", {"A3", "A3", "A3", "A3", "A1", "A1"}}};
        o.value = {{"exceptional_rank", b.exceptional_rank}, {"with_ample", b.with_ample},
                   {"rho_bound", b.rho_bound}, {"rank_t_bound", b.rank_t_bound}};
        o.pass = b.exceptional_rank == 14 && b.with_ample == 15 && b.rho_bound == 16 && b.rank_t_bound == 6;
        return o;
    });

    add("classification.admissible-pairs", "classification", 0, "classification", [] {
        Outcome o;
        const auto r = admissible_pairs();
        json cands = json::array(), adm = json::array(), trace = json::array();
        for (const auto &c : r.candidates) cands.push_back({c.order, c.index});
        for (const auto &c : r.admissible) adm.push_back({c.order, c.index});
        for (const auto &t : r.trace)
            trace.push_back({{"pair", {t.candidate.order, t.candidate.index}}, {"rule", t.rule_id}, {"citation", t.citation}});
        o.inputs = {{"candidates", cands}};
        o.value = adm;
        o.witness = trace;
        o.pass = r.admissible == std::set<OrderIndex>{{4, 2}, {8, 2}, {8, 4}} &&
                 r.trace.size() + r.admissible.size() == r.candidates.size();
        return o;
    });

    add("classification.allowed-orders", "classification", 0, "allowed-orders", [] {
        Outcome o;
        const auto s = allowed_orders();
        o.value = s;
        o.pass = s == std::set<int>{1, 2, 3, 4, 5, 6, 8};
        return o;
    });

    return v;
}

inline std::vector<CheckSpec> input_checks(const InputBundle &b) {
    std::vector<CheckSpec> v;
    for (const auto &fe : b.families) {
        const auto f = std::make_shared<const SurfaceFamily>(fe.family);
        v.push_back({"input.family." + f->name, "family", 0, "input", [f] {
                         Outcome o;
                         f->validate();
                         o.inputs = {{"family", f->name}, {"kind", to_string(f->kind)}};
                         o.value = {{"branch", f->branch.to_string()}, {"parameters", f->parameters}};
                         o.pass = true;
                         return o;
                     }});
        if (!fe.actions.empty()) {
            const auto acts = std::make_shared<const std::vector<ParameterAction>>(fe.actions);
            v.push_back({"input.moduli." + f->name, "moduli", 0, "moduli", [f, acts] {
                             Outcome o;
                             json checks = json::array();
                             bool all = true;
                             for (const auto &a : *acts) {
                                 const auto c = check_parameter_action(*f, a);
                                 all = all && c.holds;
                                 checks.push_back({{"action", a.name},
                                                   {"holds", c.holds},
                                                   {"w_square_weight", c.w_square_weight ? json(*c.w_square_weight)
                                                                                         : json(nullptr)},
                                                   {"witness", c.witness}});
                             }
                             o.inputs = {{"family", f->name}};
                             const long rank = weight_rank(*f, *acts);
                             o.value = {{"parameters", f->parameters.size()}, {"identification_rank", rank},
                                        {"moduli", static_cast<long>(f->parameters.size()) - rank}};
                             o.witness = checks;
                             o.pass = all;
                             return o;
                         }});
        }
    }
    for (const auto &me : b.maps) {
        const auto m = std::make_shared<const BirMap>(me.map);
        if (!me.family) {
            v.push_back({"input.map." + m->label(), "order", 0, "input", [m] {
                             Outcome o;
                             o.inputs = {{"map", map_json(*m)}};
                             const auto n = map_order(*m);
                             o.value = n ? json(*n) : json(nullptr);
                             o.pass = true;
                             return o;
                         }});
            continue;
        }
        const auto f = std::make_shared<const SurfaceFamily>(b.find_family(*me.family)->family);
        const std::string tag = m->label() + "@" + f->name;
        v.push_back({"input.invariance." + tag, "invariance", 0, "invariance", [m, f] {
                         Outcome o;
                         o.inputs = {{"family", f->name}, {"map", map_json(*m)}};
                         const auto r = check_equation_invariance(*f, *m);
                         o.pass = r.holds;
                         o.value = r.holds;
                         if (!r.holds)
                             o.witness = {{"remainder_a", r.witness_a.to_string()},
                                          {"remainder_b", r.witness_b.to_string()}};
                         return o;
                     }});
        v.push_back({"input.order." + tag, "order", 0, "order", [m, f] {
                         Outcome o;
                         o.inputs = {{"family", f->name}, {"map", m->label()}};
                         const auto n = map_order(*m, *f);
                         o.value = n ? json(*n) : json(nullptr);
                         o.pass = n.has_value();
                         if (!n) o.witness = "no power up to 16 is the identity";
                         return o;
                     }});
        v.push_back({"input.index." + tag, "index", 0, f->kind == FamilyKind::k3_cover ? "k3-ratio" : "index", [m, f] {
                         Outcome o;
                         o.inputs = {{"family", f->name}, {"map", m->label()}};
                         const auto r = f->kind == FamilyKind::k3_cover ? k3_twoform_ratio(*f, *m)
                                                                          : bitwoform_pullback_ratio(*f, *m);
                         o.value = {{"ratio", field_json(r.value)}, {"index", index_of(r)}};
                         o.pass = true;
                         return o;
                     }});
    }
    return v;
}

inline bool selected(const CheckSpec &c, const VerifyOptions &opt) {
    if (opt.check != "all" && c.category != opt.check) return false;
    if (opt.family != 0 && c.family != opt.family && !c.id.starts_with("input.")) return false;
    return true;
}

} // namespace detail

/// Runs every selected check in declared order. A check that throws is a
/// failed record whose witness is the error message; the run always
/// completes.
inline Certificate verify_all(const VerifyOptions &opt = {}) {
    if (opt.check != "all" &&
        std::find(check_categories().begin(), check_categories().end(), opt.check) == check_categories().end())
        throw schema_error("unknown check category '" + opt.check + "'");
    if (opt.family < 0 || opt.family > 3) throw schema_error("family must be 1, 2, 3 or all");
    auto checks = detail::builtin_checks();
    if (opt.input) {
        auto extra = detail::input_checks(*opt.input);
        checks.insert(checks.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    }
    Certificate cert;
    cert.generated_at = opt.timestamp;
    cert.assumptions = certificate_assumptions();
    for (const auto &c : checks) {
        if (!detail::selected(c, opt)) continue;
        CheckRecord r;
        r.id = c.id;
        r.category = c.category;
        r.family = c.family;
        r.citation = citation(c.citation_key);
        try {
            auto o = c.run();
            r.pass = o.pass;
            r.inputs = std::move(o.inputs);
            r.value = std::move(o.value);
            r.witness = std::move(o.witness);
        } catch (const std::exception &e) {
            r.pass = false;
            r.witness = {{"error", e.what()}};
        }
        cert.records.push_back(std::move(r));
    }
    return cert;
}

} // namespace bicanon

#endif
