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

#ifndef BICANON_IO_HPP
#define BICANON_IO_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "birational.hpp"
#include "builtin_maps.hpp"
#include "cover_ring.hpp"
#include "moduli.hpp"

namespace bicanon {

using json = nlohmann::ordered_json;

/// A family from an input file together with its declared identifications.
struct FamilyEntry {
    SurfaceFamily family;
    std::vector<ParameterAction> actions;
};

struct MapEntry {
    BirMap map;
    /// Name of the family the map is checked against, if any.
    std::optional<std::string> family;
};

struct InputBundle {
    VarTablePtr vars;
    std::vector<FamilyEntry> families;
    std::vector<MapEntry> maps;

    const FamilyEntry *find_family(const std::string &name) const {
        for (const auto &f : families)
            if (f.family.name == name) return &f;
        return nullptr;
    }
};

inline json field_to_json(const FieldElem &x) { return {{"coords", x.encode()}, {"expr", x.to_expression()}}; }

// ---------------------------------------------------------------- serialize

inline json family_to_json(const SurfaceFamily &fam, const std::vector<ParameterAction> &actions = {}) {
    const auto &t = *fam.vars();
    const Frame fr = fam.frame();
    json monos = json::array();
    for (const auto &[e, c] : fam.branch.terms()) {
        json coeff = {{"param", nullptr}, {"scalar", c.encode()}};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && t.is_parameter(i)) coeff["param"] = t.name(i);
        monos.push_back({{"i", e[fr.u]}, {"j", e[fr.v]}, {"coeff", coeff}});
    }
    json acts = json::array();
    for (const auto &a : actions) {
        json w = json::object();
        for (const auto &p : fam.parameters)
            if (a.weight(p) != 0) w[p] = a.weight(p);
        acts.push_back({{"name", a.name}, {"weights", w}, {"coords", {{t.name(fr.u), a.u.to_string()}, {t.name(fr.v), a.v.to_string()}}}});
    }
    return {{"name", fam.name}, {"kind", to_string(fam.kind)}, {"parameters", fam.parameters}, {"monomials", monos},
            {"actions", acts}};
}

inline json map_to_json(const BirMap &m, const std::optional<std::string> &family = std::nullopt) {
    const auto &t = *m.vars();
    const Frame fr = m.frame();
    json j = {{"name", m.label()},
              {"coords", {{t.name(fr.cover), m.cover().to_string()}, {t.name(fr.u), m.u().to_string()}, {t.name(fr.v), m.v().to_string()}}}};
    if (family) j["family"] = *family;
    return j;
}

inline json bundle_to_json(const InputBundle &b) {
    json fams = json::array(), maps = json::array();
    for (const auto &f : b.families) fams.push_back(family_to_json(f.family, f.actions));
    for (const auto &m : b.maps) maps.push_back(map_to_json(m.map, m.family));
    return {{"families", fams}, {"maps", maps}};
}

// ------------------------------------------------------------------- ingest

namespace detail {

inline const json &require(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) throw schema_error(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline std::string require_string(const json &j, const char *key, const std::string &where) {
    const json &v = require(j, key, where);
    if (!v.is_string()) throw schema_error(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline RatFunc parse_field(const json &j, const char *key, const std::string &where, const VarTablePtr &vars) {
    const std::string text = require_string(j, key, where);
    try {
        return parse_ratfunc(text, vars);
    } catch (const parse_error &e) {
        throw parse_error(where + "." + key + ": " + e.message(), e.position());
    }
}

inline FamilyKind parse_kind(const std::string &s, const std::string &where) {
    if (s == "enriques_horikawa") return FamilyKind::enriques_horikawa;
    if (s == "k3_cover") return FamilyKind::k3_cover;
    throw schema_error(where + ": unknown kind '" + s + "'");
}

inline std::vector<std::string> declared_parameters(const json &root) {
    std::vector<std::string> params;
    if (!root.contains("families")) return params;
    for (const auto &f : root.at("families"))
        if (f.is_object() && f.contains("parameters") && f.at("parameters").is_array())
            for (const auto &p : f.at("parameters"))
                if (p.is_string()) params.push_back(p.get<std::string>());
    return params;
}

inline FamilyEntry parse_family(const json &jf, const VarTablePtr &vars, std::size_t index) {
    std::string where = "families[" + std::to_string(index) + "]";
    const std::string name = require_string(jf, "name", where);
    where += " (" + name + ")";
    const FamilyKind kind = parse_kind(require_string(jf, "kind", where), where);
    const json &jp = require(jf, "parameters", where);
    if (!jp.is_array()) throw schema_error(where + ": 'parameters' must be an array");
    std::vector<std::string> params;
    for (const auto &p : jp) {
        if (!p.is_string()) throw schema_error(where + ": parameter names must be strings");
        const auto idx = vars->index(p.get<std::string>());
        if (!vars->is_parameter(idx)) throw schema_error(where + ": '" + p.get<std::string>() + "' is a geometric variable");
        params.push_back(p.get<std::string>());
    }
    const Frame fr = kind == FamilyKind::enriques_horikawa ? Frame::enriques(*vars) : Frame::k3(*vars);
    const auto support = horikawa_support();
    MPoly branch(vars);
    const json &jm = require(jf, "monomials", where);
    if (!jm.is_array()) throw schema_error(where + ": 'monomials' must be an array");
    for (std::size_t k = 0; k < jm.size(); ++k) {
        const std::string mw = where + ".monomials[" + std::to_string(k) + "]";
        const json &m = jm[k];
        const json &ji = require(m, "i", mw), &jj = require(m, "j", mw);
        if (!ji.is_number_integer() || !jj.is_number_integer() || ji.get<long>() < 0 || jj.get<long>() < 0)
            throw schema_error(mw + ": exponents must be non-negative integers");
        const int i = ji.get<int>(), j = jj.get<int>();
        if (kind == FamilyKind::enriques_horikawa && !support.contains({i, j}))
            throw schema_error(mw + ": support outside 4 <= i+2j <= 8 (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        if (kind == FamilyKind::k3_cover && (i > 4 || j > 4))
            throw schema_error(mw + ": bidegree exceeds (4,4)");
        const json &jc = require(m, "coeff", mw);
        FieldElem scalar(1);
        if (jc.contains("scalar")) {
            if (!jc.at("scalar").is_string()) throw schema_error(mw + ": scalar must be a string");
            try {
                scalar = FieldElem::decode(jc.at("scalar").get<std::string>());
            } catch (const parse_error &e) {
                throw parse_error(mw + ".coeff.scalar: " + e.message(), e.position());
            }
        }
        Exponent e(vars->size(), 0);
        e[fr.u] = static_cast<std::uint16_t>(i);
        e[fr.v] = static_cast<std::uint16_t>(j);
        if (jc.contains("param") && !jc.at("param").is_null()) {
            if (!jc.at("param").is_string()) throw schema_error(mw + ": param must be a string or null");
            const std::string p = jc.at("param").get<std::string>();
            if (std::find(params.begin(), params.end(), p) == params.end())
                throw schema_error(mw + ": parameter '" + p + "' is not declared");
            e[vars->index(p)] = 1;
        }
        branch.add_term(e, scalar);
    }
    FamilyEntry entry{SurfaceFamily{name, kind, std::move(branch), std::move(params)}, {}};
    entry.family.validate();
    if (jf.contains("actions")) {
        const json &ja = jf.at("actions");
        if (!ja.is_array()) throw schema_error(where + ": 'actions' must be an array");
        for (std::size_t k = 0; k < ja.size(); ++k) {
            const std::string aw = where + ".actions[" + std::to_string(k) + "]";
            ParameterAction act;
            act.name = require_string(ja[k], "name", aw);
            const json &jw = require(ja[k], "weights", aw);
            if (!jw.is_object()) throw schema_error(aw + ": 'weights' must be an object");
            for (const auto &[p, w] : jw.items()) {
                if (!w.is_number_integer()) throw schema_error(aw + ": weight of '" + p + "' must be an integer");
                if (std::find(entry.family.parameters.begin(), entry.family.parameters.end(), p) ==
                    entry.family.parameters.end())
                    throw schema_error(aw + ": weight for undeclared parameter '" + p + "'");
                act.weights[p] = w.get<int>();
            }
            const json &jc = require(ja[k], "coords", aw);
            act.u = parse_field(jc, vars->name(fr.u).c_str(), aw + ".coords", vars);
            act.v = parse_field(jc, vars->name(fr.v).c_str(), aw + ".coords", vars);
            entry.actions.push_back(std::move(act));
        }
    }
    return entry;
}

inline MapEntry parse_map(const json &jm, const VarTablePtr &vars, std::size_t index) {
    std::string where = "maps[" + std::to_string(index) + "]";
    const std::string name = require_string(jm, "name", where);
    where += " (" + name + ")";
    const json &jc = require(jm, "coords", where);
    if (!jc.is_object()) throw schema_error(where + ": 'coords' must be an object");
    Frame fr{};
    if (jc.contains("w") || jc.contains("y") || jc.contains("z")) fr = Frame::enriques(*vars);
    else if (jc.contains("W") || jc.contains("Y") || jc.contains("Z")) fr = Frame::k3(*vars);
    else throw schema_error(where + ": coords must use keys w,y,z or W,Y,Z");
    const std::string cw = where + ".coords";
    RatFunc c = parse_field(jc, vars->name(fr.cover).c_str(), cw, vars);
    RatFunc u = parse_field(jc, vars->name(fr.u).c_str(), cw, vars);
    RatFunc v = parse_field(jc, vars->name(fr.v).c_str(), cw, vars);
    MapEntry entry{BirMap(fr, std::move(c), std::move(u), std::move(v), name), std::nullopt};
    if (jm.contains("family")) {
        if (!jm.at("family").is_string()) throw schema_error(where + ": 'family' must be a string");
        entry.family = jm.at("family").get<std::string>();
    }
    return entry;
}

} // namespace detail

/// Builds and invariant-checks the domain objects of an input document.
/// Throws parse_error, schema_error or invariant_error.
inline InputBundle ingest_json(const json &root) {
    if (!root.is_object()) throw schema_error("input must be a JSON object");
    InputBundle b;
    b.vars = VarTable::with_parameters(detail::declared_parameters(root));
    if (root.contains("families")) {
        const json &jf = root.at("families");
        if (!jf.is_array()) throw schema_error("'families' must be an array");
        for (std::size_t k = 0; k < jf.size(); ++k) {
            auto entry = detail::parse_family(jf[k], b.vars, k);
            if (b.find_family(entry.family.name)) throw schema_error("duplicate family name '" + entry.family.name + "'");
            b.families.push_back(std::move(entry));
        }
    }
    if (root.contains("maps")) {
        const json &jm = root.at("maps");
        if (!jm.is_array()) throw schema_error("'maps' must be an array");
        for (std::size_t k = 0; k < jm.size(); ++k) {
            auto entry = detail::parse_map(jm[k], b.vars, k);
            if (entry.family) {
                const FamilyEntry *f = b.find_family(*entry.family);
                if (!f) throw schema_error("map '" + entry.map.label() + "' refers to unknown family '" + *entry.family + "'");
                if (!(f->family.frame() == entry.map.frame()))
                    throw schema_error("map '" + entry.map.label() + "' uses different coordinates than its family");
            }
            b.maps.push_back(std::move(entry));
        }
    }
    return b;
}

inline InputBundle ingest_text(const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw parse_error("malformed JSON", e.byte);
    }
    return ingest_json(root);
}

inline InputBundle ingest_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ingest_text(ss.str());
}

/// Built-in family k with its declared actions and its automorphism.
inline InputBundle builtin_bundle(int k) {
    InputBundle b;
    b.vars = VarTable::standard();
    b.families.push_back({family(k), builtin_actions(k)});
    b.maps.push_back({maps::sigma(k), b.families.front().family.name});
    return b;
}

} // namespace bicanon

#endif
