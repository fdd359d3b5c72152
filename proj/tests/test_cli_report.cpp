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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include <bicanon/bicanon.hpp>

using namespace bicanon;

namespace {

const std::string kSource = BICANON_SOURCE_DIR;
const std::string kCli = BICANON_CLI_PATH;

std::string path(const std::string &rel) { return kSource + "/" + rel; }

std::string slurp(const std::string &p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_timestamp(const std::string &text) {
    static const std::regex ts("\"generated_at\": \"[^\"]*\"");
    return std::regex_replace(text, ts, "\"generated_at\": \"\"");
}

std::string render(const Certificate &c) { return c.to_json().dump(2) + "\n"; }

int run_cli(const std::string &args) {
    const std::string cmd = "\"" + kCli + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("bicanon_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Ingest, FixturesRoundTripToBuiltins) {
    for (int k = 1; k <= 3; ++k) {
        const auto b = ingest_file(path("fixtures/family" + std::to_string(k) + ".json"));
        ASSERT_EQ(b.families.size(), 1u);
        EXPECT_EQ(b.families[0].family, family(k));
        const auto acts = builtin_actions(k);
        ASSERT_EQ(b.families[0].actions.size(), acts.size());
        for (std::size_t i = 0; i < acts.size(); ++i) {
            EXPECT_EQ(b.families[0].actions[i].weights, acts[i].weights);
            EXPECT_EQ(b.families[0].actions[i].u, acts[i].u);
        }
        ASSERT_EQ(b.maps.size(), 1u);
        EXPECT_EQ(b.maps[0].family, "family" + std::to_string(k));
        const auto f = family(k);
        EXPECT_TRUE(maps_equal(b.maps[0].map, maps::sigma(k), &f));
    }
}

TEST(Ingest, SerializeRoundTrip) {
    for (int k = 1; k <= 3; ++k) {
        const auto j = bundle_to_json(builtin_bundle(k));
        EXPECT_EQ(bundle_to_json(ingest_json(j)), j);
        EXPECT_EQ(bundle_to_json(ingest_text(j.dump())), j);
    }
    InputBundle k3{VarTable::standard(), {{k3_cover(family(2)), {}}}, {{maps::k3_lift2(), std::string("family2_k3")}}};
    const auto back = ingest_json(bundle_to_json(k3));
    EXPECT_EQ(back.families[0].family, k3.families[0].family);
    EXPECT_EQ(back.maps[0].map.cover(), maps::k3_lift2().cover());
}

TEST(Ingest, SupportViolation) {
    try {
        ingest_file(path("tests/data/bad_support.json"));
        FAIL();
    } catch (const schema_error &e) {
        EXPECT_NE(std::string(e.what()).find("support outside 4 <= i+2j <= 8"), std::string::npos);
    }
}

TEST(Ingest, MalformedExpression) {
    try {
        ingest_file(path("tests/data/bad_expression.json"));
        FAIL();
    } catch (const parse_error &e) {
        EXPECT_EQ(e.position(), 3u);
        EXPECT_NE(std::string(e.what()).find("coords.y"), std::string::npos);
    }
}

TEST(Ingest, MalformedJson) { EXPECT_THROW(ingest_file(path("tests/data/malformed.json")), parse_error); }

TEST(Ingest, SchemaErrors) {
    EXPECT_THROW(ingest_file(path("tests/data/undeclared_parameter.json")), schema_error);
    EXPECT_THROW(ingest_file(path("tests/data/does_not_exist.json")), schema_error);
    EXPECT_THROW(ingest_text("[]"), schema_error);
    EXPECT_THROW(ingest_text(R"({"families": [{"name": "x", "kind": "weird", "parameters": [], "monomials": []}]})"),
                 schema_error);
    EXPECT_THROW(ingest_text(R"({"families": [{"name": "x", "kind": "k3_cover", "parameters": [], "monomials": [
                                 {"i": 5, "j": 0, "coeff": {"param": null, "scalar": "1,0,0,0"}}]}]})"),
                 schema_error);
    EXPECT_THROW(ingest_text(R"({"families": [{"name": "x", "kind": "enriques_horikawa", "parameters": ["y"],
                                 "monomials": []}]})"),
                 schema_error);
    EXPECT_THROW(ingest_text(R"({"maps": [{"name": "m", "family": "nope", "coords": {"w": "w", "y": "y", "z": "z"}}]})"),
                 schema_error);
    EXPECT_THROW(ingest_text(R"({"maps": [{"name": "m", "coords": {"a": "w"}}]})"), schema_error);
    EXPECT_THROW(ingest_text(R"({"families": [{"name": "x", "kind": "enriques_horikawa", "parameters": [],
                                 "monomials": [{"i": 4, "j": 0, "coeff": {"param": null, "scalar": "1,0"}}]}]})"),
                 parse_error);
}

TEST(Ingest, InvariantViolation) {
    EXPECT_THROW(ingest_text(R"({"maps": [{"name": "m", "coords": {"w": "w^2", "y": "y", "z": "z"}}]})"), invariant_error);
}

TEST(Ingest, CustomParameterNames) {
    const auto b = ingest_file(path("tests/data/custom_family.json"));
    ASSERT_EQ(b.families.size(), 1u);
    EXPECT_EQ(b.families[0].family.parameters, (std::vector<std::string>{"p", "q"}));
    EXPECT_EQ(moduli_number(b.families[0].family, b.families[0].actions), 1);
    EXPECT_TRUE(check_equation_invariance(b.families[0].family, b.maps[0].map).holds);
}

TEST(Certificate, BuiltinRunPasses) {
    const auto c = verify_all({0, "all", std::nullopt, "t"});
    EXPECT_TRUE(c.pass());
    EXPECT_EQ(c.first_failure(), nullptr);
    const auto *pairs = c.find("classification.admissible-pairs");
    ASSERT_NE(pairs, nullptr);
    EXPECT_EQ(pairs->value.size(), 3u);
    for (const auto &r : c.records) {
        EXPECT_TRUE(is_catalogued_citation(r.citation)) << r.id;
        EXPECT_FALSE(r.citation.empty());
    }
}

TEST(Certificate, Deterministic) {
    const auto a = render(verify_all({0, "all", std::nullopt, "first"}));
    const auto b = render(verify_all({0, "all", std::nullopt, "second"}));
    EXPECT_NE(a, b);
    EXPECT_EQ(strip_timestamp(a), strip_timestamp(b));
}

TEST(Certificate, MatchesGoldenByteForByte) {
    const auto golden = slurp(path("tests/golden/certificate.json"));
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(strip_timestamp(render(verify_all({0, "all", std::nullopt, "now"}))), strip_timestamp(golden));
}

TEST(Certificate, CorruptedFixtureFailsButRunCompletes) {
    VerifyOptions opt{0, "all", ingest_file(path("tests/data/corrupted_sigma1.json")), "t"};
    const auto c = verify_all(opt);
    EXPECT_FALSE(c.pass());
    const auto *f = c.first_failure();
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->id, "input.invariance.sigma1_corrupted@family1");
    EXPECT_EQ(f->category, "invariance");
    ASSERT_TRUE(f->witness.contains("remainder_a"));
    EXPECT_NE(f->witness["remainder_a"].get<std::string>(), "0");
    // every later check still ran
    EXPECT_NE(c.find("input.index.sigma1_corrupted@family1"), nullptr);
    EXPECT_GT(c.records.size(), verify_all({}).records.size());
    const auto j = c.to_json();
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["first_failure"]["id"], f->id);
}

TEST(Certificate, Filters) {
    const auto fam2 = verify_all({2, "all", std::nullopt, ""});
    ASSERT_FALSE(fam2.records.empty());
    for (const auto &r : fam2.records) EXPECT_EQ(r.family, 2) << r.id;
    const auto inv = verify_all({0, "invariance", std::nullopt, ""});
    ASSERT_EQ(inv.records.size(), 3u);
    for (const auto &r : inv.records) EXPECT_EQ(r.category, "invariance");
    EXPECT_EQ(verify_all({3, "order", std::nullopt, ""}).records.size(), 1u);
    EXPECT_THROW(verify_all({0, "nonsense", std::nullopt, ""}), schema_error);
    EXPECT_THROW(verify_all({4, "all", std::nullopt, ""}), schema_error);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("verify"), 0);
    EXPECT_EQ(run_cli("verify --family 1 --check index"), 0);
    EXPECT_EQ(run_cli("classify"), 0);
    EXPECT_EQ(run_cli("verify --input \"" + path("tests/data/corrupted_sigma1.json") + "\""), 1);
    EXPECT_EQ(run_cli("verify --input \"" + path("tests/data/bad_support.json") + "\""), 2);
    EXPECT_EQ(run_cli("verify --input \"" + path("tests/data/bad_expression.json") + "\""), 2);
    EXPECT_EQ(run_cli("verify --input \"" + path("tests/data/malformed.json") + "\""), 2);
    EXPECT_EQ(run_cli("verify --input \"" + path("tests/data/undeclared_parameter.json") + "\""), 2);
    EXPECT_NE(run_cli("verify --family 7"), 0);
}

TEST(Cli, ReportMatchesGolden) {
    const auto out = temp_file("report.json");
    ASSERT_EQ(run_cli("report --out \"" + out.string() + "\""), 0);
    EXPECT_EQ(strip_timestamp(slurp(out.string())), strip_timestamp(slurp(path("tests/golden/certificate.json"))));
    std::filesystem::remove(out);
}

TEST(Cli, ExportReproducesFixtures) {
    const auto dir = temp_file("fixtures");
    ASSERT_EQ(run_cli("export --out \"" + dir.string() + "\""), 0);
    for (int k = 1; k <= 3; ++k) {
        const std::string name = "family" + std::to_string(k) + ".json";
        EXPECT_EQ(slurp((dir / name).string()), slurp(path("fixtures/" + name)));
    }
    std::filesystem::remove_all(dir);
}
