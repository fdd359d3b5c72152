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

// bicanon command-line driver.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <bicanon/bicanon.hpp>

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2 };

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_json(const bicanon::json &j, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw bicanon::schema_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

void print_summary(const bicanon::Certificate &c) {
    for (const auto &r : c.records) std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.id << '\n';
    const auto j = c.to_json();
    std::cout << "status: " << j["status"].get<std::string>() << " (" << j["summary"]["passed"] << "/"
              << j["summary"]["total"] << ")\n";
    if (const auto *f = c.first_failure()) std::cout << "first failure: " << f->id << ": " << f->witness.dump() << '\n';
}

int run_classify() {
    const auto r = bicanon::admissible_pairs();
    std::cout << "candidates:";
    for (const auto &c : r.candidates) std::cout << " (" << c.order << "," << c.index << ")";
    std::cout << "\npruned:\n";
    for (const auto &t : r.trace)
        std::cout << "  (" << t.candidate.order << "," << t.candidate.index << ")  " << t.rule_id << ": " << t.citation
                  << '\n';
    std::cout << "admissible (order, index):";
    for (const auto &c : r.admissible) std::cout << " (" << c.order << "," << c.index << ")";
    std::cout << "\nallowed orders:";
    for (int n : bicanon::allowed_orders()) std::cout << ' ' << n;
    std::cout << '\n';
    return ok;
}

int run_export(const std::string &dir) {
    std::filesystem::create_directories(dir);
    for (int k = 1; k <= 3; ++k) {
        const auto path = std::filesystem::path(dir) / ("family" + std::to_string(k) + ".json");
        write_json(bicanon::bundle_to_json(bicanon::builtin_bundle(k)), path.string());
        std::cout << path.string() << '\n';
    }
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification of Enriques-surface automorphism constructions", "bicanon"};
    app.set_version_flag("--version", BICANON_VERSION);
    app.require_subcommand(1);

    std::string family = "all", check = "all", input, out;
    auto *verify = app.add_subcommand("verify", "run checks and print a pass/fail line per record");
    verify->add_option("--family", family, "restrict to one built-in family")
        ->check(CLI::IsMember({"1", "2", "3", "all"}));
    std::vector<std::string> categories = bicanon::check_categories();
    categories.push_back("all");
    verify->add_option("--check", check, "restrict to one check category")->check(CLI::IsMember(categories));
    verify->add_option("--input", input, "additional families and maps (JSON)");
    verify->add_option("--out", out, "write the certificate JSON here");

    auto *classify = app.add_subcommand("classify", "print admissible pairs and allowed orders with the pruning trace");

    std::string report_out, report_input;
    auto *report = app.add_subcommand("report", "write the full certificate");
    report->add_option("--out", report_out, "certificate path")->required();
    report->add_option("--input", report_input, "additional families and maps (JSON)");

    std::string export_dir;
    auto *exporter = app.add_subcommand("export", "write the built-in families as input fixtures");
    exporter->add_option("--out", export_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return run_classify();
        if (*exporter) return run_export(export_dir);

        bicanon::VerifyOptions opt;
        opt.timestamp = utc_now();
        if (*report) {
            if (!report_input.empty()) opt.input = bicanon::ingest_file(report_input);
            const auto cert = bicanon::verify_all(opt);
            write_json(cert.to_json(), report_out);
            std::cout << "certificate: " << report_out << " (" << (cert.pass() ? "pass" : "fail") << ")\n";
            return cert.pass() ? ok : failed;
        }
        opt.family = family == "all" ? 0 : std::stoi(family);
        opt.check = check;
        if (!input.empty()) opt.input = bicanon::ingest_file(input);
        const auto cert = bicanon::verify_all(opt);
        print_summary(cert);
        if (!out.empty()) write_json(cert.to_json(), out);
        return cert.pass() ? ok : failed;
    } catch (const bicanon::parse_error &e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const bicanon::schema_error &e) {
        std::cerr << "schema error: " << e.what() << '\n';
    } catch (const bicanon::invariant_error &e) {
        std::cerr << "invariant error: " << e.what() << '\n';
    } catch (const bicanon::error &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return bad_input;
}
