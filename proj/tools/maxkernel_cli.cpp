/*
   Copyright 2026 the maxkernel authors

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

// Command-line front end over the maxkernel C API.
//
// Exit codes: 0 all checks pass / output produced, 1 mathematical
// counterexample found, 2 usage or configuration error, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxkernel.h"

namespace {

struct Options {
    std::uint64_t p = 2;
    unsigned h = 1;
    unsigned n = 7;
    unsigned s = 1;
    unsigned d = 3;
    std::string format = "json";
    std::uint64_t budget = 1ull << 26;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->set_help_flag("--help", "print help");  // frees -h / --h for q = p^h
    cmd->add_option("--p", o.p, "characteristic p (prime)");
    cmd->add_option("--h", o.h, "q = p^h");
    cmd->add_option("--n", o.n, "extension degree over F_q");
    cmd->add_option("--s", o.s, "sigma = x -> x^{q^s}, gcd(s, n) = 1");
    cmd->add_option("--d", o.d, "sigma-degree d of the trinomial");
    cmd->add_option("--format", o.format, "output format: json, csv or text");
    cmd->add_option("--budget", o.budget, "max kernel computations for scans");
    cmd->add_option("--seed", o.seed, "seed for sampled suites");
    cmd->add_option("--workers", o.workers, "worker threads (never changes output bytes)");
    cmd->add_option("--out", o.out, "write the payload to this file instead of stdout");
}

class FieldHandle {
public:
    FieldHandle() = default;
    ~FieldHandle() { mk_field_free(f_); }
    FieldHandle(const FieldHandle&) = delete;
    FieldHandle& operator=(const FieldHandle&) = delete;
    mk_status create(const Options& o) { return mk_field_create(o.p, o.h, o.n, o.s, &f_); }
    mk_field* get() const { return f_; }

private:
    mk_field* f_ = nullptr;
};

class CString {
public:
    ~CString() { mk_string_free(s_); }
    char** slot() { return &s_; }
    const char* get() const { return s_; }
    std::string str() const { return s_ ? std::string(s_) : std::string(); }

private:
    char* s_ = nullptr;
};

int status_to_exit(mk_status st) {
    switch (st) {
        case MK_OK: return 0;
        case MK_ERR_BUDGET_EXCEEDED: return 3;
        default: return 2;
    }
}

int report_error(mk_status st) {
    std::cerr << "error: " << mk_status_name(st) << ": " << mk_last_error() << "\n";
    return status_to_exit(st);
}

void emit(const Options& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << payload;
    }
}

// JSON payloads carry wall time and worker count under "runtime"; consumers
// comparing runs byte-for-byte drop that one object.
std::string with_timing(const std::string& json_text, double ms, const Options& o) {
    auto j = nlohmann::json::parse(json_text);
    if (!j.contains("runtime")) j["runtime"] = nlohmann::json::object();
    j["runtime"]["timing_ms"] = ms;
    j["runtime"]["workers"] = o.workers;
    j["config"] = {{"budget", o.budget}, {"seed", o.seed}, {"format", o.format}};
    return j.dump(2);
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run_field_info(const Options& o) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    CString json;
    if (auto st = mk_field_to_json(f.get(), json.slot()); st != MK_OK) return report_error(st);
    if (o.format == "json") {
        emit(o, nlohmann::json::parse(json.str()).dump(2));
    } else if (o.format == "text") {
        auto j = nlohmann::json::parse(json.str());
        std::string mod;
        for (const auto& c : j["modulus"]) mod += c.dump() + " ";
        emit(o, "p=" + j["p"].dump() + " h=" + j["h"].dump() + " n=" + j["n"].dump() +
                    " s=" + j["s"].dump() + " m=" + j["m"].dump() + " order=" +
                    j["order"].get<std::string>() + "\nmodulus (constant first): " + mod);
    } else {
        std::cerr << "error: field-info supports json or text\n";
        return 2;
    }
    return 0;
}

int run_verify(const Options& o, const std::string& target) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    auto start = std::chrono::steady_clock::now();
    int pass = 0;
    CString report;
    std::string fmt = o.format == "text" ? "text" : "json";
    if (o.format != "json" && o.format != "text") {
        std::cerr << "error: verify supports json or text\n";
        return 2;
    }
    auto st = mk_verify(f.get(), target.c_str(), o.d, o.budget, o.seed, o.workers, fmt.c_str(),
                        &pass, report.slot());
    if (st != MK_OK) return report_error(st);
    emit(o, fmt == "json" ? with_timing(report.str(), ms_since(start), o) : report.str());
    return pass ? 0 : 1;
}

int run_enumerate(const Options& o) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    auto start = std::chrono::steady_clock::now();
    CString json;
    auto st = mk_enumerate(f.get(), o.d, o.budget, o.workers, json.slot());
    if (st != MK_OK) return report_error(st);
    if (o.format == "json") {
        emit(o, with_timing(json.str(), ms_since(start), o));
    } else if (o.format == "csv") {
        auto j = nlohmann::json::parse(json.str());
        std::string csv = "a,b\n";
        for (const auto& rec : j["instances"])
            csv += rec["a"].get<std::string>() + "," + rec["b"].get<std::string>() + "\n";
        emit(o, csv);
    } else if (o.format == "text") {
        auto j = nlohmann::json::parse(json.str());
        std::string text = "maximum-kernel pairs: " + j["count"].dump() + "\n";
        for (const auto& rec : j["instances"])
            text += "  a=" + rec["a"].get<std::string>() + " b=" + rec["b"].get<std::string>() + "\n";
        emit(o, text);
    } else {
        std::cerr << "error: unknown format '" << o.format << "'\n";
        return 2;
    }
    return 0;
}

int run_census(const Options& o) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    auto start = std::chrono::steady_clock::now();
    CString json, csv;
    auto st = mk_census(f.get(), o.d, o.budget, o.workers, json.slot(), csv.slot());
    if (st != MK_OK) return report_error(st);
    if (o.format == "json") {
        emit(o, with_timing(json.str(), ms_since(start), o));
    } else if (o.format == "csv") {
        emit(o, csv.str());
    } else if (o.format == "text") {
        auto j = nlohmann::json::parse(json.str());
        std::string text = "weight census, d=" + j["d"].dump() + " n=" + j["n"].dump() + "\n";
        for (const auto& [w, c] : j["counts"].items())
            text += "  weight " + w + ": " + c.get<std::string>() + "\n";
        text += "minimum-weight count: " + j["D_observed"].get<std::string>() + "\n";
        emit(o, text);
    } else {
        std::cerr << "error: unknown format '" << o.format << "'\n";
        return 2;
    }
    return 0;
}

int run_build_code(const Options& o, const std::string& a_hex, const std::string& b_hex,
                   bool certify) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    auto start = std::chrono::steady_clock::now();
    CString json;
    auto st = mk_build_code(f.get(), o.d, a_hex.empty() ? nullptr : a_hex.c_str(),
                            b_hex.empty() ? nullptr : b_hex.c_str(), certify ? 1 : 0, o.budget,
                            o.workers, json.slot());
    if (st != MK_OK) return report_error(st);
    if (o.format == "json") {
        emit(o, with_timing(json.str(), ms_since(start), o));
    } else if (o.format == "text") {
        auto j = nlohmann::json::parse(json.str());
        std::string text = "orbit code: size " + j["size"].get<std::string>() + ", t=" +
                           j["t"].dump() + ", k=" + j["k"].dump();
        if (!j["min_distance"].is_null())
            text += ", min distance " + j["min_distance"].dump() +
                    (j["certified"].get<bool>() ? " (certified)" : "");
        emit(o, text + "\n");
    } else {
        std::cerr << "error: build-code supports json or text\n";
        return 2;
    }
    return 0;
}

int run_quasi(const Options& o, const std::string& a_hex, const std::string& b_hex) {
    FieldHandle f;
    if (auto st = f.create(o); st != MK_OK) return report_error(st);
    CString json;
    auto st = mk_quasi(f.get(), o.d, a_hex.c_str(), b_hex.empty() ? nullptr : b_hex.c_str(),
                       json.slot());
    if (st != MK_OK) return report_error(st);
    if (o.format == "json") {
        emit(o, nlohmann::json::parse(json.str()).dump(2));
    } else if (o.format == "text") {
        auto j = nlohmann::json::parse(json.str());
        emit(o, std::string("quasi-subfield: ") + (j["quasi_subfield"].get<bool>() ? "yes" : "no") +
                    " (splits: " + (j["splits"].get<bool>() ? "yes" : "no") + ", degree clause: " +
                    (j["degree_ok"].get<bool>() ? "yes" : "no") + ")\n");
    } else {
        std::cerr << "error: quasi supports json or text\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxkernel: sigma-linearized polynomials with maximum kernel - verification, "
                 "censuses and subspace codes over finite field towers"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    Options opt;

    auto* info = app.add_subcommand("field-info", "print the field record (modulus, order)");
    add_common(info, opt);

    auto* verify = app.add_subcommand("verify", "run a verification target over the field");
    std::string target;
    verify->add_option("target", target, "one of: gow companion main-system mcg-abc even-family d3 d4 neccond pascal prop33 cor34")
        ->required();
    add_common(verify, opt);

    auto* enumerate = app.add_subcommand("enumerate", "list all maximum-kernel pairs (a, b)");
    add_common(enumerate, opt);

    auto* census = app.add_subcommand("census", "weight distribution of the 3-term span code");
    add_common(census, opt);

    auto* build = app.add_subcommand("build-code", "orbit code from a maximum-kernel trinomial");
    std::string a_hex, b_hex;
    bool certify = false;
    build->add_option("--a", a_hex, "hex of the constant coefficient a");
    build->add_option("--b", b_hex, "hex of the sigma coefficient b");
    build->add_flag("--certify", certify, "certify the minimum distance exhaustively");
    add_common(build, opt);

    auto* quasi = app.add_subcommand("quasi", "quasi-subfield clause flags for x^{q^d}-bx^q-ax");
    std::string qa_hex, qb_hex;
    quasi->add_option("--a", qa_hex, "hex of a (required)")->required();
    quasi->add_option("--b", qb_hex, "hex of b (default: the even-family value for a)");
    add_common(quasi, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (info->parsed()) return run_field_info(opt);
    if (verify->parsed()) return run_verify(opt, target);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (census->parsed()) return run_census(opt);
    if (build->parsed()) return run_build_code(opt, a_hex, b_hex, certify);
    if (quasi->parsed()) return run_quasi(opt, qa_hex, qb_hex);
    return 2;
}
