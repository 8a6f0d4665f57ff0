// Command-line front end for the schubound shared library. Everything goes
// through the C API in schubound.h; this file only parses flags and renders
// the JSON the library returns.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "schubound.h"

using nlohmann::json;

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(sb_status st) {
    switch (st) {
        case SB_OK:
            return 0;
        case SB_ERROR_BAD_INPUT:
        case SB_ERROR_INVALID_PROBLEM:
            return 2;
        case SB_ERROR_CHECK_FAILED:
            return 1;
        default:
            return 1;
    }
}

void require_ok(sb_status st) {
    if (st != SB_OK) throw CliError{exit_code_for(st), sb_last_error()};
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    sb_string_free(s);
    return out;
}

std::vector<int32_t> parse_parts(const std::string& text) {
    std::vector<int32_t> parts;
    if (text.empty()) return parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw CliError{2, "bad partition part '" + tok + "' in '" + text + "'"};
        }
    }
    return parts;
}

// "2,1:x3" -> parts (2,1) repeated 3 times.
std::pair<std::vector<int32_t>, int> parse_lambda_spec(const std::string& spec) {
    std::string parts_text = spec;
    int count = 1;
    std::size_t pos = spec.rfind(":x");
    if (pos != std::string::npos) {
        parts_text = spec.substr(0, pos);
        std::string count_text = spec.substr(pos + 2);
        try {
            std::size_t used = 0;
            count = std::stoi(count_text, &used);
            if (used != count_text.size() || count < 1) throw std::invalid_argument(count_text);
        } catch (const std::exception&) {
            throw CliError{2, "bad repeat count in lambda spec '" + spec + "'"};
        }
    }
    return {parse_parts(parts_text), count};
}

std::pair<int, int> parse_c_range(const std::string& text) {
    std::size_t pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            int c = std::stoi(text);
            return {c, c};
        }
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 2));
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw CliError{2, "bad c value '" + text + "' (expected N or LO..HI)"};
    }
}

std::string partition_text(const json& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i].get<int>());
    }
    return s + ")";
}

std::string problem_text(const json& problem) {
    std::string s = "lambda=";
    const json& lambdas = problem["lambdas"];
    if (lambdas.empty()) s += "(none)";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i) s += " ";
        s += partition_text(lambdas[i]["parts"]);
        int count = lambdas[i]["count"].get<int>();
        if (count > 1) s += "x" + std::to_string(count);
    }
    s += "; nu=" + partition_text(problem["nu"]);
    s += "; n=" + std::to_string(problem["n"].get<int>());
    s += "; d=" + std::to_string(problem["d"].get<int>());
    return s;
}

void print_single_report(const std::string& report_json, const std::string& format) {
    if (format == "json") {
        std::cout << report_json << "\n";
        return;
    }
    json r = json::parse(report_json);
    if (format == "csv") {
        int c = r["problem"]["c"].get<int>();
        std::cout << "problem,c=" << c << "\n";
        std::cout << "\"" << problem_text(r["problem"]) << "\"," << r["a"].get<std::string>()
                  << "\n";
        return;
    }
    std::cout << "problem: " << problem_text(r["problem"])
              << "; c=" << r["problem"]["c"].get<int>() << "\n";
    std::cout << "mu: " << partition_text(r["mu"]) << "\n";
    std::cout << "a: " << r["a"].get<std::string>() << "\n";
    std::cout << "lower_bound: " << r["lower_bound"].get<std::string>() << "\n";
    std::cout << "complex_count: " << r["complex_count"].get<std::string>() << "\n";
    if (r.contains("white_bound"))
        std::cout << "white_bound: " << r["white_bound"].get<std::string>() << "\n";
    if (r.contains("hhs_bound"))
        std::cout << "hhs_bound: " << r["hhs_bound"].get<std::string>() << "\n";
    if (r.contains("routes_agree"))
        std::cout << "routes_agree: " << (r["routes_agree"].get<bool>() ? "yes" : "no")
                  << "\n";
    std::cout << "provenance:\n";
    for (const auto& [key, value] : r["provenance"].items())
        std::cout << "  " << key << ": " << value.get<std::string>() << "\n";
}

void print_table(const std::string& table_json, const std::string& format) {
    if (format == "json") {
        std::cout << table_json << "\n";
        return;
    }
    json t = json::parse(table_json);
    int c_lo = t["c_range"][0].get<int>();
    const json& a = t["a"];
    const json& bound = t["lower_bound"];
    if (format == "csv") {
        // One row per problem, one column per c; entries are the bounds |a|.
        std::cout << "problem";
        for (std::size_t i = 0; i < bound.size(); ++i)
            std::cout << ",c=" << (c_lo + static_cast<int>(i));
        std::cout << "\n\"" << problem_text(t["problem"]) << "\"";
        for (const auto& v : bound) std::cout << "," << v.get<std::string>();
        std::cout << "\n";
        return;
    }
    std::cout << "problem: " << problem_text(t["problem"]) << "\n";
    std::size_t width = 1;
    for (const auto& v : a) width = std::max(width, v.get<std::string>().size());
    width += 2;
    auto cell = [width](const std::string& s) {
        std::string pad(width > s.size() ? width - s.size() : 1, ' ');
        return pad + s;
    };
    std::cout << "c:     ";
    for (std::size_t i = 0; i < a.size(); ++i)
        std::cout << cell(std::to_string(c_lo + static_cast<int>(i)));
    std::cout << "\na:     ";
    for (const auto& v : a) std::cout << cell(v.get<std::string>());
    std::cout << "\nbound: ";
    for (const auto& v : bound) std::cout << cell(v.get<std::string>());
    std::cout << "\n";
}

struct ProblemHandle {
    sb_problem* p = nullptr;
    ~ProblemHandle() { sb_problem_free(p); }
};

struct ClassHandle {
    sb_class* cls = nullptr;
    ~ClassHandle() { sb_class_free(cls); }
};

// Problem handles are write-once; to change c, round-trip through JSON.
void rebuild_with_c(ProblemHandle& h, int c) {
    char* pj = nullptr;
    require_ok(sb_problem_to_json(h.p, &pj));
    json obj = json::parse(take_string(pj));
    obj["c"] = c;
    ProblemHandle next;
    int32_t lo = 0, hi = 0;
    require_ok(sb_problem_parse_json(obj.dump().c_str(), &next.p, &lo, &hi));
    std::swap(h.p, next.p);
}

int run_bound(const std::string& file, int n, int d, const std::vector<std::string>& lambdas,
              const std::string& nu, const std::string& c_text, bool table,
              const std::string& format, bool verify, bool dump_poly) {
    ProblemHandle h;
    int c_lo = 0, c_hi = 0;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw CliError{2, "cannot open problem file '" + file + "'"};
        std::stringstream buf;
        buf << in.rdbuf();
        int32_t lo = 0, hi = 0;
        require_ok(sb_problem_parse_json(buf.str().c_str(), &h.p, &lo, &hi));
        c_lo = lo;
        c_hi = hi;
    } else {
        if (n < 1) throw CliError{2, "--n is required (or use --file)"};
        require_ok(sb_problem_create(n, d, 0, &h.p));
        for (const std::string& spec : lambdas) {
            auto [parts, count] = parse_lambda_spec(spec);
            require_ok(sb_problem_add_lambda(h.p, parts.data(), parts.size(), count));
        }
        std::vector<int32_t> nu_parts = parse_parts(nu);
        require_ok(sb_problem_set_nu(h.p, nu_parts.data(), nu_parts.size()));
    }
    if (!c_text.empty()) std::tie(c_lo, c_hi) = parse_c_range(c_text);

    if (dump_poly) {
        if (c_lo != c_hi) throw CliError{2, "--dump-poly requires a single c"};
        rebuild_with_c(h, c_lo);
        char* poly = nullptr;
        require_ok(sb_bound_poly_text(h.p, &poly));
        std::cout << take_string(poly) << "\n";
        return 0;
    }

    if (table || c_lo != c_hi) {
        char* out = nullptr;
        require_ok(sb_bound_table_json(h.p, c_lo, c_hi, &out));
        print_table(take_string(out), format);
        return 0;
    }

    rebuild_with_c(h, c_lo);
    sb_report* raw = nullptr;
    sb_status st = sb_bound_compute(h.p, verify ? 1 : 0, &raw);
    if (st != SB_OK && raw == nullptr) throw CliError{exit_code_for(st), sb_last_error()};
    char* rj = nullptr;
    sb_status st2 = sb_report_to_json(raw, &rj);
    sb_report_free(raw);
    require_ok(st2);
    print_single_report(take_string(rj), format);
    if (st != SB_OK) {
        std::cerr << "schubound: " << sb_last_error() << "\n";
        return exit_code_for(st);
    }
    return 0;
}

int run_character(const std::vector<std::string>& factors, const std::string& mu,
                  int n, const std::string& format, bool verify) {
    ClassHandle h;
    require_ok(sb_class_create(&h.cls));
    for (const std::string& spec : factors) {
        // LAMBDA:xK[:CYCLES], e.g. "2,1:x3:2,1" = (2,1) repeated 3x, class (2,1).
        std::size_t xpos = spec.find(":x");
        if (xpos == std::string::npos)
            throw CliError{2, "factor spec '" + spec + "' must look like LAMBDA:xK[:CYCLES]"};
        std::vector<int32_t> lambda = parse_parts(spec.substr(0, xpos));
        std::string rest = spec.substr(xpos + 2);
        std::string k_text = rest;
        std::string cycles_text;
        std::size_t colon = rest.find(':');
        if (colon != std::string::npos) {
            k_text = rest.substr(0, colon);
            cycles_text = rest.substr(colon + 1);
        }
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(k_text, &used);
            if (used != k_text.size() || k < 1) throw std::invalid_argument(k_text);
        } catch (const std::exception&) {
            throw CliError{2, "bad multiplicity in factor spec '" + spec + "'"};
        }
        std::vector<int32_t> cycles = parse_parts(cycles_text);
        require_ok(sb_class_add_factor(h.cls, lambda.data(), lambda.size(), k,
                                       cycles.data(), cycles.size()));
    }

    std::vector<int32_t> mu_parts = parse_parts(mu);
    char* out = nullptr;
    sb_status st =
        sb_character_json(h.cls, mu_parts.data(), mu_parts.size(), n, verify ? 1 : 0, &out);
    if (st != SB_OK && out == nullptr) throw CliError{exit_code_for(st), sb_last_error()};
    std::string text = take_string(out);
    if (format == "json") {
        std::cout << text << "\n";
    } else {
        json r = json::parse(text);
        std::cout << "character: " << r["value"].get<std::string>() << "\n";
        if (r["weight_mismatch"].get<bool>())
            std::cout << "note: weight condition fails, multiplicity space is trivial\n";
        if (r.contains("routes")) {
            for (const auto& [name, value] : r["routes"].items())
                std::cout << "  route " << name << ": " << value.get<std::string>() << "\n";
            std::cout << "routes_agree: " << (r["routes_agree"].get<bool>() ? "yes" : "no")
                      << "\n";
        }
    }
    if (st != SB_OK) {
        std::cerr << "schubound: " << sb_last_error() << "\n";
        return exit_code_for(st);
    }
    return 0;
}

int run_verify(const std::string& suite, int k, int instances, long seed) {
    json opts;
    opts["k"] = k;
    opts["instances"] = instances;
    opts["seed"] = seed;
    char* out = nullptr;
    sb_status st = sb_verify(suite.c_str(), opts.dump().c_str(), &out);
    if (st != SB_OK && out == nullptr) throw CliError{exit_code_for(st), sb_last_error()};
    json summary = json::parse(take_string(out));
    int total = 0, passed = 0;
    for (const auto& s : summary) {
        std::cout << "suite " << s["suite"].get<std::string>() << ":\n";
        for (const auto& check : s["checks"]) {
            bool ok = check["passed"].get<bool>();
            ++total;
            passed += ok ? 1 : 0;
            std::cout << "  [" << (ok ? " ok " : "FAIL") << "] "
                      << check["name"].get<std::string>();
            std::string detail = check["detail"].get<std::string>();
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << passed << "/" << total << " checks passed\n";
    return exit_code_for(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lower bounds for real solutions of osculating Schubert problems"};
    app.set_version_flag("--version", std::string(sb_version()));
    app.require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "Compute a bound report for one problem");
    std::string file, nu, c_text, format = "text";
    int n = 0, d = 0;
    std::vector<std::string> lambdas;
    bool table = false, verify = false, dump_poly = false;
    bound->add_option("--file", file, "Problem file (JSON)");
    bound->add_option("--n", n, "Plane dimension n");
    bound->add_option("--d", d, "Ambient degree bound d (default: minimal admissible)");
    bound->add_option("--lambda", lambdas, "Ramification partition, e.g. 2,1 or 1:x9");
    bound->add_option("--nu", nu, "Partition paired with infinity (default empty)");
    bound->add_option("--c", c_text, "Conjugate pairs: N or LO..HI (default 0)");
    bound->add_flag("--table", table, "Emit one column per c");
    bound->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    bound->add_flag("--verify", verify, "Cross-check along independent routes");
    bound->add_flag("--dump-poly", dump_poly, "Print the bound polynomial and exit");

    auto* character = app.add_subcommand("character", "Evaluate a multiplicity-space character");
    std::vector<std::string> factors;
    std::string mu, char_format = "text";
    int char_n = 0;
    bool char_verify = false;
    character->add_option("--factor", factors, "Factor spec LAMBDA:xK[:CYCLES]")->required();
    character->add_option("--mu", mu, "Highest weight mu")->required();
    character->add_option("--n", char_n, "Number of variables n")->required();
    character->add_option("--format", char_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    character->add_flag("--verify", char_verify, "Evaluate all three routes and compare");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int vk = 6, instances = 200;
    long seed = 20260809;
    verify_cmd->add_option("suite", suite,
                           "paper-tables, frobenius, oracles, dualities, counterexample, all")
        ->required();
    verify_cmd->add_option("--k", vk, "Largest symmetric group degree (frobenius)");
    verify_cmd->add_option("--instances", instances, "Randomized instance count");
    verify_cmd->add_option("--seed", seed, "Randomized suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (bound->parsed())
            return run_bound(file, n, d, lambdas, nu, c_text, table, format, verify, dump_poly);
        if (character->parsed())
            return run_character(factors, mu, char_n, char_format, char_verify);
        if (verify_cmd->parsed()) return run_verify(suite, vk, instances, seed);
    } catch (const CliError& e) {
        std::cerr << "schubound: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "schubound: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
