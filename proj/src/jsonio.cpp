#include "schubound/jsonio.hpp"

#include <json.hpp>
#include <limits>
#include <stdexcept>

namespace schubound {

using nlohmann::json;

namespace {

int int_from_json(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw std::invalid_argument("'" + what + "' must be an integer");
    long long raw = v.get<long long>();
    if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max())
        throw std::invalid_argument("'" + what + "' is out of range");
    return static_cast<int>(raw);
}

Partition partition_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be an array of parts");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(int_from_json(v, what + " part"));
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known) throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

json problem_json_object(const SchubertProblem& p) {
    json lambdas = json::array();
    std::size_t i = 0;
    while (i < p.lambdas.size()) {
        std::size_t j = i;
        while (j < p.lambdas.size() && p.lambdas[j] == p.lambdas[i]) ++j;
        lambdas.push_back({{"parts", partition_json(p.lambdas[i])},
                           {"count", static_cast<int>(j - i)}});
        i = j;
    }
    return json{{"n", p.n},
                {"d", p.d},
                {"lambdas", lambdas},
                {"nu", partition_json(p.nu)},
                {"c", p.c}};
}

}  // namespace

ProblemFileData problem_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("problem file must be a JSON object");
    reject_unknown_keys(doc, {"n", "d", "lambdas", "nu", "c"}, "problem file");

    for (const char* required : {"n", "lambdas", "nu", "c"})
        if (!doc.contains(required))
            throw std::invalid_argument(std::string("problem file is missing '") + required + "'");

    int n = int_from_json(doc["n"], "n");
    int d = 0;
    if (doc.contains("d")) d = int_from_json(doc["d"], "d");

    std::vector<Partition> lambdas;
    if (!doc["lambdas"].is_array()) throw std::invalid_argument("'lambdas' must be an array");
    for (const auto& entry : doc["lambdas"]) {
        Partition parts;
        int count = 1;
        if (entry.is_array()) {
            parts = partition_from_json(entry, "lambda");
        } else if (entry.is_object()) {
            reject_unknown_keys(entry, {"parts", "count"}, "lambda entry");
            if (!entry.contains("parts"))
                throw std::invalid_argument("lambda entry is missing 'parts'");
            parts = partition_from_json(entry["parts"], "lambda");
            if (entry.contains("count")) {
                count = int_from_json(entry["count"], "count");
                if (count < 1)
                    throw std::invalid_argument("lambda 'count' must be a positive integer");
            }
        } else {
            throw std::invalid_argument("lambda entries must be arrays or {parts, count} objects");
        }
        for (int r = 0; r < count; ++r) lambdas.push_back(parts);
    }

    Partition nu = partition_from_json(doc["nu"], "nu");

    int c_lo = 0, c_hi = 0;
    const json& c = doc["c"];
    if (c.is_number_integer()) {
        c_lo = c_hi = int_from_json(c, "c");
    } else if (c.is_array() && c.size() == 2) {
        c_lo = int_from_json(c[0], "c");
        c_hi = int_from_json(c[1], "c");
        if (c_lo > c_hi) throw std::invalid_argument("'c' range must have lo <= hi");
    } else {
        throw std::invalid_argument("'c' must be an integer or a [lo, hi] pair");
    }
    if (c_lo < 0) throw std::invalid_argument("'c' must be nonnegative");

    ProblemFileData out;
    out.problem = make_problem(std::move(lambdas), std::move(nu), n, d, c_lo);
    out.c_lo = c_lo;
    out.c_hi = c_hi;
    return out;
}

std::string problem_to_json(const SchubertProblem& p) {
    return problem_json_object(p).dump(2);
}

std::string report_to_json(const BoundReport& report) {
    json j{{"problem", problem_json_object(report.problem)},
           {"mu", partition_json(report.mu)},
           {"a", report.a_signed.get_str()},
           {"lower_bound", report.lower_bound.get_str()},
           {"complex_count", report.complex_count.get_str()},
           {"provenance", report.provenance}};
    if (report.white_bound) j["white_bound"] = report.white_bound->get_str();
    if (report.hhs_bound) j["hhs_bound"] = report.hhs_bound->get_str();
    if (report.routes_agree) j["routes_agree"] = *report.routes_agree;
    return j.dump(2);
}

std::string table_to_json(const SchubertProblem& p, int c_lo, int c_hi,
                          const std::vector<mpz_class>& values) {
    json a = json::array();
    json lower = json::array();
    for (const mpz_class& v : values) {
        a.push_back(v.get_str());
        lower.push_back(mpz_class(abs(v)).get_str());
    }
    json j{{"problem", problem_json_object(p)},
           {"c_range", json::array({c_lo, c_hi})},
           {"a", a},
           {"lower_bound", lower}};
    return j.dump(2);
}

}  // namespace schubound
