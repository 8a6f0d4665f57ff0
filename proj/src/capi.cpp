#include "schubound.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "schubound/bounds.hpp"
#include "schubound/characters.hpp"
#include "schubound/jsonio.hpp"
#include "schubound/verify.hpp"

using nlohmann::json;

struct sb_problem {
    schubound::SchubertProblem value;
    bool d_explicit = false;
};

struct sb_report {
    schubound::BoundReport value;
};

struct sb_class {
    schubound::ProductClass value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sb_status fill_string(const std::string& s, char** out) {
    if (!out) {
        set_error("output pointer is null");
        return SB_ERROR_BAD_INPUT;
    }
    *out = dup_string(s);
    if (!*out) {
        set_error("out of memory");
        return SB_ERROR_INTERNAL;
    }
    return SB_OK;
}

schubound::Partition partition_from(const int32_t* parts, size_t len) {
    std::vector<int> v;
    if (len > 0 && !parts) throw std::invalid_argument("parts pointer is null");
    for (size_t i = 0; i < len; ++i) v.push_back(parts[i]);
    return schubound::Partition(std::move(v));
}

// Resolves a deferred minimal d now that the partition data is complete.
schubound::SchubertProblem resolve(const sb_problem* p) {
    if (!p) throw std::invalid_argument("problem handle is null");
    if (p->d_explicit) return p->value;
    return schubound::make_problem(p->value.lambdas, p->value.nu, p->value.n, 0,
                                   p->value.c);
}

template <typename F>
sb_status guarded(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        std::string what = e.what();
        return what.rfind("invalid problem:", 0) == 0 ? SB_ERROR_INVALID_PROBLEM
                                                      : SB_ERROR_BAD_INPUT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SB_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return SB_ERROR_INTERNAL;
    }
}

sb_status to_i64(const mpz_class& v, int64_t* out) {
    if (!out) {
        set_error("output pointer is null");
        return SB_ERROR_BAD_INPUT;
    }
    if (!v.fits_slong_p()) {
        set_error("value " + v.get_str() + " does not fit in int64");
        return SB_ERROR_OVERFLOW;
    }
    *out = static_cast<int64_t>(v.get_si());
    return SB_OK;
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "1.0.0"; }

const char* sb_last_error(void) { return g_last_error.c_str(); }

void sb_string_free(char* s) { ::operator delete(s); }

sb_status sb_problem_create(int32_t n, int32_t d, int32_t c, sb_problem** out) {
    return guarded([&]() -> sb_status {
        if (!out) {
            set_error("output pointer is null");
            return SB_ERROR_BAD_INPUT;
        }
        if (n < 1) {
            set_error("n must be a positive integer");
            return SB_ERROR_BAD_INPUT;
        }
        if (c < 0) {
            set_error("c must be nonnegative");
            return SB_ERROR_BAD_INPUT;
        }
        auto* p = new sb_problem;
        p->value.n = n;
        p->value.d = d > 0 ? d : 0;
        p->value.c = c;
        p->d_explicit = d > 0;
        *out = p;
        return SB_OK;
    });
}

void sb_problem_free(sb_problem* p) { delete p; }

sb_status sb_problem_add_lambda(sb_problem* p, const int32_t* parts, size_t len,
                                int32_t repeat) {
    return guarded([&]() -> sb_status {
        if (!p) {
            set_error("problem handle is null");
            return SB_ERROR_BAD_INPUT;
        }
        if (repeat < 1) {
            set_error("repeat must be >= 1");
            return SB_ERROR_BAD_INPUT;
        }
        schubound::Partition la = partition_from(parts, len);
        for (int32_t i = 0; i < repeat; ++i) p->value.lambdas.push_back(la);
        return SB_OK;
    });
}

sb_status sb_problem_set_nu(sb_problem* p, const int32_t* parts, size_t len) {
    return guarded([&]() -> sb_status {
        if (!p) {
            set_error("problem handle is null");
            return SB_ERROR_BAD_INPUT;
        }
        p->value.nu = partition_from(parts, len);
        return SB_OK;
    });
}

sb_status sb_problem_parse_json(const char* text, sb_problem** out, int32_t* c_lo,
                                int32_t* c_hi) {
    return guarded([&]() -> sb_status {
        if (!text || !out) {
            set_error("null argument");
            return SB_ERROR_BAD_INPUT;
        }
        schubound::ProblemFileData data = schubound::problem_from_json(text);
        auto* p = new sb_problem;
        p->value = std::move(data.problem);
        p->d_explicit = true;  // problem_from_json resolved d already
        if (c_lo) *c_lo = data.c_lo;
        if (c_hi) *c_hi = data.c_hi;
        *out = p;
        return SB_OK;
    });
}

sb_status sb_problem_to_json(const sb_problem* p, char** out) {
    return guarded([&]() -> sb_status {
        return fill_string(schubound::problem_to_json(resolve(p)), out);
    });
}

sb_status sb_problem_validate(const sb_problem* p, char** violations_json) {
    return guarded([&]() -> sb_status {
        schubound::ValidationReport report = schubound::validate_problem(resolve(p));
        if (violations_json) {
            json arr = json::array();
            for (const std::string& v : report.violations) arr.push_back(v);
            sb_status st = fill_string(arr.dump(2), violations_json);
            if (st != SB_OK) return st;
        }
        if (!report.ok()) {
            std::string msg = "invalid problem:";
            for (const std::string& v : report.violations) msg += " " + v + ";";
            set_error(msg);
            return SB_ERROR_INVALID_PROBLEM;
        }
        return SB_OK;
    });
}

sb_status sb_bound_compute(const sb_problem* p, int verify, sb_report** out) {
    return guarded([&]() -> sb_status {
        if (!out) {
            set_error("output pointer is null");
            return SB_ERROR_BAD_INPUT;
        }
        auto* r = new sb_report{schubound::lower_bound_a(resolve(p), verify != 0)};
        *out = r;
        if (verify && r->value.routes_agree && !*r->value.routes_agree) {
            set_error("independent routes disagree: " + r->value.provenance.at("verify"));
            return SB_ERROR_CHECK_FAILED;
        }
        return SB_OK;
    });
}

void sb_report_free(sb_report* r) { delete r; }

sb_status sb_report_to_json(const sb_report* r, char** out) {
    return guarded([&]() -> sb_status {
        if (!r) {
            set_error("report handle is null");
            return SB_ERROR_BAD_INPUT;
        }
        return fill_string(schubound::report_to_json(r->value), out);
    });
}

sb_status sb_report_get_i64(const sb_report* r, const char* field, int64_t* out) {
    return guarded([&]() -> sb_status {
        if (!r || !field) {
            set_error("null argument");
            return SB_ERROR_BAD_INPUT;
        }
        std::string name = field;
        if (name == "a") return to_i64(r->value.a_signed, out);
        if (name == "lower_bound") return to_i64(r->value.lower_bound, out);
        if (name == "complex_count") return to_i64(r->value.complex_count, out);
        if (name == "white_bound") {
            if (!r->value.white_bound) {
                set_error("white_bound is not applicable to this problem");
                return SB_ERROR_BAD_INPUT;
            }
            return to_i64(*r->value.white_bound, out);
        }
        if (name == "hhs_bound") {
            if (!r->value.hhs_bound) {
                set_error("hhs_bound is not applicable to this problem");
                return SB_ERROR_BAD_INPUT;
            }
            return to_i64(*r->value.hhs_bound, out);
        }
        set_error("unknown report field '" + name + "'");
        return SB_ERROR_BAD_INPUT;
    });
}

sb_status sb_bound_table_json(const sb_problem* p, int32_t c_lo, int32_t c_hi,
                              char** out) {
    return guarded([&]() -> sb_status {
        schubound::SchubertProblem prob = resolve(p);
        std::vector<mpz_class> values = schubound::signature_table(prob, c_lo, c_hi);
        return fill_string(schubound::table_to_json(prob, c_lo, c_hi, values), out);
    });
}

sb_status sb_bound_poly_text(const sb_problem* p, char** out) {
    return guarded([&]() -> sb_status {
        return fill_string(
            schubound::to_canonical_string(schubound::bound_poly(resolve(p))), out);
    });
}

sb_status sb_class_create(sb_class** out) {
    return guarded([&]() -> sb_status {
        if (!out) {
            set_error("output pointer is null");
            return SB_ERROR_BAD_INPUT;
        }
        *out = new sb_class;
        return SB_OK;
    });
}

void sb_class_free(sb_class* cls) { delete cls; }

sb_status sb_class_add_factor(sb_class* cls, const int32_t* lambda_parts,
                              size_t lambda_len, int32_t k, const int32_t* cycles,
                              size_t cycles_len) {
    return guarded([&]() -> sb_status {
        if (!cls) {
            set_error("class handle is null");
            return SB_ERROR_BAD_INPUT;
        }
        std::vector<int> cyc;
        if (cycles_len > 0 && !cycles) {
            set_error("cycles pointer is null");
            return SB_ERROR_BAD_INPUT;
        }
        for (size_t i = 0; i < cycles_len; ++i) cyc.push_back(cycles[i]);
        schubound::CycleType sigma =
            cycles_len == 0 ? schubound::CycleType::identity(k)
                            : schubound::CycleType(std::move(cyc));
        cls->value.add_factor(partition_from(lambda_parts, lambda_len), k,
                              std::move(sigma));
        return SB_OK;
    });
}

sb_status sb_character_json(const sb_class* cls, const int32_t* mu_parts, size_t mu_len,
                            int32_t n, int verify, char** out) {
    return guarded([&]() -> sb_status {
        if (!cls) {
            set_error("class handle is null");
            return SB_ERROR_BAD_INPUT;
        }
        schubound::Partition mu = partition_from(mu_parts, mu_len);
        bool weight_mismatch = false;
        mpz_class value = schubound::character_value(cls->value, mu, n, &weight_mismatch);
        json mu_arr = json::array();
        for (int v : mu.parts()) mu_arr.push_back(v);
        json j{{"value", value.get_str()},
               {"mu", mu_arr},
               {"n", n},
               {"weight_mismatch", weight_mismatch}};

        bool agree = true;
        if (verify) {
            mpz_class direct = schubound::character_value_direct(cls->value, mu, n);
            mpz_class expansion =
                schubound::character_value_via_expansion(cls->value, mu, n);
            agree = (direct == value) && (expansion == value);
            j["routes"] = json{{"antisymmetrized", value.get_str()},
                               {"direct", direct.get_str()},
                               {"schur_expansion", expansion.get_str()}};
            j["routes_agree"] = agree;
        }
        sb_status st = fill_string(j.dump(2), out);
        if (st != SB_OK) return st;
        if (!agree) {
            set_error("character routes disagree");
            return SB_ERROR_CHECK_FAILED;
        }
        return SB_OK;
    });
}

sb_status sb_white_bound(int32_t m, int32_t p, int64_t* out) {
    return guarded([&]() -> sb_status { return to_i64(schubound::white_bound(m, p), out); });
}

sb_status sb_hhs_count_r(int32_t k, int32_t n, int32_t s, int64_t* out) {
    return guarded([&]() -> sb_status { return to_i64(schubound::hhs_count_r(k, n, s), out); });
}

sb_status sb_hhs_bound(int32_t k, int32_t n, int32_t c, int64_t* out) {
    return guarded(
        [&]() -> sb_status { return to_i64(schubound::hhs_bound_for_c(k, n, c), out); });
}

sb_status sb_verify(const char* suite, const char* options_json, char** summary_json) {
    return guarded([&]() -> sb_status {
        if (!suite) {
            set_error("suite name is null");
            return SB_ERROR_BAD_INPUT;
        }
        int k = 6;
        int instances = 200;
        int duality_instances = 100;
        unsigned seed = 20260809;
        if (options_json && *options_json) {
            json opts = json::parse(options_json, nullptr, false);
            if (opts.is_discarded() || !opts.is_object()) {
                set_error("options must be a JSON object");
                return SB_ERROR_BAD_INPUT;
            }
            for (const auto& [key, val] : opts.items()) {
                if (key == "k" && val.is_number_integer())
                    k = val.get<int>();
                else if (key == "instances" && val.is_number_integer())
                    instances = duality_instances = val.get<int>();
                else if (key == "seed" && val.is_number_integer())
                    seed = static_cast<unsigned>(val.get<long long>());
                else {
                    set_error("unknown or ill-typed option '" + key + "'");
                    return SB_ERROR_BAD_INPUT;
                }
            }
        }
        if (k < 1 || instances < 1) {
            set_error("options must be positive");
            return SB_ERROR_BAD_INPUT;
        }

        std::string name = suite;
        std::vector<schubound::VerifySummary> summaries;
        if (name == "paper-tables")
            summaries.push_back(schubound::verify_paper_tables());
        else if (name == "frobenius")
            summaries.push_back(schubound::verify_frobenius(k));
        else if (name == "oracles")
            summaries.push_back(schubound::verify_oracles(instances, seed));
        else if (name == "dualities")
            summaries.push_back(schubound::verify_dualities(duality_instances, seed));
        else if (name == "counterexample")
            summaries.push_back(schubound::verify_counterexample());
        else if (name == "all")
            summaries = schubound::verify_all();
        else {
            set_error("unknown suite '" + name + "'");
            return SB_ERROR_BAD_INPUT;
        }

        bool all_ok = true;
        json out = json::array();
        for (const schubound::VerifySummary& s : summaries) {
            json checks = json::array();
            for (const schubound::VerifyCheck& c : s.checks) {
                checks.push_back(
                    {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                all_ok = all_ok && c.passed;
            }
            out.push_back({{"suite", s.suite}, {"checks", checks}});
        }
        if (summary_json) {
            sb_status st = fill_string(out.dump(2), summary_json);
            if (st != SB_OK) return st;
        }
        if (!all_ok) {
            set_error("one or more verification checks failed");
            return SB_ERROR_CHECK_FAILED;
        }
        return SB_OK;
    });
}

}  // extern "C"
