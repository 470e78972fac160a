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

#include "maxkernel.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "codes.hpp"
#include "field.hpp"
#include "linpoly.hpp"
#include "serialize.hpp"
#include "trinomial.hpp"
#include "verify.hpp"

struct mk_field {
    std::unique_ptr<mk::Field> impl;
};

struct mk_poly {
    mk::SigmaPoly impl;
};

namespace {

thread_local std::string g_last_error;

mk_status map_err(mk::Err e) {
    using mk::Err;
    switch (e) {
        case Err::NonPrimeP: return MK_ERR_NONPRIME_P;
        case Err::GcdViolation: return MK_ERR_GCD_VIOLATION;
        case Err::FieldTooLarge: return MK_ERR_FIELD_TOO_LARGE;
        case Err::DivisionByZero: return MK_ERR_DIVISION_BY_ZERO;
        case Err::NonDivisor: return MK_ERR_NON_DIVISOR;
        case Err::ZeroPolynomial: return MK_ERR_ZERO_POLYNOMIAL;
        case Err::NotMonicNegated: return MK_ERR_NOT_MONIC_NEGATED;
        case Err::IndexOutOfRange: return MK_ERR_INDEX_OUT_OF_RANGE;
        case Err::HypothesisViolated: return MK_ERR_HYPOTHESIS_VIOLATED;
        case Err::RangeError: return MK_ERR_RANGE;
        case Err::PreconditionFailed: return MK_ERR_PRECONDITION_FAILED;
        case Err::BudgetExceeded: return MK_ERR_BUDGET_EXCEEDED;
        case Err::NotSubspace: return MK_ERR_NOT_SUBSPACE;
        case Err::SigmaMismatch: return MK_ERR_SIGMA_MISMATCH;
        case Err::MalformedShape: return MK_ERR_MALFORMED_SHAPE;
        case Err::NoRoot: return MK_ERR_NO_ROOT;
        case Err::UnknownTarget: return MK_ERR_UNKNOWN_TARGET;
        case Err::BadArgument: return MK_ERR_BAD_ARGUMENT;
        case Err::Internal: return MK_ERR_INTERNAL;
    }
    return MK_ERR_INTERNAL;
}

template <typename Fn>
mk_status guarded(Fn&& fn) {
    try {
        fn();
        return MK_OK;
    } catch (const mk::Error& e) {
        g_last_error = e.what();
        return map_err(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MK_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MK_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const mk::Field& deref(const mk_field* f) {
    if (!f || !f->impl) mk::fail(mk::Err::BadArgument, "null field handle");
    return *f->impl;
}

mk::Element parse_hex(const mk::Field& f, const char* hex, const char* what) {
    if (!hex) mk::fail(mk::Err::BadArgument, std::string("null ") + what);
    return mk::io::element_from_hex(f, hex);
}

mk::TrinomialInstance default_or_given(const mk::Field& f, uint32_t d, const char* a_hex,
                                       const char* b_hex, uint64_t budget, uint32_t workers) {
    if (a_hex && b_hex)
        return mk::TrinomialInstance{(int)d, parse_hex(f, a_hex, "a"), parse_hex(f, b_hex, "b")};
    if (a_hex || b_hex)
        mk::fail(mk::Err::BadArgument, "provide both of a and b, or neither");
    mk::EnumerateOptions opts;
    opts.budget = budget;
    opts.workers = workers;
    auto hits = mk::enumerate_max_kernel(f, (int)d, opts);
    if (hits.empty())
        mk::fail(mk::Err::NoRoot, "no maximum-kernel trinomial exists for these parameters");
    return hits.front();
}

}  // namespace

extern "C" {

unsigned mk_abi_version(void) { return 1; }

const char* mk_status_name(mk_status st) {
    switch (st) {
        case MK_OK: return "MK_OK";
        case MK_ERR_NONPRIME_P: return "MK_ERR_NONPRIME_P";
        case MK_ERR_GCD_VIOLATION: return "MK_ERR_GCD_VIOLATION";
        case MK_ERR_FIELD_TOO_LARGE: return "MK_ERR_FIELD_TOO_LARGE";
        case MK_ERR_DIVISION_BY_ZERO: return "MK_ERR_DIVISION_BY_ZERO";
        case MK_ERR_NON_DIVISOR: return "MK_ERR_NON_DIVISOR";
        case MK_ERR_ZERO_POLYNOMIAL: return "MK_ERR_ZERO_POLYNOMIAL";
        case MK_ERR_NOT_MONIC_NEGATED: return "MK_ERR_NOT_MONIC_NEGATED";
        case MK_ERR_INDEX_OUT_OF_RANGE: return "MK_ERR_INDEX_OUT_OF_RANGE";
        case MK_ERR_HYPOTHESIS_VIOLATED: return "MK_ERR_HYPOTHESIS_VIOLATED";
        case MK_ERR_RANGE: return "MK_ERR_RANGE";
        case MK_ERR_PRECONDITION_FAILED: return "MK_ERR_PRECONDITION_FAILED";
        case MK_ERR_BUDGET_EXCEEDED: return "MK_ERR_BUDGET_EXCEEDED";
        case MK_ERR_NOT_SUBSPACE: return "MK_ERR_NOT_SUBSPACE";
        case MK_ERR_SIGMA_MISMATCH: return "MK_ERR_SIGMA_MISMATCH";
        case MK_ERR_MALFORMED_SHAPE: return "MK_ERR_MALFORMED_SHAPE";
        case MK_ERR_NO_ROOT: return "MK_ERR_NO_ROOT";
        case MK_ERR_UNKNOWN_TARGET: return "MK_ERR_UNKNOWN_TARGET";
        case MK_ERR_BAD_ARGUMENT: return "MK_ERR_BAD_ARGUMENT";
        case MK_ERR_INTERNAL: return "MK_ERR_INTERNAL";
    }
    return "MK_ERR_INTERNAL";
}

const char* mk_last_error(void) { return g_last_error.c_str(); }

void mk_string_free(char* s) { std::free(s); }

mk_status mk_field_create(uint64_t p, uint32_t h, uint32_t n, uint32_t s, mk_field** out) {
    return guarded([&] {
        if (!out) mk::fail(mk::Err::BadArgument, "null output pointer");
        auto handle = std::make_unique<mk_field>();
        handle->impl = std::make_unique<mk::Field>(p, h, n, s);
        *out = handle.release();
    });
}

mk_status mk_field_from_json(const char* json_text, mk_field** out) {
    return guarded([&] {
        if (!out || !json_text) mk::fail(mk::Err::BadArgument, "null argument");
        auto j = nlohmann::json::parse(json_text, nullptr, false);
        if (j.is_discarded()) mk::fail(mk::Err::BadArgument, "invalid JSON");
        auto handle = std::make_unique<mk_field>();
        handle->impl = mk::io::field_from_json(j);
        *out = handle.release();
    });
}

void mk_field_free(mk_field* f) { delete f; }

mk_status mk_field_to_json(const mk_field* f, char** json_out) {
    return guarded([&] {
        if (!json_out) mk::fail(mk::Err::BadArgument, "null output pointer");
        *json_out = dup_string(mk::io::field_to_json(deref(f)).dump());
    });
}

mk_status mk_element_op(const mk_field* f, const char* op, const char* a_hex, const char* b_hex,
                        char** out_hex) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!op || !out_hex) mk::fail(mk::Err::BadArgument, "null argument");
        mk::Element a = parse_hex(fld, a_hex, "a");
        mk::Element b = parse_hex(fld, b_hex, "b");
        std::string o(op);
        mk::Element r;
        if (o == "add") r = fld.add(a, b);
        else if (o == "sub") r = fld.sub(a, b);
        else if (o == "mul") r = fld.mul(a, b);
        else if (o == "div") r = fld.div(a, b);
        else mk::fail(mk::Err::BadArgument, "op must be add, sub, mul or div");
        *out_hex = dup_string(mk::io::element_to_hex(fld, r));
    });
}

mk_status mk_element_sigma(const mk_field* f, const char* a_hex, int64_t j, char** out_hex) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!out_hex) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::Element a = parse_hex(fld, a_hex, "a");
        *out_hex = dup_string(mk::io::element_to_hex(fld, fld.sigma_apply(a, j)));
    });
}

mk_status mk_element_norm(const mk_field* f, const char* a_hex, uint32_t t, char** out_hex) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!out_hex) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::Element a = parse_hex(fld, a_hex, "a");
        *out_hex = dup_string(mk::io::element_to_hex(fld, fld.relative_norm(a, t)));
    });
}

mk_status mk_poly_create(const mk_field* f, const char* const* coeff_hex, size_t count,
                         mk_poly** out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!out || (!coeff_hex && count > 0)) mk::fail(mk::Err::BadArgument, "null argument");
        auto handle = std::make_unique<mk_poly>();
        for (size_t i = 0; i < count; ++i)
            handle->impl.coeffs.push_back(parse_hex(fld, coeff_hex[i], "coefficient"));
        *out = handle.release();
    });
}

mk_status mk_poly_trinomial(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                            mk_poly** out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!out) mk::fail(mk::Err::BadArgument, "null output pointer");
        auto handle = std::make_unique<mk_poly>();
        handle->impl =
            mk::make_trinomial(fld, parse_hex(fld, a_hex, "a"), parse_hex(fld, b_hex, "b"), (int)d);
        *out = handle.release();
    });
}

void mk_poly_free(mk_poly* g) { delete g; }

mk_status mk_poly_to_json(const mk_field* f, const mk_poly* g, char** json_out) {
    return guarded([&] {
        if (!g || !json_out) mk::fail(mk::Err::BadArgument, "null argument");
        *json_out = dup_string(mk::io::poly_to_json(deref(f), g->impl).dump());
    });
}

mk_status mk_poly_kernel_dim(const mk_field* f, const mk_poly* g, uint32_t* out) {
    return guarded([&] {
        if (!g || !out) mk::fail(mk::Err::BadArgument, "null argument");
        *out = (uint32_t)mk::kernel_dim(deref(f), g->impl);
    });
}

mk_status mk_poly_weight(const mk_field* f, const mk_poly* g, uint32_t* out) {
    return guarded([&] {
        if (!g || !out) mk::fail(mk::Err::BadArgument, "null argument");
        *out = (uint32_t)mk::weight(deref(f), g->impl);
    });
}

mk_status mk_classify(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                      char** verdict_json) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!verdict_json) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::TrinomialInstance inst{(int)d, parse_hex(fld, a_hex, "a"), parse_hex(fld, b_hex, "b")};
        auto verdict = mk::classify(fld, inst);
        *verdict_json = dup_string(mk::io::verdict_to_json(fld, inst, verdict).dump());
    });
}

mk_status mk_enumerate(const mk_field* f, uint32_t d, uint64_t budget, uint32_t workers,
                       char** json_out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!json_out) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::EnumerateOptions opts;
        opts.budget = budget;
        opts.workers = workers;
        auto hits = mk::enumerate_max_kernel(fld, (int)d, opts);
        nlohmann::json j;
        j["schema"] = mk::io::kSchema;
        j["field"] = mk::io::field_to_json(fld);
        j["d"] = d;
        j["count"] = hits.size();
        auto arr = nlohmann::json::array();
        for (const auto& inst : hits) {
            nlohmann::json rec;
            rec["a"] = mk::io::element_to_hex(fld, inst.a);
            rec["b"] = mk::io::element_to_hex(fld, inst.b);
            rec["verdict"] = "MaxKernel";
            rec["rule"] = "BruteForce";
            arr.push_back(rec);
        }
        j["instances"] = arr;
        *json_out = dup_string(j.dump());
    });
}

mk_status mk_census(const mk_field* f, uint32_t d, uint64_t budget, uint32_t workers,
                    char** json_out, char** csv_out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!json_out && !csv_out) mk::fail(mk::Err::BadArgument, "no output requested");
        mk::CensusOptions opts;
        opts.budget = budget;
        opts.workers = workers;
        auto census = mk::weight_census(fld, (int)d, opts);
        auto formula = mk::d_closed_form(fld, (int)d);
        if (json_out) *json_out = dup_string(mk::io::census_to_json(fld, census, formula).dump());
        if (csv_out) *csv_out = dup_string(mk::io::census_to_csv(census));
    });
}

mk_status mk_build_code(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                        int certify, uint64_t budget, uint32_t workers, char** json_out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!json_out) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::TrinomialInstance inst = default_or_given(fld, d, a_hex, b_hex, budget, workers);
        mk::SigmaPoly tri = mk::make_trinomial(fld, inst.a, inst.b, (int)d);
        mk::Subspace v = mk::kernel_subspace(fld, tri);
        mk::OrbitOptions opts;
        opts.certify = certify != 0;
        opts.budget = budget;
        opts.workers = workers;
        auto code = mk::build_orbit_code(fld, v, opts);
        auto j = mk::io::orbit_to_json(fld, code);
        j["a"] = mk::io::element_to_hex(fld, inst.a);
        j["b"] = mk::io::element_to_hex(fld, inst.b);
        j["d"] = d;
        *json_out = dup_string(j.dump());
    });
}

mk_status mk_quasi(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                   char** json_out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!json_out) mk::fail(mk::Err::BadArgument, "null output pointer");
        mk::Element a = parse_hex(fld, a_hex, "a");
        mk::Element b;
        if (b_hex) {
            b = parse_hex(fld, b_hex, "b");
        } else {
            // derive from the even-family exponent: b = a^{-(sigma^d + ... + sigma^{(d-1)d})}
            mk::FrobExponent e1 = mk::FrobExponent::geometric((int)d, (int)d - 1);
            b = fld.power_by_exponent(a, (-e1).shifted((int)d));
        }
        // the monic shape x^{sigma^d} - b x^sigma - a x
        mk::SigmaPoly g;
        g.coeffs.assign((std::size_t)d + 1, fld.zero());
        g.coeffs[0] = fld.neg(a);
        g.coeffs[1] = fld.neg(b);
        g.coeffs[(std::size_t)d] = fld.one();
        auto qc = mk::quasi_subfield_check(fld, g);
        *json_out =
            dup_string(mk::io::quasi_to_json(fld, (int)d, mk::TrinomialInstance{(int)d, a, b}, qc)
                           .dump());
    });
}

mk_status mk_verify(const mk_field* f, const char* target, uint32_t d, uint64_t budget,
                    uint64_t seed, uint32_t workers, const char* format, int* pass_out,
                    char** report_out) {
    return guarded([&] {
        const mk::Field& fld = deref(f);
        if (!target || !report_out) mk::fail(mk::Err::BadArgument, "null argument");
        mk::VerifyConfig cfg;
        cfg.d = (int)d;
        cfg.budget = budget;
        cfg.seed = seed;
        cfg.workers = workers;
        auto rep = mk::run_verify(fld, target, cfg);
        if (pass_out) *pass_out = rep.pass ? 1 : 0;
        std::string fmt = format ? format : "json";
        if (fmt == "json")
            *report_out = dup_string(rep.to_json(fld, cfg).dump());
        else if (fmt == "text")
            *report_out = dup_string(rep.to_text());
        else
            mk::fail(mk::Err::BadArgument, "format must be json or text");
    });
}

mk_status mk_verify_targets(char** out) {
    return guarded([&] {
        if (!out) mk::fail(mk::Err::BadArgument, "null output pointer");
        std::string all;
        for (const auto& t : mk::verify_targets()) {
            all += t;
            all += "\n";
        }
        *out = dup_string(all);
    });
}

}  // extern "C"
