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

#include "verify.hpp"

#include <sstream>

#include "codes.hpp"
#include "linpoly.hpp"
#include "rng.hpp"
#include "scan.hpp"
#include "serialize.hpp"
#include "trinomial.hpp"

namespace mk {

namespace {

constexpr std::uint64_t kSampleCount = 1000;

std::string pair_str(const Field& f, const Element& a, const Element& b, const std::string& why) {
    return "a=" + io::element_to_hex(f, a) + " b=" + io::element_to_hex(f, b) + " : " + why;
}

std::string repro_line(const Field& f, const std::string& target, const VerifyConfig& cfg) {
    std::ostringstream out;
    // worker count is omitted: it never changes the output bytes
    out << "maxkernel verify " << target << " --p " << f.p() << " --h " << f.h() << " --n "
        << f.n() << " --s " << f.s() << " --d " << cfg.d << " --budget " << cfg.budget
        << " --seed " << cfg.seed;
    return out.str();
}

bool pairs_fit(const Field& f, std::uint64_t budget) {
    return f.order() * f.order() <= (u128)budget;
}

// Runs check(a, b, kdim) over all pairs (chunked, deterministic) or over
// kSampleCount seeded samples; check returns an empty string on success.
template <typename CheckFn>
void pair_sweep(const Field& f, const VerifyConfig& cfg, bool& exhaustive,
                std::uint64_t& instances, std::vector<std::string>& counterexamples,
                CheckFn check) {
    const u128 count = f.order();
    if (pairs_fit(f, cfg.budget)) {
        exhaustive = true;
        instances = (std::uint64_t)(count * count);
        const std::size_t nchunks = chunk_count_for(count);
        std::vector<std::vector<std::string>> fails(nchunks);
        run_chunked(count, cfg.workers, [&](std::size_t ci, u128 begin, u128 end) {
            TrinomialScanner scan(f, cfg.d);
            for (u128 ia = begin; ia < end; ++ia) {
                Element a = f.from_index(ia);
                scan.fix_a(a);
                for (u128 ib = 0; ib < count; ++ib) {
                    Element b = f.from_index(ib);
                    std::string msg = check(a, b, scan.kdim_with_b(b));
                    if (!msg.empty()) fails[ci].push_back(msg);
                }
            }
        });
        for (auto& chunk : fails)
            for (auto& s : chunk) counterexamples.push_back(std::move(s));
    } else {
        exhaustive = false;
        instances = kSampleCount;
        SplitMix64 rng(cfg.seed);
        TrinomialScanner scan(f, cfg.d);
        for (std::uint64_t it = 0; it < kSampleCount; ++it) {
            Element a = rng.element(f), b = rng.element(f);
            scan.fix_a(a);
            std::string msg = check(a, b, scan.kdim_with_b(b));
            if (!msg.empty()) counterexamples.push_back(msg);
        }
    }
}

void target_gow(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   if (kdim > d) return pair_str(f, a, b, "kernel dimension exceeds the degree bound");
                   if (kdim == d) {
                       SigmaPoly g = make_trinomial(f, a, b, d);
                       if (!gow_norm_condition(f, g))
                           return pair_str(f, a, b, "norm condition fails at maximum kernel");
                   }
                   return {};
               });
}

void target_companion(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    if (!pairs_fit(f, cfg.budget))
        ensure_budget(f.order() * f.order(), cfg.budget, "companion equivalence sweep");
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   SigmaPoly g = make_trinomial(f, a, b, d);
                   bool full = has_max_kernel_companion(f, g);
                   bool vec = has_max_kernel_vector(f, g);
                   bool dim = kdim == d;
                   if (full != vec || vec != dim)
                       return pair_str(f, a, b,
                                       "criteria disagree: matrix=" + std::to_string(full) +
                                           " vector=" + std::to_string(vec) +
                                           " kernel=" + std::to_string(dim));
                   return {};
               });
}

void target_main_system(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   bool sys = main_system_check(f, TrinomialInstance{d, a, b}).is_max();
                   if (sys != (kdim == d))
                       return pair_str(f, a, b, "system verdict disagrees with the kernel");
                   return {};
               });
}

void target_mcg_abc(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d, n = (int)f.n();
    bool small = n <= d * (d - 1);
    if (!small && n != d * (d - 1) + 1)
        fail(Err::BadArgument, "mcg-abc covers n <= d(d-1) and n = d(d-1)+1");
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   TrinomialInstance inst{d, a, b};
                   bool verdict =
                       small ? classify_small_n(f, inst).is_max() : check_case_c(f, inst).is_max();
                   if (verdict != (kdim == d))
                       return pair_str(f, a, b, "classification disagrees with the kernel");
                   return {};
               });
}

void target_even_family(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    // family members: every a with N(a) = 1
    u128 family_size = (f.order() - 1) / (f.q() - 1);
    TrinomialScanner scan(f, d);
    auto check_member = [&](const Element& a) {
        TrinomialInstance inst = family_even(f, d, a);
        scan.fix_a(inst.a);
        if (scan.kdim_with_b(inst.b) != d)
            rep.counterexamples.push_back(pair_str(f, inst.a, inst.b, "family member lacks maximum kernel"));
    };
    if (family_size <= (u128)cfg.budget) {
        rep.exhaustive = true;
        for (u128 ia = 1; ia < f.order(); ++ia) {
            Element a = f.from_index(ia);
            if (!(f.relative_norm(a, 1) == f.one())) continue;
            check_member(a);
            ++rep.instances;
        }
    } else {
        rep.exhaustive = false;
        SplitMix64 rng(cfg.seed);
        while (rep.instances < kSampleCount) {
            Element a = rng.nonzero_element(f);
            if (!(f.relative_norm(a, 1) == f.one())) continue;
            check_member(a);
            ++rep.instances;
        }
    }
}

void target_d3_d4(const Field& f, const VerifyConfig& cfg, VerifyReport& rep, int d) {
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   bool verdict = d == 3 ? d3_characterize(f, a, b).is_max()
                                         : d4_characterize(f, a, b).is_max();
                   if (verdict != (kdim == d))
                       return pair_str(f, a, b, "characterization disagrees with the kernel");
                   return {};
               });
}

void target_neccond(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    EnumerateOptions opts;
    opts.budget = cfg.budget;
    opts.workers = cfg.workers;
    auto hits = enumerate_max_kernel(f, d, opts);
    rep.instances = hits.size();
    for (const auto& inst : hits)
        if (!necessary_conditions(f, inst))
            rep.counterexamples.push_back(
                pair_str(f, inst.a, inst.b, "maximum kernel but the necessary identities fail"));
}

void target_pascal(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d, n = (int)f.n();
    if (n != d * d - 1) fail(Err::BadArgument, "pascal target requires n = d^2 - 1");
    const int k = n - d + 1;
    FrobExponent e1 = FrobExponent::geometric(d, d - 1);
    FrobExponent bexp = (-e1).shifted(d);
    SplitMix64 rng(cfg.seed);
    rep.exhaustive = false;
    for (int it = 0; it < 200; ++it) {
        Element a = rng.nonzero_element(f);
        Element b = f.power_by_exponent(a, bexp);
        ZTable zt(f, a, b, d, k);
        auto row = c_row_recursive(f, a, b, d, d - 1, k);
        bool ok = true;
        for (int i = 0; i <= d - 1 && ok; ++i) {
            Element expect = f.scalar_mul(binom_mod_p((std::uint64_t)(d - 1), (std::uint64_t)i, f.p()),
                                          zt.z(d - 1, i));
            if (!(row[(std::size_t)i] == expect)) ok = false;
        }
        for (int j = 2; j <= d - 1 && ok; ++j)
            for (int i = 1; i < j && ok; ++i)
                if (!(zt.z(j, i) == zt.z_via_b(j, i))) ok = false;
        if (!ok)
            rep.counterexamples.push_back(pair_str(f, a, b, "binomial/z-table identity fails"));
        ++rep.instances;
    }
}

void target_prop33(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d;
    SplitMix64 rng(cfg.seed);
    rep.exhaustive = false;
    for (int it = 0; it < 200; ++it) {
        Element a = rng.element(f), b = rng.element(f);
        MEntryTable t(f, a, b, d);
        bool ok = true;
        for (int l = 1; l <= d && ok; ++l) {
            if (!(t.at(l, l - d) == f.one())) ok = false;
            for (int k = -2 * d; k <= 0 && ok; ++k)
                if (k != l - d && !f.is_zero(t.at(l, k))) ok = false;
        }
        for (int l = 2; l <= d && ok; ++l)
            for (int k = 1; k <= d - 1 && ok; ++k) {
                Element got = t.at(l, k);
                Element expect = (k == l - 1) ? f.sigma_apply(b, l - 2)
                                : (k == l)    ? f.sigma_apply(a, l - 1)
                                              : f.zero();
                if (!(got == expect)) ok = false;
            }
        if (!ok) rep.counterexamples.push_back(pair_str(f, a, b, "M-table case table violated"));
        ++rep.instances;
    }
}

void target_cor34(const Field& f, const VerifyConfig& cfg, VerifyReport& rep) {
    const int d = cfg.d, n = (int)f.n();
    pair_sweep(f, cfg, rep.exhaustive, rep.instances, rep.counterexamples,
               [&](const Element& a, const Element& b, int kdim) -> std::string {
                   MEntryTable t(f, a, b, d);
                   bool crit = t.at(1, n - d + 1) == f.one();
                   for (int l = 2; l <= d && crit; ++l)
                       if (!f.is_zero(t.at(l, n - d + 1))) crit = false;
                   if (crit != (kdim == d))
                       return pair_str(f, a, b, "M-entry criterion disagrees with the kernel");
                   return {};
               });
}

}  // namespace

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> targets = {
        "gow",    "companion",   "main-system", "mcg-abc", "even-family", "d3",
        "d4",     "neccond",     "pascal",      "prop33",  "cor34"};
    return targets;
}

VerifyReport run_verify(const Field& f, const std::string& target, const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.target = target;
    rep.repro = repro_line(f, target, cfg);
    if (target == "gow") {
        target_gow(f, cfg, rep);
    } else if (target == "companion") {
        target_companion(f, cfg, rep);
    } else if (target == "main-system") {
        target_main_system(f, cfg, rep);
    } else if (target == "mcg-abc") {
        target_mcg_abc(f, cfg, rep);
    } else if (target == "even-family") {
        target_even_family(f, cfg, rep);
    } else if (target == "d3") {
        if (cfg.d != 3) fail(Err::BadArgument, "d3 target requires --d 3");
        target_d3_d4(f, cfg, rep, 3);
    } else if (target == "d4") {
        if (cfg.d != 4) fail(Err::BadArgument, "d4 target requires --d 4");
        target_d3_d4(f, cfg, rep, 4);
    } else if (target == "neccond") {
        target_neccond(f, cfg, rep);
    } else if (target == "pascal") {
        target_pascal(f, cfg, rep);
    } else if (target == "prop33") {
        target_prop33(f, cfg, rep);
    } else if (target == "cor34") {
        target_cor34(f, cfg, rep);
    } else {
        fail(Err::UnknownTarget, "no verify target named '" + target + "'");
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

nlohmann::json VerifyReport::to_json(const Field& f, const VerifyConfig& cfg) const {
    nlohmann::json j;
    j["schema"] = io::kSchema;
    j["target"] = target;
    j["field"] = io::field_to_json(f);
    j["d"] = cfg.d;
    j["budget"] = cfg.budget;
    j["seed"] = cfg.seed;
    // workers and wall time vary run to run; consumers comparing payloads
    // byte-for-byte drop the whole runtime object
    j["runtime"] = {{"workers", cfg.workers}};
    j["exhaustive"] = exhaustive;
    j["instances"] = instances;
    j["pass"] = pass;
    j["counterexamples"] = counterexamples;
    j["repro"] = repro;
    return j;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    out << "target " << target << ": " << instances << " instances ("
        << (exhaustive ? "exhaustive" : "sampled") << "), "
        << (pass ? "all hold" : std::to_string(counterexamples.size()) + " counterexample(s)")
        << "\n";
    for (const auto& c : counterexamples) out << "  counterexample: " << c << "\n";
    if (!pass) out << "  reproduce: " << repro << "\n";
    return out.str();
}

}  // namespace mk
