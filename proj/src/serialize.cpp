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

#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace mk::io {

using nlohmann::json;

json field_to_json(const Field& f) {
    json j;
    j["schema"] = kSchema;
    j["p"] = f.p();
    j["h"] = f.h();
    j["n"] = f.n();
    j["s"] = f.s();
    j["m"] = f.m();
    j["order"] = u128_to_string(f.order());
    j["modulus"] = json::array();
    for (digit c : f.modulus()) j["modulus"].push_back((unsigned)c);
    return j;
}

std::unique_ptr<Field> field_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("h") || !j.contains("n") || !j.contains("s"))
        fail(Err::BadArgument, "field record needs p, h, n, s");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned h = j.at("h").get<unsigned>();
    unsigned n = j.at("n").get<unsigned>();
    unsigned s = j.at("s").get<unsigned>();
    if (j.contains("modulus")) {
        std::vector<digit> mod;
        for (const auto& c : j.at("modulus")) mod.push_back((digit)c.get<unsigned>());
        return std::make_unique<Field>(p, h, n, s, mod);
    }
    return std::make_unique<Field>(p, h, n, s);
}

json element_to_json(const Field& f, const Element& x) {
    json arr = json::array();
    for (unsigned i = 0; i < f.m(); ++i) arr.push_back((unsigned)x.c[i]);
    return arr;
}

Element element_from_json(const Field& f, const json& j) {
    std::vector<unsigned> coeffs;
    for (const auto& c : j) coeffs.push_back(c.get<unsigned>());
    return f.from_digits(coeffs);
}

std::string element_to_hex(const Field& f, const Element& x) {
    u128 v = f.index_of(x);
    if (v == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    while (v > 0) {
        out.push_back(digits[(unsigned)(v & 0xf)]);
        v >>= 4;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Element element_from_hex(const Field& f, const std::string& hex) {
    std::size_t start = 0;
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) start = 2;
    if (start >= hex.size()) fail(Err::BadArgument, "empty hex literal");
    u128 v = 0;
    for (std::size_t i = start; i < hex.size(); ++i) {
        char ch = hex[i];
        unsigned nib;
        if (ch >= '0' && ch <= '9') nib = (unsigned)(ch - '0');
        else if (ch >= 'a' && ch <= 'f') nib = (unsigned)(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') nib = (unsigned)(ch - 'A' + 10);
        else fail(Err::BadArgument, std::string("bad hex digit '") + ch + "'");
        if (v >> 124) fail(Err::BadArgument, "hex literal exceeds 128 bits");
        v = (v << 4) | nib;
    }
    if (v >= f.order()) fail(Err::BadArgument, "element value out of field range");
    return f.from_index(v);
}

json poly_to_json(const Field& f, const SigmaPoly& g) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_to_json(f);
    j["sdegree"] = is_zero(f, g) ? -1 : sigma_degree(f, g);
    j["coeffs"] = json::array();
    for (const auto& c : g.coeffs) j["coeffs"].push_back(element_to_json(f, c));
    return j;
}

SigmaPoly poly_from_json(const Field& f, const json& j) {
    SigmaPoly g;
    for (const auto& c : j.at("coeffs")) g.coeffs.push_back(element_from_json(f, c));
    return g;
}

json verdict_to_json(const Field& f, const TrinomialInstance& inst, const Classification& c) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_to_json(f);
    j["d"] = inst.d;
    j["n"] = f.n();
    j["a"] = element_to_hex(f, inst.a);
    j["b"] = element_to_hex(f, inst.b);
    j["verdict"] = c.is_max() ? "MaxKernel" : "NotMaxKernel";
    j["rule"] = c.rule;
    j["witness"] = c.witness;
    return j;
}

json census_to_json(const Field& f, const WeightCensus& census, const DCount& formula) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_to_json(f);
    j["d"] = census.d;
    j["n"] = census.n;
    j["q"] = u128_to_string(f.q());
    json counts = json::object();
    for (const auto& [w, c] : census.counts) counts[std::to_string(w)] = u128_to_string(c);
    j["counts"] = counts;
    u128 observed = census.count_at(census.n - census.d);
    j["D_observed"] = u128_to_string(observed);
    switch (formula.kind) {
        case DCount::Kind::Exact:
            j["D_formula"] = u128_to_string(formula.value);
            j["D_formula_kind"] = "exact";
            j["agree"] = (observed == formula.value);
            break;
        case DCount::Kind::LowerBound:
            j["D_formula"] = u128_to_string(formula.value);
            j["D_formula_kind"] = "lower_bound";
            j["agree"] = (observed >= formula.value);
            break;
        case DCount::Kind::Unknown:
            j["D_formula"] = nullptr;
            j["D_formula_kind"] = "unknown";
            j["agree"] = nullptr;
            break;
    }
    return j;
}

std::string census_to_csv(const WeightCensus& census) {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, c] : census.counts) out << w << "," << u128_to_string(c) << "\n";
    return out.str();
}

json orbit_to_json(const Field& f, const OrbitCode& code) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_to_json(f);
    j["k"] = code.generator.dim();
    j["generator_basis"] = json::array();
    for (const auto& v : code.generator.fq_basis())
        j["generator_basis"].push_back(element_to_hex(f, v));
    j["size"] = u128_to_string(code.size);
    j["t"] = code.t;
    if (code.min_distance)
        j["min_distance"] = *code.min_distance;
    else
        j["min_distance"] = nullptr;
    j["certified"] = code.certified;
    return j;
}

json quasi_to_json(const Field& f, int d, const TrinomialInstance& inst, const QuasiCheck& qc) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_to_json(f);
    j["d"] = d;
    j["a"] = element_to_hex(f, inst.a);
    j["b"] = element_to_hex(f, inst.b);
    j["splits"] = qc.splits;
    j["degree_ok"] = qc.degree_ok;
    j["lambda_degree"] = qc.lambda_degree;
    j["quasi_subfield"] = qc.quasi;
    return j;
}

}  // namespace mk::io
