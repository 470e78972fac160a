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

// JSON/CSV/hex wire formats. All documents carry {"schema": "maxkernel/1"};
// counts that may exceed 64 bits are serialized as decimal strings.

#ifndef MAXKERNEL_SERIALIZE_HPP
#define MAXKERNEL_SERIALIZE_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "codes.hpp"
#include "field.hpp"
#include "linpoly.hpp"
#include "trinomial.hpp"

namespace mk::io {

inline constexpr const char* kSchema = "maxkernel/1";

nlohmann::json field_to_json(const Field& f);
std::unique_ptr<Field> field_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Field& f, const Element& x);  // coefficient array
Element element_from_json(const Field& f, const nlohmann::json& j);

/// Hex of the packed little-endian base-p value sum c_i p^i.
std::string element_to_hex(const Field& f, const Element& x);
Element element_from_hex(const Field& f, const std::string& hex);

nlohmann::json poly_to_json(const Field& f, const SigmaPoly& g);
SigmaPoly poly_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json verdict_to_json(const Field& f, const TrinomialInstance& inst,
                               const Classification& c);

nlohmann::json census_to_json(const Field& f, const WeightCensus& census, const DCount& formula);
std::string census_to_csv(const WeightCensus& census);

nlohmann::json orbit_to_json(const Field& f, const OrbitCode& code);
nlohmann::json quasi_to_json(const Field& f, int d, const TrinomialInstance& inst,
                             const QuasiCheck& qc);

}  // namespace mk::io

#endif
