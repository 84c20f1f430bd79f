/*
   Copyright 2026 the gabidulin contributors

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

#ifndef GABIDULIN_SERIALIZE_HPP
#define GABIDULIN_SERIALIZE_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "gabidulin/codec.hpp"
#include "gabidulin/field.hpp"
#include "gabidulin/skew_poly.hpp"

namespace gabidulin {

// Field description file. Moduli are coefficient arrays, low degree first;
// beta is the base-q integer packing of its polynomial-basis coordinates.
nlohmann::json field_to_json(const FieldParams& params);
FieldParams field_from_json(const nlohmann::json& j);

// Elements in CLI I/O are normal-basis coordinate vectors read base q.
nlohmann::json elements_to_json(const FieldCtx& ctx, const std::vector<FieldElement>& v);
std::vector<FieldElement> elements_from_json(const FieldCtx& ctx, const nlohmann::json& j);

nlohmann::json matrix_to_json(const FqMatrix& M);
FqMatrix matrix_from_json(const nlohmann::json& j);

// Textual polynomial format: [[exponent, element], ...], exponents strictly
// decreasing.
nlohmann::json poly_to_json(const SkewPoly& f);
SkewPoly poly_from_json(const FieldCtx& ctx, const nlohmann::json& j);

// Code description file: {"field": <path or inline object>, "n":..,
// "k":.., "g": [ints] or "normal_basis"}.
struct LoadedCode {
    std::unique_ptr<FieldCtx> ctx;
    CodeParams cp;
};
nlohmann::json code_to_json(const CodeParams& cp, const nlohmann::json& field_ref);
LoadedCode code_from_json(const nlohmann::json& j, const std::string& base_dir);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace gabidulin

#endif
