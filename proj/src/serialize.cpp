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

#include "gabidulin/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gabidulin {

using nlohmann::json;

namespace {

std::uint64_t pack_base_q(const std::vector<std::uint32_t>& digits, std::uint64_t q) {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (v > ((std::uint64_t(1) << 62) - digits[i]) / q)
            throw std::domain_error("field too large for integer serialization");
        v = v * q + digits[i];
    }
    return v;
}

std::vector<std::uint32_t> unpack_base_q(std::uint64_t v, std::uint64_t q, std::size_t count) {
    std::vector<std::uint32_t> digits(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        digits[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
    }
    if (v != 0) throw std::invalid_argument("element integer out of range for the field");
    return digits;
}

}  // namespace

json field_to_json(const FieldParams& params) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < params.e; ++i) q *= params.p;
    json j;
    j["p"] = params.p;
    j["e"] = params.e;
    j["m"] = params.m;
    j["base_modulus"] = params.base_modulus;
    j["ext_modulus"] = params.ext_modulus;
    j["beta"] = pack_base_q(params.beta_poly, q);
    return j;
}

FieldParams field_from_json(const json& j) {
    FieldParams p;
    p.p = j.at("p").get<std::uint32_t>();
    p.e = j.at("e").get<unsigned>();
    p.m = j.at("m").get<unsigned>();
    p.base_modulus = j.at("base_modulus").get<std::vector<std::uint32_t>>();
    p.ext_modulus = j.at("ext_modulus").get<std::vector<std::uint32_t>>();
    std::uint64_t q = 1;
    for (unsigned i = 0; i < p.e; ++i) q *= p.p;
    p.beta_poly = unpack_base_q(j.at("beta").get<std::uint64_t>(), q, p.m);
    return p;
}

json elements_to_json(const FieldCtx& ctx, const std::vector<FieldElement>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(ctx.to_integer(e));
    return arr;
}

std::vector<FieldElement> elements_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of element integers");
    std::vector<FieldElement> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(ctx.from_integer(x.get<std::uint64_t>()));
    return v;
}

json matrix_to_json(const FqMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

FqMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of matrix rows");
    FqMatrix M;
    M.rows = j.size();
    M.cols = M.rows ? j.at(0).size() : 0;
    M.a.reserve(M.rows * M.cols);
    for (const auto& row : j) {
        if (row.size() != M.cols) throw std::invalid_argument("ragged matrix rows");
        for (const auto& x : row) M.a.push_back(x.get<std::uint32_t>());
    }
    return M;
}

json poly_to_json(const SkewPoly& f) {
    const FieldCtx& ctx = f.ctx();
    json arr = json::array();
    for (long i = f.deg(); i >= 0; --i) {
        FieldElement c = f.coeff(static_cast<std::size_t>(i));
        if (ctx.is_zero(c)) continue;
        arr.push_back(json::array({i, ctx.to_integer(c)}));
    }
    return arr;
}

SkewPoly poly_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected [[exponent, element], ...]");
    std::vector<FieldElement> coeffs;
    long prev = -1;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("polynomial terms must be [exponent, element] pairs");
        long e = term.at(0).get<long>();
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (prev >= 0 && e >= prev)
            throw std::invalid_argument("exponents must be strictly decreasing");
        prev = e;
        if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(e + 1, ctx.zero());
        coeffs[e] = ctx.from_integer(term.at(1).get<std::uint64_t>());
    }
    return SkewPoly::from_coeffs(ctx, std::move(coeffs), 1);
}

json code_to_json(const CodeParams& cp, const json& field_ref) {
    json j;
    j["field"] = field_ref;
    j["n"] = cp.n;
    j["k"] = cp.k;
    if (cp.normal_basis)
        j["g"] = "normal_basis";
    else
        j["g"] = elements_to_json(*cp.ctx, cp.g);
    return j;
}

LoadedCode code_from_json(const json& j, const std::string& base_dir) {
    json field_ref = j.at("field");
    json field_obj;
    if (field_ref.is_string()) {
        std::filesystem::path p = field_ref.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        field_obj = read_json_file(p.string());
    } else {
        field_obj = field_ref;
    }
    LoadedCode lc;
    lc.ctx = std::make_unique<FieldCtx>(FieldCtx::from_params(field_from_json(field_obj)));
    std::size_t n = j.at("n").get<std::size_t>();
    std::size_t k = j.at("k").get<std::size_t>();
    const json& g = j.at("g");
    if (g.is_string()) {
        if (g.get<std::string>() != "normal_basis")
            throw std::invalid_argument("g must be an array of elements or \"normal_basis\"");
        lc.cp = make_code(*lc.ctx, n, k, true);
    } else {
        lc.cp = make_code(*lc.ctx, n, k, elements_from_json(*lc.ctx, g));
    }
    return lc;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace gabidulin
