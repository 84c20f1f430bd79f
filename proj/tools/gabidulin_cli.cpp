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

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gabidulin/bench.hpp"
#include "gabidulin/channel.hpp"
#include "gabidulin/codec.hpp"
#include "gabidulin/serialize.hpp"
#include "gabidulin/skew_poly.hpp"

using nlohmann::json;
using namespace gabidulin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDecodingFailure = 2;

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out, j);
}

std::string dir_of(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return out;
}

int cmd_field(std::uint32_t p, unsigned e, unsigned m, std::uint64_t seed, const std::string& out) {
    FieldCtx ctx = FieldCtx::build(p, e, m, seed);
    emit(field_to_json(ctx.params()), out);
    return kExitOk;
}

int cmd_code(const std::string& field_path, std::size_t n, std::size_t k, bool normal_basis,
             const std::string& g_csv, std::uint64_t seed, const std::string& out) {
    json fj = read_json_file(field_path);
    FieldCtx ctx = FieldCtx::from_params(field_from_json(fj));
    if (n > ctx.m()) throw std::invalid_argument("n exceeds m");
    CodeParams cp;
    if (normal_basis) {
        cp = make_code(ctx, n, k, true);
    } else if (!g_csv.empty()) {
        std::vector<FieldElement> g;
        std::stringstream ss(g_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) g.push_back(ctx.from_integer(std::stoull(tok)));
        cp = make_code(ctx, n, k, std::move(g));
    } else {
        // random evaluation points, independent over F_q
        std::mt19937_64 rng(seed);
        std::vector<FieldElement> g;
        while (true) {
            g.clear();
            for (std::size_t i = 0; i < n; ++i) g.push_back(ctx.random_element(rng));
            if (independent_over_fq(ctx, g)) break;
        }
        cp = make_code(ctx, n, k, std::move(g));
    }
    emit(code_to_json(cp, field_path), out);
    return kExitOk;
}

int cmd_encode(const std::string& code_path, const std::string& in_path, const std::string& out) {
    LoadedCode lc = code_from_json(read_json_file(code_path), dir_of(code_path));
    json in = read_json_file(in_path);
    SkewPoly f = poly_from_json(*lc.ctx, in.is_array() ? in : in.at("f"));
    auto cw = encode(lc.cp, f);
    json j;
    j["r"] = elements_to_json(*lc.ctx, cw);
    emit(j, out);
    return kExitOk;
}

int cmd_decode(const std::string& code_path, const std::string& in_path, const std::string& ar_arg,
               const std::string& bc_arg, const std::string& out) {
    LoadedCode lc = code_from_json(read_json_file(code_path), dir_of(code_path));
    const FieldCtx& ctx = *lc.ctx;
    json in = read_json_file(in_path);
    std::vector<FieldElement> r = elements_from_json(ctx, in.at("r"));

    json ar = ar_arg.empty() ? in.value("aR", json()) : json::parse(ar_arg);
    json bc = bc_arg.empty() ? in.value("BC", json()) : json::parse(bc_arg);
    DecodeOutcome res;
    if (ar.is_null() && bc.is_null()) {
        res = decode_errors_only(lc.cp, r);
    } else {
        ErasureSideInfo side;
        if (!ar.is_null()) side.a_row = elements_from_json(ctx, ar);
        if (!bc.is_null()) side.b_col = matrix_from_json(bc);
        res = decode_errors_erasures(lc.cp, r, side);
    }
    json j;
    if (res.ok()) {
        j["status"] = "ok";
        j["f"] = poly_to_json(*res.f);
    } else {
        j["status"] = "failure";
    }
    emit(j, out);
    return res.ok() ? kExitOk : kExitDecodingFailure;
}

int cmd_simulate(const std::string& spec_path, const std::string& out) {
    json spec = read_json_file(spec_path);
    std::filesystem::path code_path = spec.at("code").get<std::string>();
    if (code_path.is_relative() && !dir_of(spec_path).empty())
        code_path = std::filesystem::path(dir_of(spec_path)) / code_path;
    LoadedCode lc = code_from_json(read_json_file(code_path.string()), dir_of(code_path.string()));
    const FieldCtx& ctx = *lc.ctx;
    const std::size_t tau = spec.at("tau").get<std::size_t>();
    const std::size_t rho = spec.at("rho").get<std::size_t>();
    const std::size_t gamma = spec.at("gamma").get<std::size_t>();
    const std::uint64_t seed = spec.at("seed").get<std::uint64_t>();
    const std::size_t trials = spec.at("trials").get<std::size_t>();
    if (tau + rho + gamma > std::min<std::size_t>(lc.cp.n, ctx.m()))
        throw std::invalid_argument("infeasible decomposition: tau + rho + gamma too large");

    std::ostringstream records;
    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + t;
        std::mt19937_64 rng(trial_seed ^ 0x5bf0f5d9a1f7e23bull);
        std::vector<FieldElement> coeffs(lc.cp.k, ctx.zero());
        for (auto& c : coeffs) c = ctx.random_element(rng);
        SkewPoly f = SkewPoly::from_coeffs(ctx, std::move(coeffs), 1);
        Transmission tx = simulate_transmission(lc.cp, f, tau, rho, gamma, trial_seed);
        OpCounts before = ctx.counts();
        DecodeOutcome res = (rho + gamma > 0)
                                ? decode_errors_erasures(lc.cp, tx.r, tx.side)
                                : decode_errors_only(lc.cp, tx.r);
        OpCounts delta = ctx.counts() - before;
        bool success = res.ok() && *res.f == f;
        successes += success ? 1 : 0;
        json rec;
        rec["seed"] = trial_seed;
        rec["success"] = success;
        rec["tau"] = tau;
        rec["rho"] = rho;
        rec["gamma"] = gamma;
        rec["fq_op_counts"] = {{"mul", delta.mul}, {"inv", delta.inv}, {"add", delta.add},
                               {"frob", delta.frob}};
        records << rec.dump() << '\n';
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open " + out + " for writing");
        f << records.str();
    } else {
        std::cout << records.str();
    }
    json summary;
    summary["trials"] = trials;
    summary["successes"] = successes;
    summary["success_rate"] = trials ? static_cast<double>(successes) / trials : 0.0;
    std::cout << summary.dump() << '\n';
    return kExitOk;
}

int cmd_bench(const std::vector<std::string>& ops, const std::string& sizes_csv,
              std::uint64_t seed, const std::string& out) {
    std::vector<std::string> use_ops = ops.empty() ? bench_ops() : ops;
    std::vector<std::size_t> sizes = parse_sizes(sizes_csv);
    auto records = run_bench(use_ops, sizes, seed);
    std::string csv = bench_csv(records);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open " + out + " for writing");
        f << csv;
    } else {
        std::cout << csv;
    }
    for (const auto& [op, slope] : bench_slopes(records)) {
        std::ostringstream line;
        line.precision(4);
        line << std::fixed << "slope," << op << ',' << slope;
        std::cout << line.str() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linearized-polynomial arithmetic and Gabidulin rank-metric codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out;
    bool as_json = false;
    app.add_option("--seed", seed, "deterministic seed");
    app.add_option("--out", out, "output file (default: stdout)");
    app.add_flag("--json", as_json, "machine-readable output");

    auto* field_cmd = app.add_subcommand("field", "construct a field description");
    std::uint32_t p = 2;
    unsigned e = 1, m = 0;
    field_cmd->add_option("--p", p, "characteristic (prime)")->required();
    field_cmd->add_option("--e", e, "base extension degree (q = p^e)");
    field_cmd->add_option("--m", m, "extension degree over F_q")->required();

    auto* code_cmd = app.add_subcommand("code", "construct a Gabidulin code description");
    std::string field_path, g_csv;
    std::size_t n = 0, k = 0;
    bool normal_basis = false;
    code_cmd->add_option("--field", field_path, "field description file")->required();
    code_cmd->add_option("--n", n, "code length")->required();
    code_cmd->add_option("--k", k, "code dimension")->required();
    code_cmd->add_flag("--normal-basis", normal_basis, "use g_i = beta^{[i-1]}");
    code_cmd->add_option("--g", g_csv, "comma-separated evaluation point integers");

    auto* encode_cmd = app.add_subcommand("encode", "evaluate an information polynomial");
    std::string code_path, in_path;
    encode_cmd->add_option("--code", code_path, "code description file")->required();
    encode_cmd->add_option("--in", in_path, "information polynomial file")->required();

    auto* decode_cmd = app.add_subcommand("decode", "decode a received word");
    std::string ar_arg, bc_arg;
    decode_cmd->add_option("--code", code_path, "code description file")->required();
    decode_cmd->add_option("--in", in_path, "received word file")->required();
    decode_cmd->add_option("--aR", ar_arg, "row-erasure basis (JSON array of element integers)");
    decode_cmd->add_option("--BC", bc_arg, "column-erasure basis (JSON matrix over F_q)");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo round trips");
    std::string spec_path;
    sim_cmd->add_option("--spec", spec_path, "simulation spec file")->required();

    auto* bench_cmd = app.add_subcommand("bench", "operation-count benchmark");
    std::vector<std::string> ops;
    std::string sizes_csv = "64,128,256,512,1024";
    bench_cmd->add_option("--op", ops, "operation name (repeatable; default: all)");
    bench_cmd->add_option("--sizes", sizes_csv, "comma-separated size ladder");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(field_cmd)) return cmd_field(p, e, m, seed, out);
        if (app.got_subcommand(code_cmd))
            return cmd_code(field_path, n, k, normal_basis, g_csv, seed, out);
        if (app.got_subcommand(encode_cmd)) return cmd_encode(code_path, in_path, out);
        if (app.got_subcommand(decode_cmd))
            return cmd_decode(code_path, in_path, ar_arg, bc_arg, out);
        if (app.got_subcommand(sim_cmd)) return cmd_simulate(spec_path, out);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(ops, sizes_csv, seed, out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
