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

#include "gabidulin/channel.hpp"

#include <random>
#include <stdexcept>

namespace gabidulin {

FqMatrix ext_map(const FieldCtx& ctx, const std::vector<FieldElement>& v) {
    FqMatrix M(ctx.m(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        for (unsigned i = 0; i < ctx.m(); ++i) M.at(i, j) = ctx.coord(v[j], i);
    return M;
}

std::vector<FieldElement> ext_inv(const FieldCtx& ctx, const FqMatrix& M) {
    if (M.rows != ctx.m()) throw std::invalid_argument("matrix row count must equal m");
    std::vector<FieldElement> v;
    v.reserve(M.cols);
    for (std::size_t j = 0; j < M.cols; ++j) {
        std::vector<std::uint32_t> coords(ctx.m());
        for (unsigned i = 0; i < ctx.m(); ++i) coords[i] = M.at(i, j);
        v.push_back(ctx.from_coords(coords));
    }
    return v;
}

std::size_t rank_of_word(const FieldCtx& ctx, const std::vector<FieldElement>& v) {
    if (v.empty()) return 0;
    return fq_rank(ctx, ext_map(ctx, v));
}

namespace {

std::vector<FieldElement> draw_independent(const FieldCtx& ctx, std::size_t count,
                                           std::mt19937_64& rng) {
    while (true) {
        std::vector<FieldElement> elems;
        elems.reserve(count);
        for (std::size_t i = 0; i < count; ++i) elems.push_back(ctx.random_element(rng));
        if (independent_over_fq(ctx, elems)) return elems;
    }
}

FqMatrix draw_full_rank(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng) {
    while (true) {
        FqMatrix M(rows, cols);
        for (auto& x : M.a) x = static_cast<std::uint32_t>(rng() % ctx.q());
        if (rows == 0 || fq_rank(ctx, M) == rows) return M;
    }
}

FqMatrix row_block(const FqMatrix& M, std::size_t r0, std::size_t count) {
    FqMatrix B(count, M.cols);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) B.at(i, j) = M.at(r0 + i, j);
    return B;
}

}  // namespace

RankError random_rank_error(const FieldCtx& ctx, std::size_t n, std::size_t tau, std::size_t rho,
                            std::size_t gamma, std::uint64_t seed, bool combined) {
    const std::size_t w = tau + rho + gamma;
    if (w > n || w > ctx.m())
        throw std::invalid_argument("infeasible decomposition: tau + rho + gamma exceeds min(n, m)");
    std::mt19937_64 rng(seed);
    RankError err;
    std::vector<FieldElement> elems;
    FqMatrix B;
    if (combined) {
        elems = draw_independent(ctx, w, rng);
        B = draw_full_rank(ctx, w, n, rng);
    } else {
        auto ef = draw_independent(ctx, tau, rng);
        auto er = draw_independent(ctx, rho, rng);
        auto ec = draw_independent(ctx, gamma, rng);
        elems.insert(elems.end(), ef.begin(), ef.end());
        elems.insert(elems.end(), er.begin(), er.end());
        elems.insert(elems.end(), ec.begin(), ec.end());
        FqMatrix bf = draw_full_rank(ctx, tau, n, rng);
        FqMatrix br = draw_full_rank(ctx, rho, n, rng);
        FqMatrix bc = draw_full_rank(ctx, gamma, n, rng);
        B = FqMatrix(w, n);
        for (std::size_t i = 0; i < tau; ++i)
            for (std::size_t j = 0; j < n; ++j) B.at(i, j) = bf.at(i, j);
        for (std::size_t i = 0; i < rho; ++i)
            for (std::size_t j = 0; j < n; ++j) B.at(tau + i, j) = br.at(i, j);
        for (std::size_t i = 0; i < gamma; ++i)
            for (std::size_t j = 0; j < n; ++j) B.at(tau + rho + i, j) = bc.at(i, j);
    }
    err.a_full.assign(elems.begin(), elems.begin() + tau);
    err.a_row.assign(elems.begin() + tau, elems.begin() + tau + rho);
    err.a_col.assign(elems.begin() + tau + rho, elems.end());
    err.b_full = row_block(B, 0, tau);
    err.b_row = row_block(B, tau, rho);
    err.b_col = row_block(B, tau + rho, gamma);

    err.e.assign(n, ctx.zero());
    for (std::size_t t = 0; t < w; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t c = B.at(t, j);
            if (c) err.e[j] = ctx.add(err.e[j], ctx.scale_fq(c, elems[t]));
        }
    return err;
}

Transmission simulate_transmission(const CodeParams& cp, const SkewPoly& f, std::size_t tau,
                                   std::size_t rho, std::size_t gamma, std::uint64_t seed) {
    const FieldCtx& ctx = *cp.ctx;
    Transmission tr;
    tr.truth = random_rank_error(ctx, cp.n, tau, rho, gamma, seed);
    tr.r = encode(cp, f);
    for (std::size_t j = 0; j < cp.n; ++j) tr.r[j] = ctx.add(tr.r[j], tr.truth.e[j]);
    tr.side.a_row = tr.truth.a_row;
    tr.side.b_col = tr.truth.b_col;
    return tr;
}

}  // namespace gabidulin
