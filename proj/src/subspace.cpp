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

#include "gabidulin/subspace.hpp"

#include <stdexcept>

namespace gabidulin {

namespace {

constexpr std::size_t kCutoff = 8;  // below this, the direct constructions win

// e^{q-1} as frob(e)/e
FieldElement pow_q_minus_one(const FieldCtx& ctx, const FieldElement& e) {
    return ctx.mul(ctx.frob(e, 1), ctx.inv(e));
}

// One element at a time: M <- (x^[1] - M(u)^{q-1} x^[0]) * M, skipping
// elements already in the kernel.
SkewPoly msp_incremental(const FieldCtx& ctx, const std::vector<FieldElement>& points) {
    SkewPoly M = SkewPoly::one(ctx, 1);
    for (const auto& u : points) {
        FieldElement e = sp_eval(M, u);
        if (ctx.is_zero(e)) continue;
        std::vector<FieldElement> bc{ctx.neg(pow_q_minus_one(ctx, e)), ctx.one()};
        SkewPoly binom = SkewPoly::from_coeffs(ctx, std::move(bc), 1);
        M = naive_mul(binom, M);
    }
    return M;
}

std::vector<FieldElement> mpe_rec(const SkewPoly& a, const std::vector<FieldElement>& pts);

SkewPoly msp_span_rec(const FieldCtx& ctx, const std::vector<FieldElement>& points) {
    const std::size_t s = points.size();
    if (s <= kCutoff) return msp_incremental(ctx, points);
    std::vector<FieldElement> A(points.begin(), points.begin() + s / 2);
    std::vector<FieldElement> B(points.begin() + s / 2, points.end());
    SkewPoly MA = msp_span_rec(ctx, A);
    std::vector<FieldElement> evB = mpe_rec(MA, B);
    SkewPoly MB = msp_span_rec(ctx, evB);
    return fast_mul(MB, MA);
}

std::vector<FieldElement> mpe_rec(const SkewPoly& a, const std::vector<FieldElement>& pts) {
    const FieldCtx& ctx = a.ctx();
    const std::size_t s = pts.size();
    std::vector<FieldElement> out;
    out.reserve(s);
    if (s <= kCutoff) {
        for (const auto& u : pts) out.push_back(sp_eval(a, u));
        return out;
    }
    std::vector<FieldElement> A(pts.begin(), pts.begin() + s / 2);
    std::vector<FieldElement> B(pts.begin() + s / 2, pts.end());
    SkewPoly MA = msp_span_rec(ctx, A);
    SkewPoly MB = msp_span_rec(ctx, B);
    SkewPoly rhoA = sp_mod(a, MA);
    SkewPoly rhoB = sp_mod(a, MB);
    std::vector<FieldElement> left = mpe_rec(rhoA, A);
    std::vector<FieldElement> right = mpe_rec(rhoB, B);
    out = std::move(left);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

}  // namespace

SkewPoly msp_span(const FieldCtx& ctx, const std::vector<FieldElement>& points) {
    return msp_span_rec(ctx, points);
}

SkewPoly msp(const FieldCtx& ctx, const std::vector<FieldElement>& basis) {
    SkewPoly M = msp_span_rec(ctx, basis);
    if (M.deg() != static_cast<long>(basis.size()))
        throw std::invalid_argument("subspace basis is linearly dependent over F_q");
    return M;
}

std::vector<FieldElement> mpe(const SkewPoly& a, const std::vector<FieldElement>& points) {
    const FieldCtx& ctx = a.ctx();
    if (!a.linearized())
        throw std::invalid_argument("multi-point evaluation requires the linearized view");
    if (points.empty()) return {};
    SkewPoly red = a;
    if (a.deg() >= static_cast<long>(points.size()))
        red = sp_mod(a, msp_span(ctx, points));
    return mpe_rec(red, points);
}

SkewPoly interpolate(const FieldCtx& ctx,
                     const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    const std::size_t s = points.size();
    if (s == 0) return SkewPoly::zero(ctx, 1);
    if (s == 1) {
        if (ctx.is_zero(points[0].first))
            throw std::invalid_argument("interpolation abscissas are linearly dependent over F_q");
        return SkewPoly::monomial(ctx, ctx.mul(points[0].second, ctx.inv(points[0].first)), 0, 1);
    }
    std::vector<std::pair<FieldElement, FieldElement>> A(points.begin(), points.begin() + s / 2);
    std::vector<std::pair<FieldElement, FieldElement>> B(points.begin() + s / 2, points.end());
    std::vector<FieldElement> xa, xb;
    for (const auto& p : A) xa.push_back(p.first);
    for (const auto& p : B) xb.push_back(p.first);
    SkewPoly MA = msp(ctx, xa);
    SkewPoly MB = msp(ctx, xb);
    std::vector<FieldElement> xta = mpe(MB, xa);
    std::vector<FieldElement> xtb = mpe(MA, xb);
    for (std::size_t i = 0; i < A.size(); ++i) A[i].first = xta[i];
    for (std::size_t i = 0; i < B.size(); ++i) B[i].first = xtb[i];
    SkewPoly I1 = interpolate(ctx, A);
    SkewPoly I2 = interpolate(ctx, B);
    return sp_add(fast_mul(I1, MB), fast_mul(I2, MA));
}

SkewPoly q_reverse_full(const SkewPoly& gamma) {
    const FieldCtx& ctx = gamma.ctx();
    const unsigned m = ctx.m();
    if (!gamma.linearized()) throw std::invalid_argument("q-reverse requires the linearized view");
    if (gamma.deg() >= static_cast<long>(m))
        throw std::invalid_argument("q-reverse input must have q-degree below m");
    std::vector<FieldElement> res(m, ctx.zero());
    for (unsigned i = 0; i < m; ++i) {
        FieldElement c = gamma.coeff((m - i) % m);
        if (!ctx.is_zero(c)) res[i] = ctx.frob(c, i);
    }
    return SkewPoly::from_coeffs(ctx, std::move(res), 1);
}

}  // namespace gabidulin
