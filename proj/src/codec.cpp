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

#include "gabidulin/codec.hpp"

#include <stdexcept>

namespace gabidulin {

namespace {

SkewPoly xm_minus_x0(const FieldCtx& ctx) {
    std::vector<FieldElement> c(ctx.m() + 1, ctx.zero());
    c[0] = ctx.neg(ctx.one());
    c[ctx.m()] = ctx.one();
    return SkewPoly::from_coeffs(ctx, std::move(c), 1);
}

// d_i^C = sum_j B^C_{i,j} beta^{[j-1]}: with normal-basis coordinates the
// rows of B^C are the coordinate vectors directly.
std::vector<FieldElement> column_erasure_elements(const FieldCtx& ctx, const FqMatrix& bc) {
    std::vector<FieldElement> d;
    d.reserve(bc.rows);
    for (std::size_t i = 0; i < bc.rows; ++i) {
        std::vector<std::uint32_t> coords(ctx.m(), 0);
        for (std::size_t j = 0; j < bc.cols; ++j) coords[j] = bc.at(i, j);
        d.push_back(ctx.from_coords(coords));
    }
    return d;
}

// Gamma^C and g~^C = q_reverse(Gamma^C) * x^[gamma] mod (x^[m] - x^[0]).
std::pair<SkewPoly, SkewPoly> gamma_and_gtilde(const FieldCtx& ctx, const FqMatrix& bc) {
    std::vector<FieldElement> d = column_erasure_elements(ctx, bc);
    SkewPoly gammaC = msp(ctx, d);
    SkewPoly gtil = sp_fold_mod_xm(sp_shift_up(q_reverse_full(gammaC), bc.rows));
    return {std::move(gammaC), std::move(gtil)};
}

DecodeOutcome gao_pipeline(const CodeParams& cp, const std::vector<FieldElement>& r,
                           const SkewPoly& modulus, bool central, const SkewPoly& lam_row,
                           const SkewPoly& g_tilde, std::size_t rho, std::size_t gamma,
                           DecodeTrace* trace) {
    const FieldCtx& ctx = *cp.ctx;
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    pts.reserve(cp.n);
    for (std::size_t i = 0; i < cp.n; ++i) pts.emplace_back(cp.g[i], r[i]);
    SkewPoly r_interp = interpolate(ctx, pts);
    if (trace) trace->deg_r_interp = r_interp.deg();

    SkewPoly prod = fast_mul(fast_mul(lam_row, r_interp), g_tilde);
    SkewPoly ybar = central ? sp_fold_mod_xm(prod) : sp_mod(prod, modulus);
    if (trace) trace->deg_y = ybar.deg();

    const long d_stop =
        static_cast<long>((cp.n + cp.k + rho + gamma) / 2);
    EeaOutput eea = leea(ybar, modulus, d_stop);
    if (eea.u.is_zero()) return {};

    FieldElement lead_inv = ctx.inv(eea.u.coeff(static_cast<std::size_t>(eea.u.deg())));
    SkewPoly u_monic = sp_scale(lead_inv, eea.u);
    SkewPoly r_scaled = sp_scale(lead_inv, eea.r);
    if (trace) {
        trace->deg_locator = u_monic.deg();
        trace->locator = u_monic;
    }

    auto [q_left, rem_left] = fast_left_div(r_scaled, fast_mul(u_monic, lam_row));
    if (!rem_left.is_zero()) return {};
    auto [q_right, rem_right] = fast_right_div(q_left, g_tilde);
    if (!rem_right.is_zero()) return {};
    if (q_right.deg() >= static_cast<long>(cp.k)) return {};
    return {std::move(q_right)};
}

}  // namespace

CodeParams make_code(const FieldCtx& ctx, std::size_t n, std::size_t k, bool normal_basis) {
    if (!normal_basis)
        throw std::invalid_argument("explicit evaluation points required without the normal basis");
    if (n > ctx.m()) throw std::invalid_argument("code length n exceeds m");
    if (k < 1 || k > n) throw std::invalid_argument("dimension k must satisfy 1 <= k <= n");
    CodeParams cp;
    cp.ctx = &ctx;
    cp.n = n;
    cp.k = k;
    cp.normal_basis = true;
    for (std::size_t i = 0; i < n; ++i) cp.g.push_back(ctx.basis_element(static_cast<unsigned>(i)));
    return cp;
}

CodeParams make_code(const FieldCtx& ctx, std::size_t n, std::size_t k,
                     std::vector<FieldElement> g) {
    if (n > ctx.m()) throw std::invalid_argument("code length n exceeds m");
    if (k < 1 || k > n) throw std::invalid_argument("dimension k must satisfy 1 <= k <= n");
    if (g.size() != n) throw std::invalid_argument("need exactly n evaluation points");
    if (!independent_over_fq(ctx, g))
        throw std::invalid_argument("evaluation points must be linearly independent over F_q");
    CodeParams cp;
    cp.ctx = &ctx;
    cp.n = n;
    cp.k = k;
    cp.g = std::move(g);
    cp.normal_basis = true;
    for (std::size_t i = 0; i < n && cp.normal_basis; ++i)
        if (!(cp.g[i] == ctx.basis_element(static_cast<unsigned>(i)))) cp.normal_basis = false;
    return cp;
}

SkewPoly code_modulus(const CodeParams& cp) {
    const FieldCtx& ctx = *cp.ctx;
    if (cp.normal_basis && cp.n == ctx.m()) return xm_minus_x0(ctx);
    return msp(ctx, cp.g);
}

std::vector<FieldElement> encode(const CodeParams& cp, const SkewPoly& f) {
    if (f.ctx_ptr() != cp.ctx) throw std::invalid_argument("information polynomial field mismatch");
    if (f.deg() >= static_cast<long>(cp.k))
        throw std::invalid_argument("information polynomial degree must be below k");
    if (!f.is_zero() && !f.linearized())
        throw std::invalid_argument("information polynomial must be linearized");
    return mpe(f.is_zero() ? SkewPoly::zero(*cp.ctx, 1) : f, cp.g);
}

DecodeOutcome decode_errors_only(const CodeParams& cp, const std::vector<FieldElement>& r,
                                 DecodeTrace* trace) {
    const FieldCtx& ctx = *cp.ctx;
    if (r.size() != cp.n) throw std::invalid_argument("received word length mismatch");
    bool central = cp.normal_basis && cp.n == ctx.m();
    SkewPoly modulus = code_modulus(cp);
    SkewPoly one = SkewPoly::one(ctx, 1);
    if (trace) {
        trace->deg_gamma = 0;
        trace->deg_g_tilde = 0;
    }
    return gao_pipeline(cp, r, modulus, central, one, one, 0, 0, trace);
}

DecodeOutcome decode_errors_erasures(const CodeParams& cp, const std::vector<FieldElement>& r,
                                     const ErasureSideInfo& side, DecodeTrace* trace) {
    const FieldCtx& ctx = *cp.ctx;
    if (cp.n != ctx.m() || !cp.normal_basis)
        throw std::invalid_argument(
            "error-and-erasure decoding requires n = m and normal-basis evaluation points");
    if (!side.a_row.empty() && !independent_over_fq(ctx, side.a_row))
        throw std::invalid_argument("row-erasure basis a^R must be independent over F_q");
    const std::size_t gamma = side.b_col.rows;
    if (gamma > 0) {
        if (side.b_col.cols != cp.n)
            throw std::invalid_argument("column-erasure basis B^C must have n columns");
        if (fq_rank(ctx, side.b_col) != gamma)
            throw std::invalid_argument("column-erasure basis B^C must have full rank");
    }
    if (r.size() != cp.n) throw std::invalid_argument("received word length mismatch");

    const std::size_t rho = side.a_row.size();
    SkewPoly lam_row =
        rho ? msp(ctx, side.a_row) : SkewPoly::one(ctx, 1);
    SkewPoly g_tilde = SkewPoly::one(ctx, 1);
    SkewPoly gammaC = SkewPoly::one(ctx, 1);
    if (gamma) {
        auto [gc, gt] = gamma_and_gtilde(ctx, side.b_col);
        gammaC = std::move(gc);
        g_tilde = std::move(gt);
    }
    if (trace) {
        trace->deg_gamma = gammaC.deg();
        trace->deg_g_tilde = g_tilde.deg();
    }
    return gao_pipeline(cp, r, xm_minus_x0(ctx), true, lam_row, g_tilde, rho, gamma, trace);
}

bool verify_key_equation(const CodeParams& cp, const SkewPoly& f,
                         const std::vector<FieldElement>& r,
                         const std::vector<FieldElement>& a_full, const ErasureSideInfo& side) {
    const FieldCtx& ctx = *cp.ctx;
    if (cp.n != ctx.m() || !cp.normal_basis)
        throw std::invalid_argument("key equation requires n = m and normal-basis points");
    SkewPoly lam_row = side.a_row.empty() ? SkewPoly::one(ctx, 1) : msp(ctx, side.a_row);
    SkewPoly g_tilde = SkewPoly::one(ctx, 1);
    if (side.b_col.rows) g_tilde = gamma_and_gtilde(ctx, side.b_col).second;

    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (std::size_t i = 0; i < cp.n; ++i) pts.emplace_back(cp.g[i], r[i]);
    SkewPoly r_interp = interpolate(ctx, pts);
    SkewPoly ybar = sp_fold_mod_xm(fast_mul(fast_mul(lam_row, r_interp), g_tilde));

    std::vector<FieldElement> images;
    for (const auto& a : a_full) images.push_back(sp_eval(lam_row, a));
    SkewPoly lam_err = msp_span(ctx, images);

    SkewPoly lhs = sp_fold_mod_xm(fast_mul(lam_err, ybar));
    SkewPoly rhs =
        sp_fold_mod_xm(fast_mul(fast_mul(fast_mul(lam_err, lam_row), f), g_tilde));
    return lhs == rhs;
}

}  // namespace gabidulin
