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

#include "gabidulin/skew_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gabidulin {

using u64 = std::uint64_t;

namespace {

void check_same_ring(const SkewPoly& a, const SkewPoly& b) {
    if (a.ctx_ptr() != b.ctx_ptr() || a.aut() != b.aut())
        throw std::invalid_argument("mismatched skew polynomial ring");
}

unsigned normalize_aut(int aut, unsigned m) {
    long r = aut % static_cast<long>(m);
    if (r < 0) r += m;
    return static_cast<unsigned>(r);
}

// ---------------------------------------------------------------------------
// Strassen recursion on dense matrices over F_{q^m}.
//
// Odd dimensions are handled by whichever of zero-padding and rim-peeling
// costs fewer multiplications; the choice is made from the same closed-form
// cost model at every level, so counted multiplications are reproducible.
// ---------------------------------------------------------------------------

u64 strassen_cost(std::size_t d, std::vector<u64>& memo) {
    if (d < memo.size() && memo[d]) return memo[d];
    u64 r;
    if (d == 0)
        r = 0;
    else if (d == 1)
        r = 1;
    else if (d == 2)
        r = 7;
    else if (d % 2 == 0)
        r = 7 * strassen_cost(d / 2, memo);
    else {
        u64 e = d - 1;
        u64 peel = strassen_cost(d - 1, memo) + 3 * e * e + 3 * e + 1;
        u64 pad = 7 * strassen_cost((d + 1) / 2, memo);
        r = std::min(peel, pad);
    }
    if (d >= memo.size()) memo.resize(d + 1, 0);
    memo[d] = r;
    return r;
}

struct FeMat {
    std::size_t r = 0, c = 0;
    std::vector<FieldElement> a;
    FeMat() = default;
    FeMat(const FieldCtx& ctx, std::size_t rr, std::size_t cc)
        : r(rr), c(cc), a(rr * cc, ctx.zero()) {}
    FieldElement& at(std::size_t i, std::size_t j) { return a[i * c + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return a[i * c + j]; }
};

FeMat mat_block(const FeMat& M, std::size_t r0, std::size_t c0, std::size_t h,
                const FieldCtx& ctx) {
    FeMat B(ctx, h, h);
    for (std::size_t i = 0; i < h && r0 + i < M.r; ++i)
        for (std::size_t j = 0; j < h && c0 + j < M.c; ++j) B.at(i, j) = M.at(r0 + i, c0 + j);
    return B;
}

FeMat mat_add(const FieldCtx& ctx, const FeMat& A, const FeMat& B) {
    FeMat C(ctx, A.r, A.c);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = ctx.add(A.a[i], B.a[i]);
    return C;
}

FeMat mat_sub(const FieldCtx& ctx, const FeMat& A, const FeMat& B) {
    FeMat C(ctx, A.r, A.c);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = ctx.sub(A.a[i], B.a[i]);
    return C;
}

FeMat strassen_square(const FieldCtx& ctx, const FeMat& A, const FeMat& B,
                      std::vector<u64>& memo) {
    const std::size_t d = A.r;
    FeMat C(ctx, d, d);
    if (d == 0) return C;
    if (d == 1) {
        C.at(0, 0) = ctx.mul(A.at(0, 0), B.at(0, 0));
        return C;
    }
    if (d % 2 == 1 && d > 1) {
        std::size_t e = d - 1;
        u64 peel = strassen_cost(e, memo) + 3 * u64(e) * e + 3 * e + 1;
        u64 pad = 7 * strassen_cost((d + 1) / 2, memo);
        if (pad < peel) {
            FeMat PA(ctx, d + 1, d + 1), PB(ctx, d + 1, d + 1);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    PA.at(i, j) = A.at(i, j);
                    PB.at(i, j) = B.at(i, j);
                }
            FeMat PC = strassen_square(ctx, PA, PB, memo);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) C.at(i, j) = PC.at(i, j);
            return C;
        }
        // rim peeling: top-left e x e recursively, the border directly
        FeMat A11 = mat_block(A, 0, 0, e, ctx), B11 = mat_block(B, 0, 0, e, ctx);
        FeMat C11 = strassen_square(ctx, A11, B11, memo);
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t j = 0; j < e; ++j)
                C.at(i, j) = ctx.add(C11.at(i, j), ctx.mul(A.at(i, e), B.at(e, j)));
        for (std::size_t i = 0; i < e; ++i) {
            FieldElement acc = ctx.mul(A.at(i, 0), B.at(0, e));
            for (std::size_t k = 1; k < d; ++k)
                acc = ctx.add(acc, ctx.mul(A.at(i, k), B.at(k, e)));
            C.at(i, e) = acc;
        }
        for (std::size_t j = 0; j < e; ++j) {
            FieldElement acc = ctx.mul(A.at(e, 0), B.at(0, j));
            for (std::size_t k = 1; k < d; ++k)
                acc = ctx.add(acc, ctx.mul(A.at(e, k), B.at(k, j)));
            C.at(e, j) = acc;
        }
        {
            FieldElement acc = ctx.mul(A.at(e, 0), B.at(0, e));
            for (std::size_t k = 1; k < d; ++k)
                acc = ctx.add(acc, ctx.mul(A.at(e, k), B.at(k, e)));
            C.at(e, e) = acc;
        }
        return C;
    }
    const std::size_t h = d / 2;
    FeMat A11 = mat_block(A, 0, 0, h, ctx), A12 = mat_block(A, 0, h, h, ctx);
    FeMat A21 = mat_block(A, h, 0, h, ctx), A22 = mat_block(A, h, h, h, ctx);
    FeMat B11 = mat_block(B, 0, 0, h, ctx), B12 = mat_block(B, 0, h, h, ctx);
    FeMat B21 = mat_block(B, h, 0, h, ctx), B22 = mat_block(B, h, h, h, ctx);
    FeMat M1 = strassen_square(ctx, mat_add(ctx, A11, A22), mat_add(ctx, B11, B22), memo);
    FeMat M2 = strassen_square(ctx, mat_add(ctx, A21, A22), B11, memo);
    FeMat M3 = strassen_square(ctx, A11, mat_sub(ctx, B12, B22), memo);
    FeMat M4 = strassen_square(ctx, A22, mat_sub(ctx, B21, B11), memo);
    FeMat M5 = strassen_square(ctx, mat_add(ctx, A11, A12), B22, memo);
    FeMat M6 = strassen_square(ctx, mat_sub(ctx, A21, A11), mat_add(ctx, B11, B12), memo);
    FeMat M7 = strassen_square(ctx, mat_sub(ctx, A12, A22), mat_add(ctx, B21, B22), memo);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            FieldElement c11 = ctx.add(ctx.sub(ctx.add(M1.at(i, j), M4.at(i, j)), M5.at(i, j)),
                                       M7.at(i, j));
            FieldElement c12 = ctx.add(M3.at(i, j), M5.at(i, j));
            FieldElement c21 = ctx.add(M2.at(i, j), M4.at(i, j));
            FieldElement c22 = ctx.add(ctx.sub(M1.at(i, j), M2.at(i, j)),
                                       ctx.add(M3.at(i, j), M6.at(i, j)));
            C.at(i, j) = std::move(c11);
            C.at(i, j + h) = std::move(c12);
            C.at(i + h, j) = std::move(c21);
            C.at(i + h, j + h) = std::move(c22);
        }
    return C;
}

std::size_t ceil_sqrt(std::size_t n) {
    std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

// Fragment width minimizing the predicted multiplication count.
std::size_t pick_sstar(std::size_t s, std::size_t db, std::vector<u64>& memo) {
    std::size_t base = ceil_sqrt(s + 1);
    std::size_t best = base;
    u64 best_cost = ~u64(0);
    for (std::size_t cand = base; cand <= base + 4; ++cand) {
        std::size_t W = db + cand;
        u64 cost = u64(W / cand) * strassen_cost(cand, memo) + u64(cand) * cand * (W % cand);
        if (cost < best_cost) {
            best_cost = cost;
            best = cand;
        }
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// SkewPoly basics
// ---------------------------------------------------------------------------

void SkewPoly::trim() {
    while (!c_.empty() && ctx_->is_zero(c_.back())) c_.pop_back();
}

SkewPoly SkewPoly::zero(const FieldCtx& ctx, int aut) {
    SkewPoly p;
    p.ctx_ = &ctx;
    p.aut_ = normalize_aut(aut, ctx.m());
    return p;
}

SkewPoly SkewPoly::one(const FieldCtx& ctx, int aut) {
    return monomial(ctx, ctx.one(), 0, aut);
}

SkewPoly SkewPoly::monomial(const FieldCtx& ctx, const FieldElement& c, std::size_t exp,
                            int aut) {
    SkewPoly p = zero(ctx, aut);
    if (!ctx.is_zero(c)) {
        p.c_.assign(exp + 1, ctx.zero());
        p.c_[exp] = c;
    }
    return p;
}

SkewPoly SkewPoly::from_coeffs(const FieldCtx& ctx, std::vector<FieldElement> coeffs, int aut) {
    SkewPoly p = zero(ctx, aut);
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

bool SkewPoly::is_monic() const {
    return !c_.empty() && c_.back() == ctx_->one();
}

FieldElement SkewPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

bool SkewPoly::operator==(const SkewPoly& rhs) const {
    return ctx_ == rhs.ctx_ && aut_ == rhs.aut_ && c_ == rhs.c_;
}

// ---------------------------------------------------------------------------
// ring operations
// ---------------------------------------------------------------------------

SkewPoly sp_add(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    SkewPoly r = SkewPoly::zero(ctx, static_cast<int>(a.aut()));
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), ctx.zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size() && i < b.c_.size())
            r.c_[i] = ctx.add(a.c_[i], b.c_[i]);
        else if (i < a.c_.size())
            r.c_[i] = a.c_[i];
        else
            r.c_[i] = b.c_[i];
    }
    r.trim();
    return r;
}

SkewPoly sp_neg(const SkewPoly& a) {
    const FieldCtx& ctx = a.ctx();
    SkewPoly r = a;
    for (auto& c : r.c_) c = ctx.neg(c);
    return r;
}

SkewPoly sp_sub(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    SkewPoly r = SkewPoly::zero(ctx, static_cast<int>(a.aut()));
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), ctx.zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size() && i < b.c_.size())
            r.c_[i] = ctx.sub(a.c_[i], b.c_[i]);
        else if (i < a.c_.size())
            r.c_[i] = a.c_[i];
        else
            r.c_[i] = ctx.neg(b.c_[i]);
    }
    r.trim();
    return r;
}

SkewPoly sp_scale(const FieldElement& c, const SkewPoly& a) {
    const FieldCtx& ctx = a.ctx();
    if (ctx.is_zero(c)) return SkewPoly::zero(ctx, static_cast<int>(a.aut()));
    SkewPoly r = a;
    for (auto& x : r.c_)
        if (!ctx.is_zero(x)) x = ctx.mul(c, x);
    r.trim();
    return r;
}

SkewPoly naive_mul(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(ctx, aut);
    std::vector<FieldElement> res(a.c_.size() + b.c_.size() - 1, ctx.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (ctx.is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (ctx.is_zero(b.c_[j])) continue;
            FieldElement t = ctx.frob(b.c_[j], static_cast<long>(a.aut()) * static_cast<long>(i));
            res[i + j] = ctx.add(res[i + j], ctx.mul(a.c_[i], t));
        }
    }
    return SkewPoly::from_coeffs(ctx, std::move(res), aut);
}

SkewPoly fast_mul(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(ctx, aut);
    const std::size_t da = static_cast<std::size_t>(a.deg());
    const std::size_t db = static_cast<std::size_t>(b.deg());
    if (da == 0) return sp_scale(a.c_[0], b);
    if (db == 0) {
        std::vector<FieldElement> res(da + 1, ctx.zero());
        for (std::size_t t = 0; t <= da; ++t)
            if (!ctx.is_zero(a.c_[t]))
                res[t] = ctx.mul(a.c_[t],
                                 ctx.frob(b.c_[0], static_cast<long>(a.aut()) * static_cast<long>(t)));
        return SkewPoly::from_coeffs(ctx, std::move(res), aut);
    }
    if (std::min(da, db) <= 8) return naive_mul(a, b);

    const std::size_t s = std::max(da, db);
    std::vector<u64> memo;
    const std::size_t ss = pick_sstar(s, db, memo);
    const std::size_t frags = (da + 1 + ss - 1) / ss;
    const std::size_t W = db + ss;
    const long j = static_cast<long>(a.aut());

    FeMat A(ctx, ss, ss);
    for (std::size_t i = 0; i < frags; ++i)
        for (std::size_t t = 0; t < ss; ++t) {
            std::size_t idx = i * ss + t;
            if (idx <= da && !ctx.is_zero(a.c_[idx]))
                A.at(i, t) = ctx.frob(a.c_[idx], -j * static_cast<long>(i * ss));
        }
    FeMat B(ctx, ss, W);
    for (std::size_t i = 0; i < ss; ++i)
        for (std::size_t t = 0; t <= db; ++t)
            if (!ctx.is_zero(b.c_[t])) B.at(i, i + t) = ctx.frob(b.c_[t], j * static_cast<long>(i));

    FeMat C(ctx, ss, W);
    const std::size_t full = W / ss, rem = W % ss;
    for (std::size_t blk = 0; blk < full; ++blk) {
        FeMat Bk(ctx, ss, ss);
        for (std::size_t i = 0; i < ss; ++i)
            for (std::size_t t = 0; t < ss; ++t) Bk.at(i, t) = B.at(i, blk * ss + t);
        FeMat Ck = strassen_square(ctx, A, Bk, memo);
        for (std::size_t i = 0; i < ss; ++i)
            for (std::size_t t = 0; t < ss; ++t) C.at(i, blk * ss + t) = std::move(Ck.at(i, t));
    }
    for (std::size_t t = 0; t < rem; ++t) {
        std::size_t col = full * ss + t;
        for (std::size_t i = 0; i < ss; ++i) {
            FieldElement acc = ctx.mul(A.at(i, 0), B.at(0, col));
            for (std::size_t k = 1; k < ss; ++k)
                acc = ctx.add(acc, ctx.mul(A.at(i, k), B.at(k, col)));
            C.at(i, col) = std::move(acc);
        }
    }

    std::vector<FieldElement> res(da + db + 1, ctx.zero());
    for (std::size_t i = 0; i < frags; ++i)
        for (std::size_t u = 0; u < W; ++u) {
            std::size_t pos = i * ss + u;
            if (pos > da + db) break;
            if (!ctx.is_zero(C.at(i, u)))
                res[pos] = ctx.add(res[pos], ctx.frob(C.at(i, u), j * static_cast<long>(i * ss)));
        }
    return SkewPoly::from_coeffs(ctx, std::move(res), aut);
}

FieldElement sp_eval(const SkewPoly& a, const FieldElement& alpha) {
    const FieldCtx& ctx = a.ctx();
    if (!a.linearized())
        throw std::invalid_argument("evaluation requires the linearized view (aut = 1)");
    FieldElement res = ctx.zero();
    FieldElement v = alpha;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (!ctx.is_zero(a.coeffs()[i])) res = ctx.add(res, ctx.mul(a.coeffs()[i], v));
        if (i + 1 < a.coeffs().size()) v = ctx.frob(v, 1);
    }
    return res;
}

// ---------------------------------------------------------------------------
// division
// ---------------------------------------------------------------------------

std::pair<SkewPoly, SkewPoly> naive_right_div(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero() || a.deg() < b.deg())
        return {SkewPoly::zero(ctx, aut), a};
    const long l = b.deg();
    const long j = static_cast<long>(a.aut());
    std::vector<FieldElement> rho(a.coeffs());
    std::vector<FieldElement> chi(static_cast<std::size_t>(a.deg() - l) + 1, ctx.zero());
    FieldElement ib = ctx.inv(b.coeffs()[l]);
    long dr = a.deg();
    auto deg_of = [&](const std::vector<FieldElement>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (!ctx.is_zero(v[i])) return static_cast<long>(i);
        return -1L;
    };
    while (dr >= l) {
        long t = dr - l;
        FieldElement c = ctx.mul(rho[dr], ctx.frob(ib, j * t));
        chi[t] = c;
        for (long k = 0; k <= l; ++k) {
            if (ctx.is_zero(b.coeffs()[k])) continue;
            rho[t + k] = ctx.sub(rho[t + k], ctx.mul(c, ctx.frob(b.coeffs()[k], j * t)));
        }
        dr = deg_of(rho);
    }
    return {SkewPoly::from_coeffs(ctx, std::move(chi), aut),
            SkewPoly::from_coeffs(ctx, std::move(rho), aut)};
}

std::pair<SkewPoly, SkewPoly> naive_left_div(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero() || a.deg() < b.deg())
        return {SkewPoly::zero(ctx, aut), a};
    const long l = b.deg();
    const long j = static_cast<long>(a.aut());
    std::vector<FieldElement> rho(a.coeffs());
    std::vector<FieldElement> chi(static_cast<std::size_t>(a.deg() - l) + 1, ctx.zero());
    FieldElement ib = ctx.inv(b.coeffs()[l]);
    long dr = a.deg();
    auto deg_of = [&](const std::vector<FieldElement>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (!ctx.is_zero(v[i])) return static_cast<long>(i);
        return -1L;
    };
    while (dr >= l) {
        long t = dr - l;
        FieldElement c = ctx.frob(ctx.mul(ib, rho[dr]), -j * l);
        chi[t] = c;
        for (long k = 0; k <= l; ++k) {
            if (ctx.is_zero(b.coeffs()[k])) continue;
            rho[t + k] = ctx.sub(rho[t + k], ctx.mul(b.coeffs()[k], ctx.frob(c, j * k)));
        }
        dr = deg_of(rho);
    }
    return {SkewPoly::from_coeffs(ctx, std::move(chi), aut),
            SkewPoly::from_coeffs(ctx, std::move(rho), aut)};
}

// ---------------------------------------------------------------------------
// structural maps
// ---------------------------------------------------------------------------

SkewPoly reversal_tau(const SkewPoly& a, std::size_t s) {
    const FieldCtx& ctx = a.ctx();
    if (a.deg() > static_cast<long>(s)) throw std::invalid_argument("degree exceeds reversal bound");
    const unsigned m = ctx.m();
    int aut_out = static_cast<int>((m - a.aut()) % m);
    std::vector<FieldElement> res(s + 1, ctx.zero());
    for (std::size_t i = 0; i <= s; ++i) res[i] = a.coeff(s - i);
    return SkewPoly::from_coeffs(ctx, std::move(res), aut_out);
}

SkewPoly sp_truncate(const SkewPoly& a, std::size_t k) {
    const FieldCtx& ctx = a.ctx();
    std::vector<FieldElement> res(a.coeffs().begin(),
                                  a.coeffs().begin() +
                                      std::min<std::size_t>(k, a.coeffs().size()));
    return SkewPoly::from_coeffs(ctx, std::move(res), static_cast<int>(a.aut()));
}

SkewPoly sp_shift_up(const SkewPoly& a, std::size_t t) {
    const FieldCtx& ctx = a.ctx();
    if (a.is_zero()) return a;
    std::vector<FieldElement> res(a.coeffs().size() + t, ctx.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) res[i + t] = a.coeffs()[i];
    return SkewPoly::from_coeffs(ctx, std::move(res), static_cast<int>(a.aut()));
}

SkewPoly sp_theta(const SkewPoly& a) {
    const FieldCtx& ctx = a.ctx();
    const unsigned m = ctx.m();
    int aut_out = static_cast<int>((m - a.aut()) % m);
    std::vector<FieldElement> res(a.coeffs().size(), ctx.zero());
    const long j = static_cast<long>(a.aut());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (!ctx.is_zero(a.coeffs()[i]))
            res[i] = ctx.frob(a.coeffs()[i], -j * static_cast<long>(i));
    return SkewPoly::from_coeffs(ctx, std::move(res), aut_out);
}

SkewPoly sp_fold_mod_xm(const SkewPoly& a) {
    const FieldCtx& ctx = a.ctx();
    const unsigned m = ctx.m();
    std::vector<FieldElement> res(std::min<std::size_t>(m, a.coeffs().size()), ctx.zero());
    res.resize(m, ctx.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i < m)
            res[i] = a.coeffs()[i];
        else if (!ctx.is_zero(a.coeffs()[i]))
            res[i % m] = ctx.add(res[i % m], a.coeffs()[i]);
    }
    return SkewPoly::from_coeffs(ctx, std::move(res), static_cast<int>(a.aut()));
}

// ---------------------------------------------------------------------------
// Newton inverse and fast division
// ---------------------------------------------------------------------------

SkewPoly newton_right_inverse(const SkewPoly& c, std::size_t k, unsigned* iterations) {
    const FieldCtx& ctx = c.ctx();
    if (k < 1) throw std::invalid_argument("inverse precision must be at least 1");
    if (c.is_zero() || ctx.is_zero(c.coeff(0)))
        throw std::domain_error("constant coefficient must be nonzero");
    std::vector<std::size_t> ladder;
    for (std::size_t t = k; t > 1; t = (t + 1) / 2) ladder.push_back(t);
    std::reverse(ladder.begin(), ladder.end());
    if (iterations) *iterations = static_cast<unsigned>(ladder.size());

    SkewPoly h = SkewPoly::monomial(ctx, ctx.inv(c.coeff(0)), 0, static_cast<int>(c.aut()));
    for (std::size_t t : ladder) {
        std::size_t t2 = (t + 1) / 2;
        SkewPoly e = sp_truncate(fast_mul(sp_truncate(c, t), h), t);
        // e == 1 + g * x^{t2}; refine h by subtracting (h*g) * x^{t2}
        std::vector<FieldElement> gof;
        for (std::size_t i = t2; i < t; ++i) gof.push_back(e.coeff(i));
        SkewPoly g = SkewPoly::from_coeffs(ctx, std::move(gof), static_cast<int>(c.aut()));
        if (!g.is_zero()) {
            SkewPoly corr = sp_truncate(fast_mul(h, g), t - t2);
            h = sp_sub(h, sp_shift_up(corr, t2));
        }
    }
    return h;
}

std::pair<SkewPoly, SkewPoly> fast_right_div(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero() || a.deg() < b.deg())
        return {SkewPoly::zero(ctx, aut), a};
    const long s = a.deg(), l = b.deg();
    const long j = static_cast<long>(a.aut());
    if (l == 0) {
        FieldElement ib = ctx.inv(b.coeffs()[0]);
        std::vector<FieldElement> chi(static_cast<std::size_t>(s) + 1, ctx.zero());
        for (long t = 0; t <= s; ++t)
            if (!ctx.is_zero(a.coeffs()[t]))
                chi[t] = ctx.mul(a.coeffs()[t], ctx.frob(ib, j * t));
        return {SkewPoly::from_coeffs(ctx, std::move(chi), aut), SkewPoly::zero(ctx, aut)};
    }
    const std::size_t k = static_cast<std::size_t>(s - l) + 1;
    // b^{(s-l)}: all coefficients twisted by sigma^{s-l}
    std::vector<FieldElement> btw(static_cast<std::size_t>(l) + 1, ctx.zero());
    for (long i = 0; i <= l; ++i)
        if (!ctx.is_zero(b.coeffs()[i])) btw[i] = ctx.frob(b.coeffs()[i], j * (s - l));
    SkewPoly c = reversal_tau(SkewPoly::from_coeffs(ctx, std::move(btw), aut),
                              static_cast<std::size_t>(l));
    SkewPoly atil = reversal_tau(a, static_cast<std::size_t>(s));
    SkewPoly d = newton_right_inverse(c, k);
    SkewPoly chirev = sp_truncate(fast_mul(sp_truncate(atil, k), d), k);
    SkewPoly chi = reversal_tau(chirev, static_cast<std::size_t>(s - l));
    SkewPoly rho = sp_sub(a, fast_mul(chi, b));
    return {std::move(chi), std::move(rho)};
}

std::pair<SkewPoly, SkewPoly> fast_left_div(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [chi_t, rho_t] = fast_right_div(sp_theta(a), sp_theta(b));
    return {sp_theta(chi_t), sp_theta(rho_t)};
}

SkewPoly sp_mod(const SkewPoly& a, const SkewPoly& c) { return fast_right_div(a, c).second; }

// ---------------------------------------------------------------------------
// linearized extended Euclidean algorithm with stopping condition
// ---------------------------------------------------------------------------

EeaOutput leea(const SkewPoly& a, const SkewPoly& b, long d_stop) {
    check_same_ring(a, b);
    const FieldCtx& ctx = a.ctx();
    const int aut = static_cast<int>(a.aut());
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("leea of two zero polynomials");
    if (d_stop < 1) throw std::invalid_argument("stopping degree must be at least 1");
    SkewPoly r0 = a, u0 = SkewPoly::one(ctx, aut), v0 = SkewPoly::zero(ctx, aut);
    SkewPoly r1 = b, u1 = SkewPoly::zero(ctx, aut), v1 = SkewPoly::one(ctx, aut);
    if (r0.deg() < d_stop) return {r0, u0, v0};
    if (r1.deg() < d_stop) return {r1, u1, v1};
    while (true) {
        auto [chi, r2] = fast_right_div(r0, r1);
        SkewPoly u2 = sp_sub(u0, fast_mul(chi, u1));
        SkewPoly v2 = sp_sub(v0, fast_mul(chi, v1));
        r0 = std::move(r1);
        u0 = std::move(u1);
        v0 = std::move(v1);
        r1 = std::move(r2);
        u1 = std::move(u2);
        v1 = std::move(v2);
        if (r1.deg() < d_stop) return {r1, u1, v1};
    }
}

SkewPoly random_poly(const FieldCtx& ctx, long deg, std::mt19937_64& rng, int aut) {
    if (deg < 0) return SkewPoly::zero(ctx, aut);
    std::vector<FieldElement> c(static_cast<std::size_t>(deg) + 1, ctx.zero());
    for (auto& x : c) x = ctx.random_element(rng);
    while (ctx.is_zero(c.back())) c.back() = ctx.random_element(rng);
    return SkewPoly::from_coeffs(ctx, std::move(c), aut);
}

}  // namespace gabidulin
