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

#include <doctest.h>

#include <random>

#include "gabidulin/subspace.hpp"

using namespace gabidulin;

namespace {

SkewPoly x_pow(const FieldCtx& ctx, std::size_t e) {
    return SkewPoly::monomial(ctx, ctx.one(), e, 1);
}

FieldElement pow_elem(const FieldCtx& ctx, FieldElement b, std::uint64_t e) {
    FieldElement acc = ctx.one();
    while (e) {
        if (e & 1) acc = ctx.mul(acc, b);
        b = ctx.mul(b, b);
        e >>= 1;
    }
    return acc;
}

// One element at a time, straight from the two-term recursion; the oracle
// for the divide-and-conquer construction.
SkewPoly oracle_msp(const FieldCtx& ctx, const std::vector<FieldElement>& basis) {
    SkewPoly M = SkewPoly::one(ctx, 1);
    for (const auto& u : basis) {
        FieldElement e = sp_eval(M, u);
        REQUIRE(!ctx.is_zero(e));
        std::vector<FieldElement> bc{ctx.neg(pow_elem(ctx, e, ctx.q() - 1)), ctx.one()};
        M = naive_mul(SkewPoly::from_coeffs(ctx, std::move(bc), 1), M);
    }
    return M;
}

std::vector<FieldElement> random_basis(const FieldCtx& ctx, std::size_t s,
                                       std::mt19937_64& rng) {
    std::vector<FieldElement> v;
    do {
        v.clear();
        for (std::size_t i = 0; i < s; ++i) v.push_back(ctx.random_element(rng));
    } while (!independent_over_fq(ctx, v));
    return v;
}

}  // namespace

TEST_CASE("msp base case: single nonzero element") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 1);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        FieldElement u = ctx.random_element(rng);
        if (ctx.is_zero(u)) continue;
        SkewPoly M = msp(ctx, {u});
        std::vector<FieldElement> expect{ctx.neg(pow_elem(ctx, u, ctx.q() - 1)), ctx.one()};
        CHECK(M == SkewPoly::from_coeffs(ctx, expect, 1));
        CHECK(ctx.is_zero(sp_eval(M, u)));
    }
}

TEST_CASE("msp of the full normal basis is x^[m] - x^[0]") {
    for (unsigned m : {4u, 9u, 16u}) {
        FieldCtx ctx = FieldCtx::build(2, 1, m, 3);
        std::vector<FieldElement> basis;
        for (unsigned i = 0; i < m; ++i) basis.push_back(ctx.basis_element(i));
        SkewPoly M = msp(ctx, basis);
        SkewPoly expect = sp_add(x_pow(ctx, m), sp_neg(x_pow(ctx, 0)));
        CHECK(M == expect);
    }
}

TEST_CASE("msp over F_4: the whole field gives x^4 + x") {
    FieldCtx ctx = FieldCtx::build(2, 1, 2, 1);
    FieldElement z = ctx.from_poly_coords({0, 1});
    FieldElement z2 = ctx.mul(z, z);
    SkewPoly M = msp(ctx, {z, z2});
    CHECK(M == sp_add(x_pow(ctx, 2), x_pow(ctx, 0)));
    for (std::uint64_t v = 0; v < 4; ++v)
        CHECK(ctx.is_zero(sp_eval(M, ctx.from_integer(v))));
}

TEST_CASE("msp: monic, degree = dimension, vanishing on the span") {
    FieldCtx ctx = FieldCtx::build(2, 1, 24, 5);
    std::mt19937_64 rng(7);
    for (std::size_t s : {1u, 2u, 3u, 5u, 8u, 12u, 16u}) {
        auto basis = random_basis(ctx, s, rng);
        SkewPoly M = msp(ctx, basis);
        CHECK(M.is_monic());
        CHECK(M.deg() == static_cast<long>(s));
        CHECK(M == oracle_msp(ctx, basis));
        for (int t = 0; t < 100; ++t) {
            FieldElement combo = ctx.zero();
            for (const auto& u : basis)
                if (rng() & 1) combo = ctx.add(combo, u);
            CHECK(ctx.is_zero(sp_eval(M, combo)));
        }
    }
}

TEST_CASE("msp with q = 3 coefficients") {
    FieldCtx ctx = FieldCtx::build(3, 1, 6, 9);
    std::mt19937_64 rng(11);
    for (std::size_t s : {1u, 2u, 4u}) {
        auto basis = random_basis(ctx, s, rng);
        SkewPoly M = msp(ctx, basis);
        CHECK(M == oracle_msp(ctx, basis));
        for (int t = 0; t < 50; ++t) {
            FieldElement combo = ctx.zero();
            for (const auto& u : basis)
                combo = ctx.add(combo, ctx.scale_fq(static_cast<std::uint32_t>(rng() % 3), u));
            CHECK(ctx.is_zero(sp_eval(M, combo)));
        }
    }
}

TEST_CASE("msp rejects dependent inputs; msp_span absorbs them") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 13);
    std::mt19937_64 rng(15);
    auto basis = random_basis(ctx, 4, rng);
    auto dependent = basis;
    dependent.push_back(ctx.add(basis[0], basis[2]));
    CHECK_THROWS_AS((void)msp(ctx, dependent), std::invalid_argument);
    CHECK_THROWS_AS((void)msp(ctx, {ctx.zero()}), std::invalid_argument);

    SkewPoly M = msp_span(ctx, dependent);
    CHECK(M.deg() == 4);
    CHECK(M == msp(ctx, basis));
    CHECK(msp_span(ctx, {}).deg() == 0);
}

TEST_CASE("mpe equals pointwise evaluation") {
    FieldCtx ctx = FieldCtx::build(2, 1, 40, 17);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        std::size_t s = 1 + rng() % 24;
        long da = static_cast<long>(rng() % (s + 8));  // sometimes deg a >= s
        SkewPoly a = random_poly(ctx, da, rng);
        std::vector<FieldElement> pts;
        for (std::size_t i = 0; i < s; ++i) pts.push_back(ctx.random_element(rng));
        if (t % 3 == 0 && s > 1) pts[s - 1] = pts[0];                // duplicate
        if (t % 4 == 0 && s > 2) pts[1] = ctx.add(pts[0], pts[2]);   // dependent
        if (t % 5 == 0) pts[0] = ctx.zero();
        auto fastv = mpe(a, pts);
        REQUIRE(fastv.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(fastv[i] == sp_eval(a, pts[i]));
    }
    CHECK(mpe(random_poly(ctx, 3, rng), {}).empty());
}

TEST_CASE("mpe special polynomials") {
    FieldCtx ctx = FieldCtx::build(2, 1, 24, 21);
    std::mt19937_64 rng(23);
    auto pts = random_basis(ctx, 10, rng);
    // identity polynomial maps the points to themselves
    auto idv = mpe(x_pow(ctx, 0), pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(idv[i] == pts[i]);
    // the subspace polynomial annihilates them
    auto zv = mpe(msp(ctx, pts), pts);
    for (const auto& v : zv) CHECK(ctx.is_zero(v));
}

TEST_CASE("interpolation: base case and dependence errors") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 25);
    std::mt19937_64 rng(27);
    FieldElement x = ctx.random_element(rng), y = ctx.random_element(rng);
    while (ctx.is_zero(x)) x = ctx.random_element(rng);
    SkewPoly I = interpolate(ctx, {{x, y}});
    CHECK(I == SkewPoly::monomial(ctx, ctx.mul(y, ctx.inv(x)), 0, 1));
    CHECK(sp_eval(I, x) == y);

    CHECK_THROWS_AS((void)interpolate(ctx, {{ctx.zero(), y}}), std::invalid_argument);
    auto basis = random_basis(ctx, 3, rng);
    std::vector<std::pair<FieldElement, FieldElement>> dep;
    for (const auto& b : basis) dep.emplace_back(b, ctx.random_element(rng));
    dep.emplace_back(ctx.add(basis[0], basis[1]), ctx.random_element(rng));
    CHECK_THROWS_AS((void)interpolate(ctx, dep), std::invalid_argument);
}

TEST_CASE("interpolation over F_4 matches the solved system") {
    FieldCtx ctx = FieldCtx::build(2, 1, 2, 1);
    FieldElement z = ctx.from_poly_coords({0, 1});
    FieldElement z2 = ctx.mul(z, z);
    SkewPoly I = interpolate(ctx, {{z, ctx.one()}, {z2, ctx.one()}});
    CHECK(I == sp_add(x_pow(ctx, 1), x_pow(ctx, 0)));
    CHECK(sp_eval(I, z) == ctx.one());
    CHECK(sp_eval(I, z2) == ctx.one());
}

TEST_CASE("interpolate and evaluate are mutually inverse") {
    FieldCtx ctx = FieldCtx::build(2, 1, 32, 29);
    std::mt19937_64 rng(31);
    for (std::size_t s : {1u, 2u, 5u, 9u, 16u, 24u}) {
        auto xs = random_basis(ctx, s, rng);
        // recover a random f in L^{<s} from its graph
        SkewPoly f = random_poly(ctx, static_cast<long>(rng() % s), rng);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (const auto& x : xs) pts.emplace_back(x, sp_eval(f, x));
        CHECK(interpolate(ctx, pts) == f);
        // and pass through arbitrary ordinates
        std::vector<std::pair<FieldElement, FieldElement>> pts2;
        for (const auto& x : xs) pts2.emplace_back(x, ctx.random_element(rng));
        SkewPoly g = interpolate(ctx, pts2);
        CHECK(g.deg() < static_cast<long>(s));
        for (const auto& [x, y] : pts2) CHECK(sp_eval(g, x) == y);
    }
}

TEST_CASE("full q-reverse") {
    FieldCtx ctx = FieldCtx::build(2, 1, 8, 33);
    const unsigned m = ctx.m();
    std::mt19937_64 rng(35);
    CHECK(q_reverse_full(x_pow(ctx, 0)) == x_pow(ctx, 0));
    CHECK(q_reverse_full(x_pow(ctx, 1)) == x_pow(ctx, m - 1));
    CHECK_THROWS_AS((void)q_reverse_full(x_pow(ctx, m)), std::invalid_argument);

    // after reversal and shifting by gamma, the fold has q-degree <= gamma
    for (int t = 0; t < 40; ++t) {
        long gamma = static_cast<long>(rng() % m);
        SkewPoly g = random_poly(ctx, gamma, rng);
        SkewPoly gbar = q_reverse_full(g);
        SkewPoly gt = sp_fold_mod_xm(sp_shift_up(gbar, static_cast<std::size_t>(gamma)));
        CHECK(gt.deg() <= gamma);
    }
    CHECK(sp_fold_mod_xm(sp_shift_up(q_reverse_full(x_pow(ctx, 0)), 0)) == x_pow(ctx, 0));
}
