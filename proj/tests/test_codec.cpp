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

#include "gabidulin/channel.hpp"
#include "gabidulin/codec.hpp"

using namespace gabidulin;

namespace {

SkewPoly random_info(const CodeParams& cp, std::mt19937_64& rng) {
    std::vector<FieldElement> c(cp.k, cp.ctx->zero());
    for (auto& x : c) x = cp.ctx->random_element(rng);
    return SkewPoly::from_coeffs(*cp.ctx, std::move(c), 1);
}

}  // namespace

TEST_CASE("code construction validates its parameters") {
    FieldCtx ctx = FieldCtx::build(2, 1, 8, 1);
    CHECK_THROWS_AS((void)make_code(ctx, 9, 4, true), std::invalid_argument);  // n exceeds m
    CHECK_THROWS_AS((void)make_code(ctx, 8, 0, true), std::invalid_argument);
    CHECK_THROWS_AS((void)make_code(ctx, 8, 9, true), std::invalid_argument);
    std::mt19937_64 rng(1);
    std::vector<FieldElement> dep{ctx.basis_element(0), ctx.basis_element(1),
                                  ctx.add(ctx.basis_element(0), ctx.basis_element(1))};
    CHECK_THROWS_AS((void)make_code(ctx, 3, 2, dep), std::invalid_argument);

    CodeParams cp = make_code(ctx, 8, 3, true);
    CHECK(cp.normal_basis);
    CHECK(cp.g.size() == 8);
    // explicit normal-basis points are recognized
    CodeParams cp2 = make_code(ctx, 8, 3, cp.g);
    CHECK(cp2.normal_basis);
}

TEST_CASE("code modulus") {
    FieldCtx ctx = FieldCtx::build(2, 1, 8, 2);
    CodeParams full = make_code(ctx, 8, 3, true);
    SkewPoly mo = code_modulus(full);
    CHECK(mo.deg() == 8);
    // agrees with the subspace polynomial of the points
    CHECK(mo == msp(ctx, full.g));

    CodeParams part = make_code(ctx, 5, 2, std::vector<FieldElement>(full.g.begin(),
                                                                     full.g.begin() + 5));
    CHECK(code_modulus(part) == msp(ctx, part.g));
}

TEST_CASE("encoding") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 3);
    CodeParams cp = make_code(ctx, 12, 4, true);
    std::mt19937_64 rng(4);

    auto zero_cw = encode(cp, SkewPoly::zero(ctx, 1));
    for (const auto& c : zero_cw) CHECK(ctx.is_zero(c));

    auto id_cw = encode(cp, SkewPoly::one(ctx, 1));
    for (std::size_t i = 0; i < cp.n; ++i) CHECK(id_cw[i] == cp.g[i]);

    CHECK_THROWS_AS((void)encode(cp, random_poly(ctx, 4, rng)), std::invalid_argument);

    // MRD: distinct codewords differ by rank at least n - k + 1
    for (int t = 0; t < 20; ++t) {
        SkewPoly f1 = random_info(cp, rng);
        SkewPoly f2 = random_info(cp, rng);
        if (f1 == f2) continue;
        auto c1 = encode(cp, f1);
        auto c2 = encode(cp, f2);
        std::vector<FieldElement> diff(cp.n);
        for (std::size_t i = 0; i < cp.n; ++i) diff[i] = ctx.sub(c1[i], c2[i]);
        CHECK(rank_of_word(ctx, diff) >= cp.n - cp.k + 1);
    }
}

TEST_CASE("noiseless decoding returns the information polynomial") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 5);
    CodeParams cp = make_code(ctx, 12, 4, true);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        SkewPoly f = random_info(cp, rng);
        auto r = encode(cp, f);
        DecodeOutcome noside = decode_errors_erasures(cp, r, {});
        REQUIRE(noside.ok());
        CHECK(*noside.f == f);
        DecodeOutcome plain = decode_errors_only(cp, r);
        REQUIRE(plain.ok());
        CHECK(*plain.f == f);
    }
}

TEST_CASE("round trips across the error/erasure grid") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 7);
    CodeParams cp = make_code(ctx, 12, 4, true);  // n - k = 8
    std::mt19937_64 rng(8);
    DecodeTrace trace;
    for (std::size_t tau = 0; 2 * tau <= 8; ++tau)
        for (std::size_t rho = 0; 2 * tau + rho <= 8; rho += 2)
            for (std::size_t gamma = 0; 2 * tau + rho + gamma <= 8; gamma += 3)
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    SkewPoly f = random_info(cp, rng);
                    Transmission tx = simulate_transmission(cp, f, tau, rho, gamma, seed * 77 + tau);
                    DecodeOutcome out = decode_errors_erasures(cp, tx.r, tx.side, &trace);
                    REQUIRE(out.ok());
                    CHECK(*out.f == f);
                    CHECK(trace.deg_r_interp < static_cast<long>(cp.n));
                    CHECK(trace.deg_gamma == static_cast<long>(gamma));
                    CHECK(trace.deg_g_tilde <= static_cast<long>(gamma));
                    CHECK(trace.deg_y < static_cast<long>(ctx.m()));
                    CHECK(trace.deg_locator <= static_cast<long>(tau));
                }
}

TEST_CASE("errors-only decoding with n below m and arbitrary points") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 9);
    std::mt19937_64 rng(10);
    std::vector<FieldElement> g;
    do {
        g.clear();
        for (int i = 0; i < 8; ++i) g.push_back(ctx.random_element(rng));
    } while (!independent_over_fq(ctx, g));
    CodeParams cp = make_code(ctx, 8, 2, std::move(g));  // corrects rank up to 3
    for (std::size_t tau = 0; tau <= 3; ++tau)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            SkewPoly f = random_info(cp, rng);
            Transmission tx = simulate_transmission(cp, f, tau, 0, 0, 1000 + seed);
            DecodeOutcome out = decode_errors_only(cp, tx.r);
            REQUIRE(out.ok());
            CHECK(*out.f == f);
        }
}

TEST_CASE("decoding beyond the radius keeps the output contract") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 11);
    CodeParams cp = make_code(ctx, 12, 4, true);
    std::mt19937_64 rng(12);
    std::size_t failures = 0, successes = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SkewPoly f = random_info(cp, rng);
        Transmission tx = simulate_transmission(cp, f, 5, 0, 0, seed);  // 2*5 > 8
        DecodeOutcome out = decode_errors_erasures(cp, tx.r, tx.side);
        if (out.ok()) {
            ++successes;
            CHECK(out.f->deg() < static_cast<long>(cp.k));
        } else {
            ++failures;
        }
    }
    CHECK(failures + successes == 20);
    CHECK(failures > 0);  // rank-5 errors on an 8-correcting budget must mostly fail
}

TEST_CASE("erasure decoder validates its preconditions") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 13);
    std::mt19937_64 rng(14);
    CodeParams shortcode = make_code(ctx, 8, 3, true);
    std::vector<FieldElement> r(8, ctx.zero());
    CHECK_THROWS_AS((void)decode_errors_erasures(shortcode, r, {}), std::invalid_argument);

    CodeParams cp = make_code(ctx, 12, 4, true);
    std::vector<FieldElement> rr(12, ctx.zero());
    ErasureSideInfo bad;
    bad.a_row = {ctx.basis_element(0), ctx.basis_element(0)};  // dependent
    CHECK_THROWS_AS((void)decode_errors_erasures(cp, rr, bad), std::invalid_argument);

    ErasureSideInfo badbc;
    badbc.b_col = FqMatrix(2, 12);  // rank 0 != 2
    CHECK_THROWS_AS((void)decode_errors_erasures(cp, rr, badbc), std::invalid_argument);

    ErasureSideInfo badcols;
    badcols.b_col = FqMatrix(1, 5);
    badcols.b_col.at(0, 0) = 1;
    CHECK_THROWS_AS((void)decode_errors_erasures(cp, rr, badcols), std::invalid_argument);

    CHECK_THROWS_AS((void)decode_errors_only(cp, std::vector<FieldElement>(5, ctx.zero())),
                    std::invalid_argument);
}

TEST_CASE("key equation holds on synthetic instances") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 15);
    CodeParams cp = make_code(ctx, 12, 4, true);
    std::mt19937_64 rng(16);

    // noiseless: both sides reduce to f
    SkewPoly f0 = random_info(cp, rng);
    auto c0 = encode(cp, f0);
    CHECK(verify_key_equation(cp, f0, c0, {}, {}));

    std::size_t corrupted_false = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        SkewPoly f = random_info(cp, rng);
        std::size_t tau = seed % 3, rho = (seed / 3) % 3, gamma = (seed / 9) % 2;
        if (2 * tau + rho + gamma > cp.n - cp.k) continue;
        Transmission tx = simulate_transmission(cp, f, tau, rho, gamma, 300 + seed);
        CHECK(verify_key_equation(cp, f, tx.r, tx.truth.a_full, tx.side));
        if (rho > 0) {
            // wrong side information should generally break the congruence
            ErasureSideInfo wrong = tx.side;
            wrong.a_row[0] = ctx.add(wrong.a_row[0], ctx.basis_element(seed % ctx.m()));
            if (!independent_over_fq(ctx, wrong.a_row)) continue;
            if (!verify_key_equation(cp, f, tx.r, tx.truth.a_full, wrong)) ++corrupted_false;
        }
    }
    CHECK(corrupted_false > 0);
}
