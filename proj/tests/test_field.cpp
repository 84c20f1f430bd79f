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

#include "gabidulin/field.hpp"

using namespace gabidulin;

namespace {

// Schoolbook polynomial-basis arithmetic, independent of the context's
// multiplication path. Used as the oracle for fe_mul and fe_frob.
std::vector<std::uint32_t> oracle_polymul(const FieldCtx& ctx, const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
    const unsigned m = ctx.m();
    const auto& f = ctx.params().ext_modulus;
    std::vector<std::uint32_t> r(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            r[i + j] = ctx.fq_add(r[i + j], ctx.fq_mul(a[i], b[j]));
    for (std::size_t i = 2 * m; i-- > m;) {
        std::uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (unsigned j = 0; j < m; ++j)
            r[i - m + j] = ctx.fq_sub(r[i - m + j], ctx.fq_mul(c, f[j]));
    }
    r.resize(m);
    return r;
}

std::vector<std::uint32_t> oracle_pow(const FieldCtx& ctx, std::vector<std::uint32_t> base,
                                      std::uint64_t e) {
    std::vector<std::uint32_t> acc(ctx.m(), 0);
    acc[0] = 1;
    while (e) {
        if (e & 1) acc = oracle_polymul(ctx, acc, base);
        base = oracle_polymul(ctx, base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct FieldSpec {
    std::uint32_t p;
    unsigned e, m;
    std::uint64_t seed;
};

}  // namespace

TEST_CASE("F_4: normal basis arithmetic matches hand values") {
    FieldCtx ctx = FieldCtx::build(2, 1, 2, 1);
    REQUIRE(ctx.q() == 2);
    // the only irreducible quadratic over F_2
    CHECK(ctx.params().ext_modulus == std::vector<std::uint32_t>{1, 1, 1});

    FieldElement z = ctx.from_poly_coords({0, 1});
    FieldElement z2 = ctx.mul(z, z);
    FieldElement one = ctx.one();

    CHECK(ctx.mul(z, z2) == one);  // z^3 = 1
    CHECK(ctx.inv(z) == z2);
    CHECK(ctx.inv(one) == one);
    // 1 = z + z^2, so its normal coordinates are (1,1) for either beta
    CHECK(ctx.coords(one) == std::vector<std::uint32_t>{1, 1});
    CHECK(ctx.add(ctx.from_coords({1, 0}), ctx.from_coords({0, 1})) == one);
    // Frobenius is the coordinate shift
    CHECK(ctx.frob(ctx.from_coords({1, 0}), 1) == ctx.from_coords({0, 1}));
    // a + a = 0 in characteristic 2
    CHECK(ctx.is_zero(ctx.add(z, z)));
}

TEST_CASE("F_2: m = 1 degenerate field") {
    FieldCtx ctx = FieldCtx::build(2, 1, 1, 99);
    CHECK(ctx.one() == ctx.from_coords({1}));
    CHECK(ctx.frob(ctx.one(), 1) == ctx.one());
    CHECK(ctx.mul(ctx.one(), ctx.one()) == ctx.one());
}

TEST_CASE("(3,1,4): every basis vector cubes to the next one") {
    FieldCtx ctx = FieldCtx::build(3, 1, 4, 7);
    for (unsigned i = 0; i < 4; ++i) {
        auto bi = ctx.basis_element(i);
        auto cubed = oracle_pow(ctx, ctx.poly_coords(bi), 3);
        CHECK(ctx.from_poly_coords(cubed) == ctx.basis_element((i + 1) % 4));
        CHECK(ctx.frob(bi, 1) == ctx.basis_element((i + 1) % 4));
    }
}

TEST_CASE("multiplication agrees with the polynomial-basis oracle") {
    for (auto [p, e, m, seed] :
         {FieldSpec{2, 1, 64, 5}, FieldSpec{2, 1, 130, 6}, FieldSpec{3, 1, 8, 7},
          FieldSpec{2, 2, 6, 8}, FieldSpec{13, 1, 3, 9}}) {
        FieldCtx ctx = FieldCtx::build(p, e, m, seed);
        std::mt19937_64 rng(42);
        for (int t = 0; t < 50; ++t) {
            auto a = ctx.random_element(rng);
            auto b = ctx.random_element(rng);
            auto expect = oracle_polymul(ctx, ctx.poly_coords(a), ctx.poly_coords(b));
            CHECK(ctx.mul(a, b) == ctx.from_poly_coords(expect));
        }
    }
}

TEST_CASE("frobenius agrees with q-powering exhaustively on small fields") {
    for (auto [p, e, m, seed] : {FieldSpec{2, 1, 6, 1}, FieldSpec{3, 1, 4, 2},
                                 FieldSpec{2, 2, 3, 3}, FieldSpec{5, 1, 3, 4}}) {
        FieldCtx ctx = FieldCtx::build(p, e, m, seed);
        const std::uint64_t size = ipow(ctx.q(), m);
        for (std::uint64_t v = 0; v < size; ++v) {
            FieldElement a = ctx.from_integer(v);
            auto pc = ctx.poly_coords(a);
            for (unsigned i = 1; i < m; ++i) {
                auto powed = oracle_pow(ctx, pc, ipow(ctx.q(), i));
                CHECK(ctx.frob(a, i) == ctx.from_poly_coords(powed));
            }
        }
    }
}

TEST_CASE("frobenius is a ring automorphism with period m") {
    FieldCtx ctx = FieldCtx::build(2, 1, 24, 3);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        auto a = ctx.random_element(rng);
        auto b = ctx.random_element(rng);
        long i = static_cast<long>(rng() % 48) - 24;
        CHECK(ctx.frob(ctx.mul(a, b), i) == ctx.mul(ctx.frob(a, i), ctx.frob(b, i)));
        CHECK(ctx.frob(ctx.add(a, b), i) == ctx.add(ctx.frob(a, i), ctx.frob(b, i)));
        CHECK(ctx.frob(a, 0) == a);
        CHECK(ctx.frob(a, ctx.m()) == a);
        long j = static_cast<long>(rng() % 24);
        CHECK(ctx.frob(ctx.frob(a, i), j) == ctx.frob(a, i + j));
    }
}

TEST_CASE("field axioms on random triples") {
    for (auto [p, e, m, seed] : {FieldSpec{2, 1, 16, 10}, FieldSpec{3, 1, 5, 11}}) {
        FieldCtx ctx = FieldCtx::build(p, e, m, seed);
        std::mt19937_64 rng(1234);
        for (int t = 0; t < 1000; ++t) {
            auto a = ctx.random_element(rng);
            auto b = ctx.random_element(rng);
            auto c = ctx.random_element(rng);
            CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
            CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
            if (!ctx.is_zero(a)) {
                CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
                CHECK(ctx.inv(ctx.inv(a)) == a);
            }
            CHECK(ctx.mul(a, ctx.one()) == a);
            CHECK(ctx.is_zero(ctx.mul(a, ctx.zero())));
            CHECK(ctx.add(a, ctx.zero()) == a);
            CHECK(ctx.is_zero(ctx.add(a, ctx.neg(a))));
        }
    }
}

TEST_CASE("inversion of zero is rejected") {
    FieldCtx ctx = FieldCtx::build(2, 1, 8, 1);
    CHECK_THROWS_AS((void)ctx.inv(ctx.zero()), std::domain_error);
}

TEST_CASE("counters tally exactly one operation per call") {
    FieldCtx ctx = FieldCtx::build(2, 1, 32, 2);
    std::mt19937_64 rng(5);
    auto a = ctx.random_element(rng);
    auto b = ctx.random_element(rng);
    ctx.reset_counts();
    (void)ctx.mul(a, b);
    OpCounts c1 = ctx.counts();
    CHECK(c1.mul == 1);
    CHECK(c1.inv == 0);
    CHECK(c1.add == 0);
    CHECK(c1.frob == 0);
    (void)ctx.add(a, b);
    (void)ctx.frob(a, 3);
    (void)ctx.inv(b);
    OpCounts c2 = ctx.counts();
    CHECK(c2.mul == 1);
    CHECK(c2.add == 1);
    CHECK(c2.frob == 1);
    CHECK(c2.inv == 1);
    // scaling by F_q and element construction are not F_{q^m} operations
    (void)ctx.scale_fq(1, a);
    (void)ctx.from_coords(ctx.coords(a));
    CHECK(ctx.counts().mul == 1);
}

TEST_CASE("normal basis property certified by the context") {
    for (auto [p, e, m, seed] :
         {FieldSpec{2, 1, 24, 21}, FieldSpec{3, 1, 6, 22}, FieldSpec{2, 2, 5, 23}}) {
        FieldCtx ctx = FieldCtx::build(p, e, m, seed);
        std::vector<FieldElement> shifts;
        for (unsigned i = 0; i < m; ++i) shifts.push_back(ctx.frob(ctx.beta(), i));
        CHECK(independent_over_fq(ctx, shifts));
        for (unsigned i = 0; i < m; ++i) CHECK(shifts[i] == ctx.basis_element(i));
    }
}

TEST_CASE("rank and rref over F_q") {
    FieldCtx ctx = FieldCtx::build(2, 1, 4, 1);
    FqMatrix Z(3, 3);
    CHECK(fq_rank(ctx, Z) == 0);
    FqMatrix I(4, 4);
    for (unsigned i = 0; i < 4; ++i) I.at(i, i) = 1;
    CHECK(fq_rank(ctx, I) == 4);
    FqMatrix E(2, 2);
    E.at(0, 0) = E.at(0, 1) = E.at(1, 0) = E.at(1, 1) = 1;
    CHECK(fq_rank(ctx, E) == 1);
    auto [R, piv] = fq_rref(ctx, E);
    CHECK(piv == std::vector<std::size_t>{0});
    CHECK(R.at(0, 0) == 1);
    CHECK(R.at(1, 0) == 0);

    FieldCtx ctx3 = FieldCtx::build(3, 1, 3, 2);
    FqMatrix M(2, 3);
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(0, 2) = 1;
    M.at(1, 0) = 2;
    M.at(1, 1) = 1;
    M.at(1, 2) = 2;  // row1 = 2 * row0 over F_3
    CHECK(fq_rank(ctx3, M) == 1);
}

TEST_CASE("linear independence over F_q") {
    FieldCtx ctx = FieldCtx::build(2, 1, 2, 1);
    FieldElement z = ctx.from_poly_coords({0, 1});
    FieldElement z2 = ctx.mul(z, z);
    CHECK(independent_over_fq(ctx, {z, z2}));
    CHECK_FALSE(independent_over_fq(ctx, {z, z2, ctx.one()}));  // 3 vectors in dim 2
    CHECK_FALSE(independent_over_fq(ctx, {z, ctx.zero()}));
    CHECK(independent_over_fq(ctx, {}));
}

TEST_CASE("integer serialization round trip") {
    for (auto [p, e, m, seed] :
         {FieldSpec{2, 1, 20, 1}, FieldSpec{3, 1, 5, 2}, FieldSpec{2, 2, 4, 3}}) {
        FieldCtx ctx = FieldCtx::build(p, e, m, seed);
        std::mt19937_64 rng(9);
        for (int t = 0; t < 100; ++t) {
            auto a = ctx.random_element(rng);
            CHECK(ctx.from_integer(ctx.to_integer(a)) == a);
        }
        CHECK(ctx.to_integer(ctx.zero()) == 0);
    }
    // base-q positional encoding: coordinate i scales q^i
    FieldCtx ctx = FieldCtx::build(3, 1, 4, 4);
    CHECK(ctx.to_integer(ctx.from_coords({2, 1, 0, 2})) == 2 + 1 * 3 + 2 * 27);
}

TEST_CASE("context rebuild from parameters is faithful") {
    FieldCtx ctx = FieldCtx::build(2, 1, 12, 77);
    FieldCtx again = FieldCtx::from_params(ctx.params());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto a = ctx.random_element(rng);
        auto b = ctx.random_element(rng);
        CHECK(again.coords(again.mul(a, b)) == ctx.coords(ctx.mul(a, b)));
    }

    FieldParams bad = ctx.params();
    bad.beta_poly.assign(ctx.m(), 0);  // zero is never normal
    CHECK_THROWS_AS((void)FieldCtx::from_params(bad), std::invalid_argument);
}

TEST_CASE("build_field parameter validation") {
    CHECK_THROWS_AS((void)FieldCtx::build(4, 1, 3, 1), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS((void)FieldCtx::build(2, 17, 2, 1), std::invalid_argument);  // q > 2^16
    CHECK_THROWS_AS((void)FieldCtx::build(2, 0, 3, 1), std::invalid_argument);
}

TEST_CASE("deterministic construction per seed") {
    FieldCtx a = FieldCtx::build(2, 1, 16, 1234);
    FieldCtx b = FieldCtx::build(2, 1, 16, 1234);
    CHECK(a.params().ext_modulus == b.params().ext_modulus);
    CHECK(a.params().beta_poly == b.params().beta_poly);
}
