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

#ifndef GABIDULIN_FIELD_HPP
#define GABIDULIN_FIELD_HPP

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gabidulin {

/// Running tally of F_{q^m} operations. Subtractions count as additions,
/// q^i-powers count as one Frobenius application each.
struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t inv = 0;
    std::uint64_t add = 0;
    std::uint64_t frob = 0;

    OpCounts operator-(const OpCounts& rhs) const noexcept {
        return {mul - rhs.mul, inv - rhs.inv, add - rhs.add, frob - rhs.frob};
    }
};

/// Element of F_{q^m}, stored as its coordinate vector with respect to the
/// normal basis (beta^[0], ..., beta^[m-1]) of the owning FieldCtx.
/// For q = 2 the coordinates are bit-packed; otherwise one F_q code per word.
class FieldElement {
  public:
    FieldElement() = default;
    bool operator==(const FieldElement& rhs) const noexcept { return w_ == rhs.w_; }
    bool operator!=(const FieldElement& rhs) const noexcept { return w_ != rhs.w_; }

  private:
    std::vector<std::uint64_t> w_;
    friend class FieldCtx;
};

/// Construction data of F_{q^m} over F_q = F_p[y]/(base_modulus):
/// ext_modulus defines the degree-m extension, beta_poly are the
/// polynomial-basis coordinates of a normal element.
struct FieldParams {
    std::uint32_t p = 0;
    unsigned e = 0;
    unsigned m = 0;
    std::vector<std::uint32_t> base_modulus;  // over F_p, low degree first, monic
    std::vector<std::uint32_t> ext_modulus;   // F_q codes, low degree first, monic
    std::vector<std::uint32_t> beta_poly;     // length m, polynomial-basis coords
};

/// Dense matrix over F_q, entries as integer codes, row-major.
struct FqMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    FqMatrix() = default;
    FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    bool operator==(const FqMatrix&) const = default;
};

namespace detail {

/// F_q-linear map on packed bit vectors, applied with grouped lookup tables.
/// Group width adapts to the matrix size so the tables stay cache-resident.
struct F2LinearMap {
    std::size_t in_bits = 0;
    std::size_t out_words = 0;
    unsigned group_bits = 8;
    std::vector<std::uint64_t> tbl;  // ceil(in_bits/group) x 2^group x out_words

    void build(std::size_t in_bits, std::size_t out_bits,
               const std::vector<std::vector<std::uint64_t>>& columns);
    void apply(const std::uint64_t* in, std::uint64_t* out) const;
};

}  // namespace detail

/// Arithmetic context for F_{q^m} in a normal-basis representation.
///
/// Frobenius powers are cyclic coordinate shifts; multiplication converts to
/// the polynomial basis with precomputed change-of-basis matrices, multiplies
/// modulo ext_modulus and converts back. Operation counters tally work in
/// F_{q^m}; internal base-field arithmetic is not charged.
///
/// Immutable after construction except for the counters, which are atomic.
class FieldCtx {
  public:
    /// Searches moduli and a normal element deterministically from the seed.
    static FieldCtx build(std::uint32_t p, unsigned e, unsigned m, std::uint64_t seed);

    /// Rebuilds a context from explicit parameters, verifying that the moduli
    /// are irreducible and beta is normal.
    static FieldCtx from_params(const FieldParams& params);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) noexcept;
    FieldCtx& operator=(FieldCtx&&) noexcept;
    ~FieldCtx() = default;

    const FieldParams& params() const noexcept { return params_; }
    std::uint32_t p() const noexcept { return params_.p; }
    unsigned e() const noexcept { return params_.e; }
    unsigned m() const noexcept { return params_.m; }
    std::uint32_t q() const noexcept { return q_; }

    // ---- F_q scalar arithmetic on integer codes (0 <= code < q) ----
    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_neg(std::uint32_t a) const;
    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_inv(std::uint32_t a) const;

    // ---- element construction / inspection (uncounted) ----
    FieldElement zero() const;
    FieldElement one() const;
    /// The normal element beta = basis_element(0).
    FieldElement beta() const { return basis_element(0); }
    /// beta^[i], i.e. the i-th normal-basis vector.
    FieldElement basis_element(unsigned i) const;
    FieldElement from_coords(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> coords(const FieldElement& a) const;
    std::uint32_t coord(const FieldElement& a, unsigned i) const;
    FieldElement from_poly_coords(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> poly_coords(const FieldElement& a) const;
    bool is_zero(const FieldElement& a) const;
    FieldElement random_element(std::mt19937_64& rng) const;

    /// Canonical integer form: normal coordinates read base q, index 0 least
    /// significant (each F_q code is itself the base-p digit vector).
    /// Only available while q^m fits in 63 bits.
    bool integer_serializable() const noexcept;
    std::uint64_t to_integer(const FieldElement& a) const;
    FieldElement from_integer(std::uint64_t v) const;

    // ---- counted F_{q^m} operations ----
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    /// a^{q^i}; i may be negative, interpreted modulo m. One counted Frobenius.
    FieldElement frob(const FieldElement& a, long i) const;
    /// Scalar action of F_q on F_{q^m} (coordinate-wise); uncounted.
    FieldElement scale_fq(std::uint32_t lambda, const FieldElement& a) const;

    OpCounts counts() const noexcept;
    void reset_counts() const noexcept;

  private:
    FieldCtx() = default;
    void init_base_field();
    void init_extension();
    void finish_tables();

    // raw (uncounted) polynomial-basis helpers, generic representation
    std::vector<std::uint32_t> poly_mulmod_g(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b) const;

    FieldParams params_;
    std::uint32_t q_ = 0;
    bool binary_ = false;    // p == 2 && e == 1
    std::size_t words_ = 0;  // element storage words

    // F_q discrete log tables (q > 2)
    std::vector<std::uint32_t> fq_log_, fq_alog_;

    // binary mode
    std::vector<std::uint64_t> ext_mod_bits_;
    detail::F2LinearMap to_poly_b_, to_normal_b_, fold_b_;

    // generic mode: m x m change-of-basis matrices, row-major
    std::vector<std::uint32_t> to_poly_g_, to_normal_g_;

    mutable std::atomic<std::uint64_t> c_mul_{0}, c_inv_{0}, c_add_{0}, c_frob_{0};
};

/// Gaussian-elimination rank over F_q.
std::size_t fq_rank(const FieldCtx& ctx, const FqMatrix& M);
/// Reduced row-echelon form; pivot column indices returned alongside.
std::pair<FqMatrix, std::vector<std::size_t>> fq_rref(const FieldCtx& ctx, const FqMatrix& M);
/// True iff the elements, viewed as F_q coordinate columns, have full rank.
bool independent_over_fq(const FieldCtx& ctx, const std::vector<FieldElement>& elems);

}  // namespace gabidulin

#endif
