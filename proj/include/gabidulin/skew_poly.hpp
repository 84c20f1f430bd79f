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

#ifndef GABIDULIN_SKEW_POLY_HPP
#define GABIDULIN_SKEW_POLY_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gabidulin/field.hpp"

namespace gabidulin {

/// Element of F_{q^m}[x; sigma] where sigma is the aut-th Frobenius power,
/// with the commutation rule x a = sigma(a) x. The linearized ring is the
/// aut = 1 view (x^i acting as x^{[i]}); aut = -1 gives its opposite, used
/// by the division algorithms.
///
/// Coefficients are stored low degree first with trailing zeros trimmed;
/// the zero polynomial has no coefficients and degree -1.
class SkewPoly {
  public:
    SkewPoly() = default;

    static SkewPoly zero(const FieldCtx& ctx, int aut = 1);
    static SkewPoly one(const FieldCtx& ctx, int aut = 1);
    static SkewPoly monomial(const FieldCtx& ctx, const FieldElement& c, std::size_t exp,
                             int aut = 1);
    static SkewPoly from_coeffs(const FieldCtx& ctx, std::vector<FieldElement> coeffs,
                                int aut = 1);

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldCtx* ctx_ptr() const { return ctx_; }
    /// Automorphism power, normalized to [0, m).
    unsigned aut() const { return aut_; }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool linearized() const { return aut_ == 1u % ctx_->m(); }

    bool operator==(const SkewPoly& rhs) const;
    bool operator!=(const SkewPoly& rhs) const { return !(*this == rhs); }

  private:
    const FieldCtx* ctx_ = nullptr;
    unsigned aut_ = 0;
    std::vector<FieldElement> c_;

    void trim();
    friend SkewPoly sp_add(const SkewPoly&, const SkewPoly&);
    friend SkewPoly sp_sub(const SkewPoly&, const SkewPoly&);
    friend SkewPoly sp_neg(const SkewPoly&);
    friend SkewPoly sp_scale(const FieldElement&, const SkewPoly&);
    friend SkewPoly naive_mul(const SkewPoly&, const SkewPoly&);
    friend SkewPoly fast_mul(const SkewPoly&, const SkewPoly&);
    friend SkewPoly reversal_tau(const SkewPoly&, std::size_t);
    friend SkewPoly sp_truncate(const SkewPoly&, std::size_t);
    friend SkewPoly sp_shift_up(const SkewPoly&, std::size_t);
    friend SkewPoly sp_theta(const SkewPoly&);
    friend SkewPoly sp_fold_mod_xm(const SkewPoly&);
};

/// Bezout data of the stopped remainder sequence: r = u*a + v*b.
struct EeaOutput {
    SkewPoly r, u, v;
};

SkewPoly sp_add(const SkewPoly& a, const SkewPoly& b);
SkewPoly sp_sub(const SkewPoly& a, const SkewPoly& b);
SkewPoly sp_neg(const SkewPoly& a);
/// Left multiplication by a constant: (c x^0) * a.
SkewPoly sp_scale(const FieldElement& c, const SkewPoly& a);

/// Schoolbook product by the convolution rule; the reference oracle.
SkewPoly naive_mul(const SkewPoly& a, const SkewPoly& b);

/// Fragmentation-based product: the coefficient work is packed into one
/// rectangular matrix product evaluated with Strassen recursion. Equals
/// naive_mul exactly; sub-quadratic in counted F_{q^m} multiplications.
SkewPoly fast_mul(const SkewPoly& a, const SkewPoly& b);

/// Evaluation of the linearized view: a(alpha) = sum a_i alpha^{[i]}.
FieldElement sp_eval(const SkewPoly& a, const FieldElement& alpha);

/// Long division, a = chi * b + rho with deg rho < deg b.
std::pair<SkewPoly, SkewPoly> naive_right_div(const SkewPoly& a, const SkewPoly& b);
/// Long division, a = b * chi + rho with deg rho < deg b.
std::pair<SkewPoly, SkewPoly> naive_left_div(const SkewPoly& a, const SkewPoly& b);

/// Coefficient reversal tau_s into the opposite-automorphism ring.
/// Involution: reversal_tau(reversal_tau(a, s), s) == a. Requires deg a <= s.
SkewPoly reversal_tau(const SkewPoly& a, std::size_t s);

/// a mod x^k.
SkewPoly sp_truncate(const SkewPoly& a, std::size_t k);
/// a * x^t (right monomial factor; exponent shift without twist).
SkewPoly sp_shift_up(const SkewPoly& a, std::size_t t);
/// The anti-isomorphism into the opposite ring: coefficients get
/// sigma^{-i}-twisted; sp_theta(u*v) = sp_theta(v)*sp_theta(u).
SkewPoly sp_theta(const SkewPoly& a);
/// Remainder modulo the central polynomial x^m - x^0 (exponent folding).
SkewPoly sp_fold_mod_xm(const SkewPoly& a);

/// Newton iteration for d with c*d == 1 mod x^k; requires c_0 != 0.
/// Runs exactly ceil(log2 k) iterations (reported via `iterations`).
SkewPoly newton_right_inverse(const SkewPoly& c, std::size_t k, unsigned* iterations = nullptr);

/// Division via reversal + Newton inverse; output identical to the naive
/// divisions (quotient/remainder are unique).
std::pair<SkewPoly, SkewPoly> fast_right_div(const SkewPoly& a, const SkewPoly& b);
std::pair<SkewPoly, SkewPoly> fast_left_div(const SkewPoly& a, const SkewPoly& b);

/// Remainder of the right division of a by c.
SkewPoly sp_mod(const SkewPoly& a, const SkewPoly& c);

/// Remainder sequence r0 = a, r1 = b, r_{i+1} = r_{i-1} mod r_i with left
/// cofactors, stopped at the first entry of degree < d_stop.
EeaOutput leea(const SkewPoly& a, const SkewPoly& b, long d_stop);

/// Uniform random polynomial of exact degree `deg` (deg < 0 gives zero).
SkewPoly random_poly(const FieldCtx& ctx, long deg, std::mt19937_64& rng, int aut = 1);

}  // namespace gabidulin

#endif
