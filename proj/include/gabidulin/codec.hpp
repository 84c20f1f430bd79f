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

#ifndef GABIDULIN_CODEC_HPP
#define GABIDULIN_CODEC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gabidulin/field.hpp"
#include "gabidulin/skew_poly.hpp"
#include "gabidulin/subspace.hpp"

namespace gabidulin {

/// Gabidulin code of length n <= m and dimension k over the context field,
/// with evaluation points g independent over F_q. Error-and-erasure decoding
/// additionally requires n = m and g being the normal basis.
struct CodeParams {
    const FieldCtx* ctx = nullptr;
    std::size_t n = 0, k = 0;
    std::vector<FieldElement> g;
    bool normal_basis = false;
};

/// Receiver side information: row-erasure column-space basis a^R and
/// column-erasure row-space basis B^C (gamma x n over F_q).
struct ErasureSideInfo {
    std::vector<FieldElement> a_row;
    FqMatrix b_col;
};

/// Estimated information polynomial (deg_q < k) or a decoding failure.
struct DecodeOutcome {
    std::optional<SkewPoly> f;
    bool ok() const { return f.has_value(); }
};

/// Intermediate q-degrees of a decoder run, for instrumentation.
struct DecodeTrace {
    long deg_r_interp = -1;
    long deg_gamma = -1;
    long deg_g_tilde = -1;
    long deg_y = -1;
    long deg_locator = -1;
    std::optional<SkewPoly> locator;  // monic-normalized LEEA cofactor
};

/// Evaluation points g_i = beta^{[i-1]} when normal_basis is set.
CodeParams make_code(const FieldCtx& ctx, std::size_t n, std::size_t k, bool normal_basis);
CodeParams make_code(const FieldCtx& ctx, std::size_t n, std::size_t k,
                     std::vector<FieldElement> g);

/// The modulus of the key equation: x^[m] - x^[0] for a full-length normal
/// basis code, the minimal subspace polynomial of <g> otherwise.
SkewPoly code_modulus(const CodeParams& cp);

/// Codeword (f(g_1), ..., f(g_n)); requires deg_q f < k.
std::vector<FieldElement> encode(const CodeParams& cp, const SkewPoly& f);

/// Gao-style decoding with no side information; works for any g and n <= m.
/// Corrects every error of rank <= (n-k)/2.
DecodeOutcome decode_errors_only(const CodeParams& cp, const std::vector<FieldElement>& r,
                                 DecodeTrace* trace = nullptr);

/// Error-and-erasure decoding; requires n = m and the normal-basis points.
/// Recovers f whenever 2*tau + rho + gamma <= n - k.
DecodeOutcome decode_errors_erasures(const CodeParams& cp, const std::vector<FieldElement>& r,
                                     const ErasureSideInfo& side, DecodeTrace* trace = nullptr);

/// Test helper: builds both sides of the key equation from ground truth
/// (the full-error column basis a^E plus the receiver side information)
/// and compares them modulo x^[m] - x^[0].
bool verify_key_equation(const CodeParams& cp, const SkewPoly& f,
                         const std::vector<FieldElement>& r,
                         const std::vector<FieldElement>& a_full, const ErasureSideInfo& side);

}  // namespace gabidulin

#endif
