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

#ifndef GABIDULIN_SUBSPACE_HPP
#define GABIDULIN_SUBSPACE_HPP

#include <utility>
#include <vector>

#include "gabidulin/field.hpp"
#include "gabidulin/skew_poly.hpp"

namespace gabidulin {

/// Minimal subspace polynomial of the span of `points` (any list, possibly
/// dependent or containing zeros). Monic, q-degree = dim of the span,
/// kernel = the span. Divide-and-conquer with an incremental base case.
SkewPoly msp_span(const FieldCtx& ctx, const std::vector<FieldElement>& points);

/// Minimal subspace polynomial of an F_q-basis. Rejects dependent input
/// (detected as a degree shortfall of the result).
SkewPoly msp(const FieldCtx& ctx, const std::vector<FieldElement>& basis);

/// Multi-point evaluation: out[i] = sp_eval(a, points[i]), order-preserving.
/// Dependent or duplicate points are allowed. Divide-and-conquer by
/// remaindering a modulo the halves' subspace polynomials.
std::vector<FieldElement> mpe(const SkewPoly& a, const std::vector<FieldElement>& points);

/// Unique interpolation polynomial of q-degree < |points| through the pairs
/// (x_i, y_i); the abscissas must be linearly independent over F_q (a zero
/// twisted abscissa in a base case reports dependence).
SkewPoly interpolate(const FieldCtx& ctx,
                     const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// Full q-reverse of Gamma (deg_q < m): coefficient i of the result is
/// Gamma_{(-i mod m)} twisted by the i-th Frobenius power.
SkewPoly q_reverse_full(const SkewPoly& gamma);

}  // namespace gabidulin

#endif
