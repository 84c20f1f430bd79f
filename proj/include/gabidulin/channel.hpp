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

#ifndef GABIDULIN_CHANNEL_HPP
#define GABIDULIN_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "gabidulin/codec.hpp"
#include "gabidulin/field.hpp"

namespace gabidulin {

/// Error word e = a^E B^E + a^R B^R + a^C B^C with its three fragments:
/// full errors (rank tau), row erasures (rank rho), column erasures (rank
/// gamma).
struct RankError {
    std::vector<FieldElement> e;
    std::vector<FieldElement> a_full, a_row, a_col;
    FqMatrix b_full, b_row, b_col;

    std::size_t tau() const { return a_full.size(); }
    std::size_t rho() const { return a_row.size(); }
    std::size_t gamma() const { return a_col.size(); }
};

/// Matrix view of a word: column j holds the normal-basis coordinates of v_j.
FqMatrix ext_map(const FieldCtx& ctx, const std::vector<FieldElement>& v);
std::vector<FieldElement> ext_inv(const FieldCtx& ctx, const FqMatrix& M);

/// Rank of the matrix representation of a word.
std::size_t rank_of_word(const FieldCtx& ctx, const std::vector<FieldElement>& v);

/// Deterministic random error with the prescribed decomposition. With
/// `combined` (the default) the element sets and the stacked coefficient
/// matrix are drawn jointly independent/full-rank, so rank(e) equals
/// tau + rho + gamma; otherwise each fragment is only internally full-rank
/// and the fragments may overlap.
RankError random_rank_error(const FieldCtx& ctx, std::size_t n, std::size_t tau, std::size_t rho,
                            std::size_t gamma, std::uint64_t seed, bool combined = true);

struct Transmission {
    std::vector<FieldElement> r;
    ErasureSideInfo side;   // exactly what the receiver learns: a^R and B^C
    RankError truth;        // kept for test assertions only
};

/// r = encode(f) + e for a fresh random error with the given decomposition.
Transmission simulate_transmission(const CodeParams& cp, const SkewPoly& f, std::size_t tau,
                                   std::size_t rho, std::size_t gamma, std::uint64_t seed);

}  // namespace gabidulin

#endif
