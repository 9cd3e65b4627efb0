/*
 * Copyright 2026 The hhblocks Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "hhblocks/exalg/derivations.hpp"

namespace hhb::exalg {

/// T = [[A, M], [0, B]] on the basis A, then M, then B.
struct TriangularAlgebra {
  Algebra algebra;
  Vec e_A, e_B;
  std::size_t dim_A = 0, dim_M = 0, dim_B = 0;
};

TriangularAlgebra triangular_algebra(const Algebra &A, const Algebra &B, const Bimodule &M,
                                     const Bounds &b = {});

/// The corner algebra eTe on a basis of elements e b_i e, chosen greedily
/// in basis order. Column t of embedding is the t-th corner basis element
/// written in T.
struct Corner {
  Algebra algebra;
  Matrix embedding;
};

Corner corner_algebra(const Algebra &T, const Vec &e);

struct RestrictedDerivation {
  Corner corner;
  Matrix derivation; ///< derivation of the corner algebra
  Vec adjustment;    ///< m = d(e)e - e d(e)
};

/// Replaces d by d - ad(m) with m = d(e)e - e d(e), so that d(e) = 0, and
/// compresses to a -> e d(a) e on eTe. Throws InvalidArgument if e is not
/// idempotent or d is not a derivation of T.
RestrictedDerivation restrict_derivation_deg1(const Algebra &T, const Vec &e, const Matrix &d);

struct Pullback {
  std::size_t dimension = 0;       ///< dim alpha^{-1}(im beta) in HH^1(kP, kP)
  std::vector<Matrix> preimage;    ///< basis of the preimage in Der(kP, kP); contains Inn(kP, kP)
  std::size_t inner_dim = 0;       ///< dim Inn(kP, kP)
  std::size_t hh1_P = 0;           ///< dim HH^1(kP, kP)
};

/// alpha: HH^1(kP, kP) -> HH^1(kP, kG) composes with the inclusion, beta:
/// HH^1(kG, kG) -> HH^1(kP, kG) restricts along it.
Pullback alpha_beta_pullback_space(const permcore::PermGroup &G, const permcore::PermGroup &P,
                                   const FqField &F, const Bounds &b = {});
std::size_t alpha_beta_pullback(const permcore::PermGroup &G, const permcore::PermGroup &P,
                                const FqField &F, const Bounds &b = {});

} // namespace hhb::exalg
