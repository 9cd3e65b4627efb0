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

#include "hhblocks/exalg/algebra.hpp"

#include <vector>

namespace hhb::exalg {

/// A derivation D: A -> M is stored as a dim(A) x dim(M) matrix whose row i
/// is D(b_i).
struct DerSpace {
  FqField field;
  std::size_t dim_algebra = 0;
  std::size_t dim_module = 0;
  std::vector<Matrix> derivations; ///< reduced echelon basis of Der(A, M)
  std::vector<Matrix> inner;       ///< reduced echelon basis of Inn(A, M)

  std::size_t dim_der() const noexcept { return derivations.size(); }
  std::size_t dim_inn() const noexcept { return inner.size(); }
  std::size_t hh1() const noexcept { return derivations.size() - inner.size(); }
  /// Derivations whose classes form a basis of Der / Inn.
  std::vector<Matrix> outer() const;
};

Vec flatten(const Matrix &m);
Matrix unflatten(const FqField &F, const Vec &v, std::size_t rows, std::size_t cols);

/// M must be an A-A-bimodule. Throws BoundExceeded if dim(A) * dim(M)
/// exceeds b.linear.
DerSpace derivation_space(const Algebra &A, const Bimodule &M, const Bounds &b = {});
DerSpace derivation_space(const Algebra &A, const Bounds &b = {});

std::size_t hh1_dim(const Algebra &A, const Bimodule &M, const Bounds &b = {});
std::size_t hh1_dim(const Algebra &A, const Bounds &b = {});

/// Reduced echelon basis of Inn(A, M).
std::vector<Matrix> inner_derivations(const Algebra &A, const Bimodule &M);
/// a -> x.a - a.x
Matrix inner_derivation(const Algebra &A, const Bimodule &M, const Vec &x);
/// Leibniz rule on every pair of basis elements.
bool is_derivation(const Algebra &A, const Bimodule &M, const Matrix &D);
Vec apply_derivation(const Matrix &D, const Vec &a);

/// Reduced echelon basis of the span of the given matrices (all the same shape).
std::vector<Matrix> span_basis(const FqField &F, const std::vector<Matrix> &ms, std::size_t rows,
                               std::size_t cols);

} // namespace hhb::exalg
