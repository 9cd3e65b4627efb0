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

#include "hhblocks/exalg/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hhb::exalg {

using Vec = std::vector<Elt>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
  Matrix() = default;
  Matrix(const FqField &F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), data_(rows * cols, 0)
  {
  }

  static Matrix identity(const FqField &F, std::size_t n);
  /// Matrix whose rows are the given vectors, all of length cols.
  static Matrix from_rows(const FqField &F, const std::vector<Vec> &rows, std::size_t cols);

  const FqField &field() const noexcept { return F_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elt operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elt &at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Elt *row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Elt *row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + cols_); }
  Vec col_vec(std::size_t j) const;

  void append_row(const Vec &v);

  Matrix operator*(const Matrix &o) const;
  Vec apply(const Vec &v) const; ///< M v
  Matrix transpose() const;
  bool is_zero() const noexcept;
  bool operator==(const Matrix &o) const noexcept
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  /// Row-major integer grid, for certificates.
  std::vector<std::vector<std::uint64_t>> to_grid() const;

private:
  FqField F_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

struct Echelon {
  Matrix rref;                    ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; ///< pivot column of each row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix &m);
/// Rows form a basis of {v : M v = 0}.
Matrix nullspace(const Matrix &m);
std::optional<Matrix> inverse(const Matrix &m);

bool is_zero(const Vec &v) noexcept;
void axpy(const FqField &F, Vec &y, Elt a, const Vec &x); ///< y += a x

/// Incrementally built row space in semi-echelon form. With tracking
/// enabled, coordinates() expresses a vector in terms of the inserted
/// vectors, in insertion order.
class EchelonBasis {
public:
  EchelonBasis(const FqField &F, std::size_t dim, bool track = false)
      : F_(F), dim_(dim), track_(track)
  {
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const FqField &field() const noexcept { return F_; }

  /// Reduces v against the basis; returns true if v lies in the span.
  bool reduce(Vec &v) const;
  bool contains(Vec v) const { return reduce(v); }
  /// Inserts v if it is independent of the current span.
  bool insert(const Vec &v);
  std::optional<Vec> coordinates(const Vec &v) const;
  /// The semi-echelon rows.
  Matrix basis() const;

private:
  FqField F_;
  std::size_t dim_;
  bool track_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
};

/// Null space of a growing set of linear constraints. Rows that vanish on
/// the current kernel are discarded without elimination.
class KernelTracker {
public:
  KernelTracker(const FqField &F, std::size_t n);

  /// Adds the constraint r . v = 0. Returns true if the kernel shrank.
  bool add_row(const Vec &r);
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t rows_used() const noexcept { return used_; }
  const std::vector<Vec> &basis() const noexcept { return basis_; }

private:
  FqField F_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::size_t used_ = 0;
};

} // namespace hhb::exalg
