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

#include "hhblocks/exalg/linalg.hpp"

#include "hhblocks/errors.hpp"

#include <algorithm>

namespace hhb::exalg {

Matrix Matrix::identity(const FqField &F, std::size_t n)
{
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const FqField &F, const std::vector<Vec> &rows, std::size_t cols)
{
  Matrix m(F, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw InvalidArgument("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

Vec Matrix::col_vec(std::size_t j) const
{
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

void Matrix::append_row(const Vec &v)
{
  if (rows_ == 0 && cols_ == 0)
    cols_ = v.size();
  if (v.size() != cols_)
    throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::operator*(const Matrix &o) const
{
  if (cols_ != o.rows_)
    throw InvalidArgument("matrix shape mismatch in product");
  Matrix r(F_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elt *out = r.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      Elt a = (*this)(i, k);
      if (a == 0)
        continue;
      const Elt *in = o.row(k);
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (in[j])
          out[j] = F_.add(out[j], F_.mul(a, in[j]));
    }
  }
  return r;
}

Vec Matrix::apply(const Vec &v) const
{
  if (v.size() != cols_)
    throw InvalidArgument("vector length mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Elt *a = row(i);
    Elt s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (a[j] && v[j])
        s = F_.add(s, F_.mul(a[j], v[j]));
    r[i] = s;
  }
  return r;
}

Matrix Matrix::transpose() const
{
  Matrix t(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.at(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const noexcept
{
  return std::all_of(data_.begin(), data_.end(), [](Elt e) { return e == 0; });
}

std::vector<std::vector<std::uint64_t>> Matrix::to_grid() const
{
  std::vector<std::vector<std::uint64_t>> g(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    g[i].assign(row(i), row(i) + cols_);
  return g;
}

bool is_zero(const Vec &v) noexcept
{
  return std::all_of(v.begin(), v.end(), [](Elt e) { return e == 0; });
}

void axpy(const FqField &F, Vec &y, Elt a, const Vec &x)
{
  if (a == 0)
    return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i])
      y[i] = F.add(y[i], F.mul(a, x[i]));
}

Echelon row_reduce(Matrix m)
{
  const FqField &F = m.field();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0)
      ++piv;
    if (piv == m.rows())
      continue;
    if (piv != r)
      std::swap_ranges(m.row(piv), m.row(piv) + m.cols(), m.row(r));
    Elt inv = F.inv(m(r, c));
    Elt *pr = m.row(r);
    for (std::size_t j = c; j < m.cols(); ++j)
      pr[j] = F.mul(pr[j], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Elt f = F.neg(m(i, c));
      Elt *pi = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (pr[j])
          pi[j] = F.add(pi[j], F.mul(f, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(F, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    std::copy(m.row(i), m.row(i) + m.cols(), out.row(i));
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix &m)
{
  const FqField &F = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots)
    is_pivot[c] = true;
  Matrix ns(F, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = F.neg(e.rref(i, free));
    ns.append_row(v);
  }
  return ns;
}

std::optional<Matrix> inverse(const Matrix &m)
{
  if (m.rows() != m.cols())
    throw InvalidArgument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i), m.row(i) + n, aug.row(i));
    aug.at(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(e.rref.row(i) + n, e.rref.row(i) + 2 * n, inv.row(i));
  return inv;
}

bool EchelonBasis::reduce(Vec &v) const
{
  if (v.size() != dim_)
    throw InvalidArgument("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elt c = v[pivots_[k]];
    if (c)
      axpy(F_, v, F_.neg(c), rows_[k]);
  }
  return is_zero(v);
}

bool EchelonBasis::insert(const Vec &v)
{
  if (v.size() != dim_)
    throw InvalidArgument("vector length mismatch");
  Vec w = v;
  Vec combo;
  if (track_) {
    combo.assign(rows_.size() + 1, 0);
    combo.back() = 1;
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elt c = w[pivots_[k]];
    if (!c)
      continue;
    Elt nc = F_.neg(c);
    axpy(F_, w, nc, rows_[k]);
    if (track_)
      for (std::size_t j = 0; j < combos_[k].size(); ++j)
        if (combos_[k][j])
          combo[j] = F_.add(combo[j], F_.mul(nc, combos_[k][j]));
  }
  auto it = std::find_if(w.begin(), w.end(), [](Elt e) { return e != 0; });
  if (it == w.end())
    return false;
  std::size_t piv = static_cast<std::size_t>(it - w.begin());
  Elt inv = F_.inv(*it);
  for (auto &e : w)
    e = F_.mul(e, inv);
  if (track_)
    for (auto &e : combo)
      e = F_.mul(e, inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  if (track_)
    combos_.push_back(std::move(combo));
  return true;
}

std::optional<Vec> EchelonBasis::coordinates(const Vec &v) const
{
  if (!track_)
    throw InvalidArgument("coordinates() requires a tracking basis");
  Vec w = v;
  Vec coords(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elt c = w[pivots_[k]];
    if (!c)
      continue;
    axpy(F_, w, F_.neg(c), rows_[k]);
    for (std::size_t j = 0; j < combos_[k].size(); ++j)
      if (combos_[k][j])
        coords[j] = F_.add(coords[j], F_.mul(c, combos_[k][j]));
  }
  if (!is_zero(w))
    return std::nullopt;
  return coords;
}

Matrix EchelonBasis::basis() const { return Matrix::from_rows(F_, rows_, dim_); }

KernelTracker::KernelTracker(const FqField &F, std::size_t n) : F_(F), n_(n)
{
  basis_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    basis_.push_back(std::move(e));
  }
}

bool KernelTracker::add_row(const Vec &r)
{
  if (r.size() != n_)
    throw InvalidArgument("constraint length mismatch");
  if (basis_.empty())
    return false;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < n_; ++i)
    if (r[i])
      nz.push_back(i);
  if (nz.empty())
    return false;
  std::vector<Elt> val(basis_.size(), 0);
  std::size_t lead = basis_.size();
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    Elt s = 0;
    for (auto i : nz)
      if (basis_[j][i])
        s = F_.add(s, F_.mul(r[i], basis_[j][i]));
    val[j] = s;
    if (s && lead == basis_.size())
      lead = j;
  }
  if (lead == basis_.size())
    return false;
  ++used_;
  Elt inv = F_.inv(val[lead]);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (j == lead || val[j] == 0)
      continue;
    axpy(F_, basis_[j], F_.neg(F_.mul(val[j], inv)), basis_[lead]);
  }
  basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(lead));
  return true;
}

} // namespace hhb::exalg
