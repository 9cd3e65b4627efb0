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

#include "hhblocks/exalg/derivations.hpp"

#include <algorithm>

namespace hhb::exalg {

Vec flatten(const Matrix &m)
{
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    v.insert(v.end(), m.row(i), m.row(i) + m.cols());
  return v;
}

Matrix unflatten(const FqField &F, const Vec &v, std::size_t rows, std::size_t cols)
{
  if (v.size() != rows * cols)
    throw InvalidArgument("unflatten: wrong length");
  Matrix m(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    std::copy(v.begin() + static_cast<std::ptrdiff_t>(i * cols),
              v.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols), m.row(i));
  return m;
}

std::vector<Matrix> span_basis(const FqField &F, const std::vector<Matrix> &ms, std::size_t rows,
                               std::size_t cols)
{
  Matrix stacked(F, 0, rows * cols);
  for (const auto &m : ms) {
    if (m.rows() != rows || m.cols() != cols)
      throw InvalidArgument("span_basis: shape mismatch");
    stacked.append_row(flatten(m));
  }
  if (ms.empty())
    return {};
  Echelon e = row_reduce(std::move(stacked));
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < e.rref.rows(); ++i)
    out.push_back(unflatten(F, e.rref.row_vec(i), rows, cols));
  return out;
}

std::vector<Matrix> DerSpace::outer() const
{
  EchelonBasis eb(field, dim_algebra * dim_module);
  for (const auto &m : inner)
    eb.insert(flatten(m));
  std::vector<Matrix> out;
  for (const auto &m : derivations)
    if (eb.insert(flatten(m)))
      out.push_back(m);
  return out;
}

Vec apply_derivation(const Matrix &D, const Vec &a)
{
  const FqField &F = D.field();
  Vec out(D.cols(), 0);
  for (std::size_t i = 0; i < D.rows(); ++i)
    if (a[i])
      for (std::size_t k = 0; k < D.cols(); ++k)
        if (D(i, k))
          out[k] = F.add(out[k], F.mul(a[i], D(i, k)));
  return out;
}

namespace {

void check_shapes(const Algebra &A, const Bimodule &M)
{
  if (M.left_algebra().dim() != A.dim() || M.right_algebra().dim() != A.dim())
    throw InvalidArgument("derivations need an A-A-bimodule");
  if (!(M.field() == A.field()))
    throw InvalidArgument("algebra and bimodule over different fields");
}

// Sum of c_i * S_i over the nonzero coordinates of a.
SparseMatrix combine(const FqField &F, const std::vector<const SparseMatrix *> &mats, const Vec &a,
                     std::size_t dim)
{
  Matrix m(F, dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i])
      continue;
    for (std::size_t l = 0; l < dim; ++l)
      for (const auto &t : mats[i]->column(l))
        m.at(t.index, l) = F.add(m(t.index, l), F.mul(a[i], t.value));
  }
  return SparseMatrix::from_dense(m);
}

// Residual D(b_i b_j) - D(b_i).b_j - b_i.D(b_j), accumulated into r.
void residual(const Algebra &A, const Bimodule &M, const Matrix &D, std::size_t i, std::size_t j,
              Vec &r)
{
  const FqField &F = A.field();
  std::fill(r.begin(), r.end(), 0);
  for (const auto &t : A.product(i, j)) {
    const Elt *row = D.row(t.index);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (row[k])
        r[k] = F.add(r[k], F.mul(t.value, row[k]));
  }
  const Elt *di = D.row(i);
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (!di[l])
      continue;
    for (const auto &t : M.right(j).column(l))
      r[t.index] = F.sub(r[t.index], F.mul(di[l], t.value));
  }
  const Elt *dj = D.row(j);
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (!dj[l])
      continue;
    for (const auto &t : M.left(i).column(l))
      r[t.index] = F.sub(r[t.index], F.mul(dj[l], t.value));
  }
}

struct Parametrisation {
  std::vector<Vec> gens;   // generating set S
  std::vector<Vec> reached; // basis of A reached from 1 by right multiplication
  std::vector<Matrix> value; // D(reached[t]) as a dim(M) x N matrix in the unknowns
  std::vector<Vec> constraints;
};

// Unknowns are the values D(s), s in S; D(us) = D(u).s + u.D(s) propagates
// them to every product, and products that are dependent on earlier ones
// yield linear constraints.
bool propagate(const Algebra &A, const Bimodule &M, Parametrisation &P)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim(), d = M.dim();
  const std::size_t N = P.gens.size() * d;
  std::vector<const SparseMatrix *> lmats, rmats;
  for (std::size_t i = 0; i < n; ++i) {
    lmats.push_back(&M.left(i));
    rmats.push_back(&M.right(i));
  }
  std::vector<SparseMatrix> rs;
  for (const auto &s : P.gens)
    rs.push_back(combine(F, rmats, s, d));

  EchelonBasis eb(F, n, true);
  P.reached = {A.unit()};
  P.value = {Matrix(F, d, N)};
  P.constraints.clear();
  eb.insert(A.unit());
  for (std::size_t k = 0; k < P.reached.size(); ++k) {
    SparseMatrix lu = combine(F, lmats, P.reached[k], d);
    for (std::size_t s = 0; s < P.gens.size(); ++s) {
      Vec w = A.mul(P.reached[k], P.gens[s]);
      Matrix Dw(F, d, N);
      rs[s].apply_add(F, P.value[k], Dw);
      for (std::size_t l = 0; l < d; ++l)
        for (const auto &t : lu.column(l))
          Dw.at(t.index, s * d + l) = F.add(Dw(t.index, s * d + l), t.value);
      auto c = eb.coordinates(w);
      if (!c) {
        eb.insert(w);
        P.reached.push_back(std::move(w));
        P.value.push_back(std::move(Dw));
        continue;
      }
      for (std::size_t t = 0; t < c->size(); ++t)
        if ((*c)[t])
          for (std::size_t r = 0; r < d; ++r) {
            Elt *dst = Dw.row(r);
            const Elt *src = P.value[t].row(r);
            for (std::size_t x = 0; x < N; ++x)
              if (src[x])
                dst[x] = F.sub(dst[x], F.mul((*c)[t], src[x]));
          }
      for (std::size_t r = 0; r < d; ++r) {
        Vec row = Dw.row_vec(r);
        if (!is_zero(row))
          P.constraints.push_back(std::move(row));
      }
    }
  }
  if (P.reached.size() == n)
    return true;
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = A.basis_vector(i);
    if (!eb.contains(b)) {
      P.gens.push_back(std::move(b));
      break;
    }
  }
  return false;
}

} // namespace

Matrix inner_derivation(const Algebra &A, const Bimodule &M, const Vec &x)
{
  check_shapes(A, M);
  const FqField &F = A.field();
  Matrix D(F, A.dim(), M.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec xa = M.right(i).apply(F, x);
    Vec ax = M.left(i).apply(F, x);
    for (std::size_t k = 0; k < M.dim(); ++k)
      D.at(i, k) = F.sub(xa[k], ax[k]);
  }
  return D;
}

std::vector<Matrix> inner_derivations(const Algebra &A, const Bimodule &M)
{
  std::vector<Matrix> all;
  for (std::size_t l = 0; l < M.dim(); ++l) {
    Vec x(M.dim(), 0);
    x[l] = 1;
    all.push_back(inner_derivation(A, M, x));
  }
  return span_basis(A.field(), all, A.dim(), M.dim());
}

bool is_derivation(const Algebra &A, const Bimodule &M, const Matrix &D)
{
  check_shapes(A, M);
  if (D.rows() != A.dim() || D.cols() != M.dim())
    return false;
  Vec r(M.dim());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      residual(A, M, D, i, j, r);
      if (!is_zero(r))
        return false;
    }
  return true;
}

DerSpace derivation_space(const Algebra &A, const Bimodule &M, const Bounds &b)
{
  check_shapes(A, M);
  const FqField &F = A.field();
  const std::size_t n = A.dim(), d = M.dim();
  if (static_cast<std::uint64_t>(n) * d > b.linear)
    throw BoundExceeded("derivation system of size " + std::to_string(n) + " x " +
                        std::to_string(d) + " exceeds the linear bound");

  Parametrisation P;
  for (const auto &h : A.generator_hint())
    P.gens.push_back(h);
  while (!propagate(A, M, P)) {
  }
  const std::size_t N = P.gens.size() * d;
  KernelTracker ker(F, N);
  for (const auto &row : P.constraints)
    ker.add_row(row);

  // Express D(b_k) through the reached basis.
  Matrix W = Matrix::from_rows(F, P.reached, n);
  auto Winv = inverse(W.transpose());
  if (!Winv)
    throw InternalError("reached vectors are not a basis");
  // The columns of W^T are the reached vectors, so b_k = sum_t Winv(t, k) reached_t.
  std::vector<Matrix> candidates;
  for (const auto &x : ker.basis()) {
    std::vector<Vec> dv(n);
    for (std::size_t t = 0; t < n; ++t)
      dv[t] = P.value[t].apply(x);
    Matrix D(F, n, d);
    for (std::size_t k = 0; k < n; ++k) {
      Elt *row = D.row(k);
      for (std::size_t t = 0; t < n; ++t) {
        Elt c = (*Winv)(t, k);
        if (!c)
          continue;
        for (std::size_t l = 0; l < d; ++l)
          if (dv[t][l])
            row[l] = F.add(row[l], F.mul(c, dv[t][l]));
      }
    }
    candidates.push_back(std::move(D));
  }

  // The Leibniz rule on every basis pair, imposed on the candidates.
  KernelTracker pairs(F, candidates.size());
  std::vector<Vec> res(candidates.size(), Vec(d));
  for (std::size_t i = 0; i < n && pairs.dim() > 0; ++i)
    for (std::size_t j = 0; j < n && pairs.dim() > 0; ++j) {
      bool any = false;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        residual(A, M, candidates[c], i, j, res[c]);
        any = any || !is_zero(res[c]);
      }
      if (!any)
        continue;
      Vec row(candidates.size());
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t c = 0; c < candidates.size(); ++c)
          row[c] = res[c][k];
        pairs.add_row(row);
      }
    }
  std::vector<Matrix> der;
  for (const auto &x : pairs.basis()) {
    Matrix D(F, n, d);
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (x[c])
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < d; ++l)
            if (candidates[c](k, l))
              D.at(k, l) = F.add(D(k, l), F.mul(x[c], candidates[c](k, l)));
    der.push_back(std::move(D));
  }

  DerSpace out;
  out.field = F;
  out.dim_algebra = n;
  out.dim_module = d;
  out.derivations = span_basis(F, der, n, d);
  out.inner = inner_derivations(A, M);
  EchelonBasis span(F, n * d);
  for (const auto &D : out.derivations)
    span.insert(flatten(D));
  for (const auto &D : out.inner)
    if (!span.contains(flatten(D)))
      throw InternalError("inner derivation outside the computed derivation space");
  return out;
}

DerSpace derivation_space(const Algebra &A, const Bounds &b)
{
  return derivation_space(A, Bimodule::regular(A), b);
}

std::size_t hh1_dim(const Algebra &A, const Bimodule &M, const Bounds &b)
{
  return derivation_space(A, M, b).hh1();
}

std::size_t hh1_dim(const Algebra &A, const Bounds &b) { return derivation_space(A, b).hh1(); }

} // namespace hhb::exalg
