#pragma once

// Dense reference computations for the algebra layer. Nothing here is
// shared with the library beyond field arithmetic and row reduction.

#include "hhblocks/exalg/algebra.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using hhb::exalg::Algebra;
using hhb::exalg::Elt;
using hhb::exalg::FqField;
using hhb::exalg::Matrix;
using hhb::exalg::Vec;

/// Row-reduction rank over F without pivot tricks.
inline std::size_t dense_rank(const FqField &F, std::vector<Vec> rows, std::size_t cols)
{
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    Elt inv = F.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Elt f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

/// Structure constant c[i][j][k] read off the algebra.
inline Elt sc(const Algebra &A, std::size_t i, std::size_t j, std::size_t k)
{
  for (const auto &t : A.product(i, j))
    if (t.index == k)
      return t.value;
  return 0;
}

/// dim Der(A, A) from the full Leibniz system on all basis pairs; unknowns
/// D(i, l) are numbered i * n + l.
inline std::size_t naive_der_dim(const Algebra &A)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec r(n * n, 0);
        for (std::size_t t = 0; t < n; ++t) {
          // D(b_i b_j)_k
          Elt c = sc(A, i, j, t);
          if (c)
            r[t * n + k] = F.add(r[t * n + k], c);
          // (D(b_i) b_j)_k = sum_l D(i,l) c[l][j][k]
          Elt a = sc(A, t, j, k);
          if (a)
            r[i * n + t] = F.sub(r[i * n + t], a);
          // (b_i D(b_j))_k = sum_l c[i][l][k] D(j,l)
          Elt b = sc(A, i, t, k);
          if (b)
            r[j * n + t] = F.sub(r[j * n + t], b);
        }
        bool nz = false;
        for (auto x : r)
          nz = nz || x;
        if (nz)
          rows.push_back(std::move(r));
      }
  return n * n - dense_rank(F, std::move(rows), n * n);
}

/// dim Inn(A, A): rank of the maps a -> xa - ax over basis elements x.
inline std::size_t naive_inn_dim(const Algebra &A)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < n; ++x) {
    Vec r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        r[i * n + k] = F.sub(sc(A, x, i, k), sc(A, i, x, k));
    rows.push_back(std::move(r));
  }
  return dense_rank(F, std::move(rows), n * n);
}

/// dim Der(A, M) for an A-A-bimodule M, same system with the actions read
/// off act_left / act_right on basis vectors.
inline std::size_t naive_der_dim(const Algebra &A, const hhb::exalg::Bimodule &M)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim(), d = M.dim();
  // lv[i][l] = b_i . m_l, rv[j][l] = m_l . b_j
  std::vector<std::vector<Vec>> lv(n, std::vector<Vec>(d)), rv(n, std::vector<Vec>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      Vec m(d, 0);
      m[l] = 1;
      lv[i][l] = M.act_left(A.basis_vector(i), m);
      rv[i][l] = M.act_right(m, A.basis_vector(i));
    }
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec r(n * d, 0);
        for (std::size_t t = 0; t < n; ++t) {
          Elt c = sc(A, i, j, t);
          if (c)
            r[t * d + k] = F.add(r[t * d + k], c);
        }
        for (std::size_t l = 0; l < d; ++l) {
          r[i * d + l] = F.sub(r[i * d + l], rv[j][l][k]);
          r[j * d + l] = F.sub(r[j * d + l], lv[i][l][k]);
        }
        rows.push_back(std::move(r));
      }
  return n * d - dense_rank(F, std::move(rows), n * d);
}

/// dim Z(A) from the commutator equations z b_j = b_j z.
inline std::size_t naive_center_dim(const Algebra &A)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec r(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        r[i] = F.sub(sc(A, i, j, k), sc(A, j, i, k));
      rows.push_back(std::move(r));
    }
  return n - dense_rank(F, std::move(rows), n);
}

/// Number of idempotents of the center, by enumeration over F_q^dim Z.
inline std::uint64_t count_central_idempotents(const Algebra &A, const Matrix &Z)
{
  const FqField &F = A.field();
  const std::size_t r = Z.rows();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i)
    total *= F.order();
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec z(A.dim(), 0);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < r; ++i) {
      Elt c = static_cast<Elt>(rest % F.order());
      rest /= F.order();
      for (std::size_t k = 0; k < A.dim(); ++k)
        z[k] = F.add(z[k], F.mul(c, Z(i, k)));
    }
    if (A.mul(z, z) == z)
      ++count;
  }
  return count;
}

} // namespace oracle
