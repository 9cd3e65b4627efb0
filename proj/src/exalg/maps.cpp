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

#include "hhblocks/exalg/maps.hpp"

namespace hhb::exalg {

using permcore::PermGroup;

TriangularAlgebra triangular_algebra(const Algebra &A, const Algebra &B, const Bimodule &M,
                                     const Bounds &b)
{
  if (M.left_algebra().dim() != A.dim() || M.right_algebra().dim() != B.dim())
    throw InvalidArgument("triangular_algebra: M is not an A-B-bimodule");
  if (!(A.field() == B.field()) || !(A.field() == M.field()))
    throw InvalidArgument("triangular_algebra: different fields");
  const std::size_t a = A.dim(), m = M.dim(), nb = B.dim(), n = a + m + nb;
  if (static_cast<std::uint64_t>(n) * n > b.linear)
    throw BoundExceeded("triangular algebra of dimension " + std::to_string(n) +
                        " exceeds the linear bound");
  auto shifted = [](const SparseVec &s, std::size_t off) {
    SparseVec out;
    for (const auto &t : s)
      out.push_back({static_cast<std::uint32_t>(t.index + off), t.value});
    return out;
  };
  std::vector<SparseVec> prod(n * n);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j)
      prod[i * n + j] = A.product(i, j);
    for (std::size_t l = 0; l < m; ++l)
      prod[i * n + a + l] = shifted(M.left(i).column(l), a);
  }
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = 0; k < nb; ++k)
      prod[(a + l) * n + a + m + k] = shifted(M.right(k).column(l), a);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      prod[(a + m + i) * n + a + m + j] = shifted(B.product(i, j), a + m);

  std::vector<std::string> labels;
  for (const auto &s : A.labels())
    labels.push_back("A:" + s);
  for (std::size_t l = 0; l < m; ++l)
    labels.push_back("M:m" + std::to_string(l));
  for (const auto &s : B.labels())
    labels.push_back("B:" + s);

  auto embed = [n](const Vec &v, std::size_t off) {
    Vec out(n, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    return out;
  };
  Vec eA = embed(A.unit(), 0), eB = embed(B.unit(), a + m);
  std::vector<Vec> hint;
  for (const auto &h : A.generator_hint())
    hint.push_back(embed(h, 0));
  for (const auto &h : M.generator_hint())
    hint.push_back(embed(h, a));
  for (const auto &h : B.generator_hint())
    hint.push_back(embed(h, a + m));
  Vec unit(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    unit[i] = A.field().add(eA[i], eB[i]);
  TriangularAlgebra T{Algebra::from_structure(A.field(), std::move(labels), std::move(prod),
                                              std::move(unit), std::move(hint)),
                      std::move(eA), std::move(eB), a, m, nb};
  return T;
}

Corner corner_algebra(const Algebra &T, const Vec &e)
{
  const FqField &F = T.field();
  if (e.size() != T.dim() || !T.is_idempotent(e) || is_zero(e))
    throw InvalidArgument("corner_algebra: not a nonzero idempotent");
  const std::size_t n = T.dim();
  EchelonBasis basis(F, n, true);
  std::vector<Vec> chosen;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    Vec bi = T.basis_vector(i);
    Vec v = T.mul(T.mul(e, bi), e);
    if (basis.insert(v)) {
      labels.push_back(v == bi ? T.labels()[i] : "e*" + T.labels()[i] + "*e");
      chosen.push_back(std::move(v));
    }
  }
  const std::size_t d = chosen.size();
  auto coords = [&](const Vec &v) {
    auto c = basis.coordinates(v);
    if (!c)
      throw InternalError("corner_algebra: product left eTe");
    return *c;
  };
  std::vector<SparseVec> prod(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      Vec c = coords(T.mul(chosen[s], chosen[t]));
      for (std::uint32_t k = 0; k < d; ++k)
        if (c[k])
          prod[s * d + t].push_back({k, c[k]});
    }
  Matrix emb(F, n, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t k = 0; k < n; ++k)
      emb.at(k, t) = chosen[t][k];
  return {Algebra::from_structure(F, std::move(labels), std::move(prod), coords(e)), std::move(emb)};
}

RestrictedDerivation restrict_derivation_deg1(const Algebra &T, const Vec &e, const Matrix &d)
{
  const FqField &F = T.field();
  if (e.size() != T.dim() || !T.is_idempotent(e))
    throw InvalidArgument("restrict_derivation_deg1: not an idempotent");
  Bimodule reg = Bimodule::regular(T);
  if (!is_derivation(T, reg, d))
    throw InvalidArgument("restrict_derivation_deg1: not a derivation");
  Vec x = apply_derivation(d, e);
  Vec m = T.sub(T.mul(x, e), T.mul(e, x));
  Matrix adj = inner_derivation(T, reg, m);
  Matrix d2(F, d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t k = 0; k < d.cols(); ++k)
      d2.at(i, k) = F.sub(d(i, k), adj(i, k));
  if (!is_zero(apply_derivation(d2, e)))
    throw InternalError("adjusted derivation does not vanish on the idempotent");

  RestrictedDerivation out{corner_algebra(T, e), Matrix(), m};
  const std::size_t c = out.corner.algebra.dim();
  EchelonBasis basis(F, T.dim(), true);
  for (std::size_t t = 0; t < c; ++t)
    basis.insert(out.corner.embedding.col_vec(t));
  out.derivation = Matrix(F, c, c);
  for (std::size_t t = 0; t < c; ++t) {
    Vec y = apply_derivation(d2, out.corner.embedding.col_vec(t));
    y = T.mul(T.mul(e, y), e);
    auto co = basis.coordinates(y);
    if (!co)
      throw InternalError("compressed derivation left eTe");
    for (std::size_t k = 0; k < c; ++k)
      out.derivation.at(t, k) = (*co)[k];
  }
  if (!is_derivation(out.corner.algebra, Bimodule::regular(out.corner.algebra), out.derivation))
    throw InternalError("compressed map is not a derivation of eTe");
  return out;
}

Pullback alpha_beta_pullback_space(const PermGroup &G, const PermGroup &P, const FqField &F,
                                   const Bounds &b)
{
  if (!P.is_subgroup_of(G))
    throw InvalidArgument("alpha_beta_pullback: P is not a subgroup of G");
  Algebra kP = group_algebra(P, F, b);
  Algebra kG = group_algebra(G, F, b);
  Matrix iota = inclusion_map(kP, kG);
  const std::size_t np = kP.dim(), ng = kG.dim();
  std::vector<std::size_t> pos(np); // index in G of the i-th element of P
  for (std::size_t i = 0; i < np; ++i)
    pos[i] = kG.group_basis()->index_of(kP.group_basis()->elements[i]);

  DerSpace derP = derivation_space(kP, b);
  DerSpace derG = derivation_space(kG, b);
  Bimodule kG_PP = Bimodule::restrict(Bimodule::regular(kG), kP, iota, kP, iota);

  // W = beta(Der(kG, kG)) + Inn(kP, kG), as np x ng matrices.
  EchelonBasis W(F, np * ng);
  for (const auto &delta : derG.derivations) {
    Matrix r(F, np, ng);
    for (std::size_t i = 0; i < np; ++i)
      std::copy(delta.row(pos[i]), delta.row(pos[i]) + ng, r.row(i));
    W.insert(flatten(r));
  }
  for (const auto &D : inner_derivations(kP, kG_PP))
    W.insert(flatten(D));

  // Residues of alpha(theta) modulo W; their dependencies give the preimage.
  Matrix R(F, 0, np * ng);
  for (const auto &theta : derP.derivations) {
    Matrix a(F, np, ng);
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t k = 0; k < np; ++k)
        a.at(i, pos[k]) = theta(i, k);
    Vec v = flatten(a);
    W.reduce(v);
    R.append_row(v);
  }
  Pullback out;
  out.inner_dim = derP.dim_inn();
  out.hh1_P = derP.hh1();
  if (derP.derivations.empty())
    return out;
  Matrix deps = nullspace(R.transpose());
  std::vector<Matrix> pre;
  for (std::size_t r = 0; r < deps.rows(); ++r) {
    Matrix D(F, np, np);
    for (std::size_t j = 0; j < derP.derivations.size(); ++j)
      if (deps(r, j))
        for (std::size_t i = 0; i < np; ++i)
          for (std::size_t k = 0; k < np; ++k)
            D.at(i, k) = F.add(D(i, k), F.mul(deps(r, j), derP.derivations[j](i, k)));
    pre.push_back(std::move(D));
  }
  out.preimage = span_basis(F, pre, np, np);
  EchelonBasis check(F, np * np);
  for (const auto &D : out.preimage)
    check.insert(flatten(D));
  for (const auto &D : derP.inner)
    if (!check.contains(flatten(D)))
      throw InternalError("inner derivations of kP are missing from the preimage");
  out.dimension = out.preimage.size() - derP.dim_inn();
  return out;
}

std::size_t alpha_beta_pullback(const PermGroup &G, const PermGroup &P, const FqField &F,
                                const Bounds &b)
{
  return alpha_beta_pullback_space(G, P, F, b).dimension;
}

} // namespace hhb::exalg
