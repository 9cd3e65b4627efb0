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

#include "hhblocks/exalg/blocks.hpp"

#include "hhblocks/exalg/derivations.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hhb::exalg {

using permcore::Permutation;
using permcore::PermGroup;

Matrix center(const Algebra &A)
{
  const FqField &F = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> tests = A.generator_hint();
  if (tests.empty())
    for (std::size_t i = 0; i < n; ++i)
      tests.push_back(A.basis_vector(i));
  // Column l of the stacked system is [z_l, t] for the test element t.
  Matrix sys(F, 0, n);
  for (const auto &t : tests) {
    Matrix block(F, n, n);
    for (std::size_t l = 0; l < n; ++l) {
      Vec b = A.basis_vector(l);
      Vec c = A.sub(A.mul(b, t), A.mul(t, b));
      for (std::size_t k = 0; k < n; ++k)
        block.at(k, l) = c[k];
    }
    for (std::size_t k = 0; k < n; ++k)
      sys.append_row(block.row_vec(k));
  }
  return row_reduce(nullspace(sys)).rref;
}

unsigned splitting_degree(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  if (!is_prime(p))
    throw InvalidArgument("not a prime: " + std::to_string(p));
  std::uint64_t e = permcore::exponent(G, b);
  while (e % p == 0)
    e /= p;
  if (e == 1)
    return 1;
  unsigned m = 1;
  std::uint64_t r = p % e;
  while (r != 1) {
    r = r * (p % e) % e;
    ++m;
  }
  return m;
}

namespace {

// ------------------------------------------------------------ polynomials
// Coefficients low to high, no trailing zeros.

using Poly = std::vector<Elt>;

void trim(Poly &f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

Poly poly_mod(const FqField &F, Poly a, const Poly &m)
{
  trim(a);
  const Elt lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    Elt c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mul(const FqField &F, const Poly &a, const Poly &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

Poly poly_div(const FqField &F, Poly a, const Poly &m)
{
  trim(a);
  Poly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  const Elt lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    Elt c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return q;
}

Poly poly_gcd(const FqField &F, Poly a, Poly b)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elt inv = F.inv(a.back());
    for (auto &c : a)
      c = F.mul(c, inv);
  }
  return a;
}

Poly poly_powmod(const FqField &F, Poly base, std::uint64_t e, const Poly &m)
{
  Poly r{1};
  base = poly_mod(F, base, m);
  while (e) {
    if (e & 1)
      r = poly_mod(F, poly_mul(F, r, base), m);
    e >>= 1;
    if (e)
      base = poly_mod(F, poly_mul(F, base, base), m);
  }
  return r;
}

Elt poly_eval(const FqField &F, const Poly &f, Elt x)
{
  Elt r = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    r = F.add(F.mul(r, x), f[i]);
  return r;
}

// Roots of a monic squarefree polynomial that splits over F.
void split_roots(const FqField &F, const Poly &f, std::vector<Elt> &out)
{
  if (f.size() <= 1)
    return;
  if (f.size() == 2) {
    out.push_back(F.neg(F.div(f[0], f[1])));
    return;
  }
  const std::uint64_t q = F.order();
  const bool even = F.characteristic() == 2;
  for (std::uint64_t a = even ? 1 : 0; a < q; ++a) {
    Poly h;
    if (even) {
      // Absolute trace of a.x: roots r, r' are separated once Tr(a(r - r')) != 0.
      Poly y{0, static_cast<Elt>(a)};
      Poly acc = y;
      const unsigned m = static_cast<unsigned>(std::bit_width(q) - 1);
      for (unsigned i = 1; i < m; ++i) {
        y = poly_mod(F, poly_mul(F, y, y), f);
        acc.resize(std::max(acc.size(), y.size()), 0);
        for (std::size_t k = 0; k < y.size(); ++k)
          acc[k] = F.add(acc[k], y[k]);
      }
      trim(acc);
      h = std::move(acc);
    } else {
      // (x + a)^((q-1)/2) - 1 vanishes at the roots r with r + a a nonzero square.
      h = poly_powmod(F, Poly{static_cast<Elt>(a), 1}, (q - 1) / 2, f);
      if (h.empty())
        h = {F.neg(1)};
      else
        h[0] = F.sub(h[0], 1);
      trim(h);
    }
    Poly g = poly_gcd(F, h, f);
    if (g.size() > 1 && g.size() < f.size()) {
      split_roots(F, g, out);
      split_roots(F, poly_div(F, f, g), out);
      return;
    }
  }
  throw InternalError("polynomial does not split into distinct linear factors");
}

std::vector<Elt> roots(const FqField &F, const Poly &f)
{
  std::vector<Elt> out;
  if (F.order() <= (1u << 16)) {
    for (std::uint64_t x = 0; x < F.order(); ++x)
      if (poly_eval(F, f, static_cast<Elt>(x)) == 0)
        out.push_back(static_cast<Elt>(x));
  } else {
    split_roots(F, f, out);
    std::sort(out.begin(), out.end());
  }
  return out;
}

// ------------------------------------------------------------ idempotents

// Minimal polynomial of w in the algebra eA (unit e).
Poly minimal_polynomial(const Algebra &A, const Vec &w, const Vec &e)
{
  const FqField &F = A.field();
  EchelonBasis eb(F, A.dim(), true);
  Vec p = e;
  for (;;) {
    auto c = eb.coordinates(p);
    if (c) {
      Poly f(c->size() + 1, 0);
      for (std::size_t i = 0; i < c->size(); ++i)
        f[i] = F.neg((*c)[i]);
      f.back() = 1;
      return f;
    }
    eb.insert(p);
    p = A.mul(p, w);
  }
}

bool lex_less(const Vec &a, const Vec &b) { return a < b; }

// Frobenius-fixed part {z in Z : z^q = z} of the center.
std::vector<Vec> fixed_subalgebra(const Algebra &A)
{
  const FqField &F = A.field();
  Matrix Z = center(A);
  const std::size_t r = Z.rows();
  EchelonBasis zb(F, A.dim(), true);
  for (std::size_t i = 0; i < r; ++i)
    zb.insert(Z.row_vec(i));
  Matrix phi(F, r, r); // column i: coordinates of z_i^q - z_i
  for (std::size_t i = 0; i < r; ++i) {
    Vec z = Z.row_vec(i);
    Vec d = A.sub(A.power(z, F.order()), z);
    auto c = zb.coordinates(d);
    if (!c)
      throw InternalError("Frobenius image left the center");
    for (std::size_t k = 0; k < r; ++k)
      phi.at(k, i) = (*c)[k];
  }
  Matrix ker = nullspace(phi);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec v(A.dim(), 0);
    for (std::size_t i = 0; i < r; ++i)
      if (ker(k, i))
        axpy(F, v, ker(k, i), Z.row_vec(i));
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

std::vector<Vec> central_idempotents(const Algebra &A, const Bounds &b)
{
  if (A.dim() > b.algebra)
    throw BoundExceeded("algebra of dimension " + std::to_string(A.dim()) +
                        " exceeds the algebra bound");
  const FqField &F = A.field();
  std::vector<Vec> fixed = fixed_subalgebra(A);
  std::vector<Vec> idem{A.unit()};
  for (const auto &z : fixed) {
    std::vector<Vec> next;
    for (const auto &e : idem) {
      Vec w = A.mul(z, e);
      Poly mu = minimal_polynomial(A, w, e);
      if (mu.size() <= 2) {
        next.push_back(e);
        continue;
      }
      auto rs = roots(F, mu);
      if (rs.size() + 1 != mu.size())
        throw InternalError("central element is not split semisimple");
      for (Elt lambda : rs) {
        Vec f = e;
        for (Elt mu_ : rs) {
          if (mu_ == lambda)
            continue;
          Vec factor = A.sub(w, A.scale(mu_, e));
          f = A.scale(F.inv(F.sub(lambda, mu_)), A.mul(f, factor));
        }
        next.push_back(std::move(f));
      }
    }
    idem = std::move(next);
  }
  if (idem.size() != fixed.size())
    throw InternalError("number of block idempotents does not match the fixed subalgebra");

  Vec sum = A.zero();
  for (std::size_t i = 0; i < idem.size(); ++i) {
    if (!A.is_idempotent(idem[i]) || !A.is_central(idem[i]))
      throw InternalError("computed block idempotent is not a central idempotent");
    for (std::size_t j = 0; j < i; ++j)
      if (!is_zero(A.mul(idem[i], idem[j])))
        throw InternalError("computed block idempotents are not orthogonal");
    sum = A.add(sum, idem[i]);
  }
  if (sum != A.unit())
    throw InternalError("block idempotents do not sum to 1");

  std::sort(idem.begin(), idem.end(), lex_less);
  if (A.group_basis()) {
    auto aug = [&](const Vec &e) {
      Elt s = 0;
      for (auto c : e)
        s = F.add(s, c);
      return s;
    };
    std::stable_partition(idem.begin(), idem.end(), [&](const Vec &e) { return aug(e) != 0; });
  }
  return idem;
}

Algebra block_algebra(const Algebra &A, const Vec &e)
{
  const FqField &F = A.field();
  if (e.size() != A.dim() || !A.is_idempotent(e) || !A.is_central(e))
    throw InvalidArgument("block_algebra: not a central idempotent");
  if (is_zero(e))
    throw InvalidArgument("block_algebra: zero idempotent");
  if (e == A.unit())
    return A;
  const std::size_t n = A.dim();
  std::vector<Vec> eb(n);
  for (std::size_t k = 0; k < n; ++k)
    eb[k] = A.mul(e, A.basis_vector(k));
  EchelonBasis basis(F, n, true);
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < n; ++k)
    if (basis.insert(eb[k]))
      chosen.push_back(k);
  const std::size_t d = chosen.size();
  auto coords = [&](const Vec &v) {
    auto c = basis.coordinates(v);
    if (!c)
      throw InternalError("block_algebra: product left eA");
    return *c;
  };
  std::vector<SparseVec> prod(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      Vec v(n, 0);
      for (const auto &term : A.product(chosen[s], chosen[t]))
        axpy(F, v, term.value, eb[term.index]);
      Vec c = coords(v);
      for (std::uint32_t k = 0; k < d; ++k)
        if (c[k])
          prod[s * d + t].push_back({k, c[k]});
    }
  std::vector<std::string> labels;
  for (auto k : chosen)
    labels.push_back("e*" + A.labels()[k]);
  std::vector<Vec> hint;
  for (const auto &h : A.generator_hint())
    hint.push_back(coords(A.mul(e, h)));
  return Algebra::from_structure(F, std::move(labels), std::move(prod), coords(e), std::move(hint));
}

// ------------------------------------------------------------ defect groups

namespace {

using Mask = std::uint64_t;

struct SylowData {
  PermGroup P;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, unsigned> index;
  std::vector<unsigned> mult; // mult[i*n+j] = index of elements[i]*elements[j]
};

Mask closure(const SylowData &S, std::vector<unsigned> gens)
{
  const std::size_t n = S.elements.size();
  Mask m = 1; // identity has index 0
  std::vector<unsigned> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (unsigned g : gens) {
      unsigned x = S.mult[queue[k] * n + g];
      if (!(m >> x & 1)) {
        m |= Mask{1} << x;
        queue.push_back(x);
      }
    }
  return m;
}

// All subgroups of P as (mask, generator indices), trivial group first.
std::vector<std::pair<Mask, std::vector<unsigned>>> all_subgroups(const SylowData &S)
{
  std::vector<std::pair<Mask, std::vector<unsigned>>> subs{{Mask{1}, {}}};
  std::map<Mask, std::size_t> seen{{Mask{1}, 0}};
  for (std::size_t k = 0; k < subs.size(); ++k)
    for (unsigned x = 1; x < S.elements.size(); ++x) {
      if (subs[k].first >> x & 1)
        continue;
      auto gens = subs[k].second;
      gens.push_back(x);
      Mask m = closure(S, gens);
      if (seen.emplace(m, subs.size()).second)
        subs.push_back({m, std::move(gens)});
    }
  std::stable_sort(subs.begin(), subs.end(), [](const auto &a, const auto &b) {
    return std::popcount(a.first) < std::popcount(b.first);
  });
  return subs;
}

// Span of Tr_Q^G applied to the Q-orbit sums of G.
bool in_trace_image(const Algebra &kG, const GroupBasis &gb, const std::vector<Permutation> &Q,
                    const Vec &e)
{
  const FqField &F = kG.field();
  const std::size_t n = gb.elements.size();
  // Left transversal of Q in G.
  std::vector<char> covered(n, 0);
  std::vector<Permutation> T;
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i])
      continue;
    T.push_back(gb.elements[i]);
    for (const auto &h : Q)
      covered[gb.index_of(gb.elements[i] * h)] = 1;
  }
  std::vector<char> done(n, 0);
  EchelonBasis span(F, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i])
      continue;
    std::vector<std::uint32_t> orbit;
    for (const auto &h : Q) {
      std::uint32_t k = gb.index_of(h * gb.elements[i] * h.inverse());
      if (!done[k]) {
        done[k] = 1;
        orbit.push_back(k);
      }
    }
    Vec tr(n, 0);
    for (const auto &t : T) {
      Permutation ti = t.inverse();
      for (auto k : orbit) {
        std::uint32_t x = gb.index_of(t * gb.elements[k] * ti);
        tr[x] = F.add(tr[x], 1);
      }
    }
    if (!is_zero(tr))
      span.insert(tr);
  }
  return span.contains(e);
}

} // namespace

DefectGroup defect_group(const Algebra &kG, const Vec &e, const Bounds &b)
{
  const GroupBasis *gb = kG.group_basis();
  if (!gb)
    throw InvalidArgument("defect_group needs a group algebra");
  if (e.size() != kG.dim() || !kG.is_idempotent(e) || !kG.is_central(e) || is_zero(e))
    throw InvalidArgument("defect_group: not a nonzero central idempotent");
  const PermGroup &G = gb->group;
  const std::uint64_t p = kG.field().characteristic();

  SylowData S;
  S.P = permcore::sylow_subgroup(G, p, b);
  if (S.P.order() > b.defect_sylow || S.P.order() > 64)
    throw BoundExceeded("Sylow subgroup of order " + std::to_string(S.P.order()) +
                        " exceeds the defect-group bound");
  S.elements = S.P.elements(b);
  for (unsigned i = 0; i < S.elements.size(); ++i)
    S.index.emplace(S.elements[i], i);
  const std::size_t n = S.elements.size();
  S.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      S.mult[i * n + j] = S.index.at(S.elements[i] * S.elements[j]);

  auto subs = all_subgroups(S);
  std::vector<std::size_t> covering;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    Mask m = subs[k].first;
    // Supersets of a covering subgroup also cover.
    bool above = false;
    for (auto c : covering)
      if ((subs[c].first & m) == subs[c].first)
        above = true;
    if (above)
      continue;
    std::vector<Permutation> Q;
    for (unsigned x = 0; x < n; ++x)
      if (m >> x & 1)
        Q.push_back(S.elements[x]);
    if (in_trace_image(kG, *gb, Q, e))
      covering.push_back(k);
  }
  if (covering.empty())
    throw InternalError("idempotent is not a relative trace from a Sylow subgroup");

  auto group_of = [&](std::size_t k) {
    std::vector<Permutation> gens;
    for (auto g : subs[k].second)
      gens.push_back(S.elements[g]);
    if (gens.empty())
      return PermGroup::trivial(G.degree());
    return PermGroup::from_generators(gens);
  };
  PermGroup D = group_of(covering.front());
  for (std::size_t i = 1; i < covering.size(); ++i) {
    PermGroup D2 = group_of(covering[i]);
    if (!permcore::conjugating_element(G, D, D2, b))
      throw InternalError("minimal trace-covering subgroups " + D.to_string() + " and " +
                          D2.to_string() + " are not conjugate");
  }

  // Cross-check: D is a Sylow subgroup of C_G(x) for some p-regular x.
  bool witnessed = false;
  for (const auto &c : G.classes(b)) {
    if (c.representative.order() % p == 0)
      continue;
    if (p_part(G.order() / c.size, p) != D.order())
      continue;
    for (const auto &g : gb->elements) {
      Permutation y = c.representative.conj(g);
      bool ok = true;
      for (const auto &d : D.generators())
        if (d * y != y * d)
          ok = false;
      if (ok) {
        witnessed = true;
        break;
      }
    }
    if (witnessed)
      break;
  }
  if (!witnessed)
    throw InternalError("defect group " + D.to_string() +
                        " is not a Sylow subgroup of any p-regular centraliser");
  unsigned d = 0;
  for (std::uint64_t o = D.order(); o > 1; o /= p)
    ++d;
  return {D, d};
}

std::vector<BlockData> block_decomposition(const PermGroup &G, const FqField &F, bool with_hh1,
                                           const Bounds &b)
{
  Algebra kG = group_algebra(G, F, b);
  std::vector<BlockData> out;
  bool first = true;
  for (const auto &e : central_idempotents(kG, b)) {
    BlockData bd;
    bd.idempotent = e;
    Elt aug = 0;
    for (auto c : e)
      aug = F.add(aug, c);
    bd.principal = first && aug != 0;
    first = false;
    Algebra B = block_algebra(kG, e);
    bd.dimension = B.dim();
    auto dg = defect_group(kG, e, b);
    bd.defect_group = dg.group;
    bd.defect = dg.defect;
    if (with_hh1)
      bd.hh1 = hh1_dim(B, b);
    out.push_back(std::move(bd));
  }
  return out;
}

} // namespace hhb::exalg
