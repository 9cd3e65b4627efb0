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

#include "hhblocks/exalg/algebra.hpp"

#include "hhblocks/permcore/catalog.hpp"

#include <algorithm>
#include <tuple>

namespace hhb::exalg {

using permcore::Permutation;
using permcore::PermGroup;

// ---------------------------------------------------------------- sparse

SparseMatrix SparseMatrix::from_dense(const Matrix &m)
{
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j))
        s.columns_[j].push_back({static_cast<std::uint32_t>(i), m(i, j)});
  return s;
}

Vec SparseMatrix::apply(const FqField &F, const Vec &v) const
{
  Vec out(rows_, 0);
  for (std::size_t l = 0; l < cols_; ++l) {
    if (!v[l])
      continue;
    for (const auto &t : columns_[l])
      out[t.index] = F.add(out[t.index], F.mul(v[l], t.value));
  }
  return out;
}

void SparseMatrix::apply_add(const FqField &F, const Matrix &X, Matrix &Y, Elt c) const
{
  const std::size_t n = X.cols();
  for (std::size_t l = 0; l < cols_; ++l) {
    const Elt *src = X.row(l);
    for (const auto &t : columns_[l]) {
      Elt a = F.mul(c, t.value);
      Elt *dst = Y.row(t.index);
      for (std::size_t k = 0; k < n; ++k)
        if (src[k])
          dst[k] = F.add(dst[k], F.mul(a, src[k]));
    }
  }
}

Matrix SparseMatrix::to_dense(const FqField &F) const
{
  Matrix m(F, rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto &t : columns_[j])
      m.at(t.index, j) = t.value;
  return m;
}

// ---------------------------------------------------------------- algebra

struct Algebra::Impl {
  FqField F;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> products;
  Vec unit;
  std::vector<Vec> hint;
  std::shared_ptr<const GroupBasis> group;
};

std::uint32_t GroupBasis::index_of(const Permutation &g) const
{
  auto it = index.find(g);
  if (it == index.end())
    throw InvalidArgument(g.to_string() + " is not an element of the group");
  return it->second;
}

namespace {

void add_term(const FqField &F, Vec &out, const SparseVec &s, Elt c)
{
  for (const auto &t : s)
    out[t.index] = F.add(out[t.index], F.mul(c, t.value));
}

// Work needed to check every triple, roughly.
double associativity_work(const std::vector<SparseVec> &prod, std::size_t n)
{
  std::vector<double> rowsum(n, 0);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < n; ++k)
      rowsum[t] += static_cast<double>(prod[t * n + k].size());
  double w = 0;
  for (const auto &s : prod)
    for (const auto &t : s)
      w += rowsum[t.index];
  return 2 * w;
}

constexpr double full_check_budget = 3e8;

} // namespace

Algebra Algebra::from_structure(const FqField &F, std::vector<std::string> labels,
                                std::vector<SparseVec> products, Vec unit,
                                std::vector<Vec> generator_hint,
                                std::shared_ptr<const GroupBasis> group)
{
  const std::size_t n = unit.size();
  if (n == 0)
    throw InvalidArgument("algebra of dimension 0");
  if (products.size() != n * n)
    throw InvalidArgument("structure constants have the wrong size");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back("b" + std::to_string(i));
  if (labels.size() != n)
    throw InvalidArgument("wrong number of basis labels");
  for (auto &s : products) {
    std::sort(s.begin(), s.end(), [](const Term &a, const Term &b) { return a.index < b.index; });
    SparseVec merged;
    for (const auto &t : s) {
      if (t.index >= n || !F.is_valid(t.value))
        throw InvalidArgument("structure constant out of range");
      if (!merged.empty() && merged.back().index == t.index)
        merged.back().value = F.add(merged.back().value, t.value);
      else
        merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term &t) { return !t.value; }),
                 merged.end());
    s = std::move(merged);
  }
  for (const auto &h : generator_hint)
    if (h.size() != n)
      throw InvalidArgument("generator hint has the wrong length");
  auto impl = std::make_shared<Impl>();
  impl->F = F;
  impl->dim = n;
  impl->labels = std::move(labels);
  impl->products = std::move(products);
  impl->unit = std::move(unit);
  impl->hint = std::move(generator_hint);
  impl->group = std::move(group);
  Algebra A(std::move(impl));
  if (!A.unit_is_identity())
    throw InvalidArgument("the given unit is not a two-sided identity");
  if (auto bad = A.associativity_failure())
    throw InvalidArgument("associativity fails on basis triple (" + std::to_string((*bad)[0]) + ", " +
                          std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")");
  return A;
}

const FqField &Algebra::field() const noexcept { return impl_->F; }
std::size_t Algebra::dim() const noexcept { return impl_->dim; }
const std::vector<std::string> &Algebra::labels() const noexcept { return impl_->labels; }
const SparseVec &Algebra::product(std::size_t i, std::size_t j) const
{
  return impl_->products[i * impl_->dim + j];
}
const Vec &Algebra::unit() const noexcept { return impl_->unit; }
const std::vector<Vec> &Algebra::generator_hint() const noexcept { return impl_->hint; }
const GroupBasis *Algebra::group_basis() const noexcept { return impl_->group.get(); }

Vec Algebra::basis_vector(std::size_t i) const
{
  Vec v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Vec Algebra::mul(const Vec &a, const Vec &b) const
{
  const auto &F = field();
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw InvalidArgument("vector length does not match the algebra dimension");
  Vec out(n, 0);
  std::vector<std::uint32_t> bs;
  for (std::uint32_t j = 0; j < n; ++j)
    if (b[j])
      bs.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i])
      continue;
    for (auto j : bs)
      add_term(F, out, product(i, j), F.mul(a[i], b[j]));
  }
  return out;
}

Vec Algebra::add(const Vec &a, const Vec &b) const
{
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field().add(out[i], b[i]);
  return out;
}

Vec Algebra::sub(const Vec &a, const Vec &b) const
{
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field().sub(out[i], b[i]);
  return out;
}

Vec Algebra::scale(Elt c, const Vec &a) const
{
  Vec out(a);
  for (auto &x : out)
    x = field().mul(c, x);
  return out;
}

Vec Algebra::power(Vec a, std::uint64_t e) const
{
  Vec r = unit();
  while (e) {
    if (e & 1)
      r = mul(r, a);
    e >>= 1;
    if (e)
      a = mul(a, a);
  }
  return r;
}

bool Algebra::is_central(const Vec &z) const
{
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_vector(i);
    if (mul(z, b) != mul(b, z))
      return false;
  }
  return true;
}

SparseMatrix Algebra::left_matrix(std::size_t i) const
{
  SparseMatrix s(dim(), dim());
  for (std::size_t l = 0; l < dim(); ++l)
    s.column(l) = product(i, l);
  return s;
}

SparseMatrix Algebra::right_matrix(std::size_t j) const
{
  SparseMatrix s(dim(), dim());
  for (std::size_t l = 0; l < dim(); ++l)
    s.column(l) = product(l, j);
  return s;
}

std::optional<std::array<std::size_t, 3>> Algebra::associativity_failure() const
{
  const auto &F = field();
  const std::size_t n = dim();
  // Above the budget only every stride-th left factor is checked.
  std::size_t stride = 1;
  double work = associativity_work(impl_->products, n);
  while (work / static_cast<double>(stride) > full_check_budget)
    ++stride;
  Vec lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto &t : product(i, j))
          add_term(F, lhs, product(t.index, k), t.value);
        for (const auto &t : product(j, k))
          add_term(F, rhs, product(i, t.index), t.value);
        if (lhs != rhs)
          return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

bool Algebra::unit_is_identity() const
{
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_vector(i);
    if (mul(unit(), b) != b || mul(b, unit()) != b)
      return false;
  }
  return true;
}

nlohmann::json Algebra::dump() const
{
  nlohmann::json j;
  j["field"] = {{"p", field().characteristic()},
                {"m", field().degree()},
                {"modulus", field().modulus()}};
  j["labels"] = labels();
  j["unit"] = unit();
  auto c = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k)
      for (const auto &t : product(i, k))
        c.push_back({i, k, t.index, t.value});
  j["constants"] = std::move(c);
  return j;
}

Algebra Algebra::load(const nlohmann::json &j)
{
  try {
    FqField F = FqField::make(j.at("field").at("p").get<std::uint32_t>(),
                              j.at("field").at("m").get<unsigned>());
    if (j.at("field").contains("modulus") &&
        j.at("field").at("modulus").get<std::vector<std::uint32_t>>() != F.modulus())
      throw InvalidArgument("algebra dump uses a different modulus");
    auto labels = j.at("labels").get<std::vector<std::string>>();
    Vec unit = j.at("unit").get<Vec>();
    const std::size_t n = unit.size();
    std::vector<SparseVec> prod(n * n);
    for (const auto &q : j.at("constants")) {
      auto i = q.at(0).get<std::size_t>(), k = q.at(1).get<std::size_t>();
      if (i >= n || k >= n)
        throw InvalidArgument("structure constant index out of range");
      prod[i * n + k].push_back({q.at(2).get<std::uint32_t>(), q.at(3).get<Elt>()});
    }
    return from_structure(F, std::move(labels), std::move(prod), std::move(unit));
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(std::string("malformed algebra dump: ") + e.what());
  }
}

// ---------------------------------------------------------------- bimodule

Bimodule::Bimodule(Algebra left, Algebra right, std::size_t dim,
                   std::vector<SparseMatrix> left_action, std::vector<SparseMatrix> right_action,
                   std::vector<Vec> generator_hint)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim), lact_(std::move(left_action)),
      ract_(std::move(right_action)), hint_(std::move(generator_hint))
{
  if (!(left_.field() == right_.field()))
    throw InvalidArgument("bimodule algebras over different fields");
  if (lact_.size() != left_.dim() || ract_.size() != right_.dim())
    throw InvalidArgument("wrong number of action matrices");
  for (const auto &s : lact_)
    if (s.rows() != dim_ || s.cols() != dim_)
      throw InvalidArgument("left action matrix has the wrong shape");
  for (const auto &s : ract_)
    if (s.rows() != dim_ || s.cols() != dim_)
      throw InvalidArgument("right action matrix has the wrong shape");
}

Bimodule Bimodule::regular(const Algebra &A)
{
  std::vector<SparseMatrix> L, R;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    L.push_back(A.left_matrix(i));
    R.push_back(A.right_matrix(i));
  }
  return Bimodule(A, A, A.dim(), std::move(L), std::move(R), {A.unit()});
}

namespace {

std::vector<SparseMatrix> pull_actions(const FqField &F, const std::vector<SparseMatrix> &act,
                                       const Matrix &phi, std::size_t target_dim, std::size_t dim)
{
  if (phi.rows() != act.size() || phi.cols() != target_dim)
    throw InvalidArgument("algebra map has the wrong shape");
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < target_dim; ++i) {
    Matrix m(F, dim, dim);
    for (std::size_t k = 0; k < act.size(); ++k) {
      Elt c = phi(k, i);
      if (!c)
        continue;
      for (std::size_t l = 0; l < dim; ++l)
        for (const auto &t : act[k].column(l))
          m.at(t.index, l) = F.add(m(t.index, l), F.mul(c, t.value));
    }
    out.push_back(SparseMatrix::from_dense(m));
  }
  return out;
}

} // namespace

Bimodule Bimodule::restrict(const Bimodule &M, const Algebra &A2, const Matrix &phiL,
                            const Algebra &B2, const Matrix &phiR)
{
  const auto &F = M.field();
  auto L = pull_actions(F, M.lact_, phiL, A2.dim(), M.dim());
  auto R = pull_actions(F, M.ract_, phiR, B2.dim(), M.dim());
  return Bimodule(A2, B2, M.dim(), std::move(L), std::move(R), M.hint_);
}

Vec Bimodule::act_left(const Vec &a, const Vec &m) const
{
  const auto &F = field();
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) {
      Vec t = lact_[i].apply(F, m);
      axpy(F, out, a[i], t);
    }
  return out;
}

Vec Bimodule::act_right(const Vec &m, const Vec &b) const
{
  const auto &F = field();
  Vec out(dim_, 0);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j]) {
      Vec t = ract_[j].apply(F, m);
      axpy(F, out, b[j], t);
    }
  return out;
}

std::optional<std::string> Bimodule::check() const
{
  const auto &F = field();
  for (std::size_t l = 0; l < dim_; ++l) {
    Vec m(dim_, 0);
    m[l] = 1;
    if (act_left(left_.unit(), m) != m)
      return "left unit does not act as the identity on m" + std::to_string(l);
    if (act_right(m, right_.unit()) != m)
      return "right unit does not act as the identity on m" + std::to_string(l);
    std::vector<Vec> lm(left_.dim()), mr(right_.dim());
    for (std::size_t i = 0; i < left_.dim(); ++i)
      lm[i] = lact_[i].apply(F, m);
    for (std::size_t j = 0; j < right_.dim(); ++j)
      mr[j] = ract_[j].apply(F, m);
    for (std::size_t i = 0; i < left_.dim(); ++i)
      for (std::size_t j = 0; j < right_.dim(); ++j)
        if (ract_[j].apply(F, lm[i]) != lact_[i].apply(F, mr[j]))
          return "actions do not commute at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    for (std::size_t i = 0; i < left_.dim(); ++i)
      for (std::size_t k = 0; k < left_.dim(); ++k) {
        Vec lhs(dim_, 0);
        for (const auto &t : left_.product(i, k))
          axpy(F, lhs, t.value, lm[t.index]);
        if (lhs != lact_[i].apply(F, lm[k]))
          return "left action is not multiplicative at (" + std::to_string(i) + ", " +
                 std::to_string(k) + ")";
      }
    for (std::size_t j = 0; j < right_.dim(); ++j)
      for (std::size_t k = 0; k < right_.dim(); ++k) {
        Vec lhs(dim_, 0);
        for (const auto &t : right_.product(j, k))
          axpy(F, lhs, t.value, mr[t.index]);
        if (lhs != ract_[k].apply(F, mr[j]))
          return "right action is not multiplicative at (" + std::to_string(j) + ", " +
                 std::to_string(k) + ")";
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- groups

namespace {

std::shared_ptr<const GroupBasis> make_group_basis(const PermGroup &G, const Bounds &b)
{
  if (G.order() > b.algebra)
    throw BoundExceeded("group of order " + std::to_string(G.order()) +
                        " exceeds the algebra bound " + std::to_string(b.algebra));
  auto gb = std::make_shared<GroupBasis>(GroupBasis{G, G.elements(b), {}});
  for (std::uint32_t i = 0; i < gb->elements.size(); ++i)
    gb->index.emplace(gb->elements[i], i);
  return gb;
}

std::vector<std::uint32_t> multiplication_table(const GroupBasis &gb)
{
  const std::size_t n = gb.elements.size();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = gb.index_of(gb.elements[i] * gb.elements[j]);
  return t;
}

Algebra build_group_algebra(std::shared_ptr<const GroupBasis> gb, const FqField &F,
                            const std::vector<Elt> *alpha)
{
  const std::size_t n = gb->elements.size();
  auto mt = multiplication_table(*gb);
  std::vector<SparseVec> prod(n * n);
  for (std::size_t k = 0; k < n * n; ++k)
    prod[k].push_back({mt[k], alpha ? (*alpha)[k] : Elt{1}});
  std::vector<std::string> labels;
  for (const auto &g : gb->elements)
    labels.push_back(g.to_string());
  std::vector<Vec> hint;
  for (const auto &g : gb->group.generators()) {
    Vec v(n, 0);
    v[gb->index_of(g)] = 1;
    hint.push_back(std::move(v));
  }
  Vec unit(n, 0);
  unit[0] = 1;
  return Algebra::from_structure(F, std::move(labels), std::move(prod), std::move(unit),
                                 std::move(hint), std::move(gb));
}

} // namespace

Algebra group_algebra(const PermGroup &G, const FqField &F, const Bounds &b)
{
  return build_group_algebra(make_group_basis(G, b), F, nullptr);
}

Matrix inclusion_map(const Algebra &FH, const Algebra &FG)
{
  const GroupBasis *h = FH.group_basis();
  const GroupBasis *g = FG.group_basis();
  if (!h || !g)
    throw InvalidArgument("inclusion_map needs group algebras");
  if (!h->group.is_subgroup_of(g->group))
    throw InvalidArgument("inclusion_map: not a subgroup");
  Matrix m(FG.field(), FG.dim(), FH.dim());
  for (std::size_t i = 0; i < h->elements.size(); ++i)
    m.at(g->index_of(h->elements[i]), i) = 1;
  return m;
}

// ---------------------------------------------------------------- cocycles

Cocycle::Cocycle(std::shared_ptr<const GroupBasis> basis, FqField F, std::vector<Elt> table)
    : basis_(std::move(basis)), F_(std::move(F)), table_(std::move(table))
{
}

Cocycle::Cocycle(const PermGroup &G, const FqField &F, const Bounds &b)
    : basis_(make_group_basis(G, b)), F_(F), table_(basis_->elements.size() * basis_->elements.size(), 1)
{
}

Cocycle Cocycle::from_table(const PermGroup &G, const FqField &F, std::vector<Elt> table,
                            const Bounds &b)
{
  auto gb = make_group_basis(G, b);
  const std::size_t n = gb->elements.size();
  if (table.size() != n * n)
    throw InvalidArgument("cocycle table has the wrong size");
  for (std::size_t k = 0; k < table.size(); ++k)
    if (!F.is_valid(table[k]) || table[k] == 0)
      throw InvalidArgument("cocycle entry (" + std::to_string(k / n) + ", " +
                            std::to_string(k % n) + ") is zero or not a field element");
  Elt c = F.inv(table[0]);
  for (auto &v : table)
    v = F.mul(v, c);
  Cocycle a(std::move(gb), F, std::move(table));
  a.validate();
  return a;
}

Cocycle Cocycle::from_function(
    const PermGroup &G, const FqField &F,
    const std::function<Elt(const Permutation &, const Permutation &)> &f, const Bounds &b)
{
  auto els = G.elements(b);
  std::vector<Elt> table;
  table.reserve(els.size() * els.size());
  for (const auto &g : els)
    for (const auto &h : els)
      table.push_back(f(g, h));
  return from_table(G, F, std::move(table), b);
}

Cocycle Cocycle::coboundary(const PermGroup &G, const FqField &F, const std::vector<Elt> &f,
                            const Bounds &b)
{
  auto gb = make_group_basis(G, b);
  const std::size_t n = gb->elements.size();
  if (f.size() != n)
    throw InvalidArgument("coboundary: wrong number of values");
  for (auto v : f)
    if (!v || !F.is_valid(v))
      throw InvalidArgument("coboundary: values must be nonzero field elements");
  auto mt = multiplication_table(*gb);
  std::vector<Elt> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = F.div(F.mul(f[i], f[j]), f[mt[i * n + j]]);
  return from_table(G, F, std::move(table), b);
}

void Cocycle::validate() const
{
  const std::size_t n = size();
  auto mt = multiplication_table(*basis_);
  for (std::size_t g = 0; g < n; ++g)
    if ((*this)(0, g) != 1 || (*this)(g, 0) != 1)
      throw InvalidArgument("cocycle is not normalised at " + basis_->elements[g].to_string());
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = mt[g * n + h];
      for (std::size_t l = 0; l < n; ++l) {
        Elt lhs = F_.mul((*this)(g, h), (*this)(gh, l));
        Elt rhs = F_.mul((*this)(h, l), (*this)(g, mt[h * n + l]));
        if (lhs != rhs)
          throw InvalidArgument("cocycle identity fails at (" + basis_->elements[g].to_string() +
                                ", " + basis_->elements[h].to_string() + ", " +
                                basis_->elements[l].to_string() + ")");
      }
    }
}

Cocycle Cocycle::from_json(const nlohmann::json &j, const Bounds &b)
{
  try {
    PermGroup G = permcore::catalog_group(j.at("group"), b);
    const auto &fj = j.at("field");
    FqField F = FqField::make(fj.at("p").get<std::uint32_t>(), fj.value("m", 1u));
    const std::size_t n = G.order();
    if (n > b.algebra)
      throw BoundExceeded("cocycle group exceeds the algebra bound");
    std::vector<Elt> table(n * n, 1);
    if (j.contains("entries"))
      for (const auto &e : j.at("entries")) {
        auto g = e.at(0).get<std::size_t>(), h = e.at(1).get<std::size_t>();
        if (g >= n || h >= n)
          throw InvalidArgument("cocycle entry index out of range");
        table[g * n + h] = e.at(2).get<Elt>();
      }
    return from_table(G, F, std::move(table), b);
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(std::string("malformed cocycle: ") + e.what());
  }
}

nlohmann::json Cocycle::to_json() const
{
  nlohmann::json j;
  j["group"] = {{"generators", permcore::generators_json(group())}, {"degree", group().degree()}};
  j["field"] = {{"p", F_.characteristic()}, {"m", F_.degree()}};
  auto entries = nlohmann::json::array();
  const std::size_t n = size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if ((*this)(g, h) != 1)
        entries.push_back({g, h, (*this)(g, h)});
  j["entries"] = std::move(entries);
  return j;
}

Elt Cocycle::value(const Permutation &g, const Permutation &h) const
{
  return (*this)(basis_->index_of(g), basis_->index_of(h));
}

bool Cocycle::is_trivial() const
{
  return std::all_of(table_.begin(), table_.end(), [](Elt v) { return v == 1; });
}

Cocycle bilinear_cocycle(const PermGroup &G, const FqField &F, const std::vector<Permutation> &gens,
                         const std::vector<std::vector<std::uint64_t>> &B, Elt root, const Bounds &b)
{
  const std::size_t r = gens.size();
  if (B.size() != r)
    throw InvalidArgument("bilinear_cocycle: form has the wrong size");
  for (const auto &row : B)
    if (row.size() != r)
      throw InvalidArgument("bilinear_cocycle: form has the wrong size");
  std::vector<std::uint64_t> ord;
  std::uint64_t total = 1;
  for (const auto &g : gens) {
    if (!G.contains(g))
      throw InvalidArgument("bilinear_cocycle: " + g.to_string() + " is not in the group");
    ord.push_back(g.order());
    total *= ord.back();
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i + 1; k < r; ++k)
      if (gens[i] * gens[k] != gens[k] * gens[i])
        throw InvalidArgument("bilinear_cocycle: generators do not commute");
  if (total != G.order())
    throw InvalidArgument("bilinear_cocycle: generators do not decompose the group");
  std::unordered_map<Permutation, std::vector<std::uint64_t>> coords;
  std::vector<std::uint64_t> x(r, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t rest = c;
    Permutation g = G.identity();
    for (std::size_t i = 0; i < r; ++i) {
      x[i] = rest % ord[i];
      rest /= ord[i];
      g = g * gens[i].pow(static_cast<std::int64_t>(x[i]));
    }
    if (!coords.emplace(g, x).second)
      throw InvalidArgument("bilinear_cocycle: generators do not decompose the group");
  }
  return Cocycle::from_function(
      G, F,
      [&](const Permutation &g, const Permutation &h) {
        const auto &u = coords.at(g);
        const auto &v = coords.at(h);
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t k = 0; k < r; ++k)
            e += B[i][k] * u[i] * v[k];
        return F.pow(root, e);
      },
      b);
}

Algebra twisted_group_algebra(const Cocycle &alpha, const Bounds &b)
{
  if (alpha.size() > b.algebra)
    throw BoundExceeded("twisted group algebra exceeds the algebra bound");
  std::vector<Elt> table(alpha.size() * alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 0; j < alpha.size(); ++j)
      table[i * alpha.size() + j] = alpha(i, j);
  return build_group_algebra(alpha.basis_ptr(), alpha.field(), &table);
}

bool is_alpha_regular(const Cocycle &alpha, const Permutation &x, const Bounds &b)
{
  const PermGroup &G = alpha.group();
  if (!G.contains(x))
    throw InvalidArgument("is_alpha_regular: " + x.to_string() + " is not in the group");
  bool ok = true;
  permcore::centralizer(G, x, b).for_each(
      [&](const Permutation &g) {
        if (alpha.value(g, x) != alpha.value(x, g)) {
          ok = false;
          return false;
        }
        return true;
      },
      b);
  return ok;
}

} // namespace hhb::exalg
