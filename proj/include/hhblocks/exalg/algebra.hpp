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

#include "hhblocks/errors.hpp"
#include "hhblocks/exalg/linalg.hpp"
#include "hhblocks/permcore/group.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hhb::exalg {

struct Term {
  std::uint32_t index;
  Elt value;
};
using SparseVec = std::vector<Term>;

/// Square or rectangular sparse matrix stored by columns.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static SparseMatrix from_dense(const Matrix &m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVec &column(std::size_t j) const { return columns_[j]; }
  SparseVec &column(std::size_t j) { return columns_[j]; }

  Vec apply(const FqField &F, const Vec &v) const;
  /// Y += c * S X, where X has rows() == cols() of S.
  void apply_add(const FqField &F, const Matrix &X, Matrix &Y, Elt c = 1) const;
  Matrix to_dense(const FqField &F) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> columns_;
};

class Cocycle;

/// Group data attached to a (twisted) group algebra: basis element i is
/// the i-th element of G in lexicographic order, so index 0 is the identity.
struct GroupBasis {
  permcore::PermGroup group;
  std::vector<permcore::Permutation> elements;
  std::unordered_map<permcore::Permutation, std::uint32_t> index;

  std::uint32_t index_of(const permcore::Permutation &g) const;
};

/// Finite-dimensional associative unital algebra given by structure
/// constants. Cheap to copy.
class Algebra {
public:
  /// products has dim*dim entries; entry i*dim+j is b_i b_j. Throws
  /// InvalidArgument if the unit or associativity checks fail.
  static Algebra from_structure(const FqField &F, std::vector<std::string> labels,
                                std::vector<SparseVec> products, Vec unit,
                                std::vector<Vec> generator_hint = {},
                                std::shared_ptr<const GroupBasis> group = nullptr);

  const FqField &field() const noexcept;
  std::size_t dim() const noexcept;
  const std::vector<std::string> &labels() const noexcept;
  const SparseVec &product(std::size_t i, std::size_t j) const;
  const Vec &unit() const noexcept;
  /// Elements generating the algebra, possibly empty.
  const std::vector<Vec> &generator_hint() const noexcept;
  /// Present for group and twisted group algebras.
  const GroupBasis *group_basis() const noexcept;

  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(dim(), 0); }
  Vec mul(const Vec &a, const Vec &b) const;
  Vec add(const Vec &a, const Vec &b) const;
  Vec sub(const Vec &a, const Vec &b) const;
  Vec scale(Elt c, const Vec &a) const;
  Vec power(Vec a, std::uint64_t e) const;
  bool is_central(const Vec &z) const;
  bool is_idempotent(const Vec &e) const { return mul(e, e) == e; }

  /// Left and right multiplication by a on the basis.
  SparseMatrix left_matrix(std::size_t i) const;
  SparseMatrix right_matrix(std::size_t j) const;

  /// First basis triple violating associativity.
  std::optional<std::array<std::size_t, 3>> associativity_failure() const;
  bool unit_is_identity() const;

  /// {"field": {"p","m","modulus"}, "labels", "unit", "constants": [[i,j,k,v],...]}
  nlohmann::json dump() const;
  static Algebra load(const nlohmann::json &j);

  bool same_as(const Algebra &o) const noexcept { return impl_ == o.impl_; }

private:
  struct Impl;
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// An A-B-bimodule. Column l of left(i) is b_i . m_l; column l of right(j)
/// is m_l . b_j.
class Bimodule {
public:
  Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<SparseMatrix> left_action,
           std::vector<SparseMatrix> right_action, std::vector<Vec> generator_hint = {});

  /// A as an A-A-bimodule.
  static Bimodule regular(const Algebra &A);
  /// M with the actions pulled back along algebra maps phiL: A2 -> left(M)
  /// and phiR: B2 -> right(M). Column i of phi is the image of basis i.
  static Bimodule restrict(const Bimodule &M, const Algebra &A2, const Matrix &phiL,
                           const Algebra &B2, const Matrix &phiR);

  const Algebra &left_algebra() const noexcept { return left_; }
  const Algebra &right_algebra() const noexcept { return right_; }
  const FqField &field() const noexcept { return left_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const SparseMatrix &left(std::size_t i) const { return lact_[i]; }
  const SparseMatrix &right(std::size_t j) const { return ract_[j]; }
  const std::vector<Vec> &generator_hint() const noexcept { return hint_; }

  Vec act_left(const Vec &a, const Vec &m) const;
  Vec act_right(const Vec &m, const Vec &b) const;

  /// Description of the first violated bimodule axiom, if any.
  std::optional<std::string> check() const;

private:
  Algebra left_, right_;
  std::size_t dim_;
  std::vector<SparseMatrix> lact_, ract_;
  std::vector<Vec> hint_;
};

/// The group algebra F G. Throws BoundExceeded if |G| > b.algebra.
Algebra group_algebra(const permcore::PermGroup &G, const FqField &F, const Bounds &b = {});

/// Matrix of the inclusion F H -> F G (columns index the basis of F H).
Matrix inclusion_map(const Algebra &FH, const Algebra &FG);

/// A normalised 2-cocycle G x G -> F^x, tabulated on the sorted elements.
class Cocycle {
public:
  /// Trivial cocycle.
  Cocycle(const permcore::PermGroup &G, const FqField &F, const Bounds &b = {});

  /// table[i*n+j] = alpha(g_i, g_j). The table is divided by alpha(1,1) and
  /// then validated; throws InvalidArgument naming a failing triple or a
  /// zero entry.
  static Cocycle from_table(const permcore::PermGroup &G, const FqField &F, std::vector<Elt> table,
                            const Bounds &b = {});
  static Cocycle from_function(
      const permcore::PermGroup &G, const FqField &F,
      const std::function<Elt(const permcore::Permutation &, const permcore::Permutation &)> &f,
      const Bounds &b = {});
  /// alpha(g,h) = f(g) f(h) / f(gh) for a nowhere-zero f on the sorted elements.
  static Cocycle coboundary(const permcore::PermGroup &G, const FqField &F, const std::vector<Elt> &f,
                            const Bounds &b = {});
  /// {"group": spec, "field": {"p","m"}, "entries": [[g_index, h_index, value], ...]};
  /// omitted entries are 1.
  static Cocycle from_json(const nlohmann::json &j, const Bounds &b = {});
  /// Entries different from 1, in index order. The group is written by generators.
  nlohmann::json to_json() const;

  const permcore::PermGroup &group() const noexcept { return basis_->group; }
  const FqField &field() const noexcept { return F_; }
  const GroupBasis &basis() const noexcept { return *basis_; }
  std::shared_ptr<const GroupBasis> basis_ptr() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_->elements.size(); }
  Elt operator()(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  Elt value(const permcore::Permutation &g, const permcore::Permutation &h) const;
  bool is_trivial() const;

private:
  Cocycle(std::shared_ptr<const GroupBasis> basis, FqField F, std::vector<Elt> table);
  void validate() const;

  std::shared_ptr<const GroupBasis> basis_;
  FqField F_;
  std::vector<Elt> table_;
};

/// Bilinear cocycle alpha(x,y) = root^(sum_ij B[i][j] x_i y_j), where x_i are
/// the coordinates of x with respect to gens, which must give a direct
/// decomposition of the abelian group G into cyclic factors.
Cocycle bilinear_cocycle(const permcore::PermGroup &G, const FqField &F,
                         const std::vector<permcore::Permutation> &gens,
                         const std::vector<std::vector<std::uint64_t>> &B, Elt root,
                         const Bounds &b = {});

/// The twisted group algebra: g^ h^ = alpha(g,h) (gh)^.
Algebra twisted_group_algebra(const Cocycle &alpha, const Bounds &b = {});

/// alpha(g,x) = alpha(x,g) for every g in C_G(x). Throws if x is not in G.
bool is_alpha_regular(const Cocycle &alpha, const permcore::Permutation &x, const Bounds &b = {});

} // namespace hhb::exalg
