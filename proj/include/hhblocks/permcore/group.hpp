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
#include "hhblocks/permcore/permutation.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hhb::permcore {

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Level i stabilises base points 0..i-1; its transversal maps the base
/// point b_i to every point of its orbit.
class StabChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos; ///< orbit index per point, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> inv_transversal;
  };

  StabChain() = default;
  StabChain(const std::vector<Permutation> &gens, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level> &levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  /// Throws BoundExceeded if the order does not fit in 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation &g) const;

  /// Mixed-radix index of g in [0, order()), level 0 least significant.
  /// g must be a member.
  std::uint64_t rank(const Permutation &g) const;
  Permutation unrank(std::uint64_t r) const;

  /// Calls f on every element; stops early when f returns false.
  void for_each(const std::function<bool(const Permutation &)> &f) const;

private:
  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;
  void add_level(Point base);
  void extend_orbit(Level &lv);

  std::size_t degree_ = 1;
  std::vector<Level> levels_;
};

struct ConjClass;

/// An immutable permutation group. Copies share the same state; lazily
/// computed data is cached under std::call_once.
class PermGroup {
public:
  PermGroup() : PermGroup(trivial(1)) {}

  /// Throws InvalidArgument on an empty list or mixed degrees.
  static PermGroup from_generators(std::vector<Permutation> gens);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  const std::vector<Permutation> &generators() const noexcept;
  std::uint64_t order() const;
  const StabChain &chain() const noexcept;

  /// Throws InvalidArgument on degree mismatch.
  bool contains(const Permutation &g) const;
  /// Every generator of this group lies in G.
  bool is_subgroup_of(const PermGroup &G) const;
  bool is_normal_in(const PermGroup &G) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool same_elements(const PermGroup &o) const;

  Permutation identity() const { return Permutation(degree()); }

  /// Element enumeration; throws BoundExceeded if order() > b.enumeration.
  void for_each(const std::function<bool(const Permutation &)> &f, const Bounds &b = {}) const;
  /// All elements in lexicographic order of image arrays (identity first).
  std::vector<Permutation> elements(const Bounds &b = {}) const;

  /// Conjugacy classes ordered by (element order, class size, representative).
  /// Representatives are lexicographically least in their class.
  const std::vector<ConjClass> &classes(const Bounds &b = {}) const;

  /// Group generated by this group's generators together with g.
  PermGroup with(const Permutation &g) const;

  std::string to_string() const;

private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct ConjClass {
  Permutation representative;
  std::uint64_t size = 0;
  PermGroup centralizer;
};

PermGroup group_from_generators(const std::vector<Permutation> &gens);
std::uint64_t group_order(const PermGroup &G);
bool is_member(const PermGroup &G, const Permutation &g);
const std::vector<ConjClass> &conjugacy_classes(const PermGroup &G, const Bounds &b = {});

/// Subgroup of G of all elements satisfying pred (pred must define a subgroup).
PermGroup subgroup_by_filter(const PermGroup &G,
                             const std::function<bool(const Permutation &)> &pred,
                             const Bounds &b = {});

/// Throws InvalidArgument if x is not in G.
PermGroup centralizer(const PermGroup &G, const Permutation &x, const Bounds &b = {});
/// Centralizer in G of every element of H.
PermGroup centralizer(const PermGroup &G, const PermGroup &H, const Bounds &b = {});
PermGroup normalizer(const PermGroup &G, const PermGroup &H, const Bounds &b = {});
PermGroup center(const PermGroup &G, const Bounds &b = {});
PermGroup subgroup_intersection(const PermGroup &H, const PermGroup &K, const Bounds &b = {});
/// Smallest normal subgroup of G containing the given elements.
PermGroup normal_closure(const PermGroup &G, const std::vector<Permutation> &xs);
PermGroup derived_subgroup(const PermGroup &G);
/// H^g = g^-1 H g
PermGroup conjugate(const PermGroup &H, const Permutation &g);

/// p-part of the element's order, as a power of x commuting with x.
Permutation p_part(const Permutation &x, std::uint64_t p);
bool is_p_element(const Permutation &x, std::uint64_t p);
bool is_p_group(const PermGroup &G, std::uint64_t p);
std::uint64_t exponent(const PermGroup &G, const Bounds &b = {});

/// A Sylow p-subgroup. If start is given, the result contains it (start
/// must be a p-subgroup of G).
PermGroup sylow_subgroup(const PermGroup &G, std::uint64_t p, const Bounds &b = {});
PermGroup sylow_subgroup_containing(const PermGroup &G, const PermGroup &start, std::uint64_t p,
                                    const Bounds &b = {});
PermGroup p_core(const PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// Some g in G with H^g = K, if H and K are conjugate in G.
std::optional<Permutation> conjugating_element(const PermGroup &G, const PermGroup &H,
                                               const PermGroup &K, const Bounds &b = {});
/// Some g in G with x^g = y.
std::optional<Permutation> conjugating_element(const PermGroup &G, const Permutation &x,
                                               const Permutation &y, const Bounds &b = {});

/// Action of G on the right cosets of the normal subgroup N.
PermGroup quotient_group(const PermGroup &G, const PermGroup &N, const Bounds &b = {});

} // namespace hhb::permcore
