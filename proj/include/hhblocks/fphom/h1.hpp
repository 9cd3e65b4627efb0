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

#include "hhblocks/exalg/linalg.hpp"
#include "hhblocks/permcore/group.hpp"

#include <cstdint>
#include <vector>

namespace hhb::fphom {

using permcore::PermGroup;
using permcore::Permutation;
using FpMatrix = exalg::Matrix;

/// H_1(G, F_p) = G / K with K = [G,G] G^p, an elementary abelian p-group.
///
/// The cosets are generated by b_1..b_d, chosen greedily from the group's
/// generator list; K_i = <K_{i-1}, b_i> is a chain from K_0 = K to K_d = G
/// and coordinates are read off by peeling b_d, ..., b_1.
class H1Space {
public:
  H1Space(const PermGroup &G, std::uint64_t p);

  const PermGroup &group() const noexcept { return G_; }
  std::uint64_t prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const PermGroup &kernel() const noexcept { return chain_.front(); }
  const std::vector<Permutation> &basis_elements() const noexcept { return basis_; }
  const exalg::FqField &field() const noexcept { return F_; }

  /// Throws InvalidArgument if g is not in the group.
  exalg::Vec coordinates(const Permutation &g) const;

private:
  PermGroup G_;
  std::uint64_t p_;
  exalg::FqField F_;
  std::vector<Permutation> basis_;
  std::vector<PermGroup> chain_; // K_0 .. K_d
};

H1Space h1_fp(const PermGroup &G, std::uint64_t p);

/// Matrix of H_1(H, F_p) -> H_1(G, F_p); rows index the codomain basis.
/// Throws InvalidArgument unless H <= G.
FpMatrix h1_induced_map(const PermGroup &H, const PermGroup &G, std::uint64_t p);

exalg::Vec h1_class_vector(const PermGroup &G, std::uint64_t p, const Permutation &x);

} // namespace hhb::fphom
