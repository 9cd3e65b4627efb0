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

#include "hhblocks/fphom/h1.hpp"

#include "hhblocks/exalg/field.hpp"

namespace hhb::fphom {

H1Space::H1Space(const PermGroup &G, std::uint64_t p)
    : G_(G), p_(p), F_(exalg::FqField::make(static_cast<std::uint32_t>(p), 1))
{
  std::vector<Permutation> seeds;
  const auto &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      seeds.push_back(permcore::commutator(gs[i], gs[j]));
    seeds.push_back(gs[i].pow(static_cast<std::int64_t>(p)));
  }
  chain_.push_back(permcore::normal_closure(G, seeds));
  for (const auto &s : gs) {
    if (chain_.back().contains(s))
      continue;
    basis_.push_back(s);
    chain_.push_back(chain_.back().with(s));
  }
  if (chain_.back().order() != G.order())
    throw InternalError("H1 coset chain does not reach the group");
}

exalg::Vec H1Space::coordinates(const Permutation &g) const
{
  if (!G_.contains(g))
    throw InvalidArgument("h1 coordinates: " + g.to_string() + " is not in the group");
  exalg::Vec v(basis_.size(), 0);
  Permutation h = g;
  for (std::size_t i = basis_.size(); i-- > 0;) {
    Permutation binv = basis_[i].inverse();
    std::uint64_t c = 0;
    while (!chain_[i].contains(h)) {
      h = h * binv;
      if (++c >= p_)
        throw InternalError("h1 coordinate peeling failed");
    }
    v[i] = static_cast<exalg::Elt>(c);
  }
  return v;
}

H1Space h1_fp(const PermGroup &G, std::uint64_t p) { return H1Space(G, p); }

FpMatrix h1_induced_map(const PermGroup &H, const PermGroup &G, std::uint64_t p)
{
  if (!H.is_subgroup_of(G))
    throw InvalidArgument("h1_induced_map: H is not contained in G");
  H1Space dom(H, p), cod(G, p);
  FpMatrix M(cod.field(), cod.dimension(), dom.dimension());
  for (std::size_t j = 0; j < dom.dimension(); ++j) {
    auto v = cod.coordinates(dom.basis_elements()[j]);
    for (std::size_t i = 0; i < v.size(); ++i)
      M.at(i, j) = v[i];
  }
  return M;
}

exalg::Vec h1_class_vector(const PermGroup &G, std::uint64_t p, const Permutation &x)
{
  return H1Space(G, p).coordinates(x);
}

} // namespace hhb::fphom
