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

#include "group_impl.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace hhb::permcore {

namespace {

struct Node {
  Permutation elt;
  std::uint32_t parent;
  std::uint32_t gen;
};

// Conjugator t with rep^t = orbit[k], read off the BFS tree.
Permutation conjugator(const std::vector<Node> &orbit, const std::vector<Permutation> &gens,
                       std::uint32_t k)
{
  std::vector<std::uint32_t> path;
  while (k != 0) {
    path.push_back(orbit[k].gen);
    k = orbit[k].parent;
  }
  Permutation t(orbit.front().elt.degree());
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    t = t * gens[*it];
  return t;
}

} // namespace

std::vector<ConjClass> compute_classes(const PermGroup &G)
{
  const StabChain &ch = G.chain();
  const std::uint64_t n = G.order();
  const auto &gens = G.generators();
  std::vector<char> seen(n, 0);
  std::vector<ConjClass> out;

  for (std::uint64_t r0 = 0; r0 < n; ++r0) {
    if (seen[r0])
      continue;
    seen[r0] = 1;
    std::vector<Node> orbit;
    orbit.push_back({ch.unrank(r0), 0, 0});
    std::size_t rep = 0;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::uint32_t s = 0; s < gens.size(); ++s) {
        Permutation y = orbit[k].elt.conj(gens[s]);
        std::uint64_t r = ch.rank(y);
        if (seen[r])
          continue;
        seen[r] = 1;
        orbit.push_back({std::move(y), static_cast<std::uint32_t>(k), s});
        if (orbit.back().elt < orbit[rep].elt)
          rep = orbit.size() - 1;
      }
    }

    const std::uint64_t size = orbit.size();
    const std::uint64_t target = n / size;
    PermGroup C = PermGroup::trivial(G.degree());
    if (size == 1) {
      C = G;
    } else if (target > 1) {
      // Schreier generators of the stabiliser of orbit[0] under conjugation.
      std::unordered_map<std::uint64_t, std::uint32_t> where;
      for (std::uint32_t k = 0; k < orbit.size(); ++k)
        where.emplace(ch.rank(orbit[k].elt), k);
      for (std::uint32_t k = 0; k < orbit.size() && C.order() < target; ++k) {
        Permutation tk = conjugator(orbit, gens, k);
        for (std::uint32_t s = 0; s < gens.size() && C.order() < target; ++s) {
          Permutation y = orbit[k].elt.conj(gens[s]);
          auto it = where.find(ch.rank(y));
          if (it == where.end())
            throw InternalError("conjugacy orbit is not closed");
          std::uint32_t j = it->second;
          if (orbit[j].parent == k && orbit[j].gen == s && j != 0)
            continue;
          Permutation c = tk * gens[s] * conjugator(orbit, gens, j).inverse();
          if (!C.contains(c))
            C = C.with(c);
        }
      }
      if (C.order() != target)
        throw InternalError("centralizer order does not match class size");
    }

    Permutation rep_elt = orbit[rep].elt;
    if (rep != 0) {
      // Move the centraliser from orbit[0] to the representative.
      Permutation t = conjugator(orbit, gens, static_cast<std::uint32_t>(rep));
      C = conjugate(C, t);
    }
    out.push_back({std::move(rep_elt), size, std::move(C)});
  }

  std::sort(out.begin(), out.end(), [](const ConjClass &a, const ConjClass &b) {
    auto oa = a.representative.order(), ob = b.representative.order();
    return std::tie(oa, a.size, a.representative) < std::tie(ob, b.size, b.representative);
  });
  return out;
}

} // namespace hhb::permcore
