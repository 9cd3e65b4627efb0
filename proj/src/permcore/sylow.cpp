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

#include "hhblocks/permcore/group.hpp"

namespace hhb::permcore {

namespace {

std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

void require_prime(std::uint64_t p)
{
  if (p < 2)
    throw InvalidArgument("not a prime: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw InvalidArgument("not a prime: " + std::to_string(p));
}

} // namespace

PermGroup sylow_subgroup_containing(const PermGroup &G, const PermGroup &start, std::uint64_t p,
                                    const Bounds &b)
{
  require_prime(p);
  if (!start.is_subgroup_of(G))
    throw InvalidArgument("sylow_subgroup_containing: start is not a subgroup");
  if (!is_p_group(start, p))
    throw InvalidArgument("sylow_subgroup_containing: start is not a p-group");
  const std::uint64_t target = p_part_of(G.order(), p);
  PermGroup P = start;
  while (P.order() < target) {
    std::optional<Permutation> step;
    G.for_each(
        [&](const Permutation &g) {
          if (P.contains(g))
            return true;
          for (const auto &h : P.generators())
            if (!P.contains(h.conj(g)))
              return true;
          // order of gP in N_G(P)/P
          std::uint64_t k = 1;
          Permutation acc = g;
          while (!P.contains(acc)) {
            acc = acc * g;
            ++k;
          }
          if (k % p != 0)
            return true;
          step = g.pow(static_cast<std::int64_t>(k / p));
          return false;
        },
        b);
    if (!step)
      throw InternalError("no p-element of N_G(P)/P found below the Sylow order");
    P = P.with(*step);
  }
  return P;
}

PermGroup sylow_subgroup(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p);
  const std::uint64_t target = p_part_of(G.order(), p);
  if (target == 1)
    return PermGroup::trivial(G.degree());
  if (target == G.order())
    return G;

  // Seed with a p-element of largest order.
  std::vector<Permutation> candidates;
  if (G.order() <= b.classes)
    for (const auto &c : G.classes(b))
      candidates.push_back(p_part(c.representative, p));
  else
    for (const auto &g : G.generators())
      candidates.push_back(p_part(g, p));
  Permutation best = G.identity();
  for (const auto &x : candidates)
    if (x.order() > best.order())
      best = x;
  return sylow_subgroup_containing(G, PermGroup::from_generators({best}), p, b);
}

PermGroup p_core(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  PermGroup Q = sylow_subgroup(G, p, b);
  for (;;) {
    PermGroup R = Q;
    for (const auto &s : G.generators())
      R = subgroup_intersection(R, conjugate(Q, s), b);
    if (R.order() == Q.order())
      return Q;
    Q = R;
  }
}

} // namespace hhb::permcore
