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
#include <map>
#include <numeric>
#include <unordered_map>

namespace hhb::permcore {

PermGroup PermGroup::from_generators(std::vector<Permutation> gens)
{
  if (gens.empty())
    throw InvalidArgument("empty generator list");
  std::size_t n = gens.front().degree();
  std::vector<Permutation> kept;
  for (auto &g : gens) {
    if (g.degree() != n)
      throw InvalidArgument("generators have different degrees (" + std::to_string(n) + " and " +
                            std::to_string(g.degree()) + ")");
    if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end())
      kept.push_back(std::move(g));
  }
  auto impl = std::make_shared<Impl>();
  impl->degree = n;
  impl->chain = StabChain(kept, n);
  impl->gens = std::move(kept);
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return from_generators({Permutation(degree)});
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Permutation> &PermGroup::generators() const noexcept { return impl_->gens; }
std::uint64_t PermGroup::order() const { return impl_->chain.order(); }
const StabChain &PermGroup::chain() const noexcept { return impl_->chain; }

bool PermGroup::contains(const Permutation &g) const { return impl_->chain.contains(g); }

bool PermGroup::is_subgroup_of(const PermGroup &G) const
{
  if (G.degree() != degree())
    throw InvalidArgument("degree mismatch in subgroup test");
  for (const auto &g : generators())
    if (!G.contains(g))
      return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup &G) const
{
  if (!is_subgroup_of(G))
    return false;
  for (const auto &h : generators())
    for (const auto &g : G.generators())
      if (!contains(h.conj(g)))
        return false;
  return true;
}

bool PermGroup::is_abelian() const
{
  const auto &gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i])
        return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup &o) const
{
  return degree() == o.degree() && order() == o.order() && o.is_subgroup_of(*this);
}

void PermGroup::for_each(const std::function<bool(const Permutation &)> &f, const Bounds &b) const
{
  if (order() > b.enumeration)
    throw BoundExceeded("group of order " + std::to_string(order()) +
                        " exceeds the enumeration bound " + std::to_string(b.enumeration));
  impl_->chain.for_each(f);
}

std::vector<Permutation> PermGroup::elements(const Bounds &b) const
{
  std::vector<Permutation> out;
  out.reserve(order());
  for_each(
      [&](const Permutation &g) {
        out.push_back(g);
        return true;
      },
      b);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<ConjClass> &PermGroup::classes(const Bounds &b) const
{
  if (order() > b.classes)
    throw BoundExceeded("group of order " + std::to_string(order()) +
                        " exceeds the conjugacy-class bound " + std::to_string(b.classes));
  std::call_once(impl_->classes_once, [this] { impl_->classes = compute_classes(*this); });
  return impl_->classes;
}

PermGroup PermGroup::with(const Permutation &g) const
{
  if (contains(g))
    return *this;
  std::vector<Permutation> gens = generators();
  gens.push_back(g);
  return from_generators(std::move(gens));
}

std::string PermGroup::to_string() const
{
  std::string s = "<";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i)
      s += ", ";
    s += generators()[i].to_string();
  }
  return s + ">";
}

PermGroup group_from_generators(const std::vector<Permutation> &gens)
{
  return PermGroup::from_generators(gens);
}

std::uint64_t group_order(const PermGroup &G) { return G.order(); }

bool is_member(const PermGroup &G, const Permutation &g) { return G.contains(g); }

const std::vector<ConjClass> &conjugacy_classes(const PermGroup &G, const Bounds &b)
{
  return G.classes(b);
}

PermGroup subgroup_by_filter(const PermGroup &G,
                             const std::function<bool(const Permutation &)> &pred,
                             const Bounds &b)
{
  PermGroup H = PermGroup::trivial(G.degree());
  G.for_each(
      [&](const Permutation &g) {
        if (!g.is_identity() && pred(g) && !H.contains(g))
          H = H.with(g);
        return true;
      },
      b);
  return H;
}

PermGroup centralizer(const PermGroup &G, const Permutation &x, const Bounds &b)
{
  if (!G.contains(x))
    throw InvalidArgument("centralizer: " + x.to_string() + " is not in the group");
  if (x.is_identity())
    return G;
  return subgroup_by_filter(
      G, [&](const Permutation &g) { return g * x == x * g; }, b);
}

PermGroup centralizer(const PermGroup &G, const PermGroup &H, const Bounds &b)
{
  if (H.degree() != G.degree())
    throw InvalidArgument("degree mismatch in centralizer");
  const auto &hs = H.generators();
  return subgroup_by_filter(
      G,
      [&](const Permutation &g) {
        for (const auto &h : hs)
          if (g * h != h * g)
            return false;
        return true;
      },
      b);
}

PermGroup normalizer(const PermGroup &G, const PermGroup &H, const Bounds &b)
{
  if (H.degree() != G.degree())
    throw InvalidArgument("degree mismatch in normalizer");
  const auto &hs = H.generators();
  return subgroup_by_filter(
      G,
      [&](const Permutation &g) {
        for (const auto &h : hs)
          if (!H.contains(h.conj(g)))
            return false;
        return true;
      },
      b);
}

PermGroup center(const PermGroup &G, const Bounds &b) { return centralizer(G, G, b); }

PermGroup subgroup_intersection(const PermGroup &H, const PermGroup &K, const Bounds &b)
{
  if (H.degree() != K.degree())
    throw InvalidArgument("degree mismatch in intersection");
  if (H.is_subgroup_of(K))
    return H;
  if (K.is_subgroup_of(H))
    return K;
  const PermGroup &small = H.order() <= K.order() ? H : K;
  const PermGroup &big = H.order() <= K.order() ? K : H;
  return subgroup_by_filter(
      small, [&](const Permutation &g) { return big.contains(g); }, b);
}

PermGroup normal_closure(const PermGroup &G, const std::vector<Permutation> &xs)
{
  std::vector<Permutation> seed;
  for (const auto &x : xs) {
    if (x.degree() != G.degree())
      throw InvalidArgument("degree mismatch in normal closure");
    seed.push_back(x);
  }
  if (seed.empty())
    seed.push_back(G.identity());
  PermGroup N = PermGroup::from_generators(seed);
  for (std::size_t i = 0; i < N.generators().size(); ++i) {
    for (const auto &g : G.generators()) {
      Permutation c = N.generators()[i].conj(g);
      if (!N.contains(c))
        N = N.with(c);
    }
  }
  return N;
}

PermGroup derived_subgroup(const PermGroup &G)
{
  std::vector<Permutation> comms;
  const auto &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = commutator(gs[i], gs[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

PermGroup conjugate(const PermGroup &H, const Permutation &g)
{
  std::vector<Permutation> gens;
  for (const auto &h : H.generators())
    gens.push_back(h.conj(g));
  if (gens.empty())
    return H;
  return PermGroup::from_generators(std::move(gens));
}

Permutation p_part(const Permutation &x, std::uint64_t p)
{
  std::uint64_t o = x.order();
  std::uint64_t m = o;
  while (m % p == 0)
    m /= p;
  return x.pow(static_cast<std::int64_t>(m));
}

bool is_p_element(const Permutation &x, std::uint64_t p)
{
  std::uint64_t o = x.order();
  while (o % p == 0)
    o /= p;
  return o == 1;
}

bool is_p_group(const PermGroup &G, std::uint64_t p)
{
  std::uint64_t o = G.order();
  while (o % p == 0)
    o /= p;
  return o == 1;
}

std::uint64_t exponent(const PermGroup &G, const Bounds &b)
{
  std::uint64_t e = 1;
  if (G.order() <= b.classes) {
    for (const auto &c : G.classes(b))
      e = std::lcm(e, c.representative.order());
    return e;
  }
  G.for_each(
      [&](const Permutation &g) {
        e = std::lcm(e, g.order());
        return true;
      },
      b);
  return e;
}

std::optional<Permutation> conjugating_element(const PermGroup &G, const PermGroup &H,
                                               const PermGroup &K, const Bounds &b)
{
  if (H.order() != K.order())
    return std::nullopt;
  std::optional<Permutation> found;
  G.for_each(
      [&](const Permutation &g) {
        for (const auto &h : H.generators())
          if (!K.contains(h.conj(g)))
            return true;
        found = g;
        return false;
      },
      b);
  return found;
}

std::optional<Permutation> conjugating_element(const PermGroup &G, const Permutation &x,
                                               const Permutation &y, const Bounds &b)
{
  if (x.cycle_type() != y.cycle_type())
    return std::nullopt;
  std::optional<Permutation> found;
  G.for_each(
      [&](const Permutation &g) {
        if (x.conj(g) == y) {
          found = g;
          return false;
        }
        return true;
      },
      b);
  return found;
}

PermGroup quotient_group(const PermGroup &G, const PermGroup &N, const Bounds &b)
{
  if (!N.is_normal_in(G))
    throw InvalidArgument("quotient_group: subgroup is not normal");
  auto nelems = N.elements(b);
  if (G.order() > b.enumeration)
    throw BoundExceeded("quotient_group: group exceeds the enumeration bound");
  // Right coset Nc is keyed by its lexicographically least element.
  auto key = [&](const Permutation &c) {
    Permutation best = nelems.front() * c;
    for (const auto &n : nelems) {
      Permutation e = n * c;
      if (e < best)
        best = e;
    }
    return best;
  };
  std::vector<Permutation> reps{G.identity()};
  std::unordered_map<Permutation, std::size_t> index{{key(G.identity()), 0}};
  // images[s][i] = index of the coset (reps[i] * s)
  std::vector<std::vector<std::size_t>> images(G.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < G.generators().size(); ++s) {
      Permutation c = reps[i] * G.generators()[s];
      Permutation k = key(c);
      auto it = index.find(k);
      std::size_t j;
      if (it == index.end()) {
        j = reps.size();
        index.emplace(std::move(k), j);
        reps.push_back(std::move(c));
      } else {
        j = it->second;
      }
      images[s].resize(std::max(images[s].size(), i + 1));
      images[s][i] = j;
    }
  }
  std::size_t m = reps.size();
  if (m > max_degree)
    throw BoundExceeded("quotient_group: index exceeds the supported degree");
  std::vector<Permutation> gens;
  for (auto &img : images) {
    std::vector<Point> pts(m);
    for (std::size_t i = 0; i < m; ++i)
      pts[i] = static_cast<Point>(img[i]);
    gens.emplace_back(std::move(pts));
  }
  if (gens.empty())
    gens.emplace_back(1);
  return PermGroup::from_generators(std::move(gens));
}

} // namespace hhb::permcore
