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

void StabChain::add_level(Point base)
{
  Level lv;
  lv.base = base;
  lv.pos.assign(degree_, -1);
  lv.orbit.push_back(base);
  lv.pos[base] = 0;
  lv.transversal.emplace_back(degree_);
  lv.inv_transversal.emplace_back(degree_);
  levels_.push_back(std::move(lv));
}

void StabChain::extend_orbit(Level &lv)
{
  for (std::size_t a = 0; a < lv.orbit.size(); ++a) {
    for (const auto &s : lv.gens) {
      Point c = s[lv.orbit[a]];
      if (lv.pos[c] >= 0)
        continue;
      lv.pos[c] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(c);
      Permutation u = lv.transversal[a] * s;
      lv.inv_transversal.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation h, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &lv = levels_[l];
    std::int32_t idx = lv.pos[h[lv.base]];
    if (idx < 0)
      return {std::move(h), l};
    h = h * lv.inv_transversal[static_cast<std::size_t>(idx)];
  }
  return {std::move(h), levels_.size()};
}

StabChain::StabChain(const std::vector<Permutation> &gens, std::size_t degree) : degree_(degree)
{
  std::vector<Permutation> strong;
  for (const auto &g : gens) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree mismatch");
    if (!g.is_identity())
      strong.push_back(g);
  }
  if (strong.empty())
    return;

  // Initial base: every generator moves some base point.
  for (const auto &g : strong) {
    bool fixes_all = true;
    for (const auto &lv : levels_)
      if (g[lv.base] != lv.base) {
        fixes_all = false;
        break;
      }
    if (fixes_all)
      add_level(static_cast<Point>(g.first_moved()));
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto &g : strong) {
      bool fixes = true;
      for (std::size_t k = 0; k < l; ++k)
        if (g[levels_[k].base] != levels_[k].base) {
          fixes = false;
          break;
        }
      if (fixes)
        levels_[l].gens.push_back(g);
    }
    extend_orbit(levels_[l]);
  }

  // tested[l][a][j]: Schreier generator for orbit point a and generator j
  // at level l has been sifted already.
  std::vector<std::vector<std::vector<char>>> tested(levels_.size());
  std::size_t i = levels_.size();
  while (i-- > 0) {
  restart:
    Level &lv = levels_[i];
    auto &tl = tested[i];
    bool jumped = false;
    for (std::size_t a = 0; a < lv.orbit.size() && !jumped; ++a) {
      if (tl.size() <= a)
        tl.resize(lv.orbit.size());
      for (std::size_t j = 0; j < lv.gens.size(); ++j) {
        if (tl[a].size() <= j)
          tl[a].resize(lv.gens.size(), 0);
        if (tl[a][j])
          continue;
        tl[a][j] = 1;
        const Permutation &s = lv.gens[j];
        Point c = s[lv.orbit[a]];
        Permutation h =
            lv.transversal[a] * s * lv.inv_transversal[static_cast<std::size_t>(lv.pos[c])];
        if (h.is_identity())
          continue;
        auto [res, stop] = strip(std::move(h), i + 1);
        if (res.is_identity())
          continue;
        if (stop == levels_.size()) {
          add_level(static_cast<Point>(res.first_moved()));
          tested.emplace_back();
        }
        for (std::size_t l = i + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(res);
          extend_orbit(levels_[l]);
        }
        i = stop;
        jumped = true;
        break;
      }
    }
    if (jumped)
      goto restart;
  }
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> b;
  for (const auto &lv : levels_)
    b.push_back(lv.base);
  return b;
}

std::uint64_t StabChain::order() const
{
  std::uint64_t o = 1;
  for (const auto &lv : levels_) {
    std::uint64_t s = lv.orbit.size();
    if (o > UINT64_MAX / s)
      throw BoundExceeded("group order exceeds 2^64");
    o *= s;
  }
  return o;
}

bool StabChain::contains(const Permutation &g) const
{
  if (g.degree() != degree_)
    throw InvalidArgument("degree mismatch in membership test");
  auto [res, stop] = strip(g, 0);
  return stop == levels_.size() && res.is_identity();
}

std::uint64_t StabChain::rank(const Permutation &g) const
{
  std::uint64_t r = 0, mult = 1;
  Permutation h = g;
  for (const auto &lv : levels_) {
    std::int32_t idx = lv.pos[h[lv.base]];
    if (idx < 0)
      throw InvalidArgument("rank of a non-member");
    r += static_cast<std::uint64_t>(idx) * mult;
    mult *= lv.orbit.size();
    h = h * lv.inv_transversal[static_cast<std::size_t>(idx)];
  }
  if (!h.is_identity())
    throw InvalidArgument("rank of a non-member");
  return r;
}

Permutation StabChain::unrank(std::uint64_t r) const
{
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    digits[l] = static_cast<std::size_t>(r % levels_[l].orbit.size());
    r /= levels_[l].orbit.size();
  }
  if (r != 0)
    throw InvalidArgument("rank out of range");
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;)
    g = g * levels_[l].transversal[digits[l]];
  return g;
}

void StabChain::for_each(const std::function<bool(const Permutation &)> &f) const
{
  if (levels_.empty()) {
    f(Permutation(degree_));
    return;
  }
  // Iterative DFS over transversal choices from the top level down.
  std::size_t L = levels_.size();
  std::vector<Permutation> prefix(L + 1, Permutation(degree_));
  std::vector<std::size_t> idx(L, 0);
  std::size_t l = L - 1;
  for (;;) {
    if (idx[l] < levels_[l].orbit.size()) {
      prefix[l] = prefix[l + 1] * levels_[l].transversal[idx[l]];
      ++idx[l];
      if (l == 0) {
        if (!f(prefix[0]))
          return;
      } else {
        --l;
        idx[l] = 0;
      }
    } else {
      if (l == L - 1)
        return;
      ++l;
    }
  }
}

} // namespace hhb::permcore
