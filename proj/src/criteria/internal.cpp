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

#include "internal.hpp"

#include <algorithm>
#include <set>

namespace hhb::criteria::detail {

bool is_sylow(const PermGroup &P, const PermGroup &G, std::uint64_t p)
{
  return P.is_subgroup_of(G) && permcore::is_p_group(P, p) && P.order() == p_part(G.order(), p);
}

nlohmann::json matrix_json(const exalg::Matrix &M)
{
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (std::size_t j = 0; j < M.cols(); ++j)
      r.push_back(M(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

bool is_zero_vector(const exalg::Vec &v)
{
  return std::all_of(v.begin(), v.end(), [](exalg::Elt x) { return x == 0; });
}

std::string vec_string(const exalg::Vec &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::map<std::size_t, std::vector<std::vector<std::size_t>>> cycles_by_length(const Permutation &x)
{
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> out;
  std::vector<bool> seen(x.degree(), false);
  for (std::size_t s = 0; s < x.degree(); ++s) {
    if (seen[s])
      continue;
    std::vector<std::size_t> c;
    for (std::size_t t = s; !seen[t]; t = x[t]) {
      seen[t] = true;
      c.push_back(t);
    }
    out[c.size()].push_back(std::move(c));
  }
  return out;
}

std::uint64_t sn_centralizer_order(const Permutation &x)
{
  std::uint64_t order = 1;
  for (const auto &[k, cs] : cycles_by_length(x))
    for (std::size_t j = 1; j <= cs.size(); ++j)
      order *= k * j;
  return order;
}

Permutation swap_cycles(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
                        std::size_t n)
{
  std::vector<std::vector<std::size_t>> cyc;
  for (std::size_t t = 0; t < a.size(); ++t)
    cyc.push_back({a[t], b[t]});
  return Permutation::from_cycles(cyc, n);
}

PermGroup sn_centralizer(const Permutation &x)
{
  const std::size_t n = x.degree();
  std::vector<Permutation> gens;
  for (const auto &[k, cs] : cycles_by_length(x)) {
    if (k > 1)
      gens.push_back(Permutation::from_cycles({cs[0]}, n));
    if (cs.size() >= 2)
      gens.push_back(swap_cycles(cs[0], cs[1], n));
    if (cs.size() >= 3) {
      // cycle the blocks c_0 -> c_1 -> ... -> c_(m-1) -> c_0 pointwise
      std::vector<std::vector<std::size_t>> cyc;
      for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::size_t> orbit;
        for (const auto &c : cs)
          orbit.push_back(c[t]);
        cyc.push_back(std::move(orbit));
      }
      gens.push_back(Permutation::from_cycles(cyc, n));
    }
  }
  if (gens.empty())
    return PermGroup::trivial(n);
  return PermGroup::from_generators(std::move(gens));
}

PermGroup even_part(const PermGroup &H)
{
  // Schreier generators for the transversal {1, t} with t an odd generator.
  const auto &gens = H.generators();
  auto odd = std::find_if(gens.begin(), gens.end(), [](const Permutation &g) { return !g.is_even(); });
  if (odd == gens.end())
    return H;
  const Permutation t = *odd, ti = t.inverse();
  std::vector<Permutation> out;
  for (const auto &s : gens) {
    if (s.is_even()) {
      out.push_back(s);
      out.push_back(t * s * ti);
    } else {
      out.push_back(s * ti);
      out.push_back(t * s);
    }
  }
  std::erase_if(out, [](const Permutation &g) { return g.is_identity(); });
  if (out.empty())
    return PermGroup::trivial(H.degree());
  return PermGroup::from_generators(std::move(out));
}

std::vector<Permutation> p_element_candidates(const PermGroup &G, std::uint64_t p,
                                              bool keep_identity, const Bounds &b)
{
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto &cls : search_order(G, b)) {
    Permutation x = permcore::p_part(cls.representative, p);
    if (!x.is_identity() && seen.insert(x).second)
      out.push_back(x);
  }
  if (keep_identity)
    out.push_back(G.identity());
  return out;
}

int an_case(const Permutation &g)
{
  std::size_t twice = 0;
  for (const auto &[k, cs] : cycles_by_length(g)) {
    if (cs.size() >= 4)
      return 1;
    if (cs.size() >= 2)
      ++twice;
  }
  return twice >= 3 ? 2 : 3;
}

void require_prime(std::uint64_t p, const char *who)
{
  if (!exalg::is_prime(p))
    throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

Certificate finish(Certificate c, const Bounds &b)
{
  ReplayResult r = replay(c, b);
  if (!r)
    throw InternalError(criterion_name(c.criterion) + " certificate does not replay: " + r.message);
  c.trace.insert(c.trace.end(), r.facts.begin(), r.facts.end());
  return c;
}

} // namespace hhb::criteria::detail
