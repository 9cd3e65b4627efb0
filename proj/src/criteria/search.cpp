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

namespace hhb::criteria {

using namespace detail;
using permcore::centralizer;
using permcore::derived_subgroup;

namespace {

Certificate start(Criterion c, const PermGroup &G, std::uint64_t p)
{
  Certificate out;
  out.criterion = c;
  out.inputs["G"] = group_json(G);
  out.inputs["p"] = p;
  return out;
}

void require_p_subgroup(const PermGroup &G, const PermGroup &P, std::uint64_t p, const char *who)
{
  require_prime(p, who);
  if (P.degree() != G.degree() || !P.is_subgroup_of(G))
    throw InvalidArgument(std::string(who) + ": P is not a subgroup of G");
  if (!permcore::is_p_group(P, p))
    throw InvalidArgument(std::string(who) + ": P is not a p-group");
}

} // namespace

bool is_non_schur(const PermGroup &G, const Permutation &x, const Bounds &b)
{
  if (x.degree() != G.degree() || !G.contains(x))
    throw InvalidArgument("is_non_schur: x is not in G");
  PermGroup C = centralizer(G, x, b);
  return !derived_subgroup(C).contains(x);
}

std::vector<permcore::ConjClass> search_order(const PermGroup &G, const Bounds &b)
{
  std::vector<permcore::ConjClass> out = G.classes(b);
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &c) {
    if (a.centralizer.order() != c.centralizer.order())
      return a.centralizer.order() < c.centralizer.order();
    return a.representative.images() < c.representative.images();
  });
  return out;
}

Certificate find_non_schur(const PermGroup &G, std::uint64_t p, NonSchurMode mode, const Bounds &b)
{
  require_prime(p, "find_non_schur");
  Certificate c = start(mode == NonSchurMode::Strong ? Criterion::StrongNonSchur : Criterion::WeakNonSchur, G, p);
  if (G.order() % p != 0) {
    c.verdict = Verdict::HoldsVacuously;
    return finish(std::move(c), b);
  }
  std::vector<Permutation> cand;
  if (mode == NonSchurMode::Strong) {
    cand = p_element_candidates(G, p, false, b);
  } else {
    for (const auto &cls : search_order(G, b))
      if (cls.representative.order() % p == 0)
        cand.push_back(cls.representative);
  }
  for (const auto &x : cand) {
    if (is_non_schur(G, x, b)) {
      c.verdict = Verdict::Holds;
      c.set_element("x", x);
      c.trace.push_back("candidate " + std::to_string(&x - cand.data() + 1) + " of " +
                        std::to_string(cand.size()) + " in search order");
      return finish(std::move(c), b);
    }
  }
  c.verdict = Verdict::Fails;
  c.trace.push_back("no non-Schur element among " + std::to_string(cand.size()) + " candidates");
  return c;
}

Certificate check_SC(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "check_SC");
  Certificate c = start(Criterion::StrongCommutatorIndex, G, p);
  auto cand = p_element_candidates(G, p, true, b);
  for (const auto &x : cand) {
    auto d = fphom::h1_fp(centralizer(G, x, b), p).dimension();
    if (d > 0) {
      c.verdict = Verdict::Holds;
      c.set_element("x", x);
      c.set_value("dimension", static_cast<std::int64_t>(d));
      return finish(std::move(c), b);
    }
  }
  c.verdict = Verdict::Fails;
  c.trace.push_back("H_1(C_G(x), F_p) = 0 for all " + std::to_string(cand.size()) + " candidates");
  return c;
}

Certificate cor32_check(const PermGroup &G, const PermGroup &P, std::uint64_t p,
                        const std::optional<std::vector<Permutation>> &candidates, const Bounds &b)
{
  require_p_subgroup(G, P, p, "cor32_check");
  Certificate c = start(Criterion::Cor32, G, p);
  c.inputs["P"] = group_json(P);
  std::vector<Permutation> cand;
  if (candidates) {
    for (const auto &x : *candidates) {
      if (x.degree() != P.degree() || !P.contains(x))
        throw InvalidArgument("cor32_check: candidate not in P");
      cand.push_back(x);
    }
  } else {
    for (const auto &cls : search_order(P, b))
      cand.push_back(cls.representative);
  }
  for (const auto &x : cand) {
    auto M = fphom::h1_induced_map(centralizer(P, x, b), centralizer(G, x, b), p);
    auto r = exalg::rank(M);
    if (r >= 1) {
      c.verdict = Verdict::Holds;
      c.set_element("x", x);
      c.set_matrix("map", matrix_json(M));
      c.set_value("rank", static_cast<std::int64_t>(r));
      return finish(std::move(c), b);
    }
  }
  c.verdict = Verdict::Fails;
  c.trace.push_back("H_1(C_P(x)) -> H_1(C_G(x)) is zero for all " + std::to_string(cand.size()) +
                    " candidates");
  return c;
}

Certificate theoremA_witness(const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b)
{
  require_p_subgroup(G, P, p, "theoremA_witness");
  Certificate c = start(Criterion::TheoremA, G, p);
  c.inputs["P"] = group_json(P);
  auto reps = search_order(P, b);
  for (const auto &cls : reps) {
    const Permutation &x = cls.representative;
    PermGroup C = centralizer(G, x, b);
    fphom::H1Space h(C, p);
    auto M = fphom::h1_induced_map(centralizer(P, x, b), C, p);
    // The index-p normal subgroups of C are the preimages of hyperplanes of
    // H_1(C); the coordinate hyperplane v_r = 0 meets the image of C_P(x)
    // properly iff row r of M is nonzero.
    for (std::size_t r = 0; r < M.rows(); ++r) {
      bool nonzero = false;
      for (std::size_t j = 0; j < M.cols(); ++j)
        nonzero = nonzero || M(r, j) != 0;
      if (!nonzero)
        continue;
      std::vector<Permutation> gens = h.kernel().generators();
      for (std::size_t s = 0; s < h.dimension(); ++s)
        if (s != r)
          gens.push_back(h.basis_elements()[s]);
      std::erase_if(gens, [](const Permutation &g) { return g.is_identity(); });
      PermGroup H = gens.empty() ? PermGroup::trivial(G.degree()) : PermGroup::from_generators(gens);
      c.verdict = Verdict::Holds;
      c.set_element("x", x);
      c.set_subgroup("H", H);
      c.trace.push_back("H is the preimage of the hyperplane v_" + std::to_string(r + 1) +
                        " = 0 of H_1(C_G(x), F_p)");
      return finish(std::move(c), b);
    }
  }
  c.verdict = Verdict::Fails;
  c.trace.push_back("no index-p normal subgroup of C_G(x) meets C_P(x) in index p, over " +
                    std::to_string(reps.size()) + " classes of P");
  return c;
}

Certificate thm37_map(const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b)
{
  require_p_subgroup(G, P, p, "thm37_map");
  Certificate c = start(Criterion::Thm37_1, G, p);
  c.inputs["P"] = group_json(P);
  auto M = fphom::h1_induced_map(P, G, p);
  auto r = exalg::rank(M);
  if (r == 0) {
    c.verdict = Verdict::Fails;
    c.trace.push_back("H_1(P) -> H_1(G) is zero");
    return c;
  }
  c.verdict = Verdict::Holds;
  c.set_matrix("map", matrix_json(M));
  c.set_value("rank", static_cast<std::int64_t>(r));
  return finish(std::move(c), b);
}

Certificate thm37_transfer(const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b)
{
  require_p_subgroup(G, P, p, "thm37_transfer");
  Certificate c = start(Criterion::Thm37_2, G, p);
  c.inputs["P"] = group_json(P);
  PermGroup D = derived_subgroup(P);
  auto reps = search_order(P, b);
  for (const auto &cls : reps) {
    const Permutation &x = cls.representative;
    if (D.contains(x))
      continue;
    if (centralizer(P, x, b).order() == p_part(centralizer(G, x, b).order(), p)) {
      c.verdict = Verdict::Holds;
      c.set_element("x", x);
      return finish(std::move(c), b);
    }
  }
  c.verdict = Verdict::Fails;
  c.trace.push_back("no x in P \\ [P, P] with C_P(x) Sylow in C_G(x), over " + std::to_string(reps.size()) +
                    " classes of P");
  return c;
}

Certificate thm37_sylow_non_schur(const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b)
{
  require_p_subgroup(G, P, p, "thm37_sylow_non_schur");
  Certificate c = start(Criterion::Thm37_3, G, p);
  c.inputs["P"] = group_json(P);
  if (!is_sylow(P, G, p)) {
    c.verdict = Verdict::Fails;
    c.trace.push_back("P is not a Sylow subgroup of G");
    return c;
  }
  Certificate s = find_non_schur(G, p, NonSchurMode::Strong, b);
  if (s.verdict != Verdict::Holds) {
    c.verdict = Verdict::Fails;
    c.trace.push_back("G has no non-Schur p-element");
    return c;
  }
  c.verdict = Verdict::Holds;
  c.set_element("x", s.element("x"));
  return finish(std::move(c), b);
}

Certificate thm37_p_regular(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "thm37_p_regular");
  Certificate c = start(Criterion::Thm37_4, G, p);
  c.witness["pairs"] = nlohmann::json::array();
  if (G.order() % p != 0) {
    c.verdict = Verdict::HoldsVacuously;
    return finish(std::move(c), b);
  }
  for (const auto &cls : search_order(G, b)) {
    const Permutation &g = cls.representative;
    if (g.order() % p != 0 && cls.centralizer.order() % p == 0) {
      bool found = false;
      for (const auto &x : p_element_candidates(cls.centralizer, p, false, b)) {
        if (!is_zero_vector(fphom::h1_class_vector(centralizer(G, x, b), p, x))) {
          c.witness["pairs"].push_back({g.to_string(), x.to_string()});
          found = true;
          break;
        }
      }
      if (!found) {
        c.verdict = Verdict::Fails;
        c.trace.push_back("no suitable p-element commutes with g = " + g.to_string());
        return c;
      }
    }
  }
  c.verdict = Verdict::Holds;
  return finish(std::move(c), b);
}

Certificate thm37_normal(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "thm37_normal");
  Certificate c = start(Criterion::Thm37_8, G, p);
  PermGroup Q = permcore::p_core(G, p, b);
  c.set_subgroup("Q", Q);
  auto M = fphom::h1_induced_map(Q, G, p);
  auto r = exalg::rank(M);
  if (r == 0) {
    c.verdict = Verdict::Fails;
    c.trace.push_back("H_1(O_p(G)) -> H_1(G) is zero (|O_p(G)| = " + std::to_string(Q.order()) + ")");
    return c;
  }
  c.verdict = Verdict::Holds;
  c.set_matrix("map", matrix_json(M));
  c.set_value("rank", static_cast<std::int64_t>(r));
  return finish(std::move(c), b);
}

} // namespace hhb::criteria
