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

#include <functional>

namespace hhb::criteria {

using namespace detail;
using permcore::centralizer;
using permcore::derived_subgroup;

namespace {

using Search = std::function<Verdict(Certificate &)>;

Certificate run_item(Criterion item, const PermGroup &G, const PermGroup &P, std::uint64_t p,
                     const Bounds &b, const Search &search)
{
  Certificate c;
  c.criterion = item;
  c.inputs["G"] = group_json(G);
  c.inputs["p"] = p;
  c.set_subgroup("P", P);
  try {
    c.verdict = search(c);
    if (c.verdict == Verdict::Holds)
      return finish(std::move(c), b);
  } catch (const BoundExceeded &e) {
    c.verdict = Verdict::Inconclusive;
    c.trace.push_back(std::string("bound exceeded: ") + e.what());
  }
  return c;
}

} // namespace

std::vector<Certificate> prop36_profile(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "prop36_profile");
  if (G.order() % p != 0)
    throw InvalidArgument("prop36_profile: p does not divide |G|");
  const PermGroup P = permcore::sylow_subgroup(G, p, b);
  const PermGroup D = derived_subgroup(P);
  std::vector<Certificate> out;

  out.push_back(run_item(Criterion::Prop36_i, G, P, p, b, [&](Certificate &c) {
    // x is central in C_G(x), so it lies in every Sylow subgroup of C_G(x)
    // and which one is taken does not matter.
    for (const auto &x : p_element_candidates(G, p, false, b)) {
      PermGroup C = centralizer(G, x, b);
      PermGroup Q = permcore::sylow_subgroup_containing(C, PermGroup::from_generators({x}), p, b);
      if (!derived_subgroup(Q).contains(x)) {
        c.set_element("x", x);
        c.set_subgroup("Q", Q);
        return Verdict::Holds;
      }
    }
    c.trace.push_back("x lies in [Q, Q] for every p-element x");
    return Verdict::Fails;
  }));

  out.push_back(run_item(Criterion::Prop36_ii, G, P, p, b, [&](Certificate &c) {
    PermGroup Z = permcore::center(P, b);
    for (const auto &z : Z.generators())
      if (!D.contains(z)) {
        c.set_element("z", z);
        return Verdict::Holds;
      }
    c.trace.push_back("Z(P) <= [P, P]");
    return Verdict::Fails;
  }));

  out.push_back(run_item(Criterion::Prop36_iii, G, P, p, b, [&](Certificate &c) {
    if (P.is_abelian())
      return Verdict::Holds;
    c.trace.push_back("P is not abelian");
    return Verdict::Fails;
  }));

  out.push_back(run_item(Criterion::Prop36_iv, G, P, p, b, [&](Certificate &c) {
    // A normal cyclic <a> with P/<a> cyclic; conjugating a and b keeps
    // both properties, so class representatives suffice for each.
    auto reps = search_order(P, b);
    for (const auto &ca : reps) {
      const Permutation &a = ca.representative;
      PermGroup N = a.is_identity() ? PermGroup::trivial(P.degree()) : PermGroup::from_generators({a});
      if (!N.is_normal_in(P))
        continue;
      const std::uint64_t q = P.order() / N.order();
      // bN generates the p-group P/N iff b^(q/p) is not in N
      for (const auto &cb : reps) {
        const Permutation &bb = cb.representative;
        if (q == 1 || !N.contains(bb.pow(static_cast<std::int64_t>(q / p)))) {
          c.set_element("a", a);
          c.set_element("b", bb);
          return Verdict::Holds;
        }
      }
    }
    c.trace.push_back("no normal cyclic subgroup with cyclic quotient");
    return Verdict::Fails;
  }));

  out.push_back(run_item(Criterion::Prop36_v, G, P, p, b, [&](Certificate &c) {
    const std::uint64_t e = permcore::exponent(D, b);
    c.set_value("exp_derived", static_cast<std::int64_t>(e));
    for (const auto &cls : search_order(P, b))
      if (cls.representative.order() > e) {
        c.set_element("x", cls.representative);
        return Verdict::Holds;
      }
    c.trace.push_back("exp(P) = exp([P, P]) = " + std::to_string(e));
    return Verdict::Fails;
  }));

  {
    Certificate c;
    c.criterion = Criterion::Prop36_vi;
    c.verdict = Verdict::NotImplemented;
    c.inputs["G"] = group_json(G);
    c.inputs["p"] = p;
    c.trace.push_back("p-solvability is not implemented");
    out.push_back(std::move(c));
  }

  out.push_back(run_item(Criterion::Prop36_vii, G, P, p, b, [&](Certificate &c) {
    PermGroup O = permcore::p_core(G, p, b);
    c.set_subgroup("O", O);
    if (D.is_subgroup_of(O))
      return Verdict::Holds;
    c.trace.push_back("[P, P] is not contained in O_p(G) of order " + std::to_string(O.order()));
    return Verdict::Fails;
  }));

  out.push_back(run_item(Criterion::Prop36_viii, G, P, p, b, [&](Certificate &c) {
    bool gap = false;
    auto try_x = [&](const Permutation &x) {
      if (x.is_identity() || D.contains(x))
        return false;
      PermGroup C = centralizer(G, x, b);
      PermGroup CP = P.same_elements(G) ? C : centralizer(P, x, b);
      const std::uint64_t idx = C.order() / CP.order();
      if (idx % (p * p) == 0)
        return false;
      if (p_part(idx, p) == p) {
        PermGroup Q = permcore::sylow_subgroup_containing(C, CP, p, b);
        if (derived_subgroup(Q).contains(x)) {
          // meets the hypothesis, but the index-p step does not go through
          c.trace.push_back("x = " + x.to_string() + " has [C_G(x) : C_P(x)] = " + std::to_string(idx) +
                            " but lies in [Q, Q]");
          gap = true;
          return false;
        }
      }
      c.set_element("x", x);
      c.set_value("index_in_centralizer", static_cast<std::int64_t>(idx));
      c.set_value("index_in_P", static_cast<std::int64_t>(P.order() / CP.order()));
      return true;
    };
    // the generators are tried before any class computation in P
    for (const auto &x : P.generators())
      if (try_x(x))
        return Verdict::Holds;
    for (const auto &cls : search_order(P, b))
      if (try_x(cls.representative))
        return Verdict::Holds;
    if (gap)
      return Verdict::Inconclusive;
    c.trace.push_back("p^2 divides [C_G(x) : C_P(x)] for every x in P \\ [P, P]");
    return Verdict::Fails;
  }));
  return out;
}

} // namespace hhb::criteria
