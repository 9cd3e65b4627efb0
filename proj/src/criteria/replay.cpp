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

#include <numeric>

namespace hhb::criteria {

using namespace detail;
using permcore::centralizer;
using permcore::derived_subgroup;

namespace {

struct Failure {
  std::string what;
};

struct Facts {
  std::vector<std::string> list;
  void need(bool ok, const std::string &what)
  {
    if (!ok)
      throw Failure{what};
    list.push_back(what);
  }
};

std::string ord(const PermGroup &H) { return std::to_string(H.order()); }

struct Ctx {
  const Certificate &c;
  const Bounds &b;
  Facts f;

  std::uint64_t p() const { return c.inputs.at("p").get<std::uint64_t>(); }
  PermGroup G() const { return group_from_json(c.inputs.at("G")); }
  PermGroup P() const { return group_from_json(c.inputs.at("P")); }

  Permutation in(const PermGroup &H, const std::string &hname, const std::string &key)
  {
    Permutation x = c.element(key);
    f.need(H.contains(x), key + " = " + x.to_string() + " lies in " + hname);
    return x;
  }

  void p_element(const Permutation &x, const std::string &name, bool nontrivial)
  {
    f.need(permcore::is_p_element(x, p()) && (!nontrivial || !x.is_identity()),
           name + " has order " + std::to_string(x.order()) + ", a " +
               (nontrivial ? "nontrivial " : "") + "power of " + std::to_string(p()));
  }

  void p_subgroup(const PermGroup &P, const PermGroup &G, const std::string &pn, const std::string &gn)
  {
    f.need(P.is_subgroup_of(G), pn + " <= " + gn);
    f.need(permcore::is_p_group(P, p()), pn + " is a " + std::to_string(p()) + "-group of order " + ord(P));
  }

  void sylow(const PermGroup &P, const PermGroup &G, const std::string &pn, const std::string &gn)
  {
    f.need(is_sylow(P, G, p()), pn + " is a Sylow " + std::to_string(p()) + "-subgroup of " + gn +
                                   " (order " + ord(P) + ")");
  }

  void non_schur(const PermGroup &G, const Permutation &x)
  {
    PermGroup C = centralizer(G, x, b);
    PermGroup D = derived_subgroup(C);
    f.need(!D.contains(x), "x is not in [C_G(x), C_G(x)] (|C_G(x)| = " + ord(C) +
                               ", |[C_G(x), C_G(x)]| = " + ord(D) + ")");
  }

  void nonzero_map(const PermGroup &H, const PermGroup &K, const std::string &hn, const std::string &kn,
                   const std::string &key)
  {
    auto M = fphom::h1_induced_map(H, K, p());
    auto r = exalg::rank(M);
    f.need(r >= 1, "H_1(" + hn + ") -> H_1(" + kn + ") has rank " + std::to_string(r));
    f.need(static_cast<std::int64_t>(r) == c.value("rank"), "the recorded rank matches");
    f.need(c.witness.at("matrices").at(key) == matrix_json(M), "the recorded matrix matches");
  }

  void nonzero_class(const PermGroup &C, const Permutation &x, const std::string &what)
  {
    auto v = fphom::h1_class_vector(C, p(), x);
    f.need(!is_zero_vector(v), what + " has coordinates " + vec_string(v) + " != 0");
  }
};

void replay_non_schur(Ctx &x)
{
  const auto &c = x.c;
  PermGroup G = x.G();
  if (c.verdict == Verdict::HoldsVacuously) {
    x.f.need(G.order() % x.p() != 0, std::to_string(x.p()) + " does not divide |G| = " + ord(G));
    return;
  }
  Permutation w = x.in(G, "G", "x");
  if (c.criterion == Criterion::StrongNonSchur)
    x.p_element(w, "x", true);
  else if (c.criterion == Criterion::WeakNonSchur)
    x.f.need(w.order() % x.p() == 0, "the order " + std::to_string(w.order()) + " of x is divisible by " +
                                         std::to_string(x.p()));
  x.non_schur(G, w);
}

void replay_sc(Ctx &x)
{
  PermGroup G = x.G();
  Permutation w = x.in(G, "G", "x");
  x.p_element(w, "x", false);
  PermGroup C = centralizer(G, w, x.b);
  auto d = fphom::h1_fp(C, x.p()).dimension();
  x.f.need(d > 0, "dim H_1(C_G(x), F_p) = " + std::to_string(d) + " with |C_G(x)| = " + ord(C));
  x.f.need(static_cast<std::int64_t>(d) == x.c.value("dimension"), "the recorded dimension matches");
}

void replay_prop36(Ctx &x)
{
  const auto &c = x.c;
  const std::uint64_t p = x.p();
  PermGroup G = x.G(), P = c.subgroup("P");
  x.sylow(P, G, "P", "G");
  x.f.need(!P.is_trivial(), "P is nontrivial");
  switch (c.criterion) {
  case Criterion::Prop36_i: {
    Permutation w = x.in(G, "G", "x");
    PermGroup C = centralizer(G, w, x.b);
    PermGroup Q = c.subgroup("Q");
    x.sylow(Q, C, "Q", "C_G(x)");
    x.f.need(Q.contains(w), "x lies in Q");
    x.f.need(!derived_subgroup(Q).contains(w), "x is not in [Q, Q]");
    break;
  }
  case Criterion::Prop36_ii: {
    Permutation z = x.in(P, "P", "z");
    bool central = true;
    for (const auto &g : P.generators())
      central = central && g * z == z * g;
    x.f.need(central, "z is central in P");
    x.f.need(!derived_subgroup(P).contains(z), "z is not in [P, P]");
    break;
  }
  case Criterion::Prop36_iii:
    x.f.need(P.is_abelian(), "P is abelian");
    break;
  case Criterion::Prop36_iv: {
    Permutation a = x.in(P, "P", "a"), bb = x.in(P, "P", "b");
    PermGroup N = PermGroup::from_generators({a});
    x.f.need(N.is_normal_in(P), "<a> of order " + ord(N) + " is normal in P");
    PermGroup AB = PermGroup::from_generators({a, bb});
    x.f.need(AB.order() == P.order(), "<a, b> = P, so P/<a> is cyclic");
    break;
  }
  case Criterion::Prop36_v: {
    Permutation w = x.in(P, "P", "x");
    std::uint64_t e = permcore::exponent(derived_subgroup(P), x.b);
    x.f.need(w.order() > e, "x has order " + std::to_string(w.order()) + " > exp([P, P]) = " +
                                std::to_string(e));
    x.f.need(static_cast<std::int64_t>(e) == c.value("exp_derived"), "the recorded exponent matches");
    break;
  }
  case Criterion::Prop36_vii: {
    PermGroup O = c.subgroup("O");
    x.p_subgroup(O, G, "O", "G");
    x.f.need(O.is_normal_in(G), "O is normal in G");
    x.f.need(derived_subgroup(P).is_subgroup_of(O), "[P, P] <= O");
    break;
  }
  case Criterion::Prop36_viii: {
    Permutation w = x.in(P, "P", "x");
    x.f.need(!derived_subgroup(P).contains(w), "x is not in [P, P]");
    PermGroup C = centralizer(G, w, x.b);
    PermGroup CP = P.same_elements(G) ? C : centralizer(P, w, x.b);
    const std::uint64_t idx = C.order() / CP.order();
    x.f.need(idx % (p * p) != 0, "[C_G(x) : C_P(x)] = " + std::to_string(idx) + " is not divisible by p^2");
    x.f.need(static_cast<std::int64_t>(idx) == c.value("index_in_centralizer"), "the recorded index matches");
    x.f.need(static_cast<std::int64_t>(P.order() / CP.order()) == c.value("index_in_P"),
             "[P : C_P(x)] = " + std::to_string(P.order() / CP.order()));
    if (p_part(idx, p) == p) {
      PermGroup Q = permcore::sylow_subgroup_containing(C, CP, p, x.b);
      x.f.need(!derived_subgroup(Q).contains(w),
               "with Q a Sylow subgroup of C_G(x) containing C_P(x), [Q : C_P(x)] = p and x is not in [Q, Q]");
    } else {
      x.f.need(!derived_subgroup(CP).contains(w), "C_P(x) is Sylow in C_G(x) and x is not in [C_P(x), C_P(x)]");
    }
    break;
  }
  default:
    throw InternalError("replay_prop36: wrong criterion");
  }
}

void replay_centraliser_map(Ctx &x)
{
  const auto &c = x.c;
  PermGroup G = x.G(), P = x.P();
  x.p_subgroup(P, G, "P", "G");
  Permutation w = x.in(P, "P", "x");
  PermGroup CG = centralizer(G, w, x.b), CP = centralizer(P, w, x.b);
  if (c.criterion == Criterion::Cor32) {
    x.nonzero_map(CP, CG, "C_P(x)", "C_G(x)", "map");
    return;
  }
  PermGroup H = c.subgroup("H");
  x.f.need(H.is_subgroup_of(CG), "H <= C_G(x)");
  x.f.need(H.is_normal_in(CG), "H is normal in C_G(x)");
  x.f.need(CG.order() == x.p() * H.order(), "[C_G(x) : H] = p (|C_G(x)| = " + ord(CG) + ")");
  PermGroup I = permcore::subgroup_intersection(H, CP, x.b);
  x.f.need(CP.order() == x.p() * I.order(), "[C_P(x) : H n C_P(x)] = p (|C_P(x)| = " + ord(CP) + ")");
}

void replay_thm37(Ctx &x)
{
  const auto &c = x.c;
  const std::uint64_t p = x.p();
  PermGroup G = x.G();
  switch (c.criterion) {
  case Criterion::Thm37_1: {
    PermGroup P = x.P();
    x.p_subgroup(P, G, "P", "G");
    x.nonzero_map(P, G, "P", "G", "map");
    break;
  }
  case Criterion::Thm37_2: {
    PermGroup P = x.P();
    x.p_subgroup(P, G, "P", "G");
    Permutation w = x.in(P, "P", "x");
    x.f.need(!derived_subgroup(P).contains(w), "x is not in [P, P]");
    PermGroup CG = centralizer(G, w, x.b), CP = centralizer(P, w, x.b);
    x.f.need(CP.order() == p_part(CG.order(), p), "C_P(x) of order " + ord(CP) +
                                                       " is a Sylow subgroup of C_G(x) of order " + ord(CG));
    break;
  }
  case Criterion::Thm37_3: {
    PermGroup P = x.P();
    x.sylow(P, G, "P", "G");
    Permutation w = x.in(G, "G", "x");
    x.p_element(w, "x", true);
    x.non_schur(G, w);
    break;
  }
  case Criterion::Thm37_4: {
    if (c.verdict == Verdict::HoldsVacuously) {
      x.f.need(G.order() % p != 0, std::to_string(p) + " does not divide |G|");
      break;
    }
    const std::size_t n = G.degree();
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const auto &pr : c.witness.at("pairs"))
      pairs.emplace_back(Permutation::parse(pr.at(0).get<std::string>(), n),
                         Permutation::parse(pr.at(1).get<std::string>(), n));
    for (const auto &[g, w] : pairs) {
      const std::string tag = "g = " + g.to_string() + ", x = " + w.to_string();
      x.f.need(G.contains(g) && G.contains(w), tag + ": both lie in G");
      x.f.need(g.order() % p != 0, tag + ": g is p-regular");
      x.f.need(permcore::is_p_element(w, p), tag + ": x is a p-element");
      x.f.need(g * w == w * g, tag + ": gx = xg");
      x.nonzero_class(centralizer(G, w, x.b), w, tag + ": [x] in H_1(C_G(x), F_p)");
    }
    for (const auto &cls : G.classes(x.b)) {
      const auto &r = cls.representative;
      if (r.order() % p != 0 && cls.centralizer.order() % p == 0) {
        bool covered = false;
        for (const auto &pr : pairs)
          covered = covered || permcore::conjugating_element(G, r, pr.first, x.b).has_value();
        x.f.need(covered, "the class of " + r.to_string() + " is covered");
      }
    }
    break;
  }
  case Criterion::Thm37_8: {
    PermGroup Q = c.subgroup("Q");
    x.p_subgroup(Q, G, "Q", "G");
    x.f.need(Q.is_normal_in(G), "Q is normal in G");
    x.nonzero_map(Q, G, "Q", "G", "map");
    break;
  }
  default:
    throw InternalError("replay_thm37: wrong criterion");
  }
}

void check_sn_centralizer(Ctx &x, const PermGroup &C, const Permutation &w)
{
  bool commute = true;
  for (const auto &h : C.generators())
    commute = commute && h * w == w * h;
  x.f.need(commute && C.order() == sn_centralizer_order(w),
           "C_(S_n)(x) has order " + ord(C) + " = prod k^(m_k) m_k! over the cycle type of x");
}

std::uint64_t an_centralizer_order(const Permutation &g)
{
  PermGroup C = sn_centralizer(g);
  for (const auto &h : C.generators())
    if (!h.is_even())
      return C.order() / 2;
  return C.order();
}

void replay_symmetric(Ctx &x)
{
  const auto &c = x.c;
  const std::uint64_t p = x.p();
  const std::size_t n = c.inputs.at("n").get<std::size_t>();
  Permutation g = Permutation::parse(c.inputs.at("g").get<std::string>(), n);
  const bool alt = c.criterion == Criterion::AnWitness;
  x.f.need(g.degree() == n, "g = " + g.to_string() + " acts on n = " + std::to_string(n) + " points");
  if (alt)
    x.f.need(g.is_even(), "g is even");
  x.f.need(g.order() % p != 0, "g is p-regular");
  const std::uint64_t cg = alt ? an_centralizer_order(g) : sn_centralizer_order(g);
  x.f.need(cg % p == 0, std::string("|C_") + (alt ? "A" : "S") + "n(g)| = " + std::to_string(cg) +
                            " is divisible by p");

  if (alt && p == 2) {
    const std::int64_t k = c.value("case");
    x.f.need(k == an_case(g), "the cycle type of g falls in case " + std::to_string(k));
    if (k == 3) {
      Permutation z = c.element("z");
      x.f.need(z.is_even() && z * g == g * z && z.order() == 2, "z = " + z.to_string() +
                                                                     " is an even involution commuting with g");
      x.f.need(p_part(cg, 2) == 2, "a Sylow 2-subgroup of C_An(g) has order 2, so it is <z>, cyclic");
      return;
    }
    Permutation w = c.element("x"), y = c.element("y");
    x.f.need(w.is_even() && y.is_even(), "x = " + w.to_string() + " and y = " + y.to_string() + " are even");
    x.f.need(w * g == g * w && y * g == g * y, "x and y commute with g");
    x.f.need(w * y == y * w, "xy = yx");
    PermGroup CS = sn_centralizer(w);
    check_sn_centralizer(x, CS, w);
    PermGroup CA = even_part(CS);
    x.f.need(CA.contains(y), "y lies in C_An(x) of order " + ord(CA));
    x.nonzero_class(CA, y, "[y] in H_1(C_An(x), F_2)");
    x.nonzero_class(CS, y, "its image in H_1(C_Sn(x), F_2)");
    return;
  }

  Permutation w = c.element("x");
  const std::int64_t i = c.value("i");
  x.f.need(i > 0 && static_cast<std::uint64_t>(i) % p != 0, "i = " + std::to_string(i) + " is prime to p");
  x.f.need(w * g == g * w, "x = " + w.to_string() + " commutes with g");
  auto cyc = cycles_by_length(w);
  const std::size_t fixed = cyc.count(1) ? cyc[1].size() : 0, pcyc = cyc.count(p) ? cyc[p].size() : 0;
  x.f.need(fixed + p * pcyc == n && pcyc == static_cast<std::size_t>(i),
           "x has cycle type (1)^" + std::to_string(fixed) + " (p)^" + std::to_string(pcyc));
  PermGroup CS = sn_centralizer(w);
  check_sn_centralizer(x, CS, w);
  if (alt) {
    x.f.need(w.is_even(), "x is even");
    PermGroup CA = even_part(CS);
    x.nonzero_class(CA, w, "[x] in H_1(C_An(x), F_p)");
    x.nonzero_class(CS, w, "its image in H_1(C_Sn(x), F_p)");
  } else {
    x.nonzero_class(CS, w, "[x] in H_1(C_Sn(x), F_p)");
  }
}

} // namespace

ReplayResult replay(const Certificate &c, const Bounds &b)
{
  ReplayResult out;
  if (!c.holds() && c.verdict != Verdict::CyclicDefect)
    return out;
  Ctx x{c, b, {}};
  try {
    switch (c.criterion) {
    case Criterion::NonSchur:
    case Criterion::StrongNonSchur:
    case Criterion::WeakNonSchur:
      replay_non_schur(x);
      break;
    case Criterion::StrongCommutatorIndex:
      replay_sc(x);
      break;
    case Criterion::Prop36_i:
    case Criterion::Prop36_ii:
    case Criterion::Prop36_iii:
    case Criterion::Prop36_iv:
    case Criterion::Prop36_v:
    case Criterion::Prop36_vii:
    case Criterion::Prop36_viii:
      replay_prop36(x);
      break;
    case Criterion::Prop36_vi:
      throw Failure{"item (vi) has no implementation and cannot hold"};
    case Criterion::Cor32:
    case Criterion::TheoremA:
      replay_centraliser_map(x);
      break;
    case Criterion::Thm37_1:
    case Criterion::Thm37_2:
    case Criterion::Thm37_3:
    case Criterion::Thm37_4:
    case Criterion::Thm37_8:
      replay_thm37(x);
      break;
    case Criterion::SnWitness:
    case Criterion::AnWitness:
      replay_symmetric(x);
      break;
    }
    if (c.verdict == Verdict::CyclicDefect && c.criterion != Criterion::AnWitness)
      throw Failure{"only the alternating-group witness reports a cyclic defect"};
  } catch (const Failure &e) {
    out.ok = false;
    out.message = "not verified: " + e.what;
  } catch (const InvalidArgument &e) {
    out.ok = false;
    out.message = std::string("malformed payload: ") + e.what();
  } catch (const nlohmann::json::exception &e) {
    out.ok = false;
    out.message = std::string("malformed payload: ") + e.what();
  }
  out.facts = std::move(x.f.list);
  return out;
}

} // namespace hhb::criteria
