#include <doctest.h>

#include "brute.hpp"
#include "hhblocks/criteria/criteria.hpp"
#include "hhblocks/exalg/field.hpp"
#include "hhblocks/fphom/h1.hpp"
#include "hhblocks/permcore/catalog.hpp"

#include <algorithm>
#include <numeric>

using namespace hhb;
using namespace hhb::criteria;
using hhb::permcore::Permutation;
using hhb::permcore::PermGroup;

namespace {

PermGroup cat(const char *s) { return permcore::catalog_group(permcore::parse_inline_spec(s)); }
Permutation perm(const char *s, std::size_t n) { return Permutation::parse(s, n); }

struct Named {
  std::string name;
  PermGroup G;
};

std::vector<Named> catalog_upto(std::uint64_t max_order)
{
  std::vector<Named> out;
  for (const auto &e : permcore::standard_catalog()) {
    PermGroup G = permcore::catalog_group(e.spec);
    if (G.order() <= max_order)
      out.push_back({e.name, G});
  }
  return out;
}

std::vector<std::uint64_t> primes_of(std::uint64_t n)
{
  std::vector<std::uint64_t> ps;
  for (auto [p, e] : exalg::factorize(n))
    ps.push_back(p);
  return ps;
}

void check_replays(const Certificate &c)
{
  CAPTURE(criterion_name(c.criterion));
  auto r = replay(c);
  CHECK_MESSAGE(r.ok, r.message);
  // the JSON payload alone suffices
  auto again = replay(Certificate::from_json(nlohmann::json::parse(c.to_json().dump())));
  CHECK_MESSAGE(again.ok, again.message);
  CHECK(again.facts == r.facts);
}

bool brute_non_schur(const oracle::Set &G, const Permutation &x)
{
  return !oracle::derived(oracle::centralizer(G, x)).count(x);
}

// [G,G] G^p as an element set.
oracle::Set frattini_p(const oracle::Set &G, unsigned p)
{
  const oracle::Set D = oracle::derived(G);
  std::vector<Permutation> gens(D.begin(), D.end());
  for (const auto &g : G)
    gens.push_back(g.pow(p));
  return oracle::closure(gens, G.begin()->degree());
}

// Counts the even permutations of n points commuting with g by running
// through all of S_n.
std::uint64_t brute_an_centralizer_order(const Permutation &g)
{
  std::vector<permcore::Point> a(g.degree());
  std::iota(a.begin(), a.end(), 0);
  std::uint64_t n = 0;
  do {
    Permutation h(a);
    if (h.is_even() && h * g == g * h)
      ++n;
  } while (std::next_permutation(a.begin(), a.end()));
  return n;
}

} // namespace

TEST_CASE("is_non_schur examples")
{
  CHECK(is_non_schur(cat("sym:3"), perm("(1 2 3)", 3)));
  CHECK(is_non_schur(cat("alt:5"), perm("(1 2 3 4 5)", 5)));
  for (const char *s : {"sym:4", "alt:5", "C2xC2", "Q8", "GL(2,3)"}) {
    PermGroup G = cat(s);
    CHECK_FALSE(is_non_schur(G, G.identity()));
  }
  CHECK_THROWS_AS(is_non_schur(cat("alt:4"), perm("(1 2)", 4)), InvalidArgument);
  CHECK_THROWS_AS(is_non_schur(cat("alt:4"), perm("(1 2 3)", 5)), InvalidArgument);
}

TEST_CASE("is_non_schur agrees with brute force on every element")
{
  for (const auto &[name, G] : catalog_upto(48)) {
    CAPTURE(name);
    auto all = oracle::closure(G.generators(), G.degree());
    for (const auto &x : all)
      CHECK(is_non_schur(G, x) == brute_non_schur(all, x));
  }
}

TEST_CASE("search order sorts by centraliser order then images")
{
  for (const char *s : {"sym:5", "GL(2,3)", "D16"}) {
    auto order = search_order(cat(s));
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto a = order[i - 1].centralizer.order(), b = order[i].centralizer.order();
      CHECK((a < b || (a == b && order[i - 1].representative.images() < order[i].representative.images())));
    }
  }
}

TEST_CASE("find_non_schur examples")
{
  PermGroup S4 = cat("sym:4");
  auto c = find_non_schur(S4, 2, NonSchurMode::Strong);
  CHECK(c.verdict == Verdict::Holds);
  Permutation x = c.element("x");
  CHECK(permcore::is_p_element(x, 2));
  CHECK(is_non_schur(S4, x));
  CHECK(is_non_schur(S4, perm("(1 2 3 4)", 4)));
  CHECK(permcore::centralizer(S4, perm("(1 2 3 4)", 4)).order() == 4);
  check_replays(c);

  auto v = find_non_schur(cat("cyclic:5"), 3, NonSchurMode::Strong);
  CHECK(v.verdict == Verdict::HoldsVacuously);
  CHECK_FALSE(v.has_element("x"));
  check_replays(v);

  PermGroup A4 = cat("alt:4");
  auto a = find_non_schur(A4, 2, NonSchurMode::Strong);
  REQUIRE(a.verdict == Verdict::Holds);
  CHECK(a.element("x").cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK(is_non_schur(A4, perm("(1 2)(3 4)", 4)));

  auto w = find_non_schur(S4, 3, NonSchurMode::Weak);
  REQUIRE(w.verdict == Verdict::Holds);
  CHECK(w.element("x").order() % 3 == 0);
  check_replays(w);

  CHECK_THROWS_AS(find_non_schur(S4, 4, NonSchurMode::Strong), InvalidArgument);
}

TEST_CASE("find_non_schur verdicts agree with brute force")
{
  for (const auto &[name, G] : catalog_upto(60)) {
    auto all = oracle::closure(G.generators(), G.degree());
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      CAPTURE(name);
      CAPTURE(p);
      bool strong = false, weak = false;
      for (const auto &x : all) {
        const bool ns = brute_non_schur(all, x);
        strong = strong || (ns && !x.is_identity() && permcore::is_p_element(x, p));
        weak = weak || (ns && x.order() % p == 0);
      }
      auto s = find_non_schur(G, p, NonSchurMode::Strong);
      auto w = find_non_schur(G, p, NonSchurMode::Weak);
      if (G.order() % p != 0) {
        CHECK(s.verdict == Verdict::HoldsVacuously);
        CHECK(w.verdict == Verdict::HoldsVacuously);
      } else {
        CHECK((s.verdict == Verdict::Holds) == strong);
        CHECK((w.verdict == Verdict::Holds) == weak);
        CHECK((s.verdict == Verdict::Holds || s.verdict == Verdict::Fails));
      }
      check_replays(s);
      check_replays(w);
    }
  }
}

TEST_CASE("a non-Schur p-element makes H1 of its centraliser nonzero")
{
  for (const auto &[name, G] : catalog_upto(1000)) {
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      auto c = find_non_schur(G, p, NonSchurMode::Strong);
      if (c.verdict != Verdict::Holds)
        continue;
      Permutation x = c.element("x");
      PermGroup C = permcore::centralizer(G, x);
      CHECK(fphom::h1_fp(C, p).dimension() >= 1);
      // the image of x in C^ab is a nontrivial p-element
      CHECK_FALSE(permcore::derived_subgroup(C).contains(x));
    }
  }
}

TEST_CASE("the class of a non-Schur p-element can vanish in H1")
{
  // x of order 3 in PSL(2,8) has cyclic centraliser of order 9 and is a
  // cube there, so [x] = 0 in H_1(C_G(x), F_3) although x is non-Schur.
  PermGroup G = cat("PSL(2,8)");
  auto c = find_non_schur(G, 3, NonSchurMode::Strong);
  REQUIRE(c.verdict == Verdict::Holds);
  Permutation x = c.element("x");
  CHECK(x.order() == 3);
  auto all = oracle::closure(G.generators(), G.degree());
  auto C = oracle::centralizer(all, x);
  CHECK(C.size() == 9);
  CHECK(oracle::is_abelian(C));
  CHECK(std::any_of(C.begin(), C.end(), [&](const Permutation &y) { return y.pow(3) == x; }));
  CHECK(brute_non_schur(all, x));
  auto v = fphom::h1_class_vector(permcore::centralizer(G, x), 3, x);
  CHECK(std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }));
}

TEST_CASE("check_SC examples")
{
  auto c = check_SC(cat("sym:4"), 2);
  REQUIRE(c.verdict == Verdict::Holds);
  CHECK(c.value("dimension") >= 1);
  check_replays(c);
  // (1 2) has centraliser <(1 2), (3 4)> with H_1 of dimension 2
  PermGroup C = permcore::centralizer(cat("sym:4"), perm("(1 2)", 4));
  CHECK(C.order() == 4);
  CHECK(fphom::h1_fp(C, 2).dimension() == 2);

  auto c3 = check_SC(cat("cyclic:3"), 3);
  REQUIRE(c3.verdict == Verdict::Holds);
  CHECK(c3.value("dimension") == 1);

  // the identity is a p-element, so SC holds when p divides |G| at all
  auto e = check_SC(cat("cyclic:5"), 3);
  CHECK(e.verdict == Verdict::Fails);
}

TEST_CASE("check_SC agrees with brute force, and S(p) implies SC(p)")
{
  for (const auto &[name, G] : catalog_upto(60)) {
    auto all = oracle::closure(G.generators(), G.degree());
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      bool expect = false;
      for (const auto &x : all)
        if (permcore::is_p_element(x, p) && oracle::h1_rank(oracle::centralizer(all, x), p) > 0)
          expect = true;
      auto c = check_SC(G, p);
      CHECK((c.verdict == Verdict::Holds) == expect);
      check_replays(c);
    }
  }
  for (const auto &[name, G] : catalog_upto(1000))
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      if (find_non_schur(G, p, NonSchurMode::Strong).holds())
        CHECK(check_SC(G, p).holds());
    }
}

TEST_CASE("Sylow checklist profile examples")
{
  auto a4 = prop36_profile(cat("alt:4"), 2);
  REQUIRE(a4.size() == 8);
  CHECK(a4[2].criterion == Criterion::Prop36_iii);
  CHECK(a4[2].verdict == Verdict::Holds);
  CHECK(a4[5].criterion == Criterion::Prop36_vi);
  CHECK(a4[5].verdict == Verdict::NotImplemented);

  // Z(D_8) and [D_8, D_8] are the same subgroup of order 2, so (ii) fails
  PermGroup S4 = cat("sym:4");
  auto s4 = prop36_profile(S4, 2);
  const Certificate &ii = s4[1];
  REQUIRE(ii.criterion == Criterion::Prop36_ii);
  CHECK(ii.verdict == Verdict::Fails);
  PermGroup P = ii.subgroup("P");
  auto Pset = oracle::closure(P.generators(), 4);
  CHECK(Pset.size() == 8);
  oracle::Set Z;
  for (const auto &z : Pset)
    if (oracle::centralizer(Pset, z) == Pset)
      Z.insert(z);
  CHECK(Z.size() == 2);
  CHECK(Z == oracle::derived(Pset));
  CHECK(s4[2].verdict == Verdict::Fails);
  // D_8 = <r> . <s> is metacyclic
  CHECK(s4[3].verdict == Verdict::Holds);
  CHECK(s4[3].element("a").order() == 4);
  for (const auto &c : s4)
    check_replays(c);

  CHECK_THROWS_AS(prop36_profile(cat("cyclic:5"), 2), InvalidArgument);
}

TEST_CASE("every checklist item that holds comes with a non-Schur p-element")
{
  for (const auto &[name, G] : catalog_upto(1000)) {
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      auto prof = prop36_profile(G, p);
      REQUIRE(prof.size() == 8);
      const bool s = find_non_schur(G, p, NonSchurMode::Strong).verdict == Verdict::Holds;
      PermGroup P = prof[0].subgroup("P");
      CHECK((prof[2].verdict == Verdict::Holds) == P.is_abelian());
      for (const auto &c : prof) {
        CAPTURE(criterion_name(c.criterion));
        if (c.verdict == Verdict::Holds)
          CHECK(s);
        CHECK(c.verdict != Verdict::Inconclusive);
        check_replays(c);
      }
      // a p-group is its own normal p-subgroup
      if (G.order() == P.order())
        CHECK(prof[6].verdict == Verdict::Holds);
    }
  }
}

TEST_CASE("item (viii) on C7 wr C7")
{
  PermGroup G = cat("C7wrC7");
  REQUIRE(G.order() == 5764801);
  Bounds b;
  b.enumeration = 8'000'000;
  auto prof = prop36_profile(G, 7, b);
  const Certificate &viii = prof[7];
  REQUIRE(viii.criterion == Criterion::Prop36_viii);
  REQUIRE(viii.verdict == Verdict::Holds);
  // the generator of the first base coordinate
  CHECK(viii.element("x") == perm("(1 2 3 4 5 6 7)", 49));
  CHECK(viii.value("index_in_P") == 7);
  CHECK(replay(viii, b).ok);
  // under the default bounds the same item cannot be decided
  auto dflt = prop36_profile(G, 7);
  CHECK(dflt[7].verdict == Verdict::Inconclusive);
}

TEST_CASE("the (viii) index-p step")
{
  // x in P \ [P, P] whose index [C_G(x) : C_P(x)] has p-part exactly p,
  // packed into certificates by hand. The certificate replays exactly when
  // x is outside [Q, Q] for a Sylow Q of C_G(x) containing C_P(x), which
  // brute force decides independently.
  std::size_t good = 0, bad = 0;
  for (const auto &[name, G] : catalog_upto(200))
    for (auto p : primes_of(G.order())) {
      PermGroup P = permcore::sylow_subgroup(G, p);
      PermGroup D = permcore::derived_subgroup(P);
      auto all = oracle::closure(G.generators(), G.degree());
      for (const auto &cls : search_order(P)) {
        const Permutation &x = cls.representative;
        if (D.contains(x))
          continue;
        PermGroup CG = permcore::centralizer(G, x);
        const auto idx = CG.order() / cls.centralizer.order();
        if (exalg::p_part(idx, p) != p)
          continue;
        CAPTURE(name);
        CAPTURE(x.to_string());
        Certificate c;
        c.criterion = Criterion::Prop36_viii;
        c.verdict = Verdict::Holds;
        c.inputs["G"] = group_json(G);
        c.inputs["p"] = p;
        c.set_subgroup("P", P);
        c.set_element("x", x);
        c.set_value("index_in_centralizer", static_cast<std::int64_t>(idx));
        c.set_value("index_in_P", static_cast<std::int64_t>(P.order() / cls.centralizer.order()));
        PermGroup Q = permcore::sylow_subgroup_containing(CG, cls.centralizer, p);
        const bool outside = !oracle::derived(oracle::closure(Q.generators(), G.degree())).count(x);
        CHECK(replay(c).ok == outside);
        ++(outside ? good : bad);
      }
    }
  CHECK(good > 0);
  CHECK(bad > 0);
  MESSAGE("index-p instances: " << good << " with x outside [Q, Q], " << bad << " inside");
}

TEST_CASE("a (viii) instance where x lies in [Q, Q]")
{
  // P is the D_8 with centre (1 3)(2 4); x = (1 2)(3 4) is outside [P, P]
  // with [C_G(x) : C_P(x)] = 2, but C_G(x) is the D_8 with centre <x>.
  PermGroup S4 = cat("sym:4");
  PermGroup P = PermGroup::from_generators({perm("(1 2 3 4)", 4), perm("(1 3)", 4)});
  Permutation x = perm("(1 2)(3 4)", 4);
  auto all = oracle::closure(S4.generators(), 4);
  auto Pset = oracle::closure(P.generators(), 4);
  CHECK(Pset.size() == 8);
  CHECK_FALSE(oracle::derived(Pset).count(x));
  auto C = oracle::centralizer(all, x);
  CHECK(C.size() == 8);
  CHECK(oracle::intersect(C, Pset).size() == 4);
  CHECK(oracle::derived(C).count(x));
  // the profile does not turn this x into a claim
  for (const auto &c : prop36_profile(S4, 2))
    if (c.criterion == Criterion::Prop36_viii && c.verdict == Verdict::Holds)
      check_replays(c);
}

TEST_CASE("cor32_check examples")
{
  PermGroup S3 = cat("sym:3");
  PermGroup P(PermGroup::from_generators({perm("(1 2 3)", 3)}));
  auto c = cor32_check(S3, P, 3);
  REQUIRE(c.verdict == Verdict::Holds);
  CHECK(c.element("x").order() == 3);
  CHECK(c.value("rank") == 1);
  check_replays(c);

  auto only_id = cor32_check(S3, P, 3, std::vector<Permutation>{S3.identity()});
  CHECK(only_id.verdict == Verdict::Fails);
  CHECK(fphom::h1_fp(S3, 3).dimension() == 0);

  PermGroup A4 = cat("alt:4");
  PermGroup V4 = PermGroup::from_generators({perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
  auto v = cor32_check(A4, V4, 2);
  REQUIRE(v.verdict == Verdict::Holds);
  CHECK(v.element("x").cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK(cor32_check(A4, V4, 2, std::vector<Permutation>{perm("(1 2)(3 4)", 4)}).verdict == Verdict::Holds);
  CHECK(permcore::centralizer(A4, perm("(1 2)(3 4)", 4)).same_elements(V4));

  CHECK_THROWS_AS(cor32_check(A4, cat("sym:4"), 2), InvalidArgument);
  CHECK_THROWS_AS(cor32_check(A4, A4, 2), InvalidArgument);
  CHECK_THROWS_AS(cor32_check(A4, V4, 2, std::vector<Permutation>{perm("(1 2 3)", 4)}), InvalidArgument);
}

TEST_CASE("cor32_check agrees with brute force")
{
  for (const auto &[name, G] : catalog_upto(60)) {
    auto all = oracle::closure(G.generators(), G.degree());
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      PermGroup P = permcore::sylow_subgroup(G, p);
      auto Pset = oracle::closure(P.generators(), G.degree());
      bool expect = false;
      for (const auto &x : Pset) {
        auto C = oracle::centralizer(all, x);
        auto K = frattini_p(C, static_cast<unsigned>(p));
        for (const auto &y : oracle::centralizer(Pset, x))
          expect = expect || !K.count(y);
      }
      CHECK((cor32_check(G, P, p).verdict == Verdict::Holds) == expect);
    }
  }
}

TEST_CASE("theoremA_witness examples")
{
  PermGroup S3 = cat("sym:3");
  PermGroup A3 = PermGroup::from_generators({perm("(1 2 3)", 3)});
  auto t = theoremA_witness(S3, A3, 3);
  REQUIRE(t.verdict == Verdict::Holds);
  CHECK(t.element("x").order() == 3);
  CHECK(t.subgroup("H").is_trivial());
  check_replays(t);

  PermGroup A4 = cat("alt:4");
  PermGroup V4 = PermGroup::from_generators({perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
  auto v = theoremA_witness(A4, V4, 2);
  REQUIRE(v.verdict == Verdict::Holds);
  CHECK(v.element("x").cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK(v.subgroup("H").order() == 2);
  CHECK(v.subgroup("H").is_subgroup_of(V4));
  check_replays(v);

  PermGroup C3 = cat("cyclic:3");
  auto c = theoremA_witness(C3, C3, 3);
  REQUIRE(c.verdict == Verdict::Holds);
  CHECK(c.subgroup("H").is_trivial());
}

TEST_CASE("theoremA_witness and cor32_check reach the same verdict")
{
  for (const auto &[name, G] : catalog_upto(400)) {
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      std::vector<PermGroup> Ps{permcore::sylow_subgroup(G, p), permcore::p_core(G, p), PermGroup::trivial(G.degree())};
      for (const auto &cls : search_order(G)) {
        Permutation x = permcore::p_part(cls.representative, p);
        if (!x.is_identity()) {
          Ps.push_back(PermGroup::from_generators({x}));
          break;
        }
      }
      for (const auto &P : Ps) {
        auto a = cor32_check(G, P, p), t = theoremA_witness(G, P, p);
        CHECK(a.verdict == t.verdict);
        check_replays(a);
        check_replays(t);
      }
    }
  }
}

TEST_CASE("block criteria examples on S_3 at p = 3")
{
  PermGroup S3 = cat("sym:3");
  PermGroup P = permcore::sylow_subgroup(S3, 3);
  CHECK(thm37_map(S3, P, 3).verdict == Verdict::Fails);
  auto t2 = thm37_transfer(S3, P, 3);
  CHECK(t2.verdict == Verdict::Holds);
  check_replays(t2);
  auto t3 = thm37_sylow_non_schur(S3, P, 3);
  CHECK(t3.verdict == Verdict::Holds);
  check_replays(t3);
  auto t4 = thm37_p_regular(S3, 3);
  REQUIRE(t4.verdict == Verdict::Holds);
  CHECK(t4.witness["pairs"].size() == 1);
  check_replays(t4);
  auto t8 = thm37_normal(S3, 3);
  CHECK(t8.verdict == Verdict::Fails);
  CHECK(t8.subgroup("Q").order() == 3);

  CHECK(thm37_sylow_non_schur(S3, PermGroup::trivial(3), 3).verdict == Verdict::Fails);
  CHECK(thm37_p_regular(cat("cyclic:5"), 3).verdict == Verdict::HoldsVacuously);
  auto c4 = thm37_map(cat("cyclic:4"), cat("cyclic:4"), 2);
  CHECK(c4.verdict == Verdict::Holds);
  check_replays(c4);
}

TEST_CASE("block criteria relations on the catalog")
{
  for (const auto &[name, G] : catalog_upto(400)) {
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      PermGroup P = permcore::sylow_subgroup(G, p);
      auto c1 = thm37_map(G, P, p), c2 = thm37_transfer(G, P, p), c3 = thm37_sylow_non_schur(G, P, p);
      auto c4 = thm37_p_regular(G, p), c8 = thm37_normal(G, p);
      for (const auto *c : {&c1, &c2, &c3, &c4, &c8})
        check_replays(*c);
      // O_p(G) lies in P, so a nonzero map from it factors through P
      if (c8.holds())
        CHECK(c1.holds());
      CHECK(c3.holds() == find_non_schur(G, p, NonSchurMode::Strong).holds());
    }
  }
}

TEST_CASE("non-Schur property passes from N and G/N to G")
{
  std::size_t tested = 0;
  for (const auto &[name, G] : catalog_upto(400)) {
    for (auto p : primes_of(G.order())) {
      for (const PermGroup &N : {permcore::p_core(G, p), permcore::derived_subgroup(G)}) {
        if (N.is_trivial() || N.order() == G.order())
          continue;
        CAPTURE(name);
        CAPTURE(p);
        PermGroup Q = permcore::quotient_group(G, N);
        CHECK(Q.order() * N.order() == G.order());
        if (find_non_schur(N, p, NonSchurMode::Strong).holds() &&
            find_non_schur(Q, p, NonSchurMode::Strong).holds()) {
          ++tested;
          CHECK(find_non_schur(G, p, NonSchurMode::Strong).holds());
        }
      }
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("sn_witness examples")
{
  auto a = sn_witness(5, 5, Permutation(5));
  REQUIRE(a.verdict == Verdict::Holds);
  CHECK(a.element("x") == perm("(1 2 3 4 5)", 5));
  CHECK(a.value("i") == 1);
  check_replays(a);

  auto b = sn_witness(6, 3, Permutation(6));
  REQUIRE(b.verdict == Verdict::Holds);
  CHECK(b.element("x") == perm("(1 2 3)", 6));
  CHECK(permcore::centralizer(cat("sym:6"), perm("(1 2 3)", 6)).order() == 18);
  check_replays(b);

  auto c = sn_witness(6, 3, perm("(1 2)", 6));
  REQUIRE(c.verdict == Verdict::Holds);
  Permutation x = c.element("x");
  CHECK(x * perm("(1 2)", 6) == perm("(1 2)", 6) * x);
  CHECK(x == perm("(3 4 5)", 6));
  check_replays(c);

  // three 2-cycles at p = 3 are cycled point by point
  auto d = sn_witness(6, 3, perm("(1 2)(3 4)(5 6)", 6));
  CHECK(d.element("x") == perm("(1 3 5)(2 4 6)", 6));
  CHECK(d.value("i") == 2);
  check_replays(d);
  auto e = sn_witness(5, 2, perm("(1 2 3)", 5));
  CHECK(e.element("x") == perm("(4 5)", 5));

  CHECK_THROWS_AS(sn_witness(6, 3, perm("(1 2 3)", 6)), InvalidArgument);
  CHECK_THROWS_AS(sn_witness(4, 5, Permutation(4)), InvalidArgument);
  CHECK_THROWS_AS(sn_witness(5, 3, perm("(1 2)", 4)), InvalidArgument);
}

TEST_CASE("an_witness examples")
{
  auto a = an_witness(5, 5, Permutation(5));
  REQUIRE(a.verdict == Verdict::Holds);
  CHECK(a.element("x") == perm("(1 2 3 4 5)", 5));
  CHECK(a.element("x").is_even());
  check_replays(a);

  auto b = an_witness(8, 2, Permutation(8));
  REQUIRE(b.verdict == Verdict::Holds);
  CHECK(b.value("case") == 1);
  Permutation x = b.element("x"), y = b.element("y");
  CHECK(x == perm("(1 2)(3 4)", 8));
  CHECK(y == perm("(1 3)(2 4)", 8));
  CHECK(x * y == y * x);
  check_replays(b);
  // brute force over S_8: |C_(A_8)(x)| = 96 and y is outside its
  // Frattini subgroup
  {
    std::vector<permcore::Point> pts(8);
    std::iota(pts.begin(), pts.end(), 0);
    oracle::Set C;
    do {
      Permutation h(pts);
      if (h.is_even() && h * x == x * h)
        C.insert(h);
    } while (std::next_permutation(pts.begin(), pts.end()));
    CHECK(C.size() == 96);
    CHECK_FALSE(frattini_p(C, 2).count(y));
  }

  auto c3 = an_witness(8, 2, perm("(1 2 3)(4 5 6)", 8));
  REQUIRE(c3.verdict == Verdict::CyclicDefect);
  CHECK(c3.value("case") == 3);
  CHECK(exalg::p_part(brute_an_centralizer_order(perm("(1 2 3)(4 5 6)", 8)), 2) == 2);
  check_replays(c3);
  auto c9 = an_witness(9, 2, perm("(1 2 3)(4 5 6)", 9));
  CHECK(c9.verdict == Verdict::CyclicDefect);
  check_replays(c9);

  // three 3-cycles: C_(A_9)(g) has odd order 81, so there is no 2-block to
  // speak of
  CHECK(brute_an_centralizer_order(perm("(1 2 3)(4 5 6)(7 8 9)", 9)) == 81);
  CHECK_THROWS_AS(an_witness(9, 2, perm("(1 2 3)(4 5 6)(7 8 9)", 9)), InvalidArgument);

  // case 2 needs three distinct odd lengths occurring twice: 1, 3 and 5
  Permutation g = perm("(1 2 3)(4 5 6)(7 8 9 10 11)(12 13 14 15 16)", 18);
  auto c2 = an_witness(18, 2, g);
  REQUIRE(c2.verdict == Verdict::Holds);
  CHECK(c2.value("case") == 2);
  CHECK(c2.element("x") == perm("(1 4)(2 5)(3 6)(17 18)", 18));
  CHECK(c2.element("y") == perm("(7 12)(8 13)(9 14)(10 15)(11 16)(17 18)", 18));
  check_replays(c2);

  CHECK_THROWS_AS(an_witness(4, 2, perm("(1 2)(3 4)", 4)), InvalidArgument);
  CHECK_THROWS_AS(an_witness(4, 3, perm("(1 2)", 4)), InvalidArgument);
}

TEST_CASE("symmetric and alternating witnesses on all small cycle types")
{
  for (std::size_t n = 2; n <= 7; ++n) {
    PermGroup S = permcore::catalog_group({{"sym", n}});
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
      for (const auto &cls : S.classes()) {
        const Permutation &g = cls.representative;
        if (g.order() % p != 0 && cls.centralizer.order() % p == 0) {
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(g.to_string());
          auto c = sn_witness(n, p, g);
          CHECK(c.verdict == Verdict::Holds);
          check_replays(c);
        }
        if (g.is_even() && g.order() % p != 0 && brute_an_centralizer_order(g) % p == 0) {
          auto c = an_witness(n, p, g);
          CHECK((c.verdict == Verdict::Holds || c.verdict == Verdict::CyclicDefect));
          check_replays(c);
        }
      }
  }
}

TEST_CASE("tampered certificates do not replay")
{
  auto c = find_non_schur(cat("sym:4"), 2, NonSchurMode::Strong);
  Certificate bad = c;
  bad.set_element("x", Permutation(4));
  CHECK_FALSE(replay(bad).ok);
  bad.set_element("x", perm("(1 2 3)", 4));
  CHECK_FALSE(replay(bad).ok);

  auto t = theoremA_witness(cat("alt:4"), PermGroup::from_generators({perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)}), 2);
  Certificate badH = t;
  badH.set_subgroup("H", PermGroup::trivial(4));
  CHECK_FALSE(replay(badH).ok);

  auto s = sn_witness(6, 3, Permutation(6));
  Certificate badx = s;
  badx.set_element("x", perm("(1 2)", 6));
  CHECK_FALSE(replay(badx).ok);

  nlohmann::json j = c.to_json();
  j["witness"]["elements"].erase("x");
  CHECK_FALSE(replay(Certificate::from_json(j)).ok);

  // claims without content replay trivially
  Certificate f;
  f.verdict = Verdict::Fails;
  CHECK(replay(f).ok);
}

TEST_CASE("certificate JSON round trip")
{
  auto c = cor32_check(cat("alt:4"), permcore::sylow_subgroup(cat("alt:4"), 2), 2);
  auto j = c.to_json();
  CHECK(j.contains("criterion"));
  CHECK(j["criterion"] == "COR32");
  CHECK(j["verdict"] == "holds");
  CHECK(j["witness"].contains("elements"));
  CHECK(j["witness"].contains("subgroups"));
  CHECK(j["witness"].contains("matrices"));
  auto back = Certificate::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.to_json().dump() == j.dump());
  CHECK_THROWS_AS(Certificate::from_json(nlohmann::json{{"criterion", "NOPE"}}), InvalidArgument);
  for (auto crit : {Criterion::NonSchur, Criterion::Prop36_viii, Criterion::AnWitness, Criterion::Thm37_4})
    CHECK(parse_criterion(criterion_name(crit)) == crit);
  for (auto v : {Verdict::Holds, Verdict::HoldsVacuously, Verdict::CyclicDefect, Verdict::NotImplemented})
    CHECK(parse_verdict(verdict_name(v)) == v);
}

TEST_CASE("certificates are deterministic")
{
  PermGroup G = cat("GL(2,3)");
  for (std::uint64_t p : {2u, 3u}) {
    CHECK(find_non_schur(G, p, NonSchurMode::Strong).to_json().dump() ==
          find_non_schur(G, p, NonSchurMode::Strong).to_json().dump());
    auto a = prop36_profile(G, p), b = prop36_profile(G, p);
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(a[i].to_json() == b[i].to_json());
  }
}
