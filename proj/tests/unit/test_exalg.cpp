#include <doctest.h>

#include "brute.hpp"
#include "hhblocks/exalg/blocks.hpp"
#include "hhblocks/exalg/derivations.hpp"
#include "hhblocks/exalg/maps.hpp"
#include "hhblocks/permcore/catalog.hpp"
#include "linear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace hhb;
using namespace hhb::exalg;
using hhb::permcore::Permutation;
using hhb::permcore::PermGroup;

namespace {
PermGroup cat(const char *s) { return permcore::catalog_group(permcore::parse_inline_spec(s)); }
Permutation perm(const char *s, std::size_t n) { return Permutation::parse(s, n); }

FqField splitting_field(const PermGroup &G, unsigned p)
{
  return FqField::make(p, splitting_degree(G, p));
}

// Sum over classes of the p-rank of the centraliser abelianisation,
// computed by closure on explicit element sets.
unsigned centraliser_sum(const PermGroup &G, unsigned p)
{
  auto all = oracle::closure(G.generators(), G.degree());
  unsigned total = 0;
  for (const auto &cls : oracle::classes(all))
    total += oracle::h1_rank(oracle::centralizer(all, *cls.begin()), p);
  return total;
}

// The same algebra on the basis b'_i = b_{pi(i)}.
Algebra permuted(const Algebra &A, const std::vector<std::size_t> &pi)
{
  const std::size_t n = A.dim();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[pi[i]] = i;
  std::vector<std::string> labels(n);
  std::vector<SparseVec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = A.labels()[pi[i]];
    for (std::size_t j = 0; j < n; ++j)
      for (const auto &t : A.product(pi[i], pi[j]))
        prod[i * n + j].push_back({static_cast<std::uint32_t>(inv[t.index]), t.value});
  }
  Vec unit(n);
  for (std::size_t i = 0; i < n; ++i)
    unit[i] = A.unit()[pi[i]];
  return Algebra::from_structure(A.field(), std::move(labels), std::move(prod), std::move(unit));
}

// The omega-twist on C_3 x C_3: alpha((a,b),(a',b')) = w^(b a').
Cocycle omega_twist(const PermGroup &G, const FqField &F4, std::vector<Permutation> gens,
                    std::size_t a, std::size_t bb)
{
  std::vector<std::vector<std::uint64_t>> B(gens.size(), std::vector<std::uint64_t>(gens.size(), 0));
  B[bb][a] = 1;
  return bilinear_cocycle(G, F4, gens, B, F4.primitive_element());
}

void check_space(const Algebra &A, const DerSpace &S)
{
  Bimodule reg = Bimodule::regular(A);
  for (const auto &D : S.derivations)
    CHECK(is_derivation(A, reg, D));
  EchelonBasis span(A.field(), A.dim() * A.dim());
  for (const auto &D : S.derivations)
    span.insert(flatten(D));
  for (const auto &D : S.inner)
    CHECK(span.contains(flatten(D)));
}
} // namespace

TEST_CASE("splitting degree examples")
{
  CHECK(splitting_degree(cat("sym:3"), 3) == 1);
  CHECK(splitting_degree(cat("cyclic:7"), 2) == 3);
  CHECK(splitting_degree(cat("cyclic:2"), 2) == 1);
  CHECK(splitting_degree(cat("cyclic:5"), 11) == 1);
}

TEST_CASE("group algebra examples")
{
  auto F2 = FqField::make(2);
  auto A = group_algebra(cat("cyclic:2"), F2);
  CHECK(A.dim() == 2);
  REQUIRE(A.product(1, 1).size() == 1);
  CHECK(A.product(1, 1)[0].index == 0);
  CHECK(A.product(1, 1)[0].value == 1);
  CHECK(A.unit() == Vec{1, 0});

  auto S3 = group_algebra(cat("sym:3"), FqField::make(3));
  CHECK(S3.dim() == 6);
  CHECK_FALSE(S3.associativity_failure().has_value());
  CHECK(S3.unit_is_identity());

  auto T = group_algebra(PermGroup::trivial(3), F2);
  CHECK(T.dim() == 1);

  CHECK_THROWS_AS(group_algebra(cat("A5xC7"), F2), BoundExceeded);
}

TEST_CASE("center dimension of a group algebra is the class number")
{
  for (const char *g : {"sym:3", "sym:4", "dihedral:4", "quaternion:8", "alt:4", "C3xC3"}) {
    CAPTURE(g);
    auto G = cat(g);
    auto A = group_algebra(G, FqField::make(2));
    CHECK(center(A).rows() == G.classes().size());
    CHECK(center(A).rows() == oracle::naive_center_dim(A));
  }
}

TEST_CASE("from_structure rejects a non-associative table")
{
  auto F = FqField::make(3);
  // (x x) x = y x = 1 but x (x x) = x y = x
  std::vector<SparseVec> prod(9);
  for (std::uint32_t i = 0; i < 3; ++i) {
    prod[i] = {{i, 1}};
    prod[i * 3] = {{i, 1}};
  }
  prod[1 * 3 + 1] = {{2, 1}};
  prod[1 * 3 + 2] = {{1, 1}};
  prod[2 * 3 + 1] = {{0, 1}};
  prod[2 * 3 + 2] = {{1, 1}};
  CHECK_THROWS_AS(Algebra::from_structure(F, {"1", "x", "y"}, prod, Vec{1, 0, 0}), InvalidArgument);
  // unit is not an identity
  CHECK_THROWS_AS(Algebra::from_structure(F, {"1", "x", "y"}, prod, Vec{0, 1, 0}), InvalidArgument);
}

TEST_CASE("dump and load round trip")
{
  auto F9 = FqField::make(3, 2);
  auto A = group_algebra(cat("sym:3"), F9);
  auto j = A.dump();
  auto B = Algebra::load(j);
  CHECK(B.dim() == A.dim());
  CHECK(B.labels() == A.labels());
  CHECK(B.unit() == A.unit());
  CHECK(B.field() == A.field());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t k = 0; k < A.dim(); ++k)
      for (std::size_t t = 0; t < A.dim(); ++t)
        CHECK(oracle::sc(A, i, k, t) == oracle::sc(B, i, k, t));
  CHECK(B.dump() == j);
  CHECK(j.at("field").at("modulus") == nlohmann::json{1, 0, 1});

  nlohmann::json bad = j;
  bad["constants"][0][0] = 999;
  CHECK_THROWS_AS(Algebra::load(bad), InvalidArgument);
}

TEST_CASE("cocycle validation")
{
  auto G = cat("cyclic:3");
  auto F5 = FqField::make(5);
  const std::size_t n = 3;

  // a constant table is the coboundary of a constant and normalises to 1
  auto flat = Cocycle::from_table(G, F5, std::vector<Elt>(n * n, 2));
  CHECK(flat.is_trivial());

  std::vector<Elt> t(n * n, 1);
  t[1 * n + 2] = 2;
  CHECK_THROWS_AS(Cocycle::from_table(G, F5, t), InvalidArgument);
  t[1 * n + 2] = 0;
  CHECK_THROWS_AS(Cocycle::from_table(G, F5, t), InvalidArgument);

  std::vector<Elt> f{1, 2, 3};
  auto cb = Cocycle::coboundary(G, F5, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      auto gh = cb.basis().index_of(cb.basis().elements[i] * cb.basis().elements[k]);
      CHECK(cb(i, k) == F5.div(F5.mul(f[i], f[k]), f[gh]));
    }

  auto again = Cocycle::from_json(cb.to_json());
  for (std::size_t i = 0; i < n * n; ++i)
    CHECK(again(i / n, i % n) == cb(i / n, i % n));

  nlohmann::json j = {{"group", {{"cyclic", 3}}}, {"field", {{"p", 5}}}, {"entries", nlohmann::json::array()}};
  CHECK(Cocycle::from_json(j).is_trivial());
  j["entries"].push_back({1, 2, 2});
  CHECK_THROWS_AS(Cocycle::from_json(j), InvalidArgument);
}

TEST_CASE("twisted group algebras")
{
  auto F4 = FqField::make(2, 2);
  auto a = perm("(1 2 3)", 6), bgen = perm("(4 5 6)", 6);
  auto G = PermGroup::from_generators({a, bgen});

  SUBCASE("trivial cocycle gives the group algebra")
  {
    auto T = twisted_group_algebra(Cocycle(G, F4));
    auto A = group_algebra(G, F4);
    CHECK(T.dump() == A.dump());
  }

  SUBCASE("the omega twist on C3 x C3 is central simple")
  {
    auto alpha = omega_twist(G, F4, {a, bgen}, 0, 1);
    CHECK_FALSE(alpha.is_trivial());
    auto w = F4.primitive_element();
    CHECK(F4.add(F4.add(F4.mul(w, w), w), 1) == 0);
    CHECK(alpha.value(bgen, a) == w);
    CHECK(alpha.value(a, bgen) == 1);
    auto T = twisted_group_algebra(alpha);
    CHECK(T.dim() == 9);
    CHECK_FALSE(T.associativity_failure().has_value());
    CHECK(oracle::naive_center_dim(T) == 1);
    CHECK(center(T).rows() == 1);
    CHECK(hh1_dim(T) == 0);
  }

  SUBCASE("a coboundary twist rescales to the group algebra")
  {
    auto F5 = FqField::make(5);
    auto S3 = cat("sym:3");
    std::vector<Elt> f{1, 2, 3, 4, 2, 3};
    auto alpha = Cocycle::coboundary(S3, F5, f);
    auto T = twisted_group_algebra(alpha);
    auto A = group_algebra(S3, F5);
    // u_g = f(g)^-1 g^ multiplies like g
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 6; ++k) {
        Vec ui(6, 0), uk(6, 0);
        ui[i] = F5.inv(f[i]);
        uk[k] = F5.inv(f[k]);
        Vec prod = T.mul(ui, uk);
        REQUIRE(A.product(i, k).size() == 1);
        std::size_t gh = A.product(i, k)[0].index;
        Vec expect(6, 0);
        expect[gh] = F5.inv(f[gh]);
        CHECK(prod == expect);
      }
    CHECK(hh1_dim(T) == hh1_dim(A));
  }
}

TEST_CASE("alpha-regular elements")
{
  auto F4 = FqField::make(2, 2);
  auto c = perm("(1 2)", 8), a = perm("(3 4 5)", 8), bgen = perm("(6 7 8)", 8);
  auto G = PermGroup::from_generators({c, a, bgen});
  auto alpha = omega_twist(G, F4, {c, a, bgen}, 1, 2);
  CHECK(is_alpha_regular(alpha, c));
  CHECK_FALSE(is_alpha_regular(alpha, a));
  CHECK(is_alpha_regular(Cocycle(G, F4), a));
  CHECK_THROWS_AS(is_alpha_regular(alpha, perm("(1 3)", 8)), InvalidArgument);
}

TEST_CASE("derivation space examples")
{
  auto F2 = FqField::make(2);
  auto C2 = group_algebra(cat("cyclic:2"), F2);
  auto S = derivation_space(C2);
  CHECK(S.dim_der() == 2);
  CHECK(S.dim_inn() == 0);
  CHECK(S.hh1() == 2);
  check_space(C2, S);

  for (unsigned p : {2u, 3u, 5u}) {
    CAPTURE(p);
    auto Cp = cat(("cyclic:" + std::to_string(p)).c_str());
    CHECK(hh1_dim(group_algebra(Cp, FqField::make(p))) == p);
  }

  CHECK(hh1_dim(group_algebra(cat("sym:3"), FqField::make(3))) == 1);
  CHECK(hh1_dim(group_algebra(cat("sym:4"), FqField::make(2))) == 6);
  CHECK(centraliser_sum(cat("sym:4"), 2) == 6);

  // semisimple
  CHECK(hh1_dim(group_algebra(cat("sym:3"), FqField::make(5))) == 0);
  CHECK(hh1_dim(group_algebra(cat("C3xC3"), FqField::make(2))) == 0);

  Bounds tight;
  tight.linear = 3;
  CHECK_THROWS_AS(derivation_space(C2, Bimodule::regular(C2), tight), BoundExceeded);
}

TEST_CASE("derivation spaces agree with the dense Leibniz system")
{
  struct Row {
    const char *g;
    unsigned p, m;
  };
  for (auto r : {Row{"cyclic:2", 2, 1}, Row{"cyclic:4", 2, 1}, Row{"C2xC2", 2, 1}, Row{"sym:3", 2, 1},
                 Row{"sym:3", 3, 1}, Row{"sym:3", 2, 2}, Row{"dihedral:4", 2, 1},
                 Row{"quaternion:8", 2, 1}, Row{"C2xC4", 2, 1}, Row{"C3xC3", 3, 1},
                 Row{"alt:4", 2, 1}, Row{"alt:4", 3, 1}, Row{"dihedral:6", 2, 1},
                 Row{"dihedral:6", 3, 1}, Row{"C2xC6", 3, 1}, Row{"cyclic:9", 3, 1}}) {
    CAPTURE(r.g);
    CAPTURE(r.p);
    auto A = group_algebra(cat(r.g), FqField::make(r.p, r.m));
    auto S = derivation_space(A);
    CHECK(S.dim_der() == oracle::naive_der_dim(A));
    CHECK(S.dim_inn() == oracle::naive_inn_dim(A));
    CHECK(S.dim_der() == oracle::naive_der_dim(A, Bimodule::regular(A)));
    check_space(A, S);
  }

  SUBCASE("twisted and block algebras")
  {
    auto F4 = FqField::make(2, 2);
    auto a = perm("(1 2 3)", 6), bgen = perm("(4 5 6)", 6);
    auto G = PermGroup::from_generators({a, bgen});
    auto T = twisted_group_algebra(omega_twist(G, F4, {a, bgen}, 0, 1));
    CHECK(derivation_space(T).dim_der() == oracle::naive_der_dim(T));

    auto kS3 = group_algebra(cat("sym:3"), F4);
    for (const auto &e : central_idempotents(kS3)) {
      auto B = block_algebra(kS3, e);
      auto S = derivation_space(B);
      CHECK(S.dim_der() == oracle::naive_der_dim(B));
      CHECK(S.dim_inn() == oracle::naive_inn_dim(B));
      check_space(B, S);
    }
  }

  SUBCASE("a non-regular bimodule")
  {
    auto F2 = FqField::make(2);
    auto S3 = cat("sym:3");
    auto P = PermGroup::from_generators({perm("(1 2)", 3)});
    auto kG = group_algebra(S3, F2), kP = group_algebra(P, F2);
    auto iota = inclusion_map(kP, kG);
    auto M = Bimodule::restrict(Bimodule::regular(kG), kP, iota, kP, iota);
    CHECK_FALSE(M.check().has_value());
    auto S = derivation_space(kP, M);
    CHECK(S.dim_der() == oracle::naive_der_dim(kP, M));
    for (const auto &D : S.derivations)
      CHECK(is_derivation(kP, M, D));
  }
}

TEST_CASE("HH1 of a group algebra is the sum over class centralisers")
{
  for (const auto &entry : permcore::standard_catalog()) {
    auto G = permcore::catalog_group(entry.spec);
    if (G.order() > 24)
      continue;
    for (auto [p, e] : factorize(G.order())) {
      CAPTURE(entry.name);
      CAPTURE(p);
      auto A = group_algebra(G, FqField::make(static_cast<std::uint32_t>(p)));
      CHECK(hh1_dim(A) == centraliser_sum(G, static_cast<unsigned>(p)));
    }
  }
}

TEST_CASE("hh1 is invariant under basis permutation")
{
  std::mt19937_64 rng(2026);
  auto F4 = FqField::make(2, 2);
  auto kS3 = group_algebra(cat("sym:3"), F4);
  std::vector<Algebra> samples{group_algebra(cat("sym:3"), FqField::make(3)),
                               group_algebra(cat("dihedral:4"), FqField::make(2)),
                               group_algebra(cat("alt:4"), FqField::make(2)),
                               block_algebra(kS3, central_idempotents(kS3)[1])};
  for (const auto &A : samples) {
    const auto h = hh1_dim(A);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> pi(A.dim());
      std::iota(pi.begin(), pi.end(), std::size_t{0});
      std::shuffle(pi.begin(), pi.end(), rng);
      CHECK(hh1_dim(permuted(A, pi)) == h);
    }
  }
}

TEST_CASE("central idempotent examples")
{
  auto kS3_3 = group_algebra(cat("sym:3"), FqField::make(3));
  CHECK(central_idempotents(kS3_3).size() == 1);

  for (unsigned m : {1u, 2u}) {
    CAPTURE(m);
    auto kS3 = group_algebra(cat("sym:3"), FqField::make(2, m));
    auto es = central_idempotents(kS3);
    REQUIRE(es.size() == 2);
    auto B0 = block_algebra(kS3, es[0]), B1 = block_algebra(kS3, es[1]);
    CHECK(B0.dim() == 2);
    CHECK(B1.dim() == 4);
    CHECK(center(B1).rows() == 1);
    CHECK(hh1_dim(B1) == 0);
    CHECK(hh1_dim(B0) == 2);
  }

  auto F5 = FqField::make(5);
  auto kC2 = group_algebra(cat("cyclic:2"), F5);
  auto es = central_idempotents(kC2);
  REQUIRE(es.size() == 2);
  CHECK(es[0] == Vec{3, 3}); // (1 + g) / 2
  CHECK(es[1] == Vec{3, 2}); // (1 - g) / 2

  CHECK(block_algebra(kC2, kC2.unit()).same_as(kC2));
  CHECK_THROWS_AS(block_algebra(kC2, Vec{1, 1}), InvalidArgument);
  auto kS3 = group_algebra(cat("sym:3"), FqField::make(2));
  Vec noncentral = kS3.basis_vector(1);
  CHECK_THROWS_AS(block_algebra(kS3, noncentral), InvalidArgument);
}

TEST_CASE("block idempotents are complete, orthogonal and primitive")
{
  struct Row {
    const char *g;
    unsigned p;
  };
  for (auto r : {Row{"sym:3", 2}, Row{"sym:3", 3}, Row{"sym:4", 2}, Row{"sym:4", 3}, Row{"alt:4", 2},
                 Row{"alt:4", 3}, Row{"dihedral:5", 2}, Row{"cyclic:6", 2}, Row{"cyclic:6", 3},
                 Row{"C3xC3", 2}, Row{"quaternion:8", 2}, Row{"dihedral:6", 2}, Row{"gl:2,3", 2}}) {
    CAPTURE(r.g);
    CAPTURE(r.p);
    auto G = cat(r.g);
    auto F = splitting_field(G, r.p);
    auto A = group_algebra(G, F);
    auto es = central_idempotents(A);
    Vec sum = A.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
      CHECK(A.is_idempotent(es[i]));
      CHECK(A.is_central(es[i]));
      sum = A.add(sum, es[i]);
      for (std::size_t k = 0; k < es.size(); ++k)
        if (k != i)
          CHECK(is_zero(A.mul(es[i], es[k])));
    }
    CHECK(sum == A.unit());
    // The center is a product of local algebras, one per block, so it has
    // exactly 2^#blocks idempotents.
    auto Z = center(A);
    double total = std::pow(static_cast<double>(F.order()), static_cast<double>(Z.rows()));
    if (total <= 70000)
      CHECK(oracle::count_central_idempotents(A, Z) == (std::uint64_t{1} << es.size()));
  }
}

TEST_CASE("block splitting over large fields")
{
  struct Row {
    const char *g;
    unsigned p, m;
    std::size_t blocks;
  };
  for (auto r : {Row{"cyclic:3", 2, 18, 3}, Row{"cyclic:2", 3, 11, 2}, Row{"cyclic:7", 2, 18, 7},
                 Row{"cyclic:5", 2, 20, 5}, Row{"cyclic:4", 65537, 1, 4}, Row{"cyclic:3", 2, 17, 2}}) {
    CAPTURE(r.g);
    CAPTURE(r.m);
    auto F = FqField::make(r.p, r.m);
    auto A = group_algebra(cat(r.g), F);
    auto es = central_idempotents(A);
    CHECK(es.size() == r.blocks);
    for (const auto &e : es)
      CHECK(A.is_idempotent(e));
  }
}

TEST_CASE("defect group examples")
{
  auto G = cat("sym:3");
  auto kS3 = group_algebra(G, FqField::make(2, 2));
  auto es = central_idempotents(kS3);
  REQUIRE(es.size() == 2);
  auto D0 = defect_group(kS3, es[0]);
  CHECK(D0.defect == 1);
  CHECK(D0.group.order() == 2);
  auto D1 = defect_group(kS3, es[1]);
  CHECK(D1.defect == 0);
  CHECK(D1.group.order() == 1);

  auto A4 = cat("alt:4");
  auto kA4 = group_algebra(A4, FqField::make(2, 2));
  REQUIRE(central_idempotents(kA4).size() == 1);
  auto D = defect_group(kA4, kA4.unit());
  CHECK(D.defect == 2);
  CHECK(D.group.order() == 4);
  CHECK(D.group.is_normal_in(A4));

  CHECK_THROWS_AS(defect_group(kS3, kS3.basis_vector(1)), InvalidArgument);
  Bounds tight;
  tight.defect_sylow = 4;
  auto S4 = cat("sym:4");
  auto kS4 = group_algebra(S4, FqField::make(2));
  CHECK_THROWS_AS(defect_group(kS4, kS4.unit(), tight), BoundExceeded);
}

TEST_CASE("block decompositions of small catalog groups")
{
  for (const auto &entry : permcore::standard_catalog()) {
    auto G = permcore::catalog_group(entry.spec);
    if (G.order() > 48 || G.order() == 1)
      continue;
    for (auto [p64, e] : factorize(G.order())) {
      auto p = static_cast<unsigned>(p64);
      CAPTURE(entry.name);
      CAPTURE(p);
      auto F = splitting_field(G, p);
      auto blocks = block_decomposition(G, F);
      REQUIRE_FALSE(blocks.empty());
      auto A = group_algebra(G, F);
      std::size_t dims = 0, h = 0;
      for (const auto &B : blocks) {
        dims += B.dimension;
        h += B.hh1;
        CHECK(B.defect_group.is_subgroup_of(G));
        if (B.defect == 0) {
          CHECK(B.hh1 == 0);
          CHECK(center(block_algebra(A, B.idempotent)).rows() == 1);
        }
      }
      CHECK(dims == G.order());
      CHECK(h == hh1_dim(A));
      CHECK(blocks[0].principal);
      CHECK(blocks[0].defect_group.order() == p_part(G.order(), p));
      for (std::size_t i = 1; i < blocks.size(); ++i)
        CHECK_FALSE(blocks[i].principal);
    }
  }
}

TEST_CASE("the pullback is bounded by HH1 of each block")
{
  for (const char *g : {"sym:3", "sym:4", "alt:4", "dihedral:6", "C2xC6", "sl:2,3", "S3xC3"}) {
    auto G = cat(g);
    for (auto [p64, e] : factorize(G.order())) {
      auto p = static_cast<unsigned>(p64);
      CAPTURE(g);
      CAPTURE(p);
      auto F = splitting_field(G, p);
      for (const auto &B : block_decomposition(G, F)) {
        if (B.defect == 0)
          continue;
        CHECK(alpha_beta_pullback(G, B.defect_group, F) <= B.hh1);
      }
    }
  }
}

TEST_CASE("pullback examples")
{
  auto F3 = FqField::make(3);
  auto S3 = cat("sym:3");
  auto A3 = PermGroup::from_generators({perm("(1 2 3)", 3)});
  auto pb = alpha_beta_pullback_space(S3, A3, F3);
  CHECK(pb.dimension == 1);
  CHECK(pb.hh1_P == 3);
  CHECK(pb.inner_dim == 0);

  // G = P
  for (const char *g : {"cyclic:3", "sym:3", "dihedral:4"}) {
    auto G = cat(g);
    for (unsigned p : {2u, 3u}) {
      if (G.order() % p)
        continue;
      auto F = FqField::make(p);
      CHECK(alpha_beta_pullback(G, G, F) == hh1_dim(group_algebra(G, F)));
    }
  }

  auto C6 = cat("cyclic:6");
  auto g = C6.generators()[0];
  auto C3 = PermGroup::from_generators({g * g});
  CHECK(alpha_beta_pullback(C6, C3, F3) == 3);

  auto C2 = PermGroup::from_generators({perm("(1 2)", 4)});
  CHECK_THROWS_AS(alpha_beta_pullback(cat("alt:4"), C2, FqField::make(2)), InvalidArgument);
}

TEST_CASE("triangular algebras")
{
  auto F2 = FqField::make(2);
  auto kC2 = group_algebra(cat("cyclic:2"), F2);
  auto T = triangular_algebra(kC2, kC2, Bimodule::regular(kC2));
  CHECK(T.algebra.dim() == 6);
  CHECK_FALSE(T.algebra.associativity_failure().has_value());
  for (std::size_t i = T.dim_A; i < T.dim_A + T.dim_M; ++i)
    for (std::size_t k = T.dim_A; k < T.dim_A + T.dim_M; ++k)
      CHECK(T.algebra.product(i, k).empty());
  CHECK(T.algebra.add(T.e_A, T.e_B) == T.algebra.unit());
  CHECK(is_zero(T.algebra.mul(T.e_A, T.e_B)));
  CHECK(is_zero(T.algebra.mul(T.e_B, T.e_A)));
  CHECK(T.algebra.is_idempotent(T.e_A));
  CHECK(derivation_space(T.algebra).dim_der() == oracle::naive_der_dim(T.algebra));

  auto F3 = FqField::make(3);
  auto kS3 = group_algebra(cat("sym:3"), F3);
  auto kA3 = group_algebra(PermGroup::from_generators({perm("(1 2 3)", 3)}), F3);
  auto M = Bimodule::restrict(Bimodule::regular(kS3), kA3, inclusion_map(kA3, kS3), kS3,
                              Matrix::identity(F3, 6));
  auto TG = triangular_algebra(kA3, kS3, M);
  CHECK(TG.algebra.dim() == 15);
  CHECK_FALSE(TG.algebra.associativity_failure().has_value());

  Bounds tight;
  tight.linear = 100;
  CHECK_THROWS_AS(triangular_algebra(kA3, kS3, M, tight), BoundExceeded);
  CHECK_THROWS_AS(triangular_algebra(kS3, kS3, M), InvalidArgument);
}

TEST_CASE("restriction of derivations along an idempotent")
{
  auto F3 = FqField::make(3);
  auto kS3 = group_algebra(cat("sym:3"), F3);
  auto kA3 = group_algebra(PermGroup::from_generators({perm("(1 2 3)", 3)}), F3);
  auto M = Bimodule::restrict(Bimodule::regular(kS3), kA3, inclusion_map(kA3, kS3), kS3,
                              Matrix::identity(F3, 6));
  auto TG = triangular_algebra(kA3, kS3, M);
  const auto &T = TG.algebra;
  Bimodule reg = Bimodule::regular(T);
  std::mt19937_64 rng(99);

  SUBCASE("inner derivations restrict to inner derivations")
  {
    for (const Vec *e : {&TG.e_A, &TG.e_B}) {
      for (int trial = 0; trial < 4; ++trial) {
        Vec x(T.dim());
        for (auto &c : x)
          c = static_cast<Elt>(rng() % 3);
        auto r = restrict_derivation_deg1(T, *e, inner_derivation(T, reg, x));
        const auto &C = r.corner.algebra;
        EchelonBasis inn(F3, C.dim() * C.dim());
        for (const auto &D : inner_derivations(C, Bimodule::regular(C)))
          inn.insert(flatten(D));
        CHECK(inn.contains(flatten(r.derivation)));
      }
    }
  }

  SUBCASE("the unit idempotent returns d")
  {
    auto S = derivation_space(T);
    for (const auto &d : S.derivations) {
      auto r = restrict_derivation_deg1(T, T.unit(), d);
      CHECK(r.derivation == d);
      CHECK(is_zero(r.adjustment));
    }
  }

  SUBCASE("outer derivations give derivations of the corner")
  {
    auto S = derivation_space(T);
    REQUIRE(S.hh1() > 0);
    for (const auto &d : S.outer()) {
      auto r = restrict_derivation_deg1(T, TG.e_A, d);
      CHECK(r.corner.algebra.dim() == 3);
      CHECK(is_derivation(r.corner.algebra, Bimodule::regular(r.corner.algebra), r.derivation));
    }
  }

  SUBCASE("errors")
  {
    Matrix zero(F3, T.dim(), T.dim());
    CHECK_THROWS_AS(restrict_derivation_deg1(T, T.basis_vector(3), zero), InvalidArgument);
    Matrix bad = zero;
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(restrict_derivation_deg1(T, TG.e_A, bad), InvalidArgument);
  }
}
