#include <doctest.h>

#include "hhblocks/errors.hpp"
#include "hhblocks/exalg/field.hpp"
#include "hhblocks/exalg/linalg.hpp"
#include "linear.hpp"

#include <random>

using namespace hhb;
using namespace hhb::exalg;

TEST_CASE("make_field examples")
{
  auto F2 = FqField::make(2, 1);
  CHECK(F2.order() == 2);
  CHECK(F2.degree() == 1);
  auto F5 = FqField::make(5);
  CHECK(F5.order() == 5);
  CHECK(F5.mul(2, 3) == 1);

  auto F9 = FqField::make(3, 2);
  CHECK(F9.order() == 9);
  CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
  // exhaustive: x^2 + 1 has no root in F_3
  for (std::uint32_t x = 0; x < 3; ++x)
    CHECK((x * x + 1) % 3 != 0);

  CHECK_THROWS_AS(FqField::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(FqField::make(3, 0), InvalidArgument);
  CHECK_THROWS_AS(FqField::make(2, 33), BoundExceeded);
}

TEST_CASE("the modulus is the least irreducible polynomial")
{
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    CAPTURE(p);
    CAPTURE(m);
    auto F = FqField::make(p, m);
    // Enumerate monic polynomials of degree m in lexicographic order
    // (constant term least significant) and find the first one without a
    // factor of degree <= m/2 by brute-force division.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i)
      count *= p;
    std::vector<std::uint32_t> expect;
    auto divides = [&](const std::vector<std::uint32_t> &g, std::vector<std::uint32_t> f) {
      while (f.size() >= g.size()) {
        std::uint32_t c = f.back();
        std::size_t s = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
          f[s + i] = (f[s + i] + p * p - c * g[i] % p) % p;
        f.pop_back();
      }
      for (auto x : f)
        if (x)
          return false;
      return true;
    };
    for (std::uint64_t code = 0; code < count && expect.empty(); ++code) {
      std::vector<std::uint32_t> f(m + 1, 0);
      std::uint64_t r = code;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      f[m] = 1;
      bool irreducible = true;
      for (unsigned d = 1; 2 * d <= m && irreducible; ++d) {
        std::uint64_t gc = 1;
        for (unsigned i = 0; i < d; ++i)
          gc *= p;
        for (std::uint64_t g = 0; g < gc && irreducible; ++g) {
          std::vector<std::uint32_t> gp(d + 1, 0);
          std::uint64_t rr = g;
          for (unsigned i = 0; i < d; ++i) {
            gp[i] = static_cast<std::uint32_t>(rr % p);
            rr /= p;
          }
          gp[d] = 1;
          if (divides(gp, f))
            irreducible = false;
        }
      }
      if (irreducible)
        expect = f;
    }
    CHECK(F.modulus() == expect);
  }
}

TEST_CASE("field axioms hold exhaustively for small fields")
{
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 2u},
                      {2u, 4u}, {2u, 6u}}) {
    auto F = FqField::make(p, m);
    CAPTURE(F.order());
    const Elt q = static_cast<Elt>(F.order());
    for (Elt a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a)
        CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, F.order()) == a);
      for (Elt b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        if (q <= 16)
          for (Elt c = 0; c < q; ++c) {
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
          }
      }
    }
  }
}

TEST_CASE("field axioms on F_256 and a large field")
{
  for (auto [p, m] : {std::pair{2u, 8u}, {3u, 5u}, {2u, 20u}, {65537u, 1u}, {257u, 2u}}) {
    auto F = FqField::make(p, m);
    CAPTURE(F.order());
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
    for (int k = 0; k < 5000; ++k) {
      Elt a = static_cast<Elt>(pick(rng)), b = static_cast<Elt>(pick(rng)),
          c = static_cast<Elt>(pick(rng));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      if (a)
        CHECK(F.mul(a, F.inv(a)) == 1);
    }
    // the primitive element has order q - 1
    Elt g = F.primitive_element();
    for (auto [r, e] : factorize(F.order() - 1))
      CHECK(F.pow(g, (F.order() - 1) / r) != 1);
    CHECK(F.pow(g, F.order() - 1) == 1);
  }
}

TEST_CASE("number-theory helpers")
{
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(p_part(48, 2) == 16);
  CHECK(p_part(48, 5) == 1);
}

TEST_CASE("rank and nullspace agree with a dense reference")
{
  std::mt19937_64 rng(7);
  for (unsigned p : {2u, 3u, 5u}) {
    auto F = FqField::make(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      std::vector<Vec> rows(r, Vec(c));
      for (auto &row : rows)
        for (auto &x : row)
          x = static_cast<Elt>(rng() % p);
      Matrix M = Matrix::from_rows(F, rows, c);
      std::size_t rk = rank(M);
      CHECK(rk == oracle::dense_rank(F, rows, c));
      Matrix N = nullspace(M);
      CHECK(N.rows() == c - rk);
      for (std::size_t i = 0; i < N.rows(); ++i)
        CHECK(is_zero(M.apply(N.row_vec(i))));

      EchelonBasis eb(F, c, true);
      for (const auto &row : rows)
        eb.insert(row);
      CHECK(eb.size() == rk);
      for (const auto &row : rows) {
        auto co = eb.coordinates(row);
        REQUIRE(co);
      }

      KernelTracker kt(F, c);
      for (const auto &row : rows)
        kt.add_row(row);
      CHECK(kt.dim() == c - rk);
      for (const auto &v : kt.basis())
        CHECK(is_zero(M.apply(v)));

      if (r == c) {
        auto inv = inverse(M);
        CHECK(inv.has_value() == (rk == r));
        if (inv)
          CHECK(M * *inv == Matrix::identity(F, r));
      }
    }
  }
}

TEST_CASE("coordinates are expressed in insertion order")
{
  auto F = FqField::make(3);
  EchelonBasis eb(F, 3, true);
  Vec a{1, 1, 0}, b{0, 1, 1};
  CHECK(eb.insert(a));
  CHECK(eb.insert(b));
  CHECK_FALSE(eb.insert(Vec{1, 2, 1}));
  Vec t{2, 0, 1}; // 2a + b
  auto co = eb.coordinates(t);
  REQUIRE(co);
  CHECK(*co == Vec{2, 1});
  CHECK_FALSE(eb.coordinates(Vec{0, 0, 1}).has_value());
}
