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

#include "hhblocks/verify/verify.hpp"

#include "hhblocks/criteria/criteria.hpp"
#include "hhblocks/exalg/blocks.hpp"
#include "hhblocks/exalg/derivations.hpp"
#include "hhblocks/exalg/maps.hpp"
#include "hhblocks/fphom/h1.hpp"

#include <chrono>
#include <set>

namespace hhb::verify {

using exalg::FqField;
using permcore::Permutation;
using json = nlohmann::json;

namespace {

class Stopwatch {
public:
  std::int64_t millis() const
  {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

json field_json(const FqField &F) { return {{"p", F.characteristic()}, {"m", F.degree()}}; }

VerificationReport start(const char *check, const PermGroup &G)
{
  VerificationReport r;
  r.check = check;
  r.inputs["G"] = criteria::group_json(G);
  r.inputs["order"] = G.order();
  return r;
}

void finish(VerificationReport &r, bool pass, const Stopwatch &sw)
{
  r.pass = pass;
  r.millis = sw.millis();
  if (!pass)
    r.diagnostics["note"] = "the two sides were computed independently and disagree; this is a bug in the "
                            "implementation, not a counterexample. The full input is recorded in inputs.";
}

void require_prime(std::uint64_t p, const char *who)
{
  if (!exalg::is_prime(p))
    throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

std::size_t rank_of(const exalg::Matrix &M) { return exalg::rank(M); }

json span_json(const exalg::EchelonBasis &E)
{
  json out = json::array();
  exalg::Matrix B = E.basis();
  for (std::size_t i = 0; i < B.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < B.cols(); ++j)
      row.push_back(B(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

bool contained_in(const exalg::EchelonBasis &A, const exalg::EchelonBasis &B)
{
  exalg::Matrix M = A.basis();
  for (std::size_t i = 0; i < M.rows(); ++i)
    if (!B.contains(M.row_vec(i)))
      return false;
  return true;
}

unsigned field_degree_for(const PermGroup &G, std::uint64_t p, unsigned field_degree, const Bounds &b)
{
  return field_degree ? field_degree : exalg::splitting_degree(G, p, b);
}

} // namespace

std::string VerificationReport::verdict() const { return skipped ? "skipped" : pass ? "pass" : "fail"; }

json VerificationReport::to_json(bool timing) const
{
  json j = {{"check", check}, {"inputs", inputs}, {"lhs", lhs}, {"rhs", rhs}, {"verdict", verdict()}};
  if (timing)
    j["millis"] = millis;
  if (!diagnostics.is_null())
    j["diagnostics"] = diagnostics;
  return j;
}

VerificationReport centralizer_decomposition_check(const PermGroup &G, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "centralizer_decomposition_check");
  Stopwatch sw;
  VerificationReport r = start("centralizer_decomposition", G);
  r.inputs["p"] = p;
  const FqField F = FqField::make(static_cast<std::uint32_t>(p));
  const std::size_t hh1 = exalg::hh1_dim(exalg::group_algebra(G, F, b), b);
  std::size_t sum = 0;
  json terms = json::array();
  for (const auto &cls : G.classes(b)) {
    const std::size_t d = fphom::h1_fp(cls.centralizer, p).dimension();
    sum += d;
    terms.push_back({{"representative", cls.representative.to_string()},
                     {"centralizer_order", cls.centralizer.order()},
                     {"dim", d}});
  }
  r.lhs = {{"hh1", hh1}};
  r.rhs = {{"sum", sum}, {"terms", terms}};
  finish(r, hh1 == sum, sw);
  return r;
}

VerificationReport blockwise_check(const PermGroup &G, std::uint64_t p, const Bounds &b, unsigned field_degree)
{
  require_prime(p, "blockwise_check");
  Stopwatch sw;
  VerificationReport r = start("blockwise", G);
  r.inputs["p"] = p;
  const FqField F = FqField::make(static_cast<std::uint32_t>(p), field_degree_for(G, p, field_degree, b));
  r.inputs["field"] = field_json(F);
  bool pass = true;
  r.lhs = json::array();
  r.rhs = json::array();
  const auto blocks = exalg::block_decomposition(G, F, true, b);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto &B = blocks[i];
    const std::size_t pull = exalg::alpha_beta_pullback(G, B.defect_group, F, b);
    const bool cor = criteria::cor32_check(G, B.defect_group, p, std::nullopt, b).holds();
    const bool le = pull <= B.hh1, iff = (pull > 0) == cor, implies = !cor || B.hh1 >= 1;
    pass = pass && le && iff && implies;
    r.lhs.push_back({{"block", i},
                     {"principal", B.principal},
                     {"dimension", B.dimension},
                     {"defect", B.defect},
                     {"defect_group", criteria::group_json(B.defect_group)},
                     {"hh1", B.hh1}});
    r.rhs.push_back({{"block", i},
                     {"pullback", pull},
                     {"pullback_le_hh1", le},
                     {"cor32", cor},
                     {"pullback_iff_cor32", iff},
                     {"cor32_implies_hh1", implies}});
  }
  finish(r, pass, sw);
  return r;
}

VerificationReport mv_degree1_check(const PermGroup &G, const PermGroup &P, const FqField &F, const Bounds &b)
{
  if (P.degree() != G.degree() || !P.is_subgroup_of(G))
    throw InvalidArgument("mv_degree1_check: P is not a subgroup of G");
  Stopwatch sw;
  VerificationReport r = start("mv_degree1", G);
  r.inputs["P"] = criteria::group_json(P);
  r.inputs["field"] = field_json(F);

  const exalg::Algebra kP = exalg::group_algebra(P, F, b), kG = exalg::group_algebra(G, F, b);
  const std::size_t np = kP.dim(), ng = kG.dim();
  const exalg::Bimodule M = exalg::Bimodule::restrict(exalg::Bimodule::regular(kG), kP, exalg::inclusion_map(kP, kG),
                                                      kG, exalg::Matrix::identity(F, ng));
  const auto T = exalg::triangular_algebra(kP, kG, M, b);
  const auto derT = exalg::derivation_space(T.algebra, b);
  const auto derP = exalg::derivation_space(kP, b);

  // im(rho): restrictions of derivations of T to the corner e_A T e_A = kP,
  // together with Inn(kP).
  exalg::EchelonBasis image(F, np * np);
  for (const auto &d : derT.derivations) {
    auto rd = exalg::restrict_derivation_deg1(T.algebra, T.e_A, d);
    if (rd.corner.algebra.dim() != np)
      throw InternalError("mv_degree1_check: corner of T is not kP");
    for (std::size_t t = 0; t < np; ++t)
      if (rd.corner.embedding.col_vec(t) != T.algebra.basis_vector(t))
        throw InternalError("mv_degree1_check: corner basis differs from the basis of kP");
    image.insert(exalg::flatten(rd.derivation));
  }
  for (const auto &D : derP.inner)
    image.insert(exalg::flatten(D));

  const auto pb = exalg::alpha_beta_pullback_space(G, P, F, b);
  exalg::EchelonBasis pre(F, np * np);
  for (const auto &D : pb.preimage)
    pre.insert(exalg::flatten(D));

  const bool sub = contained_in(image, pre), sup = contained_in(pre, image);
  r.lhs = {{"dimension", image.size() - derP.dim_inn()}, {"hh1_T", derT.hh1()}};
  r.rhs = {{"dimension", pb.dimension}, {"hh1_P", pb.hh1_P}};
  r.rhs["image_in_preimage"] = sub;
  r.rhs["preimage_in_image"] = sup;
  finish(r, sub && sup, sw);
  if (!r.pass) {
    r.diagnostics["image_span"] = span_json(image);
    r.diagnostics["preimage_span"] = span_json(pre);
  }
  return r;
}

VerificationReport prop31_equivalence_check(const PermGroup &G, const PermGroup &H, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "prop31_equivalence_check");
  if (H.degree() != G.degree() || !H.is_subgroup_of(G))
    throw InvalidArgument("prop31_equivalence_check: H is not a subgroup of G");
  Stopwatch sw;
  VerificationReport r = start("prop31_equivalence", G);
  r.inputs["H"] = criteria::group_json(H);
  r.inputs["p"] = p;
  const FqField F = FqField::make(static_cast<std::uint32_t>(p));
  const std::size_t pull = exalg::alpha_beta_pullback(G, H, F, b);
  json witness = nullptr;
  for (const auto &cls : criteria::search_order(H, b)) {
    const Permutation &x = cls.representative;
    auto M = fphom::h1_induced_map(cls.centralizer, permcore::centralizer(G, x, b), p);
    if (rank_of(M) >= 1) {
      witness = x.to_string();
      break;
    }
  }
  r.lhs = {{"pullback", pull}, {"nonzero", pull > 0}};
  r.rhs = {{"witness", witness}, {"nonzero", !witness.is_null()}};
  finish(r, (pull > 0) == !witness.is_null(), sw);
  return r;
}

VerificationReport lemma63_check(const PermGroup &G, const exalg::Cocycle &alpha, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "lemma63_check");
  if (!alpha.group().same_elements(G))
    throw InvalidArgument("lemma63_check: the cocycle lives on a different group");
  if (alpha.field().characteristic() != p)
    throw InvalidArgument("lemma63_check: the cocycle field does not have characteristic p");
  if (G.order() % p != 0)
    throw InvalidArgument("lemma63_check: p does not divide |G|");
  Stopwatch sw;
  VerificationReport r = start("lemma63", G);
  r.inputs["p"] = p;
  r.inputs["field"] = field_json(alpha.field());
  r.inputs["cocycle_trivial"] = alpha.is_trivial();
  r.inputs["cocycle"] = alpha.to_json();

  json witnesses = json::array();
  bool regular = true;
  std::set<Permutation> seen;
  for (const auto &cls : criteria::search_order(G, b)) {
    Permutation x = permcore::p_part(cls.representative, p);
    if (x.is_identity() || !seen.insert(x).second || !criteria::is_non_schur(G, x, b))
      continue;
    const bool reg = exalg::is_alpha_regular(alpha, x, b);
    regular = regular && reg;
    witnesses.push_back({{"x", x.to_string()}, {"alpha_regular", reg}});
  }
  const std::size_t hh1 = exalg::hh1_dim(exalg::twisted_group_algebra(alpha, b), b);
  const bool enough = witnesses.empty() || hh1 >= 1;
  r.lhs = {{"non_schur_p_elements", witnesses}, {"all_alpha_regular", regular}};
  r.rhs = {{"hh1", hh1}, {"required_at_least", witnesses.empty() ? 0 : 1}};
  finish(r, regular && enough, sw);
  return r;
}

VerificationReport thm37_consistency_check(const PermGroup &G, std::uint64_t p, const Bounds &b,
                                           unsigned field_degree)
{
  require_prime(p, "thm37_consistency_check");
  Stopwatch sw;
  VerificationReport r = start("thm37_consistency", G);
  r.inputs["p"] = p;
  const FqField F = FqField::make(static_cast<std::uint32_t>(p), field_degree_for(G, p, field_degree, b));
  r.inputs["field"] = field_json(F);

  const PermGroup P = permcore::sylow_subgroup(G, p, b);
  const PermGroup Q = permcore::p_core(G, p, b);
  const bool map_sylow = rank_of(fphom::h1_induced_map(P, G, p)) >= 1;
  const bool map_core = rank_of(fphom::h1_induced_map(Q, G, p)) >= 1;
  const bool non_schur = criteria::find_non_schur(G, p, criteria::NonSchurMode::Strong, b).verdict ==
                         criteria::Verdict::Holds;
  const bool p_regular = criteria::thm37_p_regular(G, p, b).verdict == criteria::Verdict::Holds;
  const auto blocks = exalg::block_decomposition(G, F, true, b);

  bool pass = true;
  json per_block = json::array(), rel = json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto &B = blocks[i];
    const bool sylow_defect = B.defect_group.order() == P.order();
    const bool nonzero = B.hh1 >= 1;
    // the Sylow map and the non-Schur criterion speak about blocks of
    // Sylow defect; the p-regular and O_p criteria about every block of
    // positive defect
    const bool ok1 = !(map_sylow && B.principal) || nonzero;
    const bool ok3 = !(non_schur && sylow_defect && P.order() > 1) || nonzero;
    const bool ok4 = !(p_regular && B.defect > 0) || nonzero;
    const bool ok8 = !map_core || nonzero;
    pass = pass && ok1 && ok3 && ok4 && ok8;
    per_block.push_back({{"block", i}, {"principal", B.principal}, {"defect", B.defect}, {"hh1", B.hh1}});
    rel.push_back({{"block", i}, {"map_sylow", ok1}, {"sylow_non_schur", ok3}, {"p_regular", ok4}, {"map_core", ok8}});
  }
  r.lhs = {{"map_sylow_nonzero", map_sylow},
           {"map_core_nonzero", map_core},
           {"core_order", Q.order()},
           {"non_schur", non_schur},
           {"p_regular", p_regular},
           {"blocks", per_block}};
  r.rhs = rel;
  finish(r, pass, sw);
  return r;
}

VerificationReport large_prime_non_schur_check(const PermGroup &G, const Bounds &b)
{
  Stopwatch sw;
  VerificationReport r = start("large_prime_non_schur", G);
  json primes = json::array(), found = json::array();
  bool pass = true;
  for (auto [p, e] : exalg::factorize(G.order())) {
    if (p <= 5)
      continue;
    auto c = criteria::find_non_schur(G, p, criteria::NonSchurMode::Strong, b);
    const bool ok = c.verdict == criteria::Verdict::Holds;
    pass = pass && ok;
    primes.push_back(p);
    found.push_back(ok ? json(c.element("x").to_string()) : json(nullptr));
  }
  r.lhs = {{"primes", primes}};
  r.rhs = {{"witnesses", found}};
  finish(r, pass, sw);
  return r;
}

VerificationReport symmetric_witness_check(std::size_t n, bool alternating, std::uint64_t p, const Bounds &b)
{
  require_prime(p, "symmetric_witness_check");
  Stopwatch sw;
  const PermGroup G = permcore::catalog_group(json{{alternating ? "alt" : "sym", n}}, b);
  VerificationReport r = start("symmetric_witnesses", G);
  r.inputs["n"] = n;
  r.inputs["family"] = alternating ? "alt" : "sym";
  r.inputs["p"] = p;
  json instances = json::array(), bad = json::array();
  std::size_t replayed = 0;
  for (const auto &cls : criteria::search_order(G, b)) {
    const Permutation &g = cls.representative;
    if (g.order() % p == 0 || cls.centralizer.order() % p != 0)
      continue;
    auto c = alternating ? criteria::an_witness(n, p, g, b) : criteria::sn_witness(n, p, g, b);
    const bool ok = criteria::replay(c, b).ok;
    const bool accepted =
        c.verdict == criteria::Verdict::Holds || (alternating && c.verdict == criteria::Verdict::CyclicDefect);
    replayed += ok;
    instances.push_back({{"g", g.to_string()}, {"verdict", criteria::verdict_name(c.verdict)}});
    if (!ok || !accepted)
      bad.push_back(c.to_json());
  }
  r.lhs = {{"instances", instances}};
  r.rhs = {{"replayed", replayed}, {"rejected", bad.size()}};
  finish(r, bad.empty() && replayed == instances.size(), sw);
  if (!r.pass)
    r.diagnostics["certificates"] = bad;
  return r;
}

} // namespace hhb::verify
