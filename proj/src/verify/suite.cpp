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

#include "hhblocks/criteria/certificate.hpp"
#include "hhblocks/errors.hpp"
#include "hhblocks/permcore/group.hpp"

#include <algorithm>
#include <fstream>

namespace hhb::verify {

using json = nlohmann::json;

namespace {

const std::string kLargePrime = "large_prime_non_schur";
const std::string kSymmetric = "symmetric_witnesses";

// n and the family for {"sym": n} / {"alt": n}, else n = 0.
std::pair<std::size_t, bool> symmetric_family(const permcore::GroupSpec &spec)
{
  if (spec.is_object() && spec.size() == 1)
    for (const char *k : {"sym", "alt"})
      if (spec.contains(k) && spec[k].is_number_integer() && spec[k].get<std::int64_t>() > 0)
        return {spec[k].get<std::size_t>(), std::string(k) == "alt"};
  return {0, false};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (auto [p, e] : exalg::factorize(n))
    out.push_back(p);
  return out;
}

VerificationReport run_one(const std::string &check, const permcore::GroupSpec &spec, const PermGroup &G,
                           std::uint64_t p, const Bounds &b)
{
  if (check == kSymmetric) {
    auto [n, alt] = symmetric_family(spec);
    return symmetric_witness_check(n, alt, p, b);
  }
  if (check == "centralizer_decomposition")
    return centralizer_decomposition_check(G, p, b);
  if (check == "blockwise")
    return blockwise_check(G, p, b);
  if (check == "mv_degree1")
    return mv_degree1_check(G, permcore::sylow_subgroup(G, p, b), exalg::FqField::make(static_cast<std::uint32_t>(p)),
                            b);
  if (check == "prop31_equivalence")
    return prop31_equivalence_check(G, permcore::sylow_subgroup(G, p, b), p, b);
  if (check == "lemma63")
    return lemma63_check(G, exalg::Cocycle(G, exalg::FqField::make(static_cast<std::uint32_t>(p)), b), p, b);
  if (check == "thm37_consistency")
    return thm37_consistency_check(G, p, b);
  if (check == kLargePrime)
    return large_prime_non_schur_check(G, b);
  throw InvalidArgument("unknown check '" + check + "'");
}

} // namespace

const std::vector<std::string> &check_names()
{
  static const std::vector<std::string> names = {"centralizer_decomposition", "blockwise",        "mv_degree1",
                                                 "prop31_equivalence",        "lemma63",          "thm37_consistency",
                                                 kLargePrime,                 kSymmetric};
  return names;
}

std::uint64_t stable_hash(const std::string &s)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<ManifestEntry> parse_manifest(const json &j)
{
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw InvalidArgument("manifest: expected an object with an \"entries\" array");
  std::vector<ManifestEntry> out;
  std::size_t k = 0;
  for (const auto &e : j["entries"]) {
    const std::string where = "manifest entry " + std::to_string(k++);
    if (!e.is_object() || !e.contains("group"))
      throw InvalidArgument(where + ": missing \"group\"");
    ManifestEntry m;
    m.group = e["group"].is_string() ? permcore::parse_inline_spec(e["group"].get<std::string>()) : e["group"];
    m.name = e.value("name", e["group"].is_string() ? e["group"].get<std::string>() : e["group"].dump());
    if (e.contains("primes")) {
      const auto &ps = e["primes"];
      if (ps.is_array()) {
        for (const auto &p : ps) {
          if (!p.is_number_unsigned() || !exalg::is_prime(p.get<std::uint64_t>()))
            throw InvalidArgument(where + ": " + p.dump() + " is not a prime");
          m.primes.push_back(p.get<std::uint64_t>());
        }
      } else if (!(ps.is_string() && ps.get<std::string>() == "all")) {
        throw InvalidArgument(where + ": \"primes\" must be a list or \"all\"");
      }
    }
    if (e.contains("checks")) {
      if (!e["checks"].is_array())
        throw InvalidArgument(where + ": \"checks\" must be a list");
      for (const auto &c : e["checks"]) {
        const auto &names = check_names();
        if (!c.is_string() || std::find(names.begin(), names.end(), c.get<std::string>()) == names.end())
          throw InvalidArgument(where + ": unknown check " + c.dump());
        m.checks.push_back(c.get<std::string>());
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open manifest " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw InvalidArgument("manifest " + path + ": " + e.what());
  }
  return parse_manifest(j);
}

std::vector<ManifestEntry> default_manifest(std::uint64_t max_order)
{
  std::vector<ManifestEntry> out;
  for (const auto &c : permcore::standard_catalog()) {
    if (permcore::catalog_group(c.spec).order() > max_order)
      continue;
    out.push_back({c.name, c.spec, {}, {}});
  }
  return out;
}

std::vector<VerificationReport> run_suite(const std::vector<ManifestEntry> &entries, const Bounds &b)
{
  std::vector<VerificationReport> reports;
  for (const auto &e : entries) {
    const PermGroup G = permcore::catalog_group(e.group, b);
    const std::vector<std::uint64_t> primes = e.primes.empty() ? prime_divisors(G.order()) : e.primes;
    const std::vector<std::string> &checks = e.checks.empty() ? check_names() : e.checks;
    const bool symmetric = symmetric_family(e.group).first > 0;
    for (const auto &check : checks) {
      if (check == kSymmetric && !symmetric && e.checks.empty())
        continue;
      const bool per_group = check == kLargePrime;
      for (std::size_t i = 0; i < (per_group ? 1 : primes.size()); ++i) {
        const std::uint64_t p = per_group ? 0 : primes[i];
        VerificationReport r;
        try {
          if (!per_group && G.order() % p != 0 && (check == "lemma63" || check == "mv_degree1")) {
            r.check = check;
            r.skipped = true;
            r.diagnostics["reason"] = "p does not divide |G|";
          } else if (check == kSymmetric && !symmetric) {
            r.check = check;
            r.skipped = true;
            r.diagnostics["reason"] = "not a {\"sym\": n} or {\"alt\": n} entry";
          } else {
            r = run_one(check, e.group, G, p, b);
          }
        } catch (const BoundExceeded &ex) {
          r = VerificationReport{};
          r.check = check;
          r.skipped = true;
          r.diagnostics["bound"] = ex.what();
        }
        r.inputs["entry"] = e.name;
        if (!per_group)
          r.inputs["p"] = p;
        if (!r.inputs.contains("G"))
          r.inputs["G"] = criteria::group_json(G);
        reports.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport &a, const VerificationReport &c) {
    return stable_hash(a.check + a.inputs.dump()) < stable_hash(c.check + c.inputs.dump());
  });
  return reports;
}

} // namespace hhb::verify
