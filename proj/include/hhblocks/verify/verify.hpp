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

#pragma once

#include "hhblocks/exalg/algebra.hpp"
#include "hhblocks/permcore/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hhb::verify {

using permcore::PermGroup;

/// Both sides of an identity computed along separate code paths. A check
/// passes iff they agree exactly; inequality-type checks record each
/// asserted relation on the right.
struct VerificationReport {
  std::string check;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json lhs;
  nlohmann::json rhs;
  bool pass = false;
  bool skipped = false; ///< a bound was exceeded; neither side is complete
  std::int64_t millis = 0;
  /// Set on failure: what to look at, with both spanning sets where the
  /// check compares subspaces.
  nlohmann::json diagnostics;

  /// "pass", "fail" or "skipped".
  std::string verdict() const;
  /// {check, inputs, lhs, rhs, verdict, millis}; millis only with timing,
  /// so that reports are byte-identical across runs by default.
  nlohmann::json to_json(bool timing = false) const;
};

/// hh1 of F_p G against the sum over classes of dim H_1(C_G(x), F_p).
VerificationReport centralizer_decomposition_check(const PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// Per block of F G (F of degree field_degree over F_p, or the splitting
/// field if 0): the pullback through its defect group is at most hh1 of
/// the block, it is nonzero iff cor32_check finds a witness in the defect
/// group, and such a witness forces hh1 >= 1.
VerificationReport blockwise_check(const PermGroup &G, std::uint64_t p, const Bounds &b = {},
                                   unsigned field_degree = 0);

/// In degree 1, the image of HH^1 of T = [[kP, kG], [0, kG]] in HH^1(kP)
/// equals alpha^{-1}(im beta). Compared as subspaces of Der(kP) containing
/// Inn(kP), by containment both ways.
VerificationReport mv_degree1_check(const PermGroup &G, const PermGroup &P, const exalg::FqField &F,
                                    const Bounds &b = {});

/// alpha_beta_pullback(G, H) over F_p is nonzero iff H_1(C_H(x)) -> H_1(C_G(x))
/// is nonzero for some x in H.
VerificationReport prop31_equivalence_check(const PermGroup &G, const PermGroup &H, std::uint64_t p,
                                            const Bounds &b = {});

/// Each non-Schur p-element among the class representatives is
/// alpha-regular, and hh1 of the twisted algebra is at least 1 when one
/// exists. The field of alpha must have characteristic p.
VerificationReport lemma63_check(const PermGroup &G, const exalg::Cocycle &alpha, std::uint64_t p,
                                 const Bounds &b = {});

/// Sylow consistency: a nonzero H_1(P) -> H_1(G) for a Sylow P gives the
/// principal block hh1 >= 1, and a nonzero H_1(O_p(G)) -> H_1(G) gives
/// every block hh1 >= 1.
VerificationReport thm37_consistency_check(const PermGroup &G, std::uint64_t p, const Bounds &b = {},
                                           unsigned field_degree = 0);

/// S(p) for every prime p > 5 dividing |G|.
VerificationReport large_prime_non_schur_check(const PermGroup &G, const Bounds &b = {});

/// sn_witness (or an_witness) on every p-regular class representative g of
/// S_n (or A_n) with p | |C(g)|. Passes iff every certificate replays and
/// holds; for A_n and p = 2 a cyclic-defect verdict also counts.
VerificationReport symmetric_witness_check(std::size_t n, bool alternating, std::uint64_t p, const Bounds &b = {});

/// Check names accepted in manifests.
const std::vector<std::string> &check_names();

struct ManifestEntry {
  std::string name;          ///< label used in reports
  permcore::GroupSpec group; ///< catalog name or group specification
  std::vector<std::uint64_t> primes; ///< empty means every prime dividing |G|
  /// Empty means every applicable check: symmetric_witnesses only applies
  /// to {"sym": n} and {"alt": n} entries.
  std::vector<std::string> checks;
};

/// {"entries": [{"name", "group", "primes": [..] | "all", "checks": [..]}]}
std::vector<ManifestEntry> parse_manifest(const nlohmann::json &j);
std::vector<ManifestEntry> read_manifest(const std::string &path);
/// The built-in grid: catalog groups up to the given order, every prime.
std::vector<ManifestEntry> default_manifest(std::uint64_t max_order = 48);

/// Runs each entry's checks. Reports are ordered by a stable hash of
/// (check, inputs). A check that exceeds a bound yields a skipped report
/// whose diagnostics carry the bound message.
std::vector<VerificationReport> run_suite(const std::vector<ManifestEntry> &entries, const Bounds &b = {});

/// FNV-1a over the string.
std::uint64_t stable_hash(const std::string &s);

} // namespace hhb::verify
