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

#include "hhblocks/errors.hpp"
#include "hhblocks/permcore/group.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hhb::criteria {

using permcore::PermGroup;
using permcore::Permutation;

enum class Criterion {
  NonSchur,
  StrongNonSchur,
  WeakNonSchur,
  StrongCommutatorIndex,
  Prop36_i,
  Prop36_ii,
  Prop36_iii,
  Prop36_iv,
  Prop36_v,
  Prop36_vi,
  Prop36_vii,
  Prop36_viii,
  Cor32,
  TheoremA,
  SnWitness,
  AnWitness,
  Thm37_1,
  Thm37_2,
  Thm37_3,
  Thm37_4,
  Thm37_8,
};

enum class Verdict { Holds, HoldsVacuously, Fails, Inconclusive, CyclicDefect, NotImplemented };

/// "S_P", "PROP36_iv", ...
std::string criterion_name(Criterion c);
Criterion parse_criterion(const std::string &s);
/// "holds", "holds vacuously", "fails", "inconclusive", "cyclic defect", "not implemented"
std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string &s);

/// Holds or HoldsVacuously.
inline bool holds(Verdict v) { return v == Verdict::Holds || v == Verdict::HoldsVacuously; }

/// A criterion outcome with everything needed to re-check it. inputs holds
/// the groups (as generator lists) and the prime; witness holds elements,
/// subgroups, matrices and integer values keyed by name.
struct Certificate {
  Criterion criterion = Criterion::NonSchur;
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json witness = {{"elements", nlohmann::json::object()},
                            {"subgroups", nlohmann::json::object()},
                            {"matrices", nlohmann::json::object()},
                            {"values", nlohmann::json::object()}};
  std::vector<std::string> trace;

  bool holds() const { return criteria::holds(verdict); }

  void set_element(const std::string &key, const Permutation &x);
  void set_subgroup(const std::string &key, const PermGroup &H);
  void set_value(const std::string &key, std::int64_t v);
  void set_matrix(const std::string &key, const nlohmann::json &m);
  Permutation element(const std::string &key) const;
  PermGroup subgroup(const std::string &key) const;
  std::int64_t value(const std::string &key) const;
  bool has_element(const std::string &key) const;

  /// {criterion, verdict, inputs, witness: {elements, subgroups, matrices, values}, trace}
  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json &j);
};

/// The group as {"generators": [...], "degree": n}.
nlohmann::json group_json(const PermGroup &G);
PermGroup group_from_json(const nlohmann::json &j);

struct ReplayResult {
  bool ok = true;
  std::string message;
  std::vector<std::string> facts; ///< the sub-facts checked, in order
  explicit operator bool() const noexcept { return ok; }
};

/// Re-verifies every fact a certificate claims using only its JSON payload.
/// Fails, inconclusive and not-implemented verdicts carry no claim and
/// replay trivially.
ReplayResult replay(const Certificate &c, const Bounds &b = {});

} // namespace hhb::criteria
