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

#include "hhblocks/criteria/certificate.hpp"

#include "hhblocks/permcore/catalog.hpp"

#include <array>
#include <utility>

namespace hhb::criteria {

namespace {

constexpr std::array<std::pair<Criterion, const char *>, 21> kCriteria{{
    {Criterion::NonSchur, "NON_SCHUR"},
    {Criterion::StrongNonSchur, "S_P"},
    {Criterion::WeakNonSchur, "W_P"},
    {Criterion::StrongCommutatorIndex, "SC_P"},
    {Criterion::Prop36_i, "PROP36_i"},
    {Criterion::Prop36_ii, "PROP36_ii"},
    {Criterion::Prop36_iii, "PROP36_iii"},
    {Criterion::Prop36_iv, "PROP36_iv"},
    {Criterion::Prop36_v, "PROP36_v"},
    {Criterion::Prop36_vi, "PROP36_vi"},
    {Criterion::Prop36_vii, "PROP36_vii"},
    {Criterion::Prop36_viii, "PROP36_viii"},
    {Criterion::Cor32, "COR32"},
    {Criterion::TheoremA, "THM_A"},
    {Criterion::SnWitness, "SN_WITNESS"},
    {Criterion::AnWitness, "AN_WITNESS"},
    {Criterion::Thm37_1, "THM37_1"},
    {Criterion::Thm37_2, "THM37_2"},
    {Criterion::Thm37_3, "THM37_3"},
    {Criterion::Thm37_4, "THM37_4"},
    {Criterion::Thm37_8, "THM37_8"},
}};

constexpr std::array<std::pair<Verdict, const char *>, 6> kVerdicts{{
    {Verdict::Holds, "holds"},
    {Verdict::HoldsVacuously, "holds vacuously"},
    {Verdict::Fails, "fails"},
    {Verdict::Inconclusive, "inconclusive"},
    {Verdict::CyclicDefect, "cyclic defect"},
    {Verdict::NotImplemented, "not implemented"},
}};

} // namespace

std::string criterion_name(Criterion c)
{
  for (auto [k, s] : kCriteria)
    if (k == c)
      return s;
  throw InternalError("unknown criterion");
}

Criterion parse_criterion(const std::string &s)
{
  for (auto [k, name] : kCriteria)
    if (s == name)
      return k;
  throw InvalidArgument("unknown criterion '" + s + "'");
}

std::string verdict_name(Verdict v)
{
  for (auto [k, s] : kVerdicts)
    if (k == v)
      return s;
  throw InternalError("unknown verdict");
}

Verdict parse_verdict(const std::string &s)
{
  for (auto [k, name] : kVerdicts)
    if (s == name)
      return k;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

nlohmann::json group_json(const PermGroup &G)
{
  return {{"generators", permcore::generators_json(G)}, {"degree", G.degree()}};
}

PermGroup group_from_json(const nlohmann::json &j)
{
  try {
    const std::size_t n = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto &g : j.at("generators"))
      gens.push_back(Permutation::parse(g.get<std::string>(), n));
    if (gens.empty())
      return PermGroup::trivial(n);
    return PermGroup::from_generators(std::move(gens));
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(std::string("malformed group: ") + e.what());
  }
}

void Certificate::set_element(const std::string &key, const Permutation &x)
{
  witness["elements"][key] = x.to_string();
}

void Certificate::set_subgroup(const std::string &key, const PermGroup &H)
{
  witness["subgroups"][key] = group_json(H);
}

void Certificate::set_value(const std::string &key, std::int64_t v) { witness["values"][key] = v; }

void Certificate::set_matrix(const std::string &key, const nlohmann::json &m)
{
  witness["matrices"][key] = m;
}

bool Certificate::has_element(const std::string &key) const
{
  return witness.contains("elements") && witness["elements"].contains(key);
}

Permutation Certificate::element(const std::string &key) const
{
  if (!has_element(key))
    throw InvalidArgument("certificate has no element '" + key + "'");
  std::size_t n = inputs.contains("G") ? inputs["G"].at("degree").get<std::size_t>()
                                       : inputs.at("n").get<std::size_t>();
  return Permutation::parse(witness["elements"][key].get<std::string>(), n);
}

PermGroup Certificate::subgroup(const std::string &key) const
{
  if (!witness.contains("subgroups") || !witness["subgroups"].contains(key))
    throw InvalidArgument("certificate has no subgroup '" + key + "'");
  return group_from_json(witness["subgroups"][key]);
}

std::int64_t Certificate::value(const std::string &key) const
{
  if (!witness.contains("values") || !witness["values"].contains(key))
    throw InvalidArgument("certificate has no value '" + key + "'");
  return witness["values"][key].get<std::int64_t>();
}

nlohmann::json Certificate::to_json() const
{
  return {{"criterion", criterion_name(criterion)},
          {"verdict", verdict_name(verdict)},
          {"inputs", inputs},
          {"witness", witness},
          {"trace", trace}};
}

Certificate Certificate::from_json(const nlohmann::json &j)
{
  try {
    Certificate c;
    c.criterion = parse_criterion(j.at("criterion").get<std::string>());
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.inputs = j.at("inputs");
    c.witness = j.at("witness");
    c.trace = j.at("trace").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace hhb::criteria
