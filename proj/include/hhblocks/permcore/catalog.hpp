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

#include "hhblocks/permcore/group.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hhb::permcore {

/// Group specifications are JSON values:
///
///   {"sym": n}          S_n on n points, generated by (1 2) and (1 2 ... n)
///   {"alt": n}          A_n, generated by (1 2 3) and (1 ... n) or (2 ... n)
///   {"cyclic": n}       C_n generated by (1 2 ... n)
///   {"dihedral": n}     D_2n on n points (n >= 3)
///   {"quaternion": n}   dicyclic group of order n (n divisible by 4, n >= 8),
///                       regular representation
///   {"product": [a, b, ...]}       direct product on disjoint point sets
///   {"wreath": {"cyclic": m, "sym": r}}       C_m wr S_r on m*r points
///   {"wreath": {"base": a, "top": b}}         base wr top, imprimitive action
///   {"gl": [n, q]}, {"sl": [n, q]}  action on nonzero vectors of F_q^n
///   {"psl": [n, q]}     SL action on projective points
///   {"generators": ["(1 2)", "(1 2 3)"], "degree": 3}
///
/// In the wreath product, block k holds points k*d+1 .. k*d+d. Base
/// generators act on the first block of each top orbit; top generators
/// permute blocks.
using GroupSpec = nlohmann::json;

PermGroup catalog_group(const GroupSpec &spec, const Bounds &b = {});

/// Inline form used on the command line: "sym:4", "gl:2,3", "wreath:3,2"
/// (C_3 wr S_2), "dihedral:4", products with '*' ("sym:3*cyclic:2"), or
/// the name of a standard catalog entry.
GroupSpec parse_inline_spec(std::string_view text);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
};

/// Named groups used by the test suites, in a fixed order.
const std::vector<CatalogEntry> &standard_catalog();

/// Reads a group specification object from a JSON file.
GroupSpec read_group_file(const std::string &path);

/// Generator list of G as cycle strings.
nlohmann::json generators_json(const PermGroup &G);

} // namespace hhb::permcore
