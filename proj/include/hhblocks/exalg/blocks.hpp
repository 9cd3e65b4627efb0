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

#include <vector>

namespace hhb::exalg {

/// Rows form a basis of the center Z(A).
Matrix center(const Algebra &A);

/// Least m with p^m = 1 modulo the p'-part of the exponent of G.
unsigned splitting_degree(const permcore::PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// Primitive central idempotents of A. For group algebras the principal
/// block (nonzero augmentation) comes first; the rest follow in
/// lexicographic order of their coefficient vectors.
std::vector<Vec> central_idempotents(const Algebra &A, const Bounds &b = {});

/// The algebra eA with unit e, on a basis of products e b_i. Returns A
/// itself when e is the unit. Throws InvalidArgument if e is not a central
/// idempotent.
Algebra block_algebra(const Algebra &A, const Vec &e);

struct DefectGroup {
  permcore::PermGroup group;
  unsigned defect = 0;
};

/// Minimal subgroup Q of a fixed Sylow subgroup with e in the image of the
/// relative trace Tr_Q^G. kG must be a group algebra and e a central
/// idempotent of it. Throws BoundExceeded if the Sylow subgroup has more
/// than b.defect_sylow elements.
DefectGroup defect_group(const Algebra &kG, const Vec &e, const Bounds &b = {});

struct BlockData {
  Vec idempotent;
  std::size_t dimension = 0;
  permcore::PermGroup defect_group;
  unsigned defect = 0;
  std::size_t hh1 = 0;
  bool principal = false;
};

/// Block decomposition of F G with defect groups and, if requested,
/// dim HH^1 of each block.
std::vector<BlockData> block_decomposition(const permcore::PermGroup &G, const FqField &F,
                                           bool with_hh1 = true, const Bounds &b = {});

} // namespace hhb::exalg
