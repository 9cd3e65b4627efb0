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

#include "hhblocks/criteria/criteria.hpp"
#include "hhblocks/exalg/field.hpp"
#include "hhblocks/exalg/linalg.hpp"
#include "hhblocks/fphom/h1.hpp"

#include <map>
#include <string>
#include <vector>

namespace hhb::criteria::detail {

using exalg::p_part;

bool is_sylow(const PermGroup &P, const PermGroup &G, std::uint64_t p);

/// Entries of a field matrix as nested arrays.
nlohmann::json matrix_json(const exalg::Matrix &M);
bool is_zero_vector(const exalg::Vec &v);
std::string vec_string(const exalg::Vec &v);

/// Cycles of x including fixed points, grouped by length. Within a length,
/// cycles are ordered by least point and each starts at its least point.
std::map<std::size_t, std::vector<std::vector<std::size_t>>> cycles_by_length(const Permutation &x);

/// prod_k k^(m_k) m_k! for cycle counts m_k of x.
std::uint64_t sn_centralizer_order(const Permutation &x);

/// C_(S_n)(x) = prod_k C_k wr S_(m_k), from explicit generators.
PermGroup sn_centralizer(const Permutation &x);

/// The even elements of H.
PermGroup even_part(const PermGroup &H);

/// Maps cycle a onto cycle b point by point (both of the same length),
/// and b onto a. Commutes with any permutation having a and b as cycles.
Permutation swap_cycles(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
                        std::size_t n);

/// Nontrivial p-parts of the class representatives in search order, without
/// repeats, followed by the identity if keep_identity is set.
std::vector<Permutation> p_element_candidates(const PermGroup &G, std::uint64_t p,
                                              bool keep_identity, const Bounds &b);

/// Classification of a 2-regular cycle type for the alternating case:
/// 1 if some length occurs at least 4 times, 2 if three distinct lengths
/// occur at least twice, 3 otherwise.
int an_case(const Permutation &g);

/// Throws InvalidArgument unless p is prime.
void require_prime(std::uint64_t p, const char *who);

/// Replays c and appends the verified facts to its trace. A claim that
/// does not replay is a bug and raises InternalError.
Certificate finish(Certificate c, const Bounds &b);

} // namespace hhb::criteria::detail
