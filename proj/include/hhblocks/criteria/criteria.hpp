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

#include "hhblocks/criteria/certificate.hpp"

#include <optional>

namespace hhb::criteria {

enum class NonSchurMode { Strong, Weak };

/// x is not in [C_G(x), C_G(x)]. Throws InvalidArgument if x is not in G.
bool is_non_schur(const PermGroup &G, const Permutation &x, const Bounds &b = {});

/// Class representatives of G sorted by increasing centraliser order, then
/// by image array.
std::vector<permcore::ConjClass> search_order(const PermGroup &G, const Bounds &b = {});

/// S(p) (strong: a non-Schur p-element) or W(p) (weak: a non-Schur element
/// of order divisible by p). Holds vacuously when p does not divide |G|.
Certificate find_non_schur(const PermGroup &G, std::uint64_t p, NonSchurMode mode,
                           const Bounds &b = {});

/// SC(p): a p-element x with H_1(C_G(x), F_p) != 0. The identity counts as
/// a p-element and is tried last.
Certificate check_SC(const PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// One certificate per item (i)..(viii) for a nontrivial Sylow p-subgroup;
/// item (vi) is reported as not implemented. Items whose search exceeds a
/// bound are inconclusive. Throws InvalidArgument if p does not divide |G|.
std::vector<Certificate> prop36_profile(const PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// Some x in P with H_1(C_P(x)) -> H_1(C_G(x)) nonzero. Scans the conjugacy
/// class representatives of P, or only the given candidates.
Certificate cor32_check(const PermGroup &G, const PermGroup &P, std::uint64_t p,
                        const std::optional<std::vector<Permutation>> &candidates = std::nullopt,
                        const Bounds &b = {});

/// x in P and H normal of index p in C_G(x) with [C_P(x) : H n C_P(x)] = p.
Certificate theoremA_witness(const PermGroup &G, const PermGroup &P, std::uint64_t p,
                             const Bounds &b = {});

/// Block criteria for a block with defect group P.
/// (1) H_1(P) -> H_1(G) is nonzero.
Certificate thm37_map(const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b = {});
/// (2) some x in P \ [P,P] has C_P(x) a Sylow subgroup of C_G(x).
Certificate thm37_transfer(const PermGroup &G, const PermGroup &P, std::uint64_t p,
                           const Bounds &b = {});
/// (3) P is a Sylow subgroup and G has a non-Schur p-element.
Certificate thm37_sylow_non_schur(const PermGroup &G, const PermGroup &P, std::uint64_t p,
                                  const Bounds &b = {});
/// (4) every p-regular g with p | |C_G(g)| commutes with a p-element x
/// whose class in H_1(C_G(x), F_p) is nonzero.
Certificate thm37_p_regular(const PermGroup &G, std::uint64_t p, const Bounds &b = {});
/// (8) H_1(O_p(G)) -> H_1(G) is nonzero.
Certificate thm37_normal(const PermGroup &G, std::uint64_t p, const Bounds &b = {});

/// For p-regular g in S_n with p | |C(g)|: some i prime to p and x of cycle
/// type (1)^(n-ip) (p)^i commuting with g, with C(x) = S_(n-ip) x C_p wr S_i
/// and [x] != 0 in H_1(C(x), F_p). Throws InvalidArgument if g is not a
/// p-regular permutation of degree n or p does not divide |C(g)|.
Certificate sn_witness(std::size_t n, std::uint64_t p, const Permutation &g, const Bounds &b = {});

/// The alternating-group analogue. For p = 2 the cycle type of g falls in
/// one of three cases: some length occurs at least 4 times (a commuting
/// pair x, y with [y] != 0 in H_1(C_(A_n)(x), F_2)); three odd lengths occur
/// at least twice (the pair built from swaps of equal cycles); otherwise the
/// Sylow 2-subgroup of C_(A_n)(g) is cyclic of order 2 (verdict
/// CyclicDefect).
Certificate an_witness(std::size_t n, std::uint64_t p, const Permutation &g, const Bounds &b = {});

} // namespace hhb::criteria
