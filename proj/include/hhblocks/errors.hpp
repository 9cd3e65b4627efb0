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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhb {

/// Malformed input or a violated precondition (wrong degree, element not in
/// the group, bad cocycle, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or size bound would be exceeded.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A runtime self-check failed. This indicates a bug in this library.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Resource limits shared by all modules.
struct Bounds {
  /// Largest group whose elements may be enumerated one by one.
  std::uint64_t enumeration = 1'000'000;
  /// Largest group whose conjugacy classes may be computed.
  std::uint64_t classes = 1'000'000;
  /// Largest group order accepted by group_algebra / twisted_group_algebra.
  std::uint64_t algebra = 200;
  /// Bound on dim(A) * dim(M) for derivation solves.
  std::uint64_t linear = std::uint64_t{1} << 20;
  /// Largest Sylow subgroup accepted by the defect-group search.
  std::uint64_t defect_sylow = 64;
  /// Largest permutation degree produced by the catalog.
  std::uint64_t degree = 4096;
};

} // namespace hhb
