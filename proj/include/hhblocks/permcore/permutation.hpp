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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hhb::permcore {

using Point = std::uint16_t;
constexpr std::size_t max_degree = 65535;

/// A permutation of {0, ..., n-1}. Text forms use the points 1..n.
///
/// Products act on the right: (a * b) applies a first, then b, so that
/// x^(ab) = (x^a)^b. Conjugation is x^g = g^-1 x g.
class Permutation {
public:
  Permutation() : images_{0} {}
  explicit Permutation(std::size_t degree);
  /// Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint cycle notation such as "(1 2 3)(4 5)" or "(1,2)".
  /// "()" or an empty string is the identity. With degree 0 the degree is
  /// the largest point mentioned (at least 1).
  static Permutation parse(std::string_view text, std::size_t degree = 0);
  /// Builds a permutation from cycles of 0-based points.
  static Permutation from_cycles(const std::vector<std::vector<std::size_t>> &cycles,
                                 std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  const std::vector<Point> &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const noexcept;

  Permutation operator*(const Permutation &o) const;
  Permutation &operator*=(const Permutation &o) { return *this = *this * o; }
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  /// g^-1 * this * g
  Permutation conj(const Permutation &g) const;

  std::uint64_t order() const;
  bool is_even() const noexcept;
  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Multiset of all cycle lengths including fixed points, descending.
  std::vector<std::size_t> cycle_type() const;

  std::string to_string() const;

  bool operator==(const Permutation &o) const noexcept { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const noexcept { return images_ != o.images_; }
  /// Lexicographic order on image arrays.
  bool operator<(const Permutation &o) const noexcept { return images_ < o.images_; }

  std::size_t hash() const noexcept;

private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
Permutation commutator(const Permutation &a, const Permutation &b);

/// Least n >= 1 with x^n = identity.
std::uint64_t element_order(const Permutation &x);

} // namespace hhb::permcore

template <> struct std::hash<hhb::permcore::Permutation> {
  std::size_t operator()(const hhb::permcore::Permutation &p) const noexcept { return p.hash(); }
};
