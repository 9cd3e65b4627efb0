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

#include "hhblocks/permcore/permutation.hpp"

#include "hhblocks/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hhb::permcore {

Permutation::Permutation(std::size_t degree)
{
  if (degree == 0 || degree > max_degree)
    throw InvalidArgument("permutation degree must be in 1.." + std::to_string(max_degree));
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty() || images_.size() > max_degree)
    throw InvalidArgument("permutation degree must be in 1.." + std::to_string(max_degree));
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i])
      throw InvalidArgument("image list is not a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::size_t>> &cycles,
                                     std::size_t degree)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto &c : cycles) {
    for (auto pt : c) {
      if (pt >= degree)
        throw InvalidArgument("cycle point " + std::to_string(pt + 1) + " exceeds degree " +
                              std::to_string(degree));
      if (used[pt])
        throw InvalidArgument("cycles are not disjoint at point " + std::to_string(pt + 1));
      used[pt] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t maxpt = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidArgument("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size())
        throw InvalidArgument("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument("unexpected character in cycle notation: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > max_degree)
          throw InvalidArgument("point out of range: " + std::string(text));
        ++i;
      }
      if (v == 0)
        throw InvalidArgument("points are numbered from 1: " + std::string(text));
      maxpt = std::max(maxpt, v);
      cyc.push_back(v - 1);
    }
    if (cyc.size() > 1)
      cycles.push_back(std::move(cyc));
    else if (cyc.size() == 1)
      maxpt = std::max(maxpt, cyc[0] + 1);
    skip_ws();
  }
  if (degree == 0)
    degree = std::max<std::size_t>(maxpt, 1);
  if (maxpt > degree)
    throw InvalidArgument("point " + std::to_string(maxpt) + " exceeds degree " +
                          std::to_string(degree));
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::first_moved() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return images_.size();
}

Permutation Permutation::operator*(const Permutation &o) const
{
  if (o.degree() != degree())
    throw InvalidArgument("degree mismatch in product");
  Permutation r = *this;
  for (auto &x : r.images_)
    x = o.images_[x];
  return r;
}

Permutation Permutation::inverse() const
{
  Permutation r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  n %= order();
  Permutation r(degree());
  while (n) {
    if (n & 1)
      r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Permutation Permutation::conj(const Permutation &g) const
{
  if (g.degree() != degree())
    throw InvalidArgument("degree mismatch in conjugation");
  // (g^-1 x g)(g(i)) = g(x(i))
  Permutation r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t o = 1;
  for (auto len : cycle_type()) {
    o = std::lcm(o, static_cast<std::uint64_t>(len));
  }
  return o;
}

bool Permutation::is_even() const noexcept
{
  std::size_t transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> t;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto &c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

std::size_t Permutation::hash() const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(const Permutation &a, const Permutation &b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t element_order(const Permutation &x) { return x.order(); }

} // namespace hhb::permcore
