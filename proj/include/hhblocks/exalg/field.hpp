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
#include <memory>
#include <string>
#include <vector>

namespace hhb::exalg {

/// A field element. In F_p this is the residue in [0, p). In F_{p^m} it packs
/// the coefficients of the reduced polynomial representative as base-p
/// digits, constant term least significant.
using Elt = std::uint32_t;

/// The finite field F_{p^m}, realised as F_p[x]/(f) for the lexicographically
/// least monic irreducible f of degree m.
class FqField {
public:
  static constexpr std::uint64_t max_order = std::uint64_t{1} << 32;

  FqField() : FqField(make(2, 1)) {}

  /// Throws InvalidArgument if p is not prime, m < 1 or p^m > 2^32.
  static FqField make(std::uint32_t p, unsigned m = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Coefficients c_0 .. c_m of the monic modulus.
  const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }

  Elt add(Elt a, Elt b) const noexcept
  {
    if (m_ == 1) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elt>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2)
      return a ^ b;
    return add_slow(a, b);
  }

  Elt neg(Elt a) const noexcept
  {
    if (m_ == 1)
      return a == 0 ? 0 : p_ - a;
    if (p_ == 2)
      return a;
    return neg_slow(a);
  }

  Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const noexcept
  {
    if (m_ == 1)
      return static_cast<Elt>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0)
      return 0;
    if (tables_) {
      auto const &t = *tables_;
      return t.exp[t.log[a] + t.log[b]];
    }
    return mul_poly(a, b);
  }

  /// Throws InvalidArgument on zero.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const noexcept;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  /// Image of an integer under Z -> F_p -> F_q.
  Elt from_int(std::int64_t v) const noexcept;
  /// A generator of the multiplicative group.
  Elt primitive_element() const noexcept { return primitive_; }
  Elt frobenius(Elt a) const noexcept { return pow(a, p_); }

  bool is_valid(Elt a) const noexcept { return a < q_; }
  std::string to_string(Elt a) const;

  bool operator==(const FqField &o) const noexcept
  {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<Elt> exp;
  };

  FqField(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

  Elt add_slow(Elt a, Elt b) const noexcept;
  Elt neg_slow(Elt a) const noexcept;
  Elt mul_poly(Elt a, Elt b) const noexcept;

  std::uint32_t p_ = 2;
  unsigned m_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  Elt primitive_ = 1;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept;

/// Irreducibility of a monic polynomial over F_p (coefficients c_0..c_m).
bool is_irreducible_mod_p(const std::vector<std::uint32_t> &coeffs, std::uint32_t p);

} // namespace hhb::exalg
