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

#include "hhblocks/exalg/field.hpp"

#include "hhblocks/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hhb::exalg {

bool is_prime(std::uint64_t n) noexcept
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept
{
  std::uint64_t r = 1;
  if (n == 0 || p < 2)
    return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

namespace {

using Poly = std::vector<std::uint32_t>; // c_0 .. c_d, trimmed

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly &m, std::uint32_t p)
{
  trim(a);
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &m, std::uint32_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly digits(Elt a, std::uint32_t p, unsigned m)
{
  Poly r(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    r[i] = a % p;
    a /= p;
  }
  trim(r);
  return r;
}

Elt pack(const Poly &a, std::uint32_t p)
{
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    v = v * p + a[i];
  return static_cast<Elt>(v);
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t> &coeffs, std::uint32_t p)
{
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2)
    return false;
  std::size_t m = f.size() - 1;
  if (m == 1)
    return true;
  // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= m/2.
  Poly x = {0, 1};
  Poly xp = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    Poly base = xp, acc = {1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1)
        acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Poly d = xp;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1)
      return false;
  }
  return true;
}

FqField FqField::make(std::uint32_t p, unsigned m)
{
  if (!is_prime(p))
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1)
    throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order)
      throw BoundExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) +
                          " exceeds 2^32");
  }
  if (m == 1)
    return FqField(p, 1, {0, 1});
  // Enumerate monic polynomials by the integer sum c_i p^i over the low
  // coefficients; the first irreducible one is the modulus.
  std::uint64_t count = q;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (f[0] == 0)
      continue;
    if (is_irreducible_mod_p(f, p))
      return FqField(p, m, f);
  }
  throw InternalError("no irreducible polynomial found");
}

FqField::FqField(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus))
{
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i)
    q_ *= p_;

  // primitive element: least element whose order is q - 1
  auto primes = factorize(q_ - 1);
  for (std::uint64_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto [r, e] : primes) {
      (void)e;
      if (pow(static_cast<Elt>(g), (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = static_cast<Elt>(g);
      break;
    }
  }

  if (m_ > 1 && q_ <= (1u << 16)) {
    auto t = std::make_shared<Tables>();
    t->log.assign(q_, 0);
    t->exp.assign(2 * (q_ - 1), 0);
    Elt x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      t->exp[i] = x;
      t->exp[i + q_ - 1] = x;
      t->log[x] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, primitive_);
    }
    tables_ = std::move(t);
  }
}

Elt FqField::add_slow(Elt a, Elt b) const noexcept
{
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return static_cast<Elt>(r);
}

Elt FqField::neg_slow(Elt a) const noexcept
{
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return static_cast<Elt>(r);
}

Elt FqField::mul_poly(Elt a, Elt b) const noexcept
{
  return pack(poly_mulmod(digits(a, p_, m_), digits(b, p_, m_), modulus_, p_), p_);
}

Elt FqField::pow(Elt a, std::uint64_t e) const noexcept
{
  Elt r = 1;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt FqField::inv(Elt a) const
{
  if (a == 0)
    throw InvalidArgument("inverse of zero field element");
  if (tables_) {
    auto const &t = *tables_;
    return t.exp[(q_ - 1 - t.log[a]) % (q_ - 1)];
  }
  return pow(a, q_ - 2);
}

Elt FqField::from_int(std::int64_t v) const noexcept
{
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Elt>(r);
}

std::string FqField::to_string(Elt a) const
{
  if (m_ == 1)
    return std::to_string(a);
  Poly d = digits(a, p_, m_);
  if (d.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0)
      continue;
    if (!first)
      os << "+";
    first = false;
    if (i == 0 || d[i] != 1)
      os << d[i];
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

} // namespace hhb::exalg
