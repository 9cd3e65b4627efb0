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

#include "hhblocks/permcore/catalog.hpp"

#include "hhblocks/exalg/field.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace hhb::permcore {

using nlohmann::json;

namespace {

std::size_t as_size(const json &v, const char *what)
{
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvalidArgument(std::string(what) + " expects a non-negative integer");
  return v.get<std::size_t>();
}

void check_degree(std::size_t n, const Bounds &b)
{
  if (n == 0)
    throw InvalidArgument("group degree must be positive");
  if (n > b.degree || n > max_degree)
    throw BoundExceeded("catalog group degree " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(std::min<std::size_t>(b.degree, max_degree)));
}

Permutation cycle_range(std::size_t from, std::size_t to, std::size_t degree)
{
  std::vector<std::size_t> c;
  for (std::size_t i = from; i <= to; ++i)
    c.push_back(i);
  return Permutation::from_cycles({c}, degree);
}

PermGroup make_sym(std::size_t n, const Bounds &b)
{
  check_degree(n, b);
  if (n == 1)
    return PermGroup::trivial(1);
  if (n == 2)
    return PermGroup::from_generators({cycle_range(0, 1, 2)});
  return PermGroup::from_generators({cycle_range(0, 1, n), cycle_range(0, n - 1, n)});
}

PermGroup make_alt(std::size_t n, const Bounds &b)
{
  check_degree(n, b);
  if (n <= 2)
    return PermGroup::trivial(n);
  if (n == 3)
    return PermGroup::from_generators({cycle_range(0, 2, 3)});
  Permutation t = cycle_range(0, 2, n);
  Permutation c = (n % 2 == 1) ? cycle_range(0, n - 1, n) : cycle_range(1, n - 1, n);
  return PermGroup::from_generators({t, c});
}

PermGroup make_cyclic(std::size_t n, const Bounds &b)
{
  check_degree(n, b);
  if (n == 1)
    return PermGroup::trivial(1);
  return PermGroup::from_generators({cycle_range(0, n - 1, n)});
}

PermGroup make_dihedral(std::size_t n, const Bounds &b)
{
  if (n < 3)
    throw InvalidArgument("dihedral expects n >= 3 (the group D_2n acts on n points)");
  check_degree(n, b);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<Point>(n - 1 - i);
  return PermGroup::from_generators({cycle_range(0, n - 1, n), Permutation(refl)});
}

PermGroup make_dicyclic(std::size_t order, const Bounds &b)
{
  if (order < 8 || order % 4 != 0)
    throw InvalidArgument("quaternion expects an order divisible by 4 and at least 8");
  check_degree(order, b);
  const std::size_t k = order / 4, two_k = 2 * k;
  // element a^i b^j has index i + 2k j; right multiplication by a and by b
  std::vector<Point> ra(order), rb(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < two_k; ++i) {
      std::size_t x = i + two_k * j;
      if (j == 0) {
        ra[x] = static_cast<Point>((i + 1) % two_k);
        rb[x] = static_cast<Point>(i + two_k);
      } else {
        ra[x] = static_cast<Point>((i + two_k - 1) % two_k + two_k);
        rb[x] = static_cast<Point>((i + k) % two_k);
      }
    }
  return PermGroup::from_generators({Permutation(ra), Permutation(rb)});
}

Permutation shift(const Permutation &g, std::size_t offset, std::size_t degree)
{
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + g[i]);
  return Permutation(img);
}

PermGroup make_product(const std::vector<PermGroup> &factors, const Bounds &b)
{
  if (factors.empty())
    throw InvalidArgument("product expects at least one factor");
  std::size_t n = 0;
  for (const auto &f : factors)
    n += f.degree();
  check_degree(n, b);
  std::vector<Permutation> gens;
  std::size_t off = 0;
  for (const auto &f : factors) {
    for (const auto &g : f.generators())
      gens.push_back(shift(g, off, n));
    off += f.degree();
  }
  if (gens.empty())
    gens.emplace_back(n);
  return PermGroup::from_generators(gens);
}

PermGroup make_wreath(const PermGroup &base, const PermGroup &top, const Bounds &b)
{
  const std::size_t d = base.degree(), r = top.degree();
  check_degree(d * r, b);
  const std::size_t n = d * r;
  std::vector<Permutation> gens;
  // first block of every top orbit
  std::vector<bool> reached(r, false);
  for (std::size_t start = 0; start < r; ++start) {
    if (reached[start])
      continue;
    std::vector<std::size_t> stack{start};
    reached[start] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto &t : top.generators())
        if (!reached[t[x]]) {
          reached[t[x]] = true;
          stack.push_back(t[x]);
        }
    }
    for (const auto &g : base.generators())
      gens.push_back(shift(g, start * d, n));
  }
  for (const auto &t : top.generators()) {
    std::vector<Point> img(n);
    for (std::size_t blk = 0; blk < r; ++blk)
      for (std::size_t i = 0; i < d; ++i)
        img[blk * d + i] = static_cast<Point>(t[blk] * d + i);
    gens.emplace_back(img);
  }
  if (gens.empty())
    gens.emplace_back(n);
  return PermGroup::from_generators(gens);
}

// Matrix groups over F_q, acting on row vectors from the right.
struct MatrixAction {
  exalg::FqField F;
  std::size_t n;
  bool projective;
  std::vector<std::vector<exalg::Elt>> points;
  std::map<std::vector<exalg::Elt>, std::size_t> index;

  std::vector<exalg::Elt> normalize(std::vector<exalg::Elt> v) const
  {
    if (!projective)
      return v;
    for (auto c : v)
      if (c) {
        exalg::Elt inv = F.inv(c);
        for (auto &e : v)
          e = F.mul(e, inv);
        break;
      }
    return v;
  }

  MatrixAction(exalg::FqField field, std::size_t dim, bool proj)
      : F(std::move(field)), n(dim), projective(proj)
  {
    const std::uint64_t q = F.order();
    std::vector<exalg::Elt> v(n, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
      total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<exalg::Elt>(c % q);
        c /= q;
      }
      auto w = normalize(v);
      if (index.count(w))
        continue;
      index.emplace(w, points.size());
      points.push_back(std::move(w));
    }
  }

  Permutation act(const std::vector<std::vector<exalg::Elt>> &A) const
  {
    std::vector<Point> img(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      std::vector<exalg::Elt> w(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          w[j] = F.add(w[j], F.mul(points[k][i], A[i][j]));
      img[k] = static_cast<Point>(index.at(normalize(w)));
    }
    return Permutation(img);
  }
};

PermGroup make_linear(const json &params, const char *kind, const Bounds &b)
{
  if (!params.is_array() || params.size() != 2)
    throw InvalidArgument(std::string(kind) + " expects [n, q]");
  std::size_t n = as_size(params[0], kind);
  std::size_t q = as_size(params[1], kind);
  if (n < 1)
    throw InvalidArgument(std::string(kind) + " expects n >= 1");
  auto fac = exalg::factorize(q);
  if (fac.size() != 1)
    throw InvalidArgument(std::string(kind) + " expects a prime power q, got " + std::to_string(q));
  const std::string k = kind;
  const bool proj = (k == "psl");
  long double count = 1;
  for (std::size_t i = 0; i < n; ++i)
    count *= static_cast<long double>(q);
  count -= 1;
  if (proj)
    count /= static_cast<long double>(q - 1);
  if (count > static_cast<long double>(std::min<std::size_t>(b.degree, max_degree)))
    throw BoundExceeded(k + " action degree exceeds the bound");
  auto F = exalg::FqField::make(static_cast<std::uint32_t>(fac[0].first),
                                static_cast<unsigned>(fac[0].second));
  MatrixAction act(F, n, proj);
  check_degree(act.points.size(), b);

  std::vector<Permutation> gens;
  auto ident = [&] {
    std::vector<std::vector<exalg::Elt>> A(n, std::vector<exalg::Elt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      A[i][i] = 1;
    return A;
  };
  // transvections I + w^t e_ij over an F_p-basis of F_q
  exalg::Elt w = F.primitive_element();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      exalg::Elt lam = 1;
      for (unsigned t = 0; t < F.degree(); ++t) {
        auto A = ident();
        A[i][j] = lam;
        gens.push_back(act.act(A));
        lam = F.mul(lam, w);
      }
    }
  if (k == "gl" && q > 2) {
    auto A = ident();
    A[0][0] = w;
    gens.push_back(act.act(A));
  }
  if (gens.empty())
    gens.emplace_back(act.points.size());
  return PermGroup::from_generators(gens);
}

PermGroup build(const json &spec, const Bounds &b);

PermGroup build_wreath(const json &w, const Bounds &b)
{
  if (!w.is_object())
    throw InvalidArgument("wreath expects an object");
  if (w.contains("base") && w.contains("top"))
    return make_wreath(build(w.at("base"), b), build(w.at("top"), b), b);
  if (w.contains("cyclic") && w.contains("sym"))
    return make_wreath(make_cyclic(as_size(w.at("cyclic"), "wreath.cyclic"), b),
                       make_sym(as_size(w.at("sym"), "wreath.sym"), b), b);
  throw InvalidArgument("wreath expects {\"cyclic\": m, \"sym\": r} or {\"base\": .., \"top\": ..}");
}

PermGroup build(const json &spec, const Bounds &b)
{
  if (spec.is_string())
    return build(parse_inline_spec(spec.get<std::string>()), b);
  if (!spec.is_object() || spec.empty())
    throw InvalidArgument("group spec must be a JSON object");
  if (spec.contains("generators")) {
    const json &gs = spec.at("generators");
    if (!gs.is_array() || gs.empty())
      throw InvalidArgument("generators must be a nonempty array of cycle strings");
    std::size_t deg = spec.contains("degree") ? as_size(spec.at("degree"), "degree") : 0;
    std::vector<Permutation> gens;
    if (deg == 0) {
      for (const auto &g : gs)
        deg = std::max(deg, Permutation::parse(g.get<std::string>()).degree());
    }
    check_degree(deg, b);
    for (const auto &g : gs) {
      if (!g.is_string())
        throw InvalidArgument("generators must be cycle strings");
      gens.push_back(Permutation::parse(g.get<std::string>(), deg));
    }
    return PermGroup::from_generators(gens);
  }
  if (spec.size() != 1)
    throw InvalidArgument("group spec must have exactly one constructor key");
  const std::string key = spec.begin().key();
  const json &v = spec.begin().value();
  if (key == "sym")
    return make_sym(as_size(v, "sym"), b);
  if (key == "alt")
    return make_alt(as_size(v, "alt"), b);
  if (key == "cyclic")
    return make_cyclic(as_size(v, "cyclic"), b);
  if (key == "dihedral")
    return make_dihedral(as_size(v, "dihedral"), b);
  if (key == "quaternion")
    return make_dicyclic(as_size(v, "quaternion"), b);
  if (key == "product") {
    if (!v.is_array())
      throw InvalidArgument("product expects an array of specs");
    std::vector<PermGroup> fs;
    for (const auto &f : v)
      fs.push_back(build(f, b));
    return make_product(fs, b);
  }
  if (key == "wreath")
    return build_wreath(v, b);
  if (key == "gl" || key == "sl" || key == "psl")
    return make_linear(v, key.c_str(), b);
  if (key == "catalog") {
    const std::string name = v.get<std::string>();
    for (const auto &e : standard_catalog())
      if (e.name == name)
        return build(e.spec, b);
    throw InvalidArgument("unknown catalog entry: " + name);
  }
  throw InvalidArgument("unknown group constructor: " + key);
}

std::vector<std::size_t> parse_ints(std::string_view s)
{
  std::vector<std::size_t> out;
  std::string tok;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("expected comma-separated integers, got '" + std::string(s) + "'");
    out.push_back(std::stoul(tok));
  }
  return out;
}

} // namespace

PermGroup catalog_group(const GroupSpec &spec, const Bounds &b) { return build(spec, b); }

GroupSpec parse_inline_spec(std::string_view text)
{
  if (text.find('*') != std::string_view::npos) {
    json prod = json::array();
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('*', start);
      if (end == std::string_view::npos)
        end = text.size();
      prod.push_back(parse_inline_spec(text.substr(start, end - start)));
      start = end + 1;
    }
    return json{{"product", prod}};
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    for (const auto &e : standard_catalog())
      if (e.name == text)
        return e.spec;
    throw InvalidArgument("unknown catalog group '" + std::string(text) +
                          "' (expected NAME:PARAMS or a catalog entry name)");
  }
  std::string name(text.substr(0, colon));
  auto ints = parse_ints(text.substr(colon + 1));
  auto one = [&]() -> std::size_t {
    if (ints.size() != 1)
      throw InvalidArgument(name + " expects one parameter");
    return ints[0];
  };
  if (name == "sym" || name == "alt" || name == "cyclic" || name == "dihedral" ||
      name == "quaternion")
    return json{{name, one()}};
  if (name == "gl" || name == "sl" || name == "psl") {
    if (ints.size() != 2)
      throw InvalidArgument(name + " expects n,q");
    return json{{name, json::array({ints[0], ints[1]})}};
  }
  if (name == "wreath") {
    if (ints.size() != 2)
      throw InvalidArgument("wreath expects m,r (C_m wr S_r)");
    return json{{"wreath", {{"cyclic", ints[0]}, {"sym", ints[1]}}}};
  }
  throw InvalidArgument("unknown group constructor: " + name);
}

const std::vector<CatalogEntry> &standard_catalog()
{
  static const std::vector<CatalogEntry> cat = [] {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, json spec) { c.push_back({std::move(name), std::move(spec)}); };
    for (int n = 2; n <= 13; ++n)
      add("C" + std::to_string(n), {{"cyclic", n}});
    for (int n = 2; n <= 8; ++n)
      add("S" + std::to_string(n), {{"sym", n}});
    for (int n = 3; n <= 8; ++n)
      add("A" + std::to_string(n), {{"alt", n}});
    for (int n = 3; n <= 12; ++n)
      add("D" + std::to_string(2 * n), {{"dihedral", n}});
    for (int n : {8, 12, 16, 20, 24})
      add("Q" + std::to_string(n), {{"quaternion", n}});
    auto prod = [](std::initializer_list<json> fs) { return json{{"product", json(fs)}}; };
    add("C2xC2", prod({{{"cyclic", 2}}, {{"cyclic", 2}}}));
    add("C2xC4", prod({{{"cyclic", 2}}, {{"cyclic", 4}}}));
    add("C3xC3", prod({{{"cyclic", 3}}, {{"cyclic", 3}}}));
    add("C2xC2xC2", prod({{{"cyclic", 2}}, {{"cyclic", 2}}, {{"cyclic", 2}}}));
    add("C2xC6", prod({{{"cyclic", 2}}, {{"cyclic", 6}}}));
    add("C4xC4", prod({{{"cyclic", 4}}, {{"cyclic", 4}}}));
    add("S3xC2", prod({{{"sym", 3}}, {{"cyclic", 2}}}));
    add("S3xC3", prod({{{"sym", 3}}, {{"cyclic", 3}}}));
    add("S3xS3", prod({{{"sym", 3}}, {{"sym", 3}}}));
    add("A4xC2", prod({{{"alt", 4}}, {{"cyclic", 2}}}));
    add("C2xC3xC3", prod({{{"cyclic", 2}}, {{"cyclic", 3}}, {{"cyclic", 3}}}));
    add("D8xC2", prod({{{"dihedral", 4}}, {{"cyclic", 2}}}));
    add("Q8xC3", prod({{{"quaternion", 8}}, {{"cyclic", 3}}}));
    add("S4xC2", prod({{{"sym", 4}}, {{"cyclic", 2}}}));
    add("A5xC7", prod({{{"alt", 5}}, {{"cyclic", 7}}}));
    add("C2wrS2", {{"wreath", {{"cyclic", 2}, {"sym", 2}}}});
    add("C3wrS2", {{"wreath", {{"cyclic", 3}, {"sym", 2}}}});
    add("C4wrS2", {{"wreath", {{"cyclic", 4}, {"sym", 2}}}});
    add("C2wrS3", {{"wreath", {{"cyclic", 2}, {"sym", 3}}}});
    add("C3wrS3", {{"wreath", {{"cyclic", 3}, {"sym", 3}}}});
    add("C7wrC7", {{"wreath", {{"base", {{"cyclic", 7}}}, {"top", {{"cyclic", 7}}}}}});
    add("GL(2,2)", {{"gl", {2, 2}}});
    add("GL(2,3)", {{"gl", {2, 3}}});
    add("SL(2,3)", {{"sl", {2, 3}}});
    add("SL(2,5)", {{"sl", {2, 5}}});
    add("SL(2,7)", {{"sl", {2, 7}}});
    add("GL(2,4)", {{"gl", {2, 4}}});
    add("GL(2,5)", {{"gl", {2, 5}}});
    add("GL(2,7)", {{"gl", {2, 7}}});
    add("GL(3,2)", {{"gl", {3, 2}}});
    add("PSL(2,5)", {{"psl", {2, 5}}});
    add("PSL(2,7)", {{"psl", {2, 7}}});
    add("PSL(2,8)", {{"psl", {2, 8}}});
    add("PSL(2,9)", {{"psl", {2, 9}}});
    add("PSL(2,11)", {{"psl", {2, 11}}});
    add("PSL(2,13)", {{"psl", {2, 13}}});
    add("PSL(2,16)", {{"psl", {2, 16}}});
    add("PSL(3,3)", {{"psl", {3, 3}}});
    return c;
  }();
  return cat;
}

GroupSpec read_group_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open group file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InvalidArgument("malformed group file " + path + ": " + e.what());
  }
}

json generators_json(const PermGroup &G)
{
  json a = json::array();
  for (const auto &g : G.generators())
    a.push_back(g.to_string());
  return a;
}

} // namespace hhb::permcore
