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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include "hhblocks/criteria/criteria.hpp"
#include "hhblocks/errors.hpp"
#include "hhblocks/exalg/blocks.hpp"
#include "hhblocks/exalg/derivations.hpp"
#include "hhblocks/permcore/catalog.hpp"
#include "hhblocks/verify/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using json = nlohmann::json;
using namespace hhb;
using criteria::Certificate;
using permcore::Permutation;
using permcore::PermGroup;

namespace {

Bounds make_bounds(std::uint64_t enumeration, std::uint64_t algebra)
{
  Bounds b;
  b.enumeration = enumeration;
  b.classes = std::max(b.classes, enumeration);
  b.algebra = algebra;
  return b;
}

PermGroup group_from_text(const std::string &spec_json, const Bounds &b)
{
  return permcore::catalog_group(json::parse(spec_json), b);
}

Permutation element(const PermGroup &G, const std::string &cycles) { return Permutation::parse(cycles, G.degree()); }

std::string cert(const Certificate &c) { return c.to_json().dump(); }

std::string certs(const std::vector<Certificate> &cs)
{
  json a = json::array();
  for (const auto &c : cs)
    a.push_back(c.to_json());
  return a.dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Core of hhblocks: permutation groups, non-Schur criteria and HH^1 of group algebras";

  static py::exception<BoundExceeded> bound_exc(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const BoundExceeded &e) {
      bound_exc(e.what());
    } catch (const json::exception &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Bounds>(m, "Bounds")
      .def(py::init(&make_bounds), py::arg("enumeration") = Bounds{}.enumeration,
           py::arg("algebra") = Bounds{}.algebra)
      .def_readwrite("enumeration", &Bounds::enumeration)
      .def_readwrite("classes", &Bounds::classes)
      .def_readwrite("algebra", &Bounds::algebra)
      .def_readwrite("linear", &Bounds::linear)
      .def_readwrite("defect_sylow", &Bounds::defect_sylow);

  py::class_<PermGroup>(m, "Group")
      .def_property_readonly("order", [](const PermGroup &G) { return G.order(); })
      .def_property_readonly("degree", [](const PermGroup &G) { return G.degree(); })
      .def_property_readonly("generators",
                             [](const PermGroup &G) { return permcore::generators_json(G).get<std::vector<std::string>>(); })
      .def("contains", [](const PermGroup &G, const std::string &x) { return G.contains(element(G, x)); })
      .def("__repr__", [](const PermGroup &G) {
        return "<Group of order " + std::to_string(G.order()) + " on " + std::to_string(G.degree()) + " points>";
      });

  m.def("_group", &group_from_text, py::arg("spec_json"), py::arg("bounds") = Bounds{});
  m.def("_inline_spec", [](const std::string &s) { return permcore::parse_inline_spec(s).dump(); });
  m.def("_catalog", [] {
    json a = json::array();
    for (const auto &e : permcore::standard_catalog())
      a.push_back({{"name", e.name}, {"spec", e.spec}});
    return a.dump();
  });
  m.def("_subgroup", [](const PermGroup &G, const std::vector<std::string> &gens) {
    std::vector<Permutation> ps;
    for (const auto &g : gens)
      ps.push_back(element(G, g));
    return ps.empty() ? PermGroup::trivial(G.degree()) : PermGroup::from_generators(ps);
  });
  m.def("_sylow", [](const PermGroup &G, std::uint64_t p, const Bounds &b) { return permcore::sylow_subgroup(G, p, b); });

  m.def("_is_non_schur", [](const PermGroup &G, const std::string &x, const Bounds &b) {
    return criteria::is_non_schur(G, element(G, x), b);
  });
  m.def("_find_non_schur", [](const PermGroup &G, std::uint64_t p, bool strong, const Bounds &b) {
    return cert(criteria::find_non_schur(G, p, strong ? criteria::NonSchurMode::Strong : criteria::NonSchurMode::Weak, b));
  });
  m.def("_check_sc", [](const PermGroup &G, std::uint64_t p, const Bounds &b) { return cert(criteria::check_SC(G, p, b)); });
  m.def("_prop36_profile",
        [](const PermGroup &G, std::uint64_t p, const Bounds &b) { return certs(criteria::prop36_profile(G, p, b)); });
  m.def("_cor32", [](const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b) {
    return cert(criteria::cor32_check(G, P, p, std::nullopt, b));
  });
  m.def("_theorem_a", [](const PermGroup &G, const PermGroup &P, std::uint64_t p, const Bounds &b) {
    return cert(criteria::theoremA_witness(G, P, p, b));
  });
  m.def("_sn_witness", [](std::size_t n, std::uint64_t p, const std::string &g, const Bounds &b) {
    return cert(criteria::sn_witness(n, p, Permutation::parse(g, n), b));
  });
  m.def("_an_witness", [](std::size_t n, std::uint64_t p, const std::string &g, const Bounds &b) {
    return cert(criteria::an_witness(n, p, Permutation::parse(g, n), b));
  });
  m.def("_replay", [](const std::string &cert_json, const Bounds &b) {
    auto r = criteria::replay(Certificate::from_json(json::parse(cert_json)), b);
    return json{{"ok", r.ok}, {"message", r.message}, {"facts", r.facts}}.dump();
  });

  m.def("_hh1_dim", [](const PermGroup &G, std::uint32_t p, unsigned degree, const Bounds &b) {
    return exalg::hh1_dim(exalg::group_algebra(G, exalg::FqField::make(p, degree), b), b);
  });
  m.def("_blocks", [](const PermGroup &G, std::uint64_t p, unsigned degree, const Bounds &b) {
    const unsigned d = degree ? degree : exalg::splitting_degree(G, p, b);
    json a = json::array();
    for (const auto &B : exalg::block_decomposition(G, exalg::FqField::make(static_cast<std::uint32_t>(p), d), true, b))
      a.push_back({{"dimension", B.dimension},
                   {"principal", B.principal},
                   {"defect", B.defect},
                   {"defect_group", permcore::generators_json(B.defect_group)},
                   {"hh1", B.hh1}});
    return a.dump();
  });

  m.def("_check", [](const std::string &name, const PermGroup &G, std::uint64_t p, const Bounds &b) {
    verify::VerificationReport r;
    if (name == "centralizer_decomposition")
      r = verify::centralizer_decomposition_check(G, p, b);
    else if (name == "blockwise")
      r = verify::blockwise_check(G, p, b);
    else if (name == "thm37_consistency")
      r = verify::thm37_consistency_check(G, p, b);
    else if (name == "mv_degree1")
      r = verify::mv_degree1_check(G, permcore::sylow_subgroup(G, p, b), exalg::FqField::make(static_cast<std::uint32_t>(p)), b);
    else if (name == "prop31_equivalence")
      r = verify::prop31_equivalence_check(G, permcore::sylow_subgroup(G, p, b), p, b);
    else if (name == "lemma63")
      r = verify::lemma63_check(G, exalg::Cocycle(G, exalg::FqField::make(static_cast<std::uint32_t>(p)), b), p, b);
    else if (name == "large_prime_non_schur")
      r = verify::large_prime_non_schur_check(G, b);
    else
      throw InvalidArgument("unknown check '" + name + "'");
    return r.to_json().dump();
  });
  m.def("_run_suite", [](const std::string &manifest_json, std::uint64_t max_order, const Bounds &b) {
    auto entries = manifest_json.empty() ? verify::default_manifest(max_order)
                                         : verify::parse_manifest(json::parse(manifest_json));
    json a = json::array();
    for (const auto &r : verify::run_suite(entries, b))
      a.push_back(r.to_json());
    return a.dump();
  });
}
