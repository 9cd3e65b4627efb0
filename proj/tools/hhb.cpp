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

// hhb: command-line front end for the criteria and verification suites.

#include "hhblocks/criteria/criteria.hpp"
#include "hhblocks/errors.hpp"
#include "hhblocks/exalg/blocks.hpp"
#include "hhblocks/exalg/field.hpp"
#include "hhblocks/permcore/catalog.hpp"
#include "hhblocks/verify/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace hhb;
using criteria::Certificate;
using criteria::Verdict;
using permcore::PermGroup;

namespace {

enum Exit { kOk = 0, kInconclusive = 1, kInput = 2, kBound = 3, kInternal = 4 };

struct RunConfig {
  std::string catalog;
  std::string group_file;
  std::string prime = "all";
  unsigned field_degree = 0;
  std::uint64_t bound_enum = Bounds{}.enumeration;
  std::uint64_t bound_alg = Bounds{}.algebra;
  std::string out;
  std::string format = "json";
  bool timing = false;
  // verify_suite
  std::string manifest;
  std::uint64_t max_order = 48;
  // replay
  std::vector<std::string> files;

  Bounds bounds() const
  {
    Bounds b;
    b.enumeration = bound_enum;
    b.classes = std::max(b.classes, bound_enum);
    b.algebra = bound_alg;
    return b;
  }
};

PermGroup load_group(const RunConfig &cfg, const Bounds &b)
{
  const permcore::GroupSpec spec =
      cfg.catalog.empty() ? permcore::read_group_file(cfg.group_file) : permcore::parse_inline_spec(cfg.catalog);
  return permcore::catalog_group(spec, b);
}

std::vector<std::uint64_t> primes_for(const RunConfig &cfg, const PermGroup &G)
{
  std::vector<std::uint64_t> out;
  if (cfg.prime == "all") {
    for (auto [p, e] : exalg::factorize(G.order()))
      out.push_back(p);
    return out;
  }
  std::stringstream ss(cfg.prime);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(tok, &used);
      if (used != tok.size())
        p = 0;
    } catch (const std::exception &) {
    }
    if (!exalg::is_prime(p))
      throw InvalidArgument("--prime: '" + tok + "' is not a prime");
    out.push_back(p);
  }
  return out;
}

void write_file(const fs::path &path, const std::string &text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw InvalidArgument("cannot write " + path.string());
  f << text;
}

std::string slug(const std::string &s)
{
  std::string out;
  for (char c : s)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::string witness_brief(const json &w)
{
  if (!w.is_object() || !w.contains("elements"))
    return "";
  std::string out;
  for (const auto &[key, x] : w["elements"].items())
    if (x.is_string())
      out += (out.empty() ? "" : ", ") + key + " = " + x.get<std::string>();
  return out;
}

/// Collects certificates for one prime; each is replayed again before it is
/// written, so a "holds" entry always comes with a witness that checks out.
class Recorder {
public:
  Recorder(const std::string &prefix, const Bounds &b) : prefix_(prefix), b_(b) {}

  void add(const Certificate &c, const std::string &tag = "")
  {
    auto r = criteria::replay(c, b_);
    if (!r.ok)
      throw InternalError("certificate " + criteria::criterion_name(c.criterion) + " does not replay: " + r.message);
    const std::string name = criteria::criterion_name(c.criterion);
    const std::string file = prefix_ + (tag.empty() ? "" : tag + "_") + slug(name) + ".json";
    json entry = {{"criterion", name}, {"verdict", criteria::verdict_name(c.verdict)}, {"file", file}};
    if (!tag.empty())
      entry["scope"] = tag;
    const std::string brief = witness_brief(c.witness);
    if (!brief.empty())
      entry["witness"] = brief;
    if (c.verdict == Verdict::Inconclusive)
      inconclusive_ = true;
    summary_.push_back(entry);
    files_.emplace_back(file, c.to_json().dump(2) + "\n");
  }

  json summary() const { return summary_; }
  const std::vector<std::pair<std::string, std::string>> &files() const { return files_; }
  bool inconclusive() const { return inconclusive_; }

private:
  std::string prefix_;
  Bounds b_;
  json summary_ = json::array();
  std::vector<std::pair<std::string, std::string>> files_;
  bool inconclusive_ = false;
};

json blocks_summary(const PermGroup &G, std::uint64_t p, const RunConfig &cfg, const Bounds &b, Recorder &rec)
{
  const unsigned m = cfg.field_degree ? cfg.field_degree : exalg::splitting_degree(G, p, b);
  const auto F = exalg::FqField::make(static_cast<std::uint32_t>(p), m);
  const auto blocks = exalg::block_decomposition(G, F, true, b);
  json list = json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto &B = blocks[i];
    json e = {{"index", i},
              {"principal", B.principal},
              {"dimension", B.dimension},
              {"defect", B.defect},
              {"defect_group", {{"order", B.defect_group.order()},
                                {"abelian", B.defect_group.is_abelian()},
                                {"exponent", permcore::exponent(B.defect_group)},
                                {"generators", permcore::generators_json(B.defect_group)}}},
              {"hh1", B.hh1}};
    if (B.defect > 0) {
      const std::string tag = "block" + std::to_string(i);
      auto cor = criteria::cor32_check(G, B.defect_group, p, std::nullopt, b);
      auto thA = criteria::theoremA_witness(G, B.defect_group, p, b);
      rec.add(cor, tag);
      rec.add(thA, tag);
      e["cor32"] = criteria::verdict_name(cor.verdict);
      e["theoremA"] = criteria::verdict_name(thA.verdict);
    }
    list.push_back(std::move(e));
  }
  return {{"field", {{"p", p}, {"m", m}}}, {"count", blocks.size()}, {"blocks", list}};
}

std::string render_text(const json &s)
{
  std::ostringstream o;
  o << "group: order " << s["group"]["order"] << ", degree " << s["group"]["degree"] << "\n";
  for (const auto &pp : s["primes"]) {
    o << "p = " << pp["p"] << "\n";
    for (const auto &c : pp["criteria"]) {
      o << "  " << (c.contains("scope") ? c["scope"].get<std::string>() + " " : "") << c["criterion"].get<std::string>()
        << ": " << c["verdict"].get<std::string>();
      if (c.contains("witness"))
        o << "  (" << c["witness"].get<std::string>() << ")";
      o << "\n";
    }
    const auto &bl = pp["blocks"];
    if (bl.contains("note")) {
      o << "  blocks: " << bl["note"].get<std::string>() << "\n";
      continue;
    }
    o << "  blocks over F_" << bl["field"]["p"] << "^" << bl["field"]["m"] << ": " << bl["count"] << "\n";
    for (const auto &B : bl["blocks"]) {
      const auto &D = B["defect_group"];
      o << "    block " << B["index"] << (B["principal"] == true ? " (principal)" : "") << ": dim "
        << B["dimension"] << ", defect group of order " << D["order"] << " ("
        << (D["abelian"] == true ? "abelian" : "nonabelian") << ", exponent " << D["exponent"] << "), HH1 = "
        << B["hh1"];
      if (B.contains("cor32"))
        o << ", cor32 " << B["cor32"].get<std::string>() << ", theoremA " << B["theoremA"].get<std::string>();
      o << "\n";
    }
  }
  return o.str();
}

void emit(const RunConfig &cfg, const std::string &name, const json &j, const std::string &text)
{
  const std::string body = cfg.format == "text" ? text : j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  write_file(fs::path(cfg.out) / (name + (cfg.format == "text" ? ".txt" : ".json")), body);
  if (cfg.format == "text")
    write_file(fs::path(cfg.out) / (name + ".json"), j.dump(2) + "\n");
}

int analyze(const RunConfig &cfg)
{
  const Bounds b = cfg.bounds();
  const PermGroup G = load_group(cfg, b);
  const auto primes = primes_for(cfg, G);
  json summary = {{"group", criteria::group_json(G)}, {"primes", json::array()}};
  summary["group"]["order"] = G.order();
  bool inconclusive = false, bound_hit = false;
  std::vector<std::pair<std::string, std::string>> files;

  for (auto p : primes) {
    Recorder rec("p" + std::to_string(p) + "_", b);
    json pp = {{"p", p}};
    try {
      rec.add(criteria::find_non_schur(G, p, criteria::NonSchurMode::Strong, b));
      rec.add(criteria::find_non_schur(G, p, criteria::NonSchurMode::Weak, b));
      rec.add(criteria::check_SC(G, p, b));
      if (G.order() % p == 0) {
        for (const auto &c : criteria::prop36_profile(G, p, b))
          rec.add(c);
        pp["blocks"] = blocks_summary(G, p, cfg, b, rec);
      } else {
        pp["blocks"] = {{"note", "p does not divide |G|: the group algebra is semisimple"}};
      }
    } catch (const BoundExceeded &e) {
      bound_hit = true;
      pp["bound_exceeded"] = e.what();
      if (!pp.contains("blocks"))
        pp["blocks"] = {{"note", std::string("not computed: ") + e.what()}};
    }
    pp["criteria"] = rec.summary();
    inconclusive = inconclusive || rec.inconclusive();
    files.insert(files.end(), rec.files().begin(), rec.files().end());
    summary["primes"].push_back(std::move(pp));
  }

  if (!cfg.out.empty()) {
    fs::create_directories(cfg.out);
    for (const auto &[name, body] : files)
      write_file(fs::path(cfg.out) / name, body);
  }
  emit(cfg, "summary", summary, render_text(summary));
  if (bound_hit) {
    std::cerr << "hhb: a bound was exceeded; see bound_exceeded in the summary\n";
    return kBound;
  }
  return inconclusive ? kInconclusive : kOk;
}

int verify_suite(const RunConfig &cfg)
{
  const Bounds b = cfg.bounds();
  const auto entries = cfg.manifest.empty() ? verify::default_manifest(cfg.max_order) : verify::read_manifest(cfg.manifest);
  const auto reports = verify::run_suite(entries, b);
  json arr = json::array();
  std::ostringstream text;
  std::vector<std::string> failing;
  std::size_t skipped = 0;
  for (const auto &r : reports) {
    arr.push_back(r.to_json(cfg.timing));
    std::string id = r.check + "/" + r.inputs.value("entry", "?");
    if (r.inputs.contains("p"))
      id += "/p=" + std::to_string(r.inputs["p"].get<std::uint64_t>());
    text << r.verdict() << " " << id;
    if (cfg.timing)
      text << " " << r.millis << "ms";
    text << "\n";
    if (r.skipped)
      ++skipped;
    else if (!r.pass)
      failing.push_back(id);
  }
  text << reports.size() << " checks: " << reports.size() - skipped - failing.size() << " passed, " << failing.size()
       << " failed, " << skipped << " skipped\n";
  if (!cfg.out.empty())
    fs::create_directories(cfg.out);
  emit(cfg, "report", {{"reports", arr}}, text.str());
  for (const auto &id : failing)
    std::cerr << "FAILED " << id << "\n";
  return failing.empty() ? kOk : kInconclusive;
}

int replay_files(const RunConfig &cfg)
{
  const Bounds b = cfg.bounds();
  bool all = true;
  for (const auto &path : cfg.files) {
    std::ifstream in(path);
    if (!in)
      throw InvalidArgument("cannot open " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error &e) {
      throw InvalidArgument(path + ": " + e.what());
    }
    auto r = criteria::replay(Certificate::from_json(j), b);
    std::cout << (r.ok ? "ok " : "FAILED ") << path << (r.ok ? "" : ": " + r.message) << "\n";
    all = all && r.ok;
  }
  return all ? kOk : kInconclusive;
}

int list_catalog()
{
  for (const auto &e : permcore::standard_catalog())
    std::cout << e.name << "\t" << e.spec.dump() << "\n";
  return kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"hhb: non-Schur criteria and HH^1 of group algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto bounds = [&](CLI::App *sub) {
    sub->add_option("--bound-enum", cfg.bound_enum, "Largest group enumerated element by element")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bound-alg", cfg.bound_alg, "Largest group order for group algebras")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output directory");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", cfg.timing, "Record running times (output is then not reproducible)");
  };

  auto *an = app.add_subcommand("analyze", "Run every criterion and the block analysis on one group");
  auto *cat = an->add_option("--catalog", cfg.catalog, "Inline group spec, e.g. sym:4 or GL(2,3)");
  auto *file = an->add_option("--group", cfg.group_file, "JSON group specification file")->check(CLI::ExistingFile);
  cat->excludes(file);
  file->excludes(cat);
  an->add_option("--prime", cfg.prime, "Prime, comma-separated primes, or all")->capture_default_str();
  an->add_option("--field-degree", cfg.field_degree, "Degree of the coefficient field over F_p (default: splitting)")
      ->check(CLI::PositiveNumber);
  bounds(an);

  auto *vs = app.add_subcommand("verify_suite", "Run the verification grid");
  vs->add_option("--manifest", cfg.manifest, "Manifest file (default: catalog groups up to --max-order)")
      ->check(CLI::ExistingFile);
  vs->add_option("--max-order", cfg.max_order, "Largest order in the default manifest")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds(vs);

  auto *rp = app.add_subcommand("replay", "Re-check certificate files");
  rp->add_option("files", cfg.files, "Certificate JSON files")->required();
  rp->add_option("--bound-enum", cfg.bound_enum)->check(CLI::PositiveNumber);

  auto *ls = app.add_subcommand("catalog", "List the standard catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kInput);
  }

  try {
    if (*an) {
      if (cfg.catalog.empty() && cfg.group_file.empty())
        throw InvalidArgument("analyze needs --catalog or --group");
      return analyze(cfg);
    }
    if (*vs)
      return verify_suite(cfg);
    if (*rp)
      return replay_files(cfg);
    if (*ls)
      return list_catalog();
  } catch (const InvalidArgument &e) {
    std::cerr << "hhb: input error: " << e.what() << "\n";
    return kInput;
  } catch (const BoundExceeded &e) {
    std::cerr << "hhb: bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const json::exception &e) {
    std::cerr << "hhb: input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception &e) {
    std::cerr << "hhb: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
