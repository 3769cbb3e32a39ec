// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "fanlab/corpus.hpp"
#include "fanlab/error.hpp"
#include "fanlab/exactlin.hpp"
#include "fanlab/fan.hpp"
#include "fanlab/gammasig.hpp"
#include "fanlab/istheory.hpp"
#include "fanlab/json_io.hpp"
#include "fanlab/parallel.hpp"
#include "fanlab/polymat.hpp"
#include "fanlab/structure.hpp"

namespace fanlab::cli {
namespace {

using io::Json;

Json subspace_json(const exactlin::Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  j["basis"] = Json::array();
  for (const auto& v : s.basis()) j["basis"].push_back(io::rat_vec_to_json(v));
  return j;
}

Json tuple_json(const polymat::ExponentTuple& t) { return Json(t); }

// 1-based digit string of a permutation, as accepted by --perm.
std::string perm_string(const polymat::Permutation& pi) {
  std::string s;
  for (int e : pi) s += std::to_string(e + 1) + (pi.size() > 9 ? "," : "");
  if (pi.size() > 9) s.pop_back();
  return s;
}

polymat::Permutation parse_perm(const std::string& text, int n) {
  polymat::Permutation pi;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        pi.push_back(std::stoi(tok) - 1);
      } catch (const std::exception&) {
        throw SchemaError("bad permutation entry '" + tok + "'");
      }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw SchemaError("bad permutation '" + text + "'");
      pi.push_back(c - '1');
    }
  }
  std::vector<int> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(pi.size()) != n || sorted != polymat::identity_permutation(n))
    throw SchemaError("'" + text + "' is not a permutation of 1.." + std::to_string(n));
  return pi;
}

fan::Cone parse_cone(const std::string& text) {
  fan::Cone c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    try {
      c.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw SchemaError("bad ray index '" + tok + "'");
    }
  std::sort(c.begin(), c.end());
  return c;
}

fan::Fan load_fan(const std::string& path) { return io::fan_from_json(io::read_json_file(path)); }

// Loads a fan and fails with exit code 1 unless it validates.
fan::Fan load_valid_fan(const std::string& path) {
  fan::Fan f = load_fan(path);
  const fan::ValidationReport rep = fan::validate(f);
  if (!rep.valid()) {
    const fan::Check* c = rep.failure();
    throw PreconditionError("fan fails check " + c->name + ": " + c->witness);
  }
  return f;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return !x.is_structured(); });
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (!v.is_structured() || (v.is_array() && scalar_array(v))) {
        out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        out << pad << it.key() << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << v.dump() << '\n';
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

void emit(const Json& j, bool pretty, std::ostream& out) {
  if (pretty) render_text(j, out, 0);
  else out << j.dump(2) << '\n';
}

Json validate_report(const fan::Fan& f, bool& all_pass) {
  Json j;
  const fan::ValidationReport rep = fan::validate(f);
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    j["checks"].push_back(cj);
  }
  j["complete"] = rep.complete;
  all_pass = rep.valid();
  if (!rep.valid()) return j;
  const fan::FlagReport fr = fan::is_flag(f);
  j["flag"] = {{"pass", fr.flag}};
  if (!fr.flag) j["flag"]["witness"] = io::cone_to_json(fr.witness);
  const fan::LocalConvexityReport lc = fan::is_locally_convex(f);
  j["locally_convex"] = {{"pass", lc.locally_convex}};
  if (!lc.locally_convex) {
    j["locally_convex"]["ray"] = lc.ray;
    j["locally_convex"]["wall"] = io::cone_to_json(lc.wall);
    j["locally_convex"]["value"] = lc.value.get_str();
  }
  all_pass = fr.flag && lc.locally_convex;
  return j;
}

Json signature_report(const fan::Fan& f, int threads) {
  const gammasig::PredicateReport pr = gammasig::signature_zero_predicate(f, threads);
  Json j;
  j["f"] = pr.signature.f;
  j["h"] = pr.signature.h;
  j["gamma"] = pr.signature.gamma;
  j["signature"] = pr.signature.signature;
  j["signed_top_gamma"] = pr.signature.signed_top_gamma;
  j["predicate"] = pr.predicate;
  j["agrees"] = pr.agrees;
  j["witnesses"] = Json::array();
  for (const auto& w : pr.suite.witnesses)
    j["witnesses"].push_back({{"p", w.p}, {"cone", io::cone_to_json(w.cone)}, {"tuple", tuple_json(w.tuple)}});
  j["with_special_pairs"] = {{"predicate", pr.full_predicate},
                             {"agrees", pr.full_agrees},
                             {"witness_count", pr.full_suite.witnesses.size()}};
  return j;
}

std::vector<fan::Cone> pcones_up_to(const fan::Fan& f, std::optional<int> p_max) {
  const int cap = f.dim() / 2;
  if (p_max && (*p_max < 1 || *p_max > cap))
    throw PreconditionError("--p-max must be between 1 and d/2 = " + std::to_string(cap));
  const int top = p_max.value_or(cap);
  std::vector<fan::Cone> out;
  for (int p = 1; p <= top; ++p) {
    auto faces = fan::faces_of_size(f, p);
    out.insert(out.end(), faces.begin(), faces.end());
  }
  return out;
}

Json special_rays_report(const fan::Fan& f, std::optional<int> p_max, int threads) {
  const std::vector<fan::Cone> pcones = pcones_up_to(f, p_max);
  std::vector<Json> per(pcones.size());
  parallel_for(
      pcones.size(),
      [&](std::size_t i) {
        const fan::Cone& pc = pcones[i];
        Json arr = Json::array();
        for (unsigned mask = 1; mask < (1u << pc.size()); ++mask) {
          fan::Cone a;
          for (std::size_t k = 0; k < pc.size(); ++k)
            if (mask >> k & 1) a.push_back(pc[k]);
          const structure::SpecialRayReport r = structure::special_rays(f, pc, a);
          Json e;
          e["pcone"] = io::cone_to_json(pc);
          e["subset"] = io::cone_to_json(a);
          e["special"] = r.special;
          e["non_special"] = r.non_special;
          e["subspace"] = subspace_json(r.subspace);
          e["polytope_dim"] = r.polytope_dim;
          e["uniform_count"] = r.uniform_count;
          e["crossing_violations"] = r.crossing_violations;
          e["cross_condition_violations"] = r.cross_condition_violations;
          arr.push_back(std::move(e));
        }
        per[i] = std::move(arr);
      },
      threads);
  Json j;
  j["entries"] = Json::array();
  int uniform_fail = 0, crossing = 0, cross_cond = 0;
  for (const Json& arr : per)
    for (const Json& e : arr) {
      uniform_fail += !e["uniform_count"].get<bool>();
      crossing += e["crossing_violations"].get<int>();
      cross_cond += e["cross_condition_violations"].get<int>();
      j["entries"].push_back(e);
    }
  j["summary"] = {{"entries", j["entries"].size()},
                  {"non_uniform_counts", uniform_fail},
                  {"crossing_violations", crossing},
                  {"cross_condition_violations", cross_cond}};
  return j;
}

Json suspensions_report(const fan::Fan& f) {
  Json j = Json::array();
  for (int r = 0; r < f.num_rays(); ++r) {
    const structure::SuspensionDecomposition s = structure::suspension_structure(f, r);
    Json e;
    e["ray"] = r;
    e["core"] = subspace_json(s.core);
    e["core_rays"] = s.core_rays;
    e["pairs"] = s.pairs;
    e["residual"] = s.residual;
    e["link_flat"] = static_cast<int>(s.core.dim()) == f.dim() - 1;
    e["valid"] = s.valid();
    j.push_back(e);
  }
  return j;
}

Json four_cycles_report(const fan::Fan& f) {
  const structure::AllCyclesReport r = structure::all_rays_in_4cycles(f);
  Json j;
  j["all_witnessed"] = r.all_witnessed;
  j["rays"] = Json::array();
  for (const auto& w : r.rays) {
    Json e;
    e["ray"] = w.ray;
    e["witnessed"] = w.witnessed;
    if (w.witnessed) {
      e["wall"] = io::cone_to_json(w.wall);
      e["cycle"] = w.cycle.rays;
      e["induced"] = structure::is_induced_four_cycle(f, w.wall, w.ray, w.cycle);
    } else {
      e["reason"] = w.reason;
    }
    j["rays"].push_back(e);
  }
  j["cycles"] = r.distinct_cycles;
  return j;
}

Json blocks_report(const fan::Fan& f) {
  const structure::BlockCoverReport r = structure::special_block_cover(f);
  Json j;
  j["blocks"] = Json::array();
  for (const auto& b : r.blocks)
    j["blocks"].push_back({{"gamma", b.gamma},
                           {"centers", b.centers},
                           {"cone_part", b.cone_part},
                           {"pairs", b.pairs},
                           {"join", b.join}});
  j["centers_form_joins"] = r.centers_form_joins;
  j["non_sharing"] = r.non_sharing;
  j["counterexamples"] = r.counterexamples;
  return j;
}

Json dichotomy_report(const fan::Fan& f, std::optional<int> p_max) {
  Json j = Json::array();
  for (const fan::Cone& pc : pcones_up_to(f, p_max)) {
    if (pc.size() < 2) continue;
    const structure::DichotomyReport r = structure::pcone_dichotomy(f, pc);
    j.push_back({{"pcone", io::cone_to_json(pc)},
                 {"tag", r.tag},
                 {"pairwise_non_special", r.pairwise_non_special},
                 {"vanishing", r.vanishing},
                 {"dims", r.dims},
                 {"summed_polytope_dim", r.summed_polytope_dim},
                 {"flat_subspace", r.flat_subspace},
                 {"all_non_special", r.all_non_special}});
  }
  return j;
}

Json cross_report(const fan::Fan& f) {
  const structure::CrossPolytopeReport r = structure::detect_cross_polytope(f);
  Json j;
  j["cross"] = r.cross;
  j["pairs"] = r.pairs;
  j["cones_certified"] = r.cones_certified;
  j["nonvanishing"] = r.nonvanishing;
  return j;
}

Json pdover2_report(const fan::Fan& f) {
  if (f.dim() % 2 != 0) throw PreconditionError("pdover2: dimension is odd");
  Json j = Json::array();
  for (const fan::Cone& c : fan::faces_of_size(f, f.dim() / 2)) {
    Json e;
    e["tuple"] = io::cone_to_json(c);
    e["certificates"] = Json::array();
    for (const auto& cert : structure::pdover2_certificates(f, c))
      e["certificates"].push_back({{"ordering", cert.ordering},
                                   {"running_dims", cert.running_dims},
                                   {"k", cert.k},
                                   {"containments_checked", cert.containments_checked}});
    j.push_back(e);
  }
  return j;
}

Json trace_json(const polymat::DimFunction& b, const polymat::AlgorithmTrace& t, bool ledgers) {
  Json j;
  j["perm"] = perm_string(t.pi);
  j["a"] = t.a;
  j["totals"] = t.totals;
  j["transitions"] = Json::array();
  for (const auto& tr : t.transitions)
    j["transitions"].push_back({{"position", tr.position},
                                {"element", tr.element + 1},
                                {"value", tr.value},
                                {"gap", tr.gap},
                                {"parity_fix", tr.parity_fix},
                                {"mu", tr.mu}});
  if (t.degenerate) {
    j["degenerate"] = true;
    j["failure"] = t.failure;
    j["compatible"] = false;
    return j;
  }
  const polymat::CompatReport cr = polymat::check_output_compat(b, t, ledgers);
  j["compatible"] = cr.compatible;
  if (!cr.compatible) j["first_failure"] = polymat::subset_digits(cr.first_failure);
  j["counting_condition_holds"] = cr.counting_condition_holds;
  if (ledgers) {
    j["ledgers"] = Json::array();
    for (const auto& l : cr.ledgers) {
      Json lj;
      lj["subset"] = polymat::subset_digits(l.subset);
      lj["ok"] = l.ok;
      lj["negative_steps"] = l.negative_steps;
      lj["cushion"] = l.cushion;
      lj["entries"] = Json::array();
      for (const auto& e : l.entries)
        lj["entries"].push_back({{"element", e.element + 1},
                                 {"change", e.change},
                                 {"running", e.running},
                                 {"transition", e.transition}});
      j["ledgers"].push_back(lj);
    }
  }
  const polymat::ExtremeComparison ec = polymat::compare_to_extreme(b, t);
  j["extreme_comparison"] = {{"holds", ec.holds}, {"holds_previous_block_rule", ec.holds_prev}};
  return j;
}

Json oddtuple_report(const polymat::DimFunction& b, const std::vector<polymat::Permutation>& perms,
                     bool oracle, bool ledgers) {
  polymat::require_polymatroid(b, "oddtuple");
  Json j;
  j["N"] = b.n();
  j["runs"] = Json::array();
  std::vector<polymat::ExponentTuple> compatible;
  int incompatible = 0;
  for (const auto& pi : perms) {
    const polymat::AlgorithmTrace t = polymat::odd_tuple_algorithm(b, pi);
    Json tj = trace_json(b, t, ledgers);
    if (tj["compatible"].get<bool>()) compatible.push_back(t.a);
    else ++incompatible;
    j["runs"].push_back(std::move(tj));
  }
  j["compatible_runs"] = compatible.size();
  j["incompatible_runs"] = incompatible;
  if (oracle) {
    const auto brute = polymat::brute_force_odd_tuples(b);
    j["oracle"] = brute;
    bool agree = true;
    for (const auto& a : compatible)
      if (std::find(brute.begin(), brute.end(), a) == brute.end()) agree = false;
    if (brute.empty() && !compatible.empty()) agree = false;
    j["agree"] = agree;
    // Only meaningful for --all-perms: an odd tuple exists but no run found one.
    j["missed"] = !brute.empty() && compatible.empty();
  }
  return j;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw SchemaError("cannot write " + path.string());
  f << j.dump(2) << '\n';
  if (!f) throw SchemaError("write failed for " + path.string());
}

polymat::DimFunction triple(const std::vector<int>& v) {
  // v = b_1, b_2, b_3, b_12, b_13, b_23, b_123
  return polymat::DimFunction(3, {0, v[0], v[1], v[3], v[2], v[4], v[5], v[6]});
}

Json corpus_build(const std::string& dir) {
  std::filesystem::create_directories(dir);
  Json written = Json::array();
  for (const auto& nf : corpus::bundled()) {
    Json j;
    j["name"] = nf.name;
    const Json body = io::fan_to_json(nf.fan);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    write_json(std::filesystem::path(dir) / (nf.name + ".json"), j);
    written.push_back(nf.name + ".json");
  }
  const std::vector<std::pair<std::string, polymat::DimFunction>> dimfns = {
      {"modular-triple", triple({3, 3, 3, 6, 6, 6, 9})},
      {"incompat-triple", triple({2, 3, 3, 5, 5, 5, 7})},
      {"p3-part1-triple", triple({4, 4, 4, 7, 7, 7, 9})},
      {"p3-part2-triple", triple({3, 4, 4, 7, 7, 7, 9})},
      {"parity-mismatch", polymat::DimFunction(2, {0, 2, 2, 3})},
  };
  for (const auto& [name, b] : dimfns) {
    write_json(std::filesystem::path(dir) / (name + ".json"), io::dimfn_to_json(b));
    written.push_back(name + ".json");
  }
  return {{"directory", dir}, {"written", written}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric fan structure and odd exponent tuple analysis", "fanlab"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool pretty = false;
  int threads = 0;
  app.add_flag("--pretty", pretty, "Render the report as indented text instead of JSON");
  app.add_option("--threads", threads, "Worker threads (default: FANLAB_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);

  std::string fan_file;
  auto* validate = app.add_subcommand("validate", "Validate a fan and test flagness and local convexity");
  validate->add_option("fan", fan_file, "Fan JSON file")->required();

  auto* signature = app.add_subcommand("signature", "f, h, gamma vectors, signature and the vanishing suite");
  signature->add_option("fan", fan_file, "Fan JSON file")->required();

  std::string structure_cmd;
  std::optional<int> p_max;
  auto* structure_app = app.add_subcommand("structure", "Structural analyses of a fan");
  structure_app
      ->add_option("analysis", structure_cmd,
                   "special-rays, suspensions, four-cycles, blocks, dichotomy, cross-polytope or pdover2")
      ->required()
      ->check(CLI::IsMember({"special-rays", "suspensions", "four-cycles", "blocks", "dichotomy",
                             "cross-polytope", "pdover2"}));
  structure_app->add_option("fan", fan_file, "Fan JSON file")->required();
  structure_app->add_option("--p-max", p_max, "Largest cone size to enumerate (at most d/2)");

  std::string dimfn_file, perm_text;
  bool all_perms = false, oracle = false, ledgers = false;
  auto* oddtuple = app.add_subcommand("oddtuple", "Run the odd exponent tuple algorithm");
  oddtuple->add_option("dimfn", dimfn_file, "Dimension function JSON file")->required();
  auto* perm_opt = oddtuple->add_option("--perm", perm_text, "Permutation as 1-based digits, e.g. 213");
  auto* all_opt = oddtuple->add_flag("--all-perms", all_perms, "Run every permutation");
  perm_opt->excludes(all_opt);
  oddtuple->add_flag("--oracle", oracle, "Compare with brute-force enumeration");
  oddtuple->add_flag("--ledgers", ledgers, "Include per-subset ledgers");

  std::string pcone_text, subset_text;
  auto* conormal = app.add_subcommand("conormal", "Restricted conormal divisor and its polytope");
  conormal->add_option("fan", fan_file, "Fan JSON file")->required();
  conormal->add_option("--pcone", pcone_text, "Comma separated ray indices")->required();
  conormal->add_option("--subset", subset_text, "Comma separated subset of the pcone (default: all)");

  std::string divisor_file;
  auto* nef = app.add_subcommand("nef", "Nef test and polytope of a divisor");
  nef->add_option("fan", fan_file, "Fan JSON file")->required();
  nef->add_option("divisor", divisor_file, "Divisor JSON file")->required();

  std::string corpus_dir, left_file, right_file, out_file;
  auto* corpus_app = app.add_subcommand("corpus", "Corpus builder");
  corpus_app->require_subcommand(1);
  auto* build = corpus_app->add_subcommand("build", "Write the bundled corpus");
  build->add_option("dir", corpus_dir, "Output directory")->required();
  auto* product = corpus_app->add_subcommand("product", "Product of two fans");
  product->add_option("left", left_file, "Fan JSON file")->required();
  product->add_option("right", right_file, "Fan JSON file")->required();
  product->add_option("out", out_file, "Output JSON file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fanlab: " << e.what() << '\n';
    return 2;
  }
  if (threads <= 0) threads = default_threads();

  try {
    Json report;
    int code = 0;
    if (*validate) {
      bool pass = false;
      report = validate_report(load_fan(fan_file), pass);
      code = pass ? 0 : 1;
    } else if (*signature) {
      report = signature_report(load_valid_fan(fan_file), threads);
    } else if (*structure_app) {
      const fan::Fan f = load_valid_fan(fan_file);
      if (structure_cmd == "special-rays") report = special_rays_report(f, p_max, threads);
      else if (structure_cmd == "suspensions") report = suspensions_report(f);
      else if (structure_cmd == "four-cycles") report = four_cycles_report(f);
      else if (structure_cmd == "blocks") report = blocks_report(f);
      else if (structure_cmd == "dichotomy") report = dichotomy_report(f, p_max);
      else if (structure_cmd == "cross-polytope") report = cross_report(f);
      else report = pdover2_report(f);
    } else if (*oddtuple) {
      const polymat::DimFunction b = io::dimfn_from_json(io::read_json_file(dimfn_file));
      std::vector<polymat::Permutation> perms;
      if (all_perms) {
        polymat::Permutation pi = polymat::identity_permutation(b.n());
        do perms.push_back(pi);
        while (std::next_permutation(pi.begin(), pi.end()));
      } else {
        perms.push_back(perm_text.empty() ? polymat::identity_permutation(b.n())
                                          : parse_perm(perm_text, b.n()));
      }
      report = oddtuple_report(b, perms, oracle, ledgers);
      if (oracle && !report["agree"].get<bool>()) code = 1;
    } else if (*conormal) {
      const fan::Fan f = load_valid_fan(fan_file);
      const fan::Cone pc = parse_cone(pcone_text);
      const fan::Cone sub = subset_text.empty() ? pc : parse_cone(subset_text);
      const istheory::ConormalRestriction cr = istheory::restrict_conormal(f, pc, sub);
      report["link"] = io::fan_to_json(cr.link.quotient);
      report["parent_rays"] = cr.link.parent_ray;
      report["divisor"] = io::divisor_to_json(cr.divisor);
      if (cr.link.quotient.dim() > 0) {
        const istheory::NefReport nr = istheory::is_nef(cr.link.quotient, cr.divisor);
        report["nef"] = nr.nef;
        if (nr.nef) report["polytope"] = io::polytope_to_json(istheory::divisor_polytope(cr.link.quotient, cr.divisor));
      }
    } else if (*nef) {
      const fan::Fan f = load_valid_fan(fan_file);
      const istheory::Divisor d = io::divisor_from_json(io::read_json_file(divisor_file), f);
      const istheory::NefReport nr = istheory::is_nef(f, d);
      report["nef"] = nr.nef;
      if (nr.nef) {
        report["polytope"] = io::polytope_to_json(istheory::divisor_polytope(f, d));
      } else {
        report["wall"] = io::cone_to_json(nr.witness->tau);
        report["value"] = nr.value.get_str();
        code = 1;
      }
    } else if (*corpus_app) {
      if (*build) {
        report = corpus_build(corpus_dir);
      } else {
        const fan::Fan p = corpus::product(load_fan(left_file), load_fan(right_file));
        write_json(out_file, io::fan_to_json(p));
        report = {{"written", out_file}, {"rays", p.num_rays()}, {"cones", p.max_cones().size()}};
      }
    }
    emit(report, pretty, out);
    return code;
  } catch (const SchemaError& e) {
    err << "fanlab: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "fanlab: precondition failed: " << e.what() << '\n';
    return 1;
  } catch (const InconsistencyError& e) {
    err << "fanlab: inconsistency: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fanlab::cli
