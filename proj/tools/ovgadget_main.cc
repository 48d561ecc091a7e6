// Copyright 2026 The ovgadget Authors
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

// ovgadget command-line tool: gen, build, verify, bench, export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ovgadget/bench.hpp"
#include "ovgadget/gadgets.hpp"
#include "ovgadget/graph_io.hpp"
#include "ovgadget/ovcore.hpp"
#include "ovgadget/transform.hpp"
#include "ovgadget/verify.hpp"

namespace {

using namespace ovgadget;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Raised for bad arguments detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PSpec {
  std::optional<Hops> p;
  unsigned k = 4;

  Hops resolve(const OVInstance& inst) const {
    return p ? *p : default_p(inst.n(), inst.d(), k);
  }
};

void add_p_options(CLI::App* cmd, PSpec& spec) {
  auto* p = cmd->add_option("-p,--p", spec.p, "Path length p");
  cmd->add_option("-K,--K", spec.k, "Multiplier for the default p = K(lg n + lg d) + 4")
      ->excludes(p);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::string> rest;  // [density|-] seed
  std::string out;
};

int run_gen(const GenArgs& a) {
  double density = kDefaultDensity;
  std::uint64_t seed = 0;
  if (a.rest.size() == 1) {
    seed = std::stoull(a.rest[0]);
  } else if (a.rest.size() == 2) {
    if (a.rest[0] != "-" && a.rest[0] != "–") density = std::stod(a.rest[0]);
    seed = std::stoull(a.rest[1]);
  } else {
    throw UsageError("gen: expected [DENSITY] SEED after N D");
  }
  OVInstance inst = [&] {
    if (a.kind == "random") return gen_random(a.n, a.d, density, seed);
    if (a.kind == "planted-orthogonal") return gen_planted_orthogonal(a.n, a.d, seed);
    if (a.kind == "orthogonal-free") return gen_orthogonal_free(a.n, a.d, seed);
    if (a.kind == "planted-hitting") return gen_planted_hitting(a.n, a.d, seed);
    if (a.kind == "hitting-free") return gen_hitting_free(a.n, a.d, seed);
    throw UsageError("gen: unknown kind " + a.kind);
  }();
  emit(a.out, to_text(inst));
  return kExitOk;
}

// ---------------------------------------------------------------- build

json meta_json(const GadgetMeta& m) {
  json j{{"gadget", gadget_kind_name(m.kind)},
         {"n", m.n},
         {"d", m.d},
         {"p", m.p},
         {"h_vec", m.h_vec},
         {"h_c", m.h_c},
         {"h_short", m.h_short},
         {"nodes", m.node_count},
         {"edges", m.edge_count},
         {"components", m.components},
         {"active_coords", m.active_coords}};
  if (m.connector_length != 0) j["connector_length"] = m.connector_length;
  json roles = json::object();
  for (const auto& [kind, count] : m.role_counts) roles[std::string(role_kind_name(kind))] = count;
  j["role_counts"] = roles;
  json copies = json::array();
  for (const CopyLandmarks& lm : m.copies) {
    json c{{"a_r", lm.a_root}, {"b_r", lm.b_root}, {"a_p", lm.a_end}, {"b_p", lm.b_end}};
    json coords = json::array();
    for (const auto& id : lm.coord) coords.push_back(id ? json(*id) : json(nullptr));
    c["c"] = coords;
    if (lm.a_shortcut_root) c["a_shortcut_root"] = *lm.a_shortcut_root;
    if (lm.b_shortcut_root) c["b_shortcut_root"] = *lm.b_shortcut_root;
    copies.push_back(c);
  }
  j["copies"] = copies;
  if (m.mid) j["u"] = *m.mid;
  if (m.x) j["x"] = *m.x;
  if (m.y) j["y"] = *m.y;
  if (!m.b_prime.empty()) j["b_prime"] = m.b_prime;
  return j;
}

struct BuildArgs {
  std::string gadget;
  std::string instance;
  PSpec p;
  std::string out;
  bool split3 = false;
  bool dot = false;
};

// Writes <prefix>.edges, .meta.json, .landmarks and optionally the split
// graph; returns a summary object.
json write_gadget(const Gadget& g, const std::string& prefix, bool split3, bool dot) {
  write_edge_list(g.graph, prefix + ".edges");
  json meta = meta_json(g.meta);
  meta["max_degree"] = max_degree(g.graph);
  meta["audit"] = audit_gadget(g);
  write_text_file(prefix + ".landmarks", landmark_table(g.meta));
  if (dot) write_text_file(prefix + ".dot", describe(g));
  if (split3) {
    const SplitGraph split = split_to_degree3(g.graph);
    write_edge_list(split.graph, prefix + ".split3.edges");
    std::string origin;
    for (NodeId v = 0; v < split.origin.size(); ++v) {
      origin += std::to_string(v) + " " + std::to_string(split.origin[v]) + "\n";
    }
    write_text_file(prefix + ".split3.origin", origin);
    meta["split3"] = {{"nodes", split.graph.node_count()},
                      {"edges", split.graph.edge_count()},
                      {"max_degree", max_degree(split.graph)}};
  }
  write_text_file(prefix + ".meta.json", meta.dump(2) + "\n");
  return meta;
}

int run_build(const BuildArgs& a) {
  const OVInstance inst = read_instance(a.instance);
  const GadgetKind kind = parse_gadget_kind(a.gadget);
  const Hops p = a.p.resolve(inst);
  json summary;
  switch (kind) {
    case GadgetKind::kOvGraph:
      summary = write_gadget(build_ov_graph(inst), a.out, a.split3, a.dot);
      break;
    case GadgetKind::kOvDia:
      summary = write_gadget(build_ov_dia(inst, p), a.out, a.split3, a.dot);
      break;
    case GadgetKind::kOvRad:
      summary = write_gadget(build_ov_rad(inst, p), a.out, a.split3, a.dot);
      break;
    case GadgetKind::kRc:
      summary = write_gadget(build_rc_gadget(inst, p), a.out, a.split3, a.dot);
      break;
    case GadgetKind::kBcSparse:
    case GadgetKind::kBcBounded: {
      const BcPair pair =
          kind == GadgetKind::kBcSparse ? build_bc_sparse(inst) : build_bc_bounded(inst, p);
      summary["g1"] = write_gadget(pair.g1, a.out + ".g1", a.split3, a.dot);
      summary["g2"] = write_gadget(pair.g2, a.out + ".g2", a.split3, a.dot);
      break;
    }
  }
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::string instance;
  PSpec p;
  std::string jsonl;
  std::string graph;
  bool quiet = false;
};

std::vector<std::uint64_t> calibration_seeds() {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(0xCA11B000 + s);
  return seeds;
}

Decision bounded_decision(const OVInstance& inst, Hops p) {
  const Hops p_bc = tie_free_p(p);
  const auto seeds = calibration_seeds();
  const ThresholdCalibration cal = calibrate_bc_threshold(inst.n(), inst.d(), p_bc, seeds);
  return decide_ov_via_bc_bounded(inst, p_bc, cal);
}

// Checks an exported graph against a fresh build of the suite's gadget.
VerdictReport check_import(const OVInstance& inst, Hops p, const std::string& suite,
                           const std::string& path) {
  VerdictReport r;
  r.suite = "graph-import";
  r.instance = inst.descriptor();
  const LabeledGraph imported = read_edge_list(path);
  std::optional<LabeledGraph> fresh;
  if (suite == "obs1") fresh = build_ov_graph(inst).graph;
  if (suite == "dia-claims" || suite == "diameter" || suite == "ecc") {
    fresh = build_ov_dia(inst, p).graph;
  }
  if (suite == "radius") fresh = build_ov_rad(inst, p).graph;
  if (suite == "rc") fresh = build_rc_gadget(inst, p).graph;
  if (!fresh) throw UsageError("verify --graph: suite " + suite + " has no single gadget graph");
  const bool same = *fresh == imported;
  r.add("graph-import.identical", same ? Verdict::kPass : Verdict::kFail,
        {{"file", path},
         {"imported_nodes", imported.node_count()},
         {"built_nodes", fresh->node_count()},
         {"imported_edges", imported.edge_count()},
         {"built_edges", fresh->edge_count()}});
  return r;
}

int run_verify(const VerifyArgs& a) {
  const OVInstance inst = read_instance(a.instance);
  const Hops p = a.p.resolve(inst);
  std::vector<VerdictReport> reports;
  const std::string& s = a.suite;
  if (!a.graph.empty()) reports.push_back(check_import(inst, p, s, a.graph));
  if (s == "obs1") {
    reports.push_back(check_ov_observation(inst));
  } else if (s == "dia-claims") {
    reports.push_back(check_dia_claims(inst, p));
  } else if (s == "diameter") {
    reports.push_back(decide_ov_via_diameter(inst, p).report);
  } else if (s == "split-diameter") {
    reports.push_back(decide_ov_via_split_diameter(inst, p).report);
  } else if (s == "radius") {
    reports.push_back(decide_hs_via_radius(inst, p).report);
  } else if (s == "ecc") {
    reports.push_back(check_ecc_gap(inst, p));
  } else if (s == "rc") {
    reports.push_back(decide_ov_via_rc(inst, p).report);
  } else if (s == "bc-sparse") {
    reports.push_back(decide_ov_via_bc_sparse(inst).report);
  } else if (s == "bc-bounded") {
    reports.push_back(bounded_decision(inst, p).report);
  } else if (s == "all") {
    reports.push_back(check_ov_observation(inst));
    reports.push_back(check_dia_claims(inst, p));
    reports.push_back(cross_validate(inst, p));
  } else {
    throw UsageError("verify: unknown suite " + s);
  }

  bool ok = true;
  std::string jsonl;
  for (const VerdictReport& r : reports) {
    ok = ok && r.passed();
    jsonl += r.to_jsonl();
    if (!a.quiet || !r.passed()) std::cout << r.to_text();
  }
  if (!a.jsonl.empty()) emit(a.jsonl, jsonl);
  std::cout << (ok ? "verify: pass" : "verify: FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> ns{64, 128, 256, 512, 1024, 2048};
  std::size_t d = 16;
  unsigned k = 4;
  std::vector<std::uint64_t> seeds{1};
  double density = kDefaultDensity;
  std::size_t mem_mb = 0;
  std::string out;
};

int run_bench_cmd(const BenchArgs& a) {
  BenchConfig config;
  config.ns = a.ns;
  config.d = a.d;
  config.multiplier = a.k;
  config.seeds = a.seeds;
  config.density = a.density;
  config.memory_cap_mb = a.mem_mb;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out);
    if (!file) throw std::runtime_error("bench: cannot write " + a.out);
    out = &file;
  }
  *out << bench_csv_header() << '\n';
  const auto records = run_bench(config, [&](const BenchRecord& r) {
    *out << bench_csv_row(r) << '\n';
    out->flush();
  });

  std::vector<double> n, build, bfs;
  bool agree = true;
  for (const BenchRecord& r : records) {
    if (r.status != "ok") continue;
    n.push_back(static_cast<double>(r.n));
    build.push_back(r.build_ms);
    bfs.push_back(r.bfs_all_a_p_ms);
    agree = agree && r.decision == r.oracle;
  }
  if (n.size() >= 2 && n.front() != n.back()) {
    std::cerr << "build slope " << loglog_slope(n, build) << ", all-a_p BFS slope "
              << loglog_slope(n, bfs) << '\n';
  }
  return agree ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- export

struct ExportArgs {
  std::string gadget;
  std::string instance;
  std::string graph;
  PSpec p;
  std::string format = "dot";
  std::string out;
};

std::string render(const Gadget& g, const std::string& format) {
  if (format == "dot") return describe(g);
  if (format == "edges") return to_edge_list(g.graph);
  if (format == "landmarks") return landmark_table(g.meta);
  if (format == "meta") return meta_json(g.meta).dump(2) + "\n";
  throw UsageError("export: unknown format " + format);
}

int run_export(const ExportArgs& a) {
  if (!a.graph.empty()) {
    const LabeledGraph g = read_edge_list(a.graph);
    if (a.format == "dot") {
      emit(a.out, to_dot(g));
    } else if (a.format == "edges") {
      emit(a.out, to_edge_list(g));
    } else {
      throw UsageError("export --graph supports dot and edges only");
    }
    return kExitOk;
  }
  if (a.gadget.empty() || a.instance.empty()) {
    throw UsageError("export: give GADGET INSTANCE or --graph FILE");
  }
  const OVInstance inst = read_instance(a.instance);
  const Hops p = a.p.resolve(inst);
  switch (parse_gadget_kind(a.gadget)) {
    case GadgetKind::kOvGraph:
      emit(a.out, render(build_ov_graph(inst), a.format));
      break;
    case GadgetKind::kOvDia:
      emit(a.out, render(build_ov_dia(inst, p), a.format));
      break;
    case GadgetKind::kOvRad:
      emit(a.out, render(build_ov_rad(inst, p), a.format));
      break;
    case GadgetKind::kRc:
      emit(a.out, render(build_rc_gadget(inst, p), a.format));
      break;
    case GadgetKind::kBcSparse:
      emit(a.out, render(build_bc_sparse(inst).g2, a.format));
      break;
    case GadgetKind::kBcBounded:
      emit(a.out, render(build_bc_bounded(inst, p).g2, a.format));
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal-vectors reduction gadgets: build, verify, benchmark"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an OV instance");
  gen_cmd->add_option("kind", gen.kind,
                      "random | planted-orthogonal | orthogonal-free | planted-hitting | "
                      "hitting-free")
      ->required();
  gen_cmd->add_option("n", gen.n, "Vectors per side")->required();
  gen_cmd->add_option("d", gen.d, "Dimension")->required();
  gen_cmd->add_option("args", gen.rest, "[DENSITY|-] SEED")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a gadget and write graph files");
  build_cmd->add_option("gadget", build.gadget, "ov | dia | rad | rc | bc-sparse | bc-bounded")
      ->required();
  build_cmd->add_option("instance", build.instance, "Instance file")->required()->check(
      CLI::ExistingFile);
  add_p_options(build_cmd, build.p);
  build_cmd->add_option("-o,--out", build.out, "Output prefix")->required();
  build_cmd->add_flag("--split3", build.split3, "Also write the degree-3 split graph");
  build_cmd->add_flag("--dot", build.dot, "Also write a DOT rendering");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite on an instance");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "obs1 | dia-claims | diameter | split-diameter | radius | ecc | rc | "
                   "bc-sparse | bc-bounded | all")
      ->required();
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required()->check(
      CLI::ExistingFile);
  add_p_options(verify_cmd, verify.p);
  verify_cmd->add_option("--jsonl", verify.jsonl, "Write one JSON record per claim");
  verify_cmd->add_option("--graph", verify.graph, "Edge list from build; must match the gadget")
      ->check(CLI::ExistingFile);
  verify_cmd->add_flag("-q,--quiet", verify.quiet, "Print only failing reports");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark over OV_dia");
  bench_cmd->add_option("--n", bench.ns, "Values of n")->delimiter(',');
  bench_cmd->add_option("--d", bench.d, "Dimension");
  bench_cmd->add_option("-K,--K", bench.k, "Multiplier for p");
  bench_cmd->add_option("--seeds", bench.seeds, "Instance seeds")->delimiter(',');
  bench_cmd->add_option("--density", bench.density, "Bit density");
  bench_cmd->add_option("--mem-mb", bench.mem_mb, "Memory cap (default OVGADGET_MEM_MB or 2048)");
  bench_cmd->add_option("-o,--out", bench.out, "CSV output (default stdout)");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Render a gadget or an edge list");
  export_cmd->add_option("gadget", exp.gadget, "Gadget kind");
  export_cmd->add_option("instance", exp.instance, "Instance file");
  export_cmd->add_option("--graph", exp.graph, "Edge-list file instead of a gadget")
      ->check(CLI::ExistingFile);
  add_p_options(export_cmd, exp.p);
  export_cmd->add_option("-f,--format", exp.format, "dot | edges | landmarks | meta");
  export_cmd->add_option("-o,--out", exp.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*build_cmd) return run_build(build);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench_cmd(bench);
    if (*export_cmd) return run_export(exp);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ParameterError and malformed input both land here.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CalibrationError& e) {
    std::cerr << "calibration error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
