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

#include "ovgadget/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ovgadget/solvers.hpp"
#include "ovgadget/transform.hpp"

namespace ovgadget {

namespace {

using nlohmann::json;

// Cap on the violating pairs copied into a witness.
constexpr std::size_t kMaxListed = 8;

json hops_json(Hops h) { return h == kUnreachable ? json("inf") : json(h); }

json rational_json(const Rational& r) { return r.str(); }

Hops ecc_or_inf(Bfs& bfs, NodeId s) {
  const Hops e = bfs.run(s);
  return bfs.reached_all() ? e : kUnreachable;
}

void require_decision_p(const OVInstance& inst, Hops p, const char* who) {
  const Hops need = default_p(inst.n(), inst.d(), 4);
  if (p < need) {
    throw ParameterError(std::string(who) + ": p=" + std::to_string(p) +
                         " is below 4(ceil lg n + ceil lg d) + 4 = " + std::to_string(need));
  }
}

VerdictReport new_report(std::string suite, const OVInstance& inst, Hops p) {
  VerdictReport r;
  r.suite = std::move(suite);
  r.instance = inst.descriptor();
  r.params["n"] = inst.n();
  r.params["d"] = inst.d();
  if (p != 0) r.params["p"] = p;
  return r;
}

void add_decision_match(VerdictReport& r, const std::string& claim, bool decision,
                        bool oracle, json witness) {
  witness["decision"] = decision;
  witness["oracle"] = oracle;
  r.add(claim, decision == oracle ? Verdict::kPass : Verdict::kFail, std::move(witness));
  r.decision = decision;
}

std::vector<NodeId> nodes_where(const LabeledGraph& g,
                                const std::function<bool(const NodeRole&)>& pred) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (pred(g.role(v))) out.push_back(v);
  }
  return out;
}

std::size_t count_orthogonal_pairs(const OVInstance& inst) {
  std::size_t count = 0;
  for (const BitRow& a : inst.a_vectors()) {
    for (const BitRow& b : inst.b_vectors()) count += is_orthogonal(a, b) ? 1 : 0;
  }
  return count;
}

Rational bc_bounded_difference(const OVInstance& padded, Hops p) {
  const BcPair pair = build_bc_bounded(padded, p);
  return node_betweenness(pair.g2.graph, *pair.g2.meta.x) -
         node_betweenness(pair.g1.graph, *pair.g1.meta.x);
}

const ThresholdCalibration& cached_calibration(std::size_t n, std::size_t d, Hops p) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, Hops>, ThresholdCalibration> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, d, p);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(0xCA11B000 + s);
    it = cache.emplace(key, calibrate_bc_threshold(n, d, p, seeds)).first;
  }
  return it->second;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kFlag:
      return "FLAG";
    case Verdict::kSkip:
      return "SKIP";
  }
  return "?";
}

void VerdictReport::add(std::string claim, Verdict verdict, nlohmann::json witness) {
  if (verdict == Verdict::kFail && (witness.is_null() || witness.empty())) {
    throw std::logic_error("VerdictReport: failing claim " + claim + " has no witness");
  }
  claims.push_back({std::move(claim), verdict, std::move(witness)});
}

void VerdictReport::append(const VerdictReport& other) {
  for (const ClaimResult& c : other.claims) claims.push_back(c);
}

bool VerdictReport::passed() const { return count(Verdict::kFail) == 0; }

std::size_t VerdictReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      claims.begin(), claims.end(), [v](const ClaimResult& c) { return c.verdict == v; }));
}

const ClaimResult* VerdictReport::find(std::string_view claim) const {
  for (const ClaimResult& c : claims) {
    if (c.claim == claim) return &c;
  }
  return nullptr;
}

std::string VerdictReport::to_text() const {
  std::ostringstream out;
  out << "[" << suite << "] " << instance << " " << params.dump() << '\n';
  for (const ClaimResult& c : claims) {
    out << "  " << verdict_name(c.verdict) << ' ' << c.claim << ' ' << c.witness.dump() << '\n';
  }
  if (decision) out << "  decision " << (*decision ? "true" : "false") << '\n';
  return out.str();
}

nlohmann::json VerdictReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["instance"] = instance;
  j["params"] = params;
  if (decision) j["decision"] = *decision;
  j["passed"] = passed();
  j["claims"] = json::array();
  for (const ClaimResult& c : claims) {
    j["claims"].push_back(
        {{"claim", c.claim}, {"verdict", verdict_name(c.verdict)}, {"witness", c.witness}});
  }
  return j;
}

std::string VerdictReport::to_jsonl() const {
  std::string out;
  for (const ClaimResult& c : claims) {
    json rec{{"suite", suite},
             {"instance", instance},
             {"params", params},
             {"claim", c.claim},
             {"verdict", verdict_name(c.verdict)},
             {"witness", c.witness}};
    out += rec.dump() + "\n";
  }
  return out;
}

VerdictReport check_ov_observation(const OVInstance& inst) {
  VerdictReport r = new_report("obs1", inst, 0);
  const Gadget gadget = build_ov_graph(inst);
  const CopyLandmarks& lm = gadget.meta.copies[0];
  Bfs bfs(gadget.graph);
  json violations = json::array();
  std::size_t orthogonal = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    bfs.run(lm.a_root[i]);
    for (std::size_t j = 0; j < inst.n(); ++j) {
      const Hops dist = bfs.distances()[lm.b_root[j]];
      const bool orth = is_orthogonal(inst.a_vectors()[i], inst.b_vectors()[j]);
      orthogonal += orth ? 1 : 0;
      const bool close = dist != kUnreachable && dist <= 2;
      if (close == orth && violations.size() < kMaxListed) {
        violations.push_back({{"a", i}, {"b", j}, {"dist", hops_json(dist)}, {"orthogonal", orth}});
      }
    }
  }
  json w{{"pairs", inst.n() * inst.n()}, {"orthogonal_pairs", orthogonal}};
  if (!violations.empty()) w["violations"] = violations;
  r.add("obs1.distance-iff-orthogonal", violations.empty() ? Verdict::kPass : Verdict::kFail, w);
  return r;
}

VerdictReport check_dia_claims(const OVInstance& inst, Hops p) {
  VerdictReport r = new_report("dia-claims", inst, p);
  const Gadget gadget = build_ov_dia(inst, p);
  const LabeledGraph& g = gadget.graph;
  const GadgetMeta& m = gadget.meta;
  const CopyLandmarks& lm = m.copies[0];
  const Hops hn = m.h_c;
  const Hops hd = m.h_vec;
  Bfs bfs(g);

  // C1 / C2.
  {
    const Hops c1_bound = 4 * p + 2 * hn + 2 * hd;
    const Hops c2_bound = 6 * p;
    Hops worst_close = 0;
    Hops best_far = kUnreachable;
    json bad1 = json::array();
    json bad2 = json::array();
    std::size_t close_pairs = 0;
    std::size_t far_pairs = 0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
      bfs.run(lm.a_end[i]);
      for (std::size_t j = 0; j < inst.n(); ++j) {
        const Hops dist = bfs.distances()[lm.b_end[j]];
        json pair{{"a", i}, {"b", j}, {"dist", hops_json(dist)}};
        if (is_orthogonal(inst.a_vectors()[i], inst.b_vectors()[j])) {
          ++far_pairs;
          best_far = std::min(best_far, dist);
          if (dist < c2_bound && bad2.size() < kMaxListed) bad2.push_back(pair);
        } else {
          ++close_pairs;
          worst_close = std::max(worst_close, dist);
          if ((dist == kUnreachable || dist > c1_bound) && bad1.size() < kMaxListed) {
            bad1.push_back(pair);
          }
        }
      }
    }
    json w1{{"bound", c1_bound}, {"pairs", close_pairs}, {"max", hops_json(worst_close)}};
    if (!bad1.empty()) w1["violations"] = bad1;
    r.add("C1.non-orthogonal-upper", bad1.empty() ? Verdict::kPass : Verdict::kFail, w1);
    json w2{{"bound", c2_bound}, {"pairs", far_pairs}, {"min", hops_json(best_far)}};
    if (!bad2.empty()) w2["violations"] = bad2;
    r.add("C2.orthogonal-lower", bad2.empty() ? Verdict::kPass : Verdict::kFail, w2);
  }

  // C3: vector-tree nodes on one side are pairwise close.
  {
    const Hops bound = 2 * p + 2 * hn + 2 * hd;
    Hops worst = 0;
    json bad = json::array();
    for (Side s : {Side::kA, Side::kB}) {
      const auto members = nodes_where(g, [s](const NodeRole& role) {
        return role.side == s && (role.kind == RoleKind::kVectorRoot ||
                                  role.kind == RoleKind::kVectorTreeNode);
      });
      for (NodeId u : members) {
        bfs.run(u);
        for (NodeId v : members) {
          const Hops dist = bfs.distances()[v];
          worst = std::max(worst, dist);
          if (dist > bound && bad.size() < kMaxListed) {
            bad.push_back({{"u", u}, {"v", v}, {"dist", hops_json(dist)}});
          }
        }
      }
    }
    json w{{"bound", bound}, {"max", hops_json(worst)}};
    if (!bad.empty()) w["violations"] = bad;
    r.add("C3.vector-trees-close", bad.empty() ? Verdict::kPass : Verdict::kFail, w);
  }

  // C4 / C5: eccentricity of c-tree and shortcut-tree nodes.
  const bool orthogonal_free = !find_orthogonal_pair(inst).found;
  auto ecc_claim = [&](const std::string& name, const std::vector<NodeId>& members,
                       Hops tight, std::optional<Hops> loose) {
    Hops worst = 0;
    NodeId arg = members.empty() ? 0 : members.front();
    for (NodeId u : members) {
      const Hops e = ecc_or_inf(bfs, u);
      if (e > worst || e == kUnreachable) {
        worst = e;
        arg = u;
      }
      if (e == kUnreachable) break;
    }
    json w{{"bound", tight},
           {"max", hops_json(worst)},
           {"nodes", members.size()},
           {"orthogonal_free", orthogonal_free}};
    if (loose) w["loose_bound"] = *loose;
    Verdict v = Verdict::kPass;
    if (worst > tight) {
      w["argmax"] = arg;
      w["argmax_role"] = role_label(g.role(arg));
      v = (loose && worst <= *loose) ? Verdict::kFlag : Verdict::kFail;
    }
    r.add(name, v, w);
  };
  const Hops tight = 4 * p + 4 * hn + 2 * hd;
  ecc_claim("C4.c-tree-eccentricity",
            nodes_where(g,
                        [](const NodeRole& role) {
                          return role.kind == RoleKind::kCoordNode ||
                                 role.kind == RoleKind::kCTreeNode;
                        }),
            tight, 4 * p + 6 * hn + 2 * hd);
  ecc_claim("C5.shortcut-eccentricity",
            nodes_where(g,
                        [](const NodeRole& role) {
                          return role.kind == RoleKind::kShortcutTreeNode;
                        }),
            tight, std::nullopt);
  return r;
}

Decision decide_ov_via_diameter(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "diameter");
  Decision out{false, new_report("diameter", inst, p)};
  VerdictReport& r = out.report;
  const Gadget gadget = build_ov_dia(inst, p);
  const Hops hn = gadget.meta.h_c;
  const Hops hd = gadget.meta.h_vec;
  const Hops diam = is_connected(gadget.graph) ? diameter(gadget.graph) : kUnreachable;
  out.value = diam == kUnreachable || diam >= 6 * p;
  const bool oracle = find_orthogonal_pair(inst).found;
  r.params["diameter"] = hops_json(diam);
  if (diam != kUnreachable) r.params["ratio_to_4p"] = static_cast<double>(diam) / (4.0 * p);
  add_decision_match(r, "diameter.decision", out.value, oracle,
                     {{"diameter", hops_json(diam)}, {"threshold", 6 * p}});
  if (oracle) {
    r.add("diameter.orthogonal-lower", out.value ? Verdict::kPass : Verdict::kFail,
          {{"diameter", hops_json(diam)}, {"bound", 6 * p}});
  } else {
    const Hops bound = 4 * p + 4 * hn + 2 * hd;
    r.add("diameter.free-upper", diam <= bound ? Verdict::kPass
                                 : diam < 6 * p  ? Verdict::kFlag
                                                 : Verdict::kFail,
          {{"diameter", hops_json(diam)}, {"bound", bound}, {"threshold", 6 * p}});
  }
  return out;
}

Decision decide_ov_via_split_diameter(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "split-diameter");
  Decision out{false, new_report("split-diameter", inst, p)};
  const Gadget gadget = build_ov_dia(inst, p);
  const SplitGraph split = split_to_degree3(gadget.graph);
  const Hops diam = is_connected(split.graph) ? diameter(split.graph) : kUnreachable;
  out.value = diam == kUnreachable || diam >= 6 * p;
  out.report.params["diameter"] = hops_json(diam);
  out.report.params["max_degree"] = max_degree(split.graph);
  add_decision_match(out.report, "split-diameter.decision", out.value,
                     find_orthogonal_pair(inst).found,
                     {{"diameter", hops_json(diam)}, {"threshold", 6 * p}});
  return out;
}

Decision decide_hs_via_radius(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "radius");
  Decision out{false, new_report("radius", inst, p)};
  VerdictReport& r = out.report;
  const Gadget gadget = build_ov_rad(inst, p);
  const LabeledGraph& g = gadget.graph;
  const Hops hn = gadget.meta.h_c;
  const Hops hd = gadget.meta.h_vec;
  const auto& a_end = gadget.meta.copies[0].a_end;

  std::vector<Hops> ecc(g.node_count(), kUnreachable);
  if (is_connected(g)) ecc = all_eccentricities(g);
  const Hops rad = *std::min_element(ecc.begin(), ecc.end());
  Hops best_a_end = kUnreachable;
  for (NodeId v : a_end) best_a_end = std::min(best_a_end, ecc[v]);

  out.value = rad != kUnreachable && rad < 5 * p;
  const auto hitting = find_hitting_vectors(inst);
  r.params["radius"] = hops_json(rad);
  add_decision_match(r, "radius.decision", out.value, !hitting.empty(),
                     {{"radius", hops_json(rad)}, {"threshold", 5 * p}});
  r.add("radius.argmin-at-a_p", best_a_end == rad ? Verdict::kPass : Verdict::kFail,
        {{"radius", hops_json(rad)}, {"min_a_p_eccentricity", hops_json(best_a_end)}});
  if (!hitting.empty()) {
    const Hops bound = 4 * p + 4 * hn + 2 * hd;
    Hops worst = 0;
    for (std::size_t i : hitting) worst = std::max(worst, ecc[a_end[i]]);
    r.add("radius.hitting-upper", worst <= bound ? Verdict::kPass
                                  : worst < 5 * p ? Verdict::kFlag
                                                  : Verdict::kFail,
          {{"max_hitting_a_p_eccentricity", hops_json(worst)},
           {"bound", bound},
           {"threshold", 5 * p}});
  } else {
    r.add("radius.free-lower", best_a_end >= 6 * p ? Verdict::kPass : Verdict::kFail,
          {{"min_a_p_eccentricity", hops_json(best_a_end)}, {"bound", 6 * p}});
  }
  return out;
}

VerdictReport check_ecc_gap(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "ecc");
  VerdictReport r = new_report("ecc", inst, p);
  const Gadget gadget = build_ov_dia(inst, p);
  const Hops hn = gadget.meta.h_c;
  const Hops hd = gadget.meta.h_vec;
  const auto& a_root = gadget.meta.copies[0].a_root;
  Bfs bfs(gadget.graph);
  std::vector<Hops> ecc;
  for (NodeId v : a_root) ecc.push_back(ecc_or_inf(bfs, v));
  const Hops worst = *std::max_element(ecc.begin(), ecc.end());
  r.params["max_a_r_eccentricity"] = hops_json(worst);
  if (worst != kUnreachable) r.params["ratio_to_3p"] = static_cast<double>(worst) / (3.0 * p);

  const OraclePairResult oracle = find_orthogonal_pair(inst);
  if (oracle.found) {
    const std::size_t i = oracle.witness->first;
    r.add("ecc.orthogonal-witness", ecc[i] >= 5 * p ? Verdict::kPass : Verdict::kFail,
          {{"a", i}, {"eccentricity", hops_json(ecc[i])}, {"bound", 5 * p}});
  } else {
    const Hops bound = 3 * p + 4 * hn + 2 * hd;
    r.add("ecc.free-upper", worst <= bound ? Verdict::kPass
                            : worst < 5 * p ? Verdict::kFlag
                                            : Verdict::kFail,
          {{"max_eccentricity", hops_json(worst)}, {"bound", bound}, {"gap", 5 * p}});
  }
  return r;
}

Decision decide_ov_via_rc(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "rc");
  Decision out{false, new_report("rc", inst, p)};
  VerdictReport& r = out.report;
  const Gadget gadget = build_rc_gadget(inst, p);
  const Hops hn = gadget.meta.h_c;
  const Hops hd = gadget.meta.h_vec;
  const Hops rc = reach_centrality(gadget.graph, *gadget.meta.mid);
  out.value = rc > 2 * p;
  const bool oracle = find_orthogonal_pair(inst).found;
  r.params["rc"] = rc;
  r.params["ratio_to_p"] = static_cast<double>(rc) / p;
  add_decision_match(r, "rc.decision", out.value, oracle, {{"rc", rc}, {"threshold", 2 * p}});
  if (oracle) {
    r.add("rc.orthogonal-lower", rc >= 3 * p ? Verdict::kPass : Verdict::kFail,
          {{"rc", rc}, {"bound", 3 * p}});
  } else {
    // (3/2) p + 6(lg n + lg d), compared after doubling.
    const Hops twice_bound = 3 * p + 12 * (hn + hd);
    r.add("rc.free-upper", 2 * rc <= twice_bound ? Verdict::kPass : Verdict::kFail,
          {{"rc", rc}, {"bound", static_cast<double>(twice_bound) / 2.0}});
  }
  return out;
}

Decision decide_ov_via_bc_sparse(const OVInstance& inst) {
  Decision out{false, new_report("bc-sparse", inst, 0)};
  VerdictReport& r = out.report;
  const BcPair pair = build_bc_sparse(inst);
  const Rational bc1 = node_betweenness(pair.g1.graph, *pair.g1.meta.x);
  const Rational bc2 = node_betweenness(pair.g2.graph, *pair.g2.meta.x);
  out.value = bc2 > bc1;
  const bool oracle = find_orthogonal_pair(inst).found;

  // Pairs with a B endpoint exist only in G2; the rest of the difference is
  // what the added B nodes take away from x by creating shorter routes.
  const LabeledGraph& g2 = pair.g2.graph;
  auto is_b = [&](NodeId v) {
    const NodeRole& role = g2.role(v);
    return role.kind == RoleKind::kVectorRoot && role.side == Side::kB;
  };
  const Rational b_endpoint = node_betweenness(
      g2, *pair.g2.meta.x, [&](NodeId s, NodeId t) { return is_b(s) || is_b(t); });
  const Rational shared_change = (bc2 - b_endpoint) - bc1;

  r.params["bc_x1"] = rational_json(bc1);
  r.params["bc_x2"] = rational_json(bc2);
  add_decision_match(r, "bc-sparse.decision", out.value, oracle,
                     {{"bc_x1", rational_json(bc1)},
                      {"bc_x2", rational_json(bc2)},
                      {"b_endpoint_part", rational_json(b_endpoint)},
                      {"shared_pair_change", rational_json(shared_change)}});
  const bool b_endpoint_positive = b_endpoint > 0;
  r.add("bc-sparse.b-endpoint-iff-orthogonal",
        b_endpoint_positive == oracle ? Verdict::kPass : Verdict::kFail,
        {{"b_endpoint_part", rational_json(b_endpoint)}, {"oracle", oracle}});
  return out;
}

OVInstance pad_dimension_pow2(const OVInstance& inst) {
  const std::size_t target = std::size_t{1} << ceil_log2(inst.d());
  if (target == inst.d()) return inst;
  auto pad = [&](const std::vector<BitRow>& rows) {
    std::vector<BitRow> out = rows;
    for (BitRow& row : out) row.resize(target, 0);
    return out;
  };
  return OVInstance::make(pad(inst.a_vectors()), pad(inst.b_vectors()));
}

Hops tie_free_p(Hops p) { return p | 1u; }

Rational bc_bounded_baseline_formula(std::size_t n, std::size_t d, Hops p) {
  const Rational nn(static_cast<long long>(n * n));
  return nn * (Rational(static_cast<long long>(p) - 1, 2) + ceil_log2(d)) +
         Rational(static_cast<long long>(n * (2 * n - 2)));
}

Rational bc_bounded_rough_estimate(std::size_t n, std::size_t d, Hops p) {
  const Rational nn(static_cast<long long>(n * n));
  return nn * (Rational(static_cast<long long>(p), 2) + ceil_log2(d)) +
         Rational(static_cast<long long>(n * (2 * n - 2)));
}

ThresholdCalibration calibrate_bc_threshold(std::size_t n, std::size_t d, Hops p,
                                            std::span<const std::uint64_t> seeds) {
  std::vector<OVInstance> instances;
  for (std::uint64_t s : seeds) instances.push_back(gen_orthogonal_free(n, d, s));
  return calibrate_bc_threshold(instances, p);
}

ThresholdCalibration calibrate_bc_threshold(std::span<const OVInstance> free_instances,
                                            Hops p) {
  if (free_instances.empty()) throw CalibrationError("calibration needs at least one instance");
  ThresholdCalibration cal;
  std::optional<Rational> baseline;
  for (std::size_t k = 0; k < free_instances.size(); ++k) {
    const OVInstance& inst = free_instances[k];
    if (find_orthogonal_pair(inst).found) {
      throw CalibrationError("calibration instance " + std::to_string(k) +
                             " has an orthogonal pair");
    }
    const OVInstance padded = pad_dimension_pow2(inst);
    if (k == 0) {
      cal.n = padded.n();
      cal.d = padded.d();
    } else if (padded.n() != cal.n || padded.d() != cal.d) {
      throw CalibrationError("calibration instances differ in shape");
    }
    const Rational diff = bc_bounded_difference(padded, p);
    if (!baseline) {
      baseline = diff;
    } else if (diff != *baseline) {
      throw CalibrationError("baseline mismatch: instance 0 gives " + baseline->str() +
                             ", instance " + std::to_string(k) + " gives " + diff.str());
    }
  }
  cal.p = p;
  cal.baseline = *baseline;
  cal.margin = Rational(static_cast<long long>(p), 4);
  cal.samples = free_instances.size();
  return cal;
}

Decision decide_ov_via_bc_bounded(const OVInstance& inst, Hops p,
                                  const ThresholdCalibration& cal) {
  const OVInstance padded = pad_dimension_pow2(inst);
  if (cal.n != padded.n() || cal.d != padded.d() || cal.p != p) {
    throw CalibrationError("calibration is for (n=" + std::to_string(cal.n) +
                           ", d=" + std::to_string(cal.d) + ", p=" + std::to_string(cal.p) +
                           "), instance needs (n=" + std::to_string(padded.n()) +
                           ", d=" + std::to_string(padded.d()) + ", p=" + std::to_string(p) + ")");
  }
  Decision out{false, new_report("bc-bounded", inst, p)};
  VerdictReport& r = out.report;
  const Rational diff = bc_bounded_difference(padded, p);
  const Rational excess = diff - cal.baseline;
  out.value = excess > cal.margin;
  const bool oracle = find_orthogonal_pair(inst).found;
  r.params["padded_d"] = padded.d();
  r.params["difference"] = rational_json(diff);
  r.params["baseline"] = rational_json(cal.baseline);
  add_decision_match(r, "bc-bounded.decision", out.value, oracle,
                     {{"difference", rational_json(diff)},
                      {"baseline", rational_json(cal.baseline)},
                      {"margin", rational_json(cal.margin)}});
  if (oracle) {
    r.add("bc-bounded.orthogonal-excess", excess > cal.margin ? Verdict::kPass : Verdict::kFail,
          {{"excess", rational_json(excess)},
           {"orthogonal_pairs", count_orthogonal_pairs(inst)},
           {"margin", rational_json(cal.margin)}});
  } else {
    r.add("bc-bounded.free-equals-baseline", excess == 0 ? Verdict::kPass : Verdict::kFail,
          {{"excess", rational_json(excess)}});
  }
  return out;
}

VerdictReport cross_validate(const OVInstance& inst, Hops p) {
  require_decision_p(inst, p, "cross-validate");
  VerdictReport r = new_report("cross", inst, p);
  const bool ov = find_orthogonal_pair(inst).found;
  const bool hs = !find_hitting_vectors(inst).empty();
  r.params["ov_oracle"] = ov;
  r.params["hs_oracle"] = hs;

  const Decision dia = decide_ov_via_diameter(inst, p);
  const Decision split = decide_ov_via_split_diameter(inst, p);
  const Decision rad = decide_hs_via_radius(inst, p);
  const Decision rc = decide_ov_via_rc(inst, p);
  const Decision sparse = decide_ov_via_bc_sparse(inst);
  const Hops p_bc = tie_free_p(p);
  const OVInstance padded = pad_dimension_pow2(inst);
  const Decision bounded =
      decide_ov_via_bc_bounded(inst, p_bc, cached_calibration(inst.n(), padded.d(), p_bc));
  r.params["p_bc_bounded"] = p_bc;

  for (const Decision* d : {&dia, &split, &rad, &rc, &sparse, &bounded}) r.append(d->report);
  r.append(check_ecc_gap(inst, p));

  auto agree = [&](const std::string& name, bool value, bool oracle) {
    r.add("cross." + name, value == oracle ? Verdict::kPass : Verdict::kFail,
          {{"decision", value}, {"oracle", oracle}});
  };
  agree("diameter", dia.value, ov);
  agree("rc", rc.value, ov);
  agree("bc-sparse", sparse.value, ov);
  agree("bc-bounded", bounded.value, ov);
  agree("radius", rad.value, hs);
  r.add("cross.split-diameter-unchanged",
        split.value == dia.value ? Verdict::kPass : Verdict::kFail,
        {{"diameter", dia.report.params["diameter"]},
         {"split_diameter", split.report.params["diameter"]},
         {"decision", dia.value},
         {"split_decision", split.value}});
  r.decision = ov;
  return r;
}

}  // namespace ovgadget
