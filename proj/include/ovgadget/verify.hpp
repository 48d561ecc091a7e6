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

// Claim checks and decision pipelines. Every pipeline builds a gadget, runs
// an exact solver, thresholds the result and compares the outcome with the
// brute-force oracle; the report carries the measured values either way.

#ifndef OVGADGET_VERIFY_HPP_
#define OVGADGET_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ovgadget/betweenness.hpp"
#include "ovgadget/gadgets.hpp"
#include "ovgadget/ovcore.hpp"

namespace ovgadget {

// kFlag marks a result outside the tight bound but inside a documented
// looser one; kSkip marks a claim whose precondition the instance violates.
enum class Verdict { kPass, kFail, kFlag, kSkip };

std::string_view verdict_name(Verdict v);

struct ClaimResult {
  std::string claim;
  Verdict verdict = Verdict::kPass;
  nlohmann::json witness;
};

struct VerdictReport {
  std::string suite;
  std::string instance;
  nlohmann::json params = nlohmann::json::object();
  std::vector<ClaimResult> claims;
  std::optional<bool> decision;

  // A failing claim must carry a non-empty witness (std::logic_error).
  void add(std::string claim, Verdict verdict, nlohmann::json witness);
  void append(const VerdictReport& other);

  bool passed() const;
  std::size_t count(Verdict v) const;
  const ClaimResult* find(std::string_view claim) const;

  std::string to_text() const;
  // One JSON object per claim, newline separated.
  std::string to_jsonl() const;
  nlohmann::json to_json() const;
};

struct Decision {
  bool value = false;
  VerdictReport report;
};

// Plain OV-graph: d(a,b) <= 2 iff a, b not orthogonal.
VerdictReport check_ov_observation(const OVInstance& inst);

// C1-C5 on OV_dia by exhaustive BFS over the relevant role classes.
VerdictReport check_dia_claims(const OVInstance& inst, Hops p);

// p >= 4(ceil lg n + ceil lg d) + 4 for all decision pipelines below;
// violations raise ParameterError.
Decision decide_ov_via_diameter(const OVInstance& inst, Hops p);
Decision decide_hs_via_radius(const OVInstance& inst, Hops p);
VerdictReport check_ecc_gap(const OVInstance& inst, Hops p);
Decision decide_ov_via_rc(const OVInstance& inst, Hops p);
Decision decide_ov_via_bc_sparse(const OVInstance& inst);

class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

// Exact BC(x2) - BC(x1) of the bounded-degree pair on orthogonal-free
// instances. The bounded pipeline works on instances padded with all-zero
// coordinates to a power-of-two dimension, so `d` here is the padded one.
struct ThresholdCalibration {
  std::size_t n = 0;
  std::size_t d = 0;
  Hops p = 0;
  Rational baseline;
  Rational margin;  // p / 4
  std::size_t samples = 0;
};

// Pads every row with zero columns up to the next power of two.
OVInstance pad_dimension_pow2(const OVInstance& inst);

// Smallest odd value >= p; the bounded pair has no shortest-path ties
// between the x-route and the c-route when p is odd.
Hops tie_free_p(Hops p);

// Exact baseline for odd p and power-of-two d:
// n^2 ((p - 1)/2 + lg d) + n (2n - 2).
Rational bc_bounded_baseline_formula(std::size_t n, std::size_t d, Hops p);
// Rough estimate n^2 (p/2 + ceil lg d) + n (2n - 2), off by n^2/2 from the
// exact baseline.
Rational bc_bounded_rough_estimate(std::size_t n, std::size_t d, Hops p);

// Uses gen_orthogonal_free(n, d, seed) for each seed. Throws
// CalibrationError when the per-instance baselines differ.
ThresholdCalibration calibrate_bc_threshold(std::size_t n, std::size_t d, Hops p,
                                            std::span<const std::uint64_t> seeds);
// Same over explicit instances; throws CalibrationError if any has an
// orthogonal pair or the shapes differ.
ThresholdCalibration calibrate_bc_threshold(std::span<const OVInstance> free_instances, Hops p);

// Throws CalibrationError if `cal` does not match (n, padded d, p).
Decision decide_ov_via_bc_bounded(const OVInstance& inst, Hops p,
                                  const ThresholdCalibration& cal);

// Every pipeline plus both oracles, and the diameter decision repeated on
// the degree-3 split graph.
VerdictReport cross_validate(const OVInstance& inst, Hops p);

// Diameter decision evaluated on split_to_degree3(OV_dia); threshold 6p.
Decision decide_ov_via_split_diameter(const OVInstance& inst, Hops p);

}  // namespace ovgadget

#endif  // OVGADGET_VERIFY_HPP_
