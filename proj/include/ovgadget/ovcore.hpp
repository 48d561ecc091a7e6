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

// Orthogonal-vectors instances, the brute-force OV / hitting-set oracles and
// the seeded generators used to build test corpora.

#ifndef OVGADGET_OVCORE_HPP_
#define OVGADGET_OVCORE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ovgadget {

// One boolean vector, one byte (0 or 1) per coordinate.
using BitRow = std::vector<std::uint8_t>;

enum class Side : std::uint8_t { kA = 0, kB = 1 };

inline char side_char(Side s) { return s == Side::kA ? 'A' : 'B'; }

// Two sets of n non-zero vectors of dimension d. Immutable once built.
class OVInstance {
 public:
  // Validates shapes and rejects all-zero rows. Throws std::invalid_argument.
  static OVInstance make(std::vector<BitRow> a_rows, std::vector<BitRow> b_rows);

  std::size_t n() const { return a_.size(); }
  std::size_t d() const { return d_; }

  const std::vector<BitRow>& a_vectors() const { return a_; }
  const std::vector<BitRow>& b_vectors() const { return b_; }
  const std::vector<BitRow>& vectors(Side s) const {
    return s == Side::kA ? a_ : b_;
  }

  // True iff some vector on `s` has a 1 at coordinate j.
  bool coordinate_used(Side s, std::size_t j) const;
  bool coordinate_used(std::size_t j) const {
    return coordinate_used(Side::kA, j) || coordinate_used(Side::kB, j);
  }

  // Same instance with A-rows permuted by `perm_a` and B-rows by `perm_b`
  // (row i of the result is row perm[i] of this instance).
  OVInstance permuted(std::span<const std::size_t> perm_a,
                      std::span<const std::size_t> perm_b) const;

  // Short stable descriptor: "n=.. d=.. h=<fnv64 of the text form>".
  std::string descriptor() const;

  friend bool operator==(const OVInstance&, const OVInstance&) = default;

 private:
  OVInstance(std::vector<BitRow> a, std::vector<BitRow> b, std::size_t d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  std::vector<BitRow> a_;
  std::vector<BitRow> b_;
  std::size_t d_ = 0;
};

struct OraclePairResult {
  bool found = false;
  // (index into A, index into B); present iff found.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Throws std::invalid_argument on length mismatch.
bool is_orthogonal(std::span<const std::uint8_t> a,
                   std::span<const std::uint8_t> b);

// Exhaustive scan; the witness is the lexicographically first (i, j).
OraclePairResult find_orthogonal_pair(const OVInstance& inst);

// Indices i such that a_i shares a 1-coordinate with every b, ascending.
std::vector<std::size_t> find_hitting_vectors(const OVInstance& inst);

// Generators. All are pure functions of their arguments.
inline constexpr double kDefaultDensity = 0.5;

OVInstance gen_random(std::size_t n, std::size_t d, double density,
                      std::uint64_t seed);
// At least one orthogonal pair (requires d >= 2).
OVInstance gen_planted_orthogonal(std::size_t n, std::size_t d,
                                  std::uint64_t seed);
// Coordinate 0 set everywhere, so no pair is orthogonal.
OVInstance gen_orthogonal_free(std::size_t n, std::size_t d,
                               std::uint64_t seed);
// One random a_i is all-ones (requires d >= 2).
OVInstance gen_planted_hitting(std::size_t n, std::size_t d,
                               std::uint64_t seed);
// Every a_i has a disjoint-support partner in B (requires d >= 2).
OVInstance gen_hitting_free(std::size_t n, std::size_t d, std::uint64_t seed);

// Text format: "n d" then n rows of A then n rows of B, each d chars of 0/1.
std::string to_text(const OVInstance& inst);
OVInstance parse_instance(std::string_view text);
OVInstance read_instance(const std::filesystem::path& path);
void write_instance(const OVInstance& inst, const std::filesystem::path& path);

// ceil(log2(k)) for k >= 1; 0 for k == 1.
unsigned ceil_log2(std::size_t k);

}  // namespace ovgadget

#endif  // OVGADGET_OVCORE_HPP_
