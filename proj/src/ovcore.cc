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

#include "ovgadget/ovcore.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ovgadget {

namespace {

bool all_zero(const BitRow& row) {
  return std::none_of(row.begin(), row.end(), [](std::uint8_t v) { return v != 0; });
}

BitRow random_nonzero_row(std::size_t d, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(density);
  BitRow row(d);
  do {
    for (auto& v : row) v = bit(rng) ? 1 : 0;
  } while (all_zero(row));
  return row;
}

std::vector<BitRow> random_rows(std::size_t n, std::size_t d, double density,
                                std::mt19937_64& rng) {
  std::vector<BitRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_nonzero_row(d, density, rng));
  return rows;
}

// A random support that is neither empty nor full.
BitRow random_proper_support(std::size_t d, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(0.5);
  BitRow row(d);
  for (;;) {
    std::size_t ones = 0;
    for (auto& v : row) {
      v = bit(rng) ? 1 : 0;
      ones += v;
    }
    if (ones > 0 && ones < d) return row;
  }
}

// A random nonempty subset of the zero coordinates of `support`.
BitRow random_disjoint_row(const BitRow& support, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(0.5);
  BitRow row(support.size());
  do {
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = (support[j] == 0 && bit(rng)) ? 1 : 0;
    }
  } while (all_zero(row));
  return row;
}

void require_shape(std::size_t n, std::size_t d, std::size_t min_d) {
  if (n == 0) throw std::invalid_argument("generator: n must be >= 1");
  if (d < min_d) {
    throw std::invalid_argument("generator: d must be >= " + std::to_string(min_d));
  }
}

}  // namespace

OVInstance OVInstance::make(std::vector<BitRow> a_rows, std::vector<BitRow> b_rows) {
  if (a_rows.empty() || b_rows.empty()) {
    throw std::invalid_argument("OVInstance: both sides must be nonempty");
  }
  if (a_rows.size() != b_rows.size()) {
    throw std::invalid_argument("OVInstance: |A| != |B|");
  }
  const std::size_t d = a_rows.front().size();
  if (d == 0) throw std::invalid_argument("OVInstance: dimension must be >= 1");
  for (const auto* side : {&a_rows, &b_rows}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      const BitRow& row = (*side)[i];
      if (row.size() != d) throw std::invalid_argument("OVInstance: dimension mismatch");
      for (auto& v : row) {
        if (v > 1) throw std::invalid_argument("OVInstance: entries must be 0 or 1");
      }
      if (all_zero(row)) {
        throw std::invalid_argument(std::string("OVInstance: all-zero row ") +
                                    (side == &a_rows ? "A[" : "B[") +
                                    std::to_string(i) + "]");
      }
    }
  }
  return OVInstance(std::move(a_rows), std::move(b_rows), d);
}

bool OVInstance::coordinate_used(Side s, std::size_t j) const {
  for (const BitRow& row : vectors(s)) {
    if (row[j] != 0) return true;
  }
  return false;
}

OVInstance OVInstance::permuted(std::span<const std::size_t> perm_a,
                                std::span<const std::size_t> perm_b) const {
  if (perm_a.size() != n() || perm_b.size() != n()) {
    throw std::invalid_argument("permuted: permutation size mismatch");
  }
  for (auto perm : {perm_a, perm_b}) {
    std::vector<bool> seen(n(), false);
    for (std::size_t i : perm) {
      if (i >= n() || seen[i]) throw std::invalid_argument("permuted: not a permutation");
      seen[i] = true;
    }
  }
  std::vector<BitRow> a;
  std::vector<BitRow> b;
  for (std::size_t i = 0; i < n(); ++i) {
    a.push_back(a_.at(perm_a[i]));
    b.push_back(b_.at(perm_b[i]));
  }
  return make(std::move(a), std::move(b));
}

std::string OVInstance::descriptor() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_text(*this)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "n=" << n() << " d=" << d() << " h=" << std::hex << h;
  return out.str();
}

bool is_orthogonal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("is_orthogonal: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

OraclePairResult find_orthogonal_pair(const OVInstance& inst) {
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (is_orthogonal(inst.a_vectors()[i], inst.b_vectors()[j])) {
        return {true, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

std::vector<std::size_t> find_hitting_vectors(const OVInstance& inst) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const bool hits_all =
        std::none_of(inst.b_vectors().begin(), inst.b_vectors().end(),
                     [&](const BitRow& b) { return is_orthogonal(inst.a_vectors()[i], b); });
    if (hits_all) hits.push_back(i);
  }
  return hits;
}

OVInstance gen_random(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  require_shape(n, d, 1);
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("gen_random: density must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto a = random_rows(n, d, density, rng);
  auto b = random_rows(n, d, density, rng);
  return OVInstance::make(std::move(a), std::move(b));
}

OVInstance gen_planted_orthogonal(std::size_t n, std::size_t d, std::uint64_t seed) {
  require_shape(n, d, 2);
  std::mt19937_64 rng(seed);
  auto a = random_rows(n, d, kDefaultDensity, rng);
  auto b = random_rows(n, d, kDefaultDensity, rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t i = pick(rng);
  const std::size_t j = pick(rng);
  a[i] = random_proper_support(d, rng);
  b[j] = random_disjoint_row(a[i], rng);
  return OVInstance::make(std::move(a), std::move(b));
}

OVInstance gen_orthogonal_free(std::size_t n, std::size_t d, std::uint64_t seed) {
  require_shape(n, d, 1);
  std::mt19937_64 rng(seed);
  auto a = random_rows(n, d, kDefaultDensity, rng);
  auto b = random_rows(n, d, kDefaultDensity, rng);
  for (auto& row : a) row[0] = 1;
  for (auto& row : b) row[0] = 1;
  return OVInstance::make(std::move(a), std::move(b));
}

OVInstance gen_planted_hitting(std::size_t n, std::size_t d, std::uint64_t seed) {
  require_shape(n, d, 2);
  std::mt19937_64 rng(seed);
  auto a = random_rows(n, d, kDefaultDensity, rng);
  auto b = random_rows(n, d, kDefaultDensity, rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  BitRow& hitter = a[pick(rng)];
  std::fill(hitter.begin(), hitter.end(), std::uint8_t{1});
  return OVInstance::make(std::move(a), std::move(b));
}

OVInstance gen_hitting_free(std::size_t n, std::size_t d, std::uint64_t seed) {
  require_shape(n, d, 2);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> partner(n);
  std::iota(partner.begin(), partner.end(), std::size_t{0});
  std::shuffle(partner.begin(), partner.end(), rng);
  std::vector<BitRow> a(n);
  std::vector<BitRow> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = random_proper_support(d, rng);
    b[partner[i]] = random_disjoint_row(a[i], rng);
  }
  return OVInstance::make(std::move(a), std::move(b));
}

std::string to_text(const OVInstance& inst) {
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.d()) + "\n";
  for (const auto* side : {&inst.a_vectors(), &inst.b_vectors()}) {
    for (const BitRow& row : *side) {
      for (auto v : row) out.push_back(v != 0 ? '1' : '0');
      out.push_back('\n');
    }
  }
  return out;
}

OVInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  std::size_t d = 0;
  if (!(in >> n >> d) || n == 0 || d == 0) {
    throw std::invalid_argument("instance: bad header, expected \"n d\"");
  }
  auto read_rows = [&](const char* name) {
    std::vector<BitRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::string line;
      if (!(in >> line)) {
        throw std::invalid_argument(std::string("instance: missing ") + name + " row");
      }
      if (line.size() != d) {
        throw std::invalid_argument(std::string("instance: ") + name + " row " +
                                    std::to_string(i) + " has wrong length");
      }
      BitRow row(d);
      for (std::size_t j = 0; j < d; ++j) {
        if (line[j] != '0' && line[j] != '1') {
          throw std::invalid_argument("instance: rows must contain only 0/1");
        }
        row[j] = line[j] == '1' ? 1 : 0;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto a = read_rows("A");
  auto b = read_rows("B");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("instance: trailing data");
  return OVInstance::make(std::move(a), std::move(b));
}

OVInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const OVInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_text(inst);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

unsigned ceil_log2(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ceil_log2: k must be >= 1");
  unsigned h = 0;
  while ((std::size_t{1} << h) < k) ++h;
  return h;
}

}  // namespace ovgadget
