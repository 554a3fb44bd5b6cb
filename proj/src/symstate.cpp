#include "wtangle/symstate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wtangle {

DegeneracyConfig::DegeneracyConfig(std::vector<int> p) : parts(std::move(p)) {
  require(!parts.empty(), "DegeneracyConfig: needs at least one part");
  require(std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 1; }),
          "DegeneracyConfig: parts must be positive");
  require(std::is_sorted(parts.begin(), parts.end(), std::greater<>()),
          "DegeneracyConfig: parts must be non-increasing");
}

int DegeneracyConfig::n_qubits() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string DegeneracyConfig::label() const {
  std::ostringstream out;
  out << "D_{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << ',';
    out << parts[i];
  }
  out << '}';
  return out.str();
}

namespace {

// Emits partitions of `remaining` into `slots` parts, each <= `cap`, largest
// first, so the output is lexicographically descending.
void emit_partitions(int remaining, int slots, int cap, std::vector<int>& prefix,
                     std::vector<DegeneracyConfig>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Remaining slots each need at least 1; the current part is also at least
  // ceil(remaining / slots) for the sequence to stay non-increasing.
  const int hi = std::min(cap, remaining - (slots - 1));
  const int lo = (remaining + slots - 1) / slots;
  for (int part = hi; part >= lo; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, slots - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DegeneracyConfig> enumerate_slocc_configs(int n, int r) {
  require(n >= 1, "enumerate_slocc_configs: n must be positive");
  require(r >= 1 && r <= n, "enumerate_slocc_configs: r must satisfy 1 <= r <= n");
  std::vector<DegeneracyConfig> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(r));
  emit_partitions(n, r, n, prefix, out);
  return out;
}

std::uint64_t partition_count(int n, int r) {
  require(n >= 0 && r >= 0, "partition_count: arguments must be non-negative");
  // table[m][s] = p(m, s)
  std::vector<std::vector<std::uint64_t>> table(
      static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 1, 0));
  table[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int s = 1; s <= std::min(m, r); ++s) {
      table[m][s] = table[m - 1][s - 1] + table[m - s][s];
    }
  }
  return table[n][r];
}

std::uint64_t partition_count(int n) {
  std::uint64_t total = n == 0 ? 1 : 0;
  for (int r = 1; r <= n; ++r) total += partition_count(n, r);
  return total;
}

}  // namespace wtangle
