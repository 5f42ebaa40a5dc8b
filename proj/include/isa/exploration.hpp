#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "isa/env.hpp"
#include "isa/types.hpp"

namespace isa {

// Maps real coordinates to integer grid cells before hashing. Discrete
// dimensions use exact integer values; continuous dimensions use a cell
// width of `resolution` times the dimension's declared range.
class Quantizer {
 public:
  Quantizer(const std::vector<DimInfo>& dims, double resolution = 0.1);

  // Fixed cell width on every dimension (test and ad-hoc use).
  static Quantizer uniform(int state_dim, double width);

  std::int64_t cell(double value, int dim_1based) const;
  int state_dim() const { return static_cast<int>(widths_.size()); }

 private:
  explicit Quantizer(std::vector<double> widths) : widths_(std::move(widths)) {}
  std::vector<double> widths_;  // <= 0 means exact integer rounding
};

// FNV-1a over the bytes of the cell sequence; the empty sequence hashes to
// the offset basis, which doubles as the sentinel cell for empty segments.
std::uint64_t hash_cells(std::span<const std::int64_t> cells);

// phi: project, quantize, hash.
std::uint64_t hash_projection(const StateVector& s, const IndexSet& dims, const Quantizer& q);

// Visit counter N(phi(.)). Increment-only during a run.
class CountTable {
 public:
  std::uint64_t visit(std::uint64_t h) { return ++counts_[h]; }
  std::uint64_t count(std::uint64_t h) const {
    const auto it = counts_.find(h);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t distinct_cells() const { return counts_.size(); }

  // Diagnostic dump: how many cells were visited exactly n times.
  void write_histogram_csv(std::ostream& os) const;

  nlohmann::json to_json() const;
  static CountTable from_json(const nlohmann::json& j);

 private:
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

// Counts the projected next state, then returns 1/sqrt(new count). Shared
// table for the common segment, per-agent tables for the special segments.
double count_bonus(CountTable& table, const StateVector& s_next, const IndexSet& dims,
                   const Quantizer& q);

// Influence-gated combination of the two bonuses: the common-segment bonus is
// paid only when the executed action can affect the common segment.
double exploration_reward(double common_bonus, double special_bonus, bool action_affects_common,
                          double beta1);

}  // namespace isa
