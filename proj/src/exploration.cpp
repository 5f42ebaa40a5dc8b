#include "isa/exploration.hpp"

#include <cmath>
#include <map>

namespace isa {

namespace {
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
}  // namespace

Quantizer::Quantizer(const std::vector<DimInfo>& dims, double resolution) {
  if (resolution <= 0.0) throw ConfigError("Quantizer: resolution must be > 0");
  widths_.reserve(dims.size());
  for (const auto& d : dims) {
    if (d.discrete || d.hi <= d.lo) {
      widths_.push_back(0.0);
    } else {
      widths_.push_back(resolution * (d.hi - d.lo));
    }
  }
}

Quantizer Quantizer::uniform(int state_dim, double width) {
  if (width <= 0.0) throw ConfigError("Quantizer: width must be > 0");
  return Quantizer(std::vector<double>(static_cast<std::size_t>(state_dim), width));
}

std::int64_t Quantizer::cell(double value, int dim_1based) const {
  if (dim_1based < 1 || static_cast<std::size_t>(dim_1based) > widths_.size()) {
    throw ConfigError("Quantizer: dimension index out of range");
  }
  const double w = widths_[static_cast<std::size_t>(dim_1based - 1)];
  if (w <= 0.0) return std::llround(value);
  // nudge before floor so exact multiples of the width stay in their own cell
  return static_cast<std::int64_t>(std::floor(value / w + 1e-9));
}

std::uint64_t hash_cells(std::span<const std::int64_t> cells) {
  std::uint64_t h = kFnvOffset;
  for (std::int64_t c : cells) {
    auto u = static_cast<std::uint64_t>(c);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffull;
      h *= kFnvPrime;
    }
  }
  return h;
}

std::uint64_t hash_projection(const StateVector& s, const IndexSet& dims, const Quantizer& q) {
  std::vector<std::int64_t> cells;
  cells.reserve(dims.size());
  for (int k : dims) {
    if (k < 1 || static_cast<std::size_t>(k) > s.size()) {
      throw ConfigError("hash_projection: dimension index out of range");
    }
    cells.push_back(q.cell(s[static_cast<std::size_t>(k - 1)], k));
  }
  return hash_cells(cells);
}

void CountTable::write_histogram_csv(std::ostream& os) const {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& [cell, n] : counts_) ++hist[n];
  os << "visits,cells\n";
  for (const auto& [n, cells] : hist) os << n << "," << cells << "\n";
}

nlohmann::json CountTable::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [cell, n] : counts_) {
    cells.push_back(cell);
    values.push_back(n);
  }
  return {{"cells", std::move(cells)}, {"visits", std::move(values)}};
}

CountTable CountTable::from_json(const nlohmann::json& j) {
  CountTable t;
  const auto& cells = j.at("cells");
  const auto& visits = j.at("visits");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    t.counts_[cells[i].get<std::uint64_t>()] = visits[i].get<std::uint64_t>();
  }
  return t;
}

double count_bonus(CountTable& table, const StateVector& s_next, const IndexSet& dims,
                   const Quantizer& q) {
  const std::uint64_t n = table.visit(hash_projection(s_next, dims, q));
  return 1.0 / std::sqrt(static_cast<double>(n));
}

double exploration_reward(double common_bonus, double special_bonus, bool action_affects_common,
                          double beta1) {
  return action_affects_common ? common_bonus + beta1 * special_bonus : beta1 * special_bonus;
}

}  // namespace isa
