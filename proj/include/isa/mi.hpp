#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "isa/errors.hpp"
#include "isa/types.hpp"

namespace isa {

// Equal-width binning grid over an empirical range. A degenerate range
// (lo == hi) collapses to a single bin.
struct BinningSpec {
  int bin_count = 16;
  double lo = 0.0;
  double hi = 0.0;

  static BinningSpec from_data(std::span<const double> xs, int bin_count);
};

// Maps each x to floor((x - lo) / width); x == hi lands in the top bin.
std::vector<int> bin_values(std::span<const double> xs, const BinningSpec& spec);

// Empirical joint counts of (row symbol, column symbol).
struct JointHistogram {
  std::vector<std::int64_t> counts;  // row-major, rows x cols
  int rows = 0;
  int cols = 0;
  std::int64_t total = 0;

  static JointHistogram from_pairs(std::span<const int> xs, std::span<const int> ys, int rows,
                                   int cols);

  std::int64_t at(int r, int c) const { return counts[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t& at(int r, int c) { return counts[static_cast<std::size_t>(r) * cols + c]; }
};

// Plug-in mutual information of the empirical joint, in bits. Zero-count
// terms contribute nothing; the result is clamped to be non-negative.
double mutual_information(const JointHistogram& h);

// Per-agent matrix of conditional MI estimates: rows are the agent's actions,
// columns are the K state dimensions.
struct MIMatrix {
  int agent = 0;
  std::vector<std::string> action_labels;
  int state_dim = 0;
  std::vector<std::vector<double>> bits;  // [action][dim], dims 0-based internally

  double at(int action, int dim_1based) const {
    return bits[static_cast<std::size_t>(action)][static_cast<std::size_t>(dim_1based - 1)];
  }

  // CSV with a header row; columns are 1-based dimension indices, cells are
  // MI in bits with 6 decimal places.
  void write_csv(std::ostream& os) const;
};

}  // namespace isa
