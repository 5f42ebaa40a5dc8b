#include "isa/mi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace isa {

BinningSpec BinningSpec::from_data(std::span<const double> xs, int bin_count) {
  if (xs.empty()) throw EstimationError("BinningSpec::from_data: empty input");
  if (bin_count < 1) throw ConfigError("BinningSpec: bin_count must be >= 1");
  BinningSpec spec;
  spec.bin_count = bin_count;
  spec.lo = xs[0];
  spec.hi = xs[0];
  for (double x : xs) {
    if (!std::isfinite(x)) throw EstimationError("BinningSpec::from_data: non-finite value");
    spec.lo = std::min(spec.lo, x);
    spec.hi = std::max(spec.hi, x);
  }
  return spec;
}

std::vector<int> bin_values(std::span<const double> xs, const BinningSpec& spec) {
  if (xs.empty()) throw EstimationError("bin_values: empty input");
  if (spec.bin_count < 1) throw ConfigError("bin_values: bin_count must be >= 1");
  if (spec.hi < spec.lo) throw ConfigError("bin_values: range max below min");
  std::vector<int> out(xs.size(), 0);
  if (spec.hi == spec.lo || spec.bin_count == 1) return out;  // single degenerate bin
  const double width = (spec.hi - spec.lo) / spec.bin_count;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw EstimationError("bin_values: non-finite value");
    int b = static_cast<int>(std::floor((xs[i] - spec.lo) / width));
    b = std::clamp(b, 0, spec.bin_count - 1);
    out[i] = b;
  }
  return out;
}

JointHistogram JointHistogram::from_pairs(std::span<const int> xs, std::span<const int> ys,
                                          int rows, int cols) {
  if (xs.size() != ys.size()) {
    throw StructuralError("JointHistogram::from_pairs: sequences differ in length");
  }
  JointHistogram h;
  h.rows = rows;
  h.cols = cols;
  h.counts.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0 || xs[i] >= rows || ys[i] < 0 || ys[i] >= cols) {
      throw StructuralError("JointHistogram::from_pairs: symbol out of range");
    }
    ++h.at(xs[i], ys[i]);
  }
  h.total = static_cast<std::int64_t>(xs.size());
  return h;
}

double mutual_information(const JointHistogram& h) {
  if (h.total <= 0) throw EstimationError("mutual_information: histogram is empty");
  std::vector<std::int64_t> row_sum(static_cast<std::size_t>(h.rows), 0);
  std::vector<std::int64_t> col_sum(static_cast<std::size_t>(h.cols), 0);
  for (int r = 0; r < h.rows; ++r) {
    for (int c = 0; c < h.cols; ++c) {
      row_sum[static_cast<std::size_t>(r)] += h.at(r, c);
      col_sum[static_cast<std::size_t>(c)] += h.at(r, c);
    }
  }
  const double total = static_cast<double>(h.total);
  double mi = 0.0;
  for (int r = 0; r < h.rows; ++r) {
    for (int c = 0; c < h.cols; ++c) {
      const std::int64_t n = h.at(r, c);
      if (n == 0) continue;  // 0 log 0 := 0
      const double p = static_cast<double>(n) / total;
      // p(x,y) / (p(x) p(y)) = n * total / (row * col)
      const double ratio = static_cast<double>(n) * total /
                           (static_cast<double>(row_sum[static_cast<std::size_t>(r)]) *
                            static_cast<double>(col_sum[static_cast<std::size_t>(c)]));
      mi += p * std::log2(ratio);
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

void MIMatrix::write_csv(std::ostream& os) const {
  os << "action";
  for (int k = 1; k <= state_dim; ++k) os << "," << k;
  os << "\n";
  for (std::size_t a = 0; a < bits.size(); ++a) {
    os << (a < action_labels.size() ? action_labels[a] : ("action_" + std::to_string(a)));
    char buf[32];
    for (int k = 0; k < state_dim; ++k) {
      std::snprintf(buf, sizeof(buf), ",%.6f", bits[a][static_cast<std::size_t>(k)]);
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace isa
