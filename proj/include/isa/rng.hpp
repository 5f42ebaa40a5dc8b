#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace isa {

// Seeded generator with platform-stable derived draws. std::mt19937_64 has a
// fixed bitstream by the standard; the helpers below avoid std::*_distribution,
// whose output is implementation-defined, so frozen test values stay valid.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  int uniform_index(int n) { return static_cast<int>(uniform_int(static_cast<std::uint64_t>(n))); }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (deterministic given the stream).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Independent child stream; consumes one draw from this stream.
  Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

  std::string save_state() const {
    std::ostringstream os;
    os << gen_;
    return os.str();
  }

  void load_state(const std::string& s) {
    std::istringstream is(s);
    is >> gen_;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace isa
