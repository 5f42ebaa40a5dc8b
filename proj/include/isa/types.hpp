#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isa/errors.hpp"

namespace isa {

// Global state of the Dec-POMDP, a fixed-length real vector s = [s^1..s^K].
using StateVector = std::vector<double>;

// One discrete action per agent; entry i is in [0, |A_i|).
using JointAction = std::vector<int>;

// Sorted set of 1-based state-dimension indices. All serialized artifacts use
// the 1-based convention; only projection internals convert to offsets.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

  // {1, 2, ..., k}
  static IndexSet full(int k);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  bool contains(int k) const;
  bool intersects(const IndexSet& other) const;
  bool subset_of(const IndexSet& other) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet difference(const IndexSet& other) const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> indices_;  // strictly increasing, all >= 1
};

// One environment step, plus the per-agent observations taken at s.
struct Transition {
  StateVector s;
  JointAction a;
  StateVector s_next;
  double reward = 0.0;
  bool done = false;
  std::vector<StateVector> obs;
};

// Proj_D(s): values of s at the indices of D, in ascending index order.
std::vector<double> project(const StateVector& s, const IndexSet& dims);

// s'^k - s^k for a 1-based dimension k.
double delta(const StateVector& s, const StateVector& s_next, int k);

}  // namespace isa
