#include "isa/types.hpp"

#include <algorithm>

namespace isa {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw ConfigError("IndexSet: dimension indices are 1-based and must be >= 1");
  }
}

IndexSet IndexSet::full(int k) {
  std::vector<int> all(static_cast<std::size_t>(k > 0 ? k : 0));
  for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(all));
}

bool IndexSet::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

bool IndexSet::intersects(const IndexSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  std::vector<int> out;
  out.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::vector<int> out;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::difference(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::vector<double> project(const StateVector& s, const IndexSet& dims) {
  std::vector<double> out;
  out.reserve(dims.size());
  for (int k : dims) {
    if (k < 1 || static_cast<std::size_t>(k) > s.size()) {
      throw ConfigError("project: dimension index " + std::to_string(k) +
                        " out of range 1.." + std::to_string(s.size()));
    }
    out.push_back(s[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

double delta(const StateVector& s, const StateVector& s_next, int k) {
  if (s.size() != s_next.size()) {
    throw StructuralError("delta: state vectors have different lengths (" +
                          std::to_string(s.size()) + " vs " + std::to_string(s_next.size()) + ")");
  }
  if (k < 1 || static_cast<std::size_t>(k) > s.size()) {
    throw ConfigError("delta: dimension index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(s.size()));
  }
  return s_next[static_cast<std::size_t>(k - 1)] - s[static_cast<std::size_t>(k - 1)];
}

}  // namespace isa
