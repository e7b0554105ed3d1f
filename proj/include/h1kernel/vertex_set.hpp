#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "h1kernel/permutation.hpp"

namespace h1kernel {

// A set of diagram vertex ids in canonical sorted order.
class VertexSet {
public:
  VertexSet() = default;

  VertexSet(std::initializer_list<int> members) : members_(members) { canonicalize(); }

  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    canonicalize();
  }

  static VertexSet full(int vertex_count) {
    std::vector<int> all(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(all));
  }

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  bool subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  bool intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else
        return true;
    }
    return false;
  }

  VertexSet set_union(const VertexSet& other) const {
    std::vector<int> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  VertexSet intersect(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  VertexSet difference(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  VertexSet apply(const Permutation& p) const {
    std::vector<int> out;
    out.reserve(members_.size());
    for (int v : members_) out.push_back(p(v));
    return VertexSet(std::move(out));
  }

  bool invariant_under(const Permutation& p) const { return apply(p) == *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  void canonicalize() {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("VertexSet: duplicate vertex id");
    if (!members_.empty() && members_.front() < 0)
      throw std::invalid_argument("VertexSet: negative vertex id");
  }

  std::vector<int> members_;
};

// Renders as "{0,2,5}"; the empty set as "{}".
inline std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

} // namespace h1kernel
