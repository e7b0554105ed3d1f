#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "h1kernel/permutation.hpp"
#include "h1kernel/vertex_set.hpp"

namespace h1kernel {

// A facet multitype: pairwise-disjoint vertex subsets in canonical order
// (parts sorted lexicographically, empty parts dropped).  A single part
// models an ordinary facet type; the empty multitype is allowed.
class MultiType {
public:
  MultiType() = default;

  explicit MultiType(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
    parts_.erase(std::remove_if(parts_.begin(), parts_.end(),
                                [](const VertexSet& p) { return p.empty(); }),
                 parts_.end());
    std::sort(parts_.begin(), parts_.end());
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (std::size_t j = i + 1; j < parts_.size(); ++j)
        if (parts_[i].intersects(parts_[j]))
          throw std::invalid_argument("MultiType: parts are not pairwise disjoint");
  }

  static MultiType single(VertexSet part) {
    return MultiType(std::vector<VertexSet>{std::move(part)});
  }

  const std::vector<VertexSet>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  VertexSet support() const {
    VertexSet all;
    for (const auto& p : parts_) all = all.set_union(p);
    return all;
  }

  friend bool operator==(const MultiType&, const MultiType&) = default;
  friend auto operator<=>(const MultiType&, const MultiType&) = default;

private:
  std::vector<VertexSet> parts_;
};

inline std::string to_string(const MultiType& t) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& p : t.parts()) {
    if (!first) out << ',';
    out << to_string(p);
    first = false;
  }
  out << '}';
  return out.str();
}

// Image of a multitype, each part mapped elementwise and re-canonicalized.
inline MultiType act_on_multitype(const Permutation& p, const MultiType& t) {
  std::vector<VertexSet> parts;
  parts.reserve(t.parts().size());
  for (const auto& part : t.parts()) parts.push_back(part.apply(p));
  return MultiType(std::move(parts));
}

// Breadth-first orbit of t under g, deduplicated by canonical form.
inline std::vector<MultiType> orbit_of(const MultiType& t, const PermGroup& g) {
  std::vector<MultiType> orbit{t};
  std::set<MultiType> seen{t};
  std::deque<MultiType> frontier{t};
  while (!frontier.empty()) {
    const MultiType current = frontier.front();
    frontier.pop_front();
    for (const auto& gen : g.generators()) {
      MultiType image = act_on_multitype(gen, current);
      if (seen.insert(image).second) {
        orbit.push_back(image);
        frontier.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

// Strong invariance: every group element maps every part to itself
// setwise.  Invariance of the multitype as a whole is not enough.
inline bool strongly_invariant(const MultiType& t, const PermGroup& gamma) {
  for (const auto& s : gamma.elements())
    for (const auto& part : t.parts())
      if (!part.invariant_under(s)) return false;
  return true;
}

inline std::vector<MultiType> strongly_invariant_filter(
    const std::vector<MultiType>& orbit, const PermGroup& gamma) {
  std::vector<MultiType> kept;
  for (const auto& t : orbit)
    if (strongly_invariant(t, gamma)) kept.push_back(t);
  return kept;
}

// Keeps the types incident to t_max, i.e. whose support is contained in it.
inline std::vector<MultiType> incidence_filter(const std::vector<MultiType>& types,
                                               const VertexSet& t_max) {
  std::vector<MultiType> kept;
  for (const auto& t : types)
    if (t.support().subset_of(t_max)) kept.push_back(t);
  return kept;
}

} // namespace h1kernel
