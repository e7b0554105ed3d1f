#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "h1kernel/permutation.hpp"
#include "h1kernel/vertex_set.hpp"

namespace h1kernel {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

inline bool family_from_string(const std::string& s, Family& out) {
  static const std::pair<const char*, Family> table[] = {
      {"A", Family::A},   {"B", Family::B},   {"C", Family::C},
      {"D", Family::D},   {"E6", Family::E6}, {"E7", Family::E7},
      {"E8", Family::E8}, {"F4", Family::F4}, {"G2", Family::G2}};
  for (const auto& [name, fam] : table)
    if (s == name) {
      out = fam;
      return true;
    }
  return false;
}

// Smallest finite-type rank accepted per family (fixed-rank families
// return that rank; max_family_rank equals it there).
inline int min_family_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
  }
  return 0;
}

// Diagrams are kept at 25 vertices or fewer.
inline constexpr int max_rank = 24;

inline int max_family_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return max_rank;
  }
}

// Stand-in multiplicity tag for the bond of affine A1, whose true label
// is infinite.  Lies outside {1,2,3} and carries no arrow, so the two
// vertices stay swappable and the bond never matches any other family's.
inline constexpr int a1_bond_label = 4;

// An undirected bond u-v.  label is the multiplicity (1, 2 or 3) or
// a1_bond_label; arrow_to names the endpoint the arrow points at (the
// short-root side) and is -1 for simple and A1 bonds.
struct Bond {
  int u;
  int v;
  int label;
  int arrow_to;

  friend bool operator==(const Bond&, const Bond&) = default;
};

class Diagram;
inline Diagram build_affine_diagram(Family family, int rank);

// An affine Dynkin diagram on vertices 0..rank, vertex 0 distinguished.
//
// Fixed vertex labeling per family (all presets and closed forms are
// expressed against it):
//   A  (n>=2): cycle 0-1-...-n-0.                       A1: 0=1 (A1 bond).
//   B  (n>=3): 0 and 1 joined to 2, chain 2-...-(n-1), (n-1)=>n.
//   B2:        0=>2<=1 (both double bonds point at 2).
//   C  (n>=3): 0=>1, chain 1-...-(n-1), n=>(n-1).
//   D  (n>=4): fork {0,1} joined to 2, chain 2-...-(n-2),
//              fork {n-1,n} joined to n-2.
//   E6: legs 0-2-4, 1-3-4, 6-5-4 around the center 4.
//   E7: chain 0-1-3-4-5-6-7 with 2 joined to 4.
//   E8: chain 1-3-4-5-6-7-8-0 with 2 joined to 4.
//   F4: chain 0-1-2-3-4 with 2=>3.
//   G2: 0-2 and triple bond 2=>1.
// Deleting vertex 0 always leaves the finite diagram of (family, rank).
class Diagram {
public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int vertex_count() const { return rank_ + 1; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  // Directed adjacency code: 0 when u and v are not joined, otherwise
  // label*4 plus 1 if the arrow points at v, 2 if it points at u.
  int bond_code(int u, int v) const {
    return codes_[static_cast<std::size_t>(u * vertex_count() + v)];
  }

  bool adjacent(int u, int v) const { return bond_code(u, v) != 0; }

  VertexSet vertices() const { return VertexSet::full(vertex_count()); }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

private:
  friend Diagram build_affine_diagram(Family, int);

  Diagram(Family family, int rank, std::vector<Bond> bonds)
      : family_(family), rank_(rank), bonds_(std::move(bonds)) {
    const int n = vertex_count();
    codes_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& b : bonds_) {
      const int uv = b.label * 4 + (b.arrow_to == b.v ? 1 : b.arrow_to == b.u ? 2 : 0);
      const int vu = b.label * 4 + (b.arrow_to == b.u ? 1 : b.arrow_to == b.v ? 2 : 0);
      codes_[static_cast<std::size_t>(b.u * n + b.v)] = uv;
      codes_[static_cast<std::size_t>(b.v * n + b.u)] = vu;
    }
    check_connected();
  }

  void check_connected() const {
    const int n = vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)] && adjacent(u, v)) {
          seen[static_cast<std::size_t>(v)] = true;
          ++reached;
          queue.push(v);
        }
    }
    if (reached != n)
      throw std::invalid_argument("Diagram: underlying graph is not connected");
  }

  Family family_;
  int rank_;
  std::vector<Bond> bonds_;
  std::vector<int> codes_;
};

inline Diagram build_affine_diagram(Family family, int rank) {
  if (rank < min_family_rank(family) || rank > max_family_rank(family))
    throw std::invalid_argument("build_affine_diagram: invalid rank " +
                                std::to_string(rank) + " for family " +
                                to_string(family));

  std::vector<Bond> bonds;
  auto simple = [&](int u, int v) { bonds.push_back({std::min(u, v), std::max(u, v), 1, -1}); };
  auto labeled = [&](int u, int v, int label, int arrow_to) {
    bonds.push_back({std::min(u, v), std::max(u, v), label, arrow_to});
  };

  switch (family) {
    case Family::A:
      if (rank == 1) {
        labeled(0, 1, a1_bond_label, -1);
      } else {
        for (int v = 0; v < rank; ++v) simple(v, v + 1);
        simple(rank, 0);
      }
      break;
    case Family::B:
      if (rank == 2) {
        labeled(0, 2, 2, 2);
        labeled(1, 2, 2, 2);
      } else {
        simple(0, 2);
        simple(1, 2);
        for (int v = 2; v + 1 < rank; ++v) simple(v, v + 1);
        labeled(rank - 1, rank, 2, rank);
      }
      break;
    case Family::C:
      labeled(0, 1, 2, 1);
      for (int v = 1; v + 1 < rank; ++v) simple(v, v + 1);
      labeled(rank - 1, rank, 2, rank - 1);
      break;
    case Family::D:
      simple(0, 2);
      simple(1, 2);
      for (int v = 2; v + 1 <= rank - 2; ++v) simple(v, v + 1);
      simple(rank - 2, rank - 1);
      simple(rank - 2, rank);
      break;
    case Family::E6:
      simple(0, 2);
      simple(2, 4);
      simple(1, 3);
      simple(3, 4);
      simple(6, 5);
      simple(5, 4);
      break;
    case Family::E7:
      simple(0, 1);
      simple(1, 3);
      simple(3, 4);
      simple(4, 5);
      simple(5, 6);
      simple(6, 7);
      simple(2, 4);
      break;
    case Family::E8:
      simple(1, 3);
      simple(3, 4);
      simple(4, 5);
      simple(5, 6);
      simple(6, 7);
      simple(7, 8);
      simple(8, 0);
      simple(2, 4);
      break;
    case Family::F4:
      simple(0, 1);
      simple(1, 2);
      labeled(2, 3, 2, 3);
      simple(3, 4);
      break;
    case Family::G2:
      simple(0, 2);
      labeled(1, 2, 3, 1);
      break;
  }
  return Diagram(family, rank, std::move(bonds));
}

// Every vertex permutation preserving bonds, multiplicities and arrow
// orientations.  Plain backtracking with fingerprint pruning.
inline PermGroup diagram_automorphisms(const Diagram& d) {
  const int n = d.vertex_count();

  std::vector<std::vector<int>> fingerprint(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (int c = d.bond_code(u, v); c != 0)
        fingerprint[static_cast<std::size_t>(u)].push_back(c);
    std::sort(fingerprint[static_cast<std::size_t>(u)].begin(),
              fingerprint[static_cast<std::size_t>(u)].end());
  }

  std::vector<Permutation> found;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto search = [&](auto&& self, int next) -> void {
    if (next == n) {
      found.emplace_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (fingerprint[static_cast<std::size_t>(next)] !=
          fingerprint[static_cast<std::size_t>(w)])
        continue;
      bool ok = true;
      for (int j = 0; j < next; ++j)
        if (d.bond_code(j, next) !=
            d.bond_code(image[static_cast<std::size_t>(j)], w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[static_cast<std::size_t>(next)] = w;
      used[static_cast<std::size_t>(w)] = true;
      self(self, next + 1);
      used[static_cast<std::size_t>(w)] = false;
      image[static_cast<std::size_t>(next)] = -1;
    }
  };
  search(search, 0);
  return PermGroup::from_elements(std::move(found));
}

// The special vertices, realized as the automorphism orbit of the
// distinguished vertex 0.  Coincides with the classical mark-1 vertex
// set on every family built here (asserted by the test suite).
inline VertexSet special_vertices(const Diagram& d) {
  const PermGroup aut = diagram_automorphisms(d);
  std::vector<int> orbit;
  for (const auto& g : aut.elements()) orbit.push_back(g(0));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return VertexSet(std::move(orbit));
}

} // namespace h1kernel
