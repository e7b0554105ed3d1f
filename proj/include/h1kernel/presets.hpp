#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "h1kernel/diagram.hpp"
#include "h1kernel/permutation.hpp"

namespace h1kernel {

enum class Twist { split, two_A, two_D, three_D4, six_D4, two_E6 };

inline std::string to_string(Twist t) {
  switch (t) {
    case Twist::split: return "split";
    case Twist::two_A: return "2A";
    case Twist::two_D: return "2D";
    case Twist::three_D4: return "3D4";
    case Twist::six_D4: return "6D4";
    case Twist::two_E6: return "2E6";
  }
  return "?";
}

inline bool twist_from_string(const std::string& s, Twist& out) {
  static const std::pair<const char*, Twist> table[] = {
      {"split", Twist::split},   {"2A", Twist::two_A},   {"2D", Twist::two_D},
      {"3D4", Twist::three_D4}, {"6D4", Twist::six_D4}, {"2E6", Twist::two_E6}};
  for (const auto& [name, twist] : table)
    if (s == name) {
      out = twist;
      return true;
    }
  return false;
}

struct TwistedForm {
  Family family;
  int rank;
  Twist twist;

  friend bool operator==(const TwistedForm&, const TwistedForm&) = default;
};

inline std::string to_string(const TwistedForm& f) {
  const std::string family = to_string(f.family);
  // E6..G2 already carry their rank in the family name
  const std::string rank = family.size() == 1 ? std::to_string(f.rank) : "";
  return to_string(f.twist) + "/" + family + rank;
}

inline bool form_is_valid(const TwistedForm& f) {
  if (f.rank < min_family_rank(f.family) || f.rank > max_family_rank(f.family))
    return false;
  switch (f.twist) {
    case Twist::split: return true;
    case Twist::two_A: return f.family == Family::A;
    case Twist::two_D: return f.family == Family::D;
    case Twist::three_D4:
    case Twist::six_D4: return f.family == Family::D && f.rank == 4;
    case Twist::two_E6: return f.family == Family::E6;
  }
  return false;
}

inline void validate_form(const TwistedForm& f) {
  if (!form_is_valid(f))
    throw std::domain_error("twist " + to_string(f.twist) + " is not compatible with " +
                            to_string(f.family) + std::to_string(f.rank));
}

inline void require_diagram(const TwistedForm& f, const Diagram& d) {
  validate_form(f);
  if (d.family() != f.family || d.rank() != f.rank)
    throw std::domain_error("diagram does not match form " + to_string(f));
}

// --- named diagram automorphisms --------------------------------------
//
// Family A: r rotates the cycle one step, s reflects it through vertex 0.
// Family D (extremal vertices 0, 1, n-1, n):
//   tau       swaps the two forks and mirrors the internal chain,
//   tau_prime swaps each fork's leaves in place: (0 1)(n-1 n),
//   sigma     swaps one fork's leaves:           (n-1 n),
//   phi       = tau . sigma, of order 4 with phi^2 = tau_prime.

inline Permutation cycle_rotation(const Diagram& d, int step = 1) {
  const int m = d.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v)
    images[static_cast<std::size_t>(v)] = ((v + step) % m + m) % m;
  return Permutation(std::move(images));
}

inline Permutation cycle_reflection(const Diagram& d) {
  const int m = d.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) images[static_cast<std::size_t>(v)] = (m - v) % m;
  return Permutation(std::move(images));
}

inline Permutation d_tau(const Diagram& d) {
  const int n = d.rank();
  std::vector<int> images(static_cast<std::size_t>(n + 1));
  images[0] = n - 1;
  images[1] = n;
  images[static_cast<std::size_t>(n - 1)] = 0;
  images[static_cast<std::size_t>(n)] = 1;
  for (int v = 2; v <= n - 2; ++v) images[static_cast<std::size_t>(v)] = n - v;
  return Permutation(std::move(images));
}

inline Permutation d_tau_prime(const Diagram& d) {
  const int n = d.rank();
  return Permutation::from_cycles(n + 1, {{0, 1}, {n - 1, n}});
}

inline Permutation d_sigma(const Diagram& d) {
  const int n = d.rank();
  return Permutation::from_cycles(n + 1, {{n - 1, n}});
}

inline Permutation d_phi(const Diagram& d) { return compose(d_tau(d), d_sigma(d)); }

inline Permutation e6_rotation(const Diagram&) {
  // leg ends 1 -> 6 -> 0 -> 1, mid-leg 3 -> 5 -> 2 -> 3, center 4 fixed
  return Permutation::from_cycles(7, {{1, 6, 0}, {3, 5, 2}});
}

inline Permutation e6_leg_swap(const Diagram&) {
  return Permutation::from_cycles(7, {{1, 6}, {3, 5}});
}

inline Permutation e7_flip(const Diagram&) {
  return Permutation::from_cycles(8, {{0, 7}, {1, 6}, {3, 5}});
}

// The diagram automorphisms induced by the adjoint group over the maximal
// unramified extension.  Depends only on family and rank, not the twist.
inline PermGroup preset_xi_nr(const TwistedForm& f, const Diagram& d) {
  require_diagram(f, d);
  switch (d.family()) {
    case Family::A:
      return generate_group({cycle_rotation(d)});
    case Family::B:
      return generate_group({Permutation::from_cycles(d.vertex_count(), {{0, 1}})});
    case Family::C: {
      const int n = d.rank();
      std::vector<int> images(static_cast<std::size_t>(n + 1));
      for (int v = 0; v <= n; ++v) images[static_cast<std::size_t>(v)] = n - v;
      return generate_group({Permutation(std::move(images))});
    }
    case Family::D:
      if (d.rank() % 2 == 0)
        return generate_group({d_tau(d), d_tau_prime(d)});
      return generate_group({d_phi(d)});
    case Family::E6:
      return generate_group({e6_rotation(d)});
    case Family::E7:
      return generate_group({e7_flip(d)});
    case Family::E8:
    case Family::F4:
    case Family::G2:
      return PermGroup::trivial(d.vertex_count());
  }
  throw std::logic_error("preset_xi_nr: unreachable");
}

// The finite image of the unramified Galois group in Aut(diagram).
inline PermGroup preset_galois(const TwistedForm& f, const Diagram& d) {
  require_diagram(f, d);
  switch (f.twist) {
    case Twist::split:
      return PermGroup::trivial(d.vertex_count());
    case Twist::two_A:
      return generate_group({cycle_reflection(d)});
    case Twist::two_D:
      return generate_group({d_sigma(d)});
    case Twist::three_D4:
      return generate_group({Permutation::from_cycles(5, {{1, 3, 4}})});
    case Twist::six_D4:
      return generate_group({Permutation::from_cycles(5, {{1, 3, 4}}),
                             Permutation::from_cycles(5, {{3, 4}})});
    case Twist::two_E6:
      return generate_group({e6_leg_swap(d)});
  }
  throw std::logic_error("preset_galois: unreachable");
}

} // namespace h1kernel
