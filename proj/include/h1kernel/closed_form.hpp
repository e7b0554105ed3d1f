#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "h1kernel/diagram.hpp"
#include "h1kernel/kernel.hpp"
#include "h1kernel/multitype.hpp"
#include "h1kernel/presets.hpp"

namespace h1kernel {

// (gamma-fixed count, kernel cardinality) as produced by the case analyses.
struct CountPair {
  std::size_t fixed = 0;
  std::size_t quotient = 0;

  friend bool operator==(const CountPair&, const CountPair&) = default;
};

namespace detail {

inline MultiType require_single_part(const MultiType& t, const char* who) {
  if (t.parts().size() > 1)
    throw std::domain_error(std::string(who) +
                            ": closed forms cover single-part types only");
  return t;
}

inline void require_invariant(const TwistedForm& form, const Diagram& d,
                              const MultiType& t, const char* who) {
  const PermGroup gamma = preset_galois(form, d);
  for (const auto& s : gamma.elements())
    for (const auto& part : t.parts())
      if (!part.invariant_under(s))
        throw std::domain_error(std::string(who) + ": type " + to_string(t) +
                                " is not invariant under the Galois preset (" +
                                cycle_string(s) + " moves " + to_string(part) + ")");
}

} // namespace detail

// Decomposition of a Galois-invariant type on affine D_n into the part
// supported on the four extremal vertices {0, 1, n-1, n} and the rest.
struct TwoDnDecomposition {
  VertexSet s_part;
  VertexSet r_part;
};

inline TwoDnDecomposition decompose_2D(const Diagram& d, const VertexSet& type) {
  if (d.family() != Family::D)
    throw std::domain_error("decompose_2D: diagram is not of family D");
  const int n = d.rank();
  const VertexSet extremal{0, 1, n - 1, n};
  return {type.difference(extremal), type.intersect(extremal)};
}

// Affine A_n with the rotation group and the reflection through vertex 0:
// m is the rotation-orbit size of t.  m odd gives (1,1); m even gives a
// fixed count of 2, with the kernel trivial exactly when (n+1)/m is odd.
inline CountPair kernel_2A(int rank, const MultiType& t) {
  const TwistedForm form{Family::A, rank, Twist::two_A};
  const Diagram d = build_affine_diagram(Family::A, rank);
  detail::require_single_part(t, "kernel_2A");
  detail::require_invariant(form, d, t, "kernel_2A");

  const std::size_t m = orbit_of(t, preset_xi_nr(form, d)).size();
  const std::size_t cycle = static_cast<std::size_t>(rank) + 1;
  if (cycle % m != 0)
    throw std::logic_error("kernel_2A: orbit size does not divide the cycle length");
  if (m % 2 != 0) return {1, 1};
  return (cycle / m) % 2 != 0 ? CountPair{2, 1} : CountPair{2, 2};
}

// Affine D_n (nontrialitary).  Writing t = S + R against the extremal
// vertices: |R| in {0,4} gives (1,1) when tau fixes S and (2,2) otherwise;
// |R| odd gives (2,1); |R| = 2 gives (2,2).
inline CountPair kernel_2D(int rank, const MultiType& t) {
  const TwistedForm form{Family::D, rank, Twist::two_D};
  const Diagram d = build_affine_diagram(Family::D, rank);
  detail::require_single_part(t, "kernel_2D");
  detail::require_invariant(form, d, t, "kernel_2D");

  const VertexSet type = t.empty() ? VertexSet{} : t.parts().front();
  const auto [s_part, r_part] = decompose_2D(d, type);
  switch (r_part.size()) {
    case 0:
    case 4:
      return s_part.invariant_under(d_tau(d)) ? CountPair{1, 1} : CountPair{2, 2};
    case 1:
    case 3:
      return {2, 1};
    case 2:
      return {2, 2};
    default:
      throw std::logic_error("kernel_2D: impossible extremal part");
  }
}

// Trialitary D4, 2E6, split and the remaining untreated families: the
// gamma-fixed orbit part is a single class.
inline CountPair kernel_const(const TwistedForm& form, const MultiType&) {
  switch (form.twist) {
    case Twist::three_D4:
    case Twist::six_D4:
    case Twist::two_E6:
    case Twist::split:
      return {1, 1};
    default:
      throw std::domain_error("kernel_const: form " + to_string(form) +
                              " has a dedicated case analysis");
  }
}

// Routes a strongly Galois-invariant single-part type to its case analysis.
inline CountPair dispatch(const TwistedForm& form, const MultiType& t) {
  validate_form(form);
  switch (form.twist) {
    case Twist::two_A:
      return kernel_2A(form.rank, t);
    case Twist::two_D:
      return kernel_2D(form.rank, t);
    default: {
      const Diagram d = build_affine_diagram(form.family, form.rank);
      detail::require_invariant(form, d, t, "dispatch");
      return kernel_const(form, t);
    }
  }
}

} // namespace h1kernel
