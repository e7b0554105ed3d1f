#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "h1kernel/closed_form.hpp"
#include "h1kernel/diagram.hpp"
#include "h1kernel/kernel.hpp"
#include "h1kernel/multitype.hpp"
#include "h1kernel/presets.hpp"

namespace h1kernel {

struct SweepMismatch {
  TwistedForm form;
  MultiType type;
  std::string detail;
};

struct FormSweepStats {
  TwistedForm form;
  std::uint64_t subsets_examined = 0;
  std::uint64_t cases_compared = 0;
};

struct VerifySummary {
  std::vector<FormSweepStats> per_form;
  std::uint64_t subsets_examined = 0;
  std::uint64_t cases_compared = 0;
  std::vector<SweepMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline void sweep_form(const TwistedForm& form, VerifySummary& summary) {
  const Diagram d = build_affine_diagram(form.family, form.rank);
  const PermGroup xi_nr = preset_xi_nr(form, d);
  const PermGroup gamma = preset_galois(form, d);
  const PermGroup xi = conjugation_fixed(xi_nr, gamma);
  const int n = d.vertex_count();

  FormSweepStats stats{form, 0, 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++stats.subsets_examined;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) members.push_back(v);
    const VertexSet subset(std::move(members));

    bool invariant = true;
    for (const auto& s : gamma.generators())
      if (!subset.invariant_under(s)) {
        invariant = false;
        break;
      }
    if (!invariant) continue;

    ++stats.cases_compared;
    const MultiType t = MultiType::single(subset);
    const KernelReport oracle = kernel_size({d, xi_nr, gamma, xi, t, d.vertices()});
    const CountPair closed = dispatch(form, t);

    if (closed != CountPair{oracle.fixed_count, oracle.quotient_count}) {
      std::ostringstream detail;
      detail << "oracle (" << oracle.fixed_count << "," << oracle.quotient_count
             << ") vs closed form (" << closed.fixed << "," << closed.quotient << ")";
      summary.mismatches.push_back({form, t, detail.str()});
    }

    // Orbit-stabilizer identity on every orbit the sweep touches.
    std::size_t stabilizer = 0;
    for (const auto& w : xi_nr.elements())
      if (act_on_multitype(w, t) == t) ++stabilizer;
    if (oracle.orbit_size * stabilizer != xi_nr.order())
      summary.mismatches.push_back(
          {form, t,
           "orbit-stabilizer violation: " + std::to_string(oracle.orbit_size) + " * " +
               std::to_string(stabilizer) + " != " + std::to_string(xi_nr.order())});
  }
  summary.subsets_examined += stats.subsets_examined;
  summary.cases_compared += stats.cases_compared;
  summary.per_form.push_back(stats);
}

} // namespace detail

// Exhaustive comparison of the closed forms against the orbit oracle over
// every Galois-invariant single-part type of every supported twisted form
// within the given rank bounds.
inline VerifySummary verify_sweep(int max_a_rank, int max_d_rank) {
  if (max_a_rank < 1 || max_a_rank > max_rank)
    throw std::invalid_argument("verify_sweep: A rank bound outside 1.." +
                                std::to_string(max_rank));
  if (max_d_rank < 4 || max_d_rank > max_rank)
    throw std::invalid_argument("verify_sweep: D rank bound outside 4.." +
                                std::to_string(max_rank));

  VerifySummary summary;
  for (int n = 1; n <= max_a_rank; ++n)
    detail::sweep_form({Family::A, n, Twist::two_A}, summary);
  for (int n = 4; n <= max_d_rank; ++n)
    detail::sweep_form({Family::D, n, Twist::two_D}, summary);
  detail::sweep_form({Family::D, 4, Twist::three_D4}, summary);
  detail::sweep_form({Family::D, 4, Twist::six_D4}, summary);
  detail::sweep_form({Family::E6, 6, Twist::two_E6}, summary);
  return summary;
}

} // namespace h1kernel
