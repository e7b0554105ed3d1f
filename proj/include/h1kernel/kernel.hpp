#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "h1kernel/diagram.hpp"
#include "h1kernel/multitype.hpp"
#include "h1kernel/permutation.hpp"
#include "h1kernel/vertex_set.hpp"

namespace h1kernel {

// The full input of one kernel computation: the affine diagram, the
// unramified automorphism image xi_nr with its Galois action gamma, the
// descended subgroup xi, the type t of the invariant multifacet, and the
// type t_max of an invariant chamber.
struct KernelProblem {
  Diagram diagram;
  PermGroup xi_nr;
  PermGroup gamma;
  PermGroup xi;
  MultiType t;
  VertexSet t_max;
};

struct KernelReport {
  std::size_t orbit_size = 0;     // m, the cardinality of the xi_nr-orbit of t
  std::size_t fixed_count = 0;    // strongly gamma-invariant members incident to t_max
  std::size_t quotient_count = 0; // xi-classes among those: the kernel cardinality
  std::vector<MultiType> witnesses; // one canonical representative per class

  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

// Number of xi-orbits on the given list, plus one representative each.
// xi must map the list into itself; this holds whenever the list is the
// gamma-fixed part of an orbit and xi is conjugation-fixed under gamma.
inline std::pair<std::size_t, std::vector<MultiType>> count_xi_classes(
    const std::vector<MultiType>& fixed, const PermGroup& xi) {
  std::map<MultiType, std::size_t> index;
  for (std::size_t i = 0; i < fixed.size(); ++i) index.emplace(fixed[i], i);
  if (index.size() != fixed.size())
    throw std::invalid_argument("count_xi_classes: duplicate types in input");

  std::vector<std::size_t> parent(fixed.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (const auto& w : xi.generators()) {
      const MultiType image = act_on_multitype(w, fixed[i]);
      const auto it = index.find(image);
      if (it == index.end())
        throw std::invalid_argument(
            "count_xi_classes: xi does not preserve the given set");
      parent[find(i)] = find(it->second);
    }

  std::map<std::size_t, MultiType> representative;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const std::size_t root = find(i);
    auto it = representative.find(root);
    if (it == representative.end())
      representative.emplace(root, fixed[i]);
    else if (fixed[i] < it->second)
      it->second = fixed[i];
  }

  std::vector<MultiType> witnesses;
  witnesses.reserve(representative.size());
  for (auto& [root, rep] : representative) witnesses.push_back(rep);
  std::sort(witnesses.begin(), witnesses.end());
  return {witnesses.size(), std::move(witnesses)};
}

inline void validate_problem(const KernelProblem& p) {
  const int n = p.diagram.vertex_count();
  if (p.xi_nr.degree() != n || p.gamma.degree() != n || p.xi.degree() != n)
    throw std::invalid_argument("KernelProblem: group degree does not match diagram");
  if (!p.xi.is_subgroup_of(p.xi_nr))
    throw std::invalid_argument("KernelProblem: xi is not contained in xi_nr");
  for (const auto& part : p.t.parts())
    if (!part.subset_of(p.t_max))
      throw std::invalid_argument("KernelProblem: t has a part outside t_max");
  for (const auto& s : p.gamma.elements())
    if (!p.t_max.invariant_under(s))
      throw std::invalid_argument("KernelProblem: t_max is not gamma-invariant");
}

// The brute-force kernel oracle: orbit of t under xi_nr, gamma-invariant
// members incident to t_max, then xi-classes.  quotient_count is the
// kernel cardinality.
inline KernelReport kernel_size(const KernelProblem& p) {
  validate_problem(p);
  const std::vector<MultiType> orbit = orbit_of(p.t, p.xi_nr);
  const std::vector<MultiType> fixed =
      incidence_filter(strongly_invariant_filter(orbit, p.gamma), p.t_max);
  for (const auto& w : p.xi.elements())
    for (const auto& t : fixed)
      if (!strongly_invariant(act_on_multitype(w, t), p.gamma))
        throw std::invalid_argument(
            "kernel_size: xi moved a strongly invariant type off the fixed set");
  auto [classes, witnesses] = count_xi_classes(fixed, p.xi);

  KernelReport report;
  report.orbit_size = orbit.size();
  report.fixed_count = fixed.size();
  report.quotient_count = classes;
  report.witnesses = std::move(witnesses);
  return report;
}

// Gamma-orbits of the vertices lying in t_max (t_max is setwise
// gamma-invariant, so orbits of its members stay inside it).
inline std::vector<VertexSet> gamma_vertex_orbits(const PermGroup& gamma,
                                                  const VertexSet& t_max) {
  std::vector<VertexSet> orbits;
  std::vector<bool> seen(static_cast<std::size_t>(gamma.degree()), false);
  for (int v : t_max) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> orbit;
    for (const auto& s : gamma.elements()) {
      const int w = s(v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        orbit.push_back(w);
      }
    }
    orbits.emplace_back(std::move(orbit));
  }
  return orbits;
}

// The kernel of the action on the descended diagram: elements of the
// gamma-fixed stabilizer of t_max in xi_nr that fix every gamma-orbit of
// vertices inside t_max setwise.
inline PermGroup ext_action_kernel(const Diagram& d, const PermGroup& gamma,
                                   const PermGroup& xi_nr, const VertexSet& t_max) {
  if (xi_nr.degree() != d.vertex_count() || gamma.degree() != d.vertex_count())
    throw std::invalid_argument("ext_action_kernel: group degree does not match diagram");
  for (const auto& s : gamma.elements())
    if (!t_max.invariant_under(s))
      throw std::domain_error("ext_action_kernel: t_max is not gamma-invariant");

  std::vector<Permutation> stabilizer;
  for (const auto& w : xi_nr.elements())
    if (t_max.apply(w) == t_max) stabilizer.push_back(w);

  const PermGroup fixed =
      conjugation_fixed(PermGroup::from_elements(std::move(stabilizer)), gamma);
  const std::vector<VertexSet> orbits = gamma_vertex_orbits(gamma, t_max);

  std::vector<Permutation> kernel;
  for (const auto& w : fixed.elements()) {
    bool fixes_all = true;
    for (const auto& orbit : orbits)
      if (orbit.apply(w) != orbit) {
        fixes_all = false;
        break;
      }
    if (fixes_all) kernel.push_back(w);
  }
  return PermGroup::from_elements(std::move(kernel));
}

} // namespace h1kernel
