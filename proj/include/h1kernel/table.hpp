#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "h1kernel/closed_form.hpp"
#include "h1kernel/diagram.hpp"
#include "h1kernel/errors.hpp"
#include "h1kernel/kernel.hpp"
#include "h1kernel/multitype.hpp"
#include "h1kernel/presets.hpp"

namespace h1kernel {

enum class TableFormat { tsv, json };

namespace detail {

struct TableRow {
  int rank;
  std::string type;
  std::string label;
  std::size_t fixed;
  std::size_t quotient;
};

// All setwise Galois-invariant vertex subsets: unions of vertex orbits.
inline std::vector<VertexSet> invariant_subsets(const PermGroup& gamma, int vertex_count) {
  const std::vector<VertexSet> orbits =
      gamma_vertex_orbits(gamma, VertexSet::full(vertex_count));
  std::vector<VertexSet> subsets;
  subsets.reserve(std::size_t{1} << orbits.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) s = s.set_union(orbits[i]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  return subsets;
}

inline std::string case_label(const TwistedForm& form, const Diagram& d,
                              const VertexSet& type, std::size_t orbit_size) {
  if (form.twist == Twist::two_D) {
    const auto [s_part, r_part] = decompose_2D(d, type);
    std::string label = "|R|=" + std::to_string(r_part.size());
    if (r_part.size() == 0 || r_part.size() == 4)
      label += s_part.invariant_under(d_tau(d)) ? ",tau(S)=S" : ",tau(S)!=S";
    return label;
  }
  return "m=" + std::to_string(orbit_size);
}

inline std::vector<TableRow> table_rows(const TwistedForm& form) {
  const Diagram d = build_affine_diagram(form.family, form.rank);
  const PermGroup xi_nr = preset_xi_nr(form, d);
  const PermGroup gamma = preset_galois(form, d);
  const PermGroup xi = conjugation_fixed(xi_nr, gamma);

  std::vector<TableRow> rows;
  std::set<MultiType> seen_orbits;
  for (const VertexSet& subset : invariant_subsets(gamma, d.vertex_count())) {
    if (subset.empty()) continue;
    const MultiType t = MultiType::single(subset);
    const std::vector<MultiType> orbit = orbit_of(t, xi_nr);
    const MultiType key = *std::min_element(orbit.begin(), orbit.end());
    if (!seen_orbits.insert(key).second) continue;

    const KernelReport oracle = kernel_size({d, xi_nr, gamma, xi, t, d.vertices()});
    const CountPair closed = dispatch(form, t);
    if (closed != CountPair{oracle.fixed_count, oracle.quotient_count})
      throw consistency_error("table: oracle and closed form disagree on " +
                              to_string(form) + ", type " + to_string(subset));
    rows.push_back({form.rank, to_string(subset),
                    case_label(form, d, subset, oracle.orbit_size),
                    oracle.fixed_count, oracle.quotient_count});
  }
  return rows;
}

inline std::vector<int> table_ranks(Twist twist, int max_rank) {
  if (max_rank > h1kernel::max_rank)
    throw std::domain_error("table: max rank above " +
                            std::to_string(h1kernel::max_rank));
  switch (twist) {
    case Twist::two_A: {
      if (max_rank < 1) throw std::domain_error("table: max rank below 1");
      std::vector<int> ranks;
      for (int n = 1; n <= max_rank; ++n) ranks.push_back(n);
      return ranks;
    }
    case Twist::two_D: {
      if (max_rank < 4) throw std::domain_error("table: max rank below 4");
      std::vector<int> ranks;
      for (int n = 4; n <= max_rank; ++n) ranks.push_back(n);
      return ranks;
    }
    case Twist::three_D4:
    case Twist::six_D4:
      if (max_rank < 4) throw std::domain_error("table: max rank below 4");
      return {4};
    case Twist::two_E6:
      if (max_rank < 6) throw std::domain_error("table: max rank below 6");
      return {6};
    case Twist::split:
      break;
  }
  throw std::domain_error("table: twist " + to_string(twist) +
                          " has no per-type table; its kernels are all trivial");
}

inline Family table_family(Twist twist) {
  switch (twist) {
    case Twist::two_A: return Family::A;
    case Twist::two_D:
    case Twist::three_D4:
    case Twist::six_D4: return Family::D;
    case Twist::two_E6: return Family::E6;
    case Twist::split: break;
  }
  throw std::domain_error("table: unsupported twist");
}

} // namespace detail

// One row per (rank, Galois-invariant type class); classes are orbits of
// the diagram action, represented by their first invariant member.  Row
// order is byte-stable: rank ascending, canonical type order within.
inline std::string emit_table(Twist twist, int max_rank, TableFormat format) {
  std::vector<detail::TableRow> rows;
  for (int rank : detail::table_ranks(twist, max_rank)) {
    const TwistedForm form{detail::table_family(twist), rank, twist};
    auto rank_rows = detail::table_rows(form);
    rows.insert(rows.end(), rank_rows.begin(), rank_rows.end());
  }

  if (format == TableFormat::tsv) {
    std::ostringstream out;
    out << "rank\ttype\tcase\tfixed\tquotient\n";
    for (const auto& row : rows)
      out << row.rank << '\t' << row.type << '\t' << row.label << '\t' << row.fixed
          << '\t' << row.quotient << '\n';
    return out.str();
  }

  nlohmann::json doc;
  doc["twist"] = to_string(twist);
  doc["max_rank"] = max_rank;
  nlohmann::json json_rows = nlohmann::json::array();
  for (const auto& row : rows)
    json_rows.push_back({{"rank", row.rank},
                         {"type", row.type},
                         {"case", row.label},
                         {"fixed", row.fixed},
                         {"quotient", row.quotient}});
  doc["rows"] = std::move(json_rows);
  return doc.dump() + "\n";
}

} // namespace h1kernel
