#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h1kernel/errors.hpp"
#include "h1kernel/group_spec.hpp"
#include "h1kernel/table.hpp"
#include "h1kernel/verify.hpp"

namespace h1kernel {

// Exit codes of the compute subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_inconsistency = 3;

namespace detail {

inline int run_compute(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot read spec file \"" << path << "\"\n";
    return exit_validation;
  }
  std::ostringstream text;
  text << file.rdbuf();
  try {
    const Report report = compute_kernel(parse_group_spec(text.str()));
    out << report_to_json(report).dump() << "\n";
    return exit_ok;
  } catch (const spec_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return exit_inconsistency;
  }
}

inline int run_table(const std::string& twist_name, int max_rank,
                     const std::string& format_name, std::ostream& out,
                     std::ostream& err) {
  Twist twist;
  if (!twist_from_string(twist_name, twist)) {
    err << "error: unknown twist \"" << twist_name << "\"\n";
    return exit_validation;
  }
  const TableFormat format =
      format_name == "json" ? TableFormat::json : TableFormat::tsv;
  try {
    out << emit_table(twist, max_rank, format);
    return exit_ok;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return exit_inconsistency;
  }
}

inline int run_verify(int max_a, int max_d, std::ostream& out, std::ostream& err) {
  VerifySummary summary;
  try {
    summary = verify_sweep(max_a, max_d);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  }
  for (const auto& stats : summary.per_form)
    out << to_string(stats.form) << ": " << stats.cases_compared
        << " invariant types of " << stats.subsets_examined << " subsets\n";
  out << "total: " << summary.cases_compared << " cases over "
      << summary.subsets_examined << " subsets, " << summary.mismatches.size()
      << " mismatches\n";
  for (const auto& m : summary.mismatches)
    out << "MISMATCH " << to_string(m.form) << " type " << to_string(m.type) << ": "
        << m.detail << "\n";
  return summary.ok() ? exit_ok : 1;
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Kernel cardinalities of stabilizer cohomology for quasi-split "
               "adjoint groups, computed on affine Dynkin diagrams"};
  app.require_subcommand(1);

  std::string spec_path;
  auto* compute = app.add_subcommand(
      "compute", "Evaluate a group spec file and print the kernel report as JSON");
  compute->add_option("specfile", spec_path, "path to the JSON group spec")->required();

  std::string twist_name;
  int max_table_rank = 0;
  std::string format_name = "tsv";
  auto* table = app.add_subcommand(
      "table", "Print the per-type kernel table for one twisted form");
  table->add_option("--twist", twist_name, "2A, 2D, 3D4, 6D4 or 2E6")->required();
  table->add_option("--max-rank", max_table_rank, "largest rank to tabulate")->required();
  table->add_option("--format", format_name, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  int max_a = 12;
  int max_d = 10;
  auto* verify = app.add_subcommand(
      "verify", "Exhaustively compare the closed forms against the orbit oracle");
  verify->add_option("--max-a", max_a, "largest A rank to sweep");
  verify->add_option("--max-d", max_d, "largest D rank to sweep");

  // CLI11 wants mutable argv-style input; it parses back-to-front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (compute->parsed()) return detail::run_compute(spec_path, out, err);
  if (table->parsed())
    return detail::run_table(twist_name, max_table_rank, format_name, out, err);
  return detail::run_verify(max_a, max_d, out, err);
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

} // namespace h1kernel
