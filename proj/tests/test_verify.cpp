#include <catch2/catch_amalgamated.hpp>

#include "h1kernel/verify.hpp"

using namespace h1kernel;

TEST_CASE("the sweep up to A3/D4 is clean and covers the kernel-2 case") {
  const VerifySummary summary = verify_sweep(3, 4);
  REQUIRE(summary.ok());
  // A1..A3 contribute 4+8+16 subsets; D4 2D/3D4/6D4 and E6 add 32*3 + 128
  REQUIRE(summary.subsets_examined == 4 + 8 + 16 + 32 + 32 + 32 + 128);
  REQUIRE(summary.cases_compared > 0);

  bool a3_seen = false;
  for (const auto& stats : summary.per_form)
    if (stats.form == TwistedForm{Family::A, 3, Twist::two_A}) {
      a3_seen = true;
      REQUIRE(stats.cases_compared == 8); // invariant subsets of the square
    }
  REQUIRE(a3_seen);
}

TEST_CASE("the degenerate A1 bound is accepted") {
  const VerifySummary summary = verify_sweep(1, 4);
  REQUIRE(summary.ok());
}

TEST_CASE("the full sweep to A12/D10 is clean") {
  const VerifySummary summary = verify_sweep(12, 10);
  REQUIRE(summary.ok());
  bool a12_seen = false;
  for (const auto& stats : summary.per_form)
    if (stats.form == TwistedForm{Family::A, 12, Twist::two_A}) {
      a12_seen = true;
      REQUIRE(stats.subsets_examined == (std::uint64_t{1} << 13));
    }
  REQUIRE(a12_seen);
}

TEST_CASE("bounds below the family minima are rejected") {
  REQUIRE_THROWS_AS(verify_sweep(0, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(verify_sweep(3, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(verify_sweep(3, max_rank + 1), std::invalid_argument);
}
