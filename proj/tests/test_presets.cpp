#include <catch2/catch_amalgamated.hpp>

#include "h1kernel/diagram.hpp"
#include "h1kernel/presets.hpp"

using namespace h1kernel;

namespace {

// The descended automorphism group each twisted form should cut out:
// trivial except for 2A in odd rank (the half-turn) and 2D (the double
// leaf swap tau').
PermGroup expected_xi(const TwistedForm& form, const Diagram& d) {
  switch (form.twist) {
    case Twist::two_A:
      if (form.rank % 2 == 1)
        return generate_group({cycle_rotation(d, (form.rank + 1) / 2)});
      return PermGroup::trivial(d.vertex_count());
    case Twist::two_D:
      return generate_group({d_tau_prime(d)});
    default:
      return PermGroup::trivial(d.vertex_count());
  }
}

} // namespace

TEST_CASE("form validation") {
  REQUIRE(form_is_valid({Family::A, 3, Twist::two_A}));
  REQUIRE(form_is_valid({Family::D, 4, Twist::six_D4}));
  REQUIRE(form_is_valid({Family::G2, 2, Twist::split}));
  REQUIRE_FALSE(form_is_valid({Family::A, 3, Twist::two_D}));
  REQUIRE_FALSE(form_is_valid({Family::D, 5, Twist::three_D4}));
  REQUIRE_FALSE(form_is_valid({Family::E6, 6, Twist::two_A}));
  REQUIRE_THROWS_AS(validate_form({Family::B, 4, Twist::two_E6}), std::domain_error);
}

TEST_CASE("preset_xi_nr orders") {
  for (int n : {1, 2, 3, 7, 12}) {
    const Diagram d = build_affine_diagram(Family::A, n);
    REQUIRE(preset_xi_nr({Family::A, n, Twist::two_A}, d).order() ==
            static_cast<std::size_t>(n + 1));
  }
  for (int n : {4, 6, 8}) {
    const Diagram d = build_affine_diagram(Family::D, n);
    const PermGroup g = preset_xi_nr({Family::D, n, Twist::two_D}, d);
    REQUIRE(g.order() == 4);
    REQUIRE(g.contains(d_tau(d)));
    REQUIRE(g.contains(d_tau_prime(d)));
  }
  for (int n : {5, 7, 9}) {
    const Diagram d = build_affine_diagram(Family::D, n);
    const PermGroup g = preset_xi_nr({Family::D, n, Twist::two_D}, d);
    REQUIRE(g.order() == 4);
    // cyclic of order 4: phi squares to tau', not to the identity
    const Permutation phi = d_phi(d);
    REQUIRE(g.contains(phi));
    REQUIRE(compose(phi, phi) == d_tau_prime(d));
    REQUIRE_FALSE(g.contains(d_tau(d)));
  }
  {
    const Diagram d = build_affine_diagram(Family::E6, 6);
    REQUIRE(preset_xi_nr({Family::E6, 6, Twist::two_E6}, d).order() == 3);
  }
  REQUIRE(preset_xi_nr({Family::B, 5, Twist::split},
                       build_affine_diagram(Family::B, 5)).order() == 2);
  REQUIRE(preset_xi_nr({Family::C, 4, Twist::split},
                       build_affine_diagram(Family::C, 4)).order() == 2);
  REQUIRE(preset_xi_nr({Family::E7, 7, Twist::split},
                       build_affine_diagram(Family::E7, 7)).order() == 2);
  REQUIRE(preset_xi_nr({Family::E8, 8, Twist::split},
                       build_affine_diagram(Family::E8, 8)).order() == 1);
  REQUIRE(preset_xi_nr({Family::F4, 4, Twist::split},
                       build_affine_diagram(Family::F4, 4)).order() == 1);
  REQUIRE(preset_xi_nr({Family::G2, 2, Twist::split},
                       build_affine_diagram(Family::G2, 2)).order() == 1);
}

TEST_CASE("preset_xi_nr elements are diagram automorphisms") {
  const TwistedForm cases[] = {
      {Family::A, 6, Twist::two_A},    {Family::D, 7, Twist::two_D},
      {Family::D, 4, Twist::three_D4}, {Family::E6, 6, Twist::two_E6},
      {Family::B, 3, Twist::split},    {Family::C, 3, Twist::split},
      {Family::E7, 7, Twist::split}};
  for (const auto& [family, rank, twist] : cases) {
    const Diagram d = build_affine_diagram(family, rank);
    const PermGroup aut = diagram_automorphisms(d);
    const PermGroup xi_nr = preset_xi_nr({family, rank, twist}, d);
    for (const auto& g : xi_nr.elements())
      REQUIRE(aut.contains(g));
  }
}

TEST_CASE("preset_galois matches the documented generators") {
  {
    const Diagram a3 = build_affine_diagram(Family::A, 3);
    const PermGroup gamma = preset_galois({Family::A, 3, Twist::two_A}, a3);
    REQUIRE(gamma.order() == 2);
    REQUIRE(gamma.contains(Permutation::from_cycles(4, {{1, 3}})));
  }
  {
    // degenerate A1: the reflection through vertex 0 fixes both vertices
    const Diagram a1 = build_affine_diagram(Family::A, 1);
    REQUIRE(preset_galois({Family::A, 1, Twist::two_A}, a1).is_trivial());
  }
  {
    const Diagram d6 = build_affine_diagram(Family::D, 6);
    const PermGroup gamma = preset_galois({Family::D, 6, Twist::two_D}, d6);
    REQUIRE(gamma.order() == 2);
    REQUIRE(gamma.contains(Permutation::from_cycles(7, {{5, 6}})));
  }
  {
    const Diagram d4 = build_affine_diagram(Family::D, 4);
    REQUIRE(preset_galois({Family::D, 4, Twist::three_D4}, d4).order() == 3);
    const PermGroup full = preset_galois({Family::D, 4, Twist::six_D4}, d4);
    REQUIRE(full.order() == 6);
    for (const auto& s : full.elements()) {
      REQUIRE(s(0) == 0);
      REQUIRE(s(2) == 2);
    }
  }
  {
    const Diagram e6 = build_affine_diagram(Family::E6, 6);
    const PermGroup gamma = preset_galois({Family::E6, 6, Twist::two_E6}, e6);
    REQUIRE(gamma.order() == 2);
    REQUIRE(gamma.contains(Permutation::from_cycles(7, {{1, 6}, {3, 5}})));
  }
  REQUIRE(preset_galois({Family::C, 5, Twist::split},
                        build_affine_diagram(Family::C, 5)).is_trivial());
  REQUIRE_THROWS_AS(preset_galois({Family::A, 3, Twist::two_D},
                                  build_affine_diagram(Family::A, 3)),
                    std::domain_error);
}

TEST_CASE("conjugation_fixed reproduces the descended groups exactly") {
  auto check = [](const TwistedForm& form) {
    const Diagram d = build_affine_diagram(form.family, form.rank);
    const PermGroup xi =
        conjugation_fixed(preset_xi_nr(form, d), preset_galois(form, d));
    INFO(to_string(form));
    REQUIRE(xi == expected_xi(form, d));
  };
  for (int n = 1; n <= 12; ++n) check({Family::A, n, Twist::two_A});
  for (int n = 4; n <= 10; ++n) check({Family::D, n, Twist::two_D});
  check({Family::D, 4, Twist::three_D4});
  check({Family::D, 4, Twist::six_D4});
  check({Family::E6, 6, Twist::two_E6});
}

TEST_CASE("the D4 Klein group dies under the trialitary action") {
  const Diagram d4 = build_affine_diagram(Family::D, 4);
  const TwistedForm form{Family::D, 4, Twist::three_D4};
  const PermGroup fixed =
      conjugation_fixed(preset_xi_nr(form, d4), preset_galois(form, d4));
  REQUIRE(fixed.is_trivial());
}
