#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "h1kernel/diagram.hpp"
#include "h1kernel/permutation.hpp"
#include "h1kernel/presets.hpp"

using namespace h1kernel;

TEST_CASE("compose satisfies the identity law") {
  const Permutation p = Permutation::from_cycles(4, {{0, 1, 2}});
  REQUIRE(compose(Permutation::identity(4), p) == p);
  REQUIRE(compose(p, Permutation::identity(4)) == p);
}

TEST_CASE("an involution composed with itself is the identity") {
  const Permutation swap = Permutation::from_cycles(2, {{0, 1}});
  REQUIRE(compose(swap, swap).is_identity());
}

TEST_CASE("the rotation of affine A3 squares to the double step") {
  const Permutation r = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  const Permutation r2 = compose(r, r);
  REQUIRE(r2(0) == 2);
  REQUIRE(r2(1) == 3);
  REQUIRE(r2(2) == 0);
  REQUIRE(r2(3) == 1);
}

TEST_CASE("compose applies the right factor first") {
  const Permutation p = Permutation::from_cycles(3, {{0, 1}});
  const Permutation q = Permutation::from_cycles(3, {{1, 2}});
  REQUIRE(compose(p, q)(1) == 2); // q sends 1 to 2, p fixes 2
  REQUIRE(compose(q, p)(1) == 0);
}

TEST_CASE("mismatched vertex sets are rejected") {
  REQUIRE_THROWS_AS(
      compose(Permutation::identity(3), Permutation::identity(4)),
      std::domain_error);
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle notation") {
  REQUIRE(cycle_string(Permutation::identity(4)) == "id");
  REQUIRE(cycle_string(Permutation::from_cycles(4, {{1, 3}})) == "(1 3)");
  REQUIRE(cycle_string(Permutation::from_cycles(5, {{0, 1}, {3, 4}})) == "(0 1)(3 4)");
}

TEST_CASE("generated group orders") {
  REQUIRE(generate_group({Permutation::from_cycles(2, {{0, 1}})}).order() == 2);
  REQUIRE(generate_group({Permutation::from_cycles(4, {{0, 1, 2, 3}})}).order() == 4);

  const Diagram d6 = build_affine_diagram(Family::D, 6);
  const Permutation tau = d_tau(d6);
  const Permutation tau_prime = d_tau_prime(d6);
  const PermGroup klein = generate_group({tau, tau_prime});
  REQUIRE(klein.order() == 4);
  REQUIRE(klein.contains(compose(tau, tau_prime)));
}

TEST_CASE("group order divides the ambient automorphism group order") {
  std::mt19937 rng(20240817);
  for (Family f : {Family::A, Family::D, Family::E6}) {
    const int rank = f == Family::A ? 5 : f == Family::D ? 6 : 6;
    const PermGroup aut = diagram_automorphisms(build_affine_diagram(f, rank));
    std::uniform_int_distribution<std::size_t> pick(0, aut.order() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Permutation> gens;
      const int count = 1 + static_cast<int>(pick(rng)) % 3;
      for (int i = 0; i < count; ++i) gens.push_back(aut.elements()[pick(rng)]);
      REQUIRE(aut.order() % generate_group(gens).order() == 0);
    }
  }
}

TEST_CASE("from_elements rejects sets that are not subgroups") {
  REQUIRE_THROWS_AS(PermGroup::from_elements({Permutation::from_cycles(4, {{0, 1}}),
                                              Permutation::from_cycles(4, {{2, 3}})}),
                    std::invalid_argument);
}

TEST_CASE("conjugation_fixed of the A3 rotations under the axial reflection") {
  const Diagram a3 = build_affine_diagram(Family::A, 3);
  const PermGroup rotations = generate_group({cycle_rotation(a3)});
  const PermGroup gamma = generate_group({Permutation::from_cycles(4, {{1, 3}})});
  const PermGroup fixed = conjugation_fixed(rotations, gamma);
  REQUIRE(fixed.order() == 2);
  REQUIRE(fixed.contains(Permutation::from_cycles(4, {{0, 2}, {1, 3}})));
}

TEST_CASE("conjugation_fixed elements commute with gamma elementwise") {
  const Diagram d = build_affine_diagram(Family::D, 5);
  const TwistedForm form{Family::D, 5, Twist::two_D};
  const PermGroup xi_nr = preset_xi_nr(form, d);
  const PermGroup gamma = preset_galois(form, d);
  const PermGroup fixed = conjugation_fixed(xi_nr, gamma);
  for (const auto& w : fixed.elements())
    for (const auto& s : gamma.elements())
      REQUIRE(compose(w, s) == compose(s, w));
}
