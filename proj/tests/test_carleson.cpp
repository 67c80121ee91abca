#include "zca/carleson.hpp"
#include "zca/resolvent_weiss.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zca;

namespace {
constexpr Real pi = std::numbers::pi;

PointMeasure integers(int n) {
  PointMeasure mu;
  for (int k = 1; k <= n; ++k) mu.atoms.push_back({Complex(k, 0), 1.0});
  return mu;
}

PointMeasure inverse_squares(int n) {
  PointMeasure mu;
  for (int k = 1; k <= n; ++k) mu.atoms.push_back({Complex(1.0 / k, 0), 1.0 / (Real(k) * k)});
  return mu;
}

// atoms on a 0.01 lattice in the imaginary direction
PointMeasure lattice_measure(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> im(-1000, 1000);
  std::uniform_real_distribution<Real> re(0.0, 3.0);
  std::uniform_real_distribution<Real> mass(0.1, 2.0);
  PointMeasure mu;
  for (int i = 0; i < n; ++i) mu.atoms.push_back({Complex(re(rng), im(rng) * 0.01), mass(rng)});
  return mu;
}
}  // namespace

TEST_CASE("box mass") {
  CHECK(box_mass({}, {1.0, 0.0}) == 0.0);
  CHECK(box_mass(integers(10), {2.5, 0.0}) == 2.0);
  CHECK(box_mass(to_point_measure(make_heat_system(5)), {pi * pi + 1, 0.0}) == doctest::Approx(4.0));
  // closed boxes include boundary atoms
  CHECK(box_mass(to_point_measure(make_wave_system(2)), {2 * pi, pi}) == doctest::Approx(2.0));
}

TEST_CASE("sup box ratio") {
  CHECK(sup_box_ratio(integers(100), 2.5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(sup_box_ratio({}, 1.0) == 0.0);
  Real partial = 0.0;
  for (int k = 1; k <= 10000; ++k) partial += 1.0 / (Real(k) * k);
  CHECK(sup_box_ratio(inverse_squares(10000), 1.0) == doctest::Approx(partial).epsilon(1e-13));
  CHECK(partial == doctest::Approx(1.6448).epsilon(1e-4));
  CHECK_THROWS_AS(sup_box_ratio(integers(3), 0.0), InvalidArgument);
}

TEST_CASE("sweep agrees with brute-force omega scan") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto mu = lattice_measure(seed, 300);
    for (Real r : {0.055, 0.375, 1.235, 2.905}) {
      const Real brute = oracle::brute_box_ratio(mu, r);
      CHECK(std::abs(sup_box_ratio(mu, r) - brute) <= 1e-12 * std::max(1.0, brute));
    }
  }
  const auto wave = to_point_measure(make_wave_system(50));
  for (Real r : {0.5, 4.0, 20.0}) {
    CHECK(std::abs(sup_box_ratio(wave, r) - oracle::brute_box_ratio(wave, r)) < 1e-12);
  }
}

TEST_CASE("classification of the two half-line examples") {
  const auto grid = geometric_grid(1e-2, 1e3, 6);
  const auto small = geometric_grid(1e-4, 1e-2, 4);

  const auto ints = classify(integers(1000), grid, small);
  CHECK(ints.classification == CarlesonClass::Carleson);
  for (Real r : {2.5, 10.5, 100.5}) {
    CHECK(sup_box_ratio(integers(1000), r) == std::floor(r) / r);
  }

  const auto inv = classify(inverse_squares(10000), grid, small);
  CHECK(inv.classification == CarlesonClass::ZeroClassCarleson);
  CHECK(sup_box_ratio(inverse_squares(10000), 1e-2) > 0.5);
  CHECK(sup_box_ratio(inverse_squares(10000), 1e3) < 2e-3);

  const auto heat_sys = make_heat_system(200);
  const auto heat = classify(to_point_measure(heat_sys), geometric_grid(1e-2, 3.9e5, 6), small, 1e-2,
                             heat_sys.spectral_radius());
  CHECK(heat.classification == CarlesonClass::ZeroClassCarleson);
  // atom counting: the heat atoms within [0, r] are n <= sqrt(r) / pi
  for (Real r : {50.0, 1000.0, 1e5}) {
    const Real count = std::floor(std::sqrt(r) / pi) + 1;
    CHECK(sup_box_ratio(to_point_measure(heat_sys), r) == doctest::Approx(2 * count / r));
  }

  const auto wave_sys = make_wave_system(512);
  const auto wave = classify(to_point_measure(wave_sys), geometric_grid(1e-2, 1600, 6), small, 1e-2,
                             wave_sys.spectral_radius());
  CHECK(wave.classification == CarlesonClass::Carleson);

  PointMeasure single{{{Complex(1, 0), 1.0}}};
  const auto s = classify(single, grid, small);
  CHECK(s.classification == CarlesonClass::VanishingCarleson);

  CHECK(to_string(CarlesonClass::ZeroClassCarleson) == "zero-class-carleson");
}

TEST_CASE("box ratio is dominated by the Weiss profile") {
  const auto heat = make_heat_system(100);
  const auto mu = to_point_measure(heat);
  for (Real r : geometric_grid(1e-2, 1e4, 2)) {
    const Real m = std::sqrt(r) * sup_resolvent_norm(heat, r).value;
    CHECK(sup_box_ratio(mu, r) <= 17.0 / 4.0 * m * m * (1 + 1e-9));
  }
}
