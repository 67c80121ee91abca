#include "zca/system_io.hpp"
#include "zca/system_model.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zca;

namespace {
constexpr Real pi = std::numbers::pi;
}

TEST_CASE("heat system eigenfamily") {
  const auto one = make_heat_system(1);
  REQUIRE(one.size() == 1);
  CHECK(one.eigenvalues()[0] == Complex(0.0, 0.0));
  CHECK(one.coefficients()[0].real() == doctest::Approx(std::sqrt(2.0)));

  const auto three = make_heat_system(3);
  CHECK(three.eigenvalues()[1].real() == doctest::Approx(-pi * pi));
  CHECK(three.eigenvalues()[2].real() == doctest::Approx(-4 * pi * pi));
  CHECK_FALSE(three.truncation_note().empty());
  CHECK_THROWS_AS(make_heat_system(0), InvalidArgument);
}

TEST_CASE("wave system eigenfamily") {
  const auto one = make_wave_system(1);
  REQUIRE(one.size() == 2);
  CHECK(std::abs(one.eigenvalues()[0] - Complex(0, -pi)) < 1e-15);
  CHECK(std::abs(one.eigenvalues()[1] - Complex(0, pi)) < 1e-15);

  // C phi_n: slope at 0 of sin(n pi x) / lambda_n, differentiated by hand
  const auto two = make_wave_system(2);
  REQUIRE(two.size() == 4);
  for (Eigen::Index i = 0; i < two.size(); ++i) {
    CHECK(two.eigenvalues()[i].real() == 0.0);
    const Real n = two.eigenvalues()[i].imag() / pi;
    const Complex slope = n * pi / two.eigenvalues()[i];
    CHECK(std::abs(two.coefficients()[i] - slope) < 1e-15);
    CHECK(std::abs(two.coefficients()[i]) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(make_wave_system(0), InvalidArgument);
}

TEST_CASE("validation names the offending mode") {
  std::vector<SpectralMode> modes{{{-1, 0}, {1, 0}}, {{0.5, 1}, {1, 0}}};
  try {
    DiagonalSystem s(modes);
    FAIL("expected rejection");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("mode 1") != std::string::npos);
  }
  std::vector<SpectralMode> nan_modes{{{std::nan(""), 0}, {1, 0}}};
  CHECK_THROWS_AS(DiagonalSystem{nan_modes}, InvalidArgument);
  CHECK_THROWS_AS(DiagonalSystem(VectorXc::Zero(2), VectorXc::Zero(3)), InvalidArgument);
}

TEST_CASE("direct sum") {
  const DiagonalSystem single(std::vector<SpectralMode>{{{-1, 0}, {1, 0}}}, "single");
  const auto same = direct_sum({{single}, {1.0}, {1.0}});
  CHECK(same.eigenvalues() == single.eigenvalues());
  CHECK(same.coefficients() == single.coefficients());

  const auto pair = direct_sum({{single, single}, {0.5, 0.5}, {1.0, 1.0}});
  REQUIRE(pair.size() == 2);
  CHECK(pair.coefficients()[0].real() == doctest::Approx(0.5));
  CHECK(pair.coefficients()[1].real() == doctest::Approx(0.5));

  const auto scaled = direct_sum({{single}, {0.5}, {3.0}});
  CHECK(scaled.coefficients()[0].real() == doctest::Approx(1.5));

  CHECK_THROWS_AS(direct_sum({{single, single}, {0.5}, {1.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(direct_sum({{single, single}, {0.7, 0.7}, {1.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(direct_sum({{single}, {-0.1}, {1.0}}), InvalidArgument);
  CHECK_THROWS_AS(direct_sum({{single}, {0.5}, {0.0}}), InvalidArgument);
}

TEST_CASE("point measure conversion") {
  const auto heat = to_point_measure(make_heat_system(3));
  REQUIRE(heat.atoms.size() == 3);
  CHECK(heat.atoms[0].location == Complex(0, 0));
  CHECK(heat.atoms[1].location.real() == doctest::Approx(pi * pi));
  CHECK(heat.atoms[2].location.real() == doctest::Approx(4 * pi * pi));
  for (const auto& a : heat.atoms) CHECK(a.mass == doctest::Approx(2.0));
  CHECK(heat.total_mass() == doctest::Approx(6.0));

  const auto wave = to_point_measure(make_wave_system(2));
  REQUIRE(wave.atoms.size() == 4);
  for (const auto& a : wave.atoms) {
    CHECK(a.location.real() == 0.0);
    CHECK(a.mass == doctest::Approx(1.0));
  }
  CHECK(std::abs(wave.atoms[0].location - Complex(0, 2 * pi)) < 1e-14);

  const DiagonalSystem zero(VectorXc::Constant(3, Complex(-1, 0)), VectorXc::Zero(3));
  CHECK(to_point_measure(zero).atoms.empty());

  const auto back = from_point_measure(heat);
  REQUIRE(back.size() == 3);
  CHECK(std::norm(back.coefficients()[2]) == doctest::Approx(2.0));
  CHECK(back.eigenvalues()[2].real() == doctest::Approx(-4 * pi * pi));

  PointMeasure bad{{{Complex(-1, 0), 1.0}}};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("json round trip") {
  const auto wave = make_wave_system(3);
  const auto again = system_from_json(system_to_json(wave));
  CHECK(again.eigenvalues() == wave.eigenvalues());
  CHECK(again.coefficients() == wave.coefficients());
  CHECK(again.label() == wave.label());

  const auto builtin = system_from_json({{"builtin", "heat"}, {"modes", 4}});
  CHECK(builtin.size() == 4);

  nlohmann::json bad = {{"modes", {{{"lambda_re", -1.0}, {"lambda_im", 0.0}, {"c_re", 1.0}, {"c_im", 0.0}},
                                   {{"lambda_re", 2.0}, {"lambda_im", 0.0}, {"c_re", 1.0}, {"c_im", 0.0}}}}};
  try {
    (void)system_from_json(bad);
    FAIL("expected rejection");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("mode 1") != std::string::npos);
  }
  CHECK_THROWS_AS(system_from_json({{"builtin", "plate"}, {"modes", 3}}), InvalidArgument);
  CHECK_THROWS_AS(load_system("/nonexistent/system.json"), InvalidArgument);

  const auto mu = to_point_measure(make_heat_system(3));
  const auto mu2 = measure_from_json(measure_to_json(mu));
  REQUIRE(mu2.atoms.size() == mu.atoms.size());
  CHECK(mu2.atoms[2].location == mu.atoms[2].location);
}
