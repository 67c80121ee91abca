#include "zca/output_energy.hpp"
#include "zca/resolvent_weiss.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zca;

namespace {
constexpr Real pi = std::numbers::pi;

DiagonalSystem single_mode() {
  return DiagonalSystem(std::vector<SpectralMode>{{{-1, 0}, {1, 0}}}, "single");
}

Real direct_resolvent(const DiagonalSystem& s, Complex z) {
  Real sum = 0.0;
  for (Eigen::Index n = 0; n < s.size(); ++n) {
    sum += std::norm(s.coefficients()[n]) / std::norm(z - s.eigenvalues()[n]);
  }
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("resolvent norm") {
  CHECK(resolvent_norm(single_mode(), {1, 0}) == doctest::Approx(0.5).epsilon(1e-15));
  const Real expected =
      std::sqrt(2.0 + 2.0 / std::pow(1 + pi * pi, 2) + 2.0 / std::pow(1 + 4 * pi * pi, 2));
  CHECK(resolvent_norm(make_heat_system(3), {1, 0}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(resolvent_norm(single_mode(), {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(resolvent_norm(single_mode(), {-1, 0}), InvalidArgument);

  const auto wave = make_wave_system(20);
  const auto mu = to_point_measure(wave);
  for (Complex s : {Complex(0.3, 2.0), Complex(5.0, -40.0), Complex(100.0, 0.0)}) {
    CHECK(std::abs(resolvent_norm(wave, s) * resolvent_norm(wave, s) -
                   resolvent_measure_integral(mu, s)) < 1e-14 * resolvent_measure_integral(mu, s));
  }
}

TEST_CASE("frequency supremum against dense scan") {
  const auto heat = make_heat_system(50);
  const auto wave = make_wave_system(40);
  for (const auto* s : {&heat, &wave}) {
    for (Real r : {0.05, 1.0, 30.0}) {
      const auto sup = sup_resolvent_norm(*s, r);
      const Real span = s->spectral_radius() + 10 * r;
      const Real scan =
          oracle::dense_scan([&](Real w) { return direct_resolvent(*s, {r, w}); }, -span, span, 200001);
      CHECK(scan <= sup.value * (1 + 1e-12));
      CHECK(sup.value - scan < 1e-6 * sup.value);
      CHECK(direct_resolvent(*s, {r, sup.omega}) == doctest::Approx(sup.value).epsilon(1e-14));
    }
  }
}

TEST_CASE("Weiss profiles") {
  const auto single = weiss_m_profile(single_mode(), {1.0, 100.0});
  CHECK(single.samples[0].m == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(single.samples[1].m == doctest::Approx(10.0 / 101.0).epsilon(1e-12));
  CHECK(single.samples[1].m == doctest::Approx(0.0990).epsilon(1e-3));

  const auto heat_sys = make_heat_system(200);
  const auto rs = geometric_grid(1e-2, reliable_r_max(heat_sys), 6);
  const auto heat = weiss_m_profile(heat_sys, rs);
  CHECK(heat.verdict == WeissVerdict::B1Consistent);
  const std::size_t n = heat.samples.size();
  CHECK(heat.samples[n - 1].m < heat.samples[n - 7].m);

  const auto wave_sys = make_wave_system(512);
  const auto wave = weiss_m_profile(wave_sys, geometric_grid(1e-2, reliable_r_max(wave_sys), 4));
  CHECK(wave.verdict == WeissVerdict::A1OnlyConsistent);
  // plateau: the top two decades keep a level of order one
  const std::size_t w = wave.samples.size();
  CHECK(wave.samples[w - 1].m > 0.5);
  CHECK(wave.samples[w - 1].m > 0.5 * wave.samples[w - 9].m);

  CHECK_THROWS_AS(weiss_m_profile(single_mode(), {2.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(weiss_m_profile(single_mode(), {0.0, 1.0}), InvalidArgument);
  CHECK(to_string(WeissVerdict::A1OnlyConsistent) == "A1-only-consistent");
}

TEST_CASE("B2 constant") {
  CHECK(b2_constant(single_mode(), 1.0) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(b2_constant(single_mode(), 0.3) ==
        doctest::Approx((1 - std::exp(-0.3)) / std::sqrt(0.3)).epsilon(1e-12));

  // wave(1), tau = 2: at omega = -pi one mode is degenerate (tau) and the
  // other integrates over two full periods (0)
  const auto wave1 = make_wave_system(1);
  const auto sup = b2_sup(wave1, 2.0);
  CHECK(sup.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  const auto heat = make_heat_system(200);
  const Real b1 = b2_constant(heat, 1.0);
  const Real b2 = b2_constant(heat, 0.1);
  const Real b3 = b2_constant(heat, 0.01);
  CHECK(b1 > b2);
  CHECK(b2 > b3);

  // dense omega oracle on a small system
  const auto wave = make_wave_system(8);
  for (Real tau : {0.05, 0.4, 1.7}) {
    auto f = [&](Real w) {
      Real sum = 0.0;
      for (Eigen::Index n = 0; n < wave.size(); ++n) {
        const Complex z = wave.eigenvalues()[n] + Complex(0, w);
        const Real re = oracle::integrate([&](Real t) { return (std::exp(z * t)).real(); }, 0, tau, 8);
        const Real im = oracle::integrate([&](Real t) { return (std::exp(z * t)).imag(); }, 0, tau, 8);
        sum += std::norm(wave.coefficients()[n] * Complex(re, im));
      }
      return std::sqrt(sum / tau);
    };
    const Real scan = oracle::dense_scan(f, -40, 40, 8001);
    const Real value = b2_constant(wave, tau);
    CHECK(scan <= value * (1 + 1e-10));
    CHECK(value - scan < 1e-4 * value);
  }
  CHECK_THROWS_AS(b2_constant(single_mode(), 0.0), InvalidArgument);
}

TEST_CASE("B2 profiles") {
  const auto heat_sys = make_heat_system(200);
  const auto heat = b2_profile(heat_sys, geometric_grid(reliable_tau_min(heat_sys), 10, 6));
  CHECK(heat.verdict == TauVerdict::B2Consistent);

  const auto wave_sys = make_wave_system(128);
  const auto wave = b2_profile(wave_sys, geometric_grid(reliable_tau_min(wave_sys), 10, 4));
  CHECK(wave.verdict == TauVerdict::A2OnlyConsistent);

  const DiagonalSystem zero(VectorXc::Constant(3, Complex(-1, 2)), VectorXc::Zero(3));
  const auto z = b2_profile(zero, {0.01, 0.1, 1.0});
  for (const auto& s : z.samples) CHECK(s.K == 0.0);

  CHECK(to_string(TauVerdict::B2Consistent) == "B2-consistent");
}

TEST_CASE("B2 never exceeds the admissibility constant") {
  for (const auto& s : {make_heat_system(30), make_wave_system(30), single_mode()}) {
    for (Real tau : geometric_grid(1e-3, 10.0, 2)) {
      CHECK(b2_constant(s, tau) <= admissibility_constant(s, tau) * (1 + 1e-10));
    }
  }
}
