#include "zca/resolvent_weiss.hpp"

#include "zca/output_energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zca {

std::string_view to_string(WeissVerdict v) {
  switch (v) {
    case WeissVerdict::B1Consistent: return "B1-consistent";
    case WeissVerdict::A1OnlyConsistent: return "A1-only-consistent";
    case WeissVerdict::Unbounded: return "unbounded";
  }
  return "unbounded";
}

std::string_view to_string(TauVerdict v) {
  switch (v) {
    case TauVerdict::B2Consistent: return "B2-consistent";
    case TauVerdict::A2OnlyConsistent: return "A2-only-consistent";
    case TauVerdict::Unbounded: return "unbounded";
  }
  return "unbounded";
}

FrequencySup maximize_over_frequency(const std::function<Real(Real)>& f, std::vector<Real> seeds,
                                     Real rel_tol) {
  FrequencySup best;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  best.candidates = seeds.size();
  if (seeds.empty()) return best;

  std::vector<Real> values(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) values[i] = f(seeds[i]);
  best.value = values[0];
  best.omega = seeds[0];
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    if (values[i] > best.value) {
      best.value = values[i];
      best.omega = seeds[i];
    }
  }

  constexpr Real inv_phi = 0.6180339887498949;
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
    Real a = seeds[i];
    Real b = seeds[i + 1];
    const Real tol = rel_tol * (1.0 + std::abs(a) + std::abs(b));
    Real x1 = b - inv_phi * (b - a);
    Real x2 = a + inv_phi * (b - a);
    Real f1 = f(x1);
    Real f2 = f(x2);
    while (b - a > tol) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = f(x1);
      }
    }
    best.residual = std::max(best.residual, b - a);
    if (f1 > best.value) {
      best.value = f1;
      best.omega = x1;
    }
    if (f2 > best.value) {
      best.value = f2;
      best.omega = x2;
    }
  }
  return best;
}

namespace {

void check_right_half_plane(Complex s) {
  if (!(s.real() > 0.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw InvalidArgument("resolvent bound is only defined for Re s > 0");
  }
}

Real resolvent_norm_sq(const DiagonalSystem& system, Complex s) {
  Real sum = 0.0;
  for (Eigen::Index n = 0; n < system.size(); ++n) {
    sum += std::norm(system.coefficients()[n]) / std::norm(s - system.eigenvalues()[n]);
  }
  return sum;
}

template <typename Verdict>
void classify_end(const std::vector<Real>& xs, const std::vector<Real>& vals, bool toward_large,
                  Real threshold, Real& ratio_out, Verdict& verdict_out, Verdict decaying,
                  Verdict plateau, Verdict unbounded) {
  const EndRatio er = end_ratio(xs, vals, toward_large, 2.0);
  ratio_out = er.ratio;
  bool finite = true;
  for (Real v : vals) finite = finite && std::isfinite(v);
  if (finite && er.ratio < threshold && er.monotone) {
    verdict_out = decaying;
  } else if (!finite || er.ratio > 1.0 / threshold) {
    verdict_out = unbounded;
  } else {
    verdict_out = plateau;
  }
}

}  // namespace

Real resolvent_norm(const DiagonalSystem& system, Complex s) {
  check_right_half_plane(s);
  return std::sqrt(resolvent_norm_sq(system, s));
}

Real resolvent_measure_integral(const PointMeasure& measure, Complex s) {
  check_right_half_plane(s);
  Real sum = 0.0;
  for (const auto& atom : measure.atoms) sum += atom.mass / std::norm(s + atom.location);
  return sum;
}

FrequencySup sup_resolvent_norm(const DiagonalSystem& system, Real r) {
  if (!(r > 0.0)) throw InvalidArgument("r must be positive");
  std::vector<Real> seeds{0.0};
  for (Eigen::Index n = 0; n < system.size(); ++n) seeds.push_back(system.eigenvalues()[n].imag());
  FrequencySup sup = maximize_over_frequency(
      [&](Real omega) { return resolvent_norm_sq(system, Complex(r, omega)); }, std::move(seeds));
  sup.value = std::sqrt(sup.value);
  return sup;
}

MProfile weiss_m_profile(const DiagonalSystem& system, const std::vector<Real>& rs,
                         Real threshold) {
  if (rs.empty()) throw InvalidArgument("weiss_m_profile needs at least one r");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (!(rs[i] > 0.0)) throw InvalidArgument("r values must be positive");
    if (i > 0 && !(rs[i] > rs[i - 1])) throw InvalidArgument("r values must be strictly increasing");
  }
  const auto sups =
      parallel_map<FrequencySup>(rs, [&](Real r) { return sup_resolvent_norm(system, r); });

  MProfile profile;
  std::vector<Real> ms(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    ms[i] = std::sqrt(rs[i]) * sups[i].value;
    profile.samples.push_back({rs[i], ms[i]});
    profile.uniform_bound = std::max(profile.uniform_bound, ms[i]);
    profile.candidates = std::max(profile.candidates, sups[i].candidates);
    profile.refinement_residual = std::max(profile.refinement_residual, sups[i].residual);
  }
  profile.verdict = weiss_verdict(rs, ms, threshold, &profile.end_ratio);
  return profile;
}

WeissVerdict weiss_verdict(const std::vector<Real>& rs, const std::vector<Real>& ms,
                           Real threshold, Real* end_ratio_out) {
  Real ratio = 0.0;
  WeissVerdict verdict = WeissVerdict::A1OnlyConsistent;
  classify_end(rs, ms, true, threshold, ratio, verdict, WeissVerdict::B1Consistent,
               WeissVerdict::A1OnlyConsistent, WeissVerdict::Unbounded);
  if (end_ratio_out) *end_ratio_out = ratio;
  return verdict;
}

FrequencySup b2_sup(const DiagonalSystem& system, Real tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("tau must be positive");
  std::vector<Real> seeds{0.0};
  for (Eigen::Index n = 0; n < system.size(); ++n) seeds.push_back(-system.eigenvalues()[n].imag());
  // e^{(lambda + i omega) tau} = e^{lambda tau} e^{i omega tau}; the stable
  // kernel is only needed where |z tau| is small.
  const VectorXc decay = (system.eigenvalues() * tau).array().exp();
  const VectorXr weight = system.coefficients().cwiseAbs2();
  auto energy = [&](Real omega) {
    const Complex turn = std::polar(1.0, omega * tau);
    Real sum = 0.0;
    for (Eigen::Index n = 0; n < system.size(); ++n) {
      const Real x = system.eigenvalues()[n].real();
      const Real y = system.eigenvalues()[n].imag() + omega;
      const Real z2 = x * x + y * y;
      if (z2 * tau * tau < 1e-4) {
        const Complex z(x, y);
        const Complex integral = z2 == 0.0 ? Complex(tau, 0.0) : phi_kernel(z, tau);
        sum += weight[n] * std::norm(integral);
      } else {
        const Real re = decay[n].real() * turn.real() - decay[n].imag() * turn.imag();
        sum += weight[n] * (std::norm(decay[n]) - 2.0 * re + 1.0) / z2;
      }
    }
    return sum;
  };
  FrequencySup sup = maximize_over_frequency(energy, std::move(seeds));
  sup.value = std::sqrt(sup.value / tau);
  return sup;
}

Real b2_constant(const DiagonalSystem& system, Real tau) { return b2_sup(system, tau).value; }

TauProfile b2_profile(const DiagonalSystem& system, const std::vector<Real>& taus,
                      Real threshold) {
  if (taus.empty()) throw InvalidArgument("b2_profile needs at least one tau");
  const bool increasing = taus.size() < 2 || taus[1] > taus[0];
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0)) throw InvalidArgument("tau values must be positive");
    if (i > 0 && (increasing ? !(taus[i] > taus[i - 1]) : !(taus[i] < taus[i - 1]))) {
      throw InvalidArgument("tau values must be strictly monotone");
    }
  }
  const auto sups = parallel_map<FrequencySup>(taus, [&](Real t) { return b2_sup(system, t); });

  TauProfile profile;
  std::vector<Real> ks(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    ks[i] = sups[i].value;
    profile.samples.push_back({taus[i], ks[i]});
    profile.uniform_bound = std::max(profile.uniform_bound, ks[i]);
    profile.candidates = std::max(profile.candidates, sups[i].candidates);
    profile.refinement_residual = std::max(profile.refinement_residual, sups[i].residual);
  }
  classify_end(taus, ks, false, threshold, profile.end_ratio, profile.verdict,
                                   TauVerdict::B2Consistent, TauVerdict::A2OnlyConsistent,
                                   TauVerdict::Unbounded);
  return profile;
}

Real reliable_r_max(const DiagonalSystem& system) {
  const Real rho = system.spectral_radius();
  return rho > 0.0 ? rho / 10.0 : std::numeric_limits<Real>::infinity();
}

Real reliable_tau_min(const DiagonalSystem& system) {
  const Real rho = system.spectral_radius();
  return rho > 0.0 ? 10.0 / rho : 0.0;
}

}  // namespace zca
