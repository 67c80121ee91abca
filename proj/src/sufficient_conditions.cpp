#include "zca/sufficient_conditions.hpp"

#include "zca/resolvent_weiss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace zca {

GrowthFunction GrowthFunction::log_power(Real exponent) {
  std::ostringstream d;
  d << "(log(2+t))^" << exponent;
  return {[exponent](Real t) { return std::pow(std::log(2.0 + t), exponent); }, exponent >= 0.0,
          d.str()};
}

GrowthFunction GrowthFunction::constant(Real value) {
  std::ostringstream d;
  d << "constant " << value;
  return {[value](Real) { return value; }, true, d.str()};
}

bool SectorRegion::contains(Complex z) const {
  const Real v = z.real();
  const Real w = z.imag();
  if (v < 0.0) return false;
  const Real bound = a + b * std::pow(v, beta);
  return std::abs(w) <= bound * (1.0 + 1e-14);
}

std::string_view to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Converges: return "converges";
    case SeriesVerdict::Diverges: return "diverges";
    case SeriesVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

void check_growth(const GrowthFunction& g, Real base, int n_max) {
  if (!g.evaluator) throw InvalidArgument("growth function has no evaluator");
  if (!g.monotone_increasing) throw InvalidArgument("growth function must be monotone increasing");
  // Spot check on a log grid covering (0, base^n_max] plus the summation nodes.
  Real prev = 0.0;
  const Real t_hi = std::pow(base, n_max);
  for (Real t : geometric_grid(1e-6, t_hi, 8)) {
    const Real v = g(t);
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("growth function must be positive");
    if (v < prev * (1.0 - 1e-12)) throw InvalidArgument("growth function is not monotone increasing");
    prev = v;
  }
}

}  // namespace

SummabilityReport zwart_summability(const GrowthFunction& g, Real base, int n_max,
                                    Real tail_tolerance) {
  if (!(base > 1.0) || !std::isfinite(base)) throw InvalidArgument("base must exceed 1");
  if (n_max < 10) throw InvalidArgument("n_max must be at least 10");
  if (!(tail_tolerance > 0.0)) throw InvalidArgument("tail tolerance must be positive");
  // Keep base^n finite.
  const int finite_cap = static_cast<int>(std::floor(1000.0 / std::log2(base)));
  SummabilityReport rep;
  rep.n_max = std::min(n_max, finite_cap);
  check_growth(g, base, rep.n_max);

  std::vector<Real> terms(static_cast<std::size_t>(rep.n_max) + 1);
  for (int n = 0; n <= rep.n_max; ++n) {
    const Real gv = g(std::pow(base, n));
    terms[static_cast<std::size_t>(n)] = 1.0 / (gv * gv);
    rep.partial_sum += terms[static_cast<std::size_t>(n)];
  }

  // Least-squares slope of log term vs log n over the last decade.
  const int n_lo = std::max(1, rep.n_max / 10);
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = n_lo; n <= rep.n_max; ++n) {
    const Real x = std::log(static_cast<Real>(n));
    const Real y = std::log(terms[static_cast<std::size_t>(n)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  rep.tail_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);

  constexpr Real slack = 0.05;
  const Real last = terms.back();
  if (rep.tail_slope < -(1.0 + slack)) {
    // Integral comparison with a power law of the fitted slope.
    rep.tail_estimate = last * rep.n_max / (-rep.tail_slope - 1.0);
    rep.verdict = rep.tail_estimate <= tail_tolerance * rep.partial_sum ? SeriesVerdict::Converges
                                                                         : SeriesVerdict::Inconclusive;
  } else if (rep.tail_slope > -(1.0 - slack)) {
    rep.tail_estimate = std::numeric_limits<Real>::infinity();
    rep.verdict = SeriesVerdict::Diverges;
  } else {
    rep.tail_estimate = std::numeric_limits<Real>::quiet_NaN();
    rep.verdict = SeriesVerdict::Inconclusive;
  }
  return rep;
}

std::vector<Complex> zwart_grid(const DiagonalSystem& system, const std::vector<Real>& r_grid) {
  std::vector<Real> omegas{0.0};
  for (Eigen::Index n = 0; n < system.size(); ++n) omegas.push_back(system.eigenvalues()[n].imag());
  std::sort(omegas.begin(), omegas.end());
  omegas.erase(std::unique(omegas.begin(), omegas.end()), omegas.end());
  std::vector<Complex> grid;
  grid.reserve(r_grid.size() * omegas.size());
  for (Real r : r_grid) {
    for (Real w : omegas) grid.emplace_back(r, w);
  }
  return grid;
}

ZwartBoundReport check_zwart_bound(const DiagonalSystem& system, Real m, const GrowthFunction& g,
                                   const std::vector<Complex>& s_grid) {
  if (!(m > 0.0)) throw InvalidArgument("m must be positive");
  if (!g.evaluator) throw InvalidArgument("growth function has no evaluator");
  ZwartBoundReport rep;
  Real worst = 0.0;
  for (Complex s : s_grid) {
    const Real r = s.real();
    const Real v = resolvent_norm(system, s) * g(r) * std::sqrt(r);
    if (v > worst) {
      worst = v;
      rep.worst_s = s;
    }
  }
  rep.smallest_m = worst;
  rep.worst_ratio = worst / m;
  rep.holds = rep.worst_ratio <= 1.0;
  return rep;
}

Real analytic_alpha_bound(Real s_norm, Real semigroup_const, Real alpha, Real eta) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw InvalidArgument("alpha must lie in (0, 1/2); the time integral diverges otherwise");
  }
  if (!(s_norm >= 0.0) || !(semigroup_const > 0.0) || !(eta > 0.0)) {
    throw InvalidArgument("need ||S|| >= 0, M > 0 and eta > 0");
  }
  const Real p = 1.0 - 2.0 * alpha;
  return s_norm * semigroup_const * std::sqrt(std::pow(eta, p) / p);
}

Real sector_bound(const SectorRegion& region, Real alpha, Real eta, Real c2) {
  if (!(region.beta > 0.0)) throw InvalidArgument("sector exponent beta must be positive");
  const Real alpha_max = std::min(0.5, 1.0 / (2.0 * region.beta));
  if (!(alpha > 0.0 && alpha < alpha_max)) {
    throw InvalidArgument("alpha must lie in (0, min(1/2, 1/(2 beta)))");
  }
  if (!(eta > 0.0) || !(c2 > 0.0)) throw InvalidArgument("need eta > 0 and c2 > 0");
  // Below t = 1 the larger power dominates, above it the constant 1.
  const Real p = std::max(alpha, alpha * region.beta);
  const Real q = 1.0 - 2.0 * p;
  const Real integral = eta <= 1.0 ? std::pow(eta, q) / q : 1.0 / q + (eta - 1.0);
  return c2 * std::sqrt(integral);
}

bool spectrum_in_region(const DiagonalSystem& system, const SectorRegion& region) {
  for (Eigen::Index n = 0; n < system.size(); ++n) {
    if (!region.contains(-system.eigenvalues()[n])) return false;
  }
  return true;
}

}  // namespace zca
