#pragma once

#include "zca/common.hpp"
#include "zca/system_model.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace zca {

/// Positive, monotonically increasing g : (0, inf) -> (0, inf).
struct GrowthFunction {
  std::function<Real(Real)> evaluator;
  bool monotone_increasing = true;
  std::string description;

  Real operator()(Real t) const { return evaluator(t); }

  /// g(t) = (log(2 + t))^exponent.
  static GrowthFunction log_power(Real exponent);
  static GrowthFunction constant(Real value);
};

/// {v + i w : v >= 0, |w| <= a + b v^beta}. Membership is closed so that a
/// zero eigenvalue on the boundary counts as inside.
struct SectorRegion {
  Real a = 0.0;
  Real b = 0.0;
  Real beta = 1.0;

  bool contains(Complex z) const;
};

enum class SeriesVerdict { Converges, Diverges, Inconclusive };
std::string_view to_string(SeriesVerdict v);

struct SummabilityReport {
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  Real partial_sum = 0.0;
  int n_max = 0;          ///< last index actually summed (capped so base^n stays finite)
  Real tail_slope = 0.0;  ///< log-log slope of the terms over the last decade
  Real tail_estimate = 0.0;
};

/// One-sided sum over n = 0..n_max of g(base^n)^{-2} with an empirical tail
/// verdict: converges when the terms decay faster than n^{-1.05} and the
/// estimated tail is within tail_tolerance of the partial sum (relative),
/// diverges when they decay slower than n^{-0.95}.
SummabilityReport zwart_summability(const GrowthFunction& g, Real base, int n_max,
                                    Real tail_tolerance = 0.1);

struct ZwartBoundReport {
  Real worst_ratio = 0.0;  ///< max over the grid of W(s) g(Re s) sqrt(Re s) / m
  Complex worst_s{0.0, 0.0};
  Real smallest_m = 0.0;   ///< smallest m for which the bound holds on the grid
  bool holds = true;
};

ZwartBoundReport check_zwart_bound(const DiagonalSystem& system, Real m, const GrowthFunction& g,
                                   const std::vector<Complex>& s_grid);

/// Grid {r + i omega} with r from r_grid and omega from 0 and every Im(lambda_n).
std::vector<Complex> zwart_grid(const DiagonalSystem& system, const std::vector<Real>& r_grid);

/// ||S|| M sqrt(eta^{1-2 alpha} / (1 - 2 alpha)), alpha in (0, 1/2).
Real analytic_alpha_bound(Real s_norm, Real semigroup_const, Real alpha, Real eta);

/// c2 sqrt(int_0^eta max(1, t^{-alpha}, t^{-alpha beta})^2 dt), alpha in
/// (0, min(1/2, 1/(2 beta))).
Real sector_bound(const SectorRegion& region, Real alpha, Real eta, Real c2);

/// True when every -lambda_n lies in the region.
bool spectrum_in_region(const DiagonalSystem& system, const SectorRegion& region);

}  // namespace zca
