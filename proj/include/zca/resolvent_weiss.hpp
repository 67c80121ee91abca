#pragma once

#include "zca/common.hpp"
#include "zca/system_model.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace zca {

/// Result of maximizing a real function of the frequency omega.
struct FrequencySup {
  Real value = 0.0;
  Real omega = 0.0;
  std::size_t candidates = 0;  ///< number of seed abscissae evaluated
  Real residual = 0.0;         ///< largest final bracket width among refinements
};

/// Maximizes f over the real line assuming its maxima lie between the
/// smallest and largest seed. Every seed is evaluated, then each gap between
/// adjacent distinct seeds is refined by golden-section search down to a
/// relative bracket width of rel_tol.
FrequencySup maximize_over_frequency(const std::function<Real(Real)>& f, std::vector<Real> seeds,
                                     Real rel_tol = 1e-8);

/// ||C (sI - A)^{-1}|| = sqrt(sum |c_n|^2 / |s - lambda_n|^2), Re s > 0.
Real resolvent_norm(const DiagonalSystem& system, Complex s);

/// int d mu(lambda) / |s + lambda|^2 for an atomic measure, Re s > 0.
Real resolvent_measure_integral(const PointMeasure& measure, Complex s);

/// sup over omega of resolvent_norm(system, r + i omega).
FrequencySup sup_resolvent_norm(const DiagonalSystem& system, Real r);

enum class WeissVerdict { B1Consistent, A1OnlyConsistent, Unbounded };
enum class TauVerdict { B2Consistent, A2OnlyConsistent, Unbounded };

std::string_view to_string(WeissVerdict v);
std::string_view to_string(TauVerdict v);

struct MProfile {
  struct Sample {
    Real r;
    Real m;
  };
  std::vector<Sample> samples;  ///< increasing r
  Real uniform_bound = 0.0;     ///< max sampled m (the (A1) constant on the grid)
  WeissVerdict verdict = WeissVerdict::A1OnlyConsistent;
  Real end_ratio = 0.0;         ///< m(r_max) / m(r_max / 100)
  std::size_t candidates = 0;
  Real refinement_residual = 0.0;
};

struct TauProfile {
  struct Sample {
    Real tau;
    Real K;
  };
  std::vector<Sample> samples;  ///< in the requested order
  Real uniform_bound = 0.0;     ///< max sampled K (the (A2) constant on the grid)
  TauVerdict verdict = TauVerdict::A2OnlyConsistent;
  Real end_ratio = 0.0;         ///< K(tau_min) / K(100 tau_min)
  std::size_t candidates = 0;
  Real refinement_residual = 0.0;
};

/// m(r) = sqrt(r) sup_omega ||C((r + i omega) I - A)^{-1}|| on an increasing
/// grid. The verdict compares the top two decades (heuristic).
MProfile weiss_m_profile(const DiagonalSystem& system, const std::vector<Real>& rs,
                         Real threshold = 0.5);

/// Verdict rule shared by every r-profile: decaying (ratio over the top two
/// decades below threshold and nonincreasing over the top decade), unbounded
/// (ratio above 1/threshold or non-finite), plateau otherwise.
WeissVerdict weiss_verdict(const std::vector<Real>& rs, const std::vector<Real>& ms,
                           Real threshold, Real* end_ratio_out = nullptr);

/// sup_omega tau^{-1/2} || int_0^tau e^{i omega t} C T(t) dt ||.
Real b2_constant(const DiagonalSystem& system, Real tau);
FrequencySup b2_sup(const DiagonalSystem& system, Real tau);

/// Samples b2_constant over a strictly monotone tau list; the verdict compares
/// the two decades nearest tau -> 0 (heuristic).
TauProfile b2_profile(const DiagonalSystem& system, const std::vector<Real>& taus,
                      Real threshold = 0.5);

/// Beyond these the truncation, not the infinite family, dominates the
/// profiles: r up to a tenth of the spectral radius, tau down to ten times
/// its reciprocal.
Real reliable_r_max(const DiagonalSystem& system);
Real reliable_tau_min(const DiagonalSystem& system);

inline bool decays(WeissVerdict v) { return v == WeissVerdict::B1Consistent; }
inline bool decays(TauVerdict v) { return v == TauVerdict::B2Consistent; }

}  // namespace zca
