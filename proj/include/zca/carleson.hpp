#pragma once

#include "zca/common.hpp"
#include "zca/system_model.hpp"

#include <limits>
#include <string_view>
#include <vector>

namespace zca {

/// Closed Carleson square {x + iy : x in [0, r], y in [omega - r/2, omega + r/2]}.
struct CarlesonBox {
  Real r;
  Real omega;
};

enum class CarlesonClass { NotCarleson, Carleson, ZeroClassCarleson, VanishingCarleson };

std::string_view to_string(CarlesonClass c);

struct BoxRatioProfile {
  struct Sample {
    Real r;
    Real h;  ///< sup_omega mu(Q_{r,omega}) / r
  };
  std::vector<Sample> samples;
  CarlesonClass classification = CarlesonClass::NotCarleson;
  Real sup_h = 0.0;
  Real end_ratio = 0.0;        ///< h(r_max) / h(r_max / 100)
  Real vanishing_probe = 0.0;  ///< largest ratio over probed boxes centred outside the compact set
  Real near_origin_ratio = 0.0;  ///< largest ratio over the small-box grid
  Real reliable_r_max = std::numeric_limits<Real>::infinity();
};

Real box_mass(const PointMeasure& measure, const CarlesonBox& box);

/// Atoms sorted once by ordinate; answers windowed-mass queries.
class CarlesonSweep {
 public:
  explicit CarlesonSweep(const PointMeasure& measure);

  /// h(r) = max_omega mu(Q_{r,omega}) / r, exact. Windows are anchored with an
  /// edge at an atom ordinate; both start- and end-anchored sweeps are run.
  Real sup_ratio(Real r) const;

  /// Same supremum restricted to centres with |omega| >= omega_abs_min.
  Real sup_ratio_outside(Real r, Real omega_abs_min) const;

 private:
  struct Atom {
    Real re;
    Real im;
    Real mass;
  };
  std::vector<Atom> atoms_;  // sorted by im
  Real window_mass(Real r, Real lo, Real hi) const;
};

Real sup_box_ratio(const PointMeasure& measure, Real r);

/// Samples h on r_grid (entries above reliable_r_max are dropped) and
/// classifies: carleson if h stays finite below a cap, zero-class if h decays
/// across the top two decades, vanishing if additionally every probed box
/// centred outside [eps, 1/eps] x [-1/eps, 1/eps] has ratio < eps.
BoxRatioProfile classify(const PointMeasure& measure, const std::vector<Real>& r_grid,
                         const std::vector<Real>& small_box_grid, Real epsilon = 1e-2,
                         Real reliable_r_max = std::numeric_limits<Real>::infinity(),
                         Real threshold = 0.5);

}  // namespace zca
