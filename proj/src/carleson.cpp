#include "zca/carleson.hpp"

#include <algorithm>
#include <cmath>

namespace zca {

namespace {
constexpr Real kCarlesonCap = 1e12;
}

std::string_view to_string(CarlesonClass c) {
  switch (c) {
    case CarlesonClass::NotCarleson: return "not-carleson";
    case CarlesonClass::Carleson: return "carleson";
    case CarlesonClass::ZeroClassCarleson: return "zero-class-carleson";
    case CarlesonClass::VanishingCarleson: return "vanishing-carleson";
  }
  return "not-carleson";
}

Real box_mass(const PointMeasure& measure, const CarlesonBox& box) {
  if (!(box.r > 0.0)) throw InvalidArgument("box side r must be positive");
  const Real lo = box.omega - box.r / 2;
  const Real hi = box.omega + box.r / 2;
  Real mass = 0.0;
  for (const auto& a : measure.atoms) {
    const Real x = a.location.real();
    const Real y = a.location.imag();
    if (x >= 0.0 && x <= box.r && y >= lo && y <= hi) mass += a.mass;
  }
  return mass;
}

CarlesonSweep::CarlesonSweep(const PointMeasure& measure) {
  atoms_.reserve(measure.atoms.size());
  for (const auto& a : measure.atoms) atoms_.push_back({a.location.real(), a.location.imag(), a.mass});
  std::stable_sort(atoms_.begin(), atoms_.end(),
                   [](const Atom& a, const Atom& b) { return a.im < b.im; });
}

Real CarlesonSweep::sup_ratio(Real r) const {
  if (!(r > 0.0)) throw InvalidArgument("box side r must be positive");
  std::vector<Atom> in;
  in.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (a.re <= r) in.push_back(a);
  }
  Real best = 0.0;
  // Start-anchored windows [y_i, y_i + r].
  {
    Real mass = 0.0;
    std::size_t hi = 0;
    for (std::size_t lo = 0; lo < in.size(); ++lo) {
      if (lo > 0) mass -= in[lo - 1].mass;
      if (hi < lo) {
        hi = lo;
        mass = 0.0;
      }
      while (hi < in.size() && in[hi].im <= in[lo].im + r) mass += in[hi++].mass;
      best = std::max(best, mass);
    }
  }
  // End-anchored windows [y_j - r, y_j].
  {
    Real mass = 0.0;
    std::size_t lo = 0;
    for (std::size_t hi = 0; hi < in.size(); ++hi) {
      mass += in[hi].mass;
      while (in[lo].im < in[hi].im - r) mass -= in[lo++].mass;
      best = std::max(best, mass);
    }
  }
  return best / r;
}

Real CarlesonSweep::window_mass(Real r, Real lo, Real hi) const {
  auto first = std::lower_bound(atoms_.begin(), atoms_.end(), lo,
                                [](const Atom& a, Real v) { return a.im < v; });
  Real mass = 0.0;
  for (auto it = first; it != atoms_.end() && it->im <= hi; ++it) {
    if (it->re <= r) mass += it->mass;
  }
  return mass;
}

Real CarlesonSweep::sup_ratio_outside(Real r, Real omega_abs_min) const {
  if (!(r > 0.0)) throw InvalidArgument("box side r must be positive");
  // The mass as a function of the centre only changes at y_i +- r/2, so the
  // supremum over the two closed half-lines sits at one of those or at the
  // half-line endpoints.
  std::vector<Real> centres{omega_abs_min, -omega_abs_min};
  for (const auto& a : atoms_) {
    if (a.re > r) continue;
    centres.push_back(a.im + r / 2);
    centres.push_back(a.im - r / 2);
  }
  Real best = 0.0;
  for (Real c : centres) {
    if (std::abs(c) < omega_abs_min) continue;
    best = std::max(best, window_mass(r, c - r / 2, c + r / 2));
  }
  return best / r;
}

Real sup_box_ratio(const PointMeasure& measure, Real r) { return CarlesonSweep(measure).sup_ratio(r); }

BoxRatioProfile classify(const PointMeasure& measure, const std::vector<Real>& r_grid,
                         const std::vector<Real>& small_box_grid, Real epsilon,
                         Real reliable_r_max, Real threshold) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidArgument("threshold must lie in (0, 1)");
  measure.validate();
  const CarlesonSweep sweep(measure);

  std::vector<Real> rs;
  for (Real r : r_grid) {
    if (!(r > 0.0)) throw InvalidArgument("r grid values must be positive");
    if (r <= reliable_r_max) rs.push_back(r);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  if (rs.empty()) throw InvalidArgument("no r grid value lies below the reliable truncation limit");

  BoxRatioProfile profile;
  profile.reliable_r_max = reliable_r_max;
  const std::vector<Real> hs = parallel_map<Real>(rs, [&](Real r) { return sweep.sup_ratio(r); });
  bool finite = true;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    profile.samples.push_back({rs[i], hs[i]});
    profile.sup_h = std::max(profile.sup_h, hs[i]);
    finite = finite && std::isfinite(hs[i]);
  }
  const EndRatio er = end_ratio(rs, hs, true, 2.0);
  profile.end_ratio = er.ratio;

  // Escape to the boundary and to infinity.
  const Real inner = epsilon;
  const Real outer = 1.0 / epsilon;
  std::vector<Real> probe_rs = rs;
  for (Real r : small_box_grid) {
    if (!(r > 0.0)) throw InvalidArgument("small box grid values must be positive");
    probe_rs.push_back(r);
    profile.near_origin_ratio = std::max(profile.near_origin_ratio, sweep.sup_ratio(r));
  }
  for (Real r : probe_rs) {
    const Real centre_x = r / 2;
    const Real ratio = (centre_x < inner || centre_x > outer) ? sweep.sup_ratio(r)
                                                              : sweep.sup_ratio_outside(r, outer);
    profile.vanishing_probe = std::max(profile.vanishing_probe, ratio);
  }

  if (!finite || profile.sup_h > kCarlesonCap || er.ratio > 1.0 / threshold) {
    profile.classification = CarlesonClass::NotCarleson;
  } else if (!(er.ratio < threshold && er.monotone)) {
    profile.classification = CarlesonClass::Carleson;
  } else if (profile.vanishing_probe < epsilon) {
    profile.classification = CarlesonClass::VanishingCarleson;
  } else {
    profile.classification = CarlesonClass::ZeroClassCarleson;
  }
  return profile;
}

}  // namespace zca
