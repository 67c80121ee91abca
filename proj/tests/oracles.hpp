#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's kernels.

#include "zca/system_model.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using zca::Complex;
using zca::MatrixXc;
using zca::Real;
using zca::VectorXc;

inline Real integrate(const std::function<Real(Real)>& f, Real a, Real b, int pieces = 64) {
  using GK = boost::math::quadrature::gauss_kronrod<Real, 61>;
  Real total = 0.0;
  const Real h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) total += GK::integrate(f, a + i * h, a + (i + 1) * h, 0, 0.0);
  return total;
}

// Gram entries by quadrature of conj(c_m e^{lambda_m t}) c_n e^{lambda_n t}.
inline MatrixXc gram_by_time_quadrature(const zca::DiagonalSystem& s, Real eta) {
  const auto N = s.size();
  MatrixXc G(N, N);
  for (Eigen::Index m = 0; m < N; ++m) {
    for (Eigen::Index n = 0; n < N; ++n) {
      auto g = [&](Real t) {
        return std::conj(s.coefficients()[m] * std::exp(s.eigenvalues()[m] * t)) *
               s.coefficients()[n] * std::exp(s.eigenvalues()[n] * t);
      };
      const Real re = integrate([&](Real t) { return g(t).real(); }, 0.0, eta);
      const Real im = integrate([&](Real t) { return g(t).imag(); }, 0.0, eta);
      G(m, n) = Complex(re, im);
    }
  }
  return G;
}

// Output energy of x by quadrature of |sum c_n x_n e^{lambda_n t}|^2.
inline Real energy_by_time_quadrature(const zca::DiagonalSystem& s, const VectorXc& x, Real eta) {
  return integrate(
      [&](Real t) {
        Complex y = 0.0;
        for (Eigen::Index n = 0; n < s.size(); ++n) {
          y += s.coefficients()[n] * std::exp(s.eigenvalues()[n] * t) * x[n];
        }
        return std::norm(y);
      },
      0.0, eta);
}

// Largest eigenvalue by power iteration from a random direction.
inline Real power_iteration(const MatrixXc& G, unsigned seed, int iters = 20000) {
  std::mt19937 rng(seed);
  std::normal_distribution<Real> nd;
  VectorXc x(G.rows());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = Complex(nd(rng), nd(rng));
  x.normalize();
  Real lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    VectorXc y = G * x;
    const Real next = x.dot(y).real();
    x = y.normalized();
    if (k > 10 && std::abs(next - lambda) < 1e-15 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda;
}

// Dense uniform omega scan of a function.
inline Real dense_scan(const std::function<Real(Real)>& f, Real lo, Real hi, int points) {
  Real best = -std::numeric_limits<Real>::infinity();
  for (int i = 0; i < points; ++i) best = std::max(best, f(lo + (hi - lo) * i / (points - 1)));
  return best;
}

// sup over omega of mu(Q_{r,omega}) / r by direct enumeration of every atom
// at each omega of a uniform grid.
inline Real brute_box_ratio(const zca::PointMeasure& mu, Real r, int points = 100000) {
  if (mu.atoms.empty()) return 0.0;
  Real lo = mu.atoms[0].location.imag();
  Real hi = lo;
  for (const auto& a : mu.atoms) {
    lo = std::min(lo, a.location.imag());
    hi = std::max(hi, a.location.imag());
  }
  lo -= r;
  hi += r;
  Real best = 0.0;
  for (int i = 0; i < points; ++i) {
    const Real omega = lo + (hi - lo) * i / (points - 1);
    Real mass = 0.0;
    for (const auto& a : mu.atoms) {
      if (a.location.real() <= r && std::abs(a.location.imag() - omega) <= r / 2) mass += a.mass;
    }
    best = std::max(best, mass / r);
  }
  return best;
}

// int_0^pi t^p cos(t) dt as a power series in pi.
inline Real cos_moment_series(Real p) {
  long double sum = 0.0L;
  long double term_fact = 1.0L;  // (2j)!
  const long double pi = std::numbers::pi_v<long double>;
  for (int j = 0; j < 60; ++j) {
    if (j > 0) term_fact *= (2.0L * j - 1.0L) * (2.0L * j);
    const long double sign = (j % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * std::pow(pi, p + 2 * j + 1) / (term_fact * (p + 2 * j + 1));
  }
  return static_cast<Real>(sum);
}

}  // namespace oracle
