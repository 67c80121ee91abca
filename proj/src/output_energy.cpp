#include "zca/output_energy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zca {

std::string_view to_string(ZeroClassVerdict v) {
  switch (v) {
    case ZeroClassVerdict::ZeroClassConsistent: return "zero-class-consistent";
    case ZeroClassVerdict::BoundedAwayFromZero: return "bounded-away-from-zero";
    case ZeroClassVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// e^w - 1 without cancellation for complex w.
Complex expm1(Complex w) {
  const Real x = w.real();
  const Real y = w.imag();
  const Real s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

void check_eta(Real eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("horizon eta must be positive");
}

}  // namespace

Complex phi_kernel(Complex z, Real eta) {
  const Complex w = z * eta;
  if (std::abs(w) < 1e-4) {
    return eta * (1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0);
  }
  return expm1(w) / z;
}

HermitianForm gram_matrix(const DiagonalSystem& system, Real eta) {
  check_eta(eta);
  const Eigen::Index n = system.size();
  const VectorXc& lambda = system.eigenvalues();
  const VectorXc& c = system.coefficients();
  HermitianForm form{MatrixXc(n, n), eta};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const Complex z = std::conj(lambda[i]) + lambda[j];
      const Real scale = 1.0 + std::abs(lambda[i]) + std::abs(lambda[j]);
      const Complex k = std::abs(z) < 1e-14 * scale ? Complex(eta, 0.0) : phi_kernel(z, eta);
      const Complex g = std::conj(c[i]) * c[j] * k;
      form.matrix(i, j) = g;
      form.matrix(j, i) = std::conj(g);
    }
    form.matrix(j, j) = Complex(form.matrix(j, j).real(), 0.0);
  }
  return form;
}

Real largest_eigenvalue(const MatrixXc& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  if (!hermitian.allFinite()) throw NumericFailure("Gram matrix has non-finite entries (overflow)");
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    // Report how far a few power iterations get, for diagnosis.
    VectorXc v = VectorXc::Ones(hermitian.rows()).normalized();
    Real theta = 0.0;
    for (int it = 0; it < 200; ++it) {
      VectorXc w = hermitian * v;
      const Real nw = w.norm();
      if (nw == 0.0) break;
      theta = v.dot(w).real();
      v = w / nw;
    }
    const Real residual = (hermitian * v - theta * v).norm();
    std::ostringstream msg;
    msg << "Hermitian eigensolver did not converge (n = " << hermitian.rows()
        << "); power-iteration estimate " << theta << " with residual " << residual;
    throw NumericFailure(msg.str());
  }
  return solver.eigenvalues().maxCoeff();
}

Real admissibility_constant(const DiagonalSystem& system, Real eta) {
  const HermitianForm g = gram_matrix(system, eta);
  return std::sqrt(std::max(0.0, largest_eigenvalue(g.matrix)));
}

KProfile k_profile(const DiagonalSystem& system, const std::vector<Real>& etas,
                   Real decay_ratio_threshold) {
  if (!(decay_ratio_threshold > 0.0 && decay_ratio_threshold < 1.0)) {
    throw InvalidArgument("decay_ratio_threshold must lie in (0, 1)");
  }
  if (etas.size() < 3) throw InvalidArgument("k_profile needs at least 3 horizons");
  for (std::size_t i = 0; i < etas.size(); ++i) {
    check_eta(etas[i]);
    if (i > 0 && !(etas[i] < etas[i - 1])) {
      throw InvalidArgument("k_profile horizons must be strictly decreasing");
    }
  }
  if (etas.front() / etas.back() < 100.0 * (1 - 1e-12)) {
    throw InvalidArgument("k_profile horizons must span at least two decades");
  }

  const std::vector<Real> ks =
      parallel_map<Real>(etas, [&](Real eta) { return admissibility_constant(system, eta); });

  KProfile profile;
  profile.decay_ratio_threshold = decay_ratio_threshold;
  for (std::size_t i = 0; i < etas.size(); ++i) profile.samples.push_back({etas[i], ks[i]});

  const Real k_max = ks.front();
  profile.ratio = k_max > 0.0 ? ks.back() / k_max : 0.0;
  bool nonincreasing = true;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] > ks[i - 1] * (1.0 + 1e-12)) nonincreasing = false;
  }
  if (profile.ratio < decay_ratio_threshold && nonincreasing) {
    profile.verdict = ZeroClassVerdict::ZeroClassConsistent;
  } else if (profile.ratio > 1.0 - (1.0 - decay_ratio_threshold) / 4.0) {
    profile.verdict = ZeroClassVerdict::BoundedAwayFromZero;
  } else {
    profile.verdict = ZeroClassVerdict::Inconclusive;
  }
  return profile;
}

}  // namespace zca
