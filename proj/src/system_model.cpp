#include "zca/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace zca {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

DiagonalSystem::DiagonalSystem(const std::vector<SpectralMode>& modes, std::string label,
                               std::string truncation_note)
    : eigenvalues_(static_cast<Eigen::Index>(modes.size())),
      coefficients_(static_cast<Eigen::Index>(modes.size())),
      label_(std::move(label)),
      truncation_note_(std::move(truncation_note)) {
  for (std::size_t i = 0; i < modes.size(); ++i) {
    eigenvalues_[static_cast<Eigen::Index>(i)] = modes[i].eigenvalue;
    coefficients_[static_cast<Eigen::Index>(i)] = modes[i].coefficient;
  }
  validate();
}

DiagonalSystem::DiagonalSystem(VectorXc eigenvalues, VectorXc coefficients, std::string label,
                               std::string truncation_note)
    : eigenvalues_(std::move(eigenvalues)),
      coefficients_(std::move(coefficients)),
      label_(std::move(label)),
      truncation_note_(std::move(truncation_note)) {
  if (eigenvalues_.size() != coefficients_.size()) {
    throw InvalidArgument("eigenvalue and coefficient vectors differ in length");
  }
  validate();
}

void DiagonalSystem::validate() const {
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (!finite(eigenvalues_[i]) || !finite(coefficients_[i])) {
      std::ostringstream msg;
      msg << "mode " << i << ": non-finite eigenvalue or coefficient";
      throw InvalidArgument(msg.str());
    }
    if (eigenvalues_[i].real() > 0.0) {
      std::ostringstream msg;
      msg << "mode " << i << ": Re(lambda) = " << eigenvalues_[i].real()
          << " > 0, the diagonal semigroup would be unbounded";
      throw InvalidArgument(msg.str());
    }
  }
}

std::vector<SpectralMode> DiagonalSystem::modes() const {
  std::vector<SpectralMode> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Eigen::Index i = 0; i < size(); ++i) out.push_back(mode(i));
  return out;
}

Real DiagonalSystem::spectral_radius() const {
  return empty() ? 0.0 : eigenvalues_.cwiseAbs().maxCoeff();
}

Real PointMeasure::total_mass() const {
  Real total = 0.0;
  for (const auto& a : atoms) total += a.mass;
  return total;
}

Real PointMeasure::max_re() const {
  Real m = 0.0;
  for (const auto& a : atoms) m = std::max(m, a.location.real());
  return m;
}

void PointMeasure::validate() const {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& a = atoms[i];
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw InvalidArgument("atom " + std::to_string(i) + ": mass must be positive and finite");
    }
    if (!finite(a.location) || a.location.real() < 0.0) {
      throw InvalidArgument("atom " + std::to_string(i) +
                            ": location must be finite with Re >= 0");
    }
  }
}

DiagonalSystem make_heat_system(int num_modes) {
  if (num_modes < 1) throw InvalidArgument("heat system needs at least one mode");
  constexpr Real pi2 = std::numbers::pi * std::numbers::pi;
  VectorXc lambda(num_modes);
  VectorXc c(num_modes);
  for (int n = 0; n < num_modes; ++n) {
    const Real n2 = static_cast<Real>(n) * static_cast<Real>(n);
    lambda[n] = Complex(-pi2 * n2, 0.0);
    c[n] = Complex(std::sqrt(2.0), 0.0);
  }
  return DiagonalSystem(std::move(lambda), std::move(c), "heat",
                        "Neumann heat equation, modes n = 0.." + std::to_string(num_modes - 1) +
                            " of the infinite family n >= 0");
}

DiagonalSystem make_wave_system(int num_modes) {
  if (num_modes < 1) throw InvalidArgument("wave system needs at least one mode");
  VectorXc lambda(2 * num_modes);
  VectorXc c(2 * num_modes);
  Eigen::Index k = 0;
  for (int n = -num_modes; n <= num_modes; ++n) {
    if (n == 0) continue;
    const Complex ln(0.0, n * std::numbers::pi);
    lambda[k] = ln;
    // First component of phi_n is sin(n pi x) / lambda_n; C takes its slope at 0.
    c[k] = (static_cast<Real>(n) * std::numbers::pi) / ln;
    ++k;
  }
  return DiagonalSystem(std::move(lambda), std::move(c), "wave",
                        "Dirichlet wave equation, modes 0 < |n| <= " + std::to_string(num_modes) +
                            " of the infinite family n in Z \\ {0}");
}

DiagonalSystem direct_sum(const DirectSumSpec& spec) {
  const std::size_t k = spec.blocks.size();
  if (spec.weights.size() != k || spec.scalings.size() != k) {
    throw InvalidArgument("direct sum: blocks, weights and scalings must have equal length");
  }
  Real weight_sum = 0.0;
  Eigen::Index total = 0;
  for (std::size_t b = 0; b < k; ++b) {
    if (!(spec.weights[b] >= 0.0)) throw InvalidArgument("direct sum: weights must be nonnegative");
    if (!(spec.scalings[b] > 0.0)) throw InvalidArgument("direct sum: scalings must be positive");
    weight_sum += spec.weights[b];
    total += spec.blocks[b].size();
  }
  if (weight_sum > 1.0 + 1e-12) throw InvalidArgument("direct sum: weights must sum to at most 1");

  VectorXc lambda(total);
  VectorXc c(total);
  Eigen::Index offset = 0;
  std::string label = "direct_sum(";
  for (std::size_t b = 0; b < k; ++b) {
    const auto& block = spec.blocks[b];
    const Real factor = spec.weights[b] * spec.scalings[b];
    lambda.segment(offset, block.size()) = block.eigenvalues();
    c.segment(offset, block.size()) = block.coefficients() * factor;
    offset += block.size();
    label += (b ? "," : "") + (block.label().empty() ? std::string("?") : block.label());
  }
  label += ")";
  return DiagonalSystem(std::move(lambda), std::move(c), std::move(label),
                        std::to_string(k) + " blocks");
}

PointMeasure to_point_measure(const DiagonalSystem& system) {
  PointMeasure mu;
  mu.atoms.reserve(static_cast<std::size_t>(system.size()));
  for (Eigen::Index i = 0; i < system.size(); ++i) {
    const Real mass = std::norm(system.coefficients()[i]);
    if (mass > 0.0) mu.atoms.push_back({-system.eigenvalues()[i], mass});
  }
  return mu;
}

DiagonalSystem from_point_measure(const PointMeasure& measure, std::string label) {
  measure.validate();
  const auto n = static_cast<Eigen::Index>(measure.atoms.size());
  VectorXc lambda(n);
  VectorXc c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lambda[i] = -measure.atoms[static_cast<std::size_t>(i)].location;
    c[i] = Complex(std::sqrt(measure.atoms[static_cast<std::size_t>(i)].mass), 0.0);
  }
  return DiagonalSystem(std::move(lambda), std::move(c), std::move(label), "from point measure");
}

}  // namespace zca
