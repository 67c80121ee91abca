#pragma once

#include "zca/common.hpp"

#include <string>
#include <vector>

namespace zca {

/// One eigenpair of a diagonal generator together with the value of the
/// observation operator on the (implicit) eigenvector.
struct SpectralMode {
  Complex eigenvalue;   ///< lambda_n, Re <= 0
  Complex coefficient;  ///< c_n = C phi_n
};

/// Finite truncation of a diagonal semigroup observation system on an
/// orthonormal eigenbasis. Mode order is the canonical index order.
class DiagonalSystem {
 public:
  DiagonalSystem() = default;
  /// Throws InvalidArgument naming the first mode with Re(lambda) > 0 or a
  /// non-finite entry.
  explicit DiagonalSystem(const std::vector<SpectralMode>& modes, std::string label = {},
                          std::string truncation_note = {});
  DiagonalSystem(VectorXc eigenvalues, VectorXc coefficients, std::string label = {},
                 std::string truncation_note = {});

  Eigen::Index size() const { return eigenvalues_.size(); }
  bool empty() const { return eigenvalues_.size() == 0; }

  const VectorXc& eigenvalues() const { return eigenvalues_; }
  const VectorXc& coefficients() const { return coefficients_; }
  SpectralMode mode(Eigen::Index i) const { return {eigenvalues_[i], coefficients_[i]}; }
  std::vector<SpectralMode> modes() const;

  const std::string& label() const { return label_; }
  const std::string& truncation_note() const { return truncation_note_; }

  /// Largest |lambda_n|; zero for an empty system.
  Real spectral_radius() const;

 private:
  void validate() const;

  VectorXc eigenvalues_;
  VectorXc coefficients_;
  std::string label_;
  std::string truncation_note_;
};

/// Weighted direct sum of blocks. Block k's coefficients are multiplied by
/// weights[k] * scalings[k].
struct DirectSumSpec {
  std::vector<DiagonalSystem> blocks;
  std::vector<Real> weights;   ///< nonnegative, sum <= 1
  std::vector<Real> scalings;  ///< positive
};

/// Atomic measure on the closed right half-plane.
struct PointMeasure {
  struct Atom {
    Complex location;  ///< Re >= 0
    Real mass;         ///< > 0
  };
  std::vector<Atom> atoms;

  Real total_mass() const;
  /// Largest Re over the atoms (0 when empty).
  Real max_re() const;
  /// Throws InvalidArgument on a nonpositive mass or Re(location) < 0.
  void validate() const;
};

/// Neumann heat equation on [0,1] with point observation at 0: lambda_n =
/// -pi^2 n^2, c_n = sqrt(2), n = 0..num_modes-1.
DiagonalSystem make_heat_system(int num_modes);

/// Dirichlet wave equation with Neumann observation at 0: lambda_n = i n pi,
/// n = -num_modes..-1, 1..num_modes, c_n = lambda_n^{-1} n pi = -i.
DiagonalSystem make_wave_system(int num_modes);

DiagonalSystem direct_sum(const DirectSumSpec& spec);

/// mu = sum |c_n|^2 delta_{-lambda_n}; zero-mass modes are dropped.
PointMeasure to_point_measure(const DiagonalSystem& system);

/// Inverse of to_point_measure: lambda = -location, c = sqrt(mass).
DiagonalSystem from_point_measure(const PointMeasure& measure, std::string label = {});

}  // namespace zca
