#pragma once

#include "zca/common.hpp"
#include "zca/system_model.hpp"

#include <string_view>
#include <vector>

namespace zca {

/// Output-energy quadratic form x -> int_0^eta |C T(t) x|^2 dt as a
/// Hermitian matrix on the mode coordinates.
struct HermitianForm {
  MatrixXc matrix;
  Real horizon = 0.0;
};

enum class ZeroClassVerdict { ZeroClassConsistent, BoundedAwayFromZero, Inconclusive };

std::string_view to_string(ZeroClassVerdict v);

struct KProfile {
  struct Sample {
    Real eta;
    Real K;
  };
  std::vector<Sample> samples;  ///< in the order of the requested etas (decreasing)
  ZeroClassVerdict verdict = ZeroClassVerdict::Inconclusive;
  Real ratio = 0.0;             ///< K(eta_min) / K(eta_max)
  Real decay_ratio_threshold = 0.5;
};

/// (e^{z eta} - 1) / z with the removable singularity at z = 0 filled in.
/// Stable for small |z eta| and for nearly purely imaginary z.
Complex phi_kernel(Complex z, Real eta);

HermitianForm gram_matrix(const DiagonalSystem& system, Real eta);

/// Best constant K_eta of the finite-time admissibility inequality on the
/// truncation: sqrt of the largest eigenvalue of the Gram matrix.
Real admissibility_constant(const DiagonalSystem& system, Real eta);

/// Largest eigenvalue of a Hermitian matrix. Throws NumericFailure with a
/// residual estimate when the eigensolver does not converge.
Real largest_eigenvalue(const MatrixXc& hermitian);

/// Samples K over `etas` (strictly decreasing, >= 3 points spanning >= 2
/// decades) and classifies the small-eta trend. The verdict is a heuristic on
/// a truncation.
KProfile k_profile(const DiagonalSystem& system, const std::vector<Real>& etas,
                   Real decay_ratio_threshold = 0.5);

}  // namespace zca
