#pragma once

#include "zca/common.hpp"
#include "zca/resolvent_weiss.hpp"
#include "zca/system_model.hpp"

#include <vector>

namespace zca {

/// Truncated bounded basis phi_j(t) = |t|^beta e^{i f_j t} of L^2(-pi, pi)
/// with frequencies ordered f = 0, 1, -1, 2, -2, ...
struct NonBesselianBasis {
  Real beta = 0.0;
  int size = 0;
  MatrixXr gram;  ///< <phi_j, phi_k>; real symmetric Toeplitz in the frequency difference

  static int frequency(int index);
};

/// 2 int_0^pi t^{2 beta} cos(k t) dt, the Gram entry for frequency difference k.
Real basis_gram_entry(Real beta, int k);

NonBesselianBasis basis_gram(Real beta, int size);

/// (1 / 2 pi) 2 int_0^pi t^{-2 beta} cos(k t) dt: Fourier coefficient of the
/// non-square-integrable |t|^{-2 beta}.
Real fourier_coefficient(Real beta, int k);

/// Coefficients alpha_1..alpha_N of |t|^{-beta} in the basis, one per basis
/// index (so alpha for index j is the coefficient of frequency f_j).
VectorXr target_coefficients(Real beta, int n);

struct CounterexampleBlock {
  int N = 0;
  VectorXr alphas;
  Real x_norm_sq = 0.0;     ///< alpha^T Gram alpha
  Real coeff_sum_sq = 0.0;  ///< sum alpha_k^2
  Real c_N = 0.0;           ///< coeff_sum_sq / x_norm_sq
  Real kappa = 0.0;         ///< max ||phi_n|| ||coordinate functional n|| on the span
};

/// One witness block per N (each N >= 2), beta in (1/4, 1/2). Throws
/// NumericFailure when a Gram section is numerically singular.
std::vector<CounterexampleBlock> blow_up_sequence(Real beta, const std::vector<int>& Ns);

struct BlockMSample {
  Real r;
  Real m_N;           ///< exact partial sum when 2^N <= 2^20, else the arctan bound
  bool exact;
  Real arctan_bound;  ///< 2 kappa arctan(2^N / sqrt r)
  Real cap;           ///< N-independent m_r = 2 kappa sqrt(r) sum_{n >= 1} 1 / (r + n^2)
};

/// m_{N,r} = 2 kappa sqrt(r) sum_{n=1}^{2^N} 1 / (r + n^2), N <= 30.
std::vector<BlockMSample> block_m_profile(int N, Real kappa, const std::vector<Real>& rs);

/// int_0^1 || sum_{n<=N} alpha_n 2^n e^{-4^n t} phi_n ||^2 dt for the witness
/// coefficients of `beta`, N <= 12, exact through the Gram matrix.
Real block_energy(int N, Real beta, const NonBesselianBasis& basis);

/// Same quadratic form for arbitrary coefficients.
Real block_energy(const VectorXr& alphas, const NonBesselianBasis& basis);

struct AssembledCounterexample {
  Real alpha_exp = 0.0;
  std::vector<Real> betas;
  std::vector<CounterexampleBlock> blocks;
  struct Sample {
    Real r;
    Real M;
  };
  std::vector<Sample> M_samples;          ///< M_r = max_N c_N^{-alpha} m_{N,r}
  std::vector<Real> energy_lower_bounds;  ///< beta_N^2 c_N^{1 - 2 alpha} per block
};

/// Weights with sum 1 that make beta_N^2 c_N^{1-2 alpha} grow geometrically
/// (ratio growth^2) along the block list.
std::vector<Real> growth_weights(const std::vector<CounterexampleBlock>& blocks, Real alpha_exp,
                                 Real growth = 2.0);

AssembledCounterexample assemble(Real alpha_exp, const std::vector<CounterexampleBlock>& blocks,
                                 const std::vector<Real>& betas, const std::vector<Real>& rs);

/// Diagonal surrogate of the assembled prefix on an orthonormal basis: block
/// N carries lambda_n = -4^n, c_n = kappa_N 2^n (n = 1..N), weight beta_N and
/// scaling c_N^{-alpha}.
DiagonalSystem surrogate_system(const AssembledCounterexample& assembled);

/// B1 verdict read off the assembled M_r samples with the same rule as
/// weiss_m_profile.
WeissVerdict assembled_b1_verdict(const AssembledCounterexample& assembled, Real threshold = 0.5);

struct SharpnessProfile {
  struct Sample {
    Real r;
    Real bound;  ///< sup_N arctan(2^N / sqrt r) / N^gamma
    int argmax_N;
  };
  std::vector<Sample> samples;
  Real gamma = 0.0;        ///< (4 beta - 1) alpha
  Real gamma_fit = 0.0;    ///< exponent of c / (log(r + 2) + offset)^gamma fitted by least squares
  Real offset_fit = 0.0;
  Real gamma_fit_plain = 0.0;  ///< same fit with the offset pinned to 0
};

SharpnessProfile sharpness_profile(Real beta, Real alpha_exp, const std::vector<Real>& rs);

}  // namespace zca
