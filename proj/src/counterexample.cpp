#include "zca/counterexample.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>

namespace zca {

namespace {

constexpr Real kPi = std::numbers::pi;

// Fixed 61-point Kronrod rule per piece; pieces whose Gauss/Kronrod gap is
// above 1e-13 are bisected. Chunks are sized to about one oscillation period.
template <typename F>
Real integrate_piece(F& f, Real lo, Real hi, int depth, Real& err_total) {
  using GK = boost::math::quadrature::gauss_kronrod<Real, 61>;
  Real err = 0.0;
  const Real v = GK::integrate(f, lo, hi, 0, 0.0, &err);
  if (err > 1e-13 && depth > 0) {
    const Real mid = 0.5 * (lo + hi);
    return integrate_piece(f, lo, mid, depth - 1, err_total) +
           integrate_piece(f, mid, hi, depth - 1, err_total);
  }
  err_total += err;
  return v;
}

template <typename F>
Real integrate_chunks(F&& f, Real a, Real b, int chunks) {
  Real total = 0.0;
  Real err_total = 0.0;
  const Real h = (b - a) / chunks;
  for (int i = 0; i < chunks; ++i) {
    const Real lo = a + h * i;
    const Real hi = i + 1 == chunks ? b : a + h * (i + 1);
    total += integrate_piece(f, lo, hi, 8, err_total);
  }
  if (!(err_total < 1e-9)) {
    std::ostringstream msg;
    msg << "quadrature error estimate " << err_total << " exceeds tolerance";
    throw NumericFailure(msg.str());
  }
  return total;
}

void check_witness_beta(Real beta) {
  if (!(beta > 0.25 && beta < 0.5)) {
    throw InvalidArgument("beta must lie in (1/4, 1/2) for the non-L2 witness");
  }
}

// coth(y) - 1/y without cancellation.
Real langevin(Real y) {
  if (y < 1e-3) return y / 3.0 - y * y * y / 45.0;
  if (y > 40.0) return 1.0 - 1.0 / y;
  return 1.0 / std::tanh(y) - 1.0 / y;
}

}  // namespace

int NonBesselianBasis::frequency(int index) {
  if (index == 0) return 0;
  return index % 2 == 1 ? (index + 1) / 2 : -(index / 2);
}

Real basis_gram_entry(Real beta, int k) {
  if (!(beta > 0.0 && beta < 0.5)) throw InvalidArgument("beta must lie in (0, 1/2)");
  k = std::abs(k);
  const int chunks = std::max(1, (k + 1) / 2);
  const Real a = kPi / chunks;
  // First chunk with t = u^4, smooth at the origin.
  const Real e = 4.0 * (1.0 + 2.0 * beta) - 1.0;
  const Real head = 4.0 * integrate_chunks(
                              [&](Real u) {
                                const Real u2 = u * u;
                                return std::pow(u, e) * std::cos(k * u2 * u2);
                              },
                              0.0, std::pow(a, 0.25), 1);
  Real tail = 0.0;
  if (chunks > 1) {
    tail = integrate_chunks([&](Real t) { return std::pow(t, 2.0 * beta) * std::cos(k * t); }, a,
                            kPi, chunks - 1);
  }
  return 2.0 * (head + tail);
}

NonBesselianBasis basis_gram(Real beta, int size) {
  if (!(beta > 0.0 && beta < 0.5)) throw InvalidArgument("beta must lie in (0, 1/2)");
  if (size < 1) throw InvalidArgument("basis size must be positive");
  NonBesselianBasis basis;
  basis.beta = beta;
  basis.size = size;
  int max_diff = 0;
  for (int j = 0; j < size; ++j) {
    max_diff = std::max(max_diff, std::abs(NonBesselianBasis::frequency(j)));
  }
  max_diff *= 2;
  std::vector<Real> entries(static_cast<std::size_t>(max_diff) + 1);
  parallel_for(entries.size(), [&](std::size_t d) {
    entries[d] = basis_gram_entry(beta, static_cast<int>(d));
  });
  basis.gram.resize(size, size);
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      const int d = std::abs(NonBesselianBasis::frequency(j) - NonBesselianBasis::frequency(k));
      basis.gram(j, k) = entries[static_cast<std::size_t>(d)];
    }
  }
  return basis;
}

Real fourier_coefficient(Real beta, int k) {
  if (!(beta > 0.0 && beta < 0.5)) throw InvalidArgument("beta must lie in (0, 1/2)");
  k = std::abs(k);
  const Real a = k == 0 ? kPi : std::min(kPi, 1.0 / k);
  // On [0, a] substitute u = t^{1 - 2 beta}; t^{-2 beta} dt = du / (1 - 2 beta).
  const Real q = 1.0 - 2.0 * beta;
  const Real head =
      integrate_chunks([&](Real u) { return std::cos(k * std::pow(u, 1.0 / q)); }, 0.0,
                       std::pow(a, q), 1) /
      q;
  Real tail = 0.0;
  if (a < kPi) {
    const int chunks = std::max(1, k / 2);
    tail = integrate_chunks([&](Real t) { return std::pow(t, -2.0 * beta) * std::cos(k * t); }, a,
                            kPi, chunks);
  }
  return (head + tail) / kPi;
}

VectorXr target_coefficients(Real beta, int n) {
  check_witness_beta(beta);
  if (n < 1) throw InvalidArgument("need at least one coefficient");
  VectorXr alphas(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    alphas[static_cast<Eigen::Index>(j)] =
        fourier_coefficient(beta, NonBesselianBasis::frequency(static_cast<int>(j)));
  });
  return alphas;
}

std::vector<CounterexampleBlock> blow_up_sequence(Real beta, const std::vector<int>& Ns) {
  check_witness_beta(beta);
  if (Ns.empty()) return {};
  for (int N : Ns) {
    if (N < 2) throw InvalidArgument("blow-up blocks need N >= 2");
  }
  const int n_max = *std::max_element(Ns.begin(), Ns.end());
  const NonBesselianBasis basis = basis_gram(beta, n_max);
  const VectorXr alphas = target_coefficients(beta, n_max);

  std::vector<CounterexampleBlock> blocks;
  for (int N : Ns) {
    const MatrixXr G = basis.gram.topLeftCorner(N, N);
    Eigen::SelfAdjointEigenSolver<MatrixXr> eig(G, Eigen::EigenvaluesOnly);
    const Real lo = eig.eigenvalues().minCoeff();
    const Real hi = eig.eigenvalues().maxCoeff();
    if (eig.info() != Eigen::Success || !(lo > 1e-13 * hi)) {
      std::ostringstream msg;
      msg << "Gram section N = " << N << " is numerically singular (condition estimate "
          << (lo > 0 ? hi / lo : std::numeric_limits<Real>::infinity()) << ")";
      throw NumericFailure(msg.str());
    }
    CounterexampleBlock block;
    block.N = N;
    block.alphas = alphas.head(N);
    block.x_norm_sq = block.alphas.dot(G * block.alphas);
    block.coeff_sum_sq = block.alphas.squaredNorm();
    block.c_N = block.coeff_sum_sq / block.x_norm_sq;
    const MatrixXr G_inv = G.ldlt().solve(MatrixXr::Identity(N, N));
    block.kappa = std::sqrt(G(0, 0) * G_inv.diagonal().maxCoeff());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<BlockMSample> block_m_profile(int N, Real kappa, const std::vector<Real>& rs) {
  if (N < 1 || N > 30) throw InvalidArgument("block_m_profile needs 1 <= N <= 30");
  if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
  const bool exact = N <= 20;
  const long terms = 1L << N;
  std::vector<BlockMSample> out(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) {
    const Real r = rs[i];
    if (!(r > 0.0)) throw InvalidArgument("r values must be positive");
    const Real sr = std::sqrt(r);
    BlockMSample s{};
    s.r = r;
    s.exact = exact;
    s.arctan_bound = 2.0 * kappa * std::atan(std::ldexp(1.0, N) / sr);
    s.cap = kappa * kPi * langevin(kPi * sr);
    if (exact) {
      Real sum = 0.0;
      for (long n = terms; n >= 1; --n) {
        const Real nn = static_cast<Real>(n);
        sum += 1.0 / (r + nn * nn);
      }
      s.m_N = 2.0 * kappa * sr * sum;
    } else {
      s.m_N = s.arctan_bound;
    }
    out[i] = s;
  });
  return out;
}

Real block_energy(const VectorXr& alphas, const NonBesselianBasis& basis) {
  const auto N = static_cast<int>(alphas.size());
  if (N < 1 || N > 12) throw InvalidArgument("block energy needs 1 <= N <= 12");
  if (basis.size < N) throw InvalidArgument("basis is smaller than the block");
  Real energy = 0.0;
  for (int m = 1; m <= N; ++m) {
    for (int n = 1; n <= N; ++n) {
      const Real rate = std::ldexp(1.0, 2 * m) + std::ldexp(1.0, 2 * n);
      const Real time_factor = -std::expm1(-rate) / rate;
      energy += alphas[m - 1] * alphas[n - 1] * std::ldexp(1.0, m + n) * basis.gram(m - 1, n - 1) *
                time_factor;
    }
  }
  return energy;
}

Real block_energy(int N, Real beta, const NonBesselianBasis& basis) {
  if (N < 1 || N > 12) throw InvalidArgument("block energy needs 1 <= N <= 12");
  return block_energy(target_coefficients(beta, N), basis);
}

std::vector<Real> growth_weights(const std::vector<CounterexampleBlock>& blocks, Real alpha_exp,
                                 Real growth) {
  if (!(growth > 1.0)) throw InvalidArgument("growth factor must exceed 1");
  std::vector<Real> w;
  Real total = 0.0;
  Real g = 1.0;
  for (const auto& b : blocks) {
    w.push_back(g / std::pow(b.c_N, 0.5 - alpha_exp));
    total += w.back();
    g *= growth;
  }
  for (Real& x : w) x /= total;
  return w;
}

AssembledCounterexample assemble(Real alpha_exp, const std::vector<CounterexampleBlock>& blocks,
                                 const std::vector<Real>& betas, const std::vector<Real>& rs) {
  if (!(alpha_exp > 0.0 && alpha_exp < 0.5)) throw InvalidArgument("alpha must lie in (0, 1/2)");
  if (blocks.empty() || blocks.size() != betas.size()) {
    throw InvalidArgument("need one weight per block and at least one block");
  }
  Real sum = 0.0;
  for (Real b : betas) {
    if (!(b >= 0.0)) throw InvalidArgument("weights must be nonnegative");
    sum += b;
  }
  if (sum > 1.0 + 1e-12) throw InvalidArgument("weights must sum to at most 1");

  AssembledCounterexample out;
  out.alpha_exp = alpha_exp;
  out.betas = betas;
  out.blocks = blocks;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Real lb = betas[k] * betas[k] * std::pow(blocks[k].c_N, 1.0 - 2.0 * alpha_exp);
    if (k > 0 && !(lb > out.energy_lower_bounds.back())) {
      throw InvalidArgument(
          "weights must make beta_N^2 c_N^{1-2 alpha} strictly increasing over the prefix");
    }
    out.energy_lower_bounds.push_back(lb);
  }

  std::vector<Real> M(rs.size(), 0.0);
  for (const auto& block : blocks) {
    const Real scale = std::pow(block.c_N, -alpha_exp);
    const auto prof = block_m_profile(block.N, block.kappa, rs);
    for (std::size_t i = 0; i < rs.size(); ++i) M[i] = std::max(M[i], scale * prof[i].m_N);
  }
  for (std::size_t i = 0; i < rs.size(); ++i) out.M_samples.push_back({rs[i], M[i]});
  return out;
}

DiagonalSystem surrogate_system(const AssembledCounterexample& assembled) {
  DirectSumSpec spec;
  for (std::size_t k = 0; k < assembled.blocks.size(); ++k) {
    const auto& block = assembled.blocks[k];
    VectorXc lambda(block.N);
    VectorXc c(block.N);
    for (int n = 1; n <= block.N; ++n) {
      lambda[n - 1] = Complex(-std::ldexp(1.0, 2 * n), 0.0);
      c[n - 1] = Complex(block.kappa * std::ldexp(1.0, n), 0.0);
    }
    spec.blocks.emplace_back(std::move(lambda), std::move(c), "block" + std::to_string(block.N));
    spec.weights.push_back(assembled.betas[k]);
    spec.scalings.push_back(std::pow(block.c_N, -assembled.alpha_exp));
  }
  return direct_sum(spec);
}

WeissVerdict assembled_b1_verdict(const AssembledCounterexample& assembled, Real threshold) {
  std::vector<Real> rs;
  std::vector<Real> ms;
  for (const auto& s : assembled.M_samples) {
    rs.push_back(s.r);
    ms.push_back(s.M);
  }
  return weiss_verdict(rs, ms, threshold);
}

namespace {

struct LineFit {
  Real slope;
  Real ssr;
};

LineFit fit_line(const std::vector<Real>& x, const std::vector<Real>& y) {
  const auto n = static_cast<Real>(x.size());
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const Real slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const Real icpt = (sy - slope * sx) / n;
  Real ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real e = y[i] - icpt - slope * x[i];
    ssr += e * e;
  }
  return {slope, ssr};
}

}  // namespace

SharpnessProfile sharpness_profile(Real beta, Real alpha_exp, const std::vector<Real>& rs) {
  check_witness_beta(beta);
  if (!(alpha_exp > 0.0 && alpha_exp < 0.5)) throw InvalidArgument("alpha must lie in (0, 1/2)");
  if (rs.size() < 3) throw InvalidArgument("sharpness profile needs at least 3 r values");
  SharpnessProfile prof;
  prof.gamma = (4.0 * beta - 1.0) * alpha_exp;

  std::vector<Real> log_s;
  for (Real r : rs) {
    if (!(r > 0.0)) throw InvalidArgument("r values must be positive");
    const Real sr = std::sqrt(r);
    // Past 2^N / sqrt(r) ~ 2^57 the arctan is pi/2 in double and the ratio only decreases.
    const int n_end = std::max(2, static_cast<int>(std::ceil(std::log2(sr))) + 60);
    Real best = 0.0;
    int arg = 1;
    for (int N = 1; N <= n_end; ++N) {
      const Real v = std::atan(std::ldexp(1.0, N) / sr) / std::pow(static_cast<Real>(N), prof.gamma);
      if (v > best) {
        best = v;
        arg = N;
      }
    }
    prof.samples.push_back({r, best, arg});
    log_s.push_back(std::log(best));
  }

  auto fit_at = [&](Real offset) {
    std::vector<Real> x;
    for (Real r : rs) x.push_back(std::log(std::log(r + 2.0) + offset));
    return fit_line(x, log_s);
  };
  prof.gamma_fit_plain = -fit_at(0.0).slope;

  // Variable projection: scan the offset, then golden-section around the best.
  Real best_b = 0.0;
  Real best_ssr = fit_at(0.0).ssr;
  constexpr Real step = 0.1;
  for (int i = 1; i <= 1000; ++i) {
    const Real ssr = fit_at(step * i).ssr;
    if (ssr < best_ssr) {
      best_ssr = ssr;
      best_b = step * i;
    }
  }
  Real lo = std::max(0.0, best_b - step);
  Real hi = best_b + step;
  constexpr Real inv_phi = 0.6180339887498949;
  while (hi - lo > 1e-9) {
    const Real x1 = hi - inv_phi * (hi - lo);
    const Real x2 = lo + inv_phi * (hi - lo);
    if (fit_at(x1).ssr < fit_at(x2).ssr) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  prof.offset_fit = 0.5 * (lo + hi);
  prof.gamma_fit = -fit_at(prof.offset_fit).slope;
  return prof;
}

}  // namespace zca
