#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zca {

using Real = double;
using Complex = std::complex<Real>;

using VectorXr = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using MatrixXr = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when an operation's precondition on its inputs is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical kernel fails to converge or detects an
/// ill-conditioned problem.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometric grid from lo to hi (both included) with the given number of
/// points per decade. Increasing order.
std::vector<Real> geometric_grid(Real lo, Real hi, int points_per_decade);

/// Number of worker threads used by parallel_for. Honors the THREADS
/// environment variable as a cap.
unsigned worker_count();

/// Forces the worker count (may exceed the hardware count); 0 restores the
/// default.
void set_worker_count(unsigned n);

/// Runs body(i) for i in [0, n). Each index is evaluated exactly once and
/// independently, so results written to slot i do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <typename T, typename F>
std::vector<T> parallel_map(const std::vector<Real>& xs, F&& f) {
  std::vector<T> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = f(xs[i]); });
  return out;
}

/// Ratio test shared by all profile verdicts: value at the asymptotic end
/// over the value `decades` decades inward.
struct EndRatio {
  Real ratio = 0.0;
  bool monotone = true;  ///< nonincreasing toward the asymptotic end over the last decade
};

/// Asymptotic end is the largest abscissa when `toward_large`, else the
/// smallest. Abscissae must be strictly monotone (either direction). With
/// decades <= 0 the reference point is the far end of the sample list.
EndRatio end_ratio(const std::vector<Real>& xs, const std::vector<Real>& values,
                   bool toward_large, Real decades);

}  // namespace zca
