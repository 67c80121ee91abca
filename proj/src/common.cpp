#include "zca/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace zca {

std::vector<Real> geometric_grid(Real lo, Real hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi) || points_per_decade < 1) {
    throw InvalidArgument("geometric grid needs 0 < lo <= hi and points_per_decade >= 1");
  }
  const Real decades = std::log10(hi / lo);
  const int steps = std::max(1, static_cast<int>(std::ceil(decades * points_per_decade - 1e-9)));
  std::vector<Real> grid;
  grid.reserve(steps + 1);
  if (hi == lo) return {lo};
  for (int i = 0; i <= steps; ++i) {
    grid.push_back(lo * std::pow(10.0, decades * static_cast<Real>(i) / steps));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

namespace {
std::atomic<unsigned> g_worker_override{0};
}

void set_worker_count(unsigned n) { g_worker_override.store(n); }

unsigned worker_count() {
  if (const unsigned forced = g_worker_override.load()) return forced;
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  // Static interleaved partition: index i always runs on worker i % workers.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

EndRatio end_ratio(const std::vector<Real>& xs, const std::vector<Real>& values,
                   bool toward_large, Real decades) {
  EndRatio out;
  if (xs.empty() || xs.size() != values.size()) return out;
  // Order samples so that index 0 is the asymptotic end.
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return toward_large ? xs[a] > xs[b] : xs[a] < xs[b];
  });
  const Real x_end = xs[order.front()];
  const Real v_end = values[order.front()];

  std::size_t ref = order.back();
  if (decades > 0.0) {
    const Real target = toward_large ? x_end / std::pow(10.0, decades) : x_end * std::pow(10.0, decades);
    for (std::size_t k : order) {
      ref = k;
      if (toward_large ? xs[k] <= target * (1 + 1e-12) : xs[k] >= target * (1 - 1e-12)) break;
    }
  }
  const Real v_ref = values[ref];
  out.ratio = v_ref > 0.0 ? v_end / v_ref : 0.0;

  // Nonincreasing toward the end over the last decade.
  const Real decade_edge = toward_large ? x_end / 10.0 : x_end * 10.0;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const std::size_t near = order[j];
    const std::size_t far = order[j + 1];
    const bool inside = toward_large ? xs[far] >= decade_edge * (1 - 1e-12)
                                     : xs[far] <= decade_edge * (1 + 1e-12);
    if (!inside) break;
    if (values[near] > values[far] * (1.0 + 1e-12) + 1e-300) out.monotone = false;
  }
  return out;
}

}  // namespace zca
