#pragma once

// Data-parallel inner loops.
//
// Every kernel comes in two flavours: `serial::` is the plain reference loop
// kept for testing and benchmarking, `parallel::` is the OpenMP version used by
// the library. The parallel versions accumulate one partial per lattice row (or
// write one slot per index) and combine the partials in a fixed order, so their
// output does not depend on the number of threads.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <omp.h>

namespace k3neck::kernels {

using cplx = std::complex<double>;

// Points n + m*tau with 0 < |n + m*tau| <= radius, enumerated row by row.
struct LatticeDisc {
  cplx tau;
  double radius;

  std::int64_t row_bound() const {
    return static_cast<std::int64_t>(std::floor(radius / tau.imag()));
  }
  // Column range [lo, hi] of row m; empty when lo > hi.
  void columns(std::int64_t m, std::int64_t& lo, std::int64_t& hi) const {
    const double y = static_cast<double>(m) * tau.imag();
    const double half = std::sqrt(std::max(0.0, radius * radius - y * y));
    const double centre = -static_cast<double>(m) * tau.real();
    lo = static_cast<std::int64_t>(std::ceil(centre - half));
    hi = static_cast<std::int64_t>(std::floor(centre + half));
  }
};

// C-infinity taper: 1 for t <= 1/2, 0 for t >= 1, smooth step in between.
inline double radial_taper(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  const double u = (1.0 - t) / 0.5;  // 1 at t = 1/2, 0 at t = 1
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

// Sum of taper(|lambda|/R) * term(lambda) over the punctured disc. `Term` maps
// a lattice point to a value of type `V` supporting += and *double.
namespace serial {

template <class V, class Term>
V lattice_sum(const LatticeDisc& disc, Term&& term) {
  V total{};
  const std::int64_t rows = disc.row_bound();
  for (std::int64_t m = -rows; m <= rows; ++m) {
    std::int64_t lo, hi;
    disc.columns(m, lo, hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (m == 0 && n == 0) continue;
      const cplx lambda(static_cast<double>(n) + static_cast<double>(m) * disc.tau.real(),
                        static_cast<double>(m) * disc.tau.imag());
      const double t = std::abs(lambda) / disc.radius;
      if (t > 1.0) continue;
      total += term(lambda) * radial_taper(t);
    }
  }
  return total;
}

// out[i] = f(first + i)
template <class F>
void index_map(std::int64_t first, std::span<double> out, F&& f) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(first + static_cast<std::int64_t>(i));
}

}  // namespace serial

namespace parallel {

template <class V, class Term>
V lattice_sum(const LatticeDisc& disc, Term&& term) {
  const std::int64_t rows = disc.row_bound();
  std::vector<V> partial(static_cast<std::size_t>(2 * rows + 1), V{});
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t m = -rows; m <= rows; ++m) {
    std::int64_t lo, hi;
    disc.columns(m, lo, hi);
    V row{};
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (m == 0 && n == 0) continue;
      const cplx lambda(static_cast<double>(n) + static_cast<double>(m) * disc.tau.real(),
                        static_cast<double>(m) * disc.tau.imag());
      const double t = std::abs(lambda) / disc.radius;
      if (t > 1.0) continue;
      row += term(lambda) * radial_taper(t);
    }
    partial[static_cast<std::size_t>(m + rows)] = row;
  }
  V total{};
  for (const V& v : partial) total += v;
  return total;
}

template <class F>
void index_map(std::int64_t first, std::span<double> out, F&& f) {
  const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(first + i);
}

}  // namespace parallel

}  // namespace k3neck::kernels
