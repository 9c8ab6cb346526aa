#include <doctest.h>
#include <omp.h>

#include <cstring>
#include <vector>

#include "k3neck/kernels.hpp"

using namespace k3neck::kernels;

namespace {

bool same_bits(cplx a, cplx b) { return std::memcmp(&a, &b, sizeof a) == 0; }

cplx g4_term(cplx l) { return 1.0 / (l * l * l * l); }

}  // namespace

TEST_CASE("taper is 1 inside half radius, 0 at the edge, monotone between") {
  CHECK(radial_taper(0.0) == 1.0);
  CHECK(radial_taper(0.5) == 1.0);
  CHECK(radial_taper(1.0) == 0.0);
  double prev = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double v = radial_taper(0.5 + 0.5 * k / 100.0);
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(radial_taper(0.75) == doctest::Approx(0.5));
}

TEST_CASE("disc enumeration covers exactly the points of modulus <= R") {
  const LatticeDisc disc{cplx(0.3, 1.1), 7.5};
  const std::int64_t rows = disc.row_bound();
  std::size_t enumerated = 0, brute = 0;
  for (std::int64_t m = -rows; m <= rows; ++m) {
    std::int64_t lo, hi;
    disc.columns(m, lo, hi);
    if (hi >= lo) enumerated += static_cast<std::size_t>(hi - lo + 1);
  }
  for (std::int64_t m = -20; m <= 20; ++m) {
    for (std::int64_t n = -20; n <= 20; ++n) brute += std::abs(cplx(n + m * 0.3, m * 1.1)) <= 7.5;
  }
  CHECK(enumerated == brute);
}

TEST_CASE("parallel lattice sum matches serial and is thread-count independent") {
  const LatticeDisc disc{cplx(0.2, 1.3), 60.0};
  const cplx ref = serial::lattice_sum<cplx>(disc, g4_term);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const cplx one = parallel::lattice_sum<cplx>(disc, g4_term);
  for (int threads : {2, 3, 4, 8}) {
    omp_set_num_threads(threads);
    CHECK(same_bits(parallel::lattice_sum<cplx>(disc, g4_term), one));
  }
  omp_set_num_threads(saved);
  CHECK(std::abs(one - ref) <= 1e-14 * std::abs(ref));
}

TEST_CASE("index_map writes every slot identically in both flavours") {
  std::vector<double> a(1000), b(1000);
  auto f = [](std::int64_t n) { return std::sin(static_cast<double>(n)) / static_cast<double>(n); };
  serial::index_map(1, a, f);
  omp_set_num_threads(4);
  parallel::index_map(1, b, f);
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}
