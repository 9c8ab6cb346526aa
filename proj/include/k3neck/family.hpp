#pragma once

// Bookkeeping for the 9-parameter family: the ninth blow-up point, fiber
// assembly, fiber distinction through j, and the (constant) topology.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "k3neck/elliptic.hpp"
#include "k3neck/neck.hpp"
#include "k3neck/picard.hpp"
#include "k3neck/real_number.hpp"

namespace k3neck {

struct FamilyParams {
  cplx tau{0.0, 1.0};
  std::array<cplx, 8> p_hat{};
  RealNumberRep p = RealNumberRep::quadratic(0, 1, 2);
  RealNumberRep q = RealNumberRep::quadratic(0, 1, 3);

  // tau = i, p_hat_j = (j/9)(1 + tau), (p, q) = (sqrt 2, sqrt 3).
  static FamilyParams defaults();
  void validate() const;
};

// p9 = -sum p_j - (q - p tau) mod <1, tau>, with p0 = [0]. Computed in
// lattice coordinates, where q - p tau has coordinates (q, -p), so a lattice
// shift of any p_hat_j that is exact in floating point leaves p9 bit-identical.
TorusPoint ninth_point(const FamilyParams& params);

// Distance to the lattice of 9 p0 - sum_{j<=9} p_j - (q - p tau).
double ninth_point_residual(const FamilyParams& params, const TorusPoint& p9);

struct FiberDescriptor {
  cplx tau;
  std::vector<TorusPoint> points;  // p_1 .. p_9, reduced
  DivisorClass ample;
  std::int64_t b0 = 0;
  NeckChartSpec neck;
  double constraint_residual = 0.0;
};

FiberDescriptor build_fiber(const FamilyParams& params, const DivisorClass& ample, double chart_radius = 2.0);

struct DistinctnessReport {
  enum class Verdict { distinct_curves, same_curve_class, undecided };
  Verdict verdict = Verdict::undecided;
  cplx j1;
  cplx j2;
};

std::string to_string(DistinctnessReport::Verdict v);

DistinctnessReport fibers_distinct(const FiberDescriptor& f1, const FiberDescriptor& f2, double j_tol = 1e-6,
                                   const LatticeSumConfig& cfg = {});

struct TopologyReport {
  int euler = 12;
  int b2 = 10;
  int signature = -8;
};

// CP^2 blown up at nine points: chi = 3 + 9, b2 = 1 + 9, sigma = 1 - 9.
TopologyReport topology_report(const FiberDescriptor& f);

inline constexpr double kDefaultDiscRadius = 0.05;

// `count` fibers with tau and every p_hat_j drawn uniformly from discs of
// radius `radius` around the base values. Draw i uses its own generator
// seeded from (seed, i), so the output is independent of the thread count.
std::vector<FiberDescriptor> family_sample(const FamilyParams& base, const DivisorClass& ample, std::size_t count,
                                           std::uint64_t seed, double radius = kDefaultDiscRadius);

// The parameter draw behind family_sample's i-th fiber.
FamilyParams sample_params(const FamilyParams& base, std::uint64_t seed, std::size_t index,
                           double radius = kDefaultDiscRadius);

}  // namespace k3neck
