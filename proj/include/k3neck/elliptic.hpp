#pragma once

// Lattice elliptic-curve arithmetic on C/<1, tau>: Eisenstein series, the
// Weierstrass function and its derivative, the cubic embedding into CP^2 and
// the j-invariant.

#include <array>
#include <complex>

namespace k3neck {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// The lattice <1, tau>. Construction rejects tau outside the upper half plane.
class ComplexLattice {
 public:
  explicit ComplexLattice(cplx tau);

  cplx tau() const { return tau_; }

  // Real coordinates (a, b) with z = a + b*tau.
  std::array<double, 2> coordinates(cplx z) const;
  cplx point(double a, double b) const { return cplx(a, 0.0) + b * tau_; }

  // Representative in the half-open parallelogram {a + b tau : 0 <= a,b < 1}.
  cplx reduce(cplx z) const;
  // Representative with -1/2 <= a,b < 1/2 (used to keep lattice sums short).
  cplx reduce_centered(cplx z) const;
  // Distance from z to the nearest lattice point.
  double distance_to_lattice(cplx z) const;

 private:
  cplx tau_;
};

// A class [z] in C/<1,tau>, stored by its lattice coordinates in [0,1)^2 so
// that reduction is exactly idempotent.
class TorusPoint {
 public:
  TorusPoint(const ComplexLattice& lattice, cplx z);

  static TorusPoint from_coordinates(const ComplexLattice& lattice, double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  cplx z() const { return lattice_.point(a_, b_); }
  const ComplexLattice& lattice() const { return lattice_; }
  bool is_zero() const { return a_ == 0.0 && b_ == 0.0; }

  TorusPoint reduced() const { return from_coordinates(lattice_, a_, b_); }
  bool operator==(const TorusPoint& other) const { return a_ == other.a_ && b_ == other.b_; }

 private:
  TorusPoint(const ComplexLattice& lattice, double a, double b) : lattice_(lattice), a_(a), b_(b) {}
  ComplexLattice lattice_;
  double a_;
  double b_;
};

// Homogeneous coordinates [z1 : z2 : z3], never all zero.
class ProjectivePoint {
 public:
  ProjectivePoint(cplx z1, cplx z2, cplx z3);

  const std::array<cplx, 3>& coords() const { return coords_; }
  // Scale so the (first) largest-modulus coordinate is exactly 1.
  ProjectivePoint normalized() const;

 private:
  std::array<cplx, 3> coords_;
};

struct LatticeSumConfig {
  double truncation_radius = 100.0;
  double target_tol = 1e-8;
  // Lattice points closer than this to z are treated as poles.
  double pole_guard = 1e-6;

  void validate() const;
};

struct SeriesValue {
  cplx value;
  double tail_bound;
};

struct WeierstrassValue {
  cplx p;
  cplx dp;
  double tail_bound;
};

// G_{2k}(<1,tau>) = sum over nonzero lattice points of lambda^(-2k), k >= 2.
SeriesValue eisenstein(const ComplexLattice& lattice, int k, const LatticeSumConfig& cfg = {});

// (wp(z), wp'(z)). Throws PoleError within cfg.pole_guard of the lattice.
WeierstrassValue weierstrass_p(cplx z, const ComplexLattice& lattice, const LatticeSumConfig& cfg = {});

// f([z]) = [wp(z) : wp'(z) : 1], and [0 : 1 : 0] for the zero class.
ProjectivePoint embed(const TorusPoint& pt, const LatticeSumConfig& cfg = {});

// |-4 z1^3 + 60 G4 z3^2 z1 + 140 G6 z3^3 + z2^2 z3| after normalization.
double cubic_residual(const ProjectivePoint& point, const ComplexLattice& lattice,
                      const LatticeSumConfig& cfg = {});

// Same, with precomputed invariants g2 = 60 G4 and g3 = 140 G6.
double cubic_residual(const ProjectivePoint& point, cplx g2, cplx g3);

struct Invariants {
  cplx g2;
  cplx g3;
};
Invariants weierstrass_invariants(const ComplexLattice& lattice, const LatticeSumConfig& cfg = {});

// 1728 g2^3 / (g2^3 - 27 g3^2).
cplx j_invariant(const ComplexLattice& lattice, const LatticeSumConfig& cfg = {});

// SL2(Z) reduction of tau into |Re tau| <= 1/2, |tau| >= 1.
cplx reduce_to_fundamental_domain(cplx tau);

// Whether tau1 and tau2 are SL2(Z)-equivalent, judged on reduced representatives.
bool modular_equivalent(cplx tau1, cplx tau2, double tol = 1e-9);

}  // namespace k3neck
