#include "k3neck/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "k3neck/errors.hpp"
#include "k3neck/kernels.hpp"

namespace k3neck {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// x - floor(x) in [0, 1); a result that rounds up to 1 goes to 0.
double unit_fraction(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;
  if (f < 0.0) f = 0.0;
  return f;
}

double centered_fraction(double x) {
  double f = x - std::floor(x + 0.5);
  if (f >= 0.5) f -= 1.0;
  return f;
}

struct WpTerms {
  cplx p;
  cplx dp;
  WpTerms& operator+=(const WpTerms& o) {
    p += o.p;
    dp += o.dp;
    return *this;
  }
  WpTerms operator*(double s) const { return {p * s, dp * s}; }
};

}  // namespace

ComplexLattice::ComplexLattice(cplx tau) : tau_(tau) {
  if (!finite(tau)) throw DomainError("lattice: tau is not finite");
  if (!(tau.imag() > 0.0)) throw DomainError("lattice: Im(tau) must be positive");
}

std::array<double, 2> ComplexLattice::coordinates(cplx z) const {
  const double b = z.imag() / tau_.imag();
  const double a = z.real() - b * tau_.real();
  return {a, b};
}

cplx ComplexLattice::reduce(cplx z) const {
  const auto [a, b] = coordinates(z);
  return point(unit_fraction(a), unit_fraction(b));
}

cplx ComplexLattice::reduce_centered(cplx z) const {
  const auto [a, b] = coordinates(z);
  return point(centered_fraction(a), centered_fraction(b));
}

double ComplexLattice::distance_to_lattice(cplx z) const {
  const cplx c = reduce_centered(z);
  double best = std::abs(c);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      best = std::min(best, std::abs(c - point(i, j)));
    }
  }
  return best;
}

TorusPoint::TorusPoint(const ComplexLattice& lattice, cplx z) : lattice_(lattice) {
  if (!finite(z)) throw DomainError("torus point: z is not finite");
  const auto [a, b] = lattice.coordinates(z);
  a_ = unit_fraction(a);
  b_ = unit_fraction(b);
}

TorusPoint TorusPoint::from_coordinates(const ComplexLattice& lattice, double a, double b) {
  return TorusPoint(lattice, unit_fraction(a), unit_fraction(b));
}

ProjectivePoint::ProjectivePoint(cplx z1, cplx z2, cplx z3) : coords_{z1, z2, z3} {
  if (z1 == 0.0 && z2 == 0.0 && z3 == 0.0) throw DomainError("projective point: all coordinates zero");
  for (const cplx& c : coords_) {
    if (!finite(c)) throw NumericError("projective point: non-finite coordinate");
  }
}

ProjectivePoint ProjectivePoint::normalized() const {
  double largest = 0.0;
  for (const cplx& c : coords_) largest = std::max(largest, std::abs(c));
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(coords_[i]) >= largest * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  if (coords_[pivot] == cplx(1.0, 0.0)) return *this;
  std::array<cplx, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = i == pivot ? cplx(1.0, 0.0) : coords_[i] / coords_[pivot];
  return ProjectivePoint(out[0], out[1], out[2]);
}

void LatticeSumConfig::validate() const {
  if (!(truncation_radius >= 2.0)) throw DomainError("lattice sum: truncation radius must be >= 2");
  if (!(target_tol > 0.0)) throw DomainError("lattice sum: target tolerance must be positive");
  if (!(pole_guard > 0.0)) throw DomainError("lattice sum: pole guard must be positive");
}

SeriesValue eisenstein(const ComplexLattice& lattice, int k, const LatticeSumConfig& cfg) {
  if (k < 2) throw DomainError("eisenstein: k must be >= 2, got " + std::to_string(k));
  cfg.validate();
  const int power = 2 * k;
  const kernels::LatticeDisc disc{lattice.tau(), cfg.truncation_radius};
  const cplx value = kernels::parallel::lattice_sum<cplx>(disc, [power](cplx lambda) {
    return std::pow(lambda, -power);
  });
  // Absolute mass of the terms the taper touches: sum over |lambda| > R/2 of
  // |lambda|^(-2k), with a factor 2 for lattice-count fluctuation.
  const double half = 0.5 * cfg.truncation_radius;
  const double tail = 2.0 * 2.0 * kPi * std::pow(half, 2.0 - power) / ((power - 2) * lattice.tau().imag());
  return {value, tail};
}

WeierstrassValue weierstrass_p(cplx z, const ComplexLattice& lattice, const LatticeSumConfig& cfg) {
  cfg.validate();
  if (!finite(z)) throw DomainError("weierstrass: z is not finite");
  const cplx zc = lattice.reduce_centered(z);
  if (lattice.distance_to_lattice(zc) < cfg.pole_guard) {
    throw PoleError("weierstrass: z lies within the pole guard of a lattice point");
  }
  const kernels::LatticeDisc disc{lattice.tau(), cfg.truncation_radius};
  const WpTerms sum = kernels::parallel::lattice_sum<WpTerms>(disc, [zc](cplx lambda) {
    const cplx d = zc - lambda;
    const cplx inv_d2 = 1.0 / (d * d);
    return WpTerms{inv_d2 - 1.0 / (lambda * lambda), inv_d2 / d};
  });
  const cplx p = 1.0 / (zc * zc) + sum.p;
  const cplx dp = -2.0 / (zc * zc * zc) - 2.0 * sum.dp;
  const double r = std::abs(zc);
  const double radius = cfg.truncation_radius;
  const double tail = 16.0 * kPi * r * (1.0 + r / radius) /
                      (lattice.tau().imag() * radius * (1.0 - 2.0 * r / radius) * (1.0 - 2.0 * r / radius));
  return {p, dp, tail};
}

ProjectivePoint embed(const TorusPoint& pt, const LatticeSumConfig& cfg) {
  if (pt.is_zero()) return ProjectivePoint(0.0, 1.0, 0.0);
  const WeierstrassValue v = weierstrass_p(pt.z(), pt.lattice(), cfg);
  return ProjectivePoint(v.p, v.dp, 1.0);
}

Invariants weierstrass_invariants(const ComplexLattice& lattice, const LatticeSumConfig& cfg) {
  return {60.0 * eisenstein(lattice, 2, cfg).value, 140.0 * eisenstein(lattice, 3, cfg).value};
}

double cubic_residual(const ProjectivePoint& point, cplx g2, cplx g3) {
  const ProjectivePoint n = point.normalized();
  const auto& c = n.coords();
  const cplx z1 = c[0], z2 = c[1], z3 = c[2];
  return std::abs(-4.0 * z1 * z1 * z1 + g2 * z3 * z3 * z1 + g3 * z3 * z3 * z3 + z2 * z2 * z3);
}

double cubic_residual(const ProjectivePoint& point, const ComplexLattice& lattice, const LatticeSumConfig& cfg) {
  const Invariants inv = weierstrass_invariants(lattice, cfg);
  return cubic_residual(point, inv.g2, inv.g3);
}

cplx j_invariant(const ComplexLattice& lattice, const LatticeSumConfig& cfg) {
  const Invariants inv = weierstrass_invariants(lattice, cfg);
  const cplx g2_cubed = inv.g2 * inv.g2 * inv.g2;
  const cplx disc = g2_cubed - 27.0 * inv.g3 * inv.g3;
  const double scale = std::max(std::abs(g2_cubed), 27.0 * std::norm(inv.g3));
  if (std::abs(disc) <= 1e-12 * scale) throw NumericError("j-invariant: discriminant vanished numerically");
  return 1728.0 * g2_cubed / disc;
}

cplx reduce_to_fundamental_domain(cplx tau) {
  if (!finite(tau) || !(tau.imag() > 0.0)) throw DomainError("fundamental domain: tau must lie in the upper half plane");
  for (int iter = 0; iter < 10000; ++iter) {
    tau -= std::floor(tau.real() + 0.5);
    if (std::norm(tau) < 1.0 - 1e-15) {
      tau = -1.0 / tau;
    } else {
      break;
    }
  }
  // Boundary identifications: Re = 1/2 ~ Re = -1/2 and tau ~ -1/tau on |tau| = 1.
  if (tau.real() >= 0.5 - 1e-15) tau -= 1.0;
  if (std::abs(std::norm(tau) - 1.0) <= 1e-15 && tau.real() > 0.0) tau = cplx(-tau.real(), tau.imag());
  return tau;
}

bool modular_equivalent(cplx tau1, cplx tau2, double tol) {
  const cplx a = reduce_to_fundamental_domain(tau1);
  const cplx b = reduce_to_fundamental_domain(tau2);
  if (std::abs(a - b) <= tol) return true;
  // Representatives straddling the identified boundary arcs.
  if (std::abs(a - (b + 1.0)) <= tol || std::abs(a - (b - 1.0)) <= tol) return true;
  if (std::abs(std::norm(a) - 1.0) <= tol && std::abs(a - cplx(-b.real(), b.imag())) <= tol) return true;
  return false;
}

}  // namespace k3neck
