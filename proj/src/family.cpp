#include "k3neck/family.hpp"

#include <cmath>
#include <random>

#include "k3neck/errors.hpp"

namespace k3neck {

namespace {

double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

// 53-bit uniform in [0, 1) straight from the engine, so draws do not depend
// on the standard library's distribution implementation.
double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

cplx uniform_disc(std::mt19937_64& gen, double radius) {
  const double rho = radius * std::sqrt(uniform01(gen));
  const double angle = 2.0 * kPi * uniform01(gen);
  return std::polar(rho, angle);
}

}  // namespace

FamilyParams FamilyParams::defaults() {
  FamilyParams f;
  for (std::size_t j = 0; j < 8; ++j) {
    const double t = static_cast<double>(j + 1) / 9.0;
    f.p_hat[j] = t * (1.0 + f.tau);
  }
  return f;
}

void FamilyParams::validate() const {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real())) throw DomainError("family: Im tau must be positive");
  for (const cplx& z : p_hat) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("family: non-finite point");
  }
  if (p.is_rational() && q.is_rational()) {
    throw DomainError("family: (p, q) both rational fails the Diophantine condition");
  }
}

TorusPoint ninth_point(const FamilyParams& params) {
  params.validate();
  const ComplexLattice lattice(params.tau);
  double sa = 0.0, sb = 0.0;
  for (const cplx& z : params.p_hat) {
    const TorusPoint pt(lattice, z);
    sa += pt.a();
    sb += pt.b();
  }
  return TorusPoint::from_coordinates(lattice, -sa - params.q.to_double(), -sb + params.p.to_double());
}

double ninth_point_residual(const FamilyParams& params, const TorusPoint& p9) {
  const ComplexLattice lattice(params.tau);
  double ra = 0.0, rb = 0.0;
  for (const cplx& z : params.p_hat) {
    const auto c = lattice.coordinates(z);
    ra -= c[0];
    rb -= c[1];
  }
  ra -= p9.a() + params.q.to_double();
  rb -= p9.b() - params.p.to_double();
  return std::abs(lattice.point(dist_to_int(ra), dist_to_int(rb)));
}

FiberDescriptor build_fiber(const FamilyParams& params, const DivisorClass& ample, double chart_radius) {
  params.validate();
  const AmpleVerdict v = certify_ampleness(ample);
  if (!v.certified) throw DomainError("build_fiber: ample class not certified (" + v.reason + ")");
  const ComplexLattice lattice(params.tau);
  FiberDescriptor f;
  f.tau = params.tau;
  for (const cplx& z : params.p_hat) f.points.emplace_back(lattice, z);
  const TorusPoint p9 = ninth_point(params);
  f.points.push_back(p9);
  f.ample = ample;
  f.b0 = intersect(ample, anticanonical());
  f.neck = NeckChartSpec{params.tau, params.p.to_double(), params.q.to_double(), chart_radius, Side::plus};
  f.neck.validate();
  f.constraint_residual = ninth_point_residual(params, p9);
  if (f.constraint_residual > 1e-12) throw NumericError("build_fiber: ninth-point constraint residual too large");
  return f;
}

std::string to_string(DistinctnessReport::Verdict v) {
  switch (v) {
    case DistinctnessReport::Verdict::distinct_curves:
      return "distinct_curves";
    case DistinctnessReport::Verdict::same_curve_class:
      return "same_curve_class";
    case DistinctnessReport::Verdict::undecided:
      return "undecided";
  }
  return "undecided";
}

DistinctnessReport fibers_distinct(const FiberDescriptor& f1, const FiberDescriptor& f2, double j_tol,
                                   const LatticeSumConfig& cfg) {
  DistinctnessReport r;
  r.j1 = j_invariant(ComplexLattice(f1.tau), cfg);
  r.j2 = j_invariant(ComplexLattice(f2.tau), cfg);
  const double scale = std::max({1.0, std::abs(r.j1), std::abs(r.j2)});
  if (std::abs(r.j1 - r.j2) > 2.0 * j_tol * scale) {
    r.verdict = DistinctnessReport::Verdict::distinct_curves;
  } else if (modular_equivalent(f1.tau, f2.tau)) {
    r.verdict = DistinctnessReport::Verdict::same_curve_class;
  } else {
    r.verdict = DistinctnessReport::Verdict::undecided;
  }
  return r;
}

TopologyReport topology_report(const FiberDescriptor&) { return TopologyReport{3 + 9, 1 + 9, 1 - 9}; }

FamilyParams sample_params(const FamilyParams& base, std::uint64_t seed, std::size_t index, double radius) {
  if (!(radius > 0.0)) throw DomainError("family_sample: disc radius must be positive");
  if (!(radius < base.tau.imag())) throw DomainError("family_sample: tau disc leaves the upper half plane");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  FamilyParams out = base;
  out.tau = base.tau + uniform_disc(gen, radius);
  for (std::size_t j = 0; j < 8; ++j) out.p_hat[j] = base.p_hat[j] + uniform_disc(gen, radius);
  return out;
}

std::vector<FiberDescriptor> family_sample(const FamilyParams& base, const DivisorClass& ample, std::size_t count,
                                           std::uint64_t seed, double radius) {
  base.validate();
  std::vector<FiberDescriptor> out(count);
  const auto n = static_cast<std::int64_t>(count);
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = build_fiber(sample_params(base, seed, static_cast<std::size_t>(i), radius), ample);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        message = e.what();
      }
    }
  }
  if (failed) throw NumericError("family_sample: " + message);
  return out;
}

}  // namespace k3neck
