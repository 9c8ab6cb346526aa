#include "k3neck/toroidal.hpp"

#include <cmath>
#include <sstream>

#include "k3neck/errors.hpp"

namespace k3neck {

namespace {

double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

int numeric_rank(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

// Exact check that n * x is an integer; floats get a tight tolerance.
bool integral_multiple(const RealNumberRep& x, std::int64_t n) {
  if (x.is_rational()) return x.multiple_is_integer(n);
  if (x.is_irrational_exact()) return false;
  return dist_to_int(static_cast<double>(n) * x.float_value()) <= 1e-12 * std::max(1.0, std::abs(n * x.float_value()));
}

}  // namespace

ToroidalLattice::ToroidalLattice(cplx tau, RealNumberRep p, RealNumberRep q)
    : tau_(tau), p_(std::move(p)), q_(std::move(q)) {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || !(tau.imag() > 0.0)) {
    throw DomainError("toroidal lattice: tau must lie in the upper half plane");
  }
}

Vec2c ToroidalLattice::generator(int i) const {
  switch (i) {
    case 0:
      return Vec2c(0.0, 1.0);
    case 1:
      return Vec2c(1.0, p_.to_double());
    case 2:
      return Vec2c(tau_, q_.to_double());
    default:
      throw DomainError("toroidal lattice: generator index must be 0, 1 or 2");
  }
}

Vec2c ToroidalLattice::point(const std::array<std::int64_t, 3>& abc) const {
  Vec2c v = Vec2c::Zero();
  for (int i = 0; i < 3; ++i) v += static_cast<double>(abc[static_cast<std::size_t>(i)]) * generator(i);
  return v;
}

Eigen::Matrix<double, 4, 3> ToroidalLattice::real_generators() const {
  Eigen::Matrix<double, 4, 3> g;
  for (int i = 0; i < 3; ++i) {
    const Vec2c v = generator(i);
    g(0, i) = v(0).real();
    g(1, i) = v(0).imag();
    g(2, i) = v(1).real();
    g(3, i) = v(1).imag();
  }
  return g;
}

cplx HermitianFormSpec::operator()(const Vec2c& x, const Vec2c& y) const {
  return x.transpose() * matrix * y.conjugate();
}

bool HermitianFormSpec::is_hermitian(double tol) const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

cplx pairing(const Vec2c& sigma, const Vec2c& lambda) { return sigma(0) * lambda(0) + sigma(1) * lambda(1); }

std::string to_string(ToroidalVerdict::Status s) {
  switch (s) {
    case ToroidalVerdict::Status::toroidal:
      return "toroidal";
    case ToroidalVerdict::Status::not_toroidal:
      return "not_toroidal";
    case ToroidalVerdict::Status::undecided:
      return "undecided";
  }
  return "undecided";
}

bool is_witness(const Vec2c& sigma, const ToroidalLattice& lat, double tol) {
  if (sigma.isZero(0.0)) return false;
  for (int i = 0; i < 3; ++i) {
    const cplx v = pairing(sigma, lat.generator(i));
    if (std::abs(v.imag()) > tol || dist_to_int(v.real()) > tol) return false;
  }
  return true;
}

ToroidalVerdict is_toroidal(const ToroidalLattice& lat, std::int64_t search_bound) {
  if (search_bound < 1) throw DomainError("is_toroidal: search bound must be >= 1");
  ToroidalVerdict v;
  const RealNumberRep& p = lat.p();
  const RealNumberRep& q = lat.q();

  // An integral <sigma, .> on Lambda_0 forces sigma = (n2 - p n1, n1) with
  // (n2 - p n1) tau real, hence n2 = p n1 and n3 = q n1: both p n1 and q n1
  // must be integers for some n1 != 0.
  auto witness_for = [&](std::int64_t n1) {
    v.status = ToroidalVerdict::Status::not_toroidal;
    v.sigma = Vec2c(0.0, static_cast<double>(n1));
    for (int i = 0; i < 3; ++i) v.products[static_cast<std::size_t>(i)] = pairing(v.sigma, lat.generator(i));
  };

  if (p.is_rational() && q.is_rational()) {
    witness_for(static_cast<std::int64_t>(lcm(p.denominator(), q.denominator())));
    v.reason = "p and q rational; n1 = lcm of denominators";
    return v;
  }
  if (p.is_irrational_exact() || q.is_irrational_exact()) {
    v.status = ToroidalVerdict::Status::toroidal;
    v.reason = std::string(p.is_irrational_exact() ? "p" : "q") + " is irrational, so no n1 != 0 makes both p n1 and q n1 integral";
    return v;
  }
  for (std::int64_t n1 = 1; n1 <= search_bound; ++n1) {
    if (integral_multiple(p, n1) && integral_multiple(q, n1)) {
      witness_for(n1);
      v.reason = "float search found n1 = " + std::to_string(n1);
      return v;
    }
  }
  v.status = ToroidalVerdict::Status::undecided;
  v.reason = "no witness with |n1| <= " + std::to_string(search_bound);
  return v;
}

RiemannFormVerdict riemann_form_check(const HermitianFormSpec& form, const ToroidalLattice& lat, double tol) {
  RiemannFormVerdict v;
  v.m11 = form.matrix(0, 0).real();
  if (!form.is_hermitian()) {
    v.failed = "hermitian";
    return v;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double im = form(lat.generator(i), lat.generator(j)).imag();
      v.integrality_defect = std::max(v.integrality_defect, dist_to_int(im));
    }
  }
  if (v.integrality_defect > tol) {
    v.failed = "integrality";
    return v;
  }
  // The maximal complex subspace of the real span is {(x, 0)}.
  if (!(v.m11 > 0.0)) {
    v.failed = "positivity";
    return v;
  }
  v.ok = true;
  return v;
}

TypeKind type_and_kind(const ToroidalLattice& lat) {
  TypeKind out;
  const Eigen::Matrix<double, 4, 3> g = lat.real_generators();
  out.real_rank = numeric_rank(g);
  if (out.real_rank != 3) throw NumericError("type_and_kind: generators are not R-independent");

  // Multiplication by i in (Re x1, Im x1, Re x2, Im x2) coordinates.
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J(0, 1) = -1;
  J(1, 0) = 1;
  J(2, 3) = -1;
  J(3, 2) = 1;
  Eigen::Matrix<double, 4, 6> both;
  both << g, J * g;
  const int sum_rank = numeric_rank(both);
  const int cap_dim_real = 2 * out.real_rank - sum_rank;
  if (cap_dim_real % 2 != 0) throw NumericError("type_and_kind: odd-dimensional complex subspace");
  out.type = cap_dim_real / 2;

  const HermitianFormSpec G{h1_from_intersection(1, lat.tau())};
  Eigen::Matrix3d E;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) E(i, j) = G(lat.generator(i), lat.generator(j)).imag();
  }
  out.im_form_rank = numeric_rank(E);
  const int twice_kind = out.im_form_rank - 2 * out.type;
  if (twice_kind < 0 || twice_kind % 2 != 0) throw NumericError("type_and_kind: unsupported lattice, kind not integral");
  out.kind = twice_kind / 2;

  const int n = 2;
  const int m = n - out.type - 2 * out.kind;
  std::ostringstream s;
  s << "maximal closed Stein subgroup K = C^" << out.kind << " x (C*)^" << m << ", quotient abelian variety of dimension "
    << out.type + out.kind;
  out.stein_summary = s.str();
  return out;
}

HermitianFormSpec h1_from_intersection(std::int64_t b0, cplx tau) {
  if (b0 <= 0) throw DomainError("h1_from_intersection: b0 must be positive");
  if (!(tau.imag() > 0.0)) throw DomainError("h1_from_intersection: Im tau must be positive");
  HermitianFormSpec h;
  h.matrix(0, 0) = static_cast<double>(b0) / tau.imag();
  return h;
}

void validate(const ThetaBundleSpec& spec, const ToroidalLattice& lat, double tol) {
  for (const cplx& r : spec.rho_gen) {
    if (std::abs(std::abs(r) - 1.0) > tol) throw DomainError("theta bundle: semicharacter values must have modulus 1");
  }
  if (!spec.H1.is_hermitian()) throw DomainError("theta bundle: H1 is not Hermitian");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (dist_to_int(spec.H1(lat.generator(i), lat.generator(j)).imag()) > tol) {
        throw DomainError("theta bundle: Im H1 is not integral on generators, inconsistent semicharacter");
      }
    }
  }
}

cplx semicharacter(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& abc) {
  cplx value(1.0, 0.0);
  for (int i = 0; i < 3; ++i) value *= std::pow(spec.rho_gen[static_cast<std::size_t>(i)], static_cast<double>(abc[static_cast<std::size_t>(i)]));
  // Phases are integers times pi; keep them mod 2 before exponentiating.
  double phase = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double e = std::nearbyint(spec.H1(lat.generator(i), lat.generator(j)).imag());
      const double prod = static_cast<double>(abc[static_cast<std::size_t>(i)]) * static_cast<double>(abc[static_cast<std::size_t>(j)]) * e;
      phase += std::fmod(prod, 2.0);
    }
  }
  return value * std::exp(cplx(0.0, kPi * std::fmod(phase, 2.0)));
}

cplx theta_factor(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& abc,
                  const Vec2c& x) {
  validate(spec, lat);
  const Vec2c lam = lat.point(abc);
  const cplx expo = kPi * spec.H1(x, lam) + 0.5 * kPi * spec.H1(lam, lam);
  return semicharacter(spec, lat, abc) * std::exp(expo);
}

double cocycle_residual(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& l,
                        const std::array<std::int64_t, 3>& m, const Vec2c& x) {
  std::array<std::int64_t, 3> lm{};
  for (std::size_t i = 0; i < 3; ++i) lm[i] = l[i] + m[i];
  const cplx lhs = theta_factor(spec, lat, lm, x);
  const cplx rhs = theta_factor(spec, lat, l, x + lat.point(m)) * theta_factor(spec, lat, m, x);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace k3neck
