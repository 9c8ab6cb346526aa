#pragma once

// The toroidal group C^2 / Lambda_0 with Lambda_0 = <(0,1), (1,p), (tau,q)>:
// toroidality, ample Riemann forms, type/kind, and the theta-bundle factor of
// automorphy alpha_lambda(x) = rho(lambda) e^{pi H(x,lambda) + pi/2 H(lambda,lambda)}.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "k3neck/elliptic.hpp"
#include "k3neck/real_number.hpp"

namespace k3neck {

using Vec2c = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;

class ToroidalLattice {
 public:
  ToroidalLattice(cplx tau, RealNumberRep p, RealNumberRep q);

  cplx tau() const { return tau_; }
  const RealNumberRep& p() const { return p_; }
  const RealNumberRep& q() const { return q_; }

  // lambda_1 = (0,1), lambda_2 = (1,p), lambda_3 = (tau,q); i in 0..2.
  Vec2c generator(int i) const;
  // a lambda_1 + b lambda_2 + c lambda_3
  Vec2c point(const std::array<std::int64_t, 3>& abc) const;
  // Real 4x3 matrix of the generators in coordinates (Re x1, Im x1, Re x2, Im x2).
  Eigen::Matrix<double, 4, 3> real_generators() const;

 private:
  cplx tau_;
  RealNumberRep p_;
  RealNumberRep q_;
};

// H(x, y) = x^t M conj(y)
struct HermitianFormSpec {
  Mat2c matrix = Mat2c::Zero();

  cplx operator()(const Vec2c& x, const Vec2c& y) const;
  bool is_hermitian(double tol = 1e-12) const;
};

// <sigma, lambda> = sigma_1 lambda^1 + sigma_2 lambda^2 (no conjugation)
cplx pairing(const Vec2c& sigma, const Vec2c& lambda);

struct ToroidalVerdict {
  enum class Status { toroidal, not_toroidal, undecided };
  Status status = Status::undecided;
  Vec2c sigma = Vec2c::Zero();
  std::array<cplx, 3> products{};  // <sigma, lambda_i>
  std::string reason;
};

std::string to_string(ToroidalVerdict::Status s);

ToroidalVerdict is_toroidal(const ToroidalLattice& lat, std::int64_t search_bound = 1000);

// sigma witnesses non-toroidality iff sigma != 0 and every <sigma, lambda_i> is an integer.
bool is_witness(const Vec2c& sigma, const ToroidalLattice& lat, double tol = 1e-12);

struct RiemannFormVerdict {
  bool ok = false;
  std::string failed;             // "hermitian", "integrality" or "positivity"
  double integrality_defect = 0;  // max distance of Im H(lambda_i, lambda_j) to Z
  double m11 = 0;
};

RiemannFormVerdict riemann_form_check(const HermitianFormSpec& form, const ToroidalLattice& lat, double tol = 1e-9);

struct TypeKind {
  int type = 0;
  int kind = 0;
  int real_rank = 0;       // dim_R of the real span of Lambda_0
  int im_form_rank = 0;    // rank of Im G on that span
  std::string stein_summary;
};

// Type from dim_R(R_Lambda cap i R_Lambda) / 2; kind from the standard form
// G = diag(1/Im tau, 0) as (rank Im G - 2 type) / 2.
TypeKind type_and_kind(const ToroidalLattice& lat);

// diag(b0 / Im tau, 0)
HermitianFormSpec h1_from_intersection(std::int64_t b0, cplx tau);

struct ThetaBundleSpec {
  HermitianFormSpec H1;
  std::array<cplx, 3> rho_gen{cplx(1, 0), cplx(1, 0), cplx(1, 0)};
};

// Validates |rho_gen| = 1 and the integrality of Im H1 on generator pairs.
void validate(const ThetaBundleSpec& spec, const ToroidalLattice& lat, double tol = 1e-9);

// rho(a lambda_1 + b lambda_2 + c lambda_3) by expanding left to right with
// rho(l + m) = rho(l) rho(m) e^{pi i Im H1(l, m)}; closed form
// prod rho_i^{n_i} * exp(pi i sum_{i<j} n_i n_j Im H1(lambda_i, lambda_j)).
cplx semicharacter(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& abc);

cplx theta_factor(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& abc,
                  const Vec2c& x);

// |alpha_{l+m}(x) - alpha_l(x+m) alpha_m(x)| / |alpha_{l+m}(x)|
double cocycle_residual(const ThetaBundleSpec& spec, const ToroidalLattice& lat, const std::array<std::int64_t, 3>& l,
                        const std::array<std::int64_t, 3>& m, const Vec2c& x);

}  // namespace k3neck
