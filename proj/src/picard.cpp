#include "k3neck/picard.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "k3neck/errors.hpp"
#include "k3neck/real_number.hpp"

namespace k3neck {

DivisorClass DivisorClass::H() {
  DivisorClass c;
  c.d = 1;
  return c;
}

DivisorClass DivisorClass::E(int i) {
  if (i < 1 || i > 9) throw DomainError("exceptional class index must be in 1..9");
  DivisorClass c;
  c.k[static_cast<std::size_t>(i - 1)] = -1;
  return c;
}

DivisorClass DivisorClass::uniform(std::int64_t d, std::int64_t k) {
  DivisorClass c;
  c.d = d;
  c.k.fill(k);
  return c;
}

bool DivisorClass::has_uniform_k() const {
  return std::all_of(k.begin(), k.end(), [&](std::int64_t v) { return v == k[0]; });
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass c;
  c.d = d + o.d;
  for (std::size_t i = 0; i < 9; ++i) c.k[i] = k[i] + o.k[i];
  return c;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  DivisorClass c;
  c.d = d - o.d;
  for (std::size_t i = 0; i < 9; ++i) c.k[i] = k[i] - o.k[i];
  return c;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  if (has_uniform_k()) {
    os << d << "H-" << k[0] << "*sum(E)";
    return os.str();
  }
  os << d << "H";
  for (std::size_t i = 0; i < 9; ++i) {
    if (k[i] == 0) continue;
    os << (k[i] > 0 ? "-" : "+") << (k[i] > 0 ? k[i] : -k[i]) << "E" << (i + 1);
  }
  return os.str();
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  std::int64_t v = a.d * b.d;
  for (std::size_t i = 0; i < 9; ++i) v -= a.k[i] * b.k[i];
  return v;
}

cplx intersect(const ComplexDivisor& a, const DivisorClass& b) {
  cplx v = a.c_H * static_cast<double>(b.d);
  for (std::size_t i = 0; i < 9; ++i) v -= a.c_E[i] * static_cast<double>(b.k[i]);
  return v;
}

DivisorClass anticanonical() { return DivisorClass::uniform(3, 1); }

Eigen::Matrix<double, 10, 10> gram_matrix() {
  Eigen::Matrix<double, 10, 10> g;
  std::array<DivisorClass, 10> basis;
  basis[0] = DivisorClass::H();
  for (int i = 1; i <= 9; ++i) basis[static_cast<std::size_t>(i)] = DivisorClass::E(i);
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 10; ++c) {
      g(r, c) = static_cast<double>(intersect(basis[static_cast<std::size_t>(r)], basis[static_cast<std::size_t>(c)]));
    }
  }
  return g;
}

std::pair<int, int> signature(const Eigen::Matrix<double, 10, 10>& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 10, 10>> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("signature: eigen decomposition failed");
  int pos = 0, neg = 0;
  for (int i = 0; i < 10; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > 1e-12) ++pos;
    if (ev < -1e-12) ++neg;
  }
  return {pos, neg};
}

AmpleVerdict certify_ampleness(const DivisorClass& D) {
  if (!D.has_uniform_k()) return {false, "non-uniform k: outside the criterion's hypothesis"};
  const BigInt d = D.d;
  const BigInt k = D.k[0];
  if (k < 2) return {false, "k < 2"};
  if (d < 3 * k + 1) return {false, "d < 3k+1"};
  // d^2/k^2 - 1 >= 9  <=>  d^2 >= 10 k^2
  if (d * d < 10 * k * k) return {false, "d^2/k^2 - 1 < 9"};
  return {true, ""};
}

bool is_matched(const DivisorClass& a, const DivisorClass& b) {
  return a.has_uniform_k() && b.has_uniform_k() && a.d - 3 * a.k[0] == b.d - 3 * b.k[0];
}

std::vector<DivisorClass> match_pair(const DivisorClass& Lplus, std::int64_t dmax) {
  if (!Lplus.has_uniform_k()) throw DomainError("match_pair: class must have uniform k");
  const AmpleVerdict v = certify_ampleness(Lplus);
  if (!v.certified) throw DomainError("match_pair: class is not certified ample (" + v.reason + ")");
  std::vector<DivisorClass> out{Lplus};
  const std::int64_t gap = Lplus.d - 3 * Lplus.k[0];
  for (std::int64_t k = 2;; ++k) {
    const std::int64_t d = gap + 3 * k;
    if (d > dmax) break;
    if (k == Lplus.k[0]) continue;
    const DivisorClass cand = DivisorClass::uniform(d, k);
    if (certify_ampleness(cand).certified) out.push_back(cand);
  }
  return out;
}

DivisorClass involution_pullback(const DivisorClass& D, Side) { return D; }

cplx xi_offset(const DivisorClass& Lp, const DivisorClass& Lm, const ComplexDivisor& pplus,
               const ComplexDivisor& pminus, const ComplexLattice& lattice) {
  const DivisorClass C = anticanonical();
  const std::int64_t b_plus = intersect(Lp, C);
  const std::int64_t b_minus = intersect(Lm, C);
  if (b_plus != b_minus) throw DomainError("xi_offset: L+ and L- have different degrees on -K");
  if (b_plus == 0) throw DomainError("xi_offset: degenerate pairing, b0 = 0");
  const cplx raw = (intersect(pminus, Lm) - intersect(pplus, Lp)) / static_cast<double>(b_plus);
  return lattice.reduce(raw);
}

}  // namespace k3neck
