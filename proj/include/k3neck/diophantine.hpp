#pragma once

// The Diophantine condition on a pair (p, q): how close the multiples
// n(p + qi) come to Gaussian integers, and its exponential reformulation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3neck/real_number.hpp"

namespace k3neck {

inline constexpr std::int64_t kDefaultNMax = 100000;

// sqrt(dist(np, Z)^2 + dist(nq, Z)^2).
double min_distance(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n);

// True iff n(p + qi) is exactly a Gaussian integer (needs both coordinates rational).
bool min_distance_is_zero(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n);

// d[i] = min_distance(p, q, i + 1) for i < n_max, evaluated in parallel.
std::vector<double> distance_scan(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max);
// Same, single-threaded; the two must agree bitwise.
std::vector<double> distance_scan_serial(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max);

struct DiophantineVerdict {
  enum class Status { refuted, certified, estimated };
  Status status = Status::estimated;

  // refuted
  std::int64_t witness_n = 0;
  // certified
  double theta = 0.0;
  double A = 0.0;
  // estimated
  double theta_fit = 0.0;
  double A_fit = 0.0;
  std::int64_t n_max = 0;
  double min_slack = 0.0;
  std::size_t record_count = 0;
  // certified: why the bound holds; estimated: optional badly-approximable note
  std::string basis;
};

std::string to_string(DiophantineVerdict::Status status);

// Refutes rational pairs exactly; otherwise fits d(n) ~ A n^-theta on the
// record minima of a scan up to n_max.
DiophantineVerdict check_pair(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max = kDefaultNMax);

// Proof-grade tier: if some coordinate is a quadratic irrational, its
// partial quotients are bounded by M and ||n x|| >= 1/((M+2) n) for all n,
// so the pair satisfies the condition with theta = 1, A = 1/(M+2).
// Returns nothing for float inputs or rational pairs.
std::optional<DiophantineVerdict> certify_pair(const RealNumberRep& p, const RealNumberRep& q);

struct ExponentialCheck {
  bool passes = false;
  std::optional<std::int64_t> zero_at;  // first sigma with distance exactly 0
  double c = 0.0;                       // fitted: d(n) >= c e^{-a n}
  double a = 0.0;
  std::int64_t sigma_max = 0;
  double min_ratio = 0.0;               // min over n of d(n) e^{a n} / c
  // Polynomial verdict => exponential bound with c = A, a = theta.
  bool implication_checked = false;
  bool implication_holds = false;
  double implied_c = 0.0;
  double implied_a = 0.0;
};

ExponentialCheck check_exponential(const RealNumberRep& p, const RealNumberRep& q, std::int64_t sigma_max);

// n^-theta >= e^-(theta n) for every 1 <= n <= n_max, decided in integers
// through n <= 2^n <= e^n.
bool polynomial_dominates_exponential(std::int64_t n_max);

}  // namespace k3neck
