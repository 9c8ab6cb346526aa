#include "k3neck/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "k3neck/errors.hpp"
#include "k3neck/kernels.hpp"

namespace k3neck {

namespace {

void require_scan_length(std::int64_t n_max, const char* what) {
  if (n_max < 10) throw DomainError(std::string(what) + " must be >= 10");
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m < 2) return {0.0, m == 1 ? y[0] : 0.0};
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) return {0.0, my};
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

// Indices (0-based) where the scan reaches a new strict minimum.
std::vector<std::size_t> record_minima(const std::vector<double>& d) {
  std::vector<std::size_t> idx;
  double best = INFINITY;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < best) {
      best = d[i];
      idx.push_back(i);
    }
  }
  return idx;
}

std::string badly_approximable_note(const RealNumberRep& p, const RealNumberRep& q) {
  std::ostringstream note;
  const RealNumberRep* coords[2] = {&p, &q};
  const char* names[2] = {"p", "q"};
  bool any = false;
  for (int i = 0; i < 2; ++i) {
    if (!coords[i]->is_irrational_exact()) continue;
    const ContinuedFraction cf = continued_fraction(*coords[i]);
    if (cf.period_length == 0) continue;
    if (any) note << "; ";
    note << "badly approximable: " << names[i] << " has a periodic continued fraction, max partial quotient "
         << max_partial_quotient(cf);
    any = true;
  }
  return note.str();
}

}  // namespace

double min_distance(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n) {
  if (n < 1) throw DomainError("min_distance: n must be >= 1");
  return std::hypot(p.dist_to_integer(n), q.dist_to_integer(n));
}

bool min_distance_is_zero(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n) {
  return p.multiple_is_integer(n) && q.multiple_is_integer(n);
}

std::vector<double> distance_scan(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max) {
  std::vector<double> d(static_cast<std::size_t>(n_max));
  kernels::parallel::index_map(1, std::span<double>(d), [&](std::int64_t n) { return min_distance(p, q, n); });
  return d;
}

std::vector<double> distance_scan_serial(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max) {
  std::vector<double> d(static_cast<std::size_t>(n_max));
  kernels::serial::index_map(1, std::span<double>(d), [&](std::int64_t n) { return min_distance(p, q, n); });
  return d;
}

std::string to_string(DiophantineVerdict::Status status) {
  switch (status) {
    case DiophantineVerdict::Status::refuted:
      return "refuted";
    case DiophantineVerdict::Status::certified:
      return "certified";
    case DiophantineVerdict::Status::estimated:
      return "estimated";
  }
  return "estimated";
}

DiophantineVerdict check_pair(const RealNumberRep& p, const RealNumberRep& q, std::int64_t n_max) {
  require_scan_length(n_max, "n_max");
  DiophantineVerdict v;

  if (p.is_rational() && q.is_rational()) {
    const BigInt w = lcm(p.denominator(), q.denominator());
    v.status = DiophantineVerdict::Status::refuted;
    v.witness_n = static_cast<std::int64_t>(w);
    if (!min_distance_is_zero(p, q, v.witness_n)) throw NumericError("rational witness failed exact check");
    return v;
  }

  const std::vector<double> d = distance_scan(p, q, n_max);

  // A float pair can land on a Gaussian integer in its own arithmetic.
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0.0) {
      v.status = DiophantineVerdict::Status::refuted;
      v.witness_n = static_cast<std::int64_t>(i + 1);
      return v;
    }
  }

  const std::vector<std::size_t> rec = record_minima(d);
  std::vector<double> lx, ly;
  for (std::size_t i : rec) {
    lx.push_back(std::log(static_cast<double>(i + 1)));
    ly.push_back(std::log(d[i]));
  }
  const LineFit fit = least_squares(lx, ly);
  const double theta = std::max(0.0, -fit.slope);

  // A is the lower envelope so the fitted bound holds on the whole scan.
  double envelope = INFINITY;
  for (std::size_t i = 0; i < d.size(); ++i) {
    envelope = std::min(envelope, d[i] * std::pow(static_cast<double>(i + 1), theta));
  }
  double slack = INFINITY;
  for (std::size_t i = 0; i < d.size(); ++i) {
    slack = std::min(slack, d[i] * std::pow(static_cast<double>(i + 1), theta) / envelope);
  }

  v.status = DiophantineVerdict::Status::estimated;
  v.theta_fit = theta;
  v.A_fit = envelope;
  v.n_max = n_max;
  v.min_slack = slack;
  v.record_count = rec.size();
  v.basis = badly_approximable_note(p, q);
  return v;
}

std::optional<DiophantineVerdict> certify_pair(const RealNumberRep& p, const RealNumberRep& q) {
  const RealNumberRep* coords[2] = {&p, &q};
  const char* names[2] = {"p", "q"};
  std::optional<BigInt> best_m;
  int which = -1;
  for (int i = 0; i < 2; ++i) {
    if (!coords[i]->is_irrational_exact()) continue;
    const ContinuedFraction cf = continued_fraction(*coords[i]);
    if (cf.period_length == 0) continue;
    const BigInt m = max_partial_quotient(cf);
    if (!best_m || m < *best_m) {
      best_m = m;
      which = i;
    }
  }
  if (!best_m) return std::nullopt;

  DiophantineVerdict v;
  v.status = DiophantineVerdict::Status::certified;
  v.theta = 1.0;
  v.A = 1.0 / (static_cast<double>(*best_m) + 2.0);
  std::ostringstream basis;
  basis << names[which] << " is a quadratic irrational with partial quotients bounded by " << *best_m
        << ", so ||n " << names[which] << "|| >= 1/((M+2) n) for all n >= 1";
  v.basis = basis.str();
  return v;
}

bool polynomial_dominates_exponential(std::int64_t n_max) {
  for (std::int64_t n = 1; n <= n_max; ++n) {
    // n < 2^n: for n >= 63 the right side exceeds every int64.
    if (n < 63 && !(n < (std::int64_t{1} << n))) return false;
  }
  return true;
}

ExponentialCheck check_exponential(const RealNumberRep& p, const RealNumberRep& q, std::int64_t sigma_max) {
  require_scan_length(sigma_max, "sigma_max");
  ExponentialCheck out;
  out.sigma_max = sigma_max;

  const std::vector<double> d = distance_scan(p, q, sigma_max);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i + 1);
    if (d[i] == 0.0 || min_distance_is_zero(p, q, n)) {
      out.zero_at = n;
      out.passes = false;
      return out;
    }
  }

  const std::vector<std::size_t> rec = record_minima(d);
  std::vector<double> nx, ly;
  for (std::size_t i : rec) {
    nx.push_back(static_cast<double>(i + 1));
    ly.push_back(std::log(d[i]));
  }
  const LineFit fit = least_squares(nx, ly);
  // Never report a non-positive rate; 1/sigma_max is the slowest decay the scan can see.
  out.a = std::max(-fit.slope, 1.0 / static_cast<double>(sigma_max));
  double envelope = INFINITY;
  for (std::size_t i = 0; i < d.size(); ++i) {
    envelope = std::min(envelope, d[i] * std::exp(out.a * static_cast<double>(i + 1)));
  }
  out.c = envelope;
  double ratio = INFINITY;
  for (std::size_t i = 0; i < d.size(); ++i) {
    ratio = std::min(ratio, d[i] * std::exp(out.a * static_cast<double>(i + 1)) / out.c);
  }
  out.min_ratio = ratio;
  out.passes = out.c > 0.0 && out.a > 0.0 && ratio >= 1.0 - 1e-12;

  const DiophantineVerdict poly = check_pair(p, q, sigma_max);
  if (poly.status != DiophantineVerdict::Status::refuted) {
    out.implication_checked = true;
    out.implied_a = poly.theta_fit;
    out.implied_c = poly.A_fit;
    bool holds = polynomial_dominates_exponential(sigma_max);
    for (std::size_t i = 0; i < d.size() && holds; ++i) {
      const double n = static_cast<double>(i + 1);
      holds = d[i] >= out.implied_c * std::exp(-out.implied_a * n) * (1.0 - 1e-12);
    }
    out.implication_holds = holds;
  }
  return out;
}

}  // namespace k3neck
