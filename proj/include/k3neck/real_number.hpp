#pragma once

// Exact-or-float reals: rationals, quadratic irrationals a + b*sqrt(d), and
// plain doubles. The exact variants carry arbitrary-precision integers so the
// Diophantine scans never overflow.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3neck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class RealNumberRep {
 public:
  enum class Kind { rational, quadratic, floating };

  static RealNumberRep rational(const BigRational& value);
  static RealNumberRep rational(std::int64_t num, std::int64_t den = 1);
  // a + b*sqrt(d); d is reduced to its square-free part, b = 0 or a perfect
  // square d collapses to a rational.
  static RealNumberRep quadratic(const BigRational& a, const BigRational& b, std::int64_t d);
  static RealNumberRep floating(double value);

  // `a/b`, integers, `a+b*sqrt(d)` style sums of rational and surd terms, or a
  // decimal literal (which yields the float variant).
  static RealNumberRep parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::floating; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_irrational_exact() const { return kind_ == Kind::quadratic; }

  const BigRational& a() const { return a_; }   // rational part (or the value)
  const BigRational& b() const { return b_; }   // surd coefficient
  std::int64_t d() const { return d_; }         // square-free radicand, 0 unless quadratic
  double float_value() const { return f_; }

  double to_double() const;
  std::string to_string() const;

  RealNumberRep negated() const;
  RealNumberRep plus_integer(std::int64_t k) const;

  // dist(n*x, Z), exact-then-rounded for the exact variants.
  double dist_to_integer(std::int64_t n) const;
  // n*x is an integer (only ever true for rationals).
  bool multiple_is_integer(std::int64_t n) const;
  // Positive denominator of a rational value.
  BigInt denominator() const;

 private:
  Kind kind_ = Kind::floating;
  BigRational a_{0};
  BigRational b_{0};
  std::int64_t d_ = 0;
  double f_ = 0.0;
};

// Continued fraction of a real. Rationals terminate; quadratic irrationals are
// eventually periodic, and the expansion stops once the period closes (the
// partial quotients of one full period are then all there is). Floats are
// expanded to at most `max_terms` terms.
struct ContinuedFraction {
  std::vector<BigInt> terms;        // a0, a1, ...
  bool terminates = false;          // rational
  std::size_t period_start = 0;     // quadratic only
  std::size_t period_length = 0;    // quadratic only; 0 if not periodic/detected
};

ContinuedFraction continued_fraction(const RealNumberRep& x, std::size_t max_terms = 10000);

// Largest partial quotient a_i over i >= 1 (a0 excluded); 0 for integers.
BigInt max_partial_quotient(const ContinuedFraction& cf);

BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace k3neck
