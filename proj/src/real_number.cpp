#include "k3neck/real_number.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "k3neck/errors.hpp"

namespace k3neck {

namespace mp = boost::multiprecision;

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("floor_div: zero denominator");
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / mp::gcd(a, b) * b);
}

namespace {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  return mp::sqrt(n);
}

// Largest square s^2 dividing d; returns (s, d / s^2).
std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t d) {
  if (d <= 0) throw DomainError("radicand must be a positive integer");
  std::int64_t outer = 1;
  std::int64_t rest = d;
  for (std::int64_t f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outer *= f;
    }
  }
  return {outer, rest};
}

// Accurate double for the integer surd P + Q*sqrt(d). When the two parts
// have opposite signs the conjugate form avoids cancellation.
double surd_value(const BigInt& p, const BigInt& q, std::int64_t d) {
  const double root = std::sqrt(static_cast<double>(d));
  if (p == 0 || q == 0 || ((p > 0) == (q > 0))) {
    return static_cast<double>(p) + static_cast<double>(q) * root;
  }
  const BigInt norm = p * p - q * q * d;
  const double conj = static_cast<double>(p) - static_cast<double>(q) * root;
  return static_cast<double>(norm) / conj;
}

// floor(Q*sqrt(d)) for square-free d > 1.
BigInt floor_surd(const BigInt& q, std::int64_t d) {
  const BigInt s = isqrt(q * q * d);
  if (q >= 0) return s;
  return -(s + 1);
}

std::string rational_string(const BigRational& r) {
  std::ostringstream os;
  os << mp::numerator(r);
  if (mp::denominator(r) != 1) os << "/" << mp::denominator(r);
  return os.str();
}

struct Term {
  BigRational coef{1};
  std::int64_t radicand = 1;  // square-free; 1 means no surd
  double approx = 1.0;
};

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E'; }

}  // namespace

RealNumberRep RealNumberRep::rational(const BigRational& value) {
  RealNumberRep r;
  r.kind_ = Kind::rational;
  r.a_ = value;
  return r;
}

RealNumberRep RealNumberRep::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  return rational(BigRational(num, den));
}

RealNumberRep RealNumberRep::quadratic(const BigRational& a, const BigRational& b, std::int64_t d) {
  const auto [outer, rest] = square_free_split(d);
  const BigRational coef = b * outer;
  if (coef == 0 || rest == 1) return rational(a + coef);
  RealNumberRep r;
  r.kind_ = Kind::quadratic;
  r.a_ = a;
  r.b_ = coef;
  r.d_ = rest;
  return r;
}

RealNumberRep RealNumberRep::floating(double value) {
  if (!std::isfinite(value)) throw DomainError("float real must be finite");
  RealNumberRep r;
  r.kind_ = Kind::floating;
  r.f_ = value;
  return r;
}

RealNumberRep RealNumberRep::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw DomainError("empty real literal");

  bool is_float = false;
  std::size_t pos = 0;

  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("cannot parse real '" + raw + "': " + why);
  };

  auto read_factor = [&]() -> Term {
    Term t;
    if (text.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) throw fail("unclosed sqrt(");
      const std::string inner = text.substr(pos, close - pos);
      pos = close + 1;
      std::int64_t d = 0;
      try {
        std::size_t used = 0;
        d = std::stoll(inner, &used);
        if (used != inner.size()) throw fail("sqrt argument must be an integer");
      } catch (const std::logic_error&) {
        throw fail("sqrt argument must be an integer");
      }
      if (d < 0) throw fail("negative radicand");
      if (d == 0) {
        t.coef = 0;
        t.approx = 0.0;
        return t;
      }
      const auto [outer, rest] = square_free_split(d);
      t.coef = outer;
      t.radicand = rest;
      t.approx = std::sqrt(static_cast<double>(d));
      return t;
    }
    const std::size_t start = pos;
    while (pos < text.size()) {
      const char c = text[pos];
      if (is_number_char(c)) {
        ++pos;
      } else if ((c == '+' || c == '-') && pos > start && (text[pos - 1] == 'e' || text[pos - 1] == 'E')) {
        ++pos;
      } else {
        break;
      }
    }
    const std::string lit = text.substr(start, pos - start);
    if (lit.empty()) throw fail("expected a number or sqrt(...)");
    const bool decimal = lit.find_first_of(".eE") != std::string::npos;
    if (decimal) {
      is_float = true;
      try {
        std::size_t used = 0;
        t.approx = std::stod(lit, &used);
        if (used != lit.size()) throw fail("bad decimal literal");
      } catch (const std::logic_error&) {
        throw fail("bad decimal literal");
      }
      t.coef = 0;
    } else {
      t.coef = BigRational(BigInt(lit));
      t.approx = std::stod(lit);
    }
    return t;
  };

  BigRational rational_part{0};
  BigRational surd_part{0};
  std::int64_t radicand = 1;
  double approx_total = 0.0;

  while (pos < text.size()) {
    int sign = 1;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
    }
    Term term = read_factor();
    while (pos < text.size() && (text[pos] == '*' || text[pos] == '/')) {
      const char op = text[pos++];
      Term rhs = read_factor();
      if (op == '*') {
        term.coef *= rhs.coef;
        term.approx *= rhs.approx;
        if (rhs.radicand != 1) {
          if (term.radicand == 1) {
            term.radicand = rhs.radicand;
          } else {
            const auto [outer, rest] = square_free_split(term.radicand * rhs.radicand);
            term.coef *= outer;
            term.radicand = rest;
          }
        }
      } else {
        if (rhs.approx == 0.0) throw fail("division by zero");
        term.approx /= rhs.approx;
        if (!is_float) {
          if (rhs.coef == 0) throw fail("division by zero");
          // 1/(c sqrt(e)) = sqrt(e)/(c e)
          BigRational divisor = rhs.coef * rhs.radicand;
          term.coef /= divisor;
          if (rhs.radicand != 1) {
            if (term.radicand == 1) {
              term.radicand = rhs.radicand;
            } else {
              const auto [outer, rest] = square_free_split(term.radicand * rhs.radicand);
              term.coef *= outer;
              term.radicand = rest;
            }
          }
        }
      }
    }
    approx_total += sign * term.approx;
    if (!is_float) {
      if (term.radicand == 1) {
        rational_part += sign * term.coef;
      } else {
        if (radicand != 1 && radicand != term.radicand) throw fail("more than one distinct radicand");
        radicand = term.radicand;
        surd_part += sign * term.coef;
      }
    }
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-') throw fail("unexpected character");
  }

  if (is_float) return floating(approx_total);
  if (radicand == 1 || surd_part == 0) return rational(rational_part);
  return quadratic(rational_part, surd_part, radicand);
}

double RealNumberRep::to_double() const {
  switch (kind_) {
    case Kind::rational:
      return static_cast<double>(a_);
    case Kind::quadratic: {
      const BigInt l = lcm(mp::denominator(a_), mp::denominator(b_));
      const BigInt p = mp::numerator(a_) * (l / mp::denominator(a_));
      const BigInt q = mp::numerator(b_) * (l / mp::denominator(b_));
      return surd_value(p, q, d_) / static_cast<double>(l);
    }
    case Kind::floating:
      return f_;
  }
  return f_;
}

std::string RealNumberRep::to_string() const {
  switch (kind_) {
    case Kind::rational:
      return rational_string(a_);
    case Kind::quadratic: {
      std::string out;
      if (a_ != 0) out = rational_string(a_);
      BigRational coef = b_;
      if (coef < 0) {
        out += "-";
        coef = -coef;
      } else if (!out.empty()) {
        out += "+";
      }
      if (coef != 1) out += rational_string(coef) + "*";
      out += "sqrt(" + std::to_string(d_) + ")";
      return out;
    }
    case Kind::floating: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", f_);
      return buf;
    }
  }
  return {};
}

RealNumberRep RealNumberRep::negated() const {
  RealNumberRep r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  r.f_ = -f_;
  return r;
}

RealNumberRep RealNumberRep::plus_integer(std::int64_t k) const {
  RealNumberRep r = *this;
  if (kind_ == Kind::floating) {
    r.f_ = f_ + static_cast<double>(k);
  } else {
    r.a_ = a_ + k;
  }
  return r;
}

bool RealNumberRep::multiple_is_integer(std::int64_t n) const {
  if (kind_ != Kind::rational) return false;
  return (mp::numerator(a_) * n) % mp::denominator(a_) == 0;
}

BigInt RealNumberRep::denominator() const {
  if (kind_ != Kind::rational) throw DomainError("denominator of a non-rational real");
  return mp::denominator(a_);
}

double RealNumberRep::dist_to_integer(std::int64_t n) const {
  switch (kind_) {
    case Kind::rational: {
      const BigInt den = mp::denominator(a_);
      const BigInt num = mp::numerator(a_) * n;
      BigInt r = num % den;
      if (r < 0) r += den;
      const BigInt gap = den - r;
      const BigInt nearest = r < gap ? r : gap;
      return static_cast<double>(BigRational(nearest, den));
    }
    case Kind::quadratic: {
      const BigRational na = a_ * n;
      const BigRational nb = b_ * n;
      const BigInt l = lcm(mp::denominator(na), mp::denominator(nb));
      const BigInt p = mp::numerator(na) * (l / mp::denominator(na));
      const BigInt q = mp::numerator(nb) * (l / mp::denominator(nb));
      // n*x = (p + q sqrt(d)) / l; the surd part is never an integer.
      const BigInt m = floor_div(p + floor_surd(q, d_), l);
      const BigInt lo = p - m * l;   // lo + q sqrt(d) in (0, l)
      const BigInt hi = l - lo;      // hi - q sqrt(d) in (0, l)
      const double below = surd_value(lo, q, d_);
      const double above = surd_value(hi, -q, d_);
      return std::min(below, above) / static_cast<double>(l);
    }
    case Kind::floating: {
      const double frac = f_ - std::floor(f_);
      const double t = std::fmod(static_cast<double>(n) * frac, 1.0);
      return std::min(t, 1.0 - t);
    }
  }
  return 0.0;
}

ContinuedFraction continued_fraction(const RealNumberRep& x, std::size_t max_terms) {
  ContinuedFraction cf;
  switch (x.kind()) {
    case RealNumberRep::Kind::rational: {
      BigInt num = mp::numerator(x.a());
      BigInt den = mp::denominator(x.a());
      while (den != 0 && cf.terms.size() < max_terms) {
        const BigInt q = floor_div(num, den);
        cf.terms.push_back(q);
        const BigInt r = num - q * den;
        num = den;
        den = r;
      }
      cf.terminates = true;
      return cf;
    }
    case RealNumberRep::Kind::quadratic: {
      // x = (P + sqrt(D)) / Q with Q | D - P^2.
      const BigInt l = lcm(mp::denominator(x.a()), mp::denominator(x.b()));
      BigInt a_int = mp::numerator(x.a()) * (l / mp::denominator(x.a()));
      BigInt b_int = mp::numerator(x.b()) * (l / mp::denominator(x.b()));
      BigInt P = a_int, Q = l;
      const BigInt D0 = b_int * b_int * x.d();
      if (b_int < 0) {
        P = -P;
        Q = -Q;
      }
      BigInt D = D0;
      if ((D - P * P) % Q != 0) {
        const BigInt aq = mp::abs(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
      }
      const BigInt s = isqrt(D);
      std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
      while (cf.terms.size() < max_terms) {
        const auto key = std::make_pair(P, Q);
        const auto it = seen.find(key);
        if (it != seen.end()) {
          cf.period_start = it->second;
          cf.period_length = cf.terms.size() - it->second;
          break;
        }
        seen.emplace(key, cf.terms.size());
        BigInt a;
        if (Q > 0) {
          a = floor_div(P + s, Q);
        } else {
          a = -(floor_div(P + s, -Q) + 1);
        }
        cf.terms.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
      }
      return cf;
    }
    case RealNumberRep::Kind::floating: {
      double v = x.float_value();
      while (cf.terms.size() < max_terms) {
        const double a = std::floor(v);
        cf.terms.push_back(BigInt(static_cast<long long>(a)));
        const double frac = v - a;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
        if (v > 1e15) break;
      }
      return cf;
    }
  }
  return cf;
}

BigInt max_partial_quotient(const ContinuedFraction& cf) {
  BigInt best = 0;
  for (std::size_t i = 1; i < cf.terms.size(); ++i) best = mp::max(best, cf.terms[i]);
  return best;
}

}  // namespace k3neck
