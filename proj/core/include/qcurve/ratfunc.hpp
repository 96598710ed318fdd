#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcurve/log_combination.hpp"
#include "qcurve/polynomial.hpp"

namespace qcurve {

/// A point of the projective line.
struct Point {
  bool infinite = false;
  FieldValue value;

  static Point at(const FieldValue& v) { return Point{false, v}; }
  static Point infinity() { return Point{true, FieldValue()}; }
  std::string str() const { return infinite ? "inf" : value.str(); }
  friend bool operator==(const Point& a, const Point& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Finite points first (canonical order), then infinity.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.infinite != b.infinite) return !a.infinite;
    return !a.infinite && canonical_less(a.value, b.value);
  }
};

/// num/den with gcd 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const FieldValue& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(FieldValue(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction z() { return RationalFunction(Polynomial::z()); }
  /// 1/(z - p)^k
  static RationalFunction pole(const FieldValue& p, int k);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  FieldValue evaluate(const FieldValue& x) const;
  /// Value at a point; the limit at infinity. Throws DivergentEndpoint at a pole.
  FieldValue evaluate(const Point& p) const;
  /// Order of vanishing at p (negative for a pole) as a function.
  int valuation(const Point& p) const;

  RationalFunction derivative() const;
  /// this(g(z))
  RationalFunction compose(const RationalFunction& g) const;
  RationalFunction scaled(const FieldValue& s) const;

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  const Radicand* field() const;
  std::string str(const std::string& var = "z") const;

 private:
  struct Raw {};
  RationalFunction(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& f, int e);

constexpr int kExactPrecision = 1 << 28;

/// Truncated Laurent series in a local coordinate t: coefficients are known
/// exactly for all exponents below precision().
class LaurentSeries {
 public:
  LaurentSeries() : lo_(kExactPrecision), prec_(kExactPrecision) {}
  LaurentSeries(int lo, std::vector<FieldValue> coeffs, int prec);
  static LaurentSeries monomial(const FieldValue& c, int e);
  static LaurentSeries zero(int prec) { return LaurentSeries(prec, {}, prec); }

  /// Exact valuation (first nonzero exponent), or precision() if none is known.
  int valuation() const { return lo_; }
  int precision() const { return prec_; }
  bool is_zero_known() const { return c_.empty(); }
  /// Throws TruncationInsufficient for exponents at or beyond precision().
  FieldValue coeff(int e) const;
  Point center;

  LaurentSeries truncated(int prec) const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries operator-() const;
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(const FieldValue& s) const;
  /// Multiplicative inverse; needs a known nonzero leading term.
  LaurentSeries inverse() const;
  LaurentSeries derivative() const;
  /// Primitive with zero constant term; the t^-1 coefficient must vanish.
  LaurentSeries primitive() const;
  /// this(inner(t)) for inner of valuation >= 1.
  LaurentSeries compose(const LaurentSeries& inner) const;
  /// Multiply by t^k.
  LaurentSeries shifted(int k) const;
  std::string str() const;

 private:
  void normalize();
  int lo_;
  std::vector<FieldValue> c_;
  int prec_;
};

/// Expansion of f as a function in the local coordinate at p
/// (t = z - p, or w = 1/z at infinity), known through exponent < prec.
LaurentSeries expand_function(const RationalFunction& f, const Point& p, int prec);
/// Expansion of the coefficient of dt for the differential f(z) dz.
LaurentSeries expand_differential(const RationalFunction& f, const Point& p, int prec);
/// Coefficients through exponent `order` inclusive.
LaurentSeries laurent_expand(const RationalFunction& f, const Point& at, int order);
/// Residue of the differential f dz at p.
FieldValue residue(const RationalFunction& f, const Point& p);

/// Finite poles of f (with multiplicity), found via find_roots.
std::vector<std::pair<FieldValue, int>> poles_of(const RationalFunction& f,
                                                 const std::vector<FieldValue>& candidates = {},
                                                 const Radicand* hint = nullptr);

/// f = polynomial + sum over (pole, power) coefficient / (z - pole)^power.
struct PartialFractions {
  Polynomial polynomial;
  std::map<std::pair<Point, int>, FieldValue> terms;  // key (pole, power >= 1), finite poles only
};
PartialFractions partial_fractions(const RationalFunction& f, const std::vector<FieldValue>& candidates = {},
                                   const Radicand* hint = nullptr);

/// rational part + sum c_i log(z - p_i)
struct LogRational {
  RationalFunction rational;
  std::vector<std::pair<FieldValue, FieldValue>> logs;  // (coefficient, point)
  std::string str() const;
};

LogRational antiderivative(const RationalFunction& f, const std::vector<FieldValue>& candidates = {},
                           const Radicand* hint = nullptr);
RationalFunction derivative(const LogRational& F);

struct EndpointValue {
  FieldValue value;
  LogCombination logs;
};
/// F(upper) - F(lower). Throws DivergentEndpoint at a pole or log point.
EndpointValue evaluate_difference(const LogRational& F, const Point& upper, const Point& lower);

/// Rational function with deg num <= dn, deg den <= dd through the samples;
/// two samples are held out for validation. Throws InconsistentSamples.
RationalFunction rational_interpolate(const std::vector<std::pair<FieldValue, FieldValue>>& samples, int dn, int dd);

}  // namespace qcurve
