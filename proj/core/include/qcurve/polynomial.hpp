#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcurve/field.hpp"

namespace qcurve {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const FieldValue& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(FieldValue(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<FieldValue> coeffs);

  static Polynomial monomial(const FieldValue& c, int degree);
  /// The polynomial z.
  static Polynomial z() { return monomial(1, 1); }
  /// z - p
  static Polynomial linear_root(const FieldValue& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<FieldValue>& coeffs() const { return c_; }
  FieldValue coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : FieldValue(); }
  const FieldValue& leading() const { return c_.back(); }
  /// Lowest exponent with nonzero coefficient (zero polynomial: large value).
  int valuation() const;

  FieldValue evaluate(const FieldValue& x) const;
  Polynomial derivative() const;
  /// p(z + a)
  Polynomial taylor_shift(const FieldValue& a) const;
  /// z^deg p(1/z)
  Polynomial reversed(int deg) const;
  Polynomial monic() const;
  Polynomial scaled(const FieldValue& s) const;
  /// Divides by z^k (caller guarantees exactness).
  Polynomial shifted_down(int k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder; divisor nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  /// Exact division (throws InvalidArgument if the remainder is nonzero).
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0,0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Field of the coefficients (nullptr if all rational); throws on mixed fields.
  const Radicand* field() const;
  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<FieldValue> c_;
};

Polynomial pow(const Polynomial& p, int e);

/// Roots with multiplicity. Candidate roots are tried first, then rational
/// roots (rational coefficients only), then the quadratic formula inside Q or
/// the field `hint`. Throws UnsupportedRootField if a factor of degree > 2 remains.
std::vector<std::pair<FieldValue, int>> find_roots(const Polynomial& p, const std::vector<FieldValue>& candidates,
                                                   const Radicand* hint);

}  // namespace qcurve
