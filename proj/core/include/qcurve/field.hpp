#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "qcurve/errors.hpp"

namespace qcurve {

/// Arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);
/// Exact rational square root if one exists.
bool rational_sqrt(const Rational& v, Rational& root);
Rational pow(const Rational& q, long e);

/// Interned square-free radicand. Records are never freed, so pointer identity
/// is field identity.
struct Radicand {
  Integer m;  // square-free, not 0 or 1
  std::string text;
};

const Radicand* intern_radicand(const Integer& squarefree);

/// a + b*sqrt(m) over a fixed square-free m, or a plain rational when b = 0.
class FieldValue {
 public:
  FieldValue() = default;
  FieldValue(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldValue(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  FieldValue(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  FieldValue(Rational&& a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(radicand), radicand any nonzero rational; reduced to canonical form.
  static FieldValue make(const Rational& a, const Rational& b, const Rational& radicand);
  /// The element sqrt(radicand) itself.
  static FieldValue sqrt_of(const Rational& radicand) { return make(0, 1, radicand); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Radicand* field() const { return rad_; }
  bool is_rational() const { return rad_ == nullptr; }
  bool is_zero() const { return rad_ == nullptr && sgn(a_) == 0; }
  bool is_one() const { return rad_ == nullptr && a_ == 1; }
  /// Caller must check is_rational().
  const Rational& rational() const { return a_; }

  FieldValue conjugate() const;
  /// Norm down to Q: a^2 - m b^2.
  Rational norm() const;
  FieldValue inverse() const;

  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator/=(const FieldValue& o) { return *this *= o.inverse(); }
  FieldValue operator-() const;

  friend FieldValue operator+(FieldValue x, const FieldValue& y) { return x += y; }
  friend FieldValue operator-(FieldValue x, const FieldValue& y) { return x -= y; }
  friend FieldValue operator*(FieldValue x, const FieldValue& y) { return x *= y; }
  friend FieldValue operator/(FieldValue x, const FieldValue& y) { return x /= y; }
  friend bool operator==(const FieldValue& x, const FieldValue& y) {
    return x.rad_ == y.rad_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldValue& x, const FieldValue& y) { return !(x == y); }

  /// Total order used only for canonical sorting (not a field order).
  friend bool canonical_less(const FieldValue& x, const FieldValue& y);

  double to_double() const;
  std::string str() const;
  std::size_t hash() const;

 private:
  void normalize();
  static const Radicand* common(const FieldValue& x, const FieldValue& y);

  Rational a_;
  Rational b_;
  const Radicand* rad_ = nullptr;
};

FieldValue pow(const FieldValue& v, long e);
/// Exact square root inside Q or inside the field of `hint` (may be nullptr).
bool field_sqrt(const FieldValue& v, const Radicand* hint, FieldValue& root);

/// Square root of v in Q(sqrt(radicand)); positive rational part, else positive
/// irrational part. Throws NotRepresentable.
FieldValue sqrt_in_field(const Rational& v, const Rational& radicand);

/// Parses "p/q", "p/q + r/s*sqrt(t/u)" and "r/s*sqrt(t/u)".
FieldValue parse_field_value(const std::string& s);

std::ostream& operator<<(std::ostream& os, const FieldValue& v);

}  // namespace qcurve

template <>
struct std::hash<qcurve::FieldValue> {
  std::size_t operator()(const qcurve::FieldValue& v) const noexcept { return v.hash(); }
};
