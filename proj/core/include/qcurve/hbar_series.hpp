#pragma once

#include <map>
#include <string>

#include "qcurve/log_combination.hpp"

namespace qcurve {

/// Truncated Laurent series sum_e c_e h^e whose coefficients may carry a
/// formal log part. Coefficients are known for every exponent <= order().
class HbarSeries {
 public:
  struct Coefficient {
    FieldValue value;
    LogCombination logs;
    bool is_zero() const { return value.is_zero() && logs.is_zero(); }
    std::string str() const;
  };

  explicit HbarSeries(int order = 0) : order_(order) {}
  static HbarSeries monomial(const FieldValue& c, int e, int order);
  /// log(arg) h^e
  static HbarSeries log_monomial(const FieldValue& arg, int e, int order);

  int order() const { return order_; }
  /// Lowest exponent with a stored (possibly cancelling) coefficient, or order() + 1.
  int min_exponent() const { return c_.empty() ? order_ + 1 : c_.begin()->first; }
  /// Throws TruncationInsufficient past order().
  Coefficient coeff(int e) const;
  FieldValue value(int e) const { return coeff(e).value; }
  const std::map<int, Coefficient>& terms() const { return c_; }

  void add(int e, const FieldValue& v);
  void add_log(int e, const LogCombination& l);

  HbarSeries truncated(int order) const;
  HbarSeries& operator+=(const HbarSeries& o);
  HbarSeries& operator-=(const HbarSeries& o);
  HbarSeries& operator*=(const FieldValue& s);
  HbarSeries operator-() const;
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  friend HbarSeries operator*(HbarSeries a, const FieldValue& s) { return a *= s; }
  /// Throws NotRepresentable when both factors have a log part at once.
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  /// Multiply by h^k.
  HbarSeries shifted(int k) const;

  /// Needs a rational (log-free) leading coefficient.
  HbarSeries inverse() const;
  /// exp of a log-free series with min exponent >= 1.
  HbarSeries exp() const;
  /// log of a series c0 (1 + O(h)) with log-free coefficients; log c0 lands in the logs.
  HbarSeries log() const;

  /// Every coefficient through order() vanishes (logs via LogCombination::is_zero).
  bool is_zero() const;
  /// First exponent <= order() with a nonzero coefficient, or order() + 1.
  int first_nonzero() const;
  std::string str() const;

 private:
  std::map<int, Coefficient> c_;
  int order_;
};

}  // namespace qcurve
