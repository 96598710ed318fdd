#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcurve/hbar_series.hpp"

namespace qcurve {

using ParameterPoint = std::map<std::string, Rational>;

/// constant + hbar_coeff h + sum_p coeff[p] lambda_p
struct AffineForm {
  std::map<std::string, Rational> coeff;
  Rational constant;
  Rational hbar_coeff;

  static AffineForm constant_form(const Rational& c);
  static AffineForm parameter(const std::string& p, const Rational& scale = 1);
  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator*=(const Rational& s);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, AffineForm b) { return a += (b *= Rational(-1)); }
  friend AffineForm operator*(AffineForm a, const Rational& s) { return a *= s; }
  Rational at(const ParameterPoint& p) const;
  /// Rate of change along lambda -> lambda + h d (includes the explicit h).
  Rational slope(const ParameterPoint& d) const;
  std::string str() const;
};

/// c h^k prod_i l_i^{e_i} [log m]
struct ExpressionTerm {
  Rational coeff;
  int hbar_power = 0;
  std::vector<std::pair<AffineForm, int>> factors;
  std::optional<AffineForm> log_arg;
};

/// Finite sum of ExpressionTerm: holds the closed-form free energies and the
/// particular solutions of the difference equations.
class FreeEnergyExpression {
 public:
  FreeEnergyExpression() = default;

  static FreeEnergyExpression constant(const Rational& c);
  /// c l^e
  static FreeEnergyExpression power(const Rational& c, const AffineForm& l, int e);
  /// c l^e log(m)
  static FreeEnergyExpression power_log(const Rational& c, const AffineForm& l, int e, const AffineForm& m);
  static FreeEnergyExpression log(const Rational& c, const AffineForm& m);

  const std::vector<ExpressionTerm>& terms() const { return terms_; }
  void add_term(ExpressionTerm t);
  FreeEnergyExpression& operator+=(const FreeEnergyExpression& o);
  FreeEnergyExpression& operator*=(const Rational& s);
  friend FreeEnergyExpression operator+(FreeEnergyExpression a, const FreeEnergyExpression& b) { return a += b; }
  friend FreeEnergyExpression operator-(FreeEnergyExpression a, FreeEnergyExpression b) {
    return a += (b *= Rational(-1));
  }
  friend FreeEnergyExpression operator*(FreeEnergyExpression a, const Rational& s) { return a *= s; }
  /// Multiply by h^k.
  FreeEnergyExpression hbar_shifted(int k) const;

  FreeEnergyExpression derivative(const std::string& p) const;
  /// Series of this(lambda + h d) through h^order. Throws PoleOfFormula on a
  /// vanishing factor with negative exponent or a vanishing log argument.
  HbarSeries expand(const ParameterPoint& at, const ParameterPoint& d, int order) const;
  /// Value at h = 0 of an h-free expression: rational part plus logs.
  HbarSeries::Coefficient evaluate(const ParameterPoint& at) const;
  std::string str() const;

 private:
  std::vector<ExpressionTerm> terms_;
};

/// X_p F = F(lambda + h d_p) - 2F + F(lambda - h d_p) through h^order.
HbarSeries second_difference(const FreeEnergyExpression& f, const ParameterPoint& at, const std::string& p, int order);

}  // namespace qcurve
