#include "qcurve/expression.hpp"

namespace qcurve {

namespace {

Rational lookup(const ParameterPoint& p, const std::string& k) {
  auto it = p.find(k);
  return it == p.end() ? Rational(0) : it->second;
}

// (a + b h)^e through h^order
HbarSeries power_series(const Rational& a, const Rational& b, int e, int order) {
  HbarSeries s(order);
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::PoleOfFormula, "negative power of a vanishing factor");
    s.add(e, FieldValue(pow(b, e)));
    return s;
  }
  Rational lead = pow(a, e);
  Rational ratio = b / a;
  Rational c = 1;  // generalized binomial C(e, n)
  Rational rn = 1;
  for (int n = 0; n <= order; ++n) {
    s.add(n, FieldValue(lead * c * rn));
    c = c * Rational(e - n) / Rational(n + 1);
    rn *= ratio;
    if (c == 0) break;
  }
  return s;
}

// log(a + b h) through h^order
HbarSeries log_series(const Rational& a, const Rational& b, int order) {
  if (a == 0) throw Error(ErrorKind::PoleOfFormula, "log of a vanishing argument");
  HbarSeries s = HbarSeries::log_monomial(FieldValue(a), 0, order);
  Rational ratio = b / a;
  Rational rn = ratio;
  for (int n = 1; n <= order; ++n) {
    Rational c = rn / Rational(n);
    if (n % 2 == 0) c = -c;
    s.add(n, FieldValue(c));
    rn *= ratio;
  }
  return s;
}

std::string form_power_str(const AffineForm& l, int e) {
  std::string s = "(" + l.str() + ")";
  return e == 1 ? s : s + "^" + std::to_string(e);
}

}  // namespace

AffineForm AffineForm::constant_form(const Rational& c) {
  AffineForm f;
  f.constant = c;
  return f;
}

AffineForm AffineForm::parameter(const std::string& p, const Rational& scale) {
  AffineForm f;
  f.coeff[p] = scale;
  return f;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  for (const auto& [k, v] : o.coeff) {
    coeff[k] += v;
    if (coeff[k] == 0) coeff.erase(k);
  }
  constant += o.constant;
  hbar_coeff += o.hbar_coeff;
  return *this;
}

AffineForm& AffineForm::operator*=(const Rational& s) {
  for (auto& [k, v] : coeff) v *= s;
  constant *= s;
  hbar_coeff *= s;
  if (s == 0) coeff.clear();
  return *this;
}

Rational AffineForm::at(const ParameterPoint& p) const {
  Rational v = constant;
  for (const auto& [k, c] : coeff) v += c * lookup(p, k);
  return v;
}

Rational AffineForm::slope(const ParameterPoint& d) const {
  Rational v = hbar_coeff;
  for (const auto& [k, c] : coeff) v += c * lookup(d, k);
  return v;
}

std::string AffineForm::str() const {
  std::string s;
  auto piece = [&s](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) s += "-";
    Rational a = abs(c);
    if (name.empty()) {
      s += a.get_str();
    } else {
      s += (a == 1 ? "" : a.get_str() + "*") + name;
    }
  };
  for (const auto& [k, c] : coeff) piece(c, k);
  piece(hbar_coeff, "h");
  piece(constant, "");
  return s.empty() ? "0" : s;
}

FreeEnergyExpression FreeEnergyExpression::constant(const Rational& c) {
  FreeEnergyExpression e;
  e.add_term(ExpressionTerm{c, 0, {}, std::nullopt});
  return e;
}

FreeEnergyExpression FreeEnergyExpression::power(const Rational& c, const AffineForm& l, int e) {
  FreeEnergyExpression x;
  x.add_term(ExpressionTerm{c, 0, {{l, e}}, std::nullopt});
  return x;
}

FreeEnergyExpression FreeEnergyExpression::power_log(const Rational& c, const AffineForm& l, int e,
                                                     const AffineForm& m) {
  FreeEnergyExpression x;
  x.add_term(ExpressionTerm{c, 0, {{l, e}}, m});
  return x;
}

FreeEnergyExpression FreeEnergyExpression::log(const Rational& c, const AffineForm& m) {
  FreeEnergyExpression x;
  x.add_term(ExpressionTerm{c, 0, {}, m});
  return x;
}

void FreeEnergyExpression::add_term(ExpressionTerm t) {
  if (t.coeff == 0) return;
  std::erase_if(t.factors, [](const auto& f) { return f.second == 0; });
  terms_.push_back(std::move(t));
}

FreeEnergyExpression& FreeEnergyExpression::operator+=(const FreeEnergyExpression& o) {
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

FreeEnergyExpression& FreeEnergyExpression::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

FreeEnergyExpression FreeEnergyExpression::hbar_shifted(int k) const {
  FreeEnergyExpression e = *this;
  for (auto& t : e.terms_) t.hbar_power += k;
  return e;
}

FreeEnergyExpression FreeEnergyExpression::derivative(const std::string& p) const {
  FreeEnergyExpression out;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const auto& [l, e] = t.factors[i];
      Rational a = lookup(l.coeff, p);
      if (a == 0) continue;
      ExpressionTerm d = t;
      d.coeff *= a * e;
      d.factors[i].second -= 1;
      out.add_term(std::move(d));
    }
    if (t.log_arg) {
      Rational b = lookup(t.log_arg->coeff, p);
      if (b != 0) {
        ExpressionTerm d = t;
        d.coeff *= b;
        d.factors.emplace_back(*t.log_arg, -1);
        d.log_arg.reset();
        out.add_term(std::move(d));
      }
    }
  }
  return out;
}

HbarSeries FreeEnergyExpression::expand(const ParameterPoint& at, const ParameterPoint& d, int order) const {
  HbarSeries total(order);
  for (const auto& t : terms_) {
    int n = order - t.hbar_power;
    if (n < 0) continue;
    HbarSeries s = HbarSeries::monomial(FieldValue(t.coeff), 0, n);
    for (const auto& [l, e] : t.factors) s = s * power_series(l.at(at), l.slope(d), e, n);
    if (t.log_arg) s = s * log_series(t.log_arg->at(at), t.log_arg->slope(d), n);
    total += s.truncated(n).shifted(t.hbar_power);
  }
  return total;
}

HbarSeries::Coefficient FreeEnergyExpression::evaluate(const ParameterPoint& at) const {
  return expand(at, {}, 0).coeff(0);
}

std::string FreeEnergyExpression::str() const {
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.coeff.get_str();
    if (t.hbar_power != 0) s += "*h^" + std::to_string(t.hbar_power);
    for (const auto& [l, e] : t.factors) s += "*" + form_power_str(l, e);
    if (t.log_arg) s += "*log(" + t.log_arg->str() + ")";
  }
  return s.empty() ? "0" : s;
}

HbarSeries second_difference(const FreeEnergyExpression& f, const ParameterPoint& at, const std::string& p,
                             int order) {
  ParameterPoint up{{p, Rational(1)}}, down{{p, Rational(-1)}};
  return f.expand(at, up, order) - f.expand(at, {}, order) * FieldValue(2) + f.expand(at, down, order);
}

}  // namespace qcurve
