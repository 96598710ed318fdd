#include "qcurve/hbar_series.hpp"

#include <algorithm>
#include <vector>

namespace qcurve {

std::string HbarSeries::Coefficient::str() const {
  if (logs.empty()) return value.str();
  return value.str() + " + " + logs.str();
}

HbarSeries HbarSeries::monomial(const FieldValue& c, int e, int order) {
  HbarSeries s(order);
  if (e <= order) s.add(e, c);
  return s;
}

HbarSeries HbarSeries::log_monomial(const FieldValue& arg, int e, int order) {
  HbarSeries s(order);
  if (e <= order) s.add_log(e, LogCombination::log_of(arg));
  return s;
}

HbarSeries::Coefficient HbarSeries::coeff(int e) const {
  if (e > order_) {
    throw Error(ErrorKind::TruncationInsufficient,
                "h^" + std::to_string(e) + " beyond order " + std::to_string(order_));
  }
  auto it = c_.find(e);
  return it == c_.end() ? Coefficient{} : it->second;
}

void HbarSeries::add(int e, const FieldValue& v) {
  if (e > order_ || v.is_zero()) return;
  c_[e].value += v;
}

void HbarSeries::add_log(int e, const LogCombination& l) {
  if (e > order_ || l.empty()) return;
  c_[e].logs += l;
}

HbarSeries HbarSeries::truncated(int order) const {
  HbarSeries s(std::min(order, order_));
  for (const auto& [e, c] : c_) {
    if (e <= s.order_) s.c_[e] = c;
  }
  return s;
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& o) {
  order_ = std::min(order_, o.order_);
  for (auto it = c_.begin(); it != c_.end();) {
    it = it->first > order_ ? c_.erase(it) : std::next(it);
  }
  for (const auto& [e, c] : o.c_) {
    if (e > order_) continue;
    Coefficient& d = c_[e];
    d.value += c.value;
    d.logs += c.logs;
  }
  return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& o) { return *this += -o; }

HbarSeries& HbarSeries::operator*=(const FieldValue& s) {
  for (auto& [e, c] : c_) {
    c.value *= s;
    c.logs *= s;
  }
  return *this;
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries s = *this;
  return s *= FieldValue(-1);
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  int order = std::min(a.order_ + b.min_exponent(), b.order_ + a.min_exponent());
  HbarSeries out(order);
  for (const auto& [ea, ca] : a.c_) {
    for (const auto& [eb, cb] : b.c_) {
      int e = ea + eb;
      if (e > order) continue;
      if (!ca.logs.empty() && !cb.logs.empty()) {
        throw Error(ErrorKind::NotRepresentable, "product of two log parts");
      }
      out.add(e, ca.value * cb.value);
      if (!cb.logs.empty()) out.add_log(e, cb.logs * ca.value);
      if (!ca.logs.empty()) out.add_log(e, ca.logs * cb.value);
    }
  }
  return out;
}

HbarSeries HbarSeries::shifted(int k) const {
  HbarSeries s(order_ + k);
  for (const auto& [e, c] : c_) s.c_[e + k] = c;
  return s;
}

HbarSeries HbarSeries::inverse() const {
  int v = first_nonzero();
  if (v > order_) throw Error(ErrorKind::DivisionByZero, "inverse of a zero series");
  for (const auto& [e, c] : c_) {
    if (!c.logs.empty()) throw Error(ErrorKind::NotRepresentable, "inverse of a series with logs");
  }
  int rel = order_ - v;  // relative precision
  FieldValue lead_inv = value(v).inverse();
  HbarSeries out(rel - v);
  std::vector<FieldValue> inv(rel + 1);
  for (int k = 0; k <= rel; ++k) {
    FieldValue s = k == 0 ? FieldValue(1) : FieldValue();
    for (int i = 1; i <= k; ++i) s -= value(v + i) * inv[k - i];
    inv[k] = s * lead_inv;
    out.add(k - v, inv[k]);
  }
  return out;
}

HbarSeries HbarSeries::exp() const {
  for (const auto& [e, c] : c_) {
    if (e < 1 && !c.is_zero()) throw Error(ErrorKind::InvalidArgument, "exp needs a series with positive valuation");
    if (!c.logs.empty()) throw Error(ErrorKind::NotRepresentable, "exp of a log part");
  }
  HbarSeries out = monomial(FieldValue(1), 0, order_);
  HbarSeries term = out;
  for (int k = 1; k <= order_; ++k) {
    term = (term * *this) * FieldValue(Rational(1, k));
    out += term;
  }
  return out.truncated(order_);
}

HbarSeries HbarSeries::log() const {
  if (first_nonzero() != 0) throw Error(ErrorKind::InvalidArgument, "log needs a nonzero constant term");
  for (const auto& [e, c] : c_) {
    if (!c.logs.empty()) throw Error(ErrorKind::NotRepresentable, "log of a log part");
  }
  FieldValue c0 = value(0);
  HbarSeries u = *this * c0.inverse();
  u -= monomial(FieldValue(1), 0, order_);
  HbarSeries out = log_monomial(c0, 0, order_);
  HbarSeries power = monomial(FieldValue(1), 0, order_);
  for (int k = 1; k <= order_; ++k) {
    power = power * u;
    out += power * FieldValue(Rational(k % 2 ? 1 : -1, k));
  }
  return out.truncated(order_);
}

int HbarSeries::first_nonzero() const {
  for (const auto& [e, c] : c_) {
    if (e <= order_ && !c.is_zero()) return e;
  }
  return order_ + 1;
}

bool HbarSeries::is_zero() const { return first_nonzero() > order_; }

std::string HbarSeries::str() const {
  std::string s;
  for (const auto& [e, c] : c_) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*h^" + std::to_string(e);
  }
  return (s.empty() ? "0" : s) + " + O(h^" + std::to_string(order_ + 1) + ")";
}

}  // namespace qcurve
