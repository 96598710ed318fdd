#include "qcurve/log_combination.hpp"

#include <map>
#include <sstream>

namespace qcurve {

namespace {

// Canonical representative of {u, -u}.
FieldValue sign_normalize(const FieldValue& u) {
  if (sgn(u.a()) < 0 || (sgn(u.a()) == 0 && sgn(u.b()) < 0)) return -u;
  return u;
}

void refine_base(std::vector<Integer>& base, const Integer& n) {
  std::vector<Integer> stack{n};
  while (!stack.empty()) {
    Integer x = stack.back();
    stack.pop_back();
    if (x <= 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), base[i].get_mpz_t());
      if (g == 1) continue;
      Integer b = base[i];
      base.erase(base.begin() + static_cast<long>(i));
      stack.push_back(g);
      stack.push_back(b / g);
      stack.push_back(x / g);
      split = true;
      break;
    }
    if (!split) base.push_back(x);
  }
}

std::vector<long> exponents(const std::vector<Integer>& base, Integer n) {
  std::vector<long> e(base.size(), 0);
  n = abs(n);
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (mpz_divisible_p(n.get_mpz_t(), base[i].get_mpz_t())) {
      n /= base[i];
      ++e[i];
    }
  }
  if (n != 1) throw Error(ErrorKind::InvalidArgument, "coprime base does not cover argument");
  return e;
}

}  // namespace

LogCombination LogCombination::log_of(const FieldValue& arg, const FieldValue& coeff) {
  LogCombination l;
  l.add(coeff, arg);
  return l;
}

void LogCombination::add(const FieldValue& coeff, const FieldValue& arg) {
  if (coeff.is_zero()) return;
  if (arg.is_zero()) throw Error(ErrorKind::DivergentEndpoint, "log(0)");
  FieldValue u = sign_normalize(arg);
  if (u.is_one()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second == u) {
      it->first += coeff;
      if (it->first.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(coeff, u);
}

LogCombination& LogCombination::operator+=(const LogCombination& o) {
  for (const auto& [c, u] : o.terms_) add(c, u);
  return *this;
}

LogCombination& LogCombination::operator-=(const LogCombination& o) {
  for (const auto& [c, u] : o.terms_) add(-c, u);
  return *this;
}

LogCombination& LogCombination::operator*=(const FieldValue& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.first *= s;
  return *this;
}

bool LogCombination::is_zero() const {
  // Collapse conjugate pairs of irrational arguments onto their norms.
  std::vector<std::pair<FieldValue, Rational>> rational_terms;
  std::vector<bool> used(terms_.size(), false);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (used[i]) continue;
    const auto& [c, u] = terms_[i];
    if (u.is_rational()) {
      rational_terms.emplace_back(c, u.a());
      continue;
    }
    FieldValue conj = sign_normalize(u.conjugate());
    bool paired = false;
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      if (!used[j] && terms_[j].second == conj && terms_[j].first == c) {
        used[j] = true;
        paired = true;
        break;
      }
    }
    if (!paired) throw Error(ErrorKind::ResidualLogSymbol, "unpaired irrational log argument " + u.str());
    rational_terms.emplace_back(c, u.norm());
  }
  std::vector<Integer> base;
  for (const auto& [c, q] : rational_terms) {
    refine_base(base, abs(q.get_num()));
    refine_base(base, q.get_den());
  }
  std::vector<FieldValue> total(base.size());
  for (const auto& [c, q] : rational_terms) {
    auto en = exponents(base, q.get_num());
    auto ed = exponents(base, q.get_den());
    for (std::size_t k = 0; k < base.size(); ++k) {
      long e = en[k] - ed[k];
      if (e != 0) total[k] += c * FieldValue(e);
    }
  }
  for (const auto& t : total)
    if (!t.is_zero()) return false;
  return true;
}

std::string LogCombination::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].first << ")*log(" << terms_[i].second << ")";
  }
  return os.str();
}

}  // namespace qcurve
