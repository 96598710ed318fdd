#include "qcurve/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qcurve {

Polynomial::Polynomial(const FieldValue& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<FieldValue> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const FieldValue& c, int degree) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.c_.assign(degree + 1, FieldValue());
  p.c_[degree] = c;
  return p;
}

Polynomial Polynomial::linear_root(const FieldValue& p) { return Polynomial({-p, FieldValue(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 1 << 29;
}

FieldValue Polynomial::evaluate(const FieldValue& x) const {
  FieldValue acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * FieldValue(static_cast<long>(i));
  d.trim();
  return d;
}

Polynomial Polynomial::taylor_shift(const FieldValue& a) const {
  if (a.is_zero() || c_.size() <= 1) return *this;
  // Horner with (z + a)
  std::vector<FieldValue> r(c_.begin(), c_.end());
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j) r[j] += a * r[j + 1];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::reversed(int deg) const {
  std::vector<FieldValue> r(deg + 1);
  for (int i = 0; i <= degree(); ++i) r[deg - i] = c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scaled(c_.back().inverse());
}

Polynomial Polynomial::scaled(const FieldValue& s) const {
  if (s.is_zero()) return Polynomial();
  Polynomial p(*this);
  for (auto& c : p.c_) c *= s;
  return p;
}

Polynomial Polynomial::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k >= static_cast<int>(c_.size())) return Polynomial();
  return Polynomial(std::vector<FieldValue>(c_.begin() + k, c_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldValue());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const int db = b.degree();
  std::vector<FieldValue> rem(a.c_);
  const int da = a.degree();
  if (da < db) {
    q = Polynomial();
    r = a;
    return;
  }
  std::vector<FieldValue> quo(da - db + 1);
  const FieldValue lead_inv = b.leading().inverse();
  const bool monic_b = b.leading().is_one();
  for (int k = da - db; k >= 0; --k) {
    FieldValue t = rem[k + db];
    if (t.is_zero()) continue;
    if (!monic_b) t *= lead_inv;
    quo[k] = t;
    for (int j = 0; j <= db; ++j) {
      if (b.c_[j].is_zero()) continue;
      rem[k + j] -= t * b.c_[j];
    }
  }
  q = Polynomial(std::move(quo));
  rem.resize(db);
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  Polynomial q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a0, const Polynomial& b0) {
  Polynomial a = a0.monic(), b = b0.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial(1);
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

const Radicand* Polynomial::field() const {
  const Radicand* f = nullptr;
  for (const auto& c : c_) {
    if (c.field() == nullptr) continue;
    if (f != nullptr && f != c.field()) throw Error(ErrorKind::MixedRadicands, "polynomial");
    f = c.field();
  }
  return f;
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    bool par = !c_[i].is_rational();
    FieldValue c = c_[i];
    bool neg = !par && sgn(c.rational()) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << (par ? "(" : "") << c << (par ? ")" : "");
    } else {
      if (!c.is_one()) os << (par ? "(" : "") << c << (par ? ")" : "") << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r(1), b(p);
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

std::vector<Integer> small_divisors(const Integer& n0, bool& ok) {
  Integer n = abs(n0);
  ok = true;
  std::vector<std::pair<Integer, int>> fac;
  for (unsigned long p = 2; Integer(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (p > 1000000) {
      ok = false;
      return {};
    }
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) fac.emplace_back(Integer(p), e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t sz = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 20000) {
      ok = false;
      return {};
    }
  }
  return divs;
}

// Removes all factors (z - r) from p, returning the multiplicity.
int strip_root(Polynomial& p, const FieldValue& r) {
  int mult = 0;
  Polynomial lin = Polynomial::linear_root(r);
  while (!p.is_zero() && p.degree() >= 1 && p.evaluate(r).is_zero()) {
    p = Polynomial::exact_div(p, lin);
    ++mult;
  }
  return mult;
}

}  // namespace

std::vector<std::pair<FieldValue, int>> find_roots(const Polynomial& p0, const std::vector<FieldValue>& candidates,
                                                   const Radicand* hint) {
  if (p0.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::pair<FieldValue, int>> out;
  Polynomial p = p0.monic();
  auto take = [&](const FieldValue& r) {
    for (auto& [v, m] : out)
      if (v == r) return;
    int m = strip_root(p, r);
    if (m > 0) out.emplace_back(r, m);
  };
  take(FieldValue(0));
  for (const auto& c : candidates) {
    if (p.degree() < 1) break;
    take(c);
  }
  if (p.degree() > 2 && p.field() == nullptr) {
    // Rational root test on the integer-scaled polynomial.
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(c.a().get_mpq_t()));
    Integer a0 = Rational(p.coeff(0).a() * lcm).get_num();
    Integer an = Rational(p.leading().a() * lcm).get_num();
    bool ok0 = false, okn = false;
    auto d0 = small_divisors(a0, ok0);
    auto dn = small_divisors(an, okn);
    if (ok0 && okn) {
      for (const auto& u : d0) {
        for (const auto& v : dn) {
          for (int s : {1, -1}) {
            if (p.degree() < 1) break;
            Rational q(u * s, v);
            q.canonicalize();
            take(FieldValue(q));
          }
        }
      }
    }
  }
  if (p.degree() == 1) {
    take(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    // z^2 + b z + c with p monic
    FieldValue b = p.coeff(1), c = p.coeff(0);
    FieldValue disc = b * b - FieldValue(4) * c;
    const Radicand* h = hint != nullptr ? hint : p.field();
    FieldValue s;
    if (!field_sqrt(disc, h, s))
      throw Error(ErrorKind::UnsupportedRootField, "quadratic factor " + p.str() + " does not split");
    FieldValue r1 = (-b + s) / FieldValue(2), r2 = (-b - s) / FieldValue(2);
    take(r1);
    take(r2);
  }
  if (p.degree() >= 1)
    throw Error(ErrorKind::UnsupportedRootField, "unsplit factor of degree " + std::to_string(p.degree()));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return out;
}

}  // namespace qcurve
