#include "qcurve/field.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <regex>

namespace qcurve {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedRadicands: return "MixedRadicands";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::DivergentEndpoint: return "DivergentEndpoint";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorKind::NonSimpleRamification: return "NonSimpleRamification";
    case ErrorKind::ConjugationNotFound: return "ConjugationNotFound";
    case ErrorKind::UnsupportedRootField: return "UnsupportedRootField";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::NotSigmaInvariant: return "NotSigmaInvariant";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::ResidualLogSymbol: return "ResidualLogSymbol";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::PoleOfFormula: return "PoleOfFormula";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  static const std::regex frac(R"(^-?[0-9]+(/[0-9]+)?$)");
  static const std::regex dec(R"(^(-?)([0-9]*)\.([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(s, frac)) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, raw);
    if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, raw);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, dec)) {
    std::string digits = m[2].str() + m[3].str();
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].str().size());
    Rational q(num, den);
    q.canonicalize();
    return m[1].str().empty() ? q : Rational(-q);
  }
  throw Error(ErrorKind::ParseError, "not a rational: " + raw);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool rational_sqrt(const Rational& v, Rational& root) {
  if (sgn(v) < 0) return false;
  if (!mpz_perfect_square_p(mpq_numref(v.get_mpq_t())) || !mpz_perfect_square_p(mpq_denref(v.get_mpq_t())))
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), mpq_numref(v.get_mpq_t()));
  mpz_sqrt(d.get_mpz_t(), mpq_denref(v.get_mpq_t()));
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (sgn(q) == 0) throw Error(ErrorKind::DivisionByZero, "0 to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), mpq_numref(q.get_mpq_t()), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), mpq_denref(q.get_mpq_t()), static_cast<unsigned long>(e));
  return r;
}

namespace {

// Writes n = s^2 * m with m square-free (up to trial-division limits).
void squarefree_split(const Integer& n, Integer& s, Integer& m) {
  Integer rest = abs(n);
  s = 1;
  m = sgn(n) < 0 ? -1 : 1;
  for (unsigned long p = 2; p < 200000; p = (p == 2 ? 3 : p + 2)) {
    Integer pp = p;
    if (pp * pp > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
    } else {
      m *= rest;
    }
  }
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const Radicand* intern_radicand(const Integer& sqf) {
  static std::deque<Radicand> store;
  static std::map<Integer, const Radicand*> index;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = index.find(sqf);
  if (it != index.end()) return it->second;
  store.push_back(Radicand{sqf, sqf.get_str()});
  index.emplace(sqf, &store.back());
  return &store.back();
}

FieldValue FieldValue::make(const Rational& a, const Rational& b, const Rational& radicand) {
  FieldValue v(a);
  if (sgn(b) == 0) return v;
  if (sgn(radicand) == 0) return v;
  // sqrt(p/q) = sqrt(p q)/q
  Integer pq = radicand.get_num() * radicand.get_den();
  Integer s, m;
  squarefree_split(pq, s, m);
  Rational scale(s, radicand.get_den());
  scale.canonicalize();
  if (m == 1) {
    v.a_ += b * scale;
    return v;
  }
  v.b_ = b * scale;
  v.rad_ = intern_radicand(m);
  return v;
}

void FieldValue::normalize() {
  if (rad_ != nullptr && sgn(b_) == 0) rad_ = nullptr;
  if (rad_ == nullptr) b_ = 0;
}

const Radicand* FieldValue::common(const FieldValue& x, const FieldValue& y) {
  if (x.rad_ == nullptr) return y.rad_;
  if (y.rad_ == nullptr || y.rad_ == x.rad_) return x.rad_;
  throw Error(ErrorKind::MixedRadicands, "sqrt(" + x.rad_->text + ") vs sqrt(" + y.rad_->text + ")");
}

FieldValue FieldValue::conjugate() const {
  FieldValue r(*this);
  r.b_ = -r.b_;
  return r;
}

Rational FieldValue::norm() const {
  if (rad_ == nullptr) return a_ * a_;
  return a_ * a_ - Rational(rad_->m) * b_ * b_;
}

FieldValue FieldValue::inverse() const {
  if (rad_ == nullptr) {
    if (sgn(a_) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return FieldValue(Rational(1 / a_));
  }
  Rational n = norm();
  FieldValue r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.rad_ = rad_;
  return r;
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  if (o.rad_ == nullptr) {
    a_ += o.a_;
    return *this;
  }
  rad_ = common(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  if (o.rad_ == nullptr) {
    a_ -= o.a_;
    return *this;
  }
  rad_ = common(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  if (o.rad_ == nullptr) {
    if (rad_ == nullptr) {
      a_ *= o.a_;
      return *this;
    }
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  if (rad_ == nullptr) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    rad_ = o.rad_;
    normalize();
    return *this;
  }
  const Radicand* r = common(*this, o);
  Rational na = a_ * o.a_ + Rational(r->m) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  normalize();
  return *this;
}

FieldValue FieldValue::operator-() const {
  FieldValue r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool canonical_less(const FieldValue& x, const FieldValue& y) {
  if (x.rad_ != y.rad_) {
    if (x.rad_ == nullptr) return true;
    if (y.rad_ == nullptr) return false;
    return x.rad_->m < y.rad_->m;
  }
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

double FieldValue::to_double() const {
  double v = a_.get_d();
  if (rad_ != nullptr) {
    double m = rad_->m.get_d();
    v += b_.get_d() * (m >= 0 ? std::sqrt(m) : 0.0);
  }
  return v;
}

std::string FieldValue::str() const {
  if (rad_ == nullptr) return to_string(a_);
  std::string irr = to_string(b_) + "*sqrt(" + rad_->text + ")";
  if (sgn(a_) == 0) return irr;
  return to_string(a_) + " + " + irr;
}

std::size_t FieldValue::hash() const {
  std::size_t h = mpz_get_ui(mpq_numref(a_.get_mpq_t())) * 1000003u ^ mpz_get_ui(mpq_denref(a_.get_mpq_t()));
  if (rad_ != nullptr) {
    h ^= (mpz_get_ui(mpq_numref(b_.get_mpq_t())) + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>()(rad_);
  }
  return h;
}

FieldValue pow(const FieldValue& v, long e) {
  if (e < 0) return pow(v.inverse(), -e);
  FieldValue result(1), base(v);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool field_sqrt(const FieldValue& v, const Radicand* hint, FieldValue& root) {
  if (v.is_zero()) {
    root = FieldValue(0);
    return true;
  }
  if (v.is_rational()) {
    Rational r;
    if (rational_sqrt(v.a(), r)) {
      root = FieldValue(r);
      return true;
    }
    const Radicand* target = hint;
    if (target == nullptr) return false;
    // v = s^2 m  =>  sqrt(v) = s sqrt(m)
    Rational t = v.a() / Rational(target->m);
    if (!rational_sqrt(t, r)) return false;
    root = FieldValue::make(0, r, Rational(target->m));
    return true;
  }
  // (p + q sqrt m)^2 = v: p^2 + m q^2 = a, 2pq = b.
  const Rational m(v.field()->m);
  Rational disc;
  if (!rational_sqrt(v.norm(), disc)) return false;
  for (int sgn_choice : {1, -1}) {
    Rational p2 = (v.a() + sgn_choice * disc) / 2;
    Rational p;
    if (sgn(p2) == 0 || !rational_sqrt(p2, p)) continue;
    Rational q = v.b() / (2 * p);
    FieldValue cand = FieldValue::make(p, q, m);
    if (cand * cand == v) {
      root = cand;
      return true;
    }
  }
  return false;
}

FieldValue sqrt_in_field(const Rational& v, const Rational& radicand) {
  Rational r;
  if (rational_sqrt(v, r)) return FieldValue(r);
  FieldValue probe = FieldValue::make(0, 1, radicand);
  FieldValue root;
  if (!probe.is_rational() && field_sqrt(FieldValue(v), probe.field(), root)) {
    if (sgn(root.b()) < 0) root = -root;
    return root;
  }
  throw Error(ErrorKind::NotRepresentable,
              "sqrt(" + to_string(v) + ") not in Q(sqrt(" + to_string(radicand) + "))");
}

FieldValue parse_field_value(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s.push_back(c);
  static const std::regex irr(R"(^(?:([-+]?[0-9./]+)([+-]))?([-+]?[0-9./]*)\*?sqrt\(([-+]?[0-9./]+)\)$)");
  std::smatch m;
  if (std::regex_match(s, m, irr)) {
    Rational a = m[1].matched ? parse_rational(m[1].str()) : Rational(0);
    std::string bs = m[3].str();
    bool neg = false;
    if (!bs.empty() && (bs[0] == '-' || bs[0] == '+')) {
      neg = bs[0] == '-';
      bs.erase(0, 1);
    }
    Rational b = bs.empty() ? Rational(1) : parse_rational(bs);
    if (neg) b = -b;
    if (m[2].matched && m[2].str() == "-") b = -b;
    return FieldValue::make(a, b, parse_rational(m[4].str()));
  }
  return FieldValue(parse_rational(s));
}

std::ostream& operator<<(std::ostream& os, const FieldValue& v) { return os << v.str(); }

}  // namespace qcurve
