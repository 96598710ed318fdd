#include "qcurve/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qcurve {

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(den.leading().inverse());
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  Polynomial n = g.is_constant() ? num : Polynomial::exact_div(num, g);
  Polynomial d = g.is_constant() ? den : Polynomial::exact_div(den, g);
  FieldValue lc = d.leading();
  if (!lc.is_one()) {
    FieldValue inv = lc.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFunction RationalFunction::pole(const FieldValue& p, int k) {
  return RationalFunction(Raw{}, Polynomial(1), pow(Polynomial::linear_root(p), k));
}

FieldValue RationalFunction::evaluate(const FieldValue& x) const {
  FieldValue d = den_.evaluate(x);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "evaluation at a pole " + x.str());
  return num_.evaluate(x) / d;
}

FieldValue RationalFunction::evaluate(const Point& p) const {
  if (!p.infinite) {
    FieldValue d = den_.evaluate(p.value);
    if (d.is_zero()) throw Error(ErrorKind::DivergentEndpoint, "pole at " + p.str());
    return num_.evaluate(p.value) / d;
  }
  if (num_.is_zero() || num_.degree() < den_.degree()) return FieldValue(0);
  if (num_.degree() == den_.degree()) return num_.leading() / den_.leading();
  throw Error(ErrorKind::DivergentEndpoint, "pole at inf");
}

int RationalFunction::valuation(const Point& p) const {
  if (num_.is_zero()) return kExactPrecision;
  if (p.infinite) return den_.degree() - num_.degree();
  return num_.taylor_shift(p.value).valuation() - den_.taylor_shift(p.value).valuation();
}

RationalFunction RationalFunction::derivative() const {
  if (den_.is_constant()) return RationalFunction(Raw{}, num_.derivative(), den_);
  // (n' d - n d') / d^2, reduced by the repeated part of d
  Polynomial dd = den_.derivative();
  Polynomial g = Polynomial::gcd(den_, dd);
  Polynomial dq = Polynomial::exact_div(den_, g);  // d / g
  Polynomial ddq = Polynomial::exact_div(dd, g);   // d' / g
  Polynomial n = num_.derivative() * dq - num_ * ddq;
  return RationalFunction(n, den_ * dq);
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  if (is_constant()) return *this;
  const int N = std::max(num_.degree(), den_.degree());
  std::vector<Polynomial> gn_pow{Polynomial(1)}, gd_pow{Polynomial(1)};
  for (int k = 1; k <= N; ++k) {
    gn_pow.push_back(gn_pow.back() * g.num());
    gd_pow.push_back(gd_pow.back() * g.den());
  }
  auto homog = [&](const Polynomial& p) {
    Polynomial acc;
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k).is_zero()) continue;
      acc += (gn_pow[k] * gd_pow[N - k]).scaled(p.coeff(k));
    }
    return acc;
  };
  return RationalFunction(homog(num_), homog(den_));
}

RationalFunction RationalFunction::scaled(const FieldValue& s) const {
  if (s.is_zero()) return RationalFunction();
  return RationalFunction(Raw{}, num_.scaled(s), den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RationalFunction(RationalFunction::Raw{}, a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  Polynomial g = Polynomial::gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RationalFunction(RationalFunction::Raw{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  Polynomial ad = Polynomial::exact_div(a.den_, g), bd = Polynomial::exact_div(b.den_, g);
  Polynomial n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RationalFunction();
  Polynomial h = Polynomial::gcd(n, g);
  if (!h.is_constant()) {
    n = Polynomial::exact_div(n, h);
    g = Polynomial::exact_div(g, h);
  }
  return RationalFunction(RationalFunction::Raw{}, std::move(n), ad * bd * g);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.is_constant() && b.den_.is_constant())
    return RationalFunction(RationalFunction::Raw{}, a.num_ * b.num_, Polynomial(1));
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_), g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial an = g1.is_constant() ? a.num_ : Polynomial::exact_div(a.num_, g1);
  Polynomial bd = g1.is_constant() ? b.den_ : Polynomial::exact_div(b.den_, g1);
  Polynomial bn = g2.is_constant() ? b.num_ : Polynomial::exact_div(b.num_, g2);
  Polynomial ad = g2.is_constant() ? a.den_ : Polynomial::exact_div(a.den_, g2);
  return RationalFunction(RationalFunction::Raw{}, an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  FieldValue lc = b.num_.leading().inverse();
  RationalFunction inv(RationalFunction::Raw{}, b.den_.scaled(lc), b.num_.scaled(lc));
  return a * inv;
}

const Radicand* RationalFunction::field() const {
  const Radicand* a = num_.field();
  const Radicand* b = den_.field();
  if (a && b && a != b) throw Error(ErrorKind::MixedRadicands, "rational function");
  return a ? a : b;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_constant()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction pow(const RationalFunction& f, int e) {
  if (e < 0) return pow(RationalFunction(1) / f, -e);
  RationalFunction r(1), b(f);
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// ---------------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(int lo, std::vector<FieldValue> coeffs, int prec)
    : lo_(lo), c_(std::move(coeffs)), prec_(prec) {
  if (lo_ + static_cast<int>(c_.size()) > prec_) c_.resize(std::max(0, prec_ - lo_));
  normalize();
}

LaurentSeries LaurentSeries::monomial(const FieldValue& c, int e) {
  if (c.is_zero()) return LaurentSeries();
  return LaurentSeries(e, {c}, kExactPrecision);
}

void LaurentSeries::normalize() {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) {
    c_.clear();
    lo_ = prec_;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldValue LaurentSeries::coeff(int e) const {
  if (e >= prec_)
    throw Error(ErrorKind::TruncationInsufficient,
                "coefficient " + std::to_string(e) + " beyond precision " + std::to_string(prec_));
  if (e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return FieldValue();
  return c_[e - lo_];
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  if (prec >= prec_) return *this;
  LaurentSeries r(*this);
  r.prec_ = prec;
  if (r.lo_ >= prec) {
    r.c_.clear();
    r.lo_ = prec;
  } else if (r.lo_ + static_cast<int>(r.c_.size()) > prec) {
    r.c_.resize(prec - r.lo_);
  }
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const int prec = std::min(prec_, o.prec_);
  if (o.c_.empty()) {
    *this = truncated(prec);
    return *this;
  }
  if (c_.empty()) {
    Point keep = center;
    *this = o.truncated(prec);
    center = keep;
    return *this;
  }
  const int lo = std::min(lo_, o.lo_);
  int hi = std::max(lo_ + static_cast<int>(c_.size()), o.lo_ + static_cast<int>(o.c_.size()));
  hi = std::min(hi, prec);
  std::vector<FieldValue> out(std::max(0, hi - lo));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int e = lo_ + static_cast<int>(i);
    if (e < hi) out[e - lo] = c_[i];
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    int e = o.lo_ + static_cast<int>(i);
    if (e < hi) out[e - lo] += o.c_[i];
  }
  lo_ = lo;
  c_ = std::move(out);
  prec_ = prec;
  if (lo_ > prec_) lo_ = prec_;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += (-o); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Known through min(prec_a + val_b, prec_b + val_a).
  long pa = a.prec_ >= kExactPrecision ? kExactPrecision * 2L : static_cast<long>(a.prec_) + b.lo_;
  long pb = b.prec_ >= kExactPrecision ? kExactPrecision * 2L : static_cast<long>(b.prec_) + a.lo_;
  long prec_l = std::min(pa, pb);
  int prec = static_cast<int>(std::min<long>(prec_l, kExactPrecision));
  if (a.c_.empty() || b.c_.empty()) {
    LaurentSeries z = LaurentSeries::zero(prec);
    z.center = a.center;
    return z;
  }
  const int lo = a.lo_ + b.lo_;
  int len = static_cast<int>(a.c_.size() + b.c_.size() - 1);
  if (prec < kExactPrecision) len = std::min(len, prec - lo);
  std::vector<FieldValue> out(std::max(0, len));
  for (std::size_t i = 0; i < a.c_.size() && static_cast<int>(i) < len; ++i) {
    if (a.c_[i].is_zero()) continue;
    const std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(len - static_cast<int>(i)));
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  LaurentSeries r(lo, std::move(out), prec);
  r.center = a.center;
  return r;
}

LaurentSeries LaurentSeries::scaled(const FieldValue& s) const {
  if (s.is_zero()) return LaurentSeries::zero(prec_);
  LaurentSeries r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty()) throw Error(ErrorKind::TruncationInsufficient, "inverse of a series with no known term");
  // relative precision is preserved
  const int rel = prec_ >= kExactPrecision ? 64 : prec_ - lo_;
  std::vector<FieldValue> q(rel);
  const FieldValue inv0 = c_[0].inverse();
  for (int k = 0; k < rel; ++k) {
    FieldValue acc = (k == 0) ? FieldValue(1) : FieldValue(0);
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) {
      if (c_[j].is_zero()) continue;
      acc -= c_[j] * q[k - j];
    }
    q[k] = acc * inv0;
  }
  LaurentSeries r(-lo_, std::move(q), -lo_ + rel);
  r.center = center;
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<FieldValue> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * FieldValue(static_cast<long>(lo_ + static_cast<int>(i)));
  LaurentSeries r(lo_ - 1, std::move(out), prec_ >= kExactPrecision ? prec_ : prec_ - 1);
  r.center = center;
  return r;
}

LaurentSeries LaurentSeries::primitive() const {
  std::vector<FieldValue> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int e = lo_ + static_cast<int>(i);
    if (e == -1) {
      if (!c_[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "primitive of a series with a residue");
      continue;
    }
    out[i] = c_[i] / FieldValue(static_cast<long>(e + 1));
  }
  if (prec_ <= -1) throw Error(ErrorKind::TruncationInsufficient, "residue of series unknown");
  LaurentSeries r(lo_ + 1, std::move(out), prec_ >= kExactPrecision ? prec_ : prec_ + 1);
  r.center = center;
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r(*this);
  if (!r.c_.empty() || r.lo_ < kExactPrecision) r.lo_ += k;
  if (r.prec_ < kExactPrecision) r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner) const {
  if (inner.valuation() < 1) throw Error(ErrorKind::InvalidArgument, "compose needs inner valuation >= 1");
  if (c_.empty()) return LaurentSeries::zero(prec_ >= kExactPrecision ? prec_ : prec_ * inner.valuation());
  // result precision: inner has relative precision P; s^e known to e*v + P.
  LaurentSeries acc = LaurentSeries::zero(kExactPrecision);
  LaurentSeries ipow;
  const int e0 = lo_;
  ipow = (e0 >= 0) ? LaurentSeries::monomial(1, 0) : inner.inverse();
  LaurentSeries base = ipow;
  if (e0 >= 0) {
    for (int k = 0; k < e0; ++k) ipow = ipow * inner;
  } else {
    for (int k = 1; k < -e0; ++k) ipow = ipow * base;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) acc += ipow.scaled(c_[i]);
    if (i + 1 < c_.size()) ipow = ipow * inner;
  }
  if (prec_ < kExactPrecision) {
    const long cap = static_cast<long>(prec_) * inner.valuation();
    if (cap < acc.precision()) acc = acc.truncated(static_cast<int>(cap));
  }
  acc.center = center;
  return acc;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    os << "(" << c_[i] << ")t^" << (lo_ + static_cast<int>(i)) << " + ";
  }
  os << "O(t^" << prec_ << ")";
  return os.str();
}

// ---------------------------------------------------------------- expansions

namespace {

LaurentSeries divide_series(const Polynomial& n, const Polynomial& d, int val, int prec) {
  const int len = std::max(0, prec - val);
  std::vector<FieldValue> q(len);
  const FieldValue inv0 = d.coeff(0).inverse();
  const int dd = d.degree();
  for (int k = 0; k < len; ++k) {
    FieldValue acc = n.coeff(k);
    for (int j = 1; j <= std::min(k, dd); ++j) {
      const FieldValue& dj = d.coeffs()[j];
      if (dj.is_zero() || q[k - j].is_zero()) continue;
      acc -= dj * q[k - j];
    }
    q[k] = acc * inv0;
  }
  return LaurentSeries(val, std::move(q), prec);
}

}  // namespace

LaurentSeries expand_function(const RationalFunction& f, const Point& p, int prec) {
  LaurentSeries s;
  if (f.is_zero()) {
    s = LaurentSeries::zero(kExactPrecision);
  } else if (!p.infinite) {
    Polynomial n = f.num().taylor_shift(p.value), d = f.den().taylor_shift(p.value);
    const int vn = n.valuation(), vd = d.valuation();
    if (d.is_constant()) {
      // exact polynomial in t
      s = LaurentSeries(0, n.coeffs(), kExactPrecision).truncated(prec).scaled(d.coeff(0).inverse());
      if (prec < kExactPrecision) s = s.truncated(prec);
    } else {
      s = divide_series(n.shifted_down(vn), d.shifted_down(vd), vn - vd, prec);
    }
  } else {
    const int dn = f.num().degree(), dd = f.den().degree();
    Polynomial rn = f.num().reversed(dn), rd = f.den().reversed(dd);
    s = divide_series(rn, rd, dd - dn, prec);
  }
  s.center = p;
  return s;
}

LaurentSeries expand_differential(const RationalFunction& f, const Point& p, int prec) {
  if (!p.infinite) return expand_function(f, p, prec);
  // f(z) dz = -f(1/w) w^-2 dw
  LaurentSeries s = expand_function(f, p, prec + 2);
  s = (-s).shifted(-2);
  s.center = p;
  return s;
}

LaurentSeries laurent_expand(const RationalFunction& f, const Point& at, int order) {
  return expand_function(f, at, order + 1);
}

FieldValue residue(const RationalFunction& f, const Point& p) {
  if (f.is_zero()) return FieldValue();
  return expand_differential(f, p, 0).coeff(-1);
}

std::vector<std::pair<FieldValue, int>> poles_of(const RationalFunction& f, const std::vector<FieldValue>& candidates,
                                                 const Radicand* hint) {
  if (f.den().is_constant()) return {};
  return find_roots(f.den(), candidates, hint);
}

PartialFractions partial_fractions(const RationalFunction& f, const std::vector<FieldValue>& candidates,
                                   const Radicand* hint) {
  PartialFractions pf;
  Polynomial q, r;
  Polynomial::divmod(f.num(), f.den(), q, r);
  pf.polynomial = q;
  for (const auto& [p, k] : poles_of(f, candidates, hint)) {
    LaurentSeries s = expand_function(f, Point::at(p), 0);
    for (int e = -k; e <= -1; ++e) {
      FieldValue c = s.coeff(e);
      if (!c.is_zero()) pf.terms[{Point::at(p), -e}] = c;
    }
  }
  return pf;
}

std::string LogRational::str() const {
  std::ostringstream os;
  os << rational.str();
  for (const auto& [c, p] : logs) os << " + (" << c << ")*log(z - (" << p << "))";
  return os.str();
}

LogRational antiderivative(const RationalFunction& f, const std::vector<FieldValue>& candidates,
                           const Radicand* hint) {
  LogRational F;
  PartialFractions pf = partial_fractions(f, candidates, hint);
  std::vector<FieldValue> ic(pf.polynomial.degree() + 2);
  for (int k = 0; k <= pf.polynomial.degree(); ++k) ic[k + 1] = pf.polynomial.coeff(k) / FieldValue(k + 1);
  RationalFunction acc{Polynomial(ic)};
  // group by pole so each pole contributes one fraction with denominator (z-p)^(k-1)
  std::map<Point, std::vector<std::pair<int, FieldValue>>> by_pole;
  for (const auto& [key, c] : pf.terms) by_pole[key.first].emplace_back(key.second, c);
  for (const auto& [pt, list] : by_pole) {
    int kmax = 1;
    for (const auto& [k, c] : list) kmax = std::max(kmax, k);
    // sum_k -c/((k-1)(z-p)^(k-1)) = N(z)/(z-p)^(kmax-1)
    Polynomial lin = Polynomial::linear_root(pt.value);
    Polynomial num;
    for (const auto& [k, c] : list) {
      if (k == 1) {
        F.logs.emplace_back(c, pt.value);
        continue;
      }
      num += pow(lin, kmax - k).scaled(-c / FieldValue(k - 1));
    }
    if (kmax > 1 && !num.is_zero()) acc += RationalFunction(num, pow(lin, kmax - 1));
  }
  F.rational = acc;
  return F;
}

RationalFunction derivative(const LogRational& F) {
  RationalFunction d = F.rational.derivative();
  for (const auto& [c, p] : F.logs) d += RationalFunction::pole(p, 1).scaled(c);
  return d;
}

EndpointValue evaluate_difference(const LogRational& F, const Point& upper, const Point& lower) {
  EndpointValue out;
  out.value = F.rational.evaluate(upper) - F.rational.evaluate(lower);
  FieldValue total;
  for (const auto& [c, p] : F.logs) total += c;
  auto add_logs = [&](const Point& e, int sign) {
    if (e.infinite) {
      if (!total.is_zero()) throw Error(ErrorKind::DivergentEndpoint, "logarithmic growth at inf");
      return;  // sum c log(1 - p/z) -> 0
    }
    for (const auto& [c, p] : F.logs) {
      if (e.value == p) throw Error(ErrorKind::DivergentEndpoint, "log point at " + e.str());
      out.logs.add(sign > 0 ? c : -c, e.value - p);
    }
  };
  add_logs(upper, 1);
  add_logs(lower, -1);
  return out;
}

// ---------------------------------------------------------------- interpolation

namespace {

// Null space basis of an m x n matrix (row-reduced in place).
std::vector<std::vector<FieldValue>> null_space(std::vector<std::vector<FieldValue>> A, int n) {
  const int m = static_cast<int>(A.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    FieldValue inv = A[row][col].inverse();
    for (int c = col; c < n; ++c) A[row][c] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      FieldValue f = A[r][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<FieldValue>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldValue> v(n);
    v[free] = FieldValue(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -A[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RationalFunction rational_interpolate(const std::vector<std::pair<FieldValue, FieldValue>>& samples, int dn, int dd) {
  const int nfit = dn + dd + 1;
  if (static_cast<int>(samples.size()) < nfit + 2)
    throw Error(ErrorKind::InvalidArgument, "rational_interpolate needs num+den+3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first) throw Error(ErrorKind::InvalidArgument, "repeated abscissa");
  const int n = dn + dd + 2;
  std::vector<std::vector<FieldValue>> A;
  for (int i = 0; i < nfit; ++i) {
    const auto& [x, v] = samples[i];
    std::vector<FieldValue> row(n);
    FieldValue xp(1);
    for (int k = 0; k <= std::max(dn, dd); ++k) {
      if (k <= dn) row[k] = xp;
      if (k <= dd) row[dn + 1 + k] = -(v * xp);
      xp *= x;
    }
    A.push_back(std::move(row));
  }
  for (const auto& vec : null_space(A, n)) {
    std::vector<FieldValue> a(vec.begin(), vec.begin() + dn + 1), b(vec.begin() + dn + 1, vec.end());
    Polynomial num(a), den(b);
    if (den.is_zero()) continue;
    RationalFunction f(num, den);
    bool ok = true;
    for (const auto& [x, v] : samples) {
      if (f.den().evaluate(x).is_zero() || f.evaluate(x) != v) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  throw Error(ErrorKind::InconsistentSamples, "no rational function of degrees (" + std::to_string(dn) + "," +
                                                  std::to_string(dd) + ") fits the samples");
}

}  // namespace qcurve
