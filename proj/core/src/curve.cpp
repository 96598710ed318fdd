#include "qcurve/curve.hpp"

#include <algorithm>

#include "qcurve/errors.hpp"

namespace qcurve {

namespace {

const RationalFunction kZ = RationalFunction::z();

int covering_degree(const RationalFunction& x) { return std::max(x.num().degree(), x.den().degree()); }

// Order of the differential f dz at p.
int differential_order(const RationalFunction& f, const Point& p) {
  int v = f.valuation(p);
  return p.infinite ? v - 2 : v;
}

bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

std::vector<FieldValue> with_default_hints(const SpectralCurve& c) {
  std::vector<FieldValue> h = c.root_hints;
  for (long v : {0L, 1L, -1L}) h.emplace_back(v);
  return h;
}

}  // namespace

const Radicand* SpectralCurve::field() const {
  if (const Radicand* f = x.field()) return f;
  if (const Radicand* f = y.field()) return f;
  return FieldValue::sqrt_of(radicand).field();
}

std::string point_label(const Point& p) { return p.infinite ? "inf" : p.value.str(); }

Point image(const RationalFunction& f, const Point& p) {
  if (f.valuation(p) < 0) return Point::infinity();
  return Point::at(f.evaluate(p));
}

std::vector<Point> preimages(const RationalFunction& x, const Point& target, const std::vector<FieldValue>& hints,
                             const Radicand* field) {
  int d = covering_degree(x);
  Polynomial eq = target.infinite ? x.den() : x.num() - x.den().scaled(target.value);
  std::vector<Point> out;
  int found = 0;
  if (!eq.is_zero() && eq.degree() > 0) {
    for (const auto& [root, mult] : find_roots(eq, hints, field)) {
      out.push_back(Point::at(root));
      found += mult;
    }
  }
  if (found < d && image(x, Point::infinity()) == target) out.push_back(Point::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

RationalFunction conjugation_map(const RationalFunction& x) {
  if (covering_degree(x) != 2) {
    throw Error(ErrorKind::NotDegreeTwo, "x has covering degree " + std::to_string(covering_degree(x)));
  }
  // N(w) D(z) - N(z) D(w) = P2 w^2 + P1 w + P0 has roots w = z and w = sigma(z).
  const Polynomial& N = x.num();
  const Polynomial& D = x.den();
  RationalFunction P1(D.scaled(N.coeff(1)) - N.scaled(D.coeff(1)));
  RationalFunction P2(D.scaled(N.coeff(2)) - N.scaled(D.coeff(2)));
  if (P2.is_zero()) throw Error(ErrorKind::ConjugationNotFound, "degenerate quadratic in w");
  RationalFunction sigma = -(P1 / P2) - kZ;
  if (sigma == kZ || x.compose(sigma) != x || sigma.compose(sigma) != kZ) {
    throw Error(ErrorKind::ConjugationNotFound, "no deck involution for x = " + x.str());
  }
  return sigma;
}

RationalFunction pushforward(const RationalFunction& f, const RationalFunction& x, const RationalFunction& sigma) {
  if (f.compose(sigma) != f) throw Error(ErrorKind::NotSigmaInvariant, "function is not sigma-invariant");
  if (f.is_constant()) return f;
  int d = (covering_degree(f) + 1) / 2;
  std::vector<std::pair<FieldValue, FieldValue>> samples;
  std::vector<FieldValue> used;
  int need = 2 * d + 4;
  for (long k = 1; static_cast<int>(samples.size()) < need; ++k) {
    for (long s : {k, -k}) {
      FieldValue zv(Rational(s) / 3);
      if (x.den().evaluate(zv).is_zero() || f.den().evaluate(zv).is_zero()) continue;
      FieldValue xv = x.evaluate(zv);
      if (std::find(used.begin(), used.end(), xv) != used.end()) continue;
      used.push_back(xv);
      samples.emplace_back(xv, f.evaluate(zv));
      if (static_cast<int>(samples.size()) == need) break;
    }
  }
  RationalFunction F = rational_interpolate(samples, d, d);
  if (F.compose(x) != f) throw Error(ErrorKind::InconsistentSamples, "pushforward failed to verify");
  return F;
}

bool CurveGeometry::is_effective(const Point& p) const { return contains(effective, p); }

const SingularLabel& CurveGeometry::label(const std::string& name) const {
  for (const auto& l : labels) {
    if (l.name == name) return l;
  }
  throw Error(ErrorKind::UnknownLabel, "no singular label " + name);
}

const BPoint* CurveGeometry::find_b(const std::string& name) const {
  for (const auto& b : b_points) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::vector<Point> CurveGeometry::b_set() const {
  std::vector<Point> out;
  for (const auto& b : b_points) out.push_back(b.point);
  return out;
}

std::vector<Point> CurveGeometry::b1_set() const {
  std::vector<Point> out;
  for (const auto& b : b_points) {
    if (b.rho == -2) out.push_back(b.point);
  }
  return out;
}

CurveGeometry analyze_geometry(const SpectralCurve& curve) {
  if (curve.x.is_constant() || curve.y.is_constant()) {
    throw Error(ErrorKind::InvalidArgument, "x and y must be nonconstant");
  }
  CurveGeometry g;
  g.curve = curve;
  const Radicand* field = curve.field();
  std::vector<FieldValue> hints = with_default_hints(curve);
  const RationalFunction& x = curve.x;
  const RationalFunction& y = curve.y;

  g.sigma = conjugation_map(x);
  g.dx = x.derivative();
  g.delta = y - y.compose(g.sigma);

  // zeros of dx and poles of x of order >= 2
  if (g.dx.num().degree() > 0) {
    for (const auto& [r, m] : find_roots(g.dx.num(), hints, field)) {
      if (m != 1) throw Error(ErrorKind::NonSimpleRamification, "dx has a multiple zero at " + r.str());
      g.ramification.push_back(Point::at(r));
    }
  }
  for (const auto& [p, k] : poles_of(x, hints, field)) {
    if (k > 2) throw Error(ErrorKind::NonSimpleRamification, "pole of order " + std::to_string(k) + " at " + p.str());
    if (k == 2) g.ramification.push_back(Point::at(p));
  }
  {
    Point inf = Point::infinity();
    int v = x.valuation(inf);
    if (v < -2) throw Error(ErrorKind::NonSimpleRamification, "pole of high order at inf");
    if (v == -2) g.ramification.push_back(inf);
    if (v >= 0) {
      int w = (x - RationalFunction(x.evaluate(inf))).valuation(inf);
      if (w > 2) throw Error(ErrorKind::NonSimpleRamification, "dx has a multiple zero at inf");
      if (w == 2) g.ramification.push_back(inf);
    }
  }
  std::sort(g.ramification.begin(), g.ramification.end());
  // Riemann-Hurwitz for a degree-2 cover of P^1 by P^1
  if (g.ramification.size() != 2) {
    throw Error(ErrorKind::NonSimpleRamification, "expected two ramification points");
  }
  for (const auto& r : g.ramification) {
    if (image(g.sigma, r) != r) throw Error(ErrorKind::ConjugationNotFound, "sigma does not fix " + r.str());
  }
  if (image(x, g.ramification[0]) == image(x, g.ramification[1])) {
    throw Error(ErrorKind::ConstraintViolated, "branch points coincide");
  }

  // (A2): Y = -x^2 y holomorphic at a ramification pole needs dY != 0 there.
  RationalFunction Y = -(x * x * y);
  for (const auto& r : g.ramification) {
    if (x.valuation(r) < 0 && Y.valuation(r) >= 0) {
      RationalFunction dY = Y - RationalFunction(Y.evaluate(r));
      if (dY.valuation(r) != 1) throw Error(ErrorKind::ConstraintViolated, "dY vanishes at " + r.str());
    }
  }

  // (AQ2): Delta dx is nonvanishing away from R.
  RationalFunction ddx = g.delta * g.dx;
  {
    Polynomial rest = ddx.num();
    for (const auto& r : g.ramification) {
      if (r.infinite) continue;
      Polynomial lin = Polynomial::linear_root(r.value), q, rem;
      for (;;) {
        Polynomial::divmod(rest, lin, q, rem);
        if (!rem.is_zero()) break;
        rest = q;
      }
    }
    bool bad = rest.degree() > 0;
    if (!contains(g.ramification, Point::infinity()) && differential_order(ddx, Point::infinity()) > 0) bad = true;
    if (bad) throw Error(ErrorKind::ConstraintViolated, "Delta dx vanishes away from the ramification points");
  }

  // Effective points: the recursion kernel 1/(Delta dx) must have a pole.
  for (const auto& r : g.ramification) {
    if (differential_order(ddx, r) >= 0) g.effective.push_back(r);
  }

  g.q0 = pushforward(-(y + y.compose(g.sigma)), x, g.sigma);
  g.r0 = pushforward(y * y.compose(g.sigma), x, g.sigma);
  RationalFunction Q0 = classical_potential(g);

  // Sing(P)
  if (!Q0.is_zero()) {
    for (const auto& [b, k] : poles_of(Q0, hints, field)) {
      if (k >= 2) g.sing.emplace_back(Point::at(b), -k);
    }
    int rho_inf = -4 + Q0.den().degree() - Q0.num().degree();
    if (rho_inf <= -2) g.sing.emplace_back(Point::infinity(), rho_inf);
  }
  std::sort(g.sing.begin(), g.sing.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Point> branch;
  for (const auto& r : g.ramification) branch.push_back(image(x, r));
  RationalFunction ydx = y * g.dx;
  for (const auto& [j, rho] : g.sing) {
    std::vector<Point> pre = preimages(x, j, hints, field);
    std::string name = point_label(j);
    if (contains(branch, j) || pre.size() == 1) {
      for (const auto& p : pre) g.b_points.push_back(BPoint{name, p, j, rho, residue(ddx, p)});
      continue;
    }
    if (pre.size() != 2) throw Error(ErrorKind::NotDegreeTwo, "unexpected fiber over " + name);
    SingularLabel l;
    l.name = name;
    l.point = j;
    l.rho = rho;
    FieldValue r0 = residue(ydx, pre[0]);
    static const std::map<std::string, std::string> param_of = {
        {"0", "lambda0"}, {"1", "lambda1"}, {"inf", "lambdaInf"}};
    auto pn = param_of.find(name);
    auto pv = pn == param_of.end() ? curve.parameters.end() : curve.parameters.find(pn->second);
    if (pv != curve.parameters.end()) {
      l.lambda = FieldValue(pv->second);
      if (r0 == l.lambda) {
        l.plus = pre[0];
        l.minus = pre[1];
      } else if (r0 == -l.lambda) {
        l.plus = pre[1];
        l.minus = pre[0];
      } else {
        throw Error(ErrorKind::ConstraintViolated, "residue of y dx over " + name + " is not +-" + l.lambda.str());
      }
    } else {
      l.lambda = r0;
      l.plus = pre[0];
      l.minus = pre[1];
    }
    g.labels.push_back(l);
    g.b_points.push_back(BPoint{name + "+", l.plus, j, rho, residue(ddx, l.plus)});
    g.b_points.push_back(BPoint{name + "-", l.minus, j, rho, residue(ddx, l.minus)});
  }
  return g;
}

RationalFunction classical_potential(const CurveGeometry& geometry) {
  return geometry.q0 * geometry.q0 * RationalFunction(FieldValue(Rational(1, 4))) - geometry.r0;
}

}  // namespace qcurve
