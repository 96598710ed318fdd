#include "qcurve/quantize.hpp"

#include "qcurve/errors.hpp"

namespace qcurve {

namespace {

const RationalFunction Z = RationalFunction::z();

const BPoint& conjugate(const CurveGeometry& geom, const BPoint& b) {
  Point s = image(geom.sigma, b.point);
  for (const auto& o : geom.b_points) {
    if (o.point == s) return o;
  }
  return b;
}

bool in_b1(const CurveGeometry& geom, const Point& p) {
  for (const auto& q : geom.b1_set()) {
    if (q == p) return true;
  }
  return false;
}

// sum over finite beta of c(beta) / (z - beta)
template <class F>
RationalFunction b_sum(const CurveGeometry& geom, F coeff) {
  RationalFunction s;
  for (const auto& b : geom.b_points) {
    if (b.point.infinite) continue;
    FieldValue c = coeff(b);
    if (!c.is_zero()) s += RationalFunction(c) / (Z - RationalFunction(b.point.value));
  }
  return s;
}

// Right-hand sides of the three defining identities, as functions of z.
struct Identities {
  RationalFunction xq1, xr1, xr2;
};

Identities identities(const CurveGeometry& geom, const QuantizationDivisor& d) {
  const RationalFunction& D = geom.delta;
  auto nu = [&d](const BPoint& b) { return FieldValue(d.weight(b.name)); };
  Identities id;
  id.xq1 = -(D.derivative() / D) + RationalFunction(2) / (Z - geom.sigma) -
           b_sum(geom, [&](const BPoint& b) { return nu(b) + nu(conjugate(geom, b)); });
  RationalFunction q0z = geom.q0.compose(geom.curve.x);
  RationalFunction q1z = id.xq1 / geom.dx;
  FieldValue half(Rational(1, 2));
  id.xr1 = (q0z.derivative() + geom.dx * q0z * q1z +
            D * b_sum(geom, [&](const BPoint& b) { return nu(b) - nu(conjugate(geom, b)); }))
               .scaled(half);
  id.xr2 = D * b_sum(geom, [&](const BPoint& b) {
             if (!in_b1(geom, b.point)) return FieldValue();
             return nu(b) * nu(conjugate(geom, b)) / b.c_beta;
           });
  return id;
}

std::vector<FieldValue> candidates(const CurveGeometry& geom) {
  std::vector<FieldValue> c = geom.curve.root_hints;
  for (const auto& r : geom.ramification) {
    if (!r.infinite) c.push_back(r.value);
  }
  for (const auto& b : geom.b_points) {
    if (!b.point.infinite) c.push_back(b.point.value);
  }
  for (long v : {0L, 1L, -1L}) c.emplace_back(v);
  return c;
}

std::pair<const BPoint*, const BPoint*> endpoints(const CurveGeometry& geom, const std::string& label) {
  const BPoint* p = geom.find_b(label + "+");
  const BPoint* m = geom.find_b(label + "-");
  if (!p || !m) throw Error(ErrorKind::UnknownLabel, "no Voros endpoints for label " + label);
  return {p, m};
}


}  // namespace

QuantizationDivisor QuantizationDivisor::canonical(const CurveGeometry& geometry, const NuPoint& nu) {
  QuantizationDivisor d;
  Rational base = Rational(1) / static_cast<long>(geometry.b_points.size());
  for (const auto& b : geometry.b_points) {
    Rational w = base;
    char s = b.name.empty() ? ' ' : b.name.back();
    if (s == '+' || s == '-') {
      auto it = nu.find(b.name.substr(0, b.name.size() - 1));
      if (it != nu.end()) w += (s == '+' ? it->second : -it->second) / 2;
    }
    d.weights[b.name] = w;
  }
  return d;
}

Rational QuantizationDivisor::weight(const std::string& name) const {
  auto it = weights.find(name);
  return it == weights.end() ? Rational(0) : it->second;
}

NuPoint QuantizationDivisor::differences(const CurveGeometry& geometry) const {
  NuPoint nu;
  for (const auto& l : geometry.labels) nu[l.name] = weight(l.name + "+") - weight(l.name + "-");
  return nu;
}

void QuantizationDivisor::validate(const CurveGeometry& geometry) const {
  Rational sum;
  for (const auto& [name, w] : weights) {
    if (!geometry.find_b(name)) throw Error(ErrorKind::InvalidArgument, "divisor point " + name + " is not in B");
    sum += w;
  }
  if (sum != 1) throw Error(ErrorKind::InvalidArgument, "divisor weights sum to " + sum.get_str() + ", not 1");
}

QuantumCurve quantize(const CurveGeometry& geometry, const QuantizationDivisor& divisor) {
  divisor.validate(geometry);
  Identities id = identities(geometry, divisor);
  const RationalFunction& x = geometry.curve.x;
  QuantumCurve qc;
  qc.q0 = geometry.q0;
  qc.r0 = geometry.r0;
  qc.q1 = pushforward(id.xq1 / geometry.dx, x, geometry.sigma);
  qc.r1 = pushforward(id.xr1 / geometry.dx, x, geometry.sigma);
  qc.r2 = pushforward(id.xr2 / geometry.dx, x, geometry.sigma);
  return qc;
}

bool verify_quantization(const CurveGeometry& geometry, const QuantizationDivisor& divisor,
                         const QuantumCurve& candidate) {
  if (candidate.q0 != geometry.q0 || candidate.r0 != geometry.r0) return false;
  Identities id = identities(geometry, divisor);
  const RationalFunction& x = geometry.curve.x;
  return geometry.dx * candidate.q1.compose(x) == id.xq1 && geometry.dx * candidate.r1.compose(x) == id.xr1 &&
         geometry.dx * candidate.r2.compose(x) == id.xr2;
}

SLPotential sl_form(const QuantumCurve& qc) {
  FieldValue quarter(Rational(1, 4)), half(Rational(1, 2));
  SLPotential s;
  s.q0 = (qc.q0 * qc.q0).scaled(quarter) - qc.r0;
  s.q1 = (qc.q0 * qc.q1 + qc.q0.derivative()).scaled(half) - qc.r1;
  s.q2 = (qc.q1 * qc.q1).scaled(quarter) - qc.r2 + qc.q1.derivative().scaled(half);
  return s;
}

WkbExpansion riccati_expand(const QuantumCurve& qc, const CurveGeometry& geometry, int m_max) {
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "m_max must be at least 1");
  const RationalFunction& x = geometry.curve.x;
  const RationalFunction& y = geometry.curve.y;
  RationalFunction q0 = qc.q0.compose(x), q1 = qc.q1.compose(x);
  RationalFunction r0 = qc.r0.compose(x), r1 = qc.r1.compose(x), r2 = qc.r2.compose(x);
  if (!(y * y + q0 * y + r0).is_zero()) throw Error(ErrorKind::BranchAmbiguity, "y does not solve the classical curve");
  RationalFunction delta = y.scaled(FieldValue(2)) + q0;
  WkbExpansion w;
  w.m_max = m_max;
  w.terms.push_back(y);
  for (int m = 0; m <= m_max; ++m) {
    RationalFunction acc;
    for (int a = 0; a <= m - 1; ++a) acc += w.s(a) * w.s(m - 1 - a);
    acc += w.s(m - 1).derivative() / geometry.dx + q1 * w.s(m - 1);
    if (m == 0) acc += r1;
    if (m == 1) acc += r2;
    w.terms.push_back(-acc / delta);
  }
  return w;
}

VorosCoefficient voros_from_w(RecursionTable& table, const QuantizationDivisor& divisor, const std::string& label,
                              int m_max) {
  const CurveGeometry& geom = table.geometry();
  divisor.validate(geom);
  auto [bp, bm] = endpoints(geom, label);

  // primitive of a pole form, vanishing at infinity for the finite ones
  auto primitive = [&table](const PoleForm& f) {
    const Point& r = table.points()[f.point];
    if (r.infinite) return pow(Z, f.power + 1).scaled(FieldValue(Rational(1) / (f.power + 1)));
    return RationalFunction::pole(r.value, f.power - 1).scaled(FieldValue(Rational(1) / (1 - f.power)));
  };
  std::map<PoleForm, std::pair<FieldValue, FieldValue>> along;
  auto integrals = [&](const PoleForm& f) -> const std::pair<FieldValue, FieldValue>& {
    auto it = along.find(f);
    if (it != along.end()) return it->second;
    RationalFunction F = primitive(f);
    FieldValue base;
    for (const auto& b : geom.b_points) {
      Rational nu = divisor.weight(b.name);
      if (nu != 0) base += FieldValue(nu) * F.evaluate(b.point);
    }
    return along[f] = {F.evaluate(bp->point) - base, F.evaluate(bm->point) - base};
  };

  VorosCoefficient v;
  v.label = label;
  for (int m = 1; m <= m_max; ++m) {
    FieldValue total;
    for (int g = 0; 2 * g - 2 < m; ++g) {
      int n = m + 2 - 2 * g;
      for (const auto& [key, c] : table.w(g, n).terms) {
        FieldValue plus(1), minus(1);
        Rational mult(1);
        int run = 0;
        for (size_t i = 0; i < key.size(); ++i) {
          const auto& [ip, im] = integrals(key[i]);
          plus *= ip;
          minus *= im;
          run = (i > 0 && key[i] == key[i - 1]) ? run + 1 : 1;
          mult *= run;
        }
        total += c * (plus - minus) * FieldValue(1 / mult);
      }
    }
    v.coefficients.push_back(total);
  }
  return v;
}

VorosCoefficient voros_riccati(const WkbExpansion& wkb, const CurveGeometry& geometry, const std::string& label,
                               int m_max) {
  if (m_max > wkb.m_max) throw Error(ErrorKind::InvalidArgument, "WKB expansion is too short");
  auto [bp, bm] = endpoints(geometry, label);
  std::vector<FieldValue> cand = candidates(geometry);
  VorosCoefficient v;
  v.label = label;
  for (int m = 1; m <= m_max; ++m) {
    LogRational F = antiderivative(wkb.s(m) * geometry.dx, cand, geometry.curve.field());
    EndpointValue e = evaluate_difference(F, bp->point, bm->point);
    if (!e.logs.is_zero()) {
      throw Error(ErrorKind::ResidualLogSymbol, "log terms of V_" + std::to_string(m) + " do not cancel: " + e.logs.str());
    }
    v.coefficients.push_back(e.value);
  }
  return v;
}

HbarSeries to_series(const VorosCoefficient& v) {
  HbarSeries s(static_cast<int>(v.coefficients.size()));
  for (size_t i = 0; i < v.coefficients.size(); ++i) s.add(static_cast<int>(i) + 1, v.coefficients[i]);
  return s;
}

}  // namespace qcurve
