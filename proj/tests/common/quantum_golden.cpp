#include "common/quantum_golden.hpp"

namespace qcurve::golden {

namespace {

const RationalFunction X = RationalFunction::z();

RationalFunction K(const Rational& c) { return RationalFunction(FieldValue(c)); }
RationalFunction lin(long a) { return X - RationalFunction(a); }

Rational lam(const SpectralCurve& c, const std::string& p) { return c.parameters.at(p); }

}  // namespace

// generic weights (sums are 1) so that every nu-dependence is visible
const std::vector<QuantizationCase>& quantization_cases() {
  static const std::vector<QuantizationCase> c = {
      {"gauss",
       {3, 1, 1},
       {{"0+", Rational(1, 5)}, {"0-", Rational(1, 7)}, {"1+", Rational(1, 3)}, {"1-", Rational(-1, 4)},
        {"inf+", Rational(1, 6)}, {"inf-", Rational(1) - Rational(1, 5) - Rational(1, 7) - Rational(1, 3) +
                                                Rational(1, 4) - Rational(1, 6)}}},
      {"gauss",
       {Rational(1, 2), Rational(7, 3), Rational(5, 4)},
       {{"0+", Rational(2, 3)}, {"0-", 0}, {"1+", Rational(1, 9)}, {"1-", Rational(1, 9)}, {"inf+", Rational(-1, 3)},
        {"inf-", Rational(4, 9)}}},
      {"degenerate-gauss",
       {2, Rational(1, 3)},
       {{"1+", Rational(2, 5)}, {"1-", Rational(1, 5)}, {"inf+", Rational(1, 10)}, {"inf-", Rational(3, 10)}}},
      {"kummer",
       {3, Rational(1, 2)},
       {{"0+", Rational(1, 4)}, {"0-", Rational(1, 8)}, {"inf+", Rational(1, 2)}, {"inf-", Rational(1, 8)}}},
      {"legendre", {2}, {{"inf+", Rational(2, 7)}, {"inf-", Rational(5, 7)}}},
      {"bessel", {Rational(3, 2)}, {{"0+", Rational(1, 3)}, {"0-", Rational(1, 4)}, {"inf", Rational(5, 12)}}},
      {"whittaker", {3}, {{"inf+", Rational(4, 5)}, {"inf-", Rational(1, 5)}}},
      {"weber", {Rational(9, 4)}, {{"inf+", Rational(-1, 2)}, {"inf-", Rational(3, 2)}}},
      {"degenerate-bessel", {}, {{"inf", 1}}},
      {"airy", {}, {{"inf", 1}}},
  };
  return c;
}

QuantumCurve reference_quantum_curve(const SpectralCurve& c, const QuantizationDivisor& d) {
  auto v = [&d](const std::string& n) { return d.weight(n); };
  auto diff = [&v](const std::string& j) -> Rational { return v(j + "+") - v(j + "-"); };
  auto prod = [&v](const std::string& j) -> Rational { return v(j + "+") * v(j + "-"); };
  auto sum = [&v](const std::string& j) -> Rational { return v(j + "+") + v(j + "-"); };
  QuantumCurve q;
  const RationalFunction x1 = lin(1), xx = X * X;
  if (c.name == "gauss") {
    Rational l0 = lam(c, "lambda0"), l1 = lam(c, "lambda1"), li = lam(c, "lambdaInf");
    q.q1 = K(1 - sum("0")) / X + K(1 - sum("1")) / x1;
    q.r0 = -(xx.scaled(FieldValue(li * li)) - X.scaled(FieldValue(li * li + l0 * l0 - l1 * l1)) + K(l0 * l0)) /
           (xx * x1 * x1);
    q.r1 = -K(diff("0") * l0) / (xx * x1) + K(diff("1") * l1) / (X * x1 * x1) + K(diff("inf") * li) / (X * x1);
    q.r2 = -K(prod("0")) / (xx * x1) + K(prod("1")) / (X * x1 * x1) + K(prod("inf")) / (X * x1);
  } else if (c.name == "degenerate-gauss") {
    Rational l1 = lam(c, "lambda1"), li = lam(c, "lambdaInf");
    q.q1 = RationalFunction(1) / X + K(1 - sum("1")) / x1;
    q.r0 = -(X.scaled(FieldValue(li * li)) + K(l1 * l1 - li * li)) / (X * x1 * x1);
    q.r1 = K(diff("1") * l1) / (X * x1 * x1) + K(diff("inf") * li) / (X * x1);
    q.r2 = K(prod("1")) / (X * x1 * x1) + K(prod("inf")) / (X * x1);
  } else if (c.name == "kummer") {
    Rational l0 = lam(c, "lambda0"), li = lam(c, "lambdaInf");
    q.q1 = K(sum("inf")) / X;
    q.r0 = -(xx + X.scaled(FieldValue(4 * li)) + K(4 * l0 * l0)) / xx.scaled(FieldValue(4));
    q.r1 = K(diff("inf") / 2) / X + K(diff("0") * l0) / xx;
    q.r2 = K(prod("0")) / xx;
  } else if (c.name == "legendre") {
    Rational l = lam(c, "lambdaInf");
    RationalFunction d = xx - RationalFunction(1);
    q.q1 = X.scaled(FieldValue(2)) / d;
    q.r0 = -K(l * l) / d;
    q.r1 = K(l * diff("inf")) / d;
    q.r2 = K(prod("inf")) / d;
  } else if (c.name == "bessel") {
    Rational l = lam(c, "lambda0");
    q.q1 = K(1 - sum("0")) / X;
    q.r0 = -(X + K(4 * l * l)) / xx.scaled(FieldValue(4));
    q.r1 = K(l * diff("0")) / xx;
    q.r2 = K(prod("0")) / xx;
  } else if (c.name == "whittaker") {
    Rational l = lam(c, "lambdaInf");
    q.q1 = RationalFunction(1) / X;
    q.r0 = -(X - K(4 * l)) / X.scaled(FieldValue(4));
    q.r1 = -K(diff("inf") / 2) / X;
  } else if (c.name == "weber") {
    Rational l = lam(c, "lambdaInf");
    q.r0 = -(xx.scaled(FieldValue(Rational(1, 4))) - K(l));
    q.r1 = -K(diff("inf") / 2);
  } else if (c.name == "degenerate-bessel") {
    q.q1 = RationalFunction(1) / X;
    q.r0 = -(RationalFunction(1) / X);
  } else if (c.name == "airy") {
    q.r0 = -X;
  }
  return q;
}

RationalFunction tabulated_potential(const SpectralCurve& c, const NuPoint& nu, const Rational& h) {
  auto hat = [&](const std::string& p, const std::string& j) -> Rational {
    auto it = nu.find(j);
    return lam(c, p) - h * (it == nu.end() ? Rational(0) : it->second) / 2;
  };
  const RationalFunction x1 = lin(1), xx = X * X;
  Rational h2 = h * h;
  if (c.name == "gauss") {
    Rational a0 = hat("lambda0", "0"), a1 = hat("lambda1", "1"), ai = hat("lambdaInf", "inf");
    return (xx.scaled(FieldValue(ai * ai)) - X.scaled(FieldValue(ai * ai + a0 * a0 - a1 * a1)) + K(a0 * a0)) /
               (xx * x1 * x1) -
           (xx - X + RationalFunction(1)).scaled(FieldValue(h2 / 4)) / (xx * x1 * x1);
  }
  if (c.name == "degenerate-gauss") {
    Rational a1 = hat("lambda1", "1"), ai = hat("lambdaInf", "inf");
    return (X.scaled(FieldValue(ai * ai)) + K(a1 * a1 - ai * ai)) / (X * x1 * x1) -
           (xx - X + RationalFunction(1)).scaled(FieldValue(h2 / 4)) / (xx * x1 * x1);
  }
  if (c.name == "kummer") {
    Rational a0 = hat("lambda0", "0"), ai = hat("lambdaInf", "inf");
    return (xx + X.scaled(FieldValue(4 * ai)) + K(4 * a0 * a0)) / xx.scaled(FieldValue(4)) - K(h2 / 4) / xx;
  }
  if (c.name == "legendre") {
    Rational a = hat("lambdaInf", "inf");
    RationalFunction d = xx - RationalFunction(1);
    return K(a * a) / d - (xx + RationalFunction(3)).scaled(FieldValue(h2 / 4)) / (d * d);
  }
  if (c.name == "bessel") {
    Rational a = hat("lambda0", "0");
    return (X + K(4 * a * a)) / xx.scaled(FieldValue(4)) - K(h2 / 4) / xx;
  }
  if (c.name == "whittaker") {
    Rational a = hat("lambdaInf", "inf");
    return (X - K(4 * a)) / X.scaled(FieldValue(4)) - K(h2 / 4) / xx;
  }
  if (c.name == "weber") return xx.scaled(FieldValue(Rational(1, 4))) - K(hat("lambdaInf", "inf"));
  if (c.name == "degenerate-bessel") return RationalFunction(1) / X - K(h2 / 4) / xx;
  return X;  // airy
}

}  // namespace qcurve::golden
