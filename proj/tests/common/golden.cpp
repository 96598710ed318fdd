#include "golden.hpp"

#include <map>

#include "qcurve/errors.hpp"

namespace qcurve::golden {

namespace {

const RationalFunction Z = RationalFunction::z();

RationalFunction C(const FieldValue& v) { return RationalFunction(v); }
FieldValue F(const Rational& q) { return FieldValue(q); }

struct Term2 {
  long c;
  int i;
  int j;
};

// sum c z1^i z2^j / (den(z1) den(z2))
Products two_point(const FieldValue& scale, const std::vector<Term2>& terms, const RationalFunction& den) {
  Products out;
  for (const auto& t : terms) {
    out.push_back({scale * FieldValue(t.c), {pow(Z, t.i) / den, pow(Z, t.j) / den}});
  }
  return out;
}

Products three_point(const FieldValue& c, const RationalFunction& f) { return {{c, {f, f, f}}}; }

Products one_point(const FieldValue& c, const RationalFunction& f) { return {{c, {f}}}; }

RationalFunction sq_inv(long shift) {
  RationalFunction d = Z + C(shift);
  return RationalFunction(1) / (d * d);
}

struct GaussData {
  FieldValue li, s, b0p, b0m, b1p, b1m;
};

GaussData gauss_data(const SpectralCurve& c) {
  Rational l0 = param(c, "lambda0"), l1 = param(c, "lambda1"), li = param(c, "lambdaInf");
  Rational L = (l0 + l1 + li) * (l0 + l1 - li) * (l0 - l1 + li) * (l0 - l1 - li);
  GaussData d;
  d.li = F(li);
  d.s = sqrt_in_field(L, L);
  d.b0p = -F(Rational((l0 + li) * (l0 + li) - l1 * l1)) / d.s;
  d.b0m = -F(Rational((l0 - li) * (l0 - li) - l1 * l1)) / d.s;
  d.b1p = F(Rational((l1 + li) * (l1 + li) - l0 * l0)) / d.s;
  d.b1m = F(Rational((l1 - li) * (l1 - li) - l0 * l0)) / d.s;
  return d;
}

RationalFunction lin(const FieldValue& p) { return Z - C(p); }

std::vector<WCase> make_cases() {
  std::vector<WCase> v;
  const RationalFunction zz1 = Z * Z - C(1);

  // gauss
  v.push_back({"gauss", 0, 3, [](const SpectralCurve& c) {
                 GaussData d = gauss_data(c);
                 FieldValue two(2), inv = (FieldValue(4) * d.li).inverse();
                 FieldValue a = (d.b0p + d.b0m + two) * (d.b1p + d.b1m + two) * inv;
                 FieldValue b = (d.b0p + d.b0m - two) * (d.b1p + d.b1m - two) * inv;
                 Products p = three_point(a, sq_inv(1));
                 p.push_back({-b, {sq_inv(-1), sq_inv(-1), sq_inv(-1)}});
                 return p;
               }});
  v.push_back({"gauss", 1, 1, [zz1](const SpectralCurve& c) {
                 GaussData d = gauss_data(c);
                 RationalFunction num = Z * lin(d.b0p) * lin(d.b0m) * lin(d.b1p) * lin(d.b1m);
                 return one_point(-(FieldValue(2) * d.li).inverse(), num / pow(zz1, 4));
               }});

  // degenerate gauss
  v.push_back({"degenerate-gauss", 0, 3, [](const SpectralCurve& c) {
                 Rational l1 = param(c, "lambda1"), li = param(c, "lambdaInf");
                 Rational k = -li * li * l1 * l1 / (2 * (l1 * l1 - li * li));
                 return three_point(F(k), RationalFunction(1) / (Z * Z));
               }});
  v.push_back({"degenerate-gauss", 1, 1, [](const SpectralCurve& c) {
                 Rational l1 = param(c, "lambda1"), li = param(c, "lambdaInf");
                 RationalFunction num = (Z * Z - C(F(li * li))) * (Z * Z - C(F(l1 * l1)));
                 return one_point(F(1 / (16 * (li * li - l1 * l1))), num / pow(Z, 4));
               }});

  // kummer
  v.push_back({"kummer", 0, 3, [](const SpectralCurve& c) {
                 Rational l0 = param(c, "lambda0"), li = param(c, "lambdaInf");
                 Rational dd = li * li - l0 * l0;
                 FieldValue s = sqrt_in_field(dd, dd);
                 FieldValue bp = F(Rational(li + l0)) / s, bm = F(Rational(li - l0)) / s;
                 FieldValue k = -(FieldValue(2) * s).inverse();
                 Products p = three_point(k * (bp + bm + FieldValue(2)), sq_inv(1));
                 p.push_back({-k * (bp + bm - FieldValue(2)), {sq_inv(-1), sq_inv(-1), sq_inv(-1)}});
                 return p;
               }});
  v.push_back({"kummer", 1, 1, [zz1](const SpectralCurve& c) {
                 Rational l0 = param(c, "lambda0"), li = param(c, "lambdaInf");
                 Rational dd = li * li - l0 * l0;
                 FieldValue s = sqrt_in_field(dd, dd);
                 FieldValue bp = F(Rational(li + l0)) / s, bm = F(Rational(li - l0)) / s;
                 return one_point(-s.inverse(), Z * Z * lin(bp) * lin(bm) / pow(zz1, 4));
               }});

  // legendre
  v.push_back({"legendre", 1, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return one_point(F(-1 / (2 * l)), Z / (zz1 * zz1));
               }});
  v.push_back({"legendre", 0, 3, [](const SpectralCurve&) { return Products{}; }});
  v.push_back({"legendre", 1, 2, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return two_point(F(1 / (4 * l * l)), {{1, 2, 2}, {1, 2, 0}, {1, 0, 2}, {4, 1, 1}, {1, 0, 0}},
                                  zz1 * zz1);
               }});
  v.push_back({"legendre", 2, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 RationalFunction num = pow(Z, 5) + pow(Z, 3).scaled(7) + Z;
                 return one_point(F(-1 / (8 * l * l * l)), num / pow(zz1, 4));
               }});

  // bessel
  v.push_back({"bessel", 0, 3, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambda0");
                 return three_point(F(1 / (2 * l)), RationalFunction(1) / (Z * Z));
               }});
  v.push_back({"bessel", 1, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambda0");
                 return one_point(F(-1 / (16 * l)), zz1 / pow(Z, 4));
               }});
  v.push_back({"bessel", 1, 2, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambda0");
                 return two_point(F(1 / (32 * l * l)), {{1, 4, 4}, {-6, 4, 2}, {-6, 2, 4}, {5, 4, 0}, {3, 2, 2}, {5, 0, 4}},
                                  pow(Z, 6));
               }});
  v.push_back({"bessel", 2, 1, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambda0");
                 RationalFunction num = pow(Z, 6).scaled(9) - pow(Z, 4).scaled(107) + pow(Z, 2).scaled(203) - C(105);
                 return one_point(F(-1 / (1024 * l * l * l)), num / pow(Z, 10));
               }});

  // whittaker
  v.push_back({"whittaker", 1, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return one_point(F(-1 / (32 * l)), zz1 * zz1 / pow(Z, 4));
               }});
  v.push_back({"whittaker", 0, 3, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return three_point(F(-1 / (4 * l)), RationalFunction(1) / (Z * Z));
               }});
  v.push_back({"whittaker", 1, 2, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return two_point(F(1 / (128 * l * l)),
                                  {{5, 4, 0}, {3, 2, 2}, {5, 0, 4}, {-12, 2, 4}, {-12, 4, 2}, {10, 4, 4}, {1, 6, 6}},
                                  pow(Z, 6));
               }});
  v.push_back({"whittaker", 2, 1, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 static const long co[] = {-105, 406, -583, 372, -103, 22, -9};
                 RationalFunction num;
                 for (int i = 0; i < 7; ++i) num += pow(Z, 2 * i).scaled(FieldValue(co[i]));
                 return one_point(F(1 / (8192 * l * l * l)), num / pow(Z, 10));
               }});

  // weber
  v.push_back({"weber", 0, 3, [](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 Products p = three_point(F(1 / (2 * l)), sq_inv(1));
                 p.push_back({F(-1 / (2 * l)), {sq_inv(-1), sq_inv(-1), sq_inv(-1)}});
                 return p;
               }});
  v.push_back({"weber", 1, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 return one_point(F(-1 / l), pow(Z, 3) / pow(zz1, 4));
               }});
  v.push_back({"weber", 2, 1, [zz1](const SpectralCurve& c) {
                 Rational l = param(c, "lambdaInf");
                 RationalFunction num = pow(Z, 11) + pow(Z, 9).scaled(3) + pow(Z, 7);
                 return one_point(F(-21 / (l * l * l)), num / pow(zz1, 10));
               }});
  return v;
}

}  // namespace

Rational param(const SpectralCurve& c, const std::string& name) {
  auto it = c.parameters.find(name);
  if (it == c.parameters.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + name);
  return it->second;
}

const std::vector<WCase>& w_cases() {
  static const std::vector<WCase> cases = make_cases();
  return cases;
}

const std::vector<std::vector<Rational>>& parameter_points(const std::string& curve) {
  static const std::map<std::string, std::vector<std::vector<Rational>>> points = {
      {"gauss", {{3, 1, 1}, {5, 2, 1}, {Rational(1, 2), Rational(1, 3), Rational(1, 5)}}},
      {"degenerate-gauss", {{2, 1}, {3, Rational(1, 2)}, {Rational(1, 3), Rational(5, 4)}}},
      {"kummer", {{1, 3}, {2, 3}, {3, 5}}},
      {"legendre", {{1}, {2}, {Rational(1, 3)}}},
      {"bessel", {{1}, {Rational(3, 2)}, {Rational(-2, 5)}}},
      {"whittaker", {{1}, {3}, {Rational(2, 7)}}},
      {"weber", {{1}, {2}, {Rational(9, 4)}}},
      {"degenerate-bessel", {{}}},
      {"airy", {{}}},
  };
  auto it = points.find(curve);
  if (it == points.end()) throw Error(ErrorKind::UnknownCurve, curve);
  return it->second;
}

}  // namespace qcurve::golden
