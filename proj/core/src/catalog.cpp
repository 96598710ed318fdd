#include <algorithm>

#include "qcurve/curve.hpp"
#include "qcurve/errors.hpp"

namespace qcurve {

namespace {

using Params = std::map<std::string, Rational>;

const RationalFunction Z = RationalFunction::z();

RationalFunction C(const FieldValue& c) { return RationalFunction(c); }
RationalFunction lin(const FieldValue& p) { return Z - C(p); }

Rational get(const Params& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + k);
  return it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstraintViolated, what);
}

SpectralCurve gauss(const Params& p) {
  Rational l0 = get(p, "lambda0"), l1 = get(p, "lambda1"), li = get(p, "lambdaInf");
  require(l0 != 0 && l1 != 0 && li != 0, "lambda0, lambda1, lambdaInf must be nonzero");
  Rational L = (l0 + l1 + li) * (l0 + l1 - li) * (l0 - l1 + li) * (l0 - l1 - li);
  require(L != 0, "lambdaInf must differ from +-(lambda0 +- lambda1)");
  FieldValue s = sqrt_in_field(L, L);
  FieldValue b0p = -FieldValue(Rational((l0 + li) * (l0 + li) - l1 * l1)) / s;
  FieldValue b0m = -FieldValue(Rational((l0 - li) * (l0 - li) - l1 * l1)) / s;
  FieldValue b1p = FieldValue(Rational((l1 + li) * (l1 + li) - l0 * l0)) / s;
  FieldValue b1m = FieldValue(Rational((l1 - li) * (l1 - li) - l0 * l0)) / s;
  SpectralCurve c;
  c.name = "gauss";
  c.parameters = p;
  c.radicand = L;
  Rational li2 = li * li;
  c.x = (Z + C(1) / Z).scaled(s / FieldValue(Rational(4 * li2))) + C(Rational((li2 + l0 * l0 - l1 * l1) / (2 * li2)));
  c.y = (Z * (Z * Z - C(1))).scaled(FieldValue(Rational(4 * li2 * li)) / s) /
        (lin(b0p) * lin(b0m) * lin(b1p) * lin(b1m));
  c.root_hints = {b0p, b0m, b1p, b1m};
  return c;
}

SpectralCurve degenerate_gauss(const Params& p) {
  Rational l1 = get(p, "lambda1"), li = get(p, "lambdaInf");
  require(l1 != 0 && li != 0, "lambda1, lambdaInf must be nonzero");
  require(li != l1 && li != -l1, "lambdaInf must differ from +-lambda1");
  SpectralCurve c;
  c.name = "degenerate-gauss";
  c.parameters = p;
  Rational li2 = li * li, l12 = l1 * l1;
  c.x = C(Rational(l12 - li2)) / (Z * Z - C(li2));
  c.y = -(Z * (Z * Z - C(li2))) / (Z * Z - C(l12));
  c.root_hints = {FieldValue(l1), FieldValue(Rational(-l1)), FieldValue(li), FieldValue(Rational(-li))};
  return c;
}

SpectralCurve kummer(const Params& p) {
  Rational l0 = get(p, "lambda0"), li = get(p, "lambdaInf");
  require(l0 != 0, "lambda0 must be nonzero");
  require(li != l0 && li != -l0, "lambdaInf must differ from +-lambda0");
  Rational d = li * li - l0 * l0;
  FieldValue s = sqrt_in_field(d, d);
  FieldValue bp = FieldValue(Rational(li + l0)) / s, bm = FieldValue(Rational(li - l0)) / s;
  SpectralCurve c;
  c.name = "kummer";
  c.parameters = p;
  c.radicand = d;
  c.x = (Z + C(1) / Z).scaled(s) - C(Rational(2 * li));
  c.y = (Z * Z - C(1)) / (lin(bp) * lin(bm)).scaled(2);
  c.root_hints = {bp, bm};
  return c;
}

SpectralCurve legendre(const Params& p) {
  Rational li = get(p, "lambdaInf");
  require(li != 0, "lambdaInf must be nonzero");
  SpectralCurve c;
  c.name = "legendre";
  c.parameters = p;
  c.x = (Z + C(1) / Z).scaled(Rational(1, 2));
  c.y = Z.scaled(Rational(2 * li)) / (Z * Z - C(1));
  return c;
}

SpectralCurve bessel(const Params& p) {
  Rational l0 = get(p, "lambda0");
  require(l0 != 0, "lambda0 must be nonzero");
  SpectralCurve c;
  c.name = "bessel";
  c.parameters = p;
  c.x = (Z * Z - C(1)).scaled(Rational(4 * l0 * l0));
  c.y = Z / (Z * Z - C(1)).scaled(Rational(4 * l0));
  return c;
}

SpectralCurve whittaker(const Params& p) {
  Rational li = get(p, "lambdaInf");
  require(li != 0, "lambdaInf must be nonzero");
  SpectralCurve c;
  c.name = "whittaker";
  c.parameters = p;
  c.x = C(Rational(-4 * li)) / (Z * Z - C(1));
  c.y = Z.scaled(Rational(1, 2));
  return c;
}

SpectralCurve weber(const Params& p) {
  Rational li = get(p, "lambdaInf");
  require(li != 0, "lambdaInf must be nonzero");
  FieldValue s = sqrt_in_field(li, li);
  SpectralCurve c;
  c.name = "weber";
  c.parameters = p;
  c.radicand = li;
  c.x = (Z + C(1) / Z).scaled(s);
  c.y = (Z - C(1) / Z).scaled(s / FieldValue(2));
  return c;
}

SpectralCurve degenerate_bessel(const Params& p) {
  SpectralCurve c;
  c.name = "degenerate-bessel";
  c.parameters = p;
  c.x = Z * Z;
  c.y = C(1) / Z;
  return c;
}

SpectralCurve airy(const Params& p) {
  SpectralCurve c;
  c.name = "airy";
  c.parameters = p;
  c.x = Z * Z;
  c.y = Z;
  return c;
}

}  // namespace

const std::vector<CurveCatalogEntry>& curve_catalog() {
  static const std::vector<CurveCatalogEntry> catalog = {
      {"gauss",
       {"lambda0", "lambda1", "lambdaInf"},
       {"lambda0, lambda1, lambdaInf != 0", "lambdaInf != +-(lambda0 +- lambda1)"},
       {"0", "1", "inf"},
       gauss},
      {"degenerate-gauss",
       {"lambda1", "lambdaInf"},
       {"lambda1, lambdaInf != 0", "lambdaInf != +-lambda1"},
       {"1", "inf"},
       degenerate_gauss},
      {"kummer", {"lambda0", "lambdaInf"}, {"lambda0 != 0", "lambdaInf != +-lambda0"}, {"0", "inf"}, kummer},
      {"legendre", {"lambdaInf"}, {"lambdaInf != 0"}, {"inf"}, legendre},
      {"bessel", {"lambda0"}, {"lambda0 != 0"}, {"0"}, bessel},
      {"whittaker", {"lambdaInf"}, {"lambdaInf != 0"}, {"inf"}, whittaker},
      {"weber", {"lambdaInf"}, {"lambdaInf != 0"}, {"inf"}, weber},
      {"degenerate-bessel", {}, {}, {}, degenerate_bessel},
      {"airy", {}, {}, {}, airy},
  };
  return catalog;
}

const CurveCatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : curve_catalog()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::UnknownCurve, "unknown curve " + name);
}

SpectralCurve build_curve(const std::string& name, const std::map<std::string, Rational>& parameters) {
  const CurveCatalogEntry& e = catalog_entry(name);
  for (const auto& [k, v] : parameters) {
    (void)v;
    if (std::find(e.parameter_names.begin(), e.parameter_names.end(), k) == e.parameter_names.end()) {
      throw Error(ErrorKind::InvalidArgument, "curve " + name + " has no parameter " + k);
    }
  }
  return e.build(parameters);
}

SpectralCurve build_curve(const std::string& name, const std::vector<Rational>& parameters) {
  const CurveCatalogEntry& e = catalog_entry(name);
  if (parameters.size() != e.parameter_names.size()) {
    throw Error(ErrorKind::InvalidArgument, "curve " + name + " takes " + std::to_string(e.parameter_names.size()) +
                                                " parameters");
  }
  std::map<std::string, Rational> m;
  for (size_t i = 0; i < parameters.size(); ++i) m[e.parameter_names[i]] = parameters[i];
  return e.build(m);
}

}  // namespace qcurve
