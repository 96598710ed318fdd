#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcurve/ratfunc.hpp"

namespace qcurve {

/// A genus-0 spectral curve (x(z), y(z)).
struct SpectralCurve {
  std::string name = "custom";
  RationalFunction x;
  RationalFunction y;
  /// Named parameter values, e.g. lambda0, lambdaInf.
  std::map<std::string, Rational> parameters;
  /// Radicand of the coefficient field (1 when everything is rational).
  Rational radicand = 1;
  /// Known special points; they make root finding cheap on quartic factors.
  std::vector<FieldValue> root_hints;

  const Radicand* field() const;
};

/// Preimage pair of a singular point j that is not a branch point.
struct SingularLabel {
  std::string name;  // "0", "1", "inf", ...
  Point point;       // j on the x-line
  Point plus;        // residue of y dx is +lambda
  Point minus;
  FieldValue lambda;
  int rho = 0;
};

/// One point of B = x^{-1}(Sing) with its divisor name ("0+", "inf-", "inf").
struct BPoint {
  std::string name;
  Point point;
  Point image;
  int rho = 0;
  FieldValue c_beta;  // residue of Delta dx
};

struct CurveGeometry {
  SpectralCurve curve;
  RationalFunction sigma;
  RationalFunction dx;     // x'(z)
  RationalFunction delta;  // y - y o sigma
  std::vector<Point> ramification;
  std::vector<Point> effective;
  /// Sing(P) on the x-line with index rho.
  std::vector<std::pair<Point, int>> sing;
  std::vector<SingularLabel> labels;
  std::vector<BPoint> b_points;
  /// Coefficients of y^2 + q0(x) y + r0(x) = 0.
  RationalFunction q0;
  RationalFunction r0;

  bool is_effective(const Point& p) const;
  const SingularLabel& label(const std::string& name) const;
  const BPoint* find_b(const std::string& name) const;
  std::vector<Point> b_set() const;
  std::vector<Point> b1_set() const;
};

/// Catalog entry for one of the nine hypergeometric-family curves.
struct CurveCatalogEntry {
  std::string name;
  std::vector<std::string> parameter_names;
  std::vector<std::string> constraints;
  std::vector<std::string> labels;
  std::function<SpectralCurve(const std::map<std::string, Rational>&)> build;
};

const std::vector<CurveCatalogEntry>& curve_catalog();
const CurveCatalogEntry& catalog_entry(const std::string& name);

/// Throws UnknownCurve, ConstraintViolated, InvalidArgument (missing parameter).
SpectralCurve build_curve(const std::string& name, const std::map<std::string, Rational>& parameters);
/// Parameters given in catalog order.
SpectralCurve build_curve(const std::string& name, const std::vector<Rational>& parameters);

/// Label name of a point on the x-line ("inf" for infinity).
std::string point_label(const Point& p);

/// f(p) as a point of P^1 (infinity at a pole).
Point image(const RationalFunction& f, const Point& p);
/// All preimages of a point under a degree-2 map, ramified points listed once.
std::vector<Point> preimages(const RationalFunction& x, const Point& target, const std::vector<FieldValue>& hints,
                             const Radicand* field);

/// The deck involution: x(sigma(z)) = x(z), sigma != id. Throws NotDegreeTwo, ConjugationNotFound.
RationalFunction conjugation_map(const RationalFunction& x);

/// F with F(x(z)) = f(z) for sigma-invariant f. Throws NotSigmaInvariant.
RationalFunction pushforward(const RationalFunction& f, const RationalFunction& x, const RationalFunction& sigma);

/// Throws NotDegreeTwo, NonSimpleRamification, ConjugationNotFound, ConstraintViolated.
CurveGeometry analyze_geometry(const SpectralCurve& curve);

/// Q0(x) = q0^2/4 - r0.
RationalFunction classical_potential(const CurveGeometry& geometry);

}  // namespace qcurve
