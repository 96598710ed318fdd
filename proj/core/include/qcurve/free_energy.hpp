#pragma once

#include <map>

#include "qcurve/recursion.hpp"

namespace qcurve {

struct FreeEnergyResult {
  int g = 0;
  FieldValue value;
  /// Res_r[Phi W_{g,1}] before the 1/(2-2g) factor.
  std::map<Point, FieldValue> per_ramification_contributions;
};

/// Primitive of y dx.
LogRational phi_primitive(const CurveGeometry& geometry);

/// F_g, g >= 2, summed over every ramification point.
FreeEnergyResult free_energy(RecursionTable& table, int g);
/// Same with a caller-supplied primitive (any constant shift must not matter).
FreeEnergyResult free_energy(RecursionTable& table, int g, const LogRational& phi);

}  // namespace qcurve
