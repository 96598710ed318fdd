#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcurve/recursion.hpp"

namespace qcurve::golden {

using Products = std::vector<std::pair<FieldValue, std::vector<RationalFunction>>>;

/// A reference correlation function, rebuilt from the curve parameters.
struct WCase {
  std::string curve;
  int g;
  int n;
  std::function<Products(const SpectralCurve&)> build;
};

const std::vector<WCase>& w_cases();

/// Three parameter points per catalog curve (catalog parameter order).
const std::vector<std::vector<Rational>>& parameter_points(const std::string& curve);

Rational param(const SpectralCurve& c, const std::string& name);

}  // namespace qcurve::golden
