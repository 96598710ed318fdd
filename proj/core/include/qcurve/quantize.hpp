#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcurve/closed_forms.hpp"
#include "qcurve/recursion.hpp"

namespace qcurve {

/// Weights nu_beta on B = x^{-1}(Sing), keyed by b-point name ("0+", "inf-", "inf").
struct QuantizationDivisor {
  std::map<std::string, Rational> weights;

  /// nu_{j+/-} = +/- nu_j / 2 + 1/|B|, and 1/|B| on unpaired points.
  static QuantizationDivisor canonical(const CurveGeometry& geometry, const NuPoint& nu);
  Rational weight(const std::string& name) const;
  /// nu_j = nu_{j+} - nu_{j-} per singular label.
  NuPoint differences(const CurveGeometry& geometry) const;
  /// Throws InvalidArgument unless the support lies in B and the weights sum to 1.
  void validate(const CurveGeometry& geometry) const;
};

/// h^2 psi'' + (q0 + h q1) h psi' + (r0 + h r1 + h^2 r2) psi = 0, coefficients in x.
struct QuantumCurve {
  RationalFunction q0, q1, r0, r1, r2;
};

QuantumCurve quantize(const CurveGeometry& geometry, const QuantizationDivisor& divisor);

/// Checks the defining identities in z directly, without pushing forward.
bool verify_quantization(const CurveGeometry& geometry, const QuantizationDivisor& divisor,
                         const QuantumCurve& candidate);

/// Q = q^2/4 - r + (h/2) dq/dx = Q0 + h Q1 + h^2 Q2.
struct SLPotential {
  RationalFunction q0, q1, q2;
};

SLPotential sl_form(const QuantumCurve& qc);

/// S_m(x(z)), m = -1 .. m_max, for the sheet S_{-1}(x(z)) = y(z).
struct WkbExpansion {
  int m_max = 0;
  std::vector<RationalFunction> terms;  // terms[m + 1] = S_m

  const RationalFunction& s(int m) const { return terms.at(static_cast<size_t>(m + 1)); }
};

/// Throws BranchAmbiguity when y is not a root of S^2 + q0 S + r0.
WkbExpansion riccati_expand(const QuantumCurve& qc, const CurveGeometry& geometry, int m_max);

struct VorosCoefficient {
  std::string label;
  std::vector<FieldValue> coefficients;  // index m - 1
};

/// From the correlation functions integrated along the divisor.
VorosCoefficient voros_from_w(RecursionTable& table, const QuantizationDivisor& divisor, const std::string& label,
                              int m_max);
/// From the WKB terms; throws ResidualLogSymbol when logs fail to cancel.
VorosCoefficient voros_riccati(const WkbExpansion& wkb, const CurveGeometry& geometry, const std::string& label,
                               int m_max);

HbarSeries to_series(const VorosCoefficient& v);

}  // namespace qcurve
