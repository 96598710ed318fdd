#pragma once

#include <string>
#include <vector>

#include "qcurve/expression.hpp"

namespace qcurve {

using NuPoint = std::map<std::string, Rational>;  // label -> nu_j = nu_{j+} - nu_{j-}

/// Labels carrying a Voros coefficient.
const std::vector<std::string>& voros_labels(const std::string& curve);
/// "0" -> "lambda0", "1" -> "lambda1", "inf" -> "lambdaInf".
std::string lambda_parameter(const std::string& label);

/// F_g as a symbolic expression; g = 0, 1 carry logs.
FreeEnergyExpression oracle_free_energy_expression(const std::string& curve, int g);
/// F_g, g >= 2, at a rational parameter point. Throws PoleOfFormula on a wall.
Rational oracle_free_energy(const std::string& curve, int g, const ParameterPoint& lambda);
/// sum_{g <= g_max} h^{2g-2} F_g
FreeEnergyExpression free_energy_series_expression(const std::string& curve, int g_max);

/// V^{(j)}_m, m >= 1.
Rational oracle_voros(const std::string& curve, const std::string& label, int m, const ParameterPoint& lambda,
                      const NuPoint& nu);
/// sum_{m=1}^{order} h^m V^{(j)}_m
HbarSeries oracle_voros_series(const std::string& curve, const std::string& label, const ParameterPoint& lambda,
                               const NuPoint& nu, int order);

/// log Lambda + R_j as an expression with explicit h.
FreeEnergyExpression three_term_rhs(const std::string& curve, const std::string& label);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

/// V^{(j)} against the shifted difference of F, through h^order.
CheckResult check_voros_relation(const std::string& curve, const std::string& label, const ParameterPoint& lambda,
                             const NuPoint& nu, int order, bool nu_correction = true);
/// Against a given Voros series instead of the oracle.
CheckResult check_voros_relation(const std::string& curve, const std::string& label, const ParameterPoint& lambda,
                             const NuPoint& nu, const HbarSeries& voros, bool nu_correction = true);
/// X_j F = rhs through h^order.
CheckResult check_difference_equation(const FreeEnergyExpression& f, const FreeEnergyExpression& rhs,
                                      const ParameterPoint& lambda, const std::string& param, int order);
CheckResult check_three_term(const std::string& curve, const std::string& label, const ParameterPoint& lambda,
                             int order);

/// Right side of the k-th Gauss contiguity relation (k = 1, 2, 3) and the nu shift it pairs with.
FreeEnergyExpression gauss_contiguity_rhs(int k, const NuPoint& nu);
NuPoint gauss_contiguity_shift(int k, const NuPoint& nu);
CheckResult check_contiguity_gauss(const ParameterPoint& lambda, const NuPoint& nu, int order);

/// Particular solutions G, H of the Gauss difference equations, summed through g_max.
FreeEnergyExpression gauss_G_expression(int g_max);
FreeEnergyExpression gauss_H_expression(int g_max);
CheckResult check_gauss_GH(const ParameterPoint& lambda, int order);

/// X F = 0 through h^order (second kind) or F(l + h) - F(l) = 0 (first kind).
bool is_homogeneous_solution(const FreeEnergyExpression& f, const ParameterPoint& at, const std::string& param,
                             int order, bool second_kind);

/// Bernoulli generating functions to w^order and the polynomial identities for n <= 12.
std::vector<std::pair<std::string, CheckResult>> check_bernoulli_identities(int order);

}  // namespace qcurve
