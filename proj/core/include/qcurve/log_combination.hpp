#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcurve/field.hpp"

namespace qcurve {

/// Formal sum  sum_i c_i log(u_i)  with nonzero field arguments.
///
/// Logarithms are formal: log(-1) is torsion and is dropped, so log(u) and
/// log(-u) are the same symbol. Quadratic-irrational arguments are paired with
/// their conjugates (norm trick) before the zero test.
class LogCombination {
 public:
  LogCombination() = default;
  static LogCombination log_of(const FieldValue& arg, const FieldValue& coeff = FieldValue(1));

  void add(const FieldValue& coeff, const FieldValue& arg);
  LogCombination& operator+=(const LogCombination& o);
  LogCombination& operator-=(const LogCombination& o);
  LogCombination& operator*=(const FieldValue& s);
  friend LogCombination operator+(LogCombination a, const LogCombination& b) { return a += b; }
  friend LogCombination operator-(LogCombination a, const LogCombination& b) { return a -= b; }
  friend LogCombination operator*(LogCombination a, const FieldValue& s) { return a *= s; }

  bool empty() const { return terms_.empty(); }
  const std::vector<std::pair<FieldValue, FieldValue>>& terms() const { return terms_; }

  /// Exact zero test; throws ResidualLogSymbol on an unpaired irrational argument.
  bool is_zero() const;
  std::string str() const;

 private:
  // (coefficient, argument) with arguments in canonical sign and merged.
  std::vector<std::pair<FieldValue, FieldValue>> terms_;
};

}  // namespace qcurve
