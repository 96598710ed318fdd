#pragma once

#include "qcurve/field.hpp"

namespace qcurve {

/// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli_number(int n);
/// B_n(t) by the binomial sum over B_{n-k}.
FieldValue bernoulli_polynomial(int n, const FieldValue& t);
Rational bernoulli_polynomial(int n, const Rational& t);
Integer binomial(long n, long k);

}  // namespace qcurve
