#include "qcurve/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace qcurve {

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli_number(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative Bernoulli index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  while (static_cast<int>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    Rational s;
    for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * table[k];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

FieldValue bernoulli_polynomial(int n, const FieldValue& t) {
  FieldValue s;
  FieldValue tk(1);
  for (int k = 0; k <= n; ++k) {
    s += FieldValue(Rational(binomial(n, k)) * bernoulli_number(n - k)) * tk;
    tk *= t;
  }
  return s;
}

Rational bernoulli_polynomial(int n, const Rational& t) {
  return bernoulli_polynomial(n, FieldValue(t)).rational();
}

}  // namespace qcurve
