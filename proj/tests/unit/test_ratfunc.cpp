#include <doctest.h>

#include <random>

#include "qcurve/ratfunc.hpp"

using namespace qcurve;

namespace {

RationalFunction Z = RationalFunction::z();

RationalFunction lin(long p) { return Z - RationalFunction(p); }

RationalFunction random_rf(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-5, 5), deg(0, 3), root(-4, 4);
  std::vector<FieldValue> num(deg(rng) + 1);
  for (auto& v : num) v = FieldValue(c(rng));
  Polynomial den(1);
  int k = deg(rng) + 1;
  for (int i = 0; i < k; ++i) den = den * Polynomial::linear_root(FieldValue(root(rng)));
  return RationalFunction(Polynomial(num), den);
}

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK((RationalFunction(1) / lin(1)).derivative() == RationalFunction(-1) / (lin(1) * lin(1)));
  CHECK((Z * Z).compose(RationalFunction(1) / Z) == RationalFunction(1) / (Z * Z));
  CHECK(RationalFunction(1) / lin(1) + RationalFunction(1) / lin(-1) == Z.scaled(2) / (Z * Z - RationalFunction(1)));
  CHECK((lin(2) * lin(3)) / lin(2) == lin(3));
  CHECK_THROWS_AS(Z / RationalFunction(), Error);
}

TEST_CASE("laurent expansions") {
  // 1/(z^2 - 1) at 1: long division gives 1/2 t^-1 - 1/4 + 1/8 t - 1/16 t^2
  RationalFunction f = RationalFunction(1) / (Z * Z - RationalFunction(1));
  LaurentSeries s = laurent_expand(f, Point::at(1), 2);
  CHECK(s.valuation() == -1);
  CHECK(s.coeff(-1) == FieldValue(Rational(1, 2)));
  CHECK(s.coeff(0) == FieldValue(Rational(-1, 4)));
  CHECK(s.coeff(1) == FieldValue(Rational(1, 8)));
  CHECK(s.coeff(2) == FieldValue(Rational(-1, 16)));
  CHECK_THROWS_AS(s.coeff(3), Error);
  LaurentSeries w = laurent_expand(Z * Z, Point::infinity(), 3);
  CHECK(w.valuation() == -2);
  CHECK(w.coeff(-2) == FieldValue(1));
  CHECK(w.coeff(0) == FieldValue(0));
  // z/(z^2-1) at 1: 1/2 t^-1 + 1/4 - 1/8 t
  LaurentSeries u = laurent_expand(Z / (Z * Z - RationalFunction(1)), Point::at(1), 1);
  CHECK(u.coeff(-1) == FieldValue(Rational(1, 2)));
  CHECK(u.coeff(0) == FieldValue(Rational(1, 4)));
  CHECK(u.coeff(1) == FieldValue(Rational(-1, 8)));
}

TEST_CASE("residues") {
  CHECK(residue(RationalFunction(1) / Z, Point::at(0)) == FieldValue(1));
  CHECK(residue(RationalFunction(1) / (lin(3) * lin(3)), Point::at(3)).is_zero());
  CHECK(residue(RationalFunction(1) / Z, Point::infinity()) == FieldValue(-1));
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    RationalFunction f = random_rf(rng);
    FieldValue total = residue(f, Point::infinity());
    for (const auto& [p, k] : poles_of(f)) {
      (void)k;
      total += residue(f, Point::at(p));
      CHECK(residue(f, Point::at(p)) == laurent_expand(f, Point::at(p), 0).coeff(-1));
    }
    CHECK(total.is_zero());
  }
}

TEST_CASE("laurent series re-summed near the center") {
  RationalFunction f = (Z * Z * Z + RationalFunction(2)) / (lin(1) * lin(1) * lin(-2));
  LaurentSeries s = laurent_expand(f, Point::at(1), 12);
  Rational t(1, 1000);
  FieldValue sum;
  for (int e = s.valuation(); e <= 12; ++e) sum += s.coeff(e) * pow(FieldValue(t), e);
  FieldValue exact = f.evaluate(FieldValue(Rational(1) + t));
  FieldValue diff = sum - exact;
  CHECK(abs(diff.a()) < Rational(1, Integer("1000000000000000000000000000000")));
}

TEST_CASE("antiderivatives") {
  LogRational F = antiderivative(Z.scaled(2) / (Z * Z - RationalFunction(1)));
  CHECK(F.rational.is_zero());
  CHECK(F.logs.size() == 2);
  for (const auto& [c, p] : F.logs) CHECK(c == FieldValue(1));
  LogRational G = antiderivative(RationalFunction(1) / (lin(3) * lin(3)));
  CHECK(G.logs.empty());
  CHECK(G.rational == RationalFunction(-1) / lin(3));
  std::mt19937 rng(99);
  for (int i = 0; i < 30; ++i) {
    RationalFunction f = random_rf(rng) + Z * Z;
    CHECK(derivative(antiderivative(f)) == f);
  }
}

TEST_CASE("evaluate_difference") {
  LogRational F{RationalFunction(-1) / lin(3), {}};
  CHECK(evaluate_difference(F, Point::at(4), Point::at(2)).value == FieldValue(-2));
  LogRational G{RationalFunction(-1) / Z, {}};
  CHECK(evaluate_difference(G, Point::infinity(), Point::at(1)).value == FieldValue(1));
  LogRational H{RationalFunction(1) / lin(1), {}};
  CHECK_THROWS_AS(evaluate_difference(H, Point::at(1), Point::at(0)), Error);
  LogRational L{RationalFunction(), {{FieldValue(1), FieldValue(0)}}};
  EndpointValue v = evaluate_difference(L, Point::at(4), Point::at(2));
  LogCombination expect;
  expect.add(1, 2);
  CHECK((v.logs - expect).is_zero());
}

TEST_CASE("rational interpolation") {
  std::vector<std::pair<FieldValue, FieldValue>> sq, inv;
  for (int i = 1; i <= 5; ++i) sq.emplace_back(FieldValue(i), FieldValue(i * i));
  for (int i = 1; i <= 4; ++i) inv.emplace_back(FieldValue(i), FieldValue(Rational(1, i)));
  CHECK(rational_interpolate(sq, 2, 0) == Z * Z);
  CHECK(rational_interpolate(inv, 0, 1) == RationalFunction(1) / Z);
  CHECK_THROWS_AS(rational_interpolate(sq, 1, 0), Error);
  // over Q(sqrt 5)
  FieldValue s = FieldValue::sqrt_of(5);
  RationalFunction f = (Z.scaled(s) + RationalFunction(1)) / (Z * Z + RationalFunction(3));
  std::vector<std::pair<FieldValue, FieldValue>> ss;
  for (int i = 0; i < 7; ++i) ss.emplace_back(FieldValue(i), f.evaluate(FieldValue(i)));
  CHECK(rational_interpolate(ss, 2, 2) == f);
}

TEST_CASE("roots over a quadratic field") {
  FieldValue s = FieldValue::sqrt_of(5);
  Polynomial p = Polynomial::linear_root(s) * Polynomial::linear_root(-s) * Polynomial::linear_root(FieldValue(2));
  auto roots = find_roots(p, {}, s.field());
  CHECK(roots.size() == 3);
  Polynomial q = Polynomial::linear_root(FieldValue(1) + s) * Polynomial::linear_root(FieldValue(3));
  CHECK(find_roots(q, {}, s.field()).size() == 2);
  Polynomial irreducible({FieldValue(-2), FieldValue(0), FieldValue(1)});
  CHECK_THROWS_AS(find_roots(irreducible, {}, s.field()), Error);
}
