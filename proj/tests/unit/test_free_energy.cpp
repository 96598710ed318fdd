#include <doctest.h>

#include "common/golden.hpp"
#include "qcurve/closed_forms.hpp"
#include "qcurve/free_energy.hpp"

using namespace qcurve;

namespace {

Rational computed(const std::string& curve, const std::vector<Rational>& p, int g) {
  RecursionTable t(analyze_geometry(build_curve(curve, p)));
  FieldValue v = free_energy(t, g).value;
  REQUIRE(v.is_rational());
  return v.rational();
}

ParameterPoint as_point(const std::string& curve, const std::vector<Rational>& p) {
  return build_curve(curve, p).parameters;
}

}  // namespace

TEST_CASE("free energies at unit parameters") {
  CHECK(computed("weber", {1}, 2) == Rational(-1, 240));
  CHECK(computed("weber", {1}, 3) == Rational(1, 1008));
  CHECK(computed("bessel", {1}, 2) == Rational(1, 960));
  CHECK(computed("bessel", {1}, 3) == Rational(-1, 16128));
  CHECK(computed("legendre", {1}, 2) == Rational(-1, 64));
  CHECK(computed("legendre", {1}, 3) == Rational(1, 256));
  CHECK(computed("whittaker", {1}, 2) == Rational(-1, 120));
  CHECK(computed("kummer", {1, 3}, 2) == Rational(-1, 3840));
  CHECK(computed("gauss", {3, 1, 1}, 2) == Rational(-661, 216000));
}

TEST_CASE("recursion free energies match the closed forms") {
  for (const std::string curve : {"gauss", "degenerate-gauss", "kummer", "legendre", "bessel", "whittaker", "weber"}) {
    for (const auto& p : golden::parameter_points(curve)) {
      RecursionTable t(analyze_geometry(build_curve(curve, p)));
      for (int g = 2; g <= 4; ++g) {
        INFO(curve, " g = ", g, " at ", p[0].get_str());
        FieldValue v = free_energy(t, g).value;
        REQUIRE(v.is_rational());
        CHECK(v.rational() == oracle_free_energy(curve, g, as_point(curve, p)));
      }
    }
  }
}

TEST_CASE("curves without effective ramification have zero free energy") {
  for (const std::string curve : {"airy", "degenerate-bessel"}) {
    RecursionTable t(analyze_geometry(build_curve(curve, std::vector<Rational>{})));
    for (int g = 2; g <= 4; ++g) CHECK(free_energy(t, g).value.is_zero());
    CHECK(oracle_free_energy(curve, 3, {}) == 0);
  }
}

TEST_CASE("constant shift of the primitive") {
  RecursionTable t(analyze_geometry(build_curve("kummer", std::vector<Rational>{2, 3})));
  LogRational phi = phi_primitive(t.geometry());
  FieldValue base = free_energy(t, 2, phi).value;
  phi.rational += RationalFunction(FieldValue(Rational(17, 3)));
  CHECK(free_energy(t, 2, phi).value == base);
}

TEST_CASE("homogeneity under parameter scaling") {
  for (const Rational s : {Rational(2), Rational(1, 3)}) {
    for (int g : {2, 3}) {
      Rational k = pow(s, 2 - 2 * g);
      CHECK(computed("weber", {s}, g) == k * computed("weber", {1}, g));
      CHECK(computed("kummer", {2 * s, 3 * s}, g) == k * computed("kummer", {2, 3}, g));
      CHECK(computed("gauss", {5 * s, 2 * s, s}, g) == k * computed("gauss", {5, 2, 1}, g));
    }
  }
}

TEST_CASE("gauss free energy is symmetric in its parameters") {
  Rational base = computed("gauss", {5, 2, 1}, 2);
  CHECK(computed("gauss", {2, 5, 1}, 2) == base);
  CHECK(computed("gauss", {1, 2, 5}, 2) == base);
  CHECK(computed("gauss", {5, 1, 2}, 2) == base);
}

TEST_CASE("per-point contributions sum to the total") {
  RecursionTable t(analyze_geometry(build_curve("legendre", std::vector<Rational>{2})));
  FreeEnergyResult r = free_energy(t, 3);
  FieldValue sum;
  for (const auto& [pt, c] : r.per_ramification_contributions) sum += c;
  CHECK(sum * FieldValue(Rational(1) / (2 - 2 * 3)) == r.value);
}
