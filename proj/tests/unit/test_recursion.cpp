#include <doctest.h>

#include "common/golden.hpp"
#include "qcurve/errors.hpp"
#include "qcurve/recursion.hpp"

using namespace qcurve;

namespace {

RationalFunction Z = RationalFunction::z();

std::string describe(const std::string& curve, const std::vector<Rational>& p) {
  std::string s = curve + "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

}  // namespace

TEST_CASE("reference correlation functions") {
  std::map<std::string, std::vector<std::unique_ptr<RecursionTable>>> tables;
  for (const auto& wc : golden::w_cases()) {
    auto& ts = tables[wc.curve];
    if (ts.empty()) {
      for (const auto& p : golden::parameter_points(wc.curve)) {
        ts.push_back(std::make_unique<RecursionTable>(analyze_geometry(build_curve(wc.curve, p))));
      }
    }
    const auto& pts = golden::parameter_points(wc.curve);
    for (size_t i = 0; i < ts.size(); ++i) {
      RecursionTable& t = *ts[i];
      INFO(describe(wc.curve, pts[i]), " W_", wc.g, ",", wc.n);
      golden::Products prod = wc.build(t.geometry().curve);
      const PoleBasisDifferential& w = t.w(wc.g, wc.n);
      CHECK(w.arity == wc.n);
      if (prod.empty()) {
        CHECK(w.is_zero());
      } else {
        CHECK(w == t.from_products(prod));
      }
    }
  }
}

TEST_CASE("symmetry of the recursion output") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::vector<Rational>>>{
           {"gauss", {3, 1, 1}}, {"kummer", {2, 3}}, {"weber", {2}}, {"bessel", {Rational(3, 2)}}}) {
    INFO(name);
    RecursionTable t(analyze_geometry(build_curve(name, p)));
    t.set_check_symmetry(true);
    CHECK_NOTHROW(t.w(0, 4));
    CHECK_NOTHROW(t.w(1, 2));
    CHECK_NOTHROW(t.w(2, 1));
  }
}

TEST_CASE("residue-free with poles on effective points") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::vector<Rational>>>{
           {"gauss", {5, 2, 1}}, {"degenerate-gauss", {3, Rational(1, 2)}}, {"legendre", {2}},
           {"whittaker", {3}}, {"degenerate-bessel", {}}, {"airy", {}}}) {
    INFO(name);
    RecursionTable t(analyze_geometry(build_curve(name, p)));
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {0, 4}, {2, 1}}) {
      const PoleBasisDifferential& w = t.w(g, n);
      for (const auto& [key, c] : w.terms) {
        CHECK(!c.is_zero());
        for (const auto& f : key) {
          const Point& r = t.points()[f.point];
          CHECK(t.geometry().is_effective(r));
          // dz/(z-r)^p residue-free needs p >= 2; z^p dz at infinity needs p >= 0
          if (r.infinite) {
            CHECK(f.power >= 0);
          } else {
            CHECK(f.power >= 2);
          }
        }
      }
    }
  }
}

TEST_CASE("ineffective points contribute nothing") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::vector<Rational>>>{
           {"bessel", {1}}, {"degenerate-bessel", {}}, {"airy", {}}}) {
    INFO(name);
    RecursionTable t(analyze_geometry(build_curve(name, p)));
    int idx = -1;
    for (size_t i = 0; i < t.points().size(); ++i) {
      if (t.points()[i].infinite) idx = static_cast<int>(i);
    }
    REQUIRE(idx >= 0);
    CHECK(!t.geometry().is_effective(t.points()[idx]));
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {2, 1}}) {
      CHECK(t.contribution(idx, g, n).is_zero());
    }
  }
}

TEST_CASE("bergman kernel along the involution") {
  CHECK(bergman_at_sigma(-Z) == RationalFunction(FieldValue(Rational(-1, 4))) / (Z * Z));
  RationalFunction d = Z * Z - RationalFunction(1);
  CHECK(bergman_at_sigma(RationalFunction(1) / Z) == RationalFunction(-1) / (d * d));
}

TEST_CASE("pole basis round trip") {
  RecursionTable t(analyze_geometry(build_curve("weber", std::vector<Rational>{1})));
  const PoleBasisDifferential& w = t.w(1, 1);
  CHECK(t.from_products({{FieldValue(1), {t.to_function(w)}}}) == w);
  FieldValue z0(Rational(1, 3));
  RationalFunction ref = -(pow(Z, 3) / pow(Z * Z - RationalFunction(1), 4));
  CHECK(t.evaluate(w, {z0}) == ref.evaluate(z0));
  CHECK_THROWS_AS(t.from_products({{FieldValue(1), {RationalFunction(1) / (Z - RationalFunction(5))}}}), Error);
}
