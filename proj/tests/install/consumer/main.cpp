#include <iostream>

#include <qcurve/free_energy.hpp>

int main() {
  qcurve::RecursionTable t(qcurve::analyze_geometry(qcurve::build_curve("bessel", std::vector<qcurve::Rational>{1})));
  std::string f2 = qcurve::free_energy(t, 2).value.str();
  std::cout << f2 << '\n';
  return f2 == "1/960" ? 0 : 1;
}
