#include "qcurve/free_energy.hpp"

#include "qcurve/errors.hpp"

namespace qcurve {

namespace {

std::vector<FieldValue> candidates(const CurveGeometry& geom) {
  std::vector<FieldValue> c = geom.curve.root_hints;
  for (const auto& r : geom.ramification) {
    if (!r.infinite) c.push_back(r.value);
  }
  for (long v : {0L, 1L, -1L}) c.emplace_back(v);
  return c;
}

// Res_r[Phi omega] for a residue-free omega. A log term is traded for its
// derivative: Res[L omega] = -Res[Omega dL], Omega the local primitive of
// omega with zero constant term.
FieldValue residue_against(const LogRational& phi, const RationalFunction& omega, const Point& r) {
  if (omega.is_zero()) return FieldValue();
  int v_omega = omega.valuation(r) - (r.infinite ? 2 : 0);
  int v_phi = phi.rational.is_zero() ? 0 : phi.rational.valuation(r);
  // each factor is needed through exponent -1 minus the other's valuation
  LaurentSeries w = expand_differential(omega, r, std::max(-v_phi, v_omega) + 3);

  FieldValue total;
  if (!phi.rational.is_zero()) {
    LaurentSeries prod = expand_function(phi.rational, r, std::max(-v_omega, v_phi) + 3) * w;
    total += prod.coeff(-1);
  }
  if (!phi.logs.empty()) {
    // Omega has valuation >= v_omega + 1 and dL has valuation >= -1.
    LaurentSeries Omega = w.primitive();
    for (const auto& [c, p] : phi.logs) {
      RationalFunction dl = RationalFunction(1) / (RationalFunction::z() - RationalFunction(p));
      LaurentSeries dL = expand_differential(dl, r, std::max(-v_omega, 0) + 3);
      total -= c * (Omega * dL).coeff(-1);
    }
  }
  return total;
}

}  // namespace

LogRational phi_primitive(const CurveGeometry& geometry) {
  return antiderivative(geometry.curve.y * geometry.dx, candidates(geometry), geometry.curve.field());
}

FreeEnergyResult free_energy(RecursionTable& table, int g) {
  return free_energy(table, g, phi_primitive(table.geometry()));
}

FreeEnergyResult free_energy(RecursionTable& table, int g, const LogRational& phi) {
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "free_energy needs g >= 2");
  RationalFunction omega = table.to_function(table.w(g, 1));
  FreeEnergyResult out;
  out.g = g;
  FieldValue sum;
  for (const auto& r : table.points()) {
    FieldValue c = residue_against(phi, omega, r);
    out.per_ramification_contributions[r] = c;
    sum += c;
  }
  out.value = sum / FieldValue(2 - 2 * g);
  return out;
}

}  // namespace qcurve
