#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "qcurve/curve.hpp"

namespace qcurve {

/// dz/(z - r)^power for a finite point r, z^power dz when r is infinity.
/// `point` indexes the ramification list of the curve.
struct PoleForm {
  int point = 0;
  int power = 0;
  friend auto operator<=>(const PoleForm&, const PoleForm&) = default;
};

/// Sorted multiset of forms, one per variable slot.
using FormKey = std::vector<PoleForm>;

/// Symmetric multidifferential: each key contributes c times the sum over
/// its distinct arrangements across the slots.
struct PoleBasisDifferential {
  int arity = 0;
  std::map<FormKey, FieldValue> terms;

  bool is_zero() const { return terms.empty(); }
  /// key must be sorted
  void add(const FormKey& key, const FieldValue& c);
  friend bool operator==(const PoleBasisDifferential& a, const PoleBasisDifferential& b) {
    return a.arity == b.arity && a.terms == b.terms;
  }
};

/// Memoized Eynard-Orantin recursion for one curve.
class RecursionTable {
 public:
  /// threads <= 0: QCURVE_THREADS, else hardware concurrency.
  explicit RecursionTable(CurveGeometry geometry, int threads = 0);
  ~RecursionTable();
  RecursionTable(const RecursionTable&) = delete;
  RecursionTable& operator=(const RecursionTable&) = delete;

  const CurveGeometry& geometry() const { return geom_; }
  const std::vector<Point>& points() const { return geom_.ramification; }
  int threads() const { return threads_; }

  /// W_{g,n}, 2g - 2 + n >= 1.
  const PoleBasisDifferential& w(int g, int n);
  /// The residue term of the recursion at points()[r] alone, effective or not.
  PoleBasisDifferential contribution(int r, int g, int n);

  /// Cross-check every slot choice of the recursion output against the symmetric form.
  void set_check_symmetry(bool on) { check_symmetry_ = on; }

  RationalFunction form_function(const PoleForm& f) const;
  RationalFunction to_function(const PoleBasisDifferential& w) const;
  /// Coefficient of dz_1...dz_n at the given point.
  FieldValue evaluate(const PoleBasisDifferential& w, const std::vector<FieldValue>& z) const;
  /// Sum of c * prod_i f_i(z_i) dz_i rewritten in the pole basis; throws if
  /// the result is not symmetric or has poles off the ramification points.
  PoleBasisDifferential from_products(
      const std::vector<std::pair<FieldValue, std::vector<RationalFunction>>>& products) const;
  /// Single-slot decomposition into pole forms.
  std::vector<std::pair<PoleForm, FieldValue>> decompose(const RationalFunction& f) const;

  struct Local;

 private:
  struct Elem;
  struct Job;
  std::vector<std::pair<PoleForm, FieldValue>> decompose_with_residues(const RationalFunction& f) const;
  PoleBasisDifferential compute(int g, int n, const std::vector<int>& at, bool check);

  CurveGeometry geom_;
  int threads_;
  bool check_symmetry_ = false;
  std::vector<std::unique_ptr<Local>> local_;
  std::map<std::pair<int, int>, std::unique_ptr<PoleBasisDifferential>> memo_;
  std::recursive_mutex memo_mutex_;
};

/// B(z, sigma(z)) as a coefficient of dz^2.
RationalFunction bergman_at_sigma(const RationalFunction& sigma);

}  // namespace qcurve
