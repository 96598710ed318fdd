#include "qcurve/recursion.hpp"

#include <algorithm>
#include <cstdlib>
#include <shared_mutex>
#include <thread>

#include "qcurve/errors.hpp"

namespace qcurve {

namespace {

const RationalFunction kZ = RationalFunction::z();

int env_threads() {
  if (const char* s = std::getenv("QCURVE_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

// Distinct values of a sorted key, each with the key minus one copy.
std::vector<std::pair<PoleForm, FormKey>> split_one(const FormKey& key) {
  std::vector<std::pair<PoleForm, FormKey>> out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0 && key[i] == key[i - 1]) continue;
    FormKey rest;
    rest.reserve(key.size() - 1);
    rest.insert(rest.end(), key.begin(), key.begin() + static_cast<long>(i));
    rest.insert(rest.end(), key.begin() + static_cast<long>(i) + 1, key.end());
    out.emplace_back(key[i], std::move(rest));
  }
  return out;
}

FormKey merged(const FormKey& a, const FormKey& b) {
  FormKey out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// prod over values of C(m(v), m_a(v)): the number of ways the subset split
// of the spectator slots produces a given arrangement of the merged key.
Integer split_weight(const FormKey& a, const FormKey& b) {
  Integer w = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    PoleForm v = (j >= b.size() || (i < a.size() && a[i] < b[j])) ? a[i] : b[j];
    long ma = 0, mb = 0;
    while (i < a.size() && a[i] == v) ++i, ++ma;
    while (j < b.size() && b[j] == v) ++j, ++mb;
    if (ma > 0 && mb > 0) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(ma + mb), static_cast<unsigned long>(ma));
      w *= c;
    }
  }
  return w;
}

}  // namespace

void PoleBasisDifferential::add(const FormKey& key, const FieldValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

RationalFunction bergman_at_sigma(const RationalFunction& sigma) {
  RationalFunction d = kZ - sigma;
  return sigma.derivative() / (d * d);
}

// ------------------------------------------------------------ local tables

// A one-variable factor entering the residue: a stored pole form, the z-side
// expansion element of B(z, z_j) at the residue point, B(z, sigma z) itself,
// or the constant 1 paired with it.
struct RecursionTable::Elem {
  enum Kind { Real = 0, Virtual = 1, BSigma = 2, Unit = 3 };
  int kind = Real;
  int point = 0;
  int power = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

struct RecursionTable::Local {
  Point p;
  int index = 0;
  bool infinite = false;
  RationalFunction kappa;  // 1/(2 Delta x')
  RationalFunction sigma;
  const std::vector<Point>* pts = nullptr;

  std::mutex mu;
  LaurentSeries k_series;
  bool k_ready = false;
  std::map<std::pair<Elem, bool>, LaurentSeries> series;
  std::map<std::pair<Elem, bool>, int> vals;
  std::map<int, LaurentSeries> dk;
  std::shared_mutex t_mu;
  std::map<std::pair<Elem, Elem>, std::vector<FieldValue>> t;

  RationalFunction function(const Elem& e, bool bar) const {
    RationalFunction f;
    switch (e.kind) {
      case Elem::Real: {
        const Point& q = (*pts)[e.point];
        f = q.infinite ? pow(kZ, e.power) : RationalFunction::pole(q.value, e.power);
        break;
      }
      case Elem::Virtual:
        f = infinite ? RationalFunction::pole(FieldValue(), e.power + 2).scaled(FieldValue(e.power + 1))
                     : pow(kZ - RationalFunction(p.value), e.power).scaled(FieldValue(e.power + 1));
        break;
      case Elem::BSigma:
        return bergman_at_sigma(sigma);
      case Elem::Unit:
        return RationalFunction(1);
    }
    if (bar) f = f.compose(sigma) * sigma.derivative();
    return f;
  }

  int valuation(const Elem& e, bool bar) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(e, bar);
    auto it = vals.find(key);
    if (it != vals.end()) return it->second;
    int v = function(e, bar).valuation(p);
    vals.emplace(key, v);
    return v;
  }

  int kernel_valuation() {
    const int v = kappa.valuation(p);
    return infinite ? v - 2 : v;
  }

  LaurentSeries kernel(int prec) {
    std::lock_guard<std::mutex> lock(mu);
    if (!k_ready || k_series.precision() < prec) {
      int want = k_ready ? std::max(prec, 2 * k_series.precision() - kernel_valuation()) : prec + 4;
      k_series = expand_differential(kappa, p, want);
      k_ready = true;
    }
    return k_series;
  }

  LaurentSeries element(const Elem& e, bool bar, int prec) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(e, bar);
    auto it = series.find(key);
    if (it != series.end() && it->second.precision() >= prec) return it->second;
    int want = prec + 4;
    if (it != series.end()) want = std::max(want, it->second.precision() + 8);
    LaurentSeries s = expand_function(function(e, bar), p, want);
    series[key] = s;
    return s;
  }

  // Kernel difference: finite r: (z-r)^k - (sigma z - r)^k; at infinity
  // -(z^{-k-1} - sigma(z)^{-k-1}).
  LaurentSeries kernel_difference(int k, int prec) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = dk.find(k);
    if (it != dk.end() && it->second.precision() >= prec) return it->second;
    RationalFunction d;
    if (infinite) {
      d = -(RationalFunction::pole(FieldValue(), k + 1) - pow(RationalFunction(1) / sigma, k + 1));
    } else {
      RationalFunction c(p.value);
      d = pow(kZ - c, k) - pow(sigma - c, k);
    }
    int want = prec + 4;
    if (it != dk.end()) want = std::max(want, it->second.precision() + 8);
    LaurentSeries s = expand_function(d, p, want);
    dk[k] = s;
    return s;
  }

  int kmin() const { return infinite ? 0 : 1; }
  PoleForm output_form(int k) const { return PoleForm{index, infinite ? k : k + 1}; }

  // T_k = Res kappa a (b o sigma) sigma' D_k dz, indexed from kmin().
  const std::vector<FieldValue>& table(const Elem& a, const Elem& b) {
    auto key = std::make_pair(a, b);
    {
      std::shared_lock<std::shared_mutex> lock(t_mu);
      auto it = t.find(key);
      if (it != t.end()) return it->second;
    }
    std::vector<FieldValue> out;
    const int vk = kernel_valuation(), va = valuation(a, false), vb = valuation(b, true);
    const int vp = vk + va + vb;
    if (vp <= -2) {
      LaurentSeries prod = kernel(-1 - va - vb) * element(a, false, -1 - vk - vb) * element(b, true, -1 - vk - va);
      const int kmax = infinite ? -2 - vp : -1 - vp;
      for (int k = kmin(); k <= kmax; ++k) {
        LaurentSeries d = kernel_difference(k, -vp);
        FieldValue acc;
        for (int j = prod.valuation(); j <= -2; ++j) {
          const int e = -1 - j;
          if (e < d.valuation()) break;
          const FieldValue pj = prod.coeff(j);
          if (pj.is_zero()) continue;
          const FieldValue de = d.coeff(e);
          if (!de.is_zero()) acc += pj * de;
        }
        out.push_back(acc);
      }
      while (!out.empty() && out.back().is_zero()) out.pop_back();
    }
    std::unique_lock<std::shared_mutex> lock(t_mu);
    return t.emplace(key, std::move(out)).first->second;
  }
};

struct RecursionTable::Job {
  Elem a;
  Elem b;
  FormKey spect;
  friend auto operator<=>(const Job&, const Job&) = default;
};

// ------------------------------------------------------------ table

RecursionTable::RecursionTable(CurveGeometry geometry, int threads)
    : geom_(std::move(geometry)), threads_(threads > 0 ? threads : env_threads()) {
  const RationalFunction kappa = RationalFunction(1) / (geom_.delta * geom_.dx).scaled(FieldValue(2));
  for (std::size_t i = 0; i < geom_.ramification.size(); ++i) {
    auto l = std::make_unique<Local>();
    l->p = geom_.ramification[i];
    l->index = static_cast<int>(i);
    l->infinite = l->p.infinite;
    l->kappa = kappa;
    l->sigma = geom_.sigma;
    l->pts = &geom_.ramification;
    local_.push_back(std::move(l));
  }
}

RecursionTable::~RecursionTable() = default;

const PoleBasisDifferential& RecursionTable::w(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n < 1) {
    throw Error(ErrorKind::InvalidArgument, "W_{g,n} needs 2g-2+n >= 1, n >= 1");
  }
  std::lock_guard<std::recursive_mutex> lock(memo_mutex_);
  auto key = std::make_pair(g, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return *it->second;
  std::vector<int> at;
  for (std::size_t i = 0; i < points().size(); ++i) {
    if (geom_.is_effective(points()[i])) at.push_back(static_cast<int>(i));
  }
  auto value = std::make_unique<PoleBasisDifferential>(compute(g, n, at, check_symmetry_));
  return *memo_.emplace(key, std::move(value)).first->second;
}

PoleBasisDifferential RecursionTable::contribution(int r, int g, int n) {
  if (r < 0 || r >= static_cast<int>(points().size())) throw Error(ErrorKind::InvalidArgument, "bad point index");
  return compute(g, n, {r}, false);
}

PoleBasisDifferential RecursionTable::compute(int g, int n, const std::vector<int>& at, bool check) {
  // W_{g,n}(z0, J), |J| = n - 1, as a sum of residues at the points `at`.
  struct SlotItem {
    Elem e;
    FieldValue c;
    FormKey spect;
  };
  auto slot_items = [&](int gg, int nn) {
    std::vector<SlotItem> out;
    for (const auto& [key, c] : w(gg, nn).terms) {
      for (auto& [f, rest] : split_one(key)) out.push_back({Elem{Elem::Real, f.point, f.power}, c, std::move(rest)});
    }
    return out;
  };

  // Collect the lower W's before any threads start.
  std::vector<std::pair<int, int>> products;  // (g1, n1) with n1 = |I1|
  for (int g1 = 0; g1 <= g; ++g1) {
    for (int n1 = 0; n1 <= n - 1; ++n1) {
      const int g2 = g - g1, n2 = n - 1 - n1;
      if ((g1 == 0 && n1 == 0) || (g2 == 0 && n2 == 0)) continue;
      products.emplace_back(g1, n1);
    }
  }
  std::map<std::pair<int, int>, std::vector<SlotItem>> items;
  for (auto [g1, n1] : products) {
    for (auto [gg, nn] : {std::make_pair(g1, n1), std::make_pair(g - g1, n - 1 - n1)}) {
      if (gg == 0 && nn == 1) continue;  // B(z, z_j), expanded per point
      if (!items.count({gg, nn})) items[{gg, nn}] = slot_items(gg, nn + 1);
    }
  }
  const PoleBasisDifferential* lower = nullptr;
  if (g >= 1 && !(g == 1 && n == 1)) lower = &w(g - 1, n + 1);

  std::map<FormKey, FieldValue> acc;
  for (int r : at) {
    Local& L = *local_[r];
    const int vk = L.kernel_valuation();
    std::map<Job, FieldValue> jobs;
    auto add_job = [&](const Elem& a, const Elem& b, FormKey spect, const FieldValue& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = jobs.emplace(Job{a, b, std::move(spect)}, c);
      if (!inserted) it->second += c;
    };

    // W_{g-1,n+1}(z, sigma z, J)
    if (g == 1 && n == 1) {
      add_job(Elem{Elem::BSigma, 0, 0}, Elem{Elem::Unit, 0, 0}, {}, FieldValue(1));
    } else if (lower) {
      for (const auto& [key, c] : lower->terms) {
        for (const auto& [fa, rest] : split_one(key)) {
          for (const auto& [fb, rest2] : split_one(rest)) {
            add_job(Elem{Elem::Real, fa.point, fa.power}, Elem{Elem::Real, fb.point, fb.power}, rest2, c);
          }
        }
      }
    }

    // B(z, z_j) items at this point, truncated where the residue must vanish.
    auto virtual_items = [&](int partner_min_val) {
      std::vector<SlotItem> out;
      for (int k = 0;; ++k) {
        const int v = L.infinite ? k + 2 : k;
        if (vk + v + partner_min_val > -2) break;
        PoleForm s = L.infinite ? PoleForm{r, k} : PoleForm{r, k + 2};
        out.push_back({Elem{Elem::Virtual, 0, k}, FieldValue(1), FormKey{s}});
      }
      return out;
    };
    auto min_val = [&](const std::vector<SlotItem>& v, bool bar) {
      int m = 1 << 20;
      for (const auto& it : v) m = std::min(m, L.valuation(it.e, bar));
      return m;
    };
    for (auto [g1, n1] : products) {
      const int g2 = g - g1, n2 = n - 1 - n1;
      const bool v1 = g1 == 0 && n1 == 1, v2 = g2 == 0 && n2 == 1;
      std::vector<SlotItem> left, right;
      if (v1 && v2) {
        const int base = L.infinite ? 2 : 0;
        left = virtual_items(base);
        right = virtual_items(base);
      } else if (v1) {
        right = items[{g2, n2}];
        left = virtual_items(min_val(right, true));
      } else if (v2) {
        left = items[{g1, n1}];
        right = virtual_items(min_val(left, false));
      } else {
        left = items[{g1, n1}];
        right = items[{g2, n2}];
      }
      for (const auto& a : left) {
        const int va = L.valuation(a.e, false);
        for (const auto& b : right) {
          if (vk + va + L.valuation(b.e, true) > -2) continue;
          FieldValue c = a.c * b.c;
          Integer wgt = split_weight(a.spect, b.spect);
          if (wgt != 1) c *= FieldValue(Rational(wgt));
          add_job(a.e, b.e, merged(a.spect, b.spect), c);
        }
      }
    }

    std::vector<std::pair<Job, FieldValue>> list;
    list.reserve(jobs.size());
    for (auto& [j, c] : jobs) {
      if (!c.is_zero()) list.emplace_back(j, c);
    }
    // Precompute the tables serially so worker threads only read.
    for (const auto& [j, c] : list) L.table(j.a, j.b);

    const int nt = std::max(1, std::min<int>(threads_, static_cast<int>(list.size() / 64) + 1));
    std::vector<std::map<FormKey, FieldValue>> partial(nt);
    auto work = [&](int t) {
      auto& out = partial[t];
      for (std::size_t i = t; i < list.size(); i += nt) {
        const auto& [job, c] = list[i];
        const auto& T = L.table(job.a, job.b);
        for (std::size_t k = 0; k < T.size(); ++k) {
          if (T[k].is_zero()) continue;
          PoleForm f = L.output_form(L.kmin() + static_cast<int>(k));
          if (!check && !job.spect.empty() && job.spect.front() < f) continue;
          FormKey key;
          key.reserve(job.spect.size() + 1);
          key.push_back(f);
          key.insert(key.end(), job.spect.begin(), job.spect.end());
          auto [it, inserted] = out.emplace(std::move(key), c * T[k]);
          if (!inserted) it->second += c * T[k];
        }
      }
    };
    if (nt == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& part : partial) {
      for (auto& [k, v] : part) {
        auto [it, inserted] = acc.emplace(k, v);
        if (!inserted) it->second += v;
      }
    }
  }

  // Keys are (z0 form, sorted spectators); the symmetric coefficient is read
  // off where the z0 form is the smallest.
  PoleBasisDifferential out;
  out.arity = n;
  for (const auto& [key, c] : acc) {
    if (key.size() == 1 || !(key[1] < key[0])) out.add(key, c);
  }
  if (check) {
    for (const auto& [key, c] : acc) {
      FormKey sorted = key;
      std::sort(sorted.begin(), sorted.end());
      auto it = out.terms.find(sorted);
      FieldValue expect = it == out.terms.end() ? FieldValue() : it->second;
      if (expect != c) {
        throw Error(ErrorKind::InvalidArgument,
                    "W_{" + std::to_string(g) + "," + std::to_string(n) + "} failed the symmetry check");
      }
    }
  }
  return out;
}

RationalFunction RecursionTable::form_function(const PoleForm& f) const {
  const Point& q = points()[f.point];
  return q.infinite ? pow(kZ, f.power) : RationalFunction::pole(q.value, f.power);
}

RationalFunction RecursionTable::to_function(const PoleBasisDifferential& w) const {
  if (w.arity != 1) throw Error(ErrorKind::InvalidArgument, "to_function needs arity 1");
  RationalFunction out;
  for (const auto& [key, c] : w.terms) out += form_function(key[0]).scaled(c);
  return out;
}

FieldValue RecursionTable::evaluate(const PoleBasisDifferential& w, const std::vector<FieldValue>& z) const {
  if (static_cast<int>(z.size()) != w.arity) throw Error(ErrorKind::InvalidArgument, "wrong number of points");
  FieldValue total;
  for (const auto& [key, c] : w.terms) {
    FormKey perm = key;
    FieldValue s;
    do {
      FieldValue prod(1);
      for (std::size_t i = 0; i < perm.size(); ++i) prod *= form_function(perm[i]).evaluate(z[i]);
      s += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += c * s;
  }
  return total;
}

std::vector<std::pair<PoleForm, FieldValue>> RecursionTable::decompose(const RationalFunction& f) const {
  auto out = decompose_with_residues(f);
  for (const auto& [form, c] : out) {
    if (!points()[form.point].infinite && form.power == 1) {
      throw Error(ErrorKind::InvalidArgument, "form has a residue");
    }
  }
  return out;
}

std::vector<std::pair<PoleForm, FieldValue>> RecursionTable::decompose_with_residues(const RationalFunction& f) const {
  std::vector<FieldValue> cands;
  int inf_index = -1;
  for (std::size_t i = 0; i < points().size(); ++i) {
    if (points()[i].infinite) {
      inf_index = static_cast<int>(i);
    } else {
      cands.push_back(points()[i].value);
    }
  }
  PartialFractions pf = partial_fractions(f, cands, geom_.curve.field());
  std::vector<std::pair<PoleForm, FieldValue>> out;
  for (const auto& [kp, c] : pf.terms) {
    if (c.is_zero()) continue;
    const auto& [pole, power] = kp;
    auto it = std::find(points().begin(), points().end(), pole);
    if (it == points().end()) throw Error(ErrorKind::InvalidArgument, "pole off the ramification points");
    out.emplace_back(PoleForm{static_cast<int>(it - points().begin()), power}, c);
  }
  for (int k = 0; k <= pf.polynomial.degree(); ++k) {
    const FieldValue c = pf.polynomial.coeff(k);
    if (c.is_zero()) continue;
    if (inf_index < 0) throw Error(ErrorKind::InvalidArgument, "form has a pole at inf");
    out.emplace_back(PoleForm{inf_index, k}, c);
  }
  return out;
}

PoleBasisDifferential RecursionTable::from_products(
    const std::vector<std::pair<FieldValue, std::vector<RationalFunction>>>& products) const {
  std::map<FormKey, FieldValue> ordered;
  int arity = -1;
  for (const auto& [c, fs] : products) {
    if (arity < 0) arity = static_cast<int>(fs.size());
    if (static_cast<int>(fs.size()) != arity) throw Error(ErrorKind::InvalidArgument, "mixed arity");
    std::vector<std::pair<FormKey, FieldValue>> partial{{FormKey{}, c}};
    for (const auto& f : fs) {
      // single factors may carry residues that cancel in the sum
      auto parts = decompose_with_residues(f);
      std::vector<std::pair<FormKey, FieldValue>> next;
      for (const auto& [k, v] : partial) {
        for (const auto& [form, coeff] : parts) {
          FormKey nk = k;
          nk.push_back(form);
          next.emplace_back(std::move(nk), v * coeff);
        }
      }
      partial = std::move(next);
    }
    for (auto& [k, v] : partial) {
      auto [it, inserted] = ordered.emplace(k, v);
      if (!inserted) it->second += v;
    }
  }
  PoleBasisDifferential out;
  out.arity = std::max(arity, 0);
  for (const auto& [k, v] : ordered) {
    if (!std::is_sorted(k.begin(), k.end()) || v.is_zero()) continue;
    for (const auto& f : k) {
      if (!points()[f.point].infinite && f.power == 1) throw Error(ErrorKind::InvalidArgument, "form has a residue");
    }
    out.add(k, v);
  }
  for (const auto& [k, v] : ordered) {
    FormKey s = k;
    std::sort(s.begin(), s.end());
    auto it = out.terms.find(s);
    if ((it == out.terms.end() ? FieldValue() : it->second) != v) {
      throw Error(ErrorKind::InvalidArgument, "products do not form a symmetric differential");
    }
  }
  return out;
}

}  // namespace qcurve
