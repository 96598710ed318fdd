#include "qcurve_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "qcurve/closed_forms.hpp"
#include "qcurve/errors.hpp"
#include "qcurve/free_energy.hpp"
#include "qcurve/quantize.hpp"

namespace qcurve::cli {

namespace {

using nlohmann::json;

// Raised for bad flags or values; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string curve;
  std::string lambda;
  std::string lambda0, lambda1, lambda_inf;
  std::string nu;
  std::string nu0, nu1, nu_inf;
  std::string weights;
  std::string format = "json";
  std::string output;

  int g = 0, n = 1;
  int g_min = 2, g_max = 4;
  bool compare = false;
  std::string label;
  int m_max = 5;
  std::string method = "w";
  std::string checks;
  int order = 8;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

Rational rational_arg(const std::string& s, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw ConfigError("invalid rational for " + what + ": '" + s + "'");
  }
}

std::map<std::string, Rational> parameters(const Options& o) {
  const CurveCatalogEntry& entry = catalog_entry(o.curve);
  std::map<std::string, Rational> p;
  if (!o.lambda.empty()) {
    auto parts = split(o.lambda, ',');
    if (parts.size() != entry.parameter_names.size()) {
      throw ConfigError(o.curve + " takes " + std::to_string(entry.parameter_names.size()) + " parameters");
    }
    for (size_t i = 0; i < parts.size(); ++i) p[entry.parameter_names[i]] = rational_arg(parts[i], "--lambda");
  }
  for (const auto& [flag, name] : {std::pair{&o.lambda0, "lambda0"}, {&o.lambda1, "lambda1"},
                                   {&o.lambda_inf, "lambdaInf"}}) {
    if (flag->empty()) continue;
    if (std::find(entry.parameter_names.begin(), entry.parameter_names.end(), name) ==
        entry.parameter_names.end()) {
      throw ConfigError(o.curve + " has no parameter " + name);
    }
    p[name] = rational_arg(*flag, name);
  }
  return p;
}

NuPoint nu_values(const Options& o) {
  const auto& labels = voros_labels(o.curve);
  NuPoint nu;
  for (const auto& l : labels) nu[l] = 0;
  if (!o.nu.empty()) {
    auto parts = split(o.nu, ',');
    bool keyed = o.nu.find('=') != std::string::npos;
    if (!keyed && parts.size() != labels.size()) {
      throw ConfigError(o.curve + " takes " + std::to_string(labels.size()) + " nu values");
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      if (keyed) {
        auto kv = split(parts[i], '=');
        if (kv.size() != 2 || !nu.count(kv[0])) throw ConfigError("bad --nu entry '" + parts[i] + "'");
        nu[kv[0]] = rational_arg(kv[1], "--nu");
      } else {
        nu[labels[i]] = rational_arg(parts[i], "--nu");
      }
    }
  }
  for (const auto& [flag, label] : {std::pair{&o.nu0, "0"}, {&o.nu1, "1"}, {&o.nu_inf, "inf"}}) {
    if (flag->empty()) continue;
    if (!nu.count(label)) throw ConfigError(o.curve + " has no label " + label);
    nu[label] = rational_arg(*flag, "nu");
  }
  return nu;
}

QuantizationDivisor divisor(const Options& o, const CurveGeometry& g) {
  if (o.weights.empty()) return QuantizationDivisor::canonical(g, nu_values(o));
  QuantizationDivisor d;
  for (const auto& part : split(o.weights, ',')) {
    auto kv = split(part, '=');
    if (kv.size() != 2) throw ConfigError("bad --weights entry '" + part + "'");
    d.weights[kv[0]] = rational_arg(kv[1], "--weights");
  }
  try {
    d.validate(g);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return d;
}

json rational_map(const std::map<std::string, Rational>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v.get_str();
  return j;
}

std::string label_for(const Options& o) {
  const auto& labels = voros_labels(o.curve);
  if (!o.label.empty()) {
    if (std::find(labels.begin(), labels.end(), o.label) == labels.end()) {
      throw ConfigError(o.curve + " has no Voros label " + o.label);
    }
    return o.label;
  }
  if (labels.size() == 1) return labels.front();
  throw ConfigError("--label is required for " + o.curve);
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) rows.emplace_back(prefix, "");
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      std::string key = j.is_object() ? it.key() : std::to_string(i + (j.is_array() ? 0 : 0));
      flatten(*it, prefix.empty() ? key : prefix + "." + key, rows);
    }
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Options& o, const json& j, std::ostream& out) {
  std::ostringstream text;
  if (o.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    text << "key,value\n";
    for (const auto& [k, v] : rows) text << csv_field(k.empty() ? "value" : k) << ',' << csv_field(v) << '\n';
  } else {
    text << j.dump(2) << '\n';
  }
  if (o.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw ConfigError("cannot write " + o.output);
  f << text.str();
}

// --- commands ---------------------------------------------------------------

json cmd_catalog() {
  json list = json::array();
  for (const auto& e : curve_catalog()) {
    list.push_back({{"name", e.name},
                    {"parameters", e.parameter_names},
                    {"constraints", e.constraints},
                    {"singular_labels", e.labels},
                    {"voros_labels", voros_labels(e.name)}});
  }
  return list;
}

json cmd_wgn(const Options& o) {
  if (o.n < 1 || 2 * o.g - 2 + o.n < 1) throw ConfigError("need n >= 1 and 2g - 2 + n >= 1");
  RecursionTable t(analyze_geometry(build_curve(o.curve, parameters(o))));
  const PoleBasisDifferential& w = t.w(o.g, o.n);
  json pts = json::array();
  for (const auto& p : t.points()) pts.push_back(p.str());
  json terms = json::array();
  for (const auto& [key, c] : w.terms) {
    json forms = json::array();
    for (const auto& f : key) forms.push_back({{"point", f.point}, {"power", f.power}});
    terms.push_back({{"coefficient", c.str()}, {"forms", forms}});
  }
  json j = {{"curve", o.curve}, {"parameters", rational_map(t.geometry().curve.parameters)},
            {"g", o.g},         {"n", o.n},
            {"ramification", pts}, {"terms", terms}};
  if (o.n == 1) j["function"] = t.to_function(w).str();
  return j;
}

json cmd_free_energy(const Options& o, bool& failed) {
  if (o.g_min < 2 || o.g_max < o.g_min) throw ConfigError("need 2 <= g-min <= g-max");
  RecursionTable t(analyze_geometry(build_curve(o.curve, parameters(o))));
  json j = json::object();
  for (int g = o.g_min; g <= o.g_max; ++g) {
    FieldValue v = free_energy(t, g).value;
    j[std::to_string(g)] = v.str();
    if (o.compare) {
      Rational c = oracle_free_energy(o.curve, g, t.geometry().curve.parameters);
      if (v != FieldValue(c)) failed = true;
    }
  }
  return j;
}

json strings(const std::vector<FieldValue>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json cmd_voros(const Options& o, bool& failed) {
  if (o.m_max < 1) throw ConfigError("--m-max must be at least 1");
  std::string label = label_for(o);
  CurveGeometry g = analyze_geometry(build_curve(o.curve, parameters(o)));
  QuantizationDivisor d = divisor(o, g);
  NuPoint nu = d.differences(g);
  auto from_w = [&] {
    RecursionTable t(g);
    return voros_from_w(t, d, label, o.m_max).coefficients;
  };
  auto riccati = [&] { return voros_riccati(riccati_expand(quantize(g, d), g, o.m_max), g, label, o.m_max).coefficients; };
  auto closed = [&] {
    std::vector<FieldValue> v;
    for (int m = 1; m <= o.m_max; ++m) v.emplace_back(oracle_voros(o.curve, label, m, g.curve.parameters, nu));
    return v;
  };
  if (o.method == "w") return strings(from_w());
  if (o.method == "riccati") return strings(riccati());
  if (o.method == "closed-form") return strings(closed());
  if (o.method == "all") {
    auto a = from_w(), b = riccati(), c = closed();
    bool agree = a == b && b == c;
    failed = !agree;
    return {{"w", strings(a)}, {"riccati", strings(b)}, {"closed_form", strings(c)}, {"agree", agree}};
  }
  throw ConfigError("unknown --method " + o.method);
}

json curve_json(const QuantumCurve& q) {
  return {{"q0", q.q0.str("x")}, {"q1", q.q1.str("x")}, {"r0", q.r0.str("x")}, {"r1", q.r1.str("x")},
          {"r2", q.r2.str("x")}};
}

json cmd_quantize(const Options& o) {
  CurveGeometry g = analyze_geometry(build_curve(o.curve, parameters(o)));
  QuantizationDivisor d = divisor(o, g);
  QuantumCurve q = quantize(g, d);
  SLPotential s = sl_form(q);
  json j = curve_json(q);
  j["divisor"] = rational_map(d.weights);
  j["sl_form"] = {{"Q0", s.q0.str("x")}, {"Q1", s.q1.str("x")}, {"Q2", s.q2.str("x")}};
  return j;
}

json cmd_verify_quantization(const Options& o, bool& failed) {
  CurveGeometry g = analyze_geometry(build_curve(o.curve, parameters(o)));
  QuantizationDivisor d = divisor(o, g);
  QuantumCurve q = quantize(g, d);
  bool identities = verify_quantization(g, d, q);
  bool classical = sl_form(q).q0 == classical_potential(g);
  failed = !(identities && classical);
  return {{"identities", identities}, {"classical_limit", classical}, {"pass", !failed}};
}

CheckResult dual_voros(const Options& o, const ParameterPoint& lambda, const NuPoint& nu) {
  CurveGeometry g = analyze_geometry(build_curve(o.curve, lambda));
  RecursionTable t(g);
  QuantizationDivisor d = QuantizationDivisor::canonical(g, nu);
  int m_max = std::min(o.order, 5);
  WkbExpansion wkb = riccati_expand(quantize(g, d), g, m_max);
  for (const auto& j : voros_labels(o.curve)) {
    auto a = voros_from_w(t, d, j, m_max).coefficients;
    auto b = voros_riccati(wkb, g, j, m_max).coefficients;
    for (int m = 1; m <= m_max; ++m) {
      FieldValue c(oracle_voros(o.curve, j, m, lambda, nu));
      if (a[m - 1] != b[m - 1] || a[m - 1] != c) {
        return {false, "label " + j + " m = " + std::to_string(m) + ": " + a[m - 1].str() + " / " +
                           b[m - 1].str() + " / " + c.str()};
      }
    }
  }
  return {true, "three routes agree through m = " + std::to_string(m_max)};
}

CheckResult free_energy_check(const Options& o, const ParameterPoint& lambda) {
  RecursionTable t(analyze_geometry(build_curve(o.curve, lambda)));
  for (int g = 2; g <= 4; ++g) {
    FieldValue v = free_energy(t, g).value;
    Rational c = oracle_free_energy(o.curve, g, lambda);
    if (v != FieldValue(c)) return {false, "F_" + std::to_string(g) + " = " + v.str() + ", closed form " + c.get_str()};
  }
  return {true, "F_2..F_4 match"};
}

json cmd_verify(const Options& o, bool& failed) {
  static const std::vector<std::string> known = {"voros-relation", "three-term", "contiguity",   "gauss-gh",
                                                 "bernoulli", "voros",      "free-energy", "quantization"};
  std::vector<std::string> checks = o.checks.empty() ? known : split(o.checks, ',');
  for (const auto& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) throw ConfigError("unknown check " + c);
  }
  if (o.order < 1) throw ConfigError("--order must be positive");
  const bool is_gauss = o.curve == "gauss";
  bool needs_curve = std::any_of(checks.begin(), checks.end(), [](const std::string& c) { return c != "bernoulli"; });
  ParameterPoint lambda;
  NuPoint nu;
  if (needs_curve) {
    lambda = build_curve(o.curve, parameters(o)).parameters;
    nu = nu_values(o);
  }
  json j = json::object();
  auto record = [&](const std::string& name, const CheckResult& r) {
    j[name] = {{"pass", r.pass}, {"detail", r.detail}};
    if (!r.pass) failed = true;
  };
  for (const auto& c : checks) {
    try {
      if (c == "voros-relation" || c == "three-term") {
        for (const auto& l : voros_labels(o.curve)) {
          record(c + "/" + l, c == "voros-relation" ? check_voros_relation(o.curve, l, lambda, nu, o.order)
                                                : check_three_term(o.curve, l, lambda, o.order));
        }
      } else if (c == "contiguity" || c == "gauss-gh") {
        if (!is_gauss) {
          if (!o.checks.empty()) throw ConfigError(c + " applies to the gauss curve only");
          continue;
        }
        record(c, c == "contiguity" ? check_contiguity_gauss(lambda, nu, std::min(o.order, 6))
                                    : check_gauss_GH(lambda, o.order));
      } else if (c == "bernoulli") {
        for (const auto& [name, r] : check_bernoulli_identities(std::max(o.order, 10))) record(c + "/" + name, r);
      } else if (c == "voros") {
        if (voros_labels(o.curve).empty()) continue;
        record(c, dual_voros(o, lambda, nu));
      } else if (c == "free-energy") {
        record(c, free_energy_check(o, lambda));
      } else if (c == "quantization") {
        Options q = o;
        bool bad = false;
        cmd_verify_quantization(q, bad);
        record(c, {!bad, bad ? "quantum curve identities fail" : "identities hold"});
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument && c == "free-energy") {
        continue;  // no closed form (and nothing to compare) for this curve
      }
      record(c, {false, e.what()});
    }
  }
  return j;
}

void add_curve_options(CLI::App* s, Options& o, bool required = true) {
  auto* c = s->add_option("--curve", o.curve, "Catalog curve name");
  if (required) c->required();
  s->add_option("--lambda", o.lambda, "Parameters in catalog order, comma separated");
  s->add_option("--lambda0", o.lambda0, "lambda0");
  s->add_option("--lambda1", o.lambda1, "lambda1");
  s->add_option("--lambda-inf", o.lambda_inf, "lambdaInf");
  s->add_option("--nu", o.nu, "nu_j per label: '1/3,0,1/7' in label order or '0=1/3,inf=1/7'");
  s->add_option("--nu0", o.nu0, "nu_0");
  s->add_option("--nu1", o.nu1, "nu_1");
  s->add_option("--nu-inf", o.nu_inf, "nu_inf");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Topological recursion, quantum curves and Voros coefficients for the hypergeometric family"};
  app.name(args.empty() ? "qcurve" : args[0]);
  app.set_config("--config", "", "Read options from a key=value file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", o.output, "Write the result to a file instead of stdout");
  app.require_subcommand(1, 1);

  auto* catalog = app.add_subcommand("catalog", "List the catalog curves, constraints and labels");

  auto* wgn = app.add_subcommand("wgn", "Correlation function W_{g,n} in the pole basis");
  add_curve_options(wgn, o);
  wgn->add_option("--g", o.g, "Genus")->required();
  wgn->add_option("--n", o.n, "Number of points")->required();

  auto* fe = app.add_subcommand("free-energy", "Free energies F_g from the recursion");
  add_curve_options(fe, o);
  fe->add_option("--g-min", o.g_min, "Lowest genus (>= 2)");
  fe->add_option("--g-max", o.g_max, "Highest genus");
  fe->add_flag("--compare", o.compare, "Exit 1 unless every F_g equals its closed form");

  auto* voros = app.add_subcommand("voros", "Voros coefficients V_1..V_M");
  add_curve_options(voros, o);
  voros->add_option("--label", o.label, "Singular label (0, 1, inf)");
  voros->add_option("--m-max", o.m_max, "Highest coefficient");
  voros->add_option("--method", o.method, "w, riccati, closed-form or all")
      ->check(CLI::IsMember({"w", "riccati", "closed-form", "all"}));
  voros->add_option("--weights", o.weights, "Explicit divisor weights, e.g. '0+=1/2,0-=1/2'");

  auto* quant = app.add_subcommand("quantize", "Quantum curve and SL-form for a divisor");
  add_curve_options(quant, o);
  quant->add_option("--weights", o.weights, "Explicit divisor weights, e.g. '0+=1/2,0-=1/2'");

  auto* vq = app.add_subcommand("verify-quantization", "Check the quantum curve identities");
  add_curve_options(vq, o);
  vq->add_option("--weights", o.weights, "Explicit divisor weights");

  auto* verify = app.add_subcommand("verify", "Run identity checks; exit 1 on any failure");
  add_curve_options(verify, o, false);
  verify->add_option("--checks", o.checks,
                     "Comma list: voros-relation, three-term, contiguity, gauss-gh, bernoulli, voros, free-energy, "
                     "quantization (default: all that apply)");
  verify->add_option("--order", o.order, "Truncation order in h");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kConfigError;
  }

  bool failed = false;
  try {
    json result;
    if (catalog->parsed()) {
      result = cmd_catalog();
    } else if (verify->parsed() && o.curve.empty()) {
      std::vector<std::string> c = split(o.checks, ',');
      if (c.empty() || std::any_of(c.begin(), c.end(), [](const std::string& x) { return x != "bernoulli"; })) {
        throw ConfigError("--curve is required unless only bernoulli is checked");
      }
      result = cmd_verify(o, failed);
    } else {
      catalog_entry(o.curve);  // UnknownCurve before any work
      if (wgn->parsed()) result = cmd_wgn(o);
      if (fe->parsed()) result = cmd_free_energy(o, failed);
      if (voros->parsed()) result = cmd_voros(o, failed);
      if (quant->parsed()) result = cmd_quantize(o);
      if (vq->parsed()) result = cmd_verify_quantization(o, failed);
      if (verify->parsed()) result = cmd_verify(o, failed);
    }
    emit(o, result, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::UnknownCurve:
      case ErrorKind::UnknownLabel:
      case ErrorKind::ConstraintViolated:
      case ErrorKind::InvalidArgument:
      case ErrorKind::ParseError:
        return kConfigError;
      default:
        return kCheckFailed;
    }
  }
  if (failed) err << "verification failed\n";
  return failed ? kCheckFailed : kOk;
}

}  // namespace qcurve::cli
