#include "workbench/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "workbench/ainfty.hpp"
#include "workbench/ainfty_json.hpp"
#include "workbench/chords.hpp"
#include "workbench/error.hpp"
#include "workbench/fixtures.hpp"
#include "workbench/maslov.hpp"
#include "workbench/moduli.hpp"
#include "workbench/signs.hpp"
#include "workbench/slit_domain.hpp"

namespace wb::workbench {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void usage(const std::string& pointer, const std::string& what) {
  throw Error(Errc::usage, "config " + pointer + ": " + what);
}

template <class T>
T option(const Json& opts, const std::string& check, const char* key, T fallback) {
  if (!opts.contains(key)) return fallback;
  try {
    return opts.at(key).get<T>();
  } catch (const Json::exception&) {
    usage("/options/" + check + "/" + key, "wrong type");
  }
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

struct SlitInstance {
  slit::Weights weights;
  std::vector<double> punctures;
};

SlitInstance random_slit_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> weight(0.5, 2.5);
  std::uniform_real_distribution<double> gap(0.4, 2.0);
  const int k = 2 + static_cast<int>(rng() % 2);
  std::vector<double> w, a{0.0};
  for (int j = 0; j < k; ++j) w.push_back(weight(rng));
  for (int j = 1; j < k; ++j) a.push_back(a.back() + gap(rng));
  return {slit::Weights::from_inputs(w), a};
}

Json counterexample_json(const signs::Counterexample& c) {
  return {{"d", c.d},         {"n", c.n},         {"m", c.m},         {"partition", c.partition}, {"mu", c.mu},
          {"glued", c.glued}, {"terms", c.terms}, {"lhs", c.lhs},     {"rhs", c.rhs}};
}

CheckResult check_slit(const SuiteConfig& cfg, const Json& opts) {
  const int instances = option(opts, "slit", "instances", 20);
  const int grid = option(opts, "slit", "grid", 200);
  const double tol = option(opts, "slit", "tol", cfg.tol.value_or(1e-9));
  const double end_tol = option(opts, "slit", "end_tol", 1e-6);
  const bool extra = option(opts, "slit", "extra_term", false);

  CheckResult r{"slit", true};
  const auto exact = slit::build_slit_map(slit::Weights::from_inputs({1.0, 1.0}), std::vector<double>{0.0, 1.0});
  const double tip_error = std::abs(exact.slit_params[0] + 2 * std::numbers::ln2 / std::numbers::pi);
  const bool exact_ok = exact.critical_points[0] == 0.5 && tip_error < 1e-12;
  r.details["exact"] = {{"critical_point", exact.critical_points[0]}, {"tip_error", tip_error}, {"pass", exact_ok}};
  r.pass = exact_ok;

  std::mt19937_64 rng(check_seed(cfg.seed, "slit"));
  slit::VerifyOptions vo;
  if (extra) vo.extra_term = [](double x, double) { return std::array<double, 2>{0.0, 1e-3 * x}; };
  double worst_d = 0, worst_dj = 0, worst_b = 0, worst_end = 0;
  Json failures = Json::array();
  for (int i = 0; i < instances; ++i) {
    const SlitInstance inst = random_slit_instance(rng);
    const auto domain = slit::build_slit_map(inst.weights, inst.punctures);
    const auto rep = slit::verify_beta_conditions(domain, grid, tol, vo);
    worst_d = std::max(worst_d, rep.max_d_beta);
    worst_dj = std::max(worst_dj, rep.max_d_beta_j);
    worst_b = std::max(worst_b, rep.max_boundary_tangential);
    worst_end = std::max(worst_end, rep.max_end_deviation);
    const bool ok = rep.pass && rep.max_end_deviation < end_tol;
    if (!ok) {
      failures.push_back({{"weights", std::vector<double>(inst.weights.inputs().begin(), inst.weights.inputs().end())},
                          {"punctures", inst.punctures},
                          {"d_beta", rep.max_d_beta},
                          {"d_beta_j", rep.max_d_beta_j},
                          {"boundary", rep.max_boundary_tangential},
                          {"end", rep.max_end_deviation}});
      r.pass = false;
    }
  }
  r.details["instances"] = instances;
  r.details["grid"] = grid;
  r.details["tol"] = tol;
  r.details["max_d_beta"] = worst_d;
  r.details["max_d_beta_j"] = worst_dj;
  r.details["max_boundary_tangential"] = worst_b;
  r.details["max_end_deviation"] = worst_end;
  r.details["failures"] = failures;
  return r;
}

CheckResult check_roundtrip(const SuiteConfig& cfg, const Json& opts) {
  const int instances = option(opts, "roundtrip", "instances", 50);
  const double tol = option(opts, "roundtrip", "tol", 1e-8);
  CheckResult r{"roundtrip", true};
  std::mt19937_64 rng(check_seed(cfg.seed, "roundtrip"));
  double worst = 0;
  Json failures = Json::array();
  for (int i = 0; i < instances; ++i) {
    const SlitInstance inst = random_slit_instance(rng);
    const auto domain = slit::build_slit_map(inst.weights, inst.punctures);
    double err = INFINITY;
    try {
      const auto back = slit::invert_slit_params(inst.weights, domain.slit_params);
      err = 0;
      for (std::size_t j = 0; j < inst.punctures.size(); ++j) {
        err = std::max(err, std::abs(back.punctures[j] - inst.punctures[j]));
      }
    } catch (const Error&) {
    }
    worst = std::max(worst, err);
    if (!(err < tol)) {
      r.pass = false;
      failures.push_back({{"punctures", inst.punctures}, {"error", std::isfinite(err) ? Json(err) : Json(nullptr)}});
    }
  }
  r.details = {{"instances", instances}, {"tol", tol}, {"max_error", worst}, {"failures", failures}};
  return r;
}

long long little_schroeder(int k) {
  std::vector<long long> s{0, 1, 1};
  for (int n = 3; n <= k; ++n) s.push_back((3 * (2 * n - 3) * s[n - 1] - (n - 3) * s[n - 2]) / n);
  return s[k];
}

CheckResult check_moduli(const SuiteConfig&, const Json& opts) {
  const int kmax = option(opts, "moduli", "kmax", 6);
  CheckResult r{"moduli", true};
  Json rows = Json::array();
  for (int k = 2; k <= kmax; ++k) {
    const long long trees = static_cast<long long>(moduli::enumerate_trees(k).size());
    int top = -1;
    bool gamma_ok = true;
    for (const auto& s : moduli::enumerate_strata_N(k)) {
      top = std::max(top, s.dimension);
      const int nonf = static_cast<int>(std::count_if(s.classes.begin(), s.classes.end(),
                                                      [](moduli::VertexClass c) { return c != moduli::VertexClass::f; }));
      gamma_ok = gamma_ok && s.dimension == k - 1 - nonf && moduli::gamma_dimension(s.tree, s.classes) == s.dimension;
    }
    bool codim_ok = true;
    for (const auto& f : moduli::boundary_facets_N(k)) codim_ok = codim_ok && f.parent_dimension - f.dimension == 1;
    for (const auto& f : moduli::boundary_facets_L(k)) codim_ok = codim_ok && f.parent_dimension - f.dimension == 1;
    const bool ok = trees == little_schroeder(k) && top == k - 1 && gamma_ok && codim_ok;
    r.pass = r.pass && ok;
    rows.push_back({{"k", k},
                    {"trees", trees},
                    {"expected_trees", little_schroeder(k)},
                    {"top_dimension", top},
                    {"gamma_ok", gamma_ok},
                    {"codim_ok", codim_ok}});
  }
  r.details["rows"] = rows;
  return r;
}

CheckResult check_facets(const SuiteConfig&, const Json& opts) {
  const int kmax = option(opts, "facets", "kmax", 4);
  CheckResult r{"facets", true};
  Json rows = Json::array();
  auto terms_of = [](const std::vector<moduli::Facet>& fs) {
    std::vector<RelationTerm> t;
    for (const auto& f : fs) t.push_back(f.term);
    std::sort(t.begin(), t.end());
    return t;
  };
  auto diff = [](const std::vector<RelationTerm>& a, const std::vector<RelationTerm>& b) {
    std::vector<RelationTerm> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    Json labels = Json::array();
    for (const auto& t : out) labels.push_back(t.label());
    return labels;
  };
  for (int k = 2; k <= kmax; ++k) {
    auto fn = terms_of(moduli::boundary_facets_N(k));
    auto fl = terms_of(moduli::boundary_facets_L(k));
    auto tn = ainfty::functor_relation_terms(k);
    auto tl = ainfty::homotopy_relation_terms(k);
    std::sort(tn.begin(), tn.end());
    std::sort(tl.begin(), tl.end());
    const bool ok = fn == tn && fl == tl;
    r.pass = r.pass && ok;
    rows.push_back({{"k", k},
                    {"facets_N", fn.size()},
                    {"terms_N", tn.size()},
                    {"facets_L", fl.size()},
                    {"terms_L", tl.size()},
                    {"mismatch_N", diff(fn, tn)},
                    {"mismatch_L", diff(fl, tl)}});
  }
  r.details["rows"] = rows;
  return r;
}

CheckResult check_signs(const SuiteConfig&, const Json& opts) {
  const int d_max = option(opts, "signs", "d_max", 5);
  const int mu_max = option(opts, "signs", "mu_max", 3);
  const std::string corruption_name = option<std::string>(opts, "signs", "corruption", "none");
  const auto ids = option<std::vector<std::string>>(opts, "signs", "identities", {"m", "f", "fprime"});
  signs::Corruption corruption = signs::Corruption::none;
  if (corruption_name == "drop_triangle") {
    corruption = signs::Corruption::drop_triangle;
  } else if (corruption_name == "drop_square") {
    corruption = signs::Corruption::drop_square;
  } else if (corruption_name != "none") {
    usage("/options/signs/corruption", "expected none, drop_triangle or drop_square");
  }
  CheckResult r{"signs", true};
  Json rows = Json::array();
  for (const std::string& name : ids) {
    const auto id = signs::parse_identity(name);
    if (!id) usage("/options/signs/identities", "unknown identity '" + name + "'");
    const auto res = signs::verify_identity(*id, {0, mu_max}, d_max, corruption);
    Json row = {{"identity", name}, {"cases", res.cases}, {"holds", res.pass()}};
    bool ok = res.pass() || *id != signs::Identity::m_composition;
    if (res.counterexample) {
      const auto& c = *res.counterexample;
      const auto again = signs::evaluate_identity(*id, c.mu, c.n, c.m, c.partition, corruption);
      const bool consistent = again.lhs == c.lhs && again.rhs == c.rhs && again.terms == c.terms && c.lhs != c.rhs;
      row["counterexample"] = counterexample_json(c);
      row["recomputed_consistent"] = consistent;
      ok = ok && consistent;
    }
    row["pass"] = ok;
    r.pass = r.pass && ok;
    rows.push_back(row);
  }
  r.details = {{"d_max", d_max}, {"mu_max", mu_max}, {"corruption", corruption_name}, {"identities", rows}};
  return r;
}

Json residual_summary(const ainfty::ResidualReport& rep, const ainfty::GradedHom& in, const ainfty::GradedHom& out) {
  Json j = ainfty::to_json(rep, in, out);
  if (j["nonzero"].size() > 8) {
    Json head = Json::array();
    for (std::size_t i = 0; i < 8; ++i) head.push_back(j["nonzero"][i]);
    j["nonzero_total"] = j["nonzero"].size();
    j["nonzero"] = head;
  }
  return j;
}

CheckResult check_ainfty(const SuiteConfig& cfg, const Json& opts) {
  using namespace ainfty;
  const int kmax = option(opts, "ainfty", "kmax", cfg.kmax.value_or(3));
  const int instances = option(opts, "ainfty", "instances", 20);
  const bool corrupt = option(opts, "ainfty", "corrupt", false);
  CheckResult r{"ainfty", true};
  auto expect = [&](const char* what, const ResidualReport& rep, bool want_ok, const GradedHom& in,
                    const GradedHom& out) {
    const bool ok = rep.ok() == want_ok;
    r.details["fixtures"][what] = residual_summary(rep, in, out);
    r.details["fixtures"][what]["pass"] = ok;
    r.pass = r.pass && ok;
  };

  Category ext = from_dga(exterior_algebra());
  if (corrupt) flip_coefficient(ext.m, 2);
  const Category interval = from_dga(interval_cochains());
  expect("dga_exterior", verify_ainfty(ext, kmax), true, ext.basis, ext.basis);
  expect("dga_interval", verify_ainfty(interval, kmax), true, interval.basis, interval.basis);
  expect("identity_functor", verify_functor(identity_functor(interval), interval, interval, kmax), true,
         interval.basis, interval.basis);
  const ChainHomotopyFixture fx = chain_homotopy_fixture();
  expect("chain_homotopy", verify_homotopy(fx.h, fx.f, fx.g, fx.complex, fx.complex, kmax), true, fx.complex.basis,
         fx.complex.basis);

  Category bad_dga = from_dga(exterior_algebra());
  flip_coefficient(bad_dga.m, 2);
  expect("negative_dga", verify_ainfty(bad_dga, kmax), false, bad_dga.basis, bad_dga.basis);
  Functor bad_id = identity_functor(interval);
  flip_coefficient(bad_id.f, 1);
  expect("negative_functor", verify_functor(bad_id, interval, interval, kmax), false, interval.basis,
         interval.basis);
  Homotopy bad_h = fx.h;
  flip_coefficient(bad_h.h, 1);
  expect("negative_homotopy", verify_homotopy(bad_h, fx.f, fx.g, fx.complex, fx.complex, kmax), false,
         fx.complex.basis, fx.complex.basis);

  std::mt19937_64 rng(check_seed(cfg.seed, "ainfty"));
  int composed_ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < instances; ++i) {
    const Category a = from_dga(i % 2 == 0 ? interval_cochains() : exterior_algebra());
    const Functor f1 = random_gauge(a, rng(), kmax, "F1");
    const Category b = pushforward(a, f1, kmax);
    const Functor f2 = random_gauge(b, rng(), kmax, "F2");
    const Category c = pushforward(b, f2, kmax);
    const bool factors = verify_functor(f1, a, b, kmax).ok() && verify_functor(f2, b, c, kmax).ok();
    const auto rep = verify_functor(compose_functors(f2, f1, a, b, c, kmax), a, c, kmax);
    if (factors && rep.ok()) {
      ++composed_ok;
    } else {
      failures.push_back({{"instance", i}, {"factors_pass", factors}, {"residual", residual_summary(rep, a.basis, c.basis)}});
    }
  }
  r.details["compose"] = {{"instances", instances}, {"passed", composed_ok}, {"failures", failures}};
  r.pass = r.pass && composed_ok == instances;
  r.details["k_max"] = kmax;
  return r;
}

CheckResult check_chords(const SuiteConfig& cfg, const Json& opts) {
  using namespace chords;
  const int rescale_samples = option(opts, "chords", "rescale_weights", 10);
  CheckResult r{"chords", true};
  auto note = [&](const char* key, bool ok, Json value) {
    r.details[key] = {{"pass", ok}, {"value", std::move(value)}};
    r.pass = r.pass && ok;
  };

  const Spectrum t3 = enumerate_cords_T3(1.0, -8.0);
  std::vector<double> actions;
  for (const auto& c : t3.classes) {
    if (!c.constant_family) actions.push_back(c.action);
  }
  std::sort(actions.begin(), actions.end());
  const std::vector<double> expected{-8, -8, -4.5, -4.5, -2, -2, -0.5, -0.5};
  note("t3_actions", actions == expected, actions);
  const double gap = action_gap(t3);
  note("t3_gap", gap == 0.5, gap);

  const Spectrum t2 = enumerate_loops_T2(make_lattice(Eigen::Matrix2d::Identity()), -2.0);
  note("t2_count", t2.classes.size() == 12, t2.classes.size());
  bool below = true;
  for (const Spectrum* s : {&t3, &t2}) {
    const double g = action_gap(*s);
    for (const auto& c : s->classes) below = below && (c.constant_family || c.action <= -g);
  }
  note("actions_below_gap", below, below);

  std::mt19937_64 rng(check_seed(cfg.seed, "chords"));
  std::uniform_real_distribution<double> scale(0.25, 8.0), coord(-3.0, 3.0);
  double lip_err = 0;
  for (int i = 0; i < 5; ++i) {
    Eigen::Matrix2d a;
    a << coord(rng), coord(rng), coord(rng), coord(rng);
    const Eigen::MatrixXd g = a * a.transpose() + Eigen::Matrix2d::Identity();
    const double c = scale(rng);
    lip_err = std::max(lip_err, std::abs(lipschitz_constant(g, c * g) - std::max(c, 1 / c)) / std::max(c, 1 / c));
  }
  note("lipschitz_scaling", lip_err < 1e-12, lip_err);

  std::vector<PhasePoint> pts(64);
  for (auto& p : pts) {
    for (double& x : p) x = coord(rng);
  }
  double worst = 0;
  for (int i = 0; i < rescale_samples; ++i) {
    worst = std::max(worst, quadratic_rescale_check(scale(rng), pts).max_residual);
  }
  note("rescale_residual", worst < 1e-12, worst);
  const double control = quadratic_rescale_check(3.0, pts, flat_norm()).max_residual;
  note("rescale_negative_control", control > 1e-6, control);
  return r;
}

CheckResult check_hamiltonian(const SuiteConfig& cfg, const Json& opts) {
  using namespace chords;
  const int points = option(opts, "hamiltonian", "points", 100);
  const double tol = option(opts, "hamiltonian", "tol", 1e-10);
  CheckResult r{"hamiltonian", true};
  std::mt19937_64 rng(check_seed(cfg.seed, "hamiltonian"));
  std::uniform_real_distribution<double> depth(2.0, 6.0), angle(0.0, 2 * std::numbers::pi), mom(-3.0, 3.0);
  const ProductEnd end{};
  double worst_a = 0, worst_r = 0;
  auto rel = [](const PhasePoint& x, const PhasePoint& y) {
    double e = 0;
    for (int i = 0; i < 6; ++i) e = std::max(e, std::abs(x[i] - y[i]) / std::max(1.0, std::abs(y[i])));
    return e;
  };
  for (int i = 0; i < points; ++i) {
    const PhasePoint x{depth(rng), angle(rng), angle(rng), mom(rng), mom(rng), mom(rng)};
    worst_a = std::max(worst_a, rel(hamiltonian_vector_field(end, x, Chart::a), closed_form_field(end, x, Chart::a)));
    const PhasePoint y = to_r_chart(x);
    worst_r = std::max(worst_r, rel(hamiltonian_vector_field(end, y, Chart::r), closed_form_field(end, y, Chart::r)));
  }
  r.pass = worst_a < tol && worst_r < tol;
  r.details = {{"points", points}, {"tol", tol}, {"max_error_a_chart", worst_a}, {"max_error_r_chart", worst_r}};
  return r;
}

CheckResult check_maslov(const SuiteConfig& cfg, const Json& opts) {
  using namespace maslov;
  const int paths = option(opts, "maslov", "paths", 50);
  CheckResult r{"maslov", true};
  auto note = [&](const char* key, bool ok, Json value) {
    r.details[key] = {{"pass", ok}, {"value", std::move(value)}};
    r.pass = r.pass && ok;
  };
  note("constant_path", rs_index(constant_path(real_frame(2)), unitary_frame(Eigen::MatrixXcd::Identity(2, 2) *
                                                                              std::complex<double>(0, 1)))
                                    .twice == 0,
       0);
  const auto half = rs_index(unitary_path({Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Constant(1, 1, std::numbers::pi)}),
                             real_frame(1));
  note("half_turn", half.twice == 2, half.value());

  std::mt19937_64 rng(check_seed(cfg.seed, "maslov"));
  std::normal_distribution<double> normal(0.0, 1.5);
  int additive = 0, reversed = 0;
  for (int i = 0; i < paths; ++i) {
    std::vector<Eigen::MatrixXd> coeffs;
    for (int c = 0; c < 3; ++c) {
      Eigen::MatrixXd s(2, 2);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) s(a, b) = normal(rng);
      }
      coeffs.push_back(s + s.transpose());
    }
    const LagrangianFrame ref = real_frame(2);
    const auto whole = rs_index(unitary_path(coeffs, 0.0, 2.0), ref);
    const auto first = rs_index(unitary_path(coeffs, 0.0, 1.0), ref);
    const auto second = rs_index(unitary_path(coeffs, 1.0, 2.0), ref);
    const auto back = rs_index(reverse(unitary_path(coeffs, 0.0, 2.0)), ref);
    additive += whole.twice == first.twice + second.twice;
    reversed += back.twice == -whole.twice;
  }
  note("additivity", additive == paths, additive);
  note("reversal", reversed == paths, reversed);
  const auto chord = chord_index(chords::make_chord({1}, 1.0));
  r.details["t3_chord_index"] = {{"value", chord.value()}, {"morse_bott", chord.morse_bott}};
  return r;
}

using CheckFn = CheckResult (*)(const SuiteConfig&, const Json&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"slit", check_slit},     {"roundtrip", check_roundtrip}, {"moduli", check_moduli},
      {"facets", check_facets}, {"signs", check_signs},         {"ainfty", check_ainfty},
      {"chords", check_chords}, {"hamiltonian", check_hamiltonian}, {"maslov", check_maslov}};
  return r;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  c.checks = known_checks();
  return c;
}

SuiteConfig SuiteConfig::from_json(const Json& j) {
  if (!j.is_object()) usage("/", "expected an object");
  SuiteConfig c = defaults();
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") {
      if (!value.is_number_integer() || value.get<int>() != schema_version) usage("/schema", "unsupported schema version");
    } else if (key == "checks") {
      if (!value.is_array()) usage("/checks", "expected an array of check names");
      c.checks.clear();
      for (const Json& n : value) {
        if (!n.is_string()) usage("/checks", "expected an array of check names");
        const auto& known = known_checks();
        if (std::find(known.begin(), known.end(), n.get<std::string>()) == known.end()) {
          usage("/checks", "unknown check '" + n.get<std::string>() + "'");
        }
        c.checks.push_back(n.get<std::string>());
      }
    } else if (key == "seed") {
      if (!value.is_number_integer() || value.get<long long>() < 0) usage("/seed", "expected a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "tol") {
      if (value.is_null()) continue;
      if (!value.is_number() || !(value.get<double>() > 0)) usage("/tol", "expected a positive number");
      c.tol = value.get<double>();
    } else if (key == "kmax") {
      if (value.is_null()) continue;
      if (!value.is_number_integer() || value.get<int>() < 1) usage("/kmax", "expected a positive integer");
      c.kmax = value.get<int>();
    } else if (key == "options") {
      if (!value.is_object()) usage("/options", "expected an object keyed by check name");
      for (const auto& [check, o] : value.items()) {
        const auto& known = known_checks();
        if (std::find(known.begin(), known.end(), check) == known.end()) usage("/options/" + check, "unknown check");
        if (!o.is_object()) usage("/options/" + check, "expected an object");
      }
      c.options = value;
    } else {
      usage("/" + key, "unknown key");
    }
  }
  return c;
}

Json SuiteConfig::to_json() const {
  Json j = {{"schema", schema_version}, {"checks", checks}, {"seed", seed}, {"options", options}};
  j["tol"] = tol ? Json(*tol) : Json(nullptr);
  j["kmax"] = kmax ? Json(*kmax) : Json(nullptr);
  return j;
}

Json SuiteConfig::options_for(const std::string& check) const {
  return options.contains(check) ? options.at(check) : Json::object();
}

CheckResult run_check(const std::string& name, const SuiteConfig& config) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    const auto start = Clock::now();
    CheckResult r;
    try {
      r = fn(config, config.options_for(name));
    } catch (const Error& e) {
      if (e.code() == Errc::usage) throw;
      r = {name, false, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}}};
    }
    r.name = name;
    r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }
  throw Error(Errc::usage, "unknown check '" + name + "'");
}

RunReport run_suite(const SuiteConfig& config, std::vector<std::string> command) {
  const auto start = Clock::now();
  RunReport rep;
  rep.command = std::move(command);
  rep.config = config.to_json();
  rep.seed = config.seed;
  std::vector<std::future<CheckResult>> jobs;
  for (const std::string& name : config.checks) {
    jobs.push_back(std::async(std::launch::async, [&config, name] { return run_check(name, config); }));
  }
  for (auto& j : jobs) rep.checks.push_back(j.get());
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace wb::workbench
