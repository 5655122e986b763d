#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "workbench/ainfty_json.hpp"
#include "workbench/chords.hpp"
#include "workbench/error.hpp"
#include "workbench/maslov.hpp"
#include "workbench/moduli.hpp"
#include "workbench/signs.hpp"
#include "workbench/slit_domain.hpp"
#include "workbench/suite.hpp"

using wb::Errc;
using wb::Error;
using wb::workbench::Json;

namespace {

struct Globals {
  bool json = false;
  std::string out;
  std::uint64_t seed = 20240611;
  bool seed_set = false;
  double tol = 0.0;
  int kmax = 0;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::usage, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::usage, "'" + path + "' is not valid JSON: " + e.what());
  }
}

Json domain_json(const wb::slit::SlitDomain& s) {
  return {{"weights", std::vector<double>(s.weights.inputs().begin(), s.weights.inputs().end())},
          {"w0", s.weights.w0()},
          {"punctures", s.punctures},
          {"critical_points", s.critical_points},
          {"slit_params", s.slit_params},
          {"levels", s.levels}};
}

Eigen::MatrixXd gram_from(const std::vector<double>& v) {
  if (v.size() == 3) return (Eigen::Matrix2d() << v[0], v[1], v[1], v[2]).finished();
  if (v.size() == 6) {
    return (Eigen::Matrix3d() << v[0], v[1], v[2], v[1], v[3], v[4], v[2], v[4], v[5]).finished();
  }
  throw Error(Errc::usage, "Gram matrices are given as a,b,c (2x2) or six upper-triangle entries (3x3)");
}

Eigen::MatrixXd matrix_from(const Json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) throw Error(Errc::usage, "expected a matrix as nested arrays");
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(Errc::usage, "ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

Json facet_json(const wb::moduli::Facet& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back({{"space", std::string(1, c.space)}, {"inputs", c.inputs}, {"dimension", c.dimension}});
  return {{"type", wb::moduli::facet_type_name(f.type)},
          {"term", f.term.label()},
          {"components", comps},
          {"dimension", f.dimension},
          {"parent_dimension", f.parent_dimension},
          {"strip_breaking", f.strip_breaking},
          {"strata", f.strata}};
}

Json chord_json(const wb::chords::ChordClass& c) {
  return {{"datum", c.datum}, {"length", c.length}, {"energy", c.energy}, {"action", c.action}, {"constant_family", c.constant_family}};
}

Json phase_json(const wb::chords::PhasePoint& p) { return std::vector<double>(p.begin(), p.end()); }

int emit(const Globals& g, const Json& result, bool pass) {
  Json out = result;
  out["status"] = pass ? "pass" : "fail";
  const std::string text = wb::workbench::dump(out);
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw Error(Errc::usage, "cannot write '" + g.out + "'");
    f << text;
  }
  if (g.json || g.out.empty()) std::cout << text;
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for slit domains, moduli combinatorics, signs, A-infinity relations, chords and gradings"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print the JSON result to stdout");
  app.add_option("--out", g.out, "Write the JSON result to FILE");
  app.add_option("--seed", g.seed, "Random seed")->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--tol", g.tol, "Tolerance override");
  app.add_option("--kmax", g.kmax, "Arity cap override");
  app.fallthrough();

  std::function<int()> action;

  // beta
  auto* beta = app.add_subcommand("beta", "Slit-domain maps and the one-form beta");
  beta->require_subcommand(1);
  std::vector<double> weights, punctures, u_weights, u_punctures, v_weights, v_punctures, slits;
  int grid = 200, slot = 1;
  double depth = 10.0, length = 5.0;
  auto* build = beta->add_subcommand("build", "Critical points, slit parameters and levels");
  build->add_option("--weights", weights, "Input weights w1,...,wk")->delimiter(',')->required();
  build->add_option("--punctures", punctures, "Punctures a1<...<ak")->delimiter(',')->required();
  build->callback([&] {
    action = [&] { return emit(g, domain_json(wb::slit::build_slit_map(wb::slit::Weights::from_inputs(weights), punctures)), true); };
  });
  auto* invert = beta->add_subcommand("invert", "Punctures from slit parameters");
  invert->add_option("--weights", weights, "Input weights")->delimiter(',')->required();
  invert->add_option("--slits", slits, "Slit parameters s1,...,s(k-1)")->delimiter(',')->required();
  invert->callback([&] {
    action = [&] {
      wb::slit::InvertOptions o;
      if (g.tol > 0) o.tol = g.tol;
      return emit(g, domain_json(wb::slit::invert_slit_params(wb::slit::Weights::from_inputs(weights), slits, o)), true);
    };
  });
  auto* verify = beta->add_subcommand("verify", "Residuals of the beta conditions on a grid");
  verify->add_option("--weights", weights, "Input weights")->delimiter(',')->required();
  verify->add_option("--punctures", punctures, "Punctures")->delimiter(',')->required();
  verify->add_option("--grid", grid, "Grid density")->check(CLI::PositiveNumber);
  verify->add_option("--depth", depth, "Coordinate depth of the end pullbacks");
  verify->callback([&] {
    action = [&] {
      const auto domain = wb::slit::build_slit_map(wb::slit::Weights::from_inputs(weights), punctures);
      wb::slit::VerifyOptions o;
      o.end_depth = depth;
      const auto r = wb::slit::verify_beta_conditions(domain, grid, g.tol > 0 ? g.tol : 1e-9, o);
      return emit(g,
                  {{"grid", r.grid_density},
                   {"tol", r.tol},
                   {"max_d_beta", r.max_d_beta},
                   {"max_d_beta_j", r.max_d_beta_j},
                   {"max_boundary_tangential", r.max_boundary_tangential},
                   {"end_deviation", r.end_deviation},
                   {"max_end_deviation", r.max_end_deviation}},
                  r.pass);
    };
  });
  auto* glue = beta->add_subcommand("glue", "Glue v into input slot i of u");
  glue->add_option("--u-weights", u_weights)->delimiter(',')->required();
  glue->add_option("--u-punctures", u_punctures)->delimiter(',')->required();
  glue->add_option("--v-weights", v_weights)->delimiter(',')->required();
  glue->add_option("--v-punctures", v_punctures)->delimiter(',')->required();
  glue->add_option("--slot", slot, "Input slot of v receiving u")->required();
  glue->add_option("--length", length, "Gluing length");
  glue->callback([&] {
    action = [&] {
      const auto u = wb::slit::build_slit_map(wb::slit::Weights::from_inputs(u_weights), u_punctures);
      const auto v = wb::slit::build_slit_map(wb::slit::Weights::from_inputs(v_weights), v_punctures);
      const auto glued = wb::slit::glue_slit_domains(u, v, slot, length);
      return emit(g, {{"glued", domain_json(glued)}, {"limit_slits", wb::slit::glued_limit_slits(u, v, slot, length)}}, true);
    };
  });

  // trees
  auto* trees = app.add_subcommand("trees", "Ribbon trees, strata and boundary facets");
  trees->require_subcommand(1);
  int k = 3;
  std::string space = "N";
  auto* enumerate = trees->add_subcommand("enumerate", "All ribbon trees with k leaves");
  enumerate->add_option("--k", k, "Number of inputs")->required();
  std::string enum_space = "M";
  enumerate->add_option("--space", enum_space, "M (trees), N or L (strata)")->check(CLI::IsMember({"M", "N", "L"}));
  enumerate->callback([&] {
    action = [&] {
      Json list = Json::array();
      auto classes_json = [](const wb::moduli::Stratum& s) {
        Json c = Json::array();
        for (auto v : s.classes) c.push_back(std::string(wb::moduli::class_name(v)));
        return c;
      };
      if (enum_space == "M") {
        for (const auto& t : wb::moduli::enumerate_trees(k)) {
          list.push_back({{"tree", t.encoding()}, {"dimension", wb::moduli::associahedron_dimension(t)}});
        }
      } else if (enum_space == "N") {
        for (const auto& s : wb::moduli::enumerate_strata_N(k)) {
          list.push_back({{"tree", s.tree.encoding()}, {"classes", classes_json(s)}, {"dimension", s.dimension}});
        }
      } else {
        for (const auto& s : wb::moduli::enumerate_strata_L(k)) {
          list.push_back({{"tree", s.base.tree.encoding()},
                          {"classes", classes_json(s.base)},
                          {"delta", {{"edge", s.delta.edge}, {"leaf", s.delta.node.leaf}, {"index", s.delta.node.index}}},
                          {"dimension", s.dimension}});
        }
      }
      return emit(g, {{"k", k}, {"space", enum_space}, {"count", list.size()}, {"trees", list}}, true);
    };
  });
  auto* facets = trees->add_subcommand("facets", "Codimension-one boundary facets");
  facets->add_option("--k", k, "Number of inputs")->required();
  facets->add_option("--space", space, "N or L")->check(CLI::IsMember({"N", "L"}));
  facets->callback([&] {
    action = [&] {
      const auto fs = space == "N" ? wb::moduli::boundary_facets_N(k) : wb::moduli::boundary_facets_L(k);
      Json list = Json::array();
      for (const auto& f : fs) list.push_back(facet_json(f));
      return emit(g, {{"k", k}, {"space", space}, {"count", list.size()}, {"facets", list}}, true);
    };
  });

  // signs
  auto* signs_cmd = app.add_subcommand("signs", "Sign-exponent identities");
  signs_cmd->require_subcommand(1);
  std::string identity = "m", corruption = "none";
  int d_max = 5, mu_max = 3;
  auto* sverify = signs_cmd->add_subcommand("verify", "Exhaustive check with least counterexample");
  sverify->add_option("--identity", identity, "m, f or fprime")->check(CLI::IsMember({"m", "f", "fprime"}));
  sverify->add_option("--dmax,--arity-max", d_max, "Largest d")->check(CLI::Range(1, 8));
  sverify->add_option("--mu-max,--deg-max", mu_max, "Largest degree")->check(CLI::Range(0, 7));
  sverify->add_option("--corrupt", corruption, "Negative control")->check(CLI::IsMember({"none", "drop_triangle", "drop_square"}));
  sverify->callback([&] {
    action = [&] {
      const auto id = *wb::signs::parse_identity(identity);
      const auto c = corruption == "none" ? wb::signs::Corruption::none
                     : corruption == "drop_triangle" ? wb::signs::Corruption::drop_triangle
                                                     : wb::signs::Corruption::drop_square;
      const auto r = wb::signs::verify_identity(id, {0, mu_max}, d_max, c);
      Json out = {{"identity", identity}, {"d_max", d_max}, {"mu_max", mu_max}, {"cases", r.cases}, {"corruption", corruption}};
      if (r.counterexample) {
        const auto& ce = *r.counterexample;
        out["counterexample"] = {{"d", ce.d}, {"n", ce.n}, {"m", ce.m}, {"partition", ce.partition}, {"mu", ce.mu},
                                 {"glued", ce.glued}, {"terms", ce.terms}, {"lhs", ce.lhs}, {"rhs", ce.rhs}};
      }
      return emit(g, out, r.pass());
    };
  });

  // ainfty
  auto* ainfty_cmd = app.add_subcommand("ainfty", "A-infinity relation checks on JSON tables");
  ainfty_cmd->require_subcommand(1);
  std::string kind = "m", input, inner = "prefix", club = "prefix_parts";
  auto* averify = ainfty_cmd->add_subcommand("verify", "Residuals of the A-infinity, functor or homotopy relations");
  averify->add_option("--kind", kind, "m, f or h")->check(CLI::IsMember({"m", "f", "h"}));
  averify->add_option("--in", input, "Input JSON")->required();
  averify->add_option("--inner-sign", inner, "Homotopy inner sign reading")->check(CLI::IsMember({"prefix", "weighted", "weighted_plus_arity"}));
  averify->add_option("--club", club, "Homotopy outer sign reading")->check(CLI::IsMember({"prefix_parts", "last_part"}));
  averify->callback([&] {
    action = [&] {
      using namespace wb::ainfty;
      const Json doc = read_json(input);
      const int cap = g.kmax > 0 ? g.kmax : 3;
      if (kind == "m") {
        const Category c = category_from_json(doc.contains("category") ? doc["category"] : doc);
        const auto r = verify_ainfty(c, cap);
        return emit(g, to_json(r, c.basis, c.basis), r.ok());
      }
      if (!doc.contains("source") || !doc.contains("target")) throw Error(Errc::usage, "expected 'source' and 'target' categories");
      const Category src = category_from_json(doc["source"]);
      const Category dst = category_from_json(doc["target"]);
      if (kind == "f") {
        const Functor f = functor_from_json(doc.at("functor"), src, dst);
        const auto r = verify_functor(f, src, dst, cap);
        return emit(g, to_json(r, src.basis, dst.basis), r.ok());
      }
      if (!doc.contains("f") || !doc.contains("g") || !doc.contains("homotopy")) throw Error(Errc::usage, "expected 'f', 'g' and 'homotopy'");
      const Functor f = functor_from_json(doc["f"], src, dst);
      const Functor gg = functor_from_json(doc["g"], src, dst);
      const Homotopy h = homotopy_from_json(doc["homotopy"], src, dst);
      HomotopySigns conv;
      conv.inner = inner == "prefix" ? InnerSign::prefix : inner == "weighted" ? InnerSign::weighted : InnerSign::weighted_plus_arity;
      conv.club = club == "prefix_parts" ? wb::signs::ClubReading::prefix_parts : wb::signs::ClubReading::last_part;
      const auto r = verify_homotopy(h, f, gg, src, dst, cap, conv);
      return emit(g, to_json(r, src.basis, dst.basis), r.ok());
    };
  });

  // chords
  auto* chords_cmd = app.add_subcommand("chords", "Chord spectra, metrics and Hamiltonian fields");
  chords_cmd->require_subcommand(1);
  std::string model = "t3", chart = "a";
  double height = 1.0, cutoff = -8.0;
  std::vector<double> gram{1, 0, 1}, g1, g2, point;
  auto* spectrum = chords_cmd->add_subcommand("spectrum", "Chord classes below an action cutoff");
  spectrum->add_option("--model", model, "t3 or t2")->check(CLI::IsMember({"t3", "t2"}));
  spectrum->set_help_flag("--help", "Print this help message and exit");
  spectrum->add_option("--h", height, "Vertical period of the T3 model");
  spectrum->add_option("--gram", gram, "Gram matrix a,b,c of the T2 lattice")->delimiter(',');
  spectrum->add_option("--cutoff", cutoff, "Action cutoff (negative)");
  spectrum->callback([&] {
    action = [&] {
      const auto s = model == "t3" ? wb::chords::enumerate_cords_T3(height, cutoff)
                                   : wb::chords::enumerate_loops_T2(wb::chords::make_lattice(gram_from(gram)), cutoff);
      Json list = Json::array();
      for (const auto& c : s.classes) list.push_back(chord_json(c));
      Json out = {{"model", s.model}, {"cutoff", s.cutoff}, {"classes", list}, {"nonconstant", s.nonconstant_count()},
                  {"height_constant", wb::chords::height_constant(s)}};
      if (s.nonconstant_count() > 0) out["gap"] = wb::chords::action_gap(s);
      return emit(g, out, true);
    };
  });
  auto* lipschitz = chords_cmd->add_subcommand("lipschitz", "Minimal Lipschitz constant between two metrics");
  lipschitz->add_option("--g1", g1, "First Gram matrix")->delimiter(',')->required();
  lipschitz->add_option("--g2", g2, "Second Gram matrix")->delimiter(',')->required();
  lipschitz->callback([&] {
    action = [&] { return emit(g, {{"lipschitz", wb::chords::lipschitz_constant(gram_from(g1), gram_from(g2))}}, true); };
  });
  auto* xh = chords_cmd->add_subcommand("xh", "Hamiltonian vector field at a phase point");
  xh->add_option("--point", point, "q1,q2,q3,p1,p2,p3")->delimiter(',')->required()->expected(6);
  xh->add_option("--chart", chart, "a or r")->check(CLI::IsMember({"a", "r"}));
  xh->callback([&] {
    action = [&] {
      if (point.size() != 6) throw Error(Errc::usage, "--point needs six numbers");
      wb::chords::PhasePoint p;
      std::copy(point.begin(), point.end(), p.begin());
      const auto c = chart == "a" ? wb::chords::Chart::a : wb::chords::Chart::r;
      const auto num = wb::chords::hamiltonian_vector_field({}, p, c);
      const auto closed = wb::chords::closed_form_field({}, p, c);
      double err = 0;
      for (int i = 0; i < 6; ++i) err = std::max(err, std::abs(num[i] - closed[i]) / std::max(1.0, std::abs(closed[i])));
      const double tol = g.tol > 0 ? g.tol : 1e-10;
      return emit(g, {{"chart", chart}, {"point", point}, {"numeric", phase_json(num)}, {"closed_form", phase_json(closed)},
                      {"max_error", err}, {"tol", tol}},
                  err < tol);
    };
  });
  auto* adjust = chords_cmd->add_subcommand("adjust", "Cylindrical adjustment of the tube metric");
  double adjust_depth = 2.0;
  adjust->add_option("--depth", adjust_depth, "Adjustment depth i");
  adjust->callback([&] {
    action = [&] {
      const auto m = wb::chords::model_for_depth(adjust_depth);
      const auto r = wb::chords::cylindrical_adjust(m, 41);
      Json samples = Json::array();
      for (const auto& [a, c] : r.samples) samples.push_back({{"a", a}, {"aa", c.aa}, {"thth", c.thth}, {"phph", c.phph}});
      return emit(g, {{"epsilon1", r.epsilon1}, {"far", {r.far.aa, r.far.thth, r.far.phph}}, {"monotone", r.monotone},
                      {"positive", r.positive}, {"max_inside_deviation", r.max_inside_deviation},
                      {"max_far_deviation", r.max_far_deviation}, {"samples", samples}},
                  r.monotone && r.positive);
    };
  });

  // grading
  auto* grading = app.add_subcommand("grading", "Robbin-Salamon indices");
  grading->require_subcommand(1);
  std::string path_file, ref_file;
  auto* rs = grading->add_subcommand("rs", "Index of a sampled symplectic path acting on a frame");
  rs->add_option("--path", path_file, "{\"times\": [...], \"matrices\": [...], \"frame\": rows}")->required();
  rs->add_option("--ref", ref_file, "{\"rows\": ...}")->required();
  rs->callback([&] {
    action = [&] {
      using namespace wb::maslov;
      const Json pj = read_json(path_file);
      const Json rj = read_json(ref_file);
      std::vector<Eigen::MatrixXd> mats;
      for (const Json& m : pj.at("matrices")) mats.push_back(matrix_from(m));
      const auto path = SymplecticPath::from_samples(pj.at("times").get<std::vector<double>>(), mats);
      const int n = static_cast<int>(mats.front().rows() / 2);
      const LagrangianFrame base = pj.contains("frame") ? LagrangianFrame::from_rows(matrix_from(pj["frame"])) : real_frame(n);
      const LagrangianFrame ref = LagrangianFrame::from_rows(matrix_from(rj.contains("rows") ? rj["rows"] : rj));
      const auto r = rs_index(path.acting_on(base), ref);
      Json cross = Json::array();
      for (const auto& c : r.crossings) cross.push_back({{"t", c.t}, {"kernel_dim", c.kernel_dim}, {"twice_contribution", c.twice_contribution}, {"endpoint", c.endpoint}});
      return emit(g, {{"index", r.value()}, {"twice_index", r.twice}, {"perturbed", r.perturbed}, {"crossings", cross}}, true);
    };
  });
  auto* chord = grading->add_subcommand("chord", "Index of a T3 vertical chord");
  int wrap = 1;
  chord->add_option("--k", wrap, "Wrap number (0 for the constant family)");
  chord->set_help_flag("--help", "Print this help message and exit");
  chord->add_option("--h", height, "Vertical period");
  chord->callback([&] {
    action = [&] {
      const auto c = wb::maslov::chord_index(wb::chords::make_chord({wrap}, std::abs(wrap) * height));
      return emit(g, {{"k", wrap}, {"index", c.value()}, {"twice_index", c.twice}, {"morse_bott", c.morse_bott}}, true);
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run the configured verification checks");
  std::string config_path;
  std::vector<std::string> only;
  suite->add_option("--config", config_path, "JSON config (default: $WORKBENCH_CONFIG)");
  suite->add_option("--checks", only, "Restrict to these checks")->delimiter(',');
  suite->callback([&] {
    action = [&] {
      using namespace wb::workbench;
      if (config_path.empty()) {
        if (const char* env = std::getenv("WORKBENCH_CONFIG")) config_path = env;
      }
      SuiteConfig cfg = config_path.empty() ? SuiteConfig::defaults() : SuiteConfig::from_json(read_json(config_path));
      if (!only.empty()) {
        for (const std::string& name : only) {
          const auto& known = known_checks();
          if (std::find(known.begin(), known.end(), name) == known.end()) throw Error(Errc::usage, "unknown check '" + name + "'");
        }
        cfg.checks = only;
      }
      if (g.seed_set) cfg.seed = g.seed;
      if (g.tol > 0) cfg.tol = g.tol;
      if (g.kmax > 0) cfg.kmax = g.kmax;
      const RunReport rep = run_suite(cfg, std::vector<std::string>(argv, argv + argc));
      if (!g.json) {
        for (const auto& c : rep.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
      }
      if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) throw Error(Errc::usage, "cannot write '" + g.out + "'");
        f << dump(rep.to_json());
      }
      if (g.json) std::cout << dump(rep.to_json());
      return rep.pass() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error [" << wb::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == Errc::usage || e.code() == Errc::invalid_input ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
