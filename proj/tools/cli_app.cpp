#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adsvol/config.hpp"
#include "adsvol/json_io.hpp"
#include "adsvol/parallel.hpp"
#include "adsvol/riera.hpp"

namespace adsvol::cli {

namespace {

using nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
      return 4;
    case ErrorKind::NotHyperbolic:
    case ErrorKind::NumericalFailure:
    case ErrorKind::DegenerateLength:
    case ErrorKind::UnsupportedGenus:
    case ErrorKind::NotSimple:
      return 3;
    default:
      return 2;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOpts {
  std::string input;
  bool json = false;
  bool csv = false;
  int radius = 4;
  std::uint64_t budget = curves::kDefaultEnumerationBudget;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;

  RunConfig config() const {
    RunConfig cfg;
    cfg.word_radius = radius;
    cfg.budget = budget;
    cfg.threads = threads;
    cfg.seed = seed;
    cfg.tolerance = tolerance;
    cfg.format = json ? OutputFormat::Json : (csv ? OutputFormat::Csv : OutputFormat::Text);
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", opts->input, "surface description JSON file")->required();
  }
  cmd->add_flag("--json", opts->json, "emit a schema-stable JSON report");
  cmd->add_option("--radius", opts->radius, "word enumeration radius");
  cmd->add_option("--budget", opts->budget, "word enumeration budget");
  cmd->add_option("--threads", opts->threads, "worker threads (default: ADSVOL_THREADS or cores)");
  cmd->add_option("--seed", opts->seed, "random seed for sweep sampling");
  cmd->add_option("--tolerance", opts->tolerance, "validation tolerance");
}

json_io::SurfaceDescription load_surface(const CommonOpts& opts) {
  return json_io::parse_surface(read_file(opts.input));
}

curves::CurveClass parse_curve(const std::string& word, int edge,
                               const surface::HolonomyRep& rep) {
  if (!word.empty()) return curves::CurveClass::parse(word, rep.genus());
  return rep.edge_word(edge);
}

std::ostream& num(std::ostream& os) { return os << std::setprecision(12); }

// ---- subcommand bodies ----------------------------------------------------

int cmd_surface(const CommonOpts& opts, std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription desc = load_surface(opts);
  json_io::SurfaceValidation v = json_io::validate_surface(desc, opts.tolerance);
  if (opts.json) {
    out << json_io::to_json(v);
  } else {
    num(out) << "genus " << v.genus << ", relator residual " << v.relator_residual << "\n";
    for (std::size_t i = 0; i < v.edge_traces.size(); ++i) {
      num(out) << "edge " << i << ": |trace| " << v.edge_traces[i] << " expected "
               << v.expected_traces[i] << "\n";
    }
    out << (v.pass ? "pass" : "fail") << "\n";
  }
  return v.pass ? 0 : 3;
}

int cmd_length(const CommonOpts& opts, const std::string& word, int edge, std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription desc = load_surface(opts);
  surface::HolonomyRep rep = surface::build_holonomy(desc.topology, desc.fn);
  curves::CurveClass c = parse_curve(word, edge, rep);
  double len = surface::curve_length(rep, c);
  if (opts.json) {
    out << json_io::scalar_json("curve_length:" + c.str(), len);
  } else {
    num(out) << "length(" << c.str() << ") = " << len << "\n";
  }
  return 0;
}

int cmd_intersect(const CommonOpts& opts, const std::string& w1, const std::string& w2,
                  std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription desc = load_surface(opts);
  surface::HolonomyRep rep = surface::build_holonomy(desc.topology, desc.fn);
  curves::CurveClass c1 = curves::CurveClass::parse(w1, rep.genus());
  curves::CurveClass c2 = curves::CurveClass::parse(w2, rep.genus());
  curves::IntersectionResult r = curves::intersection_number(rep, c1, c2, opts.radius, opts.budget);
  if (opts.json) {
    out << json_io::to_json(r);
  } else {
    num(out) << "iota(" << c1.str() << ", " << c2.str() << ") >= " << r.count_lower_bound
             << (r.certified_exact ? " (certified exact)" : " (lower bound)") << " at radius "
             << r.enumeration_radius << "\n";
  }
  return 0;
}

int cmd_twist(const CommonOpts& opts, const std::vector<double>& weights,
              const std::string& direction, std::ostream& out) {
  json_io::SurfaceDescription desc = load_surface(opts);
  deform::TwistSpec spec;
  spec.weights = weights;
  if (direction == "left") {
    spec.direction = deform::TwistDirection::Left;
  } else if (direction == "right") {
    spec.direction = deform::TwistDirection::Right;
  } else {
    fail(ErrorKind::InvalidInput, "direction must be left or right");
  }
  surface::FNCoordinates fn = deform::earthquake(desc.fn, spec);
  out << json_io::surface_to_json(desc.topology.genus, fn);
  return 0;
}

int cmd_twist_derivative(const CommonOpts& opts, int edge, const std::string& word, double step,
                         std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription desc = load_surface(opts);
  surface::HolonomyRep rep = surface::build_holonomy(desc.topology, desc.fn);
  curves::CurveClass witness = curves::CurveClass::parse(word, rep.genus());
  double d = deform::twist_length_derivative(desc.topology, desc.fn, edge, witness, step);
  if (opts.json) {
    out << json_io::scalar_json("twist_length_derivative:" + witness.str(), d);
  } else {
    num(out) << "d length(" << witness.str() << ") / d twist[" << edge << "] = " << d << "\n";
  }
  return 0;
}

int cmd_riera(const CommonOpts& opts, const std::string& word, int edge, std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription desc = load_surface(opts);
  surface::HolonomyRep rep = surface::build_holonomy(desc.topology, desc.fn);
  curves::CurveClass c = parse_curve(word, edge, rep);
  riera::RieraReport r = riera::wp_grad_normsq_lower(rep, c, opts.radius, opts.budget);
  double ratio = std::sqrt(r.lower_bound) * (2.0 * rep.genus() - 2.0) /
                 surface::curve_length(rep, c);
  if (opts.json) {
    out << json_io::to_json(r, c.str(), ratio);
  } else {
    num(out) << "curve " << c.str() << ", radius " << r.word_radius << "\n"
             << "base term        " << r.base_term << "\n"
             << "series sum       " << r.series_sum << " (" << r.n_terms << " terms, "
             << r.n_skipped_near_tangent << " near-tangent skipped)\n"
             << "lower bound      " << r.lower_bound << "\n"
             << "mainestimate     " << ratio << "\n";
  }
  return 0;
}

int cmd_ratio(const CommonOpts& opts, const std::string& input2, int max_len, std::ostream& out) {
  opts.config();  // validates budget/tolerance/radius
  json_io::SurfaceDescription d1 = load_surface(opts);
  json_io::SurfaceDescription d2 = json_io::parse_surface(read_file(input2));
  surface::HolonomyRep h = surface::build_holonomy(d1.topology, d1.fn);
  surface::HolonomyRep h2 = surface::build_holonomy(d2.topology, d2.fn);
  double r = curves::thurston_ratio_lower_bound(h, h2, max_len, opts.budget);
  if (opts.json) {
    out << json_io::scalar_json("thurston_ratio_lower_bound", r);
  } else {
    num(out) << "sup length ratio >= " << r << " (exp(d_Th) lower bound, word length <= "
             << max_len << ")\n";
  }
  return 0;
}

int cmd_energy(const CommonOpts& opts, int genus, double mc_length, double eps, int resolution,
               std::ostream& out) {
  deform::EnergyReport r = deform::collar_testmap_energy(genus, mc_length, eps, resolution);
  if (opts.json) {
    out << json_io::to_json(r, genus, mc_length);
  } else {
    num(out) << "total energy " << r.total_energy << " (collar " << r.collar_contribution
             << ", isometric " << r.isometric_contribution << ", " << r.quadrature_points
             << " quadrature points)\n";
  }
  return 0;
}

int cmd_bounds(const CommonOpts& opts, const std::string& op, int genus, double x, double a,
               double b, double c, const std::string& matrix, std::ostream& out) {
  auto scalar = [&](const char* name, double v) {
    if (opts.json) {
      out << json_io::scalar_json(name, v);
    } else {
      num(out) << name << " = " << v << "\n";
    }
    return 0;
  };
  if (op == "volume-bracket") {
    bounds::VolumeBracket br = bounds::volume_bracket_from_lamination(x, genus);
    if (opts.json) {
      out << json_io::to_json(br);
    } else {
      num(out) << "[" << br.lower << ", " << br.upper << "]\n";
    }
    return 0;
  }
  if (op == "fuchsian-volume") return scalar("fuchsian_volume", bounds::fuchsian_volume(genus));
  if (op == "thurston-upper") return scalar("thurston_upper", bounds::thurston_upper_bound(x, genus));
  if (op == "thurston-upper-gradient") {
    return scalar("thurston_upper_gradient", bounds::thurston_upper_bound_gradient_form(x, a, genus));
  }
  if (op == "wp-lower") return scalar("wp_lower", bounds::wp_lower_bound_form(x, a, b, c, genus));
  if (op == "wp-pinching") return scalar("wp_pinching", bounds::wp_pinching(x));
  if (op == "wp-level-distance") {
    return scalar("wp_level_distance", bounds::wp_level_distance(x, b, genus, a));
  }
  if (op == "wp-level-diameter") return scalar("wp_level_diameter", bounds::wp_level_diameter(x));
  if (op == "collar-width") return scalar("collar_width", hypgeom::collar_width(x));
  if (op == "bers") return scalar("bers_constant", surface::bers_constant(genus));
  if (op == "hexagon") return scalar("hexagon_opposite", hypgeom::hexagon_opposite(a, b));
  if (op == "densities") {
    std::array<std::array<double, 2>, 2> m{};
    std::istringstream ss(matrix);
    std::string tok;
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ss, tok, ',')) fail(ErrorKind::InvalidInput, "matrix needs 4 entries");
      m[i / 2][i % 2] = std::stod(tok);
    }
    bounds::DensityReport r = bounds::pointwise_densities(m);
    if (opts.json) {
      out << json_io::to_json(r);
    } else {
      num(out) << "|df| " << r.norm_df << ", |del| " << r.norm_del << ", |delbar| "
               << r.norm_delbar << ", trace " << r.schatten_trace << ", orientation "
               << (r.orientation_preserving ? "+" : "-") << "\n";
    }
    return 0;
  }
  fail(ErrorKind::InvalidInput, "unknown bounds op: " + op);
}

int cmd_reproduce_prop52(const CommonOpts& opts, int n_max, double mu, std::ostream& out) {
  std::vector<bounds::Prop52Report> rows;
  for (int n = 1; n <= n_max; ++n) rows.push_back(bounds::example_prop52(n, mu));
  bounds::LogFit fit = bounds::fit_prop52_log_constants(mu);
  if (opts.json) {
    ordered_json j;
    j["version"] = kVersion;
    j["kind"] = "prop52_table";
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(ordered_json::parse(json_io::to_json(r)));
    j["rows"] = arr;
    j["log_fit"] = ordered_json::parse(json_io::to_json(fit));
    out << j.dump(2) << "\n";
  } else if (opts.csv) {
    out << "n,alpha_length,lambda_length,beta_closed_form,beta_holonomy,ratio_floor,"
           "bracket_lower,bracket_upper\n";
    for (const auto& r : rows) {
      num(out) << r.n << "," << r.alpha_length << "," << r.lambda_length << ","
               << r.beta_length_closed_form << "," << r.beta_length_holonomy << ","
               << r.ratio_floor << "," << r.bracket.lower << "," << r.bracket.upper << "\n";
    }
  } else {
    out << "  n   l_lambda    beta(closed)   beta(holonomy)   ratio floor   bracket\n";
    for (const auto& r : rows) {
      num(out) << std::setw(3) << r.n << "   " << std::setw(8) << r.lambda_length << "   "
               << std::setw(12) << r.beta_length_closed_form << "   " << std::setw(14)
               << r.beta_length_holonomy << "   " << std::setw(11) << r.ratio_floor << "   ["
               << r.bracket.lower << ", " << r.bracket.upper << "]\n";
    }
    num(out) << "fitted beta(n) ~ " << fit.c1 << " log n + " << fit.c2
             << " (empirical fit, max residual " << fit.max_residual << ")\n";
  }
  return 0;
}

int cmd_reproduce_genus_opt(const CommonOpts& opts, int genus, double u, double weight,
                            std::ostream& out) {
  bounds::GenusOptimalityReport r = bounds::example_genus_optimality(genus, u, weight);
  if (opts.json) {
    out << json_io::to_json(r);
  } else {
    num(out) << "r(u) = " << r.r_u << ", lambda length = " << r.lambda_length
             << ", exp(d_Th) upper = " << r.exp_dth_upper << "\n"
             << "volume ratio floor = " << r.volume_ratio_floor << "\n"
             << std::setprecision(4) << "C0 = " << r.c0 << " at u = " << r.c0_argmax << "\n";
  }
  return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& config_path, std::ostream& out);

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic-surface toolkit: holonomy, earthquakes, gradient series, and "
               "volume bound evaluators"};
  app.require_subcommand(1);

  CommonOpts o_surface, o_length, o_intersect, o_twist, o_tder, o_riera, o_energy, o_bounds,
      o_repr, o_sweep;

  auto* c_surface = app.add_subcommand("surface", "validate a surface description");
  add_common(c_surface, &o_surface);

  auto* c_length = app.add_subcommand("length", "geodesic length of a curve class");
  add_common(c_length, &o_length);
  std::string length_word;
  int length_edge = 0;
  c_length->add_option("--word", length_word, "curve word (a..d, uppercase inverse)");
  c_length->add_option("--edge", length_edge, "decomposition edge index");

  auto* c_intersect = app.add_subcommand("intersect", "geometric intersection number");
  add_common(c_intersect, &o_intersect);
  std::string int_w1, int_w2;
  c_intersect->add_option("--word1", int_w1, "first curve word")->required();
  c_intersect->add_option("--word2", int_w2, "second curve word")->required();

  auto* c_twist = app.add_subcommand("twist", "earthquake along decomposition weights");
  add_common(c_twist, &o_twist);
  std::vector<double> twist_weights;
  std::string twist_dir = "left";
  c_twist->add_option("--weights", twist_weights, "per-edge weights")->required()->delimiter(',');
  c_twist->add_option("--direction", twist_dir, "left|right");

  auto* c_tder = app.add_subcommand("twist-derivative", "finite-difference length variation");
  add_common(c_tder, &o_tder);
  int tder_edge = 0;
  std::string tder_word;
  double tder_step = 1e-4;
  c_tder->add_option("--edge", tder_edge, "twisted edge")->required();
  c_tder->add_option("--word", tder_word, "witness curve word")->required();
  c_tder->add_option("--step", tder_step, "finite-difference step");

  auto* c_riera = app.add_subcommand("riera", "WP gradient norm-squared lower bound");
  add_common(c_riera, &o_riera);
  std::string riera_word;
  int riera_edge = 0;
  c_riera->add_option("--word", riera_word, "curve word");
  c_riera->add_option("--edge", riera_edge, "decomposition edge index");

  CommonOpts o_ratio;
  auto* c_ratio = app.add_subcommand("ratio", "length-ratio lower bound for exp(d_Th)");
  add_common(c_ratio, &o_ratio);
  std::string ratio_input2;
  int ratio_len = 4;
  c_ratio->add_option("--input2", ratio_input2, "target surface JSON")->required();
  c_ratio->add_option("--max-length", ratio_len, "maximum word length");

  auto* c_energy = app.add_subcommand("energy", "collar test-map total-variation energy");
  add_common(c_energy, &o_energy, false);
  int en_genus = 2, en_res = 256;
  double en_mc = 1.0, en_eps = 0.1;
  c_energy->add_option("--genus", en_genus, "surface genus");
  c_energy->add_option("--mc-length", en_mc, "lamination length");
  c_energy->add_option("--eps", en_eps, "collar half-width");
  c_energy->add_option("--resolution", en_res, "quadrature panels");

  auto* c_bounds = app.add_subcommand("bounds", "closed-form bound evaluators");
  add_common(c_bounds, &o_bounds, false);
  std::string b_op, b_matrix;
  int b_genus = 2;
  double b_x = 0.0, b_a = 1.0, b_b = 1.0, b_c = 1.0;
  c_bounds->add_option("--op", b_op, "evaluator name")->required();
  c_bounds->add_option("--genus", b_genus, "surface genus");
  c_bounds->add_option("--x", b_x, "principal argument (length/distance/eps)");
  c_bounds->add_option("--a", b_a, "constant a");
  c_bounds->add_option("--b", b_b, "constant b");
  c_bounds->add_option("--c", b_c, "constant c");
  c_bounds->add_option("--matrix", b_matrix, "2x2 matrix entries a,b,c,d");

  auto* c_repr = app.add_subcommand("reproduce", "closed-form example families");
  add_common(c_repr, &o_repr, false);
  c_repr->add_flag("--csv", o_repr.csv, "emit CSV");
  std::string repr_what;
  int repr_nmax = 8, repr_genus = 2;
  double repr_mu = 2.0, repr_u = 2.0, repr_w = 1.0;
  c_repr->add_option("family", repr_what, "prop52 | genus-optimality | fuchsian")->required();
  c_repr->add_option("--n-max", repr_nmax, "largest family index");
  c_repr->add_option("--mu", repr_mu, "separating curve length");
  c_repr->add_option("--genus", repr_genus, "surface genus");
  c_repr->add_option("--u", repr_u, "pants boundary length");
  c_repr->add_option("--weight", repr_w, "twist weight");

  auto* c_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_common(c_sweep, &o_sweep, false);
  c_sweep->add_flag("--csv", o_sweep.csv, "emit CSV (default)");
  std::string sweep_config;
  c_sweep->add_option("--config", sweep_config, "sweep configuration JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_surface) return cmd_surface(o_surface, out);
    if (*c_length) return cmd_length(o_length, length_word, length_edge, out);
    if (*c_intersect) return cmd_intersect(o_intersect, int_w1, int_w2, out);
    if (*c_twist) return cmd_twist(o_twist, twist_weights, twist_dir, out);
    if (*c_tder) return cmd_twist_derivative(o_tder, tder_edge, tder_word, tder_step, out);
    if (*c_riera) return cmd_riera(o_riera, riera_word, riera_edge, out);
    if (*c_ratio) return cmd_ratio(o_ratio, ratio_input2, ratio_len, out);
    if (*c_energy) return cmd_energy(o_energy, en_genus, en_mc, en_eps, en_res, out);
    if (*c_bounds) return cmd_bounds(o_bounds, b_op, b_genus, b_x, b_a, b_b, b_c, b_matrix, out);
    if (*c_repr) {
      if (repr_what == "prop52") return cmd_reproduce_prop52(o_repr, repr_nmax, repr_mu, out);
      if (repr_what == "genus-optimality") {
        return cmd_reproduce_genus_opt(o_repr, repr_genus, repr_u, repr_w, out);
      }
      if (repr_what == "fuchsian") {
        double v = bounds::fuchsian_volume(repr_genus);
        if (o_repr.json) {
          out << json_io::scalar_json("fuchsian_volume", v);
        } else {
          num(out) << "fuchsian volume (genus " << repr_genus << ") = " << v << "\n";
        }
        return 0;
      }
      fail(ErrorKind::InvalidInput, "unknown family: " + repr_what);
    }
    if (*c_sweep) return cmd_sweep(o_sweep, sweep_config, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

int cmd_sweep(const CommonOpts& opts, const std::string& config_path, std::ostream& out) {
  RunConfig cfg = opts.config();
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(config_path));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("sweep config parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("op")) {
    fail(ErrorKind::InvalidInput, "sweep config needs an op field");
  }
  std::string op = j["op"].get<std::string>();

  struct Row {
    std::vector<double> cells;
  };

  auto surface_of = [&](const ordered_json& sj) {
    return json_io::parse_surface(sj.dump());
  };

  std::vector<std::string> header;
  std::vector<Row> rows;

  if (op == "riera" || op == "length") {
    if (!j.contains("surface")) fail(ErrorKind::InvalidInput, "sweep needs a surface field");
    std::string curve = j.value("curve", std::string("a"));
    int radius = j.value("radius", opts.radius);

    struct Sample {
      surface::FNCoordinates fn;
      double param = 0.0;
    };
    std::vector<Sample> samples;
    json_io::SurfaceDescription base = surface_of(j["surface"]);

    if (j.contains("vary")) {
      const auto& vary = j["vary"];
      std::string param = vary.at("param").get<std::string>();
      for (const auto& v : vary.at("values")) {
        Sample s{base.fn, v.get<double>()};
        if (param.rfind("length", 0) == 0) {
          s.fn.lengths.at(std::stoul(param.substr(6))) = s.param;
        } else if (param.rfind("twist", 0) == 0) {
          s.fn.twists.at(std::stoul(param.substr(5))) = s.param;
        } else {
          fail(ErrorKind::InvalidInput, "vary.param must be lengthK or twistK");
        }
        samples.push_back(s);
      }
      header = {param};
    } else if (j.contains("random_surfaces")) {
      int n = j["random_surfaces"].get<int>();
      std::mt19937_64 eng(cfg.seed);
      auto uni = [&eng](double lo, double hi) {
        return lo + (hi - lo) * double(eng() >> 11) * 0x1.0p-53;
      };
      for (int i = 0; i < n; ++i) {
        Sample s;
        for (int k = 0; k < base.topology.num_curves(); ++k) {
          s.fn.lengths.push_back(uni(0.3, 3.0));
          s.fn.twists.push_back(uni(-3.0, 3.0));
        }
        s.param = i;
        samples.push_back(s);
      }
      header = {"sample"};
    } else {
      fail(ErrorKind::InvalidInput, "sweep needs vary or random_surfaces");
    }

    if (op == "riera") {
      header.insert(header.end(), {"curve_length", "lower_bound", "mainestimate_ratio"});
    } else {
      header.insert(header.end(), {"curve_length"});
    }
    rows.resize(samples.size());
    parallel_for(samples.size(), cfg.effective_threads(), [&](std::size_t i) {
      surface::HolonomyRep rep = surface::build_holonomy(base.topology, samples[i].fn);
      curves::CurveClass c = curves::CurveClass::parse(curve, rep.genus());
      double len = surface::curve_length(rep, c);
      Row row;
      row.cells.push_back(samples[i].param);
      row.cells.push_back(len);
      if (op == "riera") {
        riera::RieraReport r = riera::wp_grad_normsq_lower(rep, c, radius, cfg.budget);
        row.cells.push_back(r.lower_bound);
        row.cells.push_back(std::sqrt(r.lower_bound) * (2.0 * rep.genus() - 2.0) / len);
      }
      rows[i] = row;
    });
  } else if (op == "energy") {
    int genus = j.value("genus", 2);
    double eps = j.value("eps", 0.1);
    int resolution = j.value("resolution", 256);
    if (!j.contains("vary") || j["vary"].at("param").get<std::string>() != "mc_length") {
      fail(ErrorKind::InvalidInput, "energy sweep varies mc_length");
    }
    std::vector<double> values;
    for (const auto& v : j["vary"].at("values")) values.push_back(v.get<double>());
    header = {"mc_length", "total_energy", "collar", "isometric"};
    rows.resize(values.size());
    parallel_for(values.size(), cfg.effective_threads(), [&](std::size_t i) {
      deform::EnergyReport r = deform::collar_testmap_energy(genus, values[i], eps, resolution);
      rows[i] = Row{{values[i], r.total_energy, r.collar_contribution, r.isometric_contribution}};
    });
  } else {
    fail(ErrorKind::InvalidInput, "sweep op must be riera, length, or energy");
  }

  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << "\n";
  out << std::setprecision(12);
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < r.cells.size(); ++i) out << (i ? "," : "") << r.cells[i];
    out << "\n";
  }
  return 0;
}

}  // namespace

}  // namespace adsvol::cli
