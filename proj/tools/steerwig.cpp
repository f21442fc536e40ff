// steerwig: command-line front end.
//
//   steerwig analyze epr --n 1.2 --sdb 4 --sdb2 4
//   steerwig sweep epr --axis n:1:2:101 --axis sdb:0:10:101 --out fig1.csv
//   steerwig wigner graph --graph data/chain6.txt --f 2 --g 1 --sdb 3 --r optimal --out w.csv
//   steerwig verify --n 1.2 --sdb 4 --sdb2 4 --cutoff 30
//   steerwig graph-info --graph data/chain6.txt
//
// Exit codes: 0 ok, 2 domain/precondition error, 3 I/O error, 4 verification failure.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steerwig/fock_oracle.hpp"
#include "steerwig/state_factories.hpp"
#include "steerwig/subtraction.hpp"
#include "steerwig/sweep.hpp"

namespace {

using namespace steerwig;
using json = nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

// Flags > config file > defaults.
struct Settings {
  json config = json::object();

  template <typename T>
  T get(const CLI::Option* opt, const T& flag_value, const std::string& key) const {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    if (config.contains(key)) {
      try {
        return config.at(key).get<T>();
      } catch (const json::exception& e) {
        throw Error(ErrorKind::domain, "config key '" + key + "': " + e.what());
      }
    }
    return flag_value;
  }
  bool has(const std::string& key) const { return config.contains(key); }
};

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config file " + path);
  try {
    json cfg = json::parse(in);
    if (!cfg.is_object()) throw Error(ErrorKind::parse, "config file must hold a JSON object");
    return cfg;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "config file " + path + ": " + e.what());
  }
}

Vec2 parse_vec2(const std::string& text, const char* what) {
  std::stringstream ss(text);
  std::string a;
  std::string b;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b) || a.empty() || b.empty())
    throw Error(ErrorKind::domain, std::string(what) + ": expected 'x,p'");
  try {
    return Vec2(std::stod(a), std::stod(b));
  } catch (const std::exception&) {
    throw Error(ErrorKind::domain, std::string(what) + ": malformed number");
  }
}

// Options shared by analyze / sweep / wigner / verify.
struct StateOptions {
  std::string family = "epr";
  double n = 1.0;
  double sdb = 0.0;
  double sdb2 = 0.0;
  double asym_db = 0.0;
  std::string graph_path;
  int f = 1;
  int g = 2;
  std::string xi_f = "0,0";
  std::string xi_g = "0,0";
  std::string config_path;

  CLI::Option* o_family = nullptr;
  CLI::Option* o_n = nullptr;
  CLI::Option* o_sdb = nullptr;
  CLI::Option* o_sdb2 = nullptr;
  CLI::Option* o_asym = nullptr;
  CLI::Option* o_graph = nullptr;
  CLI::Option* o_f = nullptr;
  CLI::Option* o_g = nullptr;
  CLI::Option* o_xi_f = nullptr;
  CLI::Option* o_xi_g = nullptr;

  void add(CLI::App* app, bool with_family, bool sweep_style) {
    if (with_family)
      o_family =
          app->add_option("family", family, "State family: epr or graph")->check(CLI::IsMember({"epr", "graph"}));
    o_n = app->add_option("--n", n, "Thermal noise factor n >= 1");
    o_sdb = app->add_option("--sdb", sdb,
                            sweep_style ? "Squeezing in dB (geometric mean for epr)"
                                        : "Squeezing in dB (s1 for epr, s for graph)");
    if (sweep_style)
      o_asym = app->add_option("--asym-db", asym_db, "EPR asymmetry 10 log10(s1/s2) in dB");
    else
      o_sdb2 = app->add_option("--sdb2", sdb2, "EPR second squeezer s2 in dB (default: --sdb)");
    o_graph = app->add_option("--graph", graph_path, "Graph edge-list file");
    o_f = app->add_option("--f", f, "Target mode f (1-based)");
    o_g = app->add_option("--g", g, "Subtraction mode g (1-based)");
    o_xi_f = app->add_option("--xi-f", xi_f, "Displacement added to mode f, 'x,p'");
    o_xi_g = app->add_option("--xi-g", xi_g, "Displacement added to mode g, 'x,p'");
    app->add_option("--config", config_path, "JSON config file (flags take precedence)");
  }

  struct Resolved {
    StateFamily family;
    SweepParameters params;
    std::optional<Graph> graph;
    std::string graph_source;
    ModeSelection modes;
    Vec2 xi_f;
    Vec2 xi_g;
  };

  Resolved resolve(const Settings& cfg, bool sweep_style) const {
    Resolved r;
    r.family = parse_family(cfg.get(o_family, family, "family"));

    r.params.n = cfg.get(o_n, n, "n");
    const double s1 = cfg.get(o_sdb, sdb, "sdb");
    r.params.sdb = s1;
    if (sweep_style) {
      r.params.asym_db = cfg.get(o_asym, asym_db, "asym_db");
    } else {
      const bool s2_given = (o_sdb2 != nullptr && o_sdb2->count() > 0) || cfg.has("sdb2");
      const double s2 = s2_given ? cfg.get(o_sdb2, sdb2, "sdb2") : s1;
      r.params.sdb = (s1 + s2) / 2.0;
      r.params.asym_db = s1 - s2;
    }
    (void)ThermalNoise(r.params.n);

    const std::string path = cfg.get(o_graph, graph_path, "graph");
    if (r.family == StateFamily::graph) {
      if (path.empty()) throw Error(ErrorKind::domain, "graph family requires --graph <edge list>");
      std::vector<std::string> warnings;
      r.graph = load_graph(path, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << '\n';
      r.graph_source = path;
    }

    r.modes.f = cfg.get(o_f, f, "f") - 1;
    r.modes.g = cfg.get(o_g, g, "g") - 1;
    if (cfg.has("f_vector")) r.modes.f_vector = vec_from_json(cfg.config.at("f_vector"), "f_vector");
    if (cfg.has("g_vector")) r.modes.g_vector = vec_from_json(cfg.config.at("g_vector"), "g_vector");
    r.xi_f = parse_vec2(cfg.get(o_xi_f, xi_f, "xi_f"), "--xi-f");
    r.xi_g = parse_vec2(cfg.get(o_xi_g, xi_g, "xi_g"), "--xi-g");
    return r;
  }

  static VecX vec_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw Error(ErrorKind::domain, std::string("config key '") + key + "' must be an array");
    VecX v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    return v;
  }
};

ModePair resolved_pair(const StateOptions::Resolved& r) {
  const GaussianState state = build_state(r.family, r.params, r.graph);
  ModePair pair = build_pair(state, r.modes);
  pair.xi_f += r.xi_f;
  pair.xi_g += r.xi_g;
  return pair;
}

std::string describe(const StateOptions::Resolved& r) {
  std::ostringstream os;
  os << "family " << to_string(r.family) << ", n = " << format_double(r.params.n);
  if (r.family == StateFamily::epr)
    os << ", s1 = " << format_double(r.params.s1_db()) << " dB, s2 = " << format_double(r.params.s2_db())
       << " dB";
  else
    os << ", s = " << format_double(r.params.sdb) << " dB, graph " << r.graph_source;
  return os.str();
}

std::string matrix_text(const Mat2& m) {
  std::ostringstream os;
  const Mat2 c = m.array() + 0.0;  // drop negative zeros
  os << std::setprecision(10) << "[[" << c(0, 0) << ", " << c(0, 1) << "], [" << c(1, 0) << ", " << c(1, 1)
     << "]]";
  return os.str();
}

json matrix_json(const Mat2& m) { return json::array({{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}); }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot write output file " + path);
  return out;
}

// ---------------------------------------------------------------------------

int run_analyze(const StateOptions& so, bool as_json) {
  const Settings cfg{load_config(so.config_path)};
  const auto r = so.resolve(cfg, false);
  const ModePair pair = resolved_pair(r);
  const SteeringReport rep = analyze(pair);
  if (!rep.w_min_bare) (void)w_min(pair);  // rethrows the precise reason

  const double two_pi = 2.0 * std::numbers::pi;
  if (as_json) {
    json out;
    out["parameters"] = {{"family", to_string(r.family)}, {"n", r.params.n},
                         {"s1_db", r.params.s1_db()}, {"s2_db", r.params.s2_db()},
                         {"f", r.modes.f + 1}, {"g", r.modes.g + 1}};
    out["convention"] = common_metadata()[2].second;
    out["nu"] = rep.nu;
    out["tr_conditional"] = rep.tr_conditional;
    out["tr_conditional_opt"] = rep.tr_conditional_opt;
    out["negativity_bare"] = rep.negativity_bare;
    out["negativity_steered"] = rep.negativity_steered;
    out["marginal_bare"] = rep.marginal_bare;
    out["marginal_steered"] = rep.marginal_steered;
    out["w_min_bare"] = rep.w_min_bare ? json(*rep.w_min_bare) : json(nullptr);
    out["w_min_opt"] = rep.w_min_opt ? json(*rep.w_min_opt) : json(nullptr);
    out["purity_f"] = rep.purity_f;
    out["S"] = matrix_json(rep.s);
    out["R_opt"] = matrix_json(rep.r_opt);
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  auto yes_no = [](bool v, bool marginal) { return marginal ? "marginal" : (v ? "yes" : "no"); };
  auto w_text = [&](const std::optional<double>& w) {
    return w ? format_double(two_pi * *w) : std::string("undefined");
  };
  std::cout << describe(r) << ", modes f = " << r.modes.f + 1 << ", g = " << r.modes.g + 1 << '\n'
            << "convention: [x,p] = 2i, vacuum covariance = identity, s_dB = 10 log10(s)\n"
            << "nu (steering of g by f)      " << format_double(rep.nu) << '\n'
            << "tr V_g|f                     " << format_double(rep.tr_conditional) << '\n'
            << "tr R^t V_g|f R at R = S^-1   " << format_double(rep.tr_conditional_opt) << '\n'
            << "negativity, subtraction only " << yes_no(rep.negativity_bare, rep.marginal_bare) << '\n'
            << "negativity, with R = S^-1    " << yes_no(rep.negativity_steered, rep.marginal_steered) << '\n'
            << "2pi W_min, subtraction only  " << w_text(rep.w_min_bare) << '\n'
            << "2pi W_min, with R = S^-1     " << w_text(rep.w_min_opt) << '\n'
            << "purity of f                  " << format_double(rep.purity_f) << '\n'
            << "S (gauge-dependent)          " << matrix_text(rep.s) << '\n'
            << "R_opt = S^-1                 " << matrix_text(rep.r_opt) << '\n';
  return 0;
}

int run_sweep_cmd(const StateOptions& so, const std::vector<std::string>& axes_flag, CLI::Option* o_axes,
                  const std::string& out_flag, CLI::Option* o_out, const std::string& format_flag,
                  CLI::Option* o_format, unsigned threads) {
  const Settings cfg{load_config(so.config_path)};
  const auto r = so.resolve(cfg, true);
  SweepSpec spec;
  spec.family = r.family;
  spec.fixed = r.params;
  spec.graph = r.graph;
  spec.graph_source = r.graph_source;
  spec.modes = r.modes;
  for (const auto& text : cfg.get(o_axes, axes_flag, "axes")) spec.axes.push_back(SweepAxis::parse(text));
  spec.validate();

  const auto format = parse_format(cfg.get(o_format, format_flag, "format"));
  const std::string path = cfg.get(o_out, out_flag, "out");
  const auto records = run_sweep(spec, threads);

  auto emit = [&](std::ostream& os) {
    if (format == OutputFormat::csv) write_sweep_csv(os, spec, records);
    else write_sweep_json(os, spec, records);
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
  } else {
    auto out = open_output(path);
    emit(out);
    if (!out) throw Error(ErrorKind::io, "failed writing " + path);
    std::cerr << "wrote " << records.size() << " records to " << path << '\n';
  }
  return 0;
}

struct WignerArgs {
  std::string r_choice = "identity";
  double window = 6.0;
  int resolution = 201;
  std::string out;
  std::string format = "csv";
  CLI::Option* o_r = nullptr;
  CLI::Option* o_window = nullptr;
  CLI::Option* o_res = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_format = nullptr;
};

int run_wigner(const StateOptions& so, const WignerArgs& wa) {
  const Settings cfg{load_config(so.config_path)};
  const auto r = so.resolve(cfg, false);
  const ModePair pair = resolved_pair(r);
  const std::string choice = cfg.get(wa.o_r, wa.r_choice, "r");
  if (choice != "identity" && choice != "optimal")
    throw Error(ErrorKind::domain, "--r must be 'identity' or 'optimal'");
  const Mat2 rmat = choice == "optimal" ? analyze(pair).r_opt : Mat2::Identity();
  const double half = cfg.get(wa.o_window, wa.window, "window");
  const int res = cfg.get(wa.o_res, wa.resolution, "res");
  const WignerGrid grid = wigner_grid(pair, rmat, PhaseWindow::square(half), res, res);

  Metadata meta = common_metadata();
  meta.emplace_back("state", describe(r));
  meta.emplace_back("modes", "f=" + std::to_string(r.modes.f + 1) + " g=" + std::to_string(r.modes.g + 1));
  meta.emplace_back("local_operation", choice == "optimal" ? "R = S^-1 " + matrix_text(rmat) : "identity");
  meta.emplace_back("window", format_double(-half) + ":" + format_double(half));
  meta.emplace_back("resolution", std::to_string(res) + "x" + std::to_string(res));
  meta.emplace_back("analytic_w_min", grid.analytic_minimum ? format_double(*grid.analytic_minimum) : "undefined");
  meta.emplace_back("analytic_minimum_location",
                    grid.minimum_location ? format_double((*grid.minimum_location)(0)) + "," +
                                                format_double((*grid.minimum_location)(1))
                                          : "undefined");
  meta.emplace_back("grid_min", format_double(grid.min_value()));
  meta.emplace_back("grid_integral", format_double(grid.integral()));

  const auto format = parse_format(cfg.get(wa.o_format, wa.format, "format"));
  const std::string path = cfg.get(wa.o_out, wa.out, "out");
  auto emit = [&](std::ostream& os) {
    if (format == OutputFormat::csv) write_wigner_csv(os, grid, meta);
    else write_wigner_json(os, grid, meta);
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
  } else {
    auto out = open_output(path);
    emit(out);
    if (!out) throw Error(ErrorKind::io, "failed writing " + path);
    std::cerr << "grid min " << format_double(grid.min_value()) << ", analytic W_min "
              << (grid.analytic_minimum ? format_double(*grid.analytic_minimum) : "undefined") << ", wrote "
              << path << '\n';
  }
  return 0;
}

struct VerifyArgs {
  int cutoff = 30;
  double window = 6.0;
  int resolution = 101;
  double tolerance = 1e-3;
  std::string r_choice = "both";
};

int run_verify(const StateOptions& so, const VerifyArgs& va) {
  const Settings cfg{load_config(so.config_path)};
  const auto r = so.resolve(cfg, false);
  if (r.family != StateFamily::epr) throw Error(ErrorKind::domain, "verify supports the epr family only");
  if (va.r_choice != "identity" && va.r_choice != "optimal" && va.r_choice != "both")
    throw Error(ErrorKind::domain, "--r must be identity, optimal or both");
  if (!r.xi_f.isZero(0.0)) throw Error(ErrorKind::domain, "verify supports displacement in g only (--xi-g)");
  if (r.modes.f != 0 || r.modes.g != 1 || r.modes.f_vector || r.modes.g_vector)
    throw Error(ErrorKind::domain, "verify uses f = 1, g = 2");

  const double s1 = SqueezingSpec::from_db(r.params.s1_db()).ratio();
  const double s2 = SqueezingSpec::from_db(r.params.s2_db()).ratio();
  const ModePair pair = resolved_pair(r);
  const SteeringReport rep = analyze(pair);

  fock::OracleConfig config;
  config.cutoff = va.cutoff;
  std::cout << describe(r) << ", xi_g = (" << format_double(r.xi_g(0)) << ", " << format_double(r.xi_g(1))
            << "), cutoff " << va.cutoff << '\n';

  std::optional<fock::FockDensityMatrix> rho;
  try {
    rho = fock::build_epr_fock(s1, s2, r.params.n, config);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::insufficient_cutoff) throw;
    std::cout << "FAIL  " << e.what() << '\n';
    return kExitVerify;
  }
  std::cout << "oracle leakage (top Fock level) " << format_double(rho->leakage()) << '\n';

  std::vector<std::pair<std::string, Mat2>> ops;
  if (va.r_choice != "optimal") ops.emplace_back("R = identity", Mat2::Identity());
  if (va.r_choice != "identity") ops.emplace_back("R = S^-1", rep.r_opt);

  bool pass = true;
  const auto window = PhaseWindow::square(va.window);
  for (const auto& [label, rmat] : ops) {
    try {
      const WignerGrid analytic = wigner_grid(pair, rmat, window, va.resolution, va.resolution);
      const auto oracle =
          fock::oracle_reduced_wigner(*rho, rmat, r.xi_g, window, va.resolution, va.resolution, config);
      const double sup = (analytic.values - oracle.grid.values).cwiseAbs().maxCoeff();
      const double p_analytic = SubtractedWigner(pair, rmat).subtraction_photon_number();
      const bool ok = sup <= va.tolerance;
      pass = pass && ok;
      std::cout << (ok ? "PASS  " : "FAIL  ") << label << ": sup|W_analytic - W_oracle| = " << format_double(sup)
                << " (tol " << format_double(va.tolerance) << ")\n"
                << "      subtraction weight <a^dag a>_g: analytic " << format_double(p_analytic) << ", oracle "
                << format_double(oracle.subtraction_probability) << '\n'
                << "      grid min: analytic " << format_double(analytic.min_value()) << ", oracle "
                << format_double(oracle.grid.min_value())
                << (oracle.grid.min_value() >= 0.0 ? " (nonnegative)" : "") << '\n';
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::insufficient_cutoff) throw;
      pass = false;
      std::cout << "FAIL  " << label << ": " << e.what() << '\n';
    }
  }
  std::cout << (pass ? "verification passed" : "verification FAILED") << '\n';
  return pass ? 0 : kExitVerify;
}

int run_graph_info(const std::string& path, double sdb, double n) {
  std::vector<std::string> warnings;
  const Graph graph = load_graph(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  const auto edges = graph.edges();
  std::cout << "graph " << path << ": " << graph.vertices() << " vertices, " << edges.size() << " edges\n";
  std::cout << "edges:";
  for (const auto& [j, k] : edges) std::cout << ' ' << j + 1 << '-' << k + 1;
  std::cout << "\nadjacency:\n" << graph.adjacency() << '\n';

  const GaussianState state = graph_state(graph, SqueezingSpec::from_db(sdb), ThermalNoise(n));
  const auto diag = validate_state(state);
  std::cout << "state at s = " << format_double(sdb) << " dB, n = " << format_double(n)
            << ": min symplectic eigenvalue " << format_double(diag.min_symplectic_eigenvalue.value_or(NAN))
            << (diag.physical ? " (physical)" : " (UNPHYSICAL)") << '\n';
  std::cout << "  f  g  nu                   tr V_g|f             bare  steered\n";
  for (Eigen::Index f = 0; f < graph.vertices(); ++f)
    for (Eigen::Index g = 0; g < graph.vertices(); ++g) {
      if (f == g) continue;
      const auto rep = analyze(extract_pair(state, f, g));
      std::cout << std::setw(3) << f + 1 << std::setw(3) << g + 1 << "  " << std::left << std::setw(21)
                << format_double(rep.nu) << std::setw(21) << format_double(rep.tr_conditional) << std::setw(6)
                << (rep.negativity_bare ? "yes" : "no") << (rep.negativity_steered ? "yes" : "no") << std::right
                << '\n';
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote Wigner-negativity by photon subtraction in Gaussian states"};
  app.require_subcommand(1);

  bool as_json = false;
  StateOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Steering / negativity report for one mode pair");
  analyze_opts.add(analyze_cmd, true, false);
  analyze_cmd->add_flag("--json", as_json, "Print the report as JSON");

  StateOptions sweep_opts;
  std::vector<std::string> axes;
  std::string sweep_out;
  std::string sweep_format = "csv";
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep over n / squeezing / asymmetry");
  sweep_opts.add(sweep_cmd, true, true);
  auto* o_axes = sweep_cmd->add_option("--axis", axes, "Swept axis name:min:max:steps (n, sdb, asym)");
  auto* o_sweep_out = sweep_cmd->add_option("--out", sweep_out, "Output file (default stdout)");
  auto* o_sweep_format = sweep_cmd->add_option("--format", sweep_format, "csv or json");
  sweep_cmd->add_option("--threads", threads, "Worker threads (default STEERWIG_THREADS or all cores)");

  StateOptions wigner_opts;
  WignerArgs wigner_args;
  auto* wigner_cmd = app.add_subcommand("wigner", "Sample the reduced Wigner function of mode f");
  wigner_opts.add(wigner_cmd, true, false);
  wigner_args.o_r = wigner_cmd->add_option("--r", wigner_args.r_choice, "Local operation: identity or optimal");
  wigner_args.o_window = wigner_cmd->add_option("--window", wigner_args.window, "Half width of the square window");
  wigner_args.o_res = wigner_cmd->add_option("--res", wigner_args.resolution, "Points per axis");
  wigner_args.o_out = wigner_cmd->add_option("--out", wigner_args.out, "Output file (default stdout)");
  wigner_args.o_format = wigner_cmd->add_option("--format", wigner_args.format, "csv or json");

  StateOptions verify_opts;
  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form against the Fock-basis oracle (EPR)");
  verify_opts.add(verify_cmd, false, false);
  verify_cmd->add_option("--cutoff", verify_args.cutoff, "Fock cutoff per mode");
  verify_cmd->add_option("--window", verify_args.window, "Half width of the square window");
  verify_cmd->add_option("--res", verify_args.resolution, "Points per axis");
  verify_cmd->add_option("--tol", verify_args.tolerance, "Sup-norm tolerance");
  verify_cmd->add_option("--r", verify_args.r_choice, "identity, optimal or both");

  std::string info_graph;
  double info_sdb = 3.0;
  double info_n = 1.0;
  auto* info_cmd = app.add_subcommand("graph-info", "Summarize a graph file and its pairwise steering");
  info_cmd->add_option("--graph", info_graph, "Graph edge-list file")->required();
  info_cmd->add_option("--sdb", info_sdb, "Squeezing in dB");
  info_cmd->add_option("--n", info_n, "Thermal noise factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_opts, as_json);
    if (*sweep_cmd)
      return run_sweep_cmd(sweep_opts, axes, o_axes, sweep_out, o_sweep_out, sweep_format, o_sweep_format,
                           threads);
    if (*wigner_cmd) return run_wigner(wigner_opts, wigner_args);
    if (*verify_cmd) return run_verify(verify_opts, verify_args);
    if (*info_cmd) return run_graph_info(info_graph, info_sdb, info_n);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::io ? kExitIo : kExitDomain;
  }
  return 0;
}
