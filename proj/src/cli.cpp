#include "ellip/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellip/classify.hpp"
#include "ellip/disk_operators.hpp"
#include "ellip/errors.hpp"
#include "ellip/rng.hpp"
#include "ellip/solver.hpp"
#include "ellip/validation.hpp"

namespace ellip {
namespace {

using nlohmann::json;

Cx parse_cx(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(field, "expected a pair [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Cx> parse_cx_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of [re, im]");
  std::vector<Cx> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_cx(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

double require_number(const json& cfg, const std::string& field,
                      double fallback, bool required) {
  if (!cfg.contains(field)) {
    if (required) throw ConfigError(field, "missing");
    return fallback;
  }
  if (!cfg[field].is_number()) throw ConfigError(field, "expected a number");
  return cfg[field].get<double>();
}

BoundaryDataSpec parse_boundary(const json& b, double tau) {
  if (!b.is_object() || !b.contains("type") || !b["type"].is_string())
    throw ConfigError("boundary.type", "missing or not a string");
  const std::string type = b["type"].get<std::string>();
  if (type == "modes") {
    if (!b.contains("modes") || !b["modes"].is_object())
      throw ConfigError("boundary.modes", "expected an object {\"k\": [re, im]}");
    DirectModes dm;
    for (const auto& [key, val] : b["modes"].items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ConfigError("boundary.modes", "mode key '" + key +
                                                "' is not an integer");
      }
      dm.modes.modes[k] = parse_cx(val, "boundary.modes." + key);
    }
    return dm;
  }
  if (type == "samples") {
    if (!b.contains("values"))
      throw ConfigError("boundary.values", "missing");
    return BoundarySamples{parse_cx_list(b["values"], "boundary.values")};
  }
  if (type == "exact_trace") {
    ExactTrace t;
    if (b.contains("g")) t.g = parse_cx_list(b["g"], "boundary.g");
    if (b.contains("h")) t.h = parse_cx_list(b["h"], "boundary.h");
    t.tau = tau;
    return t;
  }
  throw ConfigError("boundary.type",
                    "must be one of modes | samples | exact_trace");
}

}  // namespace

SolveConfig parse_solve_config(const std::string& json_text) {
  json cfg;
  try {
    cfg = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("(root)", "expected a JSON object");

  SolveConfig sc;
  sc.tau = require_number(cfg, "tau", 0.0, true);
  if (!(sc.tau >= 0.0 && sc.tau < 1.0))
    throw ConfigError("tau", "must lie in [0, 1)");
  sc.tol = require_number(cfg, "tol", 1e-9, false);
  if (!(sc.tol > 0.0)) throw ConfigError("tol", "must be positive");
  sc.n_max = static_cast<int>(require_number(cfg, "n_max", 64, false));
  if (sc.n_max < 0) throw ConfigError("n_max", "must be nonnegative");
  sc.alpha = require_number(cfg, "alpha", 0.75, false);
  if (!(sc.alpha > 0.0 && sc.alpha < 1.0))
    throw ConfigError("alpha", "must lie in (0, 1)");
  const double seed = require_number(cfg, "seed", 1.0, false);
  if (seed < 0.0) throw ConfigError("seed", "must be nonnegative");
  sc.seed = static_cast<std::uint64_t>(seed);

  if (cfg.contains("map")) {
    if (!cfg["map"].is_object() || !cfg["map"].contains("coeffs"))
      throw ConfigError("map.coeffs", "missing");
    sc.map.coeffs = parse_cx_list(cfg["map"]["coeffs"], "map.coeffs");
    if (sc.map.coeffs.empty()) throw ConfigError("map.coeffs", "empty");
  }

  if (cfg.contains("grid")) {
    const json& g = cfg["grid"];
    if (!g.is_object()) throw ConfigError("grid", "expected an object");
    if (g.contains("J")) {
      if (!g["J"].is_number()) throw ConfigError("grid.J", "expected a number");
      sc.grid.J = g["J"].get<int>();
    }
    if (g.contains("M")) {
      if (!g["M"].is_number()) throw ConfigError("grid.M", "expected a number");
      sc.grid.M = g["M"].get<int>();
    }
    if (g.contains("K_max")) {
      if (!g["K_max"].is_number())
        throw ConfigError("grid.K_max", "expected a number");
      sc.grid.K_max = g["K_max"].get<int>();
    }
  }
  if (sc.grid.J < 16) throw ConfigError("grid.J", "must be at least 16");
  if (sc.grid.K_max < 1) throw ConfigError("grid.K_max", "must be positive");
  if (sc.grid.M != 0) {
    const bool pow2 = sc.grid.M > 0 && (sc.grid.M & (sc.grid.M - 1)) == 0;
    if (!pow2) throw ConfigError("grid.M", "must be a power of two");
    if (sc.grid.M < 4 * sc.grid.K_max)
      throw ConfigError("grid.M", "must be at least 4 * K_max");
  }

  if (!cfg.contains("boundary")) throw ConfigError("boundary", "missing");
  sc.boundary = parse_boundary(cfg["boundary"], sc.tau);

  if (cfg.contains("validate_against")) {
    if (!cfg["validate_against"].is_string() ||
        cfg["validate_against"].get<std::string>() != "exact")
      throw ConfigError("validate_against", "only \"exact\" is supported");
    if (!std::holds_alternative<ExactTrace>(sc.boundary))
      throw ConfigError("validate_against",
                        "requires boundary.type == exact_trace");
    sc.validate_against_exact = true;
  }

  if (cfg.contains("output")) {
    const json& o = cfg["output"];
    if (!o.is_object()) throw ConfigError("output", "expected an object");
    auto get_path = [&](const char* key) -> std::string {
      if (!o.contains(key)) return {};
      if (!o[key].is_string())
        throw ConfigError(std::string("output.") + key, "expected a string");
      return o[key].get<std::string>();
    };
    sc.output.solution_csv = get_path("solution_csv");
    sc.output.report_json = get_path("report_json");
    sc.output.mapped_csv = get_path("mapped_csv");
  }
  return sc;
}

namespace {

json report_to_json(const SolveReport& rep, std::uint64_t seed) {
  json j;
  j["m"] = rep.m;
  j["status"] = rep.status;
  j["rho"] = rep.rho;
  j["empirical_K_norm"] = rep.empirical_K_norm;
  j["boundary_error"] = rep.boundary_error;
  j["residual"] = rep.residual;
  j["tail_bound"] = rep.tail_bound;
  j["tail_valid"] = rep.tail_valid;
  j["tau"] = rep.tau;
  j["tol"] = rep.tol;
  j["grid"] = {{"J", rep.grid_J}, {"M", rep.grid_M}, {"K_max", rep.grid_K}};
  j["alpha"] = rep.alpha;
  j["seed"] = seed;
  j["timings"] = {{"setup_s", rep.timings.setup_s},
                  {"iterate_s", rep.timings.iterate_s},
                  {"verify_s", rep.timings.verify_s}};
  return j;
}

void write_text_file(const std::string& path, const std::string& text,
                     const std::string& field) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(field, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError(field, "failed writing '" + path + "'");
}

void write_mapped_csv(const std::string& path, const FourierRadialField& S,
                      const ConformalMap& omega) {
  std::ostringstream os;
  os << "x,y,re,im\n";
  const PolarGrid& g = S.grid();
  const auto samples = synthesize_samples(S);
  char line[160];
  for (int j = 0; j < g.node_count(); ++j) {
    for (int m = 0; m < g.angular_count; ++m) {
      const Cx w = omega.map(std::polar(g.radii[j], g.theta(m)));
      const Cx v = samples[static_cast<std::size_t>(j) * g.angular_count + m];
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", w.real(),
                    w.imag(), v.real(), v.imag());
      os << line;
    }
  }
  write_text_file(path, os.str(), "output.mapped_csv");
}

}  // namespace

int cmd_solve(const std::string& config_path, std::ostream& out,
              std::ostream& err) {
  SolveConfig sc;
  try {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) throw ConfigError("config", "cannot read '" + config_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    sc = parse_solve_config(buf.str());
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return 1;
  }

  const UnivalenceReport uni = univalence_check(sc.map);
  if (!uni.pass) {
    err << "map validation failed: min |omega'| = " << uni.min_abs_derivative
        << (uni.boundary_simple ? "" : "; boundary self-intersects") << "\n";
    return 3;
  }

  try {
    const auto grid =
        sc.grid.M == 0
            ? PolarGrid::create_for_band(sc.grid.J, sc.grid.K_max)
            : PolarGrid::create(sc.grid.J, sc.grid.M, sc.grid.K_max);
    if (const auto* samp = std::get_if<BoundarySamples>(&sc.boundary)) {
      if (static_cast<int>(samp->values.size()) != grid->angular_count)
        throw ConfigError("boundary.values",
                          "expected " + std::to_string(grid->angular_count) +
                              " samples (one per angular node), got " +
                              std::to_string(samp->values.size()));
    }
    const BoundaryModes H = transport_boundary(
        sc.boundary, sc.map, grid->angular_count, sc.grid.K_max);

    const DiskOperators ops(grid);
    RunResult result =
        run(ops, H, sc.map, sc.tau, sc.tol, sc.n_max, sc.seed);
    result.report.alpha = sc.alpha;

    json rep = report_to_json(result.report, sc.seed);
    if (sc.validate_against_exact) {
      const auto& trace = std::get<ExactTrace>(sc.boundary);
      const BiPolynomial f = exact_solution(trace.g, trace.h, trace.tau);
      const double e =
          max_error_vs_exact(result.state.S, f, sc.map,
                             seeded_interior_points(100, sc.seed, 0.99));
      rep["max_error_vs_exact"] = e;
    }

    if (!sc.output.solution_csv.empty()) {
      std::ostringstream os;
      write_csv(result.state.S, os);
      write_text_file(sc.output.solution_csv, os.str(),
                      "output.solution_csv");
    }
    if (!sc.output.mapped_csv.empty())
      write_mapped_csv(sc.output.mapped_csv, result.state.S, sc.map);
    if (!sc.output.report_json.empty())
      write_text_file(sc.output.report_json, rep.dump(2) + "\n",
                      "output.report_json");
    else
      out << rep.dump(2) << "\n";

    out << "m=" << result.report.m << " status=" << result.report.status
        << " boundary_error=" << result.report.boundary_error
        << " residual=" << result.report.residual << "\n";
    return 0;
  } catch (const NonContractive& e) {
    err << "non-contractive: " << e.what() << "\n";
    return 2;
  } catch (const DerivativeVanishes& e) {
    err << "map validation failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int cmd_validate(std::ostream& out) {
  const auto results = run_validation_suites();
  bool all = true;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name
        << std::string(width - r.name.size() + 2, ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst %.3e  bound %.3e", r.worst, r.bound);
    out << buf;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
  out << (all ? "all suites passed" : "SOME SUITES FAILED") << " ("
      << results.size() << " suites)\n";
  return all ? 0 : 1;
}

int cmd_bench(const std::vector<int>& sizes, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  std::ostringstream csv;
  csv << "op,J,Kmax,seconds\n";
  for (const int J : sizes) {
    if (J < 16) {
      err << "bench size " << J << " too small (need J >= 16)\n";
      return 1;
    }
    const int K = J / 2;
    const auto grid = PolarGrid::create_for_band(J, K);
    const DiskOperators ops(grid);

    RandomStream rng(99);
    FourierRadialField f(grid);
    for (int k = -K; k <= K; ++k) {
      Cx* prof = f.profile(k);
      for (int j = 0; j < grid->node_count(); ++j)
        prof[j] = rng.in_box(1.0) * std::pow(grid->radii[j], std::abs(k));
    }

    auto time_op = [&](const char* name, auto&& fn) {
      const auto t0 = clock::now();
      auto result = fn();
      const double dt = std::chrono::duration<double>(clock::now() - t0).count();
      csv << name << "," << J << "," << K << "," << dt << "\n";
      return norm_sup(result);
    };
    double check = 0.0;
    check += time_op("apply_K", [&] { return ops.apply_K(f); });
    check += time_op("apply_Kz", [&] { return ops.apply_Kz(f); });
    check += time_op("apply_Kzbar", [&] { return ops.apply_Kzbar(f); });

    RandomStream hrng(7);
    TrigPolynomial H;
    for (int k = -K / 2; k <= K / 2; ++k) H[k] = hrng.in_box(1.0);
    const auto t0 = clock::now();
    const RunResult rr =
        run(ops, BoundaryModes{H}, ConformalMap::identity(), 0.5, 1e-8, 48);
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    csv << "run," << J << "," << K << "," << dt << "\n";
    out << "J=" << J << " K=" << K << " m=" << rr.report.m
        << " check=" << check + norm_sup(rr.state.S) << "\n";
  }
  if (csv_path.empty())
    out << csv.str();
  else {
    try {
      write_text_file(csv_path, csv.str(), "bench.out");
    } catch (const Error& e) {
      err << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_classify(Cx a, Cx b, Cx c, std::ostream& out, std::ostream& err) {
  json j;
  try {
    const CharacteristicRoots roots = characteristic_roots({a, b, c});
    j["roots"] = {{roots.lambda1.real(), roots.lambda1.imag()},
                  {roots.lambda2.real(), roots.lambda2.imag()}};
    j["reversed"] = roots.reversed;
    try {
      const Classification cl = classify({a, b, c});
      j["elliptic"] = cl.elliptic;
      j["strongly_elliptic"] = cl.strongly_elliptic;
    } catch (const Inconclusive& e) {
      j["inconclusive"] = true;
      j["note"] = e.what();
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  out << j.dump(2) << "\n";
  return 0;
}

namespace {

Cx parse_complex_arg(const std::string& s, const std::string& name) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string rs = s.substr(0, comma);
    const std::string is = s.substr(comma + 1);
    const double re = std::stod(rs, &used);
    if (used != rs.size()) throw std::invalid_argument(s);
    const double im = std::stod(is, &used);
    if (used != is.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw ConfigError(name, "expected 're' or 're,im', got '" + s + "'");
  }
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("sizes", "bad size '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("sizes", "empty list");
  return out;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "Series solver for the Dirichlet problem of dz dzbar + tau dz^2 on "
      "conformal images of the unit disk"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* solve =
      app.add_subcommand("solve", "run the solver from a JSON config");
  solve->add_option("--config", config_path, "path to the JSON config")
      ->required();

  CLI::App* validate =
      app.add_subcommand("validate", "run every invariant suite");

  std::string sizes_str, bench_out;
  CLI::App* bench =
      app.add_subcommand("bench", "time operators and a full run per size");
  bench->add_option("--sizes", sizes_str, "comma-separated radial sizes")
      ->required();
  bench->add_option("--out", bench_out, "CSV path (default: stdout)");

  std::string a_str, b_str, c_str;
  CLI::App* cls = app.add_subcommand(
      "classify", "characteristic roots and ellipticity of a f_xx + 2b f_xy "
                  "+ c f_yy = 0");
  cls->add_option("--a", a_str, "coefficient a as 're' or 're,im'")->required();
  cls->add_option("--b", b_str, "coefficient b")->required();
  cls->add_option("--c", c_str, "coefficient c")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(config_path, std::cout, std::cerr);
    if (validate->parsed()) return cmd_validate(std::cout);
    if (bench->parsed())
      return cmd_bench(parse_sizes(sizes_str), bench_out, std::cout,
                       std::cerr);
    if (cls->parsed())
      return cmd_classify(parse_complex_arg(a_str, "a"),
                          parse_complex_arg(b_str, "b"),
                          parse_complex_arg(c_str, "c"), std::cout,
                          std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 1;
}

}  // namespace ellip
