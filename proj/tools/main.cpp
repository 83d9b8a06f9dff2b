// deltashell-cli: JSON/CSV front end over the deltashell C API.
//
// Subcommands: spectrum | scan | splitting | threshold | calibrate.
// JSON results keep a fixed key order; CSV uses LF and a header row.
// Outputs embed the run manifest; the same manifest plus wall time is
// echoed to stderr so files stay byte-identical across reruns.
// Exit codes: 0 success, 2 input error, 3 domain precondition violated,
// 4 numerical resolution failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deltashell.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

int exit_code_for(ds_status s) {
  switch (s) {
    case DS_OK:
      return 0;
    case DS_ERR_NO_INNER_BOUND_STATE:
    case DS_ERR_SWAVE_THRESHOLD_FORBIDDEN:
      return 3;
    case DS_ERR_OVERFLOW:
    case DS_ERR_DEGENERATE_ROOT:
    case DS_ERR_ROOTS_NOT_RESOLVED:
    case DS_ERR_SINGULAR_WRONSKIAN:
    case DS_ERR_NOT_A_ROOT:
      return 4;
    default:
      return 2;
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Options {
  std::string config_path;
  std::string out_path;
  std::string csv_path;
  ds_plan plan{};
  double kappa_min_override = -1.0;
  int threads = 1;
};

json plan_json(const ds_plan& p) {
  return json{{"kappa_min", p.kappa_min},
              {"kappa_max", p.kappa_max},
              {"grid_points", p.grid_points},
              {"ell_max", p.ell_max},
              {"tol", p.tol}};
}

json make_manifest(const std::string& command, const Options& opt,
                   const json& inputs) {
  json m;
  m["command"] = command;
  if (!opt.config_path.empty()) m["config"] = opt.config_path;
  if (!inputs.is_null()) m["inputs"] = inputs;
  m["plan"] = plan_json(opt.plan);
  m["out"] = opt.out_path.empty() ? "-" : opt.out_path;
  m["threads"] = opt.threads;
  m["version"] = ds_version();
  return m;
}

void echo_manifest(json manifest,
                   std::chrono::steady_clock::time_point started) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  manifest["wall_time_ms"] = static_cast<long>(ms);
  std::cerr << manifest.dump() << "\n";
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int emit_error(ds_status s, const std::string& out_path) {
  json e;
  e["error"] = {{"status", ds_status_name(s)},
                {"message", ds_last_error()},
                {"index", ds_last_error_index()}};
  emit(e.dump(2) + "\n", out_path);
  return exit_code_for(s);
}

// Reads {"radii": [...], "alphas": [...]} from a file or stdin ("-").
int load_config(const std::string& path, ds_config** out) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) {
      std::cerr << "cannot open config file: " << path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("radii") || !j.contains("alphas")) {
    std::cerr << "config must be JSON with \"radii\" and \"alphas\" arrays\n";
    return 2;
  }
  std::vector<double> radii, alphas;
  try {
    radii = j["radii"].get<std::vector<double>>();
    alphas = j["alphas"].get<std::vector<double>>();
  } catch (const json::exception& e) {
    std::cerr << "config parse error: " << e.what() << "\n";
    return 2;
  }
  ds_status s = ds_config_create(radii.data(), alphas.data(), radii.size(), out);
  if (s != DS_OK) return emit_error(s, "");
  return 0;
}

int cmd_spectrum(const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  ds_config* cfg = nullptr;
  if (int rc = load_config(opt.config_path, &cfg); rc != 0) return rc;

  ds_spectrum* spec = nullptr;
  ds_status s = ds_solve_spectrum(cfg, &opt.plan, &spec);
  if (s != DS_OK) {
    ds_config_free(cfg);
    return emit_error(s, opt.out_path);
  }

  json result;
  result["manifest"] = make_manifest("spectrum", opt, nullptr);
  result["states"] = json::array();
  for (size_t i = 0; i < ds_spectrum_size(spec); ++i) {
    ds_bound_state st;
    ds_spectrum_state(spec, i, &st);
    result["states"].push_back({{"ell", st.ell},
                                {"kappa", st.kappa},
                                {"energy", st.energy},
                                {"degeneracy", st.degeneracy},
                                {"residual", st.residual}});
  }
  result["per_channel_counts"] = json::array();
  for (int i = 0; i < ds_spectrum_num_channels(spec); ++i) {
    int ell = 0, count = 0;
    ds_spectrum_channel(spec, i, &ell, &count);
    result["per_channel_counts"].push_back({ell, count});
  }
  result["ell_max_reached"] = ds_spectrum_ell_max_reached(spec) != 0;
  ds_spectrum_free(spec);
  ds_config_free(cfg);

  int rc = emit(result.dump(2) + "\n", opt.out_path);
  echo_manifest(result["manifest"], started);
  return rc;
}

int cmd_scan(Options opt, int ell) {
  auto started = std::chrono::steady_clock::now();
  if (ell < 0) {
    std::cerr << "ell must be >= 0\n";
    return 2;
  }
  ds_config* cfg = nullptr;
  if (int rc = load_config(opt.config_path, &cfg); rc != 0) return rc;

  if (opt.kappa_min_override > 0.0) opt.plan.kappa_min = opt.kappa_min_override;
  double lo = opt.plan.kappa_min;
  double hi = opt.plan.kappa_max;
  int n = opt.plan.grid_points;
  if (!(lo > 0.0) || !(lo < hi) || n < 2) {
    ds_config_free(cfg);
    std::cerr << "bad scan range\n";
    return 2;
  }
  bool swave2 = ds_config_size(cfg) == 2 && ell == 0;

  json manifest = make_manifest("scan", opt, json{{"ell", ell}});
  std::string csv = "# " + manifest.dump() + "\n";
  csv += swave2 ? "kappa,S,F_d,det\n" : "kappa,det\n";

  double ratio = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    double k = i + 1 == n ? hi : lo * std::exp(ratio * i);
    double det = 0.0;
    ds_status s = ds_secular_det(cfg, ell, k, &det);
    if (s != DS_OK) {
      ds_config_free(cfg);
      return emit_error(s, opt.out_path);
    }
    if (swave2) {
      double sc = 0.0, fd = 0.0;
      ds_scaled_secular(cfg, k, &sc);
      ds_secular_f(cfg, k, &fd);
      csv += fmt17(k) + "," + fmt17(sc) + "," + fmt17(fd) + "," + fmt17(det) + "\n";
    } else {
      csv += fmt17(k) + "," + fmt17(det) + "\n";
    }
  }
  ds_config_free(cfg);
  int rc = emit(csv, opt.out_path);
  echo_manifest(manifest, started);
  return rc;
}

int cmd_splitting(const Options& opt, double r1, double alpha1, double d_min,
                  double d_max, double d_step) {
  auto started = std::chrono::steady_clock::now();
  if (!(d_min > 0.0) || !(d_min <= d_max) || !(d_step > 0.0)) {
    std::cerr << "bad d range\n";
    return 2;
  }
  std::vector<double> d_grid;
  for (double d = d_min; d <= d_max + 1e-12; d += d_step) d_grid.push_back(d);

  ds_splitting* sp = nullptr;
  ds_status s = ds_splitting_curve(r1, alpha1, d_grid.data(), d_grid.size(),
                                   &opt.plan, &sp);
  if (s != DS_OK) return emit_error(s, opt.out_path);

  double kappa0 = 0, alpha2 = 0, c_const = 0, fitted = 0;
  ds_splitting_info(sp, &kappa0, &alpha2, &c_const, &fitted);
  size_t rows = ds_splitting_rows(sp);

  json inputs{{"r1", r1}, {"alpha1", alpha1},
              {"d_min", d_min}, {"d_max", d_max}, {"d_step", d_step}};
  json result;
  result["manifest"] = make_manifest("splitting", opt, inputs);
  result["kappa0"] = kappa0;
  result["alpha2_tuned"] = alpha2;
  result["c_const"] = c_const;
  result["fitted_exponent"] = fitted;
  double agmon = 0.0;
  ds_agmon_distance(kappa0, r1, r1 + d_min, &agmon);
  result["agmon_distance_at_d_min"] = agmon;
  result["rows"] = json::array();

  std::string csv = "# " + result["manifest"].dump() + "\n";
  csv += "d,gap,predicted_gap,ratio\n";
  for (size_t i = 0; i < rows; ++i) {
    ds_splitting_row row;
    ds_splitting_row_get(sp, i, &row);
    result["rows"].push_back({{"d", row.d},
                              {"kappa_plus", row.kappa_plus},
                              {"kappa_minus", row.kappa_minus},
                              {"gap", row.gap},
                              {"predicted_gap", row.predicted_gap},
                              {"ratio", row.gap / row.predicted_gap}});
    csv += fmt17(row.d) + "," + fmt17(row.gap) + "," +
           fmt17(row.predicted_gap) + "," +
           fmt17(row.gap / row.predicted_gap) + "\n";
  }
  double d_cut = 0.0;
  if (ds_splitting_unresolved_from(sp, &d_cut)) {
    result["unresolved_from"] = d_cut;
  } else {
    result["unresolved_from"] = nullptr;
  }
  ds_splitting_free(sp);

  if (rows < 4) {
    json e;
    e["error"] = {{"status", "RootsNotResolved"},
                  {"message", "fewer than 4 usable separation points"},
                  {"rows", rows}};
    emit(e.dump(2) + "\n", opt.out_path);
    return 4;
  }

  int rc = emit(result.dump(2) + "\n", opt.out_path);
  if (rc == 0 && !opt.csv_path.empty()) rc = emit(csv, opt.csv_path);
  echo_manifest(result["manifest"], started);
  return rc;
}

int cmd_threshold(const Options& opt, int ell) {
  auto started = std::chrono::steady_clock::now();
  if (ell < 0) {
    std::cerr << "ell must be >= 0\n";
    return 2;
  }
  ds_config* cfg = nullptr;
  if (int rc = load_config(opt.config_path, &cfg); rc != 0) return rc;

  json manifest = make_manifest("threshold", opt, json{{"ell", ell}});
  if (ell == 0) {
    ds_config_free(cfg);
    json refusal;
    refusal["manifest"] = manifest;
    refusal["refusal"] = {
        {"reason", "s-wave has no zero-energy eigenstate"},
        {"detail", "the zero-energy matrix is defined for ell >= 1 only; "
                   "at ell = 0 a threshold zero is a resonance, not an "
                   "L2 eigenvalue"}};
    int rc = emit(refusal.dump(2) + "\n", opt.out_path);
    echo_manifest(manifest, started);
    return rc;
  }

  double det = 0.0;
  int kdim = 0, mult = 0;
  ds_status s = ds_threshold(cfg, ell, &det, &kdim, &mult);
  ds_config_free(cfg);
  if (s != DS_OK) return emit_error(s, opt.out_path);

  json result;
  result["manifest"] = manifest;
  result["ell"] = ell;
  result["det"] = det;
  result["kernel_dim"] = kdim;
  result["multiplicity"] = mult;
  int rc = emit(result.dump(2) + "\n", opt.out_path);
  echo_manifest(manifest, started);
  return rc;
}

int cmd_calibrate(const Options& opt, const std::string& preset,
                  const std::vector<double>& delta_v,
                  const std::vector<double>& width, double mass_ratio,
                  double l0_nm) {
  auto started = std::chrono::steady_clock::now();
  json result;
  double e0 = 0.0;
  std::vector<double> alphas;
  json dimless;

  if (!preset.empty()) {
    double r1 = 0, r2 = 0, a1 = 0, a2 = 0, mr = 0, l0 = 0;
    ds_status s = ds_preset(preset.c_str(), &r1, &r2, &a1, &a2, &mr, &l0);
    if (s != DS_OK) return emit_error(s, opt.out_path);
    ds_reference_energy(mr, l0, &e0);
    alphas = {a1, a2};
    dimless = {{"radii", {r1, r2}}, {"alphas", {a1, a2}}};
    result["manifest"] = make_manifest("calibrate", opt, json{{"preset", preset}});
  } else {
    if (delta_v.empty() || delta_v.size() != width.size() || delta_v.size() > 2) {
      std::cerr << "need matching --delta-v-ev/--width-nm values (1 or 2) "
                   "or --preset\n";
      return 2;
    }
    ds_status s = ds_reference_energy(mass_ratio, l0_nm, &e0);
    if (s != DS_OK) return emit_error(s, opt.out_path);
    for (size_t i = 0; i < delta_v.size(); ++i) {
      double a = 0.0;
      s = ds_coupling_from_interface(delta_v[i], width[i], mass_ratio, l0_nm, &a);
      if (s != DS_OK) return emit_error(s, opt.out_path);
      alphas.push_back(a);
    }
    json inputs{{"delta_v_ev", delta_v}, {"width_nm", width},
                {"mass_ratio", mass_ratio}, {"l0_nm", l0_nm}};
    result["manifest"] = make_manifest("calibrate", opt, inputs);
    dimless = nullptr;
  }

  result["E0_eV"] = e0;
  result["alphas"] = alphas;
  double a1 = alphas.size() > 0 ? alphas[0] : 0.0;
  double a2 = alphas.size() > 1 ? alphas[1] : 0.0;
  result["classification"] =
      alphas.size() == 2 ? ds_classify_alignment(a1, a2) : "Other";
  result["dimensionless_config"] = dimless;

  int rc = emit(result.dump(2) + "\n", opt.out_path);
  echo_manifest(result["manifest"], started);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of concentric spherical delta-shell potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  ds_plan_default(&opt.plan);
  app.add_option("--config", opt.config_path, "config JSON path, or - for stdin");
  app.add_option("--out", opt.out_path, "output path (default stdout)");
  app.add_option("--ell-max", opt.plan.ell_max, "highest channel scanned");
  app.add_option("--kappa-max", opt.plan.kappa_max, "upper end of the kappa grid");
  app.add_option("--grid", opt.plan.grid_points, "scan grid points");
  app.add_option("--tol", opt.plan.tol, "root tolerance on kappa");
  app.add_option("--threads", opt.threads, "worker threads (reserved)");

  auto* spectrum = app.add_subcommand("spectrum", "enumerate bound states");

  int scan_ell = 0;
  auto* scan = app.add_subcommand("scan", "tabulate secular functions as CSV");
  scan->add_option("--ell", scan_ell, "channel to scan");
  scan->add_option("--kappa-min", opt.kappa_min_override,
                   "lower end of the kappa grid");

  double r1 = 1.0, alpha1 = -3.0, d_min = 6.0, d_max = 12.0, d_step = 0.5;
  auto* splitting =
      app.add_subcommand("splitting", "tuned two-shell tunneling splitting");
  splitting->add_option("--r1", r1, "inner shell radius");
  splitting->add_option("--alpha1", alpha1, "inner coupling (< -1/R1)");
  splitting->add_option("--d-min", d_min, "smallest separation");
  splitting->add_option("--d-max", d_max, "largest separation");
  splitting->add_option("--d-step", d_step, "separation step");
  splitting->add_option("--csv", opt.csv_path, "also write the curve as CSV");

  int thr_ell = 1;
  auto* threshold =
      app.add_subcommand("threshold", "zero-energy matrix for a channel");
  threshold->add_option("--ell", thr_ell, "channel (>= 1)");

  std::string preset;
  std::vector<double> delta_v, width;
  double mass_ratio = 1.0, l0_nm = 1.0;
  auto* calibrate =
      app.add_subcommand("calibrate", "couplings from interface parameters");
  calibrate->add_option("--preset", preset, "named parameter set");
  calibrate->add_option("--delta-v-ev", delta_v, "band offsets in eV");
  calibrate->add_option("--width-nm", width, "interface widths in nm");
  calibrate->add_option("--mass-ratio", mass_ratio, "effective mass m*/m0");
  calibrate->add_option("--l0-nm", l0_nm, "reference length in nm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (spectrum->parsed()) return cmd_spectrum(opt);
  if (scan->parsed()) return cmd_scan(opt, scan_ell);
  if (splitting->parsed())
    return cmd_splitting(opt, r1, alpha1, d_min, d_max, d_step);
  if (threshold->parsed()) return cmd_threshold(opt, thr_ell);
  if (calibrate->parsed())
    return cmd_calibrate(opt, preset, delta_v, width, mass_ratio, l0_nm);
  return 2;
}
