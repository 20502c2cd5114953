// mqed: command-line front end for the mqed library.
//
// Exit codes: 0 success, 1 a check failed or a singularity was hit,
// 2 invalid input (bad flags, malformed model, unknown suite).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqed/duality.hpp"
#include "mqed/fluctuations.hpp"
#include "mqed/green.hpp"
#include "mqed/model_io.hpp"
#include "mqed/parallel.hpp"
#include "mqed/verify.hpp"

namespace {

using namespace mqed;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

constexpr double kSpectrumRouteTol = 1e-10;

const char* const kComponents[9] = {"xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"};

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_scalar(const std::string& name) { columns.push_back(name); }
  void add_tensor(const std::string& name) {
    for (const char* c : kComponents) {
      columns.push_back("re_" + name + "_" + c);
      columns.push_back("im_" + name + "_" + c);
    }
  }

  static void append(std::vector<double>& row, const CTensor3& t) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        row.push_back(t(i, j).real());
        row.push_back(t(i, j).imag());
      }
  }

  std::string csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << "\n";
    }
    return out.str();
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const double v : row) r.push_back(rounded(v));
      rows_json.push_back(r);
    }
    return {{"columns", columns}, {"rows", rows_json}};
  }
};

struct Common {
  std::string model_path;
  std::string omega_spec;
  std::string k_spec;
  std::string out_path;
  std::string format;
  std::string units = "scaled";

  PhysicalConstants constants() const {
    return units == "si" ? PhysicalConstants::si() : PhysicalConstants::scaled();
  }
};

Vector3d parse_k(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("--k expects X,Y,Z, got '" + spec + "'");
    }
  }
  if (parts.size() != 3) throw InvalidInput("--k expects X,Y,Z, got '" + spec + "'");
  Vector3d k(parts[0], parts[1], parts[2]);
  if (!k.allFinite()) throw InvalidInput("--k must be finite");
  return k;
}

MediumModel require_model(const Common& c) {
  if (c.model_path.empty()) throw InvalidInput("--model is required");
  return load_model(c.model_path);
}

std::vector<double> omegas_or(const Common& c, std::vector<double> fallback) {
  return c.omega_spec.empty() ? fallback : FrequencyGrid::parse(c.omega_spec).values();
}

std::vector<Vector3d> wavevectors_or(const Common& c, std::vector<Vector3d> fallback) {
  return c.k_spec.empty() ? fallback : std::vector<Vector3d>{parse_k(c.k_spec)};
}

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + c.out_path + "'");
  out << text;
}

std::string table_output(const Common& c, const Table& t, nlohmann::ordered_json meta) {
  if (c.format == "json") {
    const nlohmann::ordered_json body = t.json();
    for (const auto& [key, value] : body.items()) meta[key] = value;
    return meta.dump(2) + "\n";
  }
  return t.csv();
}

nlohmann::ordered_json meta_for(const std::string& command, const std::string& model) {
  nlohmann::ordered_json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["command"] = command;
  meta["model"] = model;
  return meta;
}

// ---------------------------------------------------------------------------

int cmd_classify(const Common& c) {
  const MediumModel model = require_model(c);
  const double w = omegas_or(c, {model.lowest_resonance()}).front();
  const ResponseSet rs = evaluate(model, w);
  const MediumClass cls = classify(rs);
  const Magnetoelectric me = decompose_magnetoelectric(rs);
  nlohmann::ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = model.name;
  out["class"] = std::string(to_string(cls.category));
  out["reciprocal"] = cls.reciprocal;
  out["nonreciprocal_magnetoelectric"] = cls.nonreciprocal_magnetoelectric;
  out["reference_omega"] = rounded(w);
  out["kappa_norm"] = rounded(me.kappa.norm());
  out["chi_norm"] = rounded(me.chi.norm());
  emit(c, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_evaluate(const Common& c) {
  const MediumModel model = require_model(c);
  const auto omegas = omegas_or(c, default_omega_grid(model));
  Table t;
  t.add_scalar("omega");
  for (const char* name : {"eps", "xi", "zeta", "mu"}) t.add_tensor(name);
  for (const double w : omegas) {
    const ResponseSet rs = evaluate(model, w);
    std::vector<double> row{w};
    for (const CTensor3* m : {&rs.eps, &rs.xi, &rs.zeta, &rs.mu}) Table::append(row, *m);
    t.rows.push_back(std::move(row));
  }
  emit(c, table_output(c, t, meta_for("evaluate", model.name)));
  return kExitOk;
}

struct SweepPoint {
  double omega;
  Vector3d k;
};

std::vector<SweepPoint> sweep_points(const std::vector<double>& omegas, const std::vector<Vector3d>& ks) {
  std::vector<SweepPoint> pts;
  for (const double w : omegas)
    for (const auto& k : ks) pts.push_back({w, k});
  return pts;
}

int cmd_green(const Common& c) {
  const MediumModel model = require_model(c);
  const PhysicalConstants pc = c.constants();
  const auto pts = sweep_points(omegas_or(c, default_omega_grid(model)),
                                wavevectors_or(c, default_wavevectors(model, pc)));
  Table t;
  for (const char* name : {"omega", "kx", "ky", "kz"}) t.add_scalar(name);
  t.add_tensor("g");
  t.rows = parallel_map<std::vector<double>>(pts.size(), [&](std::size_t i) {
    const auto& p = pts[i];
    const GreenK g = solve_green_k(model, p.k, p.omega, pc);
    std::vector<double> row{p.omega, p.k.x(), p.k.y(), p.k.z()};
    Table::append(row, g.g);
    return row;
  });
  emit(c, table_output(c, t, meta_for("green", model.name)));
  return kExitOk;
}

int cmd_spectrum(const Common& c) {
  const MediumModel model = require_model(c);
  const PhysicalConstants pc = c.constants();
  const auto pts = sweep_points(omegas_or(c, default_omega_grid(model)),
                                wavevectors_or(c, default_wavevectors(model, pc)));
  Table t;
  for (const char* name : {"omega", "kx", "ky", "kz"}) t.add_scalar(name);
  t.add_tensor("s");
  t.add_scalar("route_residual");
  t.rows = parallel_map<std::vector<double>>(pts.size(), [&](std::size_t i) {
    const auto& p = pts[i];
    const CTensor3 g = solve_green_k(model, p.k, p.omega, pc).g;
    const CTensor3 s = field_fluctuation_spectrum(g, p.omega, pc);
    const CTensor3 s_noise = field_spectrum_from_noise_k(model, p.k, p.omega, pc);
    std::vector<double> row{p.omega, p.k.x(), p.k.y(), p.k.z()};
    Table::append(row, s);
    row.push_back(relative_residual((s - s_noise).norm(), s.norm()));
    return row;
  });
  emit(c, table_output(c, t, meta_for("spectrum", model.name)));
  for (const auto& row : t.rows) {
    if (!(row.back() <= kSpectrumRouteTol)) {
      std::cerr << "mqed: spectrum routes disagree at omega=" << format_number(row[0])
                << " (residual " << format_number(row.back()) << ")\n";
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

int cmd_dualize(const Common& c, double theta) {
  const MediumModel model = require_model(c);
  if (!std::isfinite(theta)) throw InvalidInput("--theta must be finite");
  const auto omegas = omegas_or(c, default_omega_grid(model));
  Table t;
  t.add_scalar("omega");
  t.add_scalar("theta");
  for (const char* name : {"eps", "xi", "zeta", "mu"}) t.add_tensor(name);
  for (const double w : omegas) {
    const ResponseSet rs = rotate_responses(evaluate(model, w), theta);
    std::vector<double> row{w, theta};
    for (const CTensor3* m : {&rs.eps, &rs.xi, &rs.zeta, &rs.mu}) Table::append(row, *m);
    t.rows.push_back(std::move(row));
  }
  nlohmann::ordered_json meta = meta_for("dualize", model.name);
  meta["kind"] = "tabulated_responses";
  meta["theta"] = rounded(theta);
  emit(c, table_output(c, t, meta));
  return kExitOk;
}

struct Sim1DOptions {
  int n = 64;
  double length = 10.0;
  double smoothing = 0.8;
  double plasma = 1.0;
  double damping = 0.1;
};

int cmd_sim1d(const Common& c, const Sim1DOptions& o) {
  Nonlocal1DKernel kern;
  kern.n = o.n;
  kern.length = o.length;
  kern.smoothing = o.smoothing;
  kern.plasma_frequency = o.plasma;
  kern.damping = o.damping;
  if (!(o.length > 0.0) || !(o.smoothing > 0.0) || !(o.damping > 0.0) || !(o.plasma >= 0.0)) {
    throw InvalidInput("sim1d needs length, smoothing, damping > 0 and plasma >= 0");
  }
  kern.validate();
  const PhysicalConstants pc = c.constants();
  const auto omegas = omegas_or(c, FrequencyGrid{0.5, 2.0, 4, false}.values());
  for (const double w : omegas) {
    if (!(w > 0.0)) throw InvalidInput("sim1d frequencies must be positive");
  }
  Table t;
  for (const char* name : {"omega", "x", "re_g", "im_g", "spectrum"}) t.add_scalar(name);
  auto per_omega = parallel_map<std::vector<std::vector<double>>>(omegas.size(), [&](std::size_t i) {
    const double w = omegas[i];
    const Green1D g = solve_green_1d(kern, w, pc);
    const CMatrix s = field_spectrum_from_noise_1d(kern, w, pc);
    std::vector<std::vector<double>> rows;
    for (int j = 0; j < kern.n; ++j) {
      rows.push_back({w, kern.position(j), g.g(j, j).real(), g.g(j, j).imag(), s(j, j).real()});
    }
    return rows;
  });
  for (auto& rows : per_omega)
    for (auto& r : rows) t.rows.push_back(std::move(r));
  nlohmann::ordered_json meta = meta_for("sim1d", "gaussian_drude");
  meta["grid"] = {{"n", o.n},
                  {"length", rounded(o.length)},
                  {"smoothing", rounded(o.smoothing)},
                  {"plasma_frequency", rounded(o.plasma)},
                  {"damping", rounded(o.damping)}};
  emit(c, table_output(c, t, meta));
  return kExitOk;
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,parameters,residual,tolerance,pass,note\n";
  for (const auto& rec : r.checks) {
    out << rec.id << ",";
    for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
      out << (i ? ";" : "") << rec.parameters[i].first << "=" << format_number(rec.parameters[i].second);
    }
    out << "," << format_number(rec.residual) << "," << format_number(rec.tolerance) << ","
        << (rec.pass ? "true" : "false") << "," << rec.note << "\n";
  }
  return out.str();
}

int cmd_verify(const Common& c, const std::string& suite, std::optional<double> tol, bool timings) {
  bool known = false;
  for (const auto s : suite_names()) known = known || s == suite;
  if (!known) throw InvalidInput("unknown suite '" + suite + "'");
  if (tol && !(*tol > 0.0)) throw InvalidInput("--tol must be positive");
  const MediumModel model = require_model(c);
  SuiteOptions opts;
  opts.constants = c.constants();
  if (!c.omega_spec.empty()) opts.omegas = FrequencyGrid::parse(c.omega_spec).values();
  if (!c.k_spec.empty()) opts.wavevectors = std::vector<Vector3d>{parse_k(c.k_spec)};
  opts.tolerance = tol;
  const VerificationReport report = run_suite(suite, model, opts);
  emit(c, c.format == "csv" ? report_csv(report) : report.to_json(timings));
  std::cerr << "mqed verify " << suite << " on " << model.name << ": " << report.checks.size()
            << " checks, " << report.failures() << " failed, max residual "
            << format_number(report.max_residual()) << "\n";
  if (timings) std::cerr << "elapsed " << report.elapsed_seconds << " s\n";
  return report.pass ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* app, Common& c, const std::string& default_format, bool grid = true,
                bool wavevector = false) {
  app->add_option("--model", c.model_path, "Medium model JSON file");
  if (grid) {
    app->add_option("--omega", c.omega_spec,
                    "Frequency grid START:STOP:N[:log] (default: 50 log points over "
                    "[0.1, 10] x the lowest resonance)");
  }
  if (wavevector) {
    app->add_option("--k", c.k_spec,
                    "Wavevector X,Y,Z (default: x, y, z and (1,2,3)/sqrt(14), "
                    "each of length 0.7 w_ref/c)");
  }
  app->add_option("--out", c.out_path, "Output file (default: stdout)");
  c.format = default_format;
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--units", c.units, "Unit system")->check(CLI::IsMember({"scaled", "si"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macroscopic QED toolkit for linear absorbing media"};
  app.require_subcommand(1);
  app.footer("Environment: MQED_THREADS sets the worker count.\n"
             "Exit codes: 0 success, 1 failed check or singularity, 2 invalid input.");

  Common classify_c, evaluate_c, green_c, spectrum_c, dualize_c, sim1d_c, verify_c;
  double theta = 0.0;
  Sim1DOptions sim;
  std::string suite;
  std::optional<double> tol;
  bool timings = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a medium and report reciprocity");
  add_common(classify_cmd, classify_c, "json");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Tabulate eps, xi, zeta, mu over a frequency grid");
  add_common(evaluate_cmd, evaluate_c, "csv");
  auto* green_cmd = app.add_subcommand("green", "k-space Green tensor over (omega, k)");
  add_common(green_cmd, green_c, "csv", true, true);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Electric-field fluctuation spectrum over (omega, k)");
  add_common(spectrum_cmd, spectrum_c, "csv", true, true);
  auto* dualize_cmd = app.add_subcommand("dualize", "Duality-rotated responses tabulated over omega");
  add_common(dualize_cmd, dualize_c, "json");
  dualize_cmd->add_option("--theta", theta, "Rotation angle in radians")->required();
  auto* sim1d_cmd = app.add_subcommand("sim1d", "1-D non-local Gaussian-Drude slab: Green diagonal and spectrum");
  add_common(sim1d_cmd, sim1d_c, "csv");
  sim1d_cmd->add_option("--n", sim.n, "Interior grid points (>= 16)");
  sim1d_cmd->add_option("--length", sim.length, "Box length L");
  sim1d_cmd->add_option("--smoothing", sim.smoothing, "Gaussian kernel width (>= 2h)");
  sim1d_cmd->add_option("--plasma", sim.plasma, "Plasma frequency (0 disables the conductor)");
  sim1d_cmd->add_option("--damping", sim.damping, "Drude damping");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write a report");
  add_common(verify_cmd, verify_c, "json", true, true);
  verify_cmd->add_option("--suite", suite, "schwarz | fdt | duality | onsager | asymptote | equivalence")
      ->required();
  verify_cmd->add_option("--tol", tol, "Override the suite's primary tolerance");
  verify_cmd->add_flag("--timings", timings, "Include elapsed time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_c);
    if (*evaluate_cmd) return cmd_evaluate(evaluate_c);
    if (*green_cmd) return cmd_green(green_c);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_c);
    if (*dualize_cmd) return cmd_dualize(dualize_c, theta);
    if (*sim1d_cmd) return cmd_sim1d(sim1d_c, sim);
    if (*verify_cmd) return cmd_verify(verify_c, suite, tol, timings);
  } catch (const ParseError& e) {
    std::cerr << "mqed: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "mqed: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidModel& e) {
    std::cerr << "mqed: invalid model: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SingularityError& e) {
    std::cerr << "mqed: singular Helmholtz operator at k=(" << format_number(e.k().x()) << ","
              << format_number(e.k().y()) << "," << format_number(e.k().z())
              << "), omega=" << format_number(e.omega().real()) << "+"
              << format_number(e.omega().imag()) << "i\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "mqed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInvalid;
}
