#include "mqed/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "json.hpp"
#include "mqed/conductivity.hpp"
#include "mqed/duality.hpp"
#include "mqed/fluctuations.hpp"
#include "mqed/green.hpp"
#include "mqed/parallel.hpp"

namespace mqed {

namespace {

using Records = std::vector<CheckRecord>;

constexpr double kSchwarzTol = 1e-12;
constexpr double kFdtTol = 1e-10;
constexpr double kOnsagerTol = 1e-12;
constexpr double kEquivalenceTol = 1e-12;
constexpr double kCovarianceTol = 1e-12;
constexpr double kGroupTol = 1e-13;
constexpr double kSlotTol = 1e-14;
constexpr double kAsymptoteTol = 1e-3;

// Scale-free: only an exactly zero reference falls back to the absolute norm.
double relative_to(double diff, double ref) { return ref > 0.0 ? diff / ref : diff; }

CheckRecord make_record(std::string id, std::vector<std::pair<std::string, double>> params,
                        double residual, double tol, std::string note = {}) {
  CheckRecord r;
  r.id = std::move(id);
  r.parameters = std::move(params);
  r.residual = residual;
  r.tolerance = tol;
  r.pass = std::isfinite(residual) && residual <= tol;
  r.note = std::move(note);
  return r;
}

CheckRecord failed_record(std::string id, std::vector<std::pair<std::string, double>> params,
                          double tol, const std::exception& e) {
  CheckRecord r = make_record(std::move(id), std::move(params),
                              std::numeric_limits<double>::infinity(), tol, e.what());
  r.pass = false;
  return r;
}

std::vector<std::pair<std::string, double>> point_params(double omega, const Vector3d& k) {
  return {{"omega", omega}, {"kx", k.x()}, {"ky", k.y()}, {"kz", k.z()}};
}

struct Grid {
  std::vector<double> omegas;
  std::vector<Vector3d> ks;
  std::size_t size() const { return omegas.size() * ks.size(); }
  double omega(std::size_t i) const { return omegas[i / ks.size()]; }
  const Vector3d& k(std::size_t i) const { return ks[i % ks.size()]; }
};

// Evaluates `check(omega, k)` at every grid point, in parallel, in grid order.
template <typename Check>
Records sweep(const Grid& grid, unsigned threads, Check&& check) {
  auto per_point = parallel_map<Records>(
      grid.size(), [&](std::size_t i) { return check(grid.omega(i), grid.k(i)); }, threads);
  Records out;
  for (auto& rs : per_point)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

Records schwarz_suite(const MediumModel& model, const Grid& grid, double tol,
                      const PhysicalConstants& pc, unsigned threads) {
  Records out;
  for (const double w : grid.omegas) {
    const cplx omega(w, 0.0);
    try {
      out.push_back(make_record("schwarz.response", {{"omega", w}},
                                schwarz_check(model, std::span<const cplx>(&omega, 1)), tol));
    } catch (const Error& e) {
      out.push_back(failed_record("schwarz.response", {{"omega", w}}, tol, e));
    }
  }
  Records rest = sweep(grid, threads, [&](double w, const Vector3d& k) {
    Records r;
    const cplx omega(w, 0.0);
    // Real-space reality maps (k, w) to (-k, -w*).
    const cplx reflected = -std::conj(omega);
    try {
      const CTensor3 q = conductivity_k(model, k, omega, pc);
      const CTensor3 q_ref = conductivity_k(model, Vector3d(-k), reflected, pc);
      r.push_back(make_record("schwarz.conductivity", point_params(w, k),
                              relative_to((q_ref.conjugate() - q).norm(), q.norm()), tol));
    } catch (const Error& e) {
      r.push_back(failed_record("schwarz.conductivity", point_params(w, k), tol, e));
    }
    try {
      const CTensor3 g = solve_green_k(model, k, omega, pc).g;
      const CTensor3 g_ref = solve_green_k(model, Vector3d(-k), reflected, pc).g;
      r.push_back(make_record("schwarz.green", point_params(w, k),
                              relative_to((g_ref.conjugate() - g).norm(), g.norm()), tol));
    } catch (const Error& e) {
      r.push_back(failed_record("schwarz.green", point_params(w, k), tol, e));
    }
    return r;
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Records fdt_suite(const MediumModel& model, const Grid& grid, double tol,
                  const PhysicalConstants& pc, unsigned threads) {
  return sweep(grid, threads, [&](double w, const Vector3d& k) {
    try {
      return Records{make_record("fdt.integral_relation", point_params(w, k),
                                 integral_relation_residual_k(model, k, w, pc), tol)};
    } catch (const Error& e) {
      return Records{failed_record("fdt.integral_relation", point_params(w, k), tol, e)};
    }
  });
}

Records onsager_suite(const MediumModel& model, const Grid& grid, double tol,
                      const PhysicalConstants& pc, unsigned threads) {
  return sweep(grid, threads, [&](double w, const Vector3d& k) {
    try {
      const bool reciprocal = classify(evaluate(model, w)).reciprocal;
      return Records{make_record("onsager.reciprocity", point_params(w, k),
                                 onsager_residual(model, k, w, pc), tol,
                                 reciprocal ? "reciprocal medium: symmetry expected"
                                            : "non-reciprocal medium: violation possible")};
    } catch (const Error& e) {
      return Records{failed_record("onsager.reciprocity", point_params(w, k), tol, e)};
    }
  });
}

Records equivalence_suite(const MediumModel& model, const Grid& grid, double tol,
                          const PhysicalConstants& pc, unsigned threads) {
  return sweep(grid, threads, [&](double w, const Vector3d& k) {
    try {
      const ResponseSet rs = evaluate(model, w);
      const CTensor3 m_bi = helmholtz_bianisotropic_k(rs, k, pc);
      const CTensor3 m_gen = helmholtz_generic_k(local_conductivity_k(rs, k, pc), k, w, pc);
      return Records{make_record("equivalence.helmholtz", point_params(w, k),
                                 relative_to((m_bi - m_gen).norm(), m_bi.norm()), tol)};
    } catch (const Error& e) {
      return Records{failed_record("equivalence.helmholtz", point_params(w, k), tol, e)};
    }
  });
}

Records asymptote_suite(const MediumModel& model, const Grid& grid, double tol,
                        const PhysicalConstants& pc) {
  const Vector3d k = grid.ks.back();
  const double base = model.highest_resonance();
  Records out;
  double previous = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 5; ++j) {
    const double w = base * std::pow(10.0, 2.0 + j / 5.0);
    try {
      const double r = asymptote_residual(model, k, w, pc);
      if (j > 0) {
        CheckRecord rec = make_record("asymptote.decay", point_params(w, k), r, previous);
        rec.pass = r < previous;
        rec.note = "tolerance is the residual at the previous frequency";
        out.push_back(std::move(rec));
      }
      if (j == 5) out.push_back(make_record("asymptote.bound", point_params(w, k), r, tol));
      previous = r;
    } catch (const Error& e) {
      out.push_back(failed_record("asymptote.decay", point_params(w, k), tol, e));
    }
  }
  return out;
}

Records duality_suite(const MediumModel& model, const Grid& grid, double tol,
                      const PhysicalConstants& pc, unsigned threads) {
  Records out;
  std::mt19937_64 rng(20100915);
  std::uniform_real_distribution<double> angle(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  double composition = 0.0, inverse = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = angle(rng), b = angle(rng);
    composition = std::max(composition, (response_transform(a) * response_transform(b) -
                                         response_transform(a + b)).norm());
    inverse = std::max(inverse, (response_transform(a) * response_transform(-a) -
                                 Eigen::Matrix4d::Identity()).norm());
  }
  out.push_back(make_record("duality.identity", {{"theta", 0.0}},
                            (response_transform(0.0) - Eigen::Matrix4d::Identity()).norm(), kGroupTol));
  out.push_back(make_record("duality.composition", {{"pairs", 100.0}}, composition, kGroupTol));
  out.push_back(make_record("duality.inverse", {{"pairs", 100.0}}, inverse, kGroupTol));

  const double w0 = grid.omegas.front();
  try {
    const ResponseSet rs = evaluate(model, w0);
    const ResponseSet r = rotate_responses(rs, std::numbers::pi / 2);
    const double slot = std::sqrt((r.eps - rs.mu).squaredNorm() + (r.xi + rs.zeta).squaredNorm() +
                                  (r.zeta + rs.xi).squaredNorm() + (r.mu - rs.eps).squaredNorm()) /
                        rs.norm();
    out.push_back(make_record("duality.slot_permutation", {{"omega", w0}}, slot, kSlotTol));
  } catch (const Error& e) {
    out.push_back(failed_record("duality.slot_permutation", {{"omega", w0}}, kSlotTol, e));
  }

  const std::array<double, 4> thetas = {std::numbers::pi / 7, std::numbers::pi / 4,
                                        std::numbers::pi / 2, 2.5};
  auto per_omega = parallel_map<Records>(
      grid.omegas.size(),
      [&](std::size_t i) {
        Records r;
        const double w = grid.omegas[i];
        std::mt19937_64 local(1000 + i);
        std::normal_distribution<double> normal(0.0, 1.0);
        auto vec = [&] { return Vector3c(cplx(normal(local), normal(local)), cplx(normal(local), normal(local)),
                                         cplx(normal(local), normal(local))); };
        const FieldPair fields{vec(), vec()};
        const FieldPair noise{vec(), vec()};
        for (const double theta : thetas) {
          try {
            const ResponseSet rs = evaluate(model, w);
            r.push_back(make_record("duality.constitutive_covariance", {{"omega", w}, {"theta", theta}},
                                    constitutive_covariance_residual(rs, fields, noise, theta, pc), tol));
          } catch (const Error& e) {
            r.push_back(failed_record("duality.constitutive_covariance", {{"omega", w}, {"theta", theta}},
                                      tol, e));
          }
        }
        return r;
      },
      threads);
  for (auto& rs : per_omega) out.insert(out.end(), rs.begin(), rs.end());

  try {
    std::vector<cplx> samples;
    for (const double w : grid.omegas) samples.emplace_back(w, 0.0);
    const SymmetryReport sym = symmetry_class(model, samples);
    std::string note = std::string(to_string(sym.symmetry)) + " duality symmetry, category " +
                       std::string(to_string(sym.category));
    std::vector<std::pair<std::string, double>> params;
    if (sym.witness) params.emplace_back("witness_theta", *sym.witness);
    out.push_back(make_record("duality.symmetry_class", std::move(params), 0.0, 0.0, note));
  } catch (const Error& e) {
    out.push_back(failed_record("duality.symmetry_class", {}, 0.0, e));
  }
  return out;
}

double round_for_output(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

FrequencyGrid FrequencyGrid::parse(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) {
    throw InvalidInput("frequency grid must be START:STOP:N[:log], got '" + std::string(spec) + "'");
  }
  FrequencyGrid g;
  try {
    std::size_t used = 0;
    g.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("start");
    g.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("stop");
    g.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw InvalidInput("frequency grid must be START:STOP:N[:log], got '" + std::string(spec) + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") throw InvalidInput("grid spacing must be 'log' or 'lin'");
    g.log = parts[3] == "log";
  }
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || g.count < 1) {
    throw InvalidInput("frequency grid needs finite bounds and N >= 1");
  }
  if (g.count > 1 && !(g.stop > g.start)) throw InvalidInput("frequency grid must be strictly increasing");
  if (g.log && !(g.start > 0.0)) throw InvalidInput("log grid needs a positive start");
  return g;
}

std::vector<double> FrequencyGrid::values() const {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out[i] = log ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  return out;
}

std::vector<double> default_omega_grid(const MediumModel& model) {
  const double w = model.lowest_resonance();
  return FrequencyGrid{0.1 * w, 10.0 * w, 50, true}.values();
}

std::vector<Vector3d> default_wavevectors(const MediumModel& model, const PhysicalConstants& pc) {
  const double k0 = 0.7 * model.lowest_resonance() / pc.c;
  return {k0 * Vector3d::UnitX(), k0 * Vector3d::UnitY(), k0 * Vector3d::UnitZ(),
          k0 * Vector3d(1.0, 2.0, 3.0).normalized()};
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

double VerificationReport::max_residual(std::string_view id_prefix) const {
  double m = 0.0;
  for (const auto& c : checks) {
    if (c.id.starts_with(id_prefix)) m = std::max(m, c.residual);
  }
  return m;
}

std::string VerificationReport::to_json(bool include_timings) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["suite"] = suite;
  doc["model"] = model;
  doc["pass"] = pass;
  doc["failures"] = failures();
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json rec;
    rec["id"] = c.id;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : c.parameters) params[name] = round_for_output(value);
    rec["parameters"] = params;
    if (std::isfinite(c.residual)) {
      rec["residual"] = round_for_output(c.residual);
    } else {
      rec["residual"] = nullptr;
    }
    rec["tolerance"] = round_for_output(c.tolerance);
    rec["pass"] = c.pass;
    if (!c.note.empty()) rec["note"] = c.note;
    list.push_back(rec);
  }
  doc["checks"] = list;
  if (include_timings) doc["timings"] = {{"elapsed_seconds", elapsed_seconds}};
  return doc.dump(2) + "\n";
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"schwarz", "fdt", "duality",
                                                      "onsager", "asymptote", "equivalence"};
  return names;
}

double default_tolerance(std::string_view suite) {
  if (suite == "schwarz") return kSchwarzTol;
  if (suite == "fdt") return kFdtTol;
  if (suite == "duality") return kCovarianceTol;
  if (suite == "onsager") return kOnsagerTol;
  if (suite == "asymptote") return kAsymptoteTol;
  if (suite == "equivalence") return kEquivalenceTol;
  throw InvalidInput("unknown suite '" + std::string(suite) + "'");
}

VerificationReport run_suite(std::string_view suite, const MediumModel& model,
                             const SuiteOptions& options) {
  const double tol = options.tolerance.value_or(default_tolerance(suite));
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const PhysicalConstants& pc = options.constants;
  const unsigned threads = options.threads == 0 ? worker_count() : options.threads;

  Grid grid;
  grid.omegas = options.omegas.value_or(default_omega_grid(model));
  grid.ks = options.wavevectors.value_or(default_wavevectors(model, pc));
  if (grid.omegas.empty() || grid.ks.empty()) throw InvalidInput("empty frequency or wavevector grid");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(suite);
  report.model = model.name;
  if (suite == "schwarz") {
    report.checks = schwarz_suite(model, grid, tol, pc, threads);
  } else if (suite == "fdt") {
    report.checks = fdt_suite(model, grid, tol, pc, threads);
  } else if (suite == "duality") {
    report.checks = duality_suite(model, grid, tol, pc, threads);
  } else if (suite == "onsager") {
    report.checks = onsager_suite(model, grid, tol, pc, threads);
  } else if (suite == "asymptote") {
    report.checks = asymptote_suite(model, grid, tol, pc);
  } else {
    report.checks = equivalence_suite(model, grid, tol, pc, threads);
  }
  report.pass = report.failures() == 0;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace mqed
