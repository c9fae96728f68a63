// kawalab — deterministic command-line surface for the solitary-wave
// laboratory: closed-form families, symbolic system diffs, the fixed-point
// profile solver, linearized spectra, kernel positivity checks, time
// evolution, stability experiments, and the end-to-end verification suite.
//
// Exit codes: 0 success / all checks passed; 1 a computed check failed
// (reports are still written); 2 usage or configuration error.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kawalab/branch.hpp"
#include "kawalab/evolution.hpp"
#include "kawalab/petviashvili.hpp"
#include "kawalab/pf2.hpp"
#include "kawalab/report.hpp"
#include "kawalab/spectral.hpp"
#include "kawalab/system_compare.hpp"
#include "kawalab/verify.hpp"

namespace {

using namespace kawalab;

// JSON config files: top-level keys configure global options, nested objects
// configure the subcommand of the same name. Command-line flags win.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    input >> j;
    std::vector<CLI::ConfigItem> out;
    walk(j, {}, out);
    return out;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
  static void walk(const nlohmann::json& j, std::vector<std::string> parents,
                   std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object()) {
        auto p = parents;
        p.push_back(key);
        walk(val, p, out);
      } else {
        CLI::ConfigItem item;
        item.parents = parents;
        item.name = key;
        if (val.is_array())
          for (const auto& e : val) item.inputs.push_back(scalar(e));
        else
          item.inputs.push_back(scalar(val));
        out.push_back(item);
      }
    }
  }
};

BranchSource parse_source(const std::string& s) {
  if (s == "paper") return BranchSource::paper;
  if (s == "derived") return BranchSource::derived;
  throw CLI::ValidationError("source/convention must be 'paper' or 'derived'");
}

// Emit `content` to stdout (empty path) or to `path`, with a sidecar manifest
// <path>.manifest.json echoing the run parameters.
void emit(const std::string& path, const std::string& content, const JsonWriter& manifest) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  write_text_file(path, content);
  write_text_file(path + ".manifest.json", manifest.str());
}

JsonWriter base_manifest(const std::string& command) {
  JsonWriter m;
  m.put("version", kVersionStamp).put("command", command);
  return m;
}

// Wave + equation bundle shared by profile/spectrum/evolve/experiment.
struct WaveSetup {
  EvoEquation eq;
  double speed = 0;
  double width = 1.0;  // inverse-width parameter of the profile
  std::function<double(double)> profile;
  std::string description;
};

WaveSetup make_wave(const std::string& equation, double speed, BranchSource source) {
  WaveSetup w;
  if (equation == "benchmark") {
    BenchmarkWave bw;
    w.eq = EvoEquation::benchmark();
    w.speed = bw.speed;
    w.width = bw.b;
    w.profile = [bw](double x) { return bw.profile(x); };
    w.description = "benchmark sech^4 wave";
  } else if (equation == "kawahara") {
    const KawaharaBranchPoint p = kawahara_branch(speed, source);
    w.eq = EvoEquation::kawahara(p.gamma1);
    w.speed = p.omega;
    w.width = p.b;
    w.profile = [p](double x) { return p.profile(x); };
    w.description = std::string("kawahara branch point, source ") + to_string(p.source);
  } else if (equation == "mkawahara") {
    const MKawaharaBranchPoint p = mkawahara_branch(speed, source);
    w.eq = EvoEquation::mkawahara(p.gamma2);
    w.speed = p.c;
    w.width = p.alpha;
    w.profile = [p](double x) { return p.profile(x); };
    w.description = std::string("cubic-equation branch point, convention ") +
                    to_string(p.convention);
  } else {
    throw CLI::ValidationError("equation must be benchmark, kawahara, or mkawahara");
  }
  return w;
}

std::vector<double> eval_profile(const WaveSetup& w, const Grid& grid) {
  std::vector<double> phi(static_cast<std::size_t>(grid.n));
  for (int j = 0; j < grid.n; ++j) phi[static_cast<std::size_t>(j)] = w.profile(grid.x(j));
  return phi;
}

std::vector<double> linearization_potential(const WaveSetup& w, const std::vector<double>& phi) {
  // d/dphi [a phi^q] = q a phi^{q-1}
  std::vector<double> pot(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) {
    double v = w.eq.q * w.eq.a;
    for (int i = 0; i < w.eq.q - 1; ++i) v *= phi[j];
    pot[j] = v;
  }
  return pot;
}

KernelSamples kernel_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open kernel file: " + path);
  KernelSamples ks;
  ks.provenance = "file";
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find_first_not_of("kg, \r") == std::string::npos) continue;  // header
    }
    double k = 0, g = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &k, &g) == 2) {
      ks.k.push_back(k);
      ks.g.push_back(g);
    }
  }
  return ks;
}

// ---------------------------------------------------------------- commands

int cmd_derive_system(const std::string& equation, const std::string& out) {
  std::ostringstream os;
  if (equation == "kawahara") {
    const SechPoly residual = stationary_residual(EquationForm::kawahara(), kawahara_ansatz());
    const auto system = collect_coefficient_system(residual);
    os << "# rederived coefficient system (two-term sech ansatz)\n";
    for (const auto& eq : system)
      os << "sech^" << eq.power << ": " << eq.poly.to_string() << " = 0\n";
    os << "\n# published system\n";
    const auto pub = published_kawahara_system();
    for (std::size_t i = 0; i < pub.size(); ++i)
      os << "line " << i + 1 << ": " << pub[i].to_string() << " = 0\n";
    os << "\n" << compare_with_paper_system(system).to_string();
    const auto sol = solve_derived_kawahara();
    os << "\n# exact solution of the rederived system\n";
    os << "two-term route quadratic: (" << to_string(sol.quad_a) << ")*r^2 + ("
       << to_string(sol.quad_b) << ")*r + (" << to_string(sol.quad_c)
       << ") = 0, r = lambda/omega\n";
    os << "discriminant: " << to_string(sol.discriminant)
       << (sol.beta_branch_real ? " (real roots)" : " (negative: no real two-term family)")
       << "\n";
    os << "single-term family: lambda/omega = " << to_string(sol.lambda_over_omega)
       << ", B/omega = " << to_string(sol.B_over_omega)
       << ", gamma*omega = " << to_string(sol.gamma_times_omega) << "\n";
  } else if (equation == "mkawahara") {
    const SechPoly residual = stationary_residual(EquationForm::mkawahara(), mkawahara_ansatz());
    const auto system = collect_coefficient_system(residual);
    os << "# rederived coefficient system (single-term sech^2 ansatz)\n";
    for (const auto& eq : system)
      os << "sech^" << eq.power << ": " << eq.poly.to_string() << " = 0\n";
    const auto sol = solve_derived_mkawahara();
    os << "\n# exact solution\n";
    os << "beta^2/B = " << to_string(sol.beta_sq_over_B) << ", B/c = " << to_string(sol.B_over_c)
       << ", gamma*c = " << to_string(sol.gamma_times_c) << "\n";
  } else {
    throw CLI::ValidationError("equation must be kawahara or mkawahara");
  }
  JsonWriter manifest = base_manifest("derive-system");
  manifest.put("equation", equation);
  emit(out, os.str(), manifest);
  return 0;
}

int cmd_branch(const std::string& equation, double omega_min, double omega_max, int steps,
               const std::string& source_str, const std::string& format,
               const std::string& out) {
  if (steps < 1) throw CLI::ValidationError("steps must be >= 1");
  const BranchSource source = parse_source(source_str);
  std::vector<double> speeds;
  for (int i = 0; i < steps; ++i)
    speeds.push_back(steps == 1 ? omega_min
                                : omega_min + (omega_max - omega_min) * i / (steps - 1));

  std::string content;
  if (equation == "kawahara") {
    std::vector<KawaharaBranchPoint> pts;
    for (double w : speeds) pts.push_back(kawahara_branch(w, source));
    if (format == "csv") {
      content = branch_csv(pts);
    } else {
      JsonWriter w;
      std::vector<double> om, l1, b1, bb, g1, nn, ii;
      for (const auto& p : pts) {
        om.push_back(p.omega);
        l1.push_back(p.lambda1);
        b1.push_back(p.beta1);
        bb.push_back(p.b);
        g1.push_back(p.gamma1);
        nn.push_back(p.norm_sq());
        ii.push_back(p.index());
      }
      w.put("omega", om).put("lambda1", l1).put("beta1", b1).put("b", bb).put("gamma1", g1);
      w.put("norm_sq", nn).put("index", ii).put("source", source_str);
      content = w.str();
    }
  } else if (equation == "mkawahara") {
    std::vector<MKawaharaBranchPoint> pts;
    for (double c : speeds) pts.push_back(mkawahara_branch(c, source));
    if (format == "csv") {
      content = mkawahara_branch_csv(pts);
    } else {
      JsonWriter w;
      std::vector<double> cc, al, b2, g2, nn, ii;
      for (const auto& p : pts) {
        cc.push_back(p.c);
        al.push_back(p.alpha);
        b2.push_back(p.beta2);
        g2.push_back(p.gamma2);
        nn.push_back(p.norm_sq());
        ii.push_back(p.index());
      }
      w.put("c", cc).put("alpha", al).put("beta2", b2).put("gamma2", g2);
      w.put("norm_sq", nn).put("index", ii).put("convention", source_str);
      content = w.str();
    }
  } else {
    throw CLI::ValidationError("equation must be kawahara or mkawahara");
  }

  JsonWriter manifest = base_manifest("branch");
  manifest.put("equation", equation)
      .put("omega_min", omega_min)
      .put("omega_max", omega_max)
      .put("steps", steps)
      .put("source", source_str)
      .put("format", format);
  emit(out, content, manifest);
  return 0;
}

int cmd_profile(const std::string& equation, double speed, const std::string& source_str,
                int N, double L, const std::string& out) {
  const WaveSetup w = make_wave(equation, speed, parse_source(source_str));
  const double half = (L > 0) ? L : 20.0 / w.width;
  const Grid grid{N, half};
  GridProfile prof{grid, eval_profile(w, grid)};
  JsonWriter manifest = base_manifest("profile");
  manifest.put("equation", equation)
      .put("speed", speed)
      .put("source", source_str)
      .put("N", N)
      .put("L", half);
  emit(out, profile_csv(prof), manifest);
  return 0;
}

int cmd_solve(double gamma, double c2, double speed, int q, double a, int N, double L,
              double tol, const std::string& init_kind, bool albert, const std::string& out) {
  if (albert) {
    gamma = 1.0 / 1680.0;
    c2 = 13.0 / 420.0;
    speed = 12.0 / 35.0;
    q = 2;
    a = 0.5;
  }
  const Grid grid{N, L};
  std::vector<double> init = (init_kind == "gauss") ? gaussian_bump(grid, 2.0, 2.0)
                                                    : sech2_bump(grid, 2.0, 1.0);
  PetviashviliParams params;
  params.gamma = gamma;
  params.c2 = c2;
  params.speed = speed;
  params.q = q;
  params.a = a;
  params.tol = tol;

  JsonWriter manifest = base_manifest("solve");
  manifest.put("gamma", gamma)
      .put("c2", c2)
      .put("speed", speed)
      .put("q", q)
      .put("a", a)
      .put("N", N)
      .put("L", L)
      .put("tol", tol)
      .put("init", init_kind);

  try {
    auto [prof, report] = petviashvili_solve(params, grid, init);
    if (out.empty()) {
      std::cout << solve_report_json(report);
    } else {
      write_text_file(out + ".csv", profile_csv(prof));
      write_text_file(out + ".report.json", solve_report_json(report));
      write_text_file(out + ".manifest.json", manifest.str());
    }
    return 0;
  } catch (const SolveFailure& f) {
    std::cerr << "solve failed: " << f.what() << "\n";
    if (out.empty()) {
      std::cout << solve_report_json(f.report);
    } else {
      write_text_file(out + ".report.json", solve_report_json(f.report));
      write_text_file(out + ".manifest.json", manifest.str());
    }
    return 1;
  }
}

int cmd_spectrum(std::string equation, double speed, const std::string& source_str, int N,
                 double L, bool albert, const std::string& out) {
  if (albert) equation = "benchmark";
  const WaveSetup w = make_wave(equation, speed, parse_source(source_str));
  const Grid grid{N, L};
  const std::vector<double> phi = eval_profile(w, grid);
  const std::vector<double> pot = linearization_potential(w, phi);
  const auto op = assemble_operator(grid, w.eq.gamma, w.eq.c2, w.speed, pot, w.width);
  const auto spec = lowest_spectrum(op, phi, 4);
  const auto chi = solve_chi_and_index(op, phi);

  SpectrumReportData d;
  d.omega = w.speed;
  d.gamma = w.eq.gamma;
  d.N = N;
  d.L = L;
  d.eigs = spec.lowest;
  d.neg_count = spec.neg_count;
  d.zero_residual = spec.zero_residual;
  d.cos_sim_zero_mode = spec.cos_sim_zero_mode;
  d.index_I = chi.index_I;
  d.stable = spec.neg_count == 1 && spec.zero_simple && chi.index_I < 0;

  JsonWriter manifest = base_manifest("spectrum");
  manifest.put("equation", equation)
      .put("speed", w.speed)
      .put("source", source_str)
      .put("N", N)
      .put("L", L);
  emit(out, spectrum_report_json(d), manifest);
  return 0;
}

int cmd_index(const std::string& equation, double speed, const std::string& source_str, int N,
              double L, const std::string& out) {
  const WaveSetup w = make_wave(equation, speed, parse_source(source_str));
  const Grid grid{N, L};
  const std::vector<double> phi = eval_profile(w, grid);
  const std::vector<double> pot = linearization_potential(w, phi);
  const auto op = assemble_operator(grid, w.eq.gamma, w.eq.c2, w.speed, pot, w.width);
  const auto spec = lowest_spectrum(op, phi, 4);
  const auto chi = solve_chi_and_index(op, phi);

  JsonWriter body;
  body.put("index_I", chi.index_I)
      .put("chi_residual", chi.chi_residual)
      .put("cond", chi.cond)
      .put("neg_count", spec.neg_count)
      .put("zero_simple", spec.zero_simple)
      .put("stable", spec.neg_count == 1 && spec.zero_simple && chi.index_I < 0);
  JsonWriter manifest = base_manifest("index");
  manifest.put("equation", equation)
      .put("speed", w.speed)
      .put("source", source_str)
      .put("N", N)
      .put("L", L);
  emit(out, body.str(), manifest);
  return 0;
}

int cmd_pf2(const std::string& kernel_name, double range, int grid_samples, int draws,
            std::uint64_t seed, const std::string& emit_kernel, const std::string& out) {
  KernelSamples ks;
  if (kernel_name == "sech2") {
    ks = sample_kernel(kernel_sech2_transform, range, grid_samples);
  } else if (kernel_name == "sech4") {
    ks = sample_kernel(kernel_sech4_transform, range, grid_samples);
  } else if (kernel_name == "gaussian") {
    ks = sample_kernel(kernel_gaussian, range, grid_samples);
  } else if (kernel_name == "bimodal") {
    ks = sample_kernel(kernel_bimodal, range, grid_samples);
  } else {
    ks = kernel_from_csv(kernel_name);
  }
  const auto lc = positivity_and_logconcavity(ks);
  const auto tp = tp2_sample_check(ks, draws, seed);
  if (!emit_kernel.empty()) write_text_file(emit_kernel, kernel_csv(ks));

  JsonWriter manifest = base_manifest("pf2");
  manifest.put("kernel", kernel_name)
      .put("range", range)
      .put("grid_samples", grid_samples)
      .put("draws", draws)
      .put("seed", static_cast<unsigned long long>(seed));
  emit(out, pf2_report_json(lc, tp), manifest);
  return (lc.positive && lc.log_concave && tp.pass) ? 0 : 1;
}

int cmd_evolve(const std::string& equation, double speed, const std::string& source_str, int N,
               double L, double T, double dt, int sample_every, const std::string& init_kind,
               const std::string& out) {
  EvoEquation eq;
  std::vector<double> u, reference;
  const Grid grid{N, L};
  bool have_reference = false;

  if (equation == "kdv" || equation == "mkdv" || equation == "linear") {
    eq = (equation == "kdv") ? EvoEquation::kdv()
                             : (equation == "mkdv" ? EvoEquation::mkdv()
                                                   : EvoEquation::linear_only());
    u = gaussian_bump(grid, 0.5, 2.0);
  } else {
    const WaveSetup w = make_wave(equation, speed, parse_source(source_str));
    eq = w.eq;
    if (init_kind == "wave") {
      u = eval_profile(w, grid);
      reference = u;
      have_reference = true;
    } else {
      u = gaussian_bump(grid, 0.5, 2.0);
    }
  }

  JsonWriter manifest = base_manifest("evolve");
  manifest.put("equation", equation)
      .put("speed", speed)
      .put("source", source_str)
      .put("N", N)
      .put("L", L)
      .put("T", T)
      .put("dt", dt)
      .put("sample_every", sample_every)
      .put("init", init_kind);

  try {
    auto rows = evolve_with_diagnostics(eq, grid, u, T, dt, sample_every,
                                        have_reference ? &reference : nullptr);
    emit(out, diagnostics_csv(rows), manifest);
    return 0;
  } catch (const BlowUpError& b) {
    std::cerr << b.what() << "\n";
    return 1;
  }
}

int cmd_experiment(const std::string& equation, double speed, const std::string& source_str,
                   const std::string& perturbation, double eps, std::uint64_t seed, int N,
                   double L, double T, double dt, int sample_every, const std::string& out) {
  const WaveSetup w = make_wave(equation, speed, parse_source(source_str));
  const Grid grid{N, L};
  const std::vector<double> phi = eval_profile(w, grid);

  JsonWriter manifest = base_manifest("experiment");
  manifest.put("equation", equation)
      .put("speed", w.speed)
      .put("source", source_str)
      .put("perturbation", perturbation)
      .put("eps", eps)
      .put("seed", static_cast<unsigned long long>(seed))
      .put("N", N)
      .put("L", L)
      .put("T", T)
      .put("dt", dt)
      .put("sample_every", sample_every);

  try {
    const auto ex = stability_experiment(w.eq, grid, phi, perturbation, eps, seed, T, dt,
                                         sample_every);
    JsonWriter summary;
    summary.put("d0", ex.d0)
        .put("max_dist", ex.max_dist)
        .put("max_over_d0", ex.max_over_d0)
        .put("late_over_early", ex.late_over_early)
        .put("boundary_contamination", ex.boundary_contamination)
        .put("domain_contaminated", ex.domain_contaminated);
    if (out.empty()) {
      std::cout << diagnostics_csv(ex.rows) << summary.str();
    } else {
      write_text_file(out + ".csv", diagnostics_csv(ex.rows));
      write_text_file(out + ".summary.json", summary.str());
      write_text_file(out + ".manifest.json", manifest.str());
    }
    return 0;
  } catch (const BlowUpError& b) {
    std::cerr << b.what() << "\n";
    return 1;
  }
}

int cmd_verify(int only) {
  std::vector<CriterionResult> results;
  if (only > 0)
    results.push_back(run_criterion(only));
  else
    results = run_all_criteria();
  bool all = true;
  for (const auto& r : results) {
    std::cout << r.line() << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kawalab: solitary traveling waves and orbital stability for fifth-order "
               "dispersive equations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "JSON config file (flags override file values)");
  app.config_formatter(std::make_shared<JsonConfig>());

  int rc = 0;

  // derive-system
  {
    auto* c = app.add_subcommand("derive-system",
                                 "print the rederived and published coefficient systems plus "
                                 "their monomial-level diff");
    auto equation = std::make_shared<std::string>("kawahara");
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "kawahara | mkawahara")->capture_default_str();
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, out] { rc = cmd_derive_system(*equation, *out); });
  }

  // branch
  {
    auto* c = app.add_subcommand("branch", "sweep a closed-form wave family over speeds");
    auto equation = std::make_shared<std::string>("kawahara");
    auto omega_min = std::make_shared<double>(0.5);
    auto omega_max = std::make_shared<double>(2.0);
    auto steps = std::make_shared<int>(4);
    auto source = std::make_shared<std::string>("paper");
    auto format = std::make_shared<std::string>("csv");
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "kawahara | mkawahara")->capture_default_str();
    c->add_option("--omega-min", *omega_min, "lowest speed")->capture_default_str();
    c->add_option("--omega-max", *omega_max, "highest speed")->capture_default_str();
    c->add_option("--steps", *steps, "number of points")->capture_default_str();
    c->add_option("--source", *source, "paper | derived")->capture_default_str();
    c->add_option("--format", *format, "csv | json")->capture_default_str();
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, omega_min, omega_max, steps, source, format, out] {
      rc = cmd_branch(*equation, *omega_min, *omega_max, *steps, *source, *format, *out);
    });
  }

  // profile
  {
    auto* c = app.add_subcommand("profile", "evaluate a closed-form profile on a grid (CSV)");
    auto equation = std::make_shared<std::string>("kawahara");
    auto speed = std::make_shared<double>(1.0);
    auto source = std::make_shared<std::string>("paper");
    auto N = std::make_shared<int>(1024);
    auto L = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "benchmark | kawahara | mkawahara")
        ->capture_default_str();
    c->add_option("--speed,--omega", *speed, "wave speed")->capture_default_str();
    c->add_option("--source,--convention", *source, "paper | derived")->capture_default_str();
    c->add_option("--N", *N, "grid points (power of two)")->capture_default_str();
    c->add_option("--L", *L, "half-length (0 = auto from wave width)")->capture_default_str();
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, speed, source, N, L, out] {
      rc = cmd_profile(*equation, *speed, *source, *N, *L, *out);
    });
  }

  // solve
  {
    auto* c = app.add_subcommand("solve", "fixed-point solitary-wave solve on a periodic grid");
    auto gamma = std::make_shared<double>(1.0 / 1680.0);
    auto c2 = std::make_shared<double>(1.0);
    auto speed = std::make_shared<double>(12.0 / 35.0);
    auto q = std::make_shared<int>(2);
    auto a = std::make_shared<double>(0.5);
    auto N = std::make_shared<int>(1024);
    auto L = std::make_shared<double>(20.0);
    auto tol = std::make_shared<double>(1e-12);
    auto init = std::make_shared<std::string>("sech2");
    auto albert = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    c->add_option("--gamma", *gamma, "fourth-power symbol coefficient")->capture_default_str();
    c->add_option("--c2", *c2, "second-power symbol coefficient")->capture_default_str();
    c->add_option("--speed", *speed, "wave speed")->capture_default_str();
    c->add_option("--q", *q, "nonlinearity power")->capture_default_str();
    c->add_option("--a", *a, "nonlinearity coefficient")->capture_default_str();
    c->add_option("--N", *N, "grid points")->capture_default_str();
    c->add_option("--L", *L, "half-length")->capture_default_str();
    c->add_option("--tol", *tol, "tolerance on |m-1|")->capture_default_str();
    c->add_option("--init", *init, "sech2 | gauss")->capture_default_str();
    c->add_flag("--albert", *albert, "preset: the explicit sech^4 benchmark equation");
    c->add_option("--out", *out, "output base path (writes .csv/.report.json)");
    c->callback([&rc, gamma, c2, speed, q, a, N, L, tol, init, albert, out] {
      rc = cmd_solve(*gamma, *c2, *speed, *q, *a, *N, *L, *tol, *init, *albert, *out);
    });
  }

  // spectrum
  {
    auto* c = app.add_subcommand("spectrum", "linearized-operator spectrum report (JSON)");
    auto equation = std::make_shared<std::string>("kawahara");
    auto speed = std::make_shared<double>(1.0);
    auto source = std::make_shared<std::string>("paper");
    auto N = std::make_shared<int>(512);
    auto L = std::make_shared<double>(25.0);
    auto albert = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "benchmark | kawahara | mkawahara")
        ->capture_default_str();
    c->add_option("--speed,--omega", *speed, "wave speed")->capture_default_str();
    c->add_option("--source,--convention", *source, "paper | derived")->capture_default_str();
    c->add_option("--N", *N, "grid points")->capture_default_str();
    c->add_option("--L", *L, "half-length")->capture_default_str();
    c->add_flag("--albert", *albert, "preset: the explicit sech^4 benchmark wave");
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, speed, source, N, L, albert, out] {
      rc = cmd_spectrum(*equation, *speed, *source, *N, *L, *albert, *out);
    });
  }

  // index
  {
    auto* c = app.add_subcommand("index", "stability index I = <chi, phi> with L chi = phi");
    auto equation = std::make_shared<std::string>("kawahara");
    auto speed = std::make_shared<double>(1.0);
    auto source = std::make_shared<std::string>("paper");
    auto N = std::make_shared<int>(512);
    auto L = std::make_shared<double>(25.0);
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "benchmark | kawahara | mkawahara")
        ->capture_default_str();
    c->add_option("--speed,--omega", *speed, "wave speed")->capture_default_str();
    c->add_option("--source,--convention", *source, "paper | derived")->capture_default_str();
    c->add_option("--N", *N, "grid points")->capture_default_str();
    c->add_option("--L", *L, "half-length")->capture_default_str();
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, speed, source, N, L, out] {
      rc = cmd_index(*equation, *speed, *source, *N, *L, *out);
    });
  }

  // pf2
  {
    auto* c = app.add_subcommand("pf2", "kernel positivity / log-concavity / TP2 sampling");
    auto kernel = std::make_shared<std::string>("sech2");
    auto range = std::make_shared<double>(40.0);
    auto grid_samples = std::make_shared<int>(801);
    auto draws = std::make_shared<int>(100000);
    auto seed = std::make_shared<std::uint64_t>(42);
    auto emit_kernel = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--kernel", *kernel, "sech2 | sech4 | gaussian | bimodal | <file.csv>")
        ->capture_default_str();
    c->add_option("--range", *range, "sample |k| <= range")->capture_default_str();
    c->add_option("--grid-samples", *grid_samples, "kernel sample count")->capture_default_str();
    c->add_option("--draws", *draws, "TP2 Monte-Carlo draws")->capture_default_str();
    c->add_option("--seed", *seed, "PRNG seed")->capture_default_str();
    c->add_option("--emit-kernel", *emit_kernel, "also write the sampled kernel CSV here");
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, kernel, range, grid_samples, draws, seed, emit_kernel, out] {
      rc = cmd_pf2(*kernel, *range, *grid_samples, *draws, *seed, *emit_kernel, *out);
    });
  }

  // evolve
  {
    auto* c = app.add_subcommand("evolve", "time-integrate and emit diagnostics CSV");
    auto equation = std::make_shared<std::string>("benchmark");
    auto speed = std::make_shared<double>(1.0);
    auto source = std::make_shared<std::string>("derived");
    auto N = std::make_shared<int>(1024);
    auto L = std::make_shared<double>(25.0);
    auto T = std::make_shared<double>(10.0);
    auto dt = std::make_shared<double>(1e-3);
    auto sample_every = std::make_shared<int>(100);
    auto init = std::make_shared<std::string>("wave");
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation,
                  "benchmark | kawahara | mkawahara | kdv | mkdv | linear")
        ->capture_default_str();
    c->add_option("--speed,--omega", *speed, "wave speed (wave presets)")->capture_default_str();
    c->add_option("--source,--convention", *source, "paper | derived")->capture_default_str();
    c->add_option("--N", *N, "grid points")->capture_default_str();
    c->add_option("--L", *L, "half-length")->capture_default_str();
    c->add_option("--T", *T, "final time")->capture_default_str();
    c->add_option("--dt", *dt, "time step")->capture_default_str();
    c->add_option("--sample-every", *sample_every, "diagnostics cadence in steps")
        ->capture_default_str();
    c->add_option("--init", *init, "wave | gauss")->capture_default_str();
    c->add_option("--out", *out, "output path (default stdout)");
    c->callback([&rc, equation, speed, source, N, L, T, dt, sample_every, init, out] {
      rc = cmd_evolve(*equation, *speed, *source, *N, *L, *T, *dt, *sample_every, *init, *out);
    });
  }

  // experiment
  {
    auto* c = app.add_subcommand("experiment",
                                 "perturb a wave and track the orbital distance over time");
    auto equation = std::make_shared<std::string>("benchmark");
    auto speed = std::make_shared<double>(1.0);
    auto source = std::make_shared<std::string>("derived");
    auto perturbation = std::make_shared<std::string>("scale");
    auto eps = std::make_shared<double>(0.01);
    auto seed = std::make_shared<std::uint64_t>(42);
    auto N = std::make_shared<int>(512);
    auto L = std::make_shared<double>(25.0);
    auto T = std::make_shared<double>(50.0);
    auto dt = std::make_shared<double>(1e-3);
    auto sample_every = std::make_shared<int>(500);
    auto out = std::make_shared<std::string>();
    c->add_option("--equation", *equation, "benchmark | kawahara | mkawahara")
        ->capture_default_str();
    c->add_option("--speed,--omega", *speed, "wave speed")->capture_default_str();
    c->add_option("--source,--convention", *source, "paper | derived")->capture_default_str();
    c->add_option("--perturbation", *perturbation, "scale | random")->capture_default_str();
    c->add_option("--eps", *eps, "perturbation size")->capture_default_str();
    c->add_option("--seed", *seed, "PRNG seed")->capture_default_str();
    c->add_option("--N", *N, "grid points")->capture_default_str();
    c->add_option("--L", *L, "half-length")->capture_default_str();
    c->add_option("--T", *T, "final time")->capture_default_str();
    c->add_option("--dt", *dt, "time step")->capture_default_str();
    c->add_option("--sample-every", *sample_every, "diagnostics cadence in steps")
        ->capture_default_str();
    c->add_option("--out", *out, "output base path (writes .csv/.summary.json)");
    c->callback([&rc, equation, speed, source, perturbation, eps, seed, N, L, T, dt,
                 sample_every, out] {
      rc = cmd_experiment(*equation, *speed, *source, *perturbation, *eps, *seed, *N, *L, *T,
                          *dt, *sample_every, *out);
    });
  }

  // verify
  {
    auto* c = app.add_subcommand("verify", "run the full acceptance suite (PASS/FAIL table)");
    auto only = std::make_shared<int>(0);
    c->add_option("--only", *only, "run a single criterion 1..10 (0 = all)")
        ->capture_default_str();
    c->callback([&rc, only] { rc = cmd_verify(*only); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
