// Command-line front end: one-round map evaluation, hybrid planning, figure
// sweeps, Monte Carlo studies and the verification suite.
//
// Exit codes: 0 success, 2 parameter validation, 3 not distillable, 4 I/O.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msd/bloch.hpp"
#include "msd/errors.hpp"
#include "msd/io.hpp"
#include "msd/maps.hpp"
#include "msd/montecarlo.hpp"
#include "msd/planner.hpp"
#include "msd/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_not_distillable = 3;
constexpr int exit_io = 4;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  msd::write_file_atomic(out_path, content);
}

std::vector<msd::real> linspace(msd::real lo, msd::real hi, int count) {
  std::vector<msd::real> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<msd::real>(i) / (count - 1);
  return v;
}

struct CommonOpts {
  int precision = 6;
  std::string out;
  std::string format = "csv";
};

int cmd_map(const std::string& protocol, msd::real p, const CommonOpts& opts) {
  const msd::StepResult r = msd::protocol_map(msd::protocol_from_name(protocol), p);
  const msd::real nu = msd::efficiency(r.protocol, p).nu;
  if (opts.format == "json") {
    emit(msd::step_json(r, nu, opts.precision), opts.out);
    return exit_ok;
  }
  std::ostringstream out;
  out << "protocol,p_in,p_out,theta,n,nu\n"
      << msd::protocol_name(r.protocol) << ',' << msd::format_real(r.p_in, opts.precision) << ','
      << msd::format_real(r.p_out, opts.precision) << ',' << msd::format_real(r.theta, opts.precision)
      << ',' << r.n << ',' << msd::format_real(nu, opts.precision) << '\n';
  emit(out.str(), opts.out);
  return exit_ok;
}

int cmd_plan(const msd::vec3& input, msd::real target, const CommonOpts& opts) {
  const msd::PlanTrace trace = msd::plan_hybrid(input, target);
  if (opts.format == "json") {
    emit(msd::plan_json(trace, opts.precision), opts.out);
    return exit_ok;
  }
  std::ostringstream out;
  out << msd::plan_csv(trace, opts.precision);
  const msd::QubitCost per_step = msd::qubit_cost(trace, msd::CostMode::PerStep);
  const msd::QubitCost average = msd::qubit_cost(trace, msd::CostMode::Average);
  out << "# n4=" << trace.n4 << " n5=" << trace.n5 << " final_p="
      << msd::format_real(trace.final_polarization, opts.precision)
      << " log10_cost_per_step=" << msd::format_real(per_step.log10_cost, opts.precision)
      << " log10_cost_average=" << msd::format_real(average.log10_cost, opts.precision) << '\n';
  emit(out.str(), opts.out);
  return exit_ok;
}

int cmd_sweep(const std::string& kind, int grid, msd::real target, int workers, const CommonOpts& opts) {
  std::ostringstream out;
  if (kind == "efficiency") {
    out << "p_h,p_t,nu_h4_to_t,nu_t5,nu_h7\n";
    for (msd::real p : linspace(0.60, 0.999, grid)) {
      out << msd::format_real(p, opts.precision) << ','
          << msd::format_real(msd::dt_loss_factor * p, opts.precision) << ','
          << msd::format_real(msd::efficiency_h4_toward_t(p), opts.precision) << ','
          << msd::format_real(msd::efficiency_t5_at_haxis(p), opts.precision) << ','
          << msd::format_real(msd::efficiency(msd::Protocol::H7, p).nu, opts.precision) << '\n';
    }
  } else if (kind == "iterations") {
    out << "p_h,n7,hybrid_n4,hybrid_n5,hybrid_total\n";
    for (msd::real p : linspace(0.71, 0.99, grid)) {
      const auto n7 = msd::iterations_to_target(p, msd::Protocol::H7, target);
      const msd::PlanTrace trace = msd::plan_hybrid(msd::state_on_axis(msd::canonical_h_axis(), p), target);
      out << msd::format_real(p, opts.precision) << ',' << (n7 ? std::to_string(*n7) : "unreachable")
          << ',' << trace.n4 << ',' << trace.n5 << ',' << trace.n4 + trace.n5 << '\n';
    }
  } else if (kind == "turning-point") {
    out << "p0,optimal_switch,n4,n5,log10_cost,t5_only\n";
    for (msd::real p : linspace(0.71, 0.90, grid)) {
      const msd::TurningPointResult r = msd::optimal_turning_point(p, target);
      out << msd::format_real(p, opts.precision) << ',' << msd::format_real(r.p_star, opts.precision)
          << ',' << r.n4 << ',' << r.n5 << ',' << msd::format_real(r.log10_cost, opts.precision) << ','
          << (r.t5_only ? 1 : 0) << '\n';
    }
  } else if (kind == "regions") {
    const msd::RegionStats s = msd::region_statistics(grid, workers);
    out << "stat,fraction\n";
    out << "five_qubit_less_efficient," << msd::format_real(s.five_qubit_less_efficient, opts.precision)
        << '\n';
    out << "seven_qubit_cheaper," << msd::format_real(s.seven_qubit_cheaper, opts.precision) << '\n';
    out << "case4_direct_t5_better," << msd::format_real(s.case4_direct_t5_better, opts.precision) << '\n';
  } else {
    throw std::invalid_argument("unknown sweep kind '" + kind + "'");
  }
  emit(out.str(), opts.out);
  return exit_ok;
}

int cmd_verify(int region_resolution, int workers) {
  msd::VerifyOptions options;
  options.region_resolution = region_resolution;
  options.workers = workers;
  const auto results = msd::run_all_checks(options);
  std::cout << msd::render_report(results);
  return msd::count_failures(results) == 0 ? exit_ok : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magic-state distillation maps, hybrid planning and Monte Carlo studies"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--precision", opts.precision, "significant digits in numeric output")
      ->capture_default_str();

  // map
  auto* map_cmd = app.add_subcommand("map", "evaluate one distillation round");
  std::string protocol = "h4";
  msd::real p = 0.0;
  map_cmd->add_option("--protocol", protocol, "h4, t5 or h7")->required();
  map_cmd->add_option("--p", p, "input polarization along the protocol axis")->required();
  map_cmd->add_option("--out", opts.out, "output file (default stdout)");
  map_cmd->add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "hybrid schedule for one input state");
  std::optional<msd::real> px, py, pz, pax;
  std::string axis = "h";
  msd::real target = 0.999;
  plan_cmd->add_option("--x", px, "Bloch x");
  plan_cmd->add_option("--y", py, "Bloch y");
  plan_cmd->add_option("--z", pz, "Bloch z");
  plan_cmd->add_option("--axis", axis, "h or t (with --p)");
  plan_cmd->add_option("--p", pax, "polarization along --axis");
  plan_cmd->add_option("--target", target, "target T-polarization")->capture_default_str();
  plan_cmd->add_option("--out", opts.out, "output file (default stdout)");
  plan_cmd->add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "regenerate figure data as CSV");
  std::string kind = "efficiency";
  int grid = 200;
  int workers = 0;
  sweep_cmd->add_option("--kind", kind, "efficiency, iterations, turning-point or regions")->required();
  sweep_cmd->add_option("--grid", grid, "points per sweep / cells per axis")->capture_default_str();
  sweep_cmd->add_option("--target", target, "target polarization")->capture_default_str();
  sweep_cmd->add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", opts.out, "output file (default stdout)");

  // montecarlo
  auto* mc_cmd = app.add_subcommand("montecarlo", "robustness, gaussian and experiment studies");
  std::string mc_kind = "robustness";
  std::uint64_t seed = 12345;
  int samples = 100;
  msd::real centers_min = 0.68, centers_max = 0.99;
  int centers_count = 16;
  msd::real delta_min = 0.0, delta_max = 0.3;
  int delta_count = 16;
  msd::real mean = 0.848, sigma = 0.02;
  int bins = 60;
  mc_cmd->add_option("--kind", mc_kind, "robustness, gaussian or experiment")->required();
  mc_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  mc_cmd->add_option("--samples", samples, "samples per grid cell")->capture_default_str();
  mc_cmd->add_option("--centers-min", centers_min)->capture_default_str();
  mc_cmd->add_option("--centers-max", centers_max)->capture_default_str();
  mc_cmd->add_option("--centers-count", centers_count)->capture_default_str();
  mc_cmd->add_option("--delta-min", delta_min)->capture_default_str();
  mc_cmd->add_option("--delta-max", delta_max)->capture_default_str();
  mc_cmd->add_option("--delta-count", delta_count)->capture_default_str();
  mc_cmd->add_option("--mean", mean, "gaussian input mean")->capture_default_str();
  mc_cmd->add_option("--sigma", sigma, "gaussian input sigma")->capture_default_str();
  mc_cmd->add_option("--bins", bins, "histogram bins")->capture_default_str();
  mc_cmd->add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();
  mc_cmd->add_option("--out", opts.out, "output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  int region_resolution = 400;
  verify_cmd->add_option("--region-resolution", region_resolution)->capture_default_str();
  verify_cmd->add_option("--workers", workers)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return exit_validation;
  }

  try {
    if (map_cmd->parsed()) return cmd_map(protocol, p, opts);
    if (plan_cmd->parsed()) {
      msd::vec3 input;
      if (px && py && pz) {
        input = msd::vec3(*px, *py, *pz);
        if (!msd::is_physical(input)) throw std::invalid_argument("(x, y, z) lies outside the Bloch ball");
      } else if (pax) {
        const msd::MagicAxis a = axis == "t" ? msd::canonical_t_axis() : msd::canonical_h_axis();
        input = msd::state_on_axis(a, *pax);
      } else {
        throw std::invalid_argument("plan needs either --x/--y/--z or --axis/--p");
      }
      return cmd_plan(input, target, opts);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(kind, grid, target, workers, opts);
    if (mc_cmd->parsed()) {
      if (mc_kind == "robustness") {
        const auto points = msd::robustness_surface(linspace(centers_min, centers_max, centers_count),
                                                    linspace(delta_min, delta_max, delta_count), samples,
                                                    seed, workers);
        emit(msd::robustness_csv(points, opts.precision), opts.out);
      } else if (mc_kind == "gaussian") {
        const auto report = msd::gaussian_propagation(mean, sigma, samples, seed, bins, workers);
        emit(msd::gaussian_csv(report, opts.precision), opts.out);
      } else if (mc_kind == "experiment") {
        emit(msd::experiment_csv(msd::experiment_replication(), opts.precision), opts.out);
      } else {
        throw std::invalid_argument("unknown montecarlo kind '" + mc_kind + "'");
      }
      return exit_ok;
    }
    if (verify_cmd->parsed()) return cmd_verify(region_resolution, workers);
  } catch (const msd::NotDistillable& e) {
    std::cerr << "not distillable: " << e.what() << '\n';
    return exit_not_distillable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return exit_validation;
  } catch (const msd::UnreachableTarget& e) {
    std::cerr << "unreachable target: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
  return exit_ok;
}
