#include "msd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "msd/maps.hpp"

namespace msd {

namespace {
using nlohmann::json;

double rounded(real v, int precision) {
  // Round through the textual form so JSON output honors --precision.
  return std::stod(format_real(v, precision));
}
}  // namespace

std::string format_real(real value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string());
}

std::string robustness_csv(const std::vector<RobustnessPoint>& points, int precision) {
  std::ostringstream out;
  out << "center,delta,mean_gain,std_gain,samples\n";
  for (const auto& p : points)
    out << format_real(p.center, precision) << ',' << format_real(p.delta, precision) << ','
        << format_real(p.mean_gain, precision) << ',' << format_real(p.std_gain, precision) << ','
        << p.samples << '\n';
  return out.str();
}

std::string gaussian_csv(const DistributionReport& r, int precision) {
  std::ostringstream out;
  out << "input_mean,input_sigma,samples,output_mean,output_sigma\n";
  out << format_real(r.input_mean, precision) << ',' << format_real(r.input_sigma, precision) << ','
      << r.samples << ',' << format_real(r.output_mean, precision) << ','
      << format_real(r.output_sigma, precision) << '\n';
  out << "bin_lo,bin_hi,mass\n";
  for (std::size_t b = 0; b < r.histogram.size(); ++b)
    out << format_real(r.bin_lo + b * r.bin_width, precision) << ','
        << format_real(r.bin_lo + (b + 1) * r.bin_width, precision) << ','
        << format_real(r.histogram[b], precision) << '\n';
  return out.str();
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows, int precision) {
  std::ostringstream out;
  out << "p_in,theory_p_out,theory_theta0,measured_p_out,relative_deviation\n";
  for (const auto& r : rows)
    out << format_real(r.p_in, precision) << ',' << format_real(r.theory_p_out, precision) << ','
        << format_real(r.theory_theta0, precision) << ',' << format_real(r.measured_p_out, precision)
        << ',' << format_real(r.relative_deviation, precision) << '\n';
  return out.str();
}

std::string plan_csv(const PlanTrace& trace, int precision) {
  std::ostringstream out;
  out << "step,kind,p_in,p_out,theta,n,cum_log10_cost\n";
  real cum = 0.0;
  int idx = 0;
  for (const PlanStep& s : trace.steps) {
    if (s.n > 0) cum += std::log10(static_cast<real>(s.n) / s.theta);
    out << ++idx << ',' << step_kind_name(s.kind) << ',' << format_real(s.p_in, precision) << ','
        << format_real(s.p_out, precision) << ',' << format_real(s.theta, precision) << ',' << s.n << ','
        << format_real(cum, precision) << '\n';
  }
  return out.str();
}

std::string plan_json(const PlanTrace& trace, int precision) {
  json steps = json::array();
  real cum = 0.0;
  for (const PlanStep& s : trace.steps) {
    if (s.n > 0) cum += std::log10(static_cast<real>(s.n) / s.theta);
    steps.push_back({{"kind", step_kind_name(s.kind)},
                     {"p_in", rounded(s.p_in, precision)},
                     {"p_out", rounded(s.p_out, precision)},
                     {"theta", rounded(s.theta, precision)},
                     {"n", s.n},
                     {"cum_log10_cost", rounded(cum, precision)}});
  }
  const QubitCost per_step = qubit_cost(trace, CostMode::PerStep);
  const QubitCost average = qubit_cost(trace, CostMode::Average);
  json j{{"input", {trace.input.x(), trace.input.y(), trace.input.z()}},
         {"target", trace.target},
         {"steps", steps},
         {"n4", trace.n4},
         {"n5", trace.n5},
         {"n7", trace.n7},
         {"final_polarization", rounded(trace.final_polarization, precision)},
         {"log10_cost_per_step", rounded(per_step.log10_cost, precision)},
         {"log10_cost_average", rounded(average.log10_cost, precision)}};
  return j.dump(2) + "\n";
}

std::string step_json(const StepResult& r, real nu, int precision) {
  json j{{"protocol", protocol_name(r.protocol)}, {"p_in", rounded(r.p_in, precision)},
         {"p_out", rounded(r.p_out, precision)}, {"theta", rounded(r.theta, precision)},
         {"n", r.n},                             {"nu", rounded(nu, precision)}};
  return j.dump(2) + "\n";
}

}  // namespace msd
