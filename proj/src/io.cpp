#include "fracpoisson/io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace fracpoisson {

namespace {

using nlohmann::ordered_json;

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json result_json(const TestResult& r, std::uint64_t seed) {
  return ordered_json{{"name", r.name},       {"statistic", number(r.statistic)}, {"p", number(r.p_value)},
                      {"n", r.n},             {"dof", r.dof},                     {"level", r.level},
                      {"pass", r.pass},       {"seed", seed}};
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_subordinator_csv(std::ostream& os, const SubordinatorPath& path) {
  os << "t,L\n";
  for (std::size_t i = 0; i < path.values.size(); ++i) {
    os << format_double(path.delta * static_cast<double>(i)) << ',' << format_double(path.values[i]) << '\n';
  }
}

void write_inverse_csv(std::ostream& os, const InversePath& path) {
  os << "s,Y\n";
  const auto& jumps = path.jump_times();
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    os << format_double(jumps[i]) << ',' << format_double(path.delta() * static_cast<double>(i)) << '\n';
  }
}

void write_events_csv(std::ostream& os, const EventTimes& events) {
  os << "t\n";
  for (double t : events.times) os << format_double(t) << '\n';
}

void write_pmf_csv(std::ostream& os, const Pmf& pmf) {
  const bool se = !pmf.std_errors.empty();
  os << (se ? "k,p,se\n" : "k,p\n");
  for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
    os << k << ',' << format_double(pmf.probs[k]);
    if (se) os << ',' << format_double(pmf.std_errors[k]);
    os << '\n';
  }
}

void write_points_csv(std::ostream& os, const PlanarPoints& points) {
  os << "x,y\n";
  for (const auto& p : points.points) os << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

void write_trace_csv(std::ostream& os, const std::vector<TraceSample>& trace) {
  os << "t,count\n";
  for (const auto& s : trace) os << format_double(s.t) << ',' << s.count << '\n';
}

void write_counts_csv(std::ostream& os, const std::vector<double>& t, const std::vector<std::uint64_t>& counts) {
  os << "t,count\n";
  for (std::size_t i = 0; i < t.size() && i < counts.size(); ++i) os << format_double(t[i]) << ',' << counts[i] << '\n';
}

std::string to_json(const MomentReport& r) {
  ordered_json j{{"t", r.t}, {"s", r.s}, {"mean", number(r.mean)}, {"variance", number(r.variance)},
                 {"covariance", number(r.covariance)}};
  if (r.mean_se) j["mean_se"] = number(*r.mean_se);
  if (r.variance_se) j["variance_se"] = number(*r.variance_se);
  if (r.covariance_se) j["covariance_se"] = number(*r.covariance_se);
  if (r.n) j["n"] = *r.n;
  return j.dump(2);
}

std::string to_json(const ResidualReport& r) {
  ordered_json j{{"equation", r.equation},
                 {"max_residual", number(r.max_residual)},
                 {"grid", {{"step", r.step}, {"t_from", r.t_from}, {"t_to", r.t_to}}},
                 {"params", {{"k_max", r.k_max}}},
                 {"error_model", {{"order", r.order}, {"fitted_constant", number(r.fitted_constant)}}},
                 {"max_z", number(r.max_z)},
                 {"pass", r.pass}};
  return j.dump(2);
}

std::string to_json(const TestResult& r, std::uint64_t seed) { return result_json(r, seed).dump(2); }

std::string to_json(const std::vector<TestResult>& results, std::uint64_t seed) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) arr.push_back(result_json(r, seed));
  return ordered_json{{"results", arr}}.dump(2);
}

}  // namespace fracpoisson
