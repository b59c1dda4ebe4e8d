#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracpoisson/errors.hpp"
#include "fracpoisson/fields.hpp"
#include "fracpoisson/io.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/subordinate.hpp"
#include "fracpoisson/validation.hpp"

namespace fp = fracpoisson;

namespace {

constexpr int kUsageError = 1;
constexpr int kValidationFailure = 2;

struct Config {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string out;

  double alpha = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 1.0;
  double gamma = 1.0;
  double c1 = 0.0;
  std::optional<double> c2;
  double lambda = 1.0;
  double window = 1.0;
  double delta = fp::kDefaultDelta;
  double t_end = 1.0;
  double t = 1.0;
  double s = 1.0;
  double t1 = 1.0;
  double t2 = 1.0;
  double s1 = 1.0;
  double s2 = 1.0;
  double t_max = 1.0;
  double rate = 1.0;
  int k_max = 20;
  std::size_t n_mc = 1500;
  std::size_t n_eval = 101;
  std::size_t grid = 1000;
  std::vector<double> z;
  std::string process = "fpp";
  std::string method;
  std::string law = "poisson";
  std::string suite = "all";
  double scale = 1.0;
};

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("FRACPOISSON_OUT_DIR")) return std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes to --out when given, otherwise to stdout.
void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path(c.out), std::ios::binary);
  if (!f) throw fp::DomainError("cannot open output file " + c.out);
  f << text;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw fp::DomainError("cannot open output file " + p.string());
  f << text;
}

fp::MixedParams mixed(const Config& c) {
  const double c2 = c.c2.value_or(1.0 - c.c1);
  return fp::MixedParams(fp::Alpha(c.alpha1), fp::Alpha(c.alpha2), c.c1, c2);
}

bool is_mixed(const Config& c) { return c.alpha1 > 0.0 || c.alpha2 > 0.0; }

fp::SubordinatorParams subordinator(const Config& c) {
  if (is_mixed(c)) return mixed(c);
  return fp::Alpha(c.alpha);
}

std::string pmf_text(const Config& c, const fp::Pmf& pmf) {
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::ordered_json j{{"probs", pmf.probs}, {"tail_mass", pmf.tail_mass}};
    if (!pmf.std_errors.empty()) j["std_errors"] = pmf.std_errors;
    if (!pmf.fallback_k.empty()) j["fallback_k"] = pmf.fallback_k;
    os << j.dump(2) << '\n';
  } else {
    fp::write_pmf_csv(os, pmf);
  }
  return os.str();
}

int run_ml(const Config& c) {
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (double z : c.z) arr.push_back({{"z", z}, {"value", fp::mittag_leffler3(c.alpha, c.beta, c.gamma, z)}});
    os << nlohmann::ordered_json{{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}, {"values", arr}}.dump(2)
       << '\n';
  } else {
    os << "z,E\n";
    for (double z : c.z) {
      os << fp::format_double(z) << ',' << fp::format_double(fp::mittag_leffler3(c.alpha, c.beta, c.gamma, z)) << '\n';
    }
  }
  emit(c, os.str());
  return 0;
}

int run_subordinator(const Config& c, bool inverse) {
  fp::RandomSource rng(c.seed, 0);
  const auto path = fp::simulate_subordinator(subordinator(c), c.delta, c.t_end, rng);
  std::ostringstream os;
  if (inverse) {
    fp::write_inverse_csv(os, fp::invert_path(path));
  } else {
    fp::write_subordinator_csv(os, path);
  }
  emit(c, os.str());
  return 0;
}

int run_fpp(const Config& c) {
  fp::RandomSource rng(c.seed, 0);
  const std::string method = c.method.empty() ? "renewal" : c.method;
  fp::EventTimes ev;
  if (method == "renewal") {
    ev = fp::simulate_fpp_renewal(fp::Alpha(c.alpha), c.lambda, c.t_end, rng);
  } else if (method == "timechange") {
    ev = fp::simulate_fpp_timechange(fp::Alpha(c.alpha), c.lambda, c.t_end, rng, c.delta).events;
  } else {
    throw fp::DomainError("--method must be renewal or timechange");
  }
  std::ostringstream os;
  fp::write_events_csv(os, ev);
  emit(c, os.str());
  return 0;
}

int run_mfpp(const Config& c) {
  fp::RandomSource rng(c.seed, 0);
  const auto ev = fp::simulate_mfpp(mixed(c), c.lambda, c.t_end, rng, c.delta);
  std::ostringstream os;
  fp::write_events_csv(os, ev.events);
  emit(c, os.str());
  return 0;
}

fp::CellLaw cell_law(const Config& c) {
  if (c.law == "poisson") return fp::CellLaw::poisson;
  if (c.law == "bernoulli") return fp::CellLaw::bernoulli;
  throw fp::DomainError("--law must be poisson or bernoulli");
}

int run_fprf(const Config& c) {
  fp::RandomSource rng(c.seed, 0);
  const auto f = fp::simulate_fprf(fp::Alpha(c.alpha1), fp::Alpha(c.alpha2), c.lambda, c.window, c.delta,
                                   cell_law(c), rng);
  std::ostringstream pts;
  fp::write_points_csv(pts, f.field);
  emit(c, pts.str());
  if (!c.out.empty()) {
    const auto base = output_path(c.out);
    auto stem = base;
    stem.replace_extension();
    std::ostringstream p1, p2;
    fp::write_inverse_csv(p1, f.path1);
    fp::write_inverse_csv(p2, f.path2);
    write_file(stem.string() + "_path1.csv", p1.str());
    write_file(stem.string() + "_path2.csv", p2.str());
  }
  return 0;
}

int run_pmf(const Config& c) {
  fp::Pmf pmf;
  if (c.process == "fpp") {
    pmf = fp::fpp_pmf(fp::Alpha(c.alpha), c.lambda, c.t, c.k_max);
  } else if (c.process == "mfpp") {
    fp::MfppMethod m = fp::MfppMethod::laplace;
    if (c.method == "convolution") {
      m = fp::MfppMethod::convolution;
    } else if (c.method == "montecarlo") {
      m = fp::MfppMethod::montecarlo;
    } else if (!c.method.empty() && c.method != "laplace" && c.method != "series") {
      throw fp::DomainError("--method must be laplace, series, convolution or montecarlo");
    }
    fp::MfppPmfOptions o;
    o.grid_intervals = c.grid;
    o.n_mc = c.n_mc;
    o.seed = c.seed;
    o.delta = c.delta;
    o.jobs = c.jobs;
    pmf = fp::mfpp_pmf(mixed(c), c.lambda, c.t, c.k_max, m, o);
  } else if (c.process == "fprf") {
    fp::RandomSource rng(c.seed, 0);
    pmf = fp::fprf_pmf_mc(fp::Alpha(c.alpha1), fp::Alpha(c.alpha2), c.lambda, c.t1, c.t2, c.k_max, c.n_mc, rng);
  } else {
    throw fp::DomainError("--process must be fpp, mfpp or fprf");
  }
  emit(c, pmf_text(c, pmf));
  return 0;
}

int run_moments(const Config& c) {
  fp::MomentReport r;
  if (c.process == "fpp") {
    r = fp::fpp_moments(fp::Alpha(c.alpha), c.lambda, c.t, c.s);
  } else if (c.process == "mfpp") {
    r = fp::mfpp_moments(mixed(c), c.lambda, c.t, c.s);
  } else if (c.process == "fprf") {
    r = fp::fprf_moments(fp::Alpha(c.alpha1), fp::Alpha(c.alpha2), c.lambda, {c.t1, c.t2}, {c.s1, c.s2});
  } else {
    throw fp::DomainError("--process must be fpp, mfpp or fprf");
  }
  std::ostringstream os;
  if (c.format == "json") {
    os << fp::to_json(r) << '\n';
  } else {
    os << "t,s,mean,variance,covariance\n"
       << fp::format_double(r.t) << ',' << fp::format_double(r.s) << ',' << fp::format_double(r.mean) << ','
       << fp::format_double(r.variance) << ',' << fp::format_double(r.covariance) << '\n';
  }
  emit(c, os.str());
  return 0;
}

int run_trace(const Config& c) {
  fp::RandomSource rng(c.seed, 0);
  const auto f = fp::simulate_fprf(fp::Alpha(c.alpha1), fp::Alpha(c.alpha2), c.lambda, c.window, c.delta,
                                   cell_law(c), rng);
  const auto path = fp::IncreasingPath::diagonal(c.t_max);
  std::ostringstream os;
  fp::write_trace_csv(os, fp::trace_along_path(f, path, c.n_eval));
  emit(c, os.str());
  return 0;
}

int run_records(const Config& c) {
  if (!(c.rate >= 0.0)) throw fp::DomainError("--rate must be >= 0");
  if (c.n_eval < 2) throw fp::DomainError("--n-eval must be >= 2");
  fp::RandomSource rng(c.seed, 0);
  std::vector<double> grid(c.n_eval);
  for (std::size_t i = 0; i < c.n_eval; ++i) grid[i] = c.t_max * static_cast<double>(i) / static_cast<double>(c.n_eval - 1);
  const double rate = c.rate;
  const auto counts = fp::gergely_yezhov_counts([rate](double t) { return rate * t; }, grid, rng);
  std::ostringstream os;
  fp::write_counts_csv(os, grid, counts);
  emit(c, os.str());
  return 0;
}

std::vector<int> suite_ids(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= fp::kCriterionCount; ++i) ids.push_back(i);
    return ids;
  }
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      ids.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw fp::DomainError("--suite must be 'all' or a comma-separated list of criterion numbers");
    }
  }
  return ids;
}

int run_validate(const Config& c) {
  fp::ValidationOptions o;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.scale = c.scale;
  const auto results = fp::run_validation(suite_ids(c.suite), o);
  bool all = true;
  std::vector<fp::TestResult> summary;
  for (const auto& r : results) {
    all = all && r.pass;
    summary.push_back({std::to_string(r.id) + " " + r.title, 0.0, r.pass ? 1.0 : 0.0, r.checks.size(), 0, 0.01,
                       r.pass});
    for (const auto& t : r.tests) summary.push_back(t);
  }
  std::ostringstream os;
  if (c.format == "json") {
    os << fp::to_json(summary, c.seed) << '\n';
  } else {
    os << "criterion,title,pass,checks\n";
    for (const auto& r : results) {
      os << r.id << ',' << r.title << ',' << (r.pass ? "true" : "false") << ',' << r.checks.size() << '\n';
    }
  }
  emit(c, os.str());
  // Per-check detail on stderr.
  for (const auto& r : results) std::cerr << fp::serialize(r);
  return all ? 0 : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Poisson processes and fields"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool stochastic) {
    auto* seed = sub->add_option("--seed", c.seed, "Random seed");
    if (stochastic) seed->required();
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "Output file (default stdout)");
  };
  auto alphas = [&](CLI::App* sub) {
    sub->add_option("--alpha1", c.alpha1, "alpha1 in (0, 1]");
    sub->add_option("--alpha2", c.alpha2, "alpha2 in (0, 1]");
  };
  auto mixed_opts = [&](CLI::App* sub) {
    alphas(sub);
    sub->add_option("--c1", c.c1, "C1 >= 0 (C1 + C2 must equal 1)");
    sub->add_option("--c2", c.c2, "C2 > 0 (default 1 - C1)");
  };

  auto* ml = app.add_subcommand("ml-eval", "Evaluate E^gamma_{alpha,beta}(z)");
  common(ml, false);
  ml->add_option("--alpha", c.alpha, "alpha > 0")->required();
  ml->add_option("--beta", c.beta, "beta > 0");
  ml->add_option("--gamma", c.gamma, "gamma > 0");
  ml->add_option("--z", c.z, "Arguments")->required();

  auto* sub = app.add_subcommand("simulate-subordinator", "Grid path of a stable or mixed subordinator");
  auto* inv = app.add_subcommand("simulate-inverse", "Path of the inverse subordinator");
  for (auto* s : {sub, inv}) {
    common(s, true);
    s->add_option("--alpha", c.alpha, "alpha in (0, 1] (stable case)");
    mixed_opts(s);
    s->add_option("--delta", c.delta, "Grid step");
    s->add_option("--t-end", c.t_end, "Simulate until the path exceeds this level");
  }

  auto* fpp = app.add_subcommand("simulate-fpp", "Event times of a fractional Poisson process");
  common(fpp, true);
  fpp->add_option("--alpha", c.alpha, "alpha in (0, 1]")->required();
  fpp->add_option("--lambda", c.lambda, "Rate lambda > 0");
  fpp->add_option("--t-end", c.t_end, "Horizon");
  fpp->add_option("--delta", c.delta, "Grid step of the time change");
  fpp->add_option("--method", c.method, "renewal or timechange");

  auto* mfpp = app.add_subcommand("simulate-mfpp", "Event times of a mixed fractional Poisson process");
  common(mfpp, true);
  mixed_opts(mfpp);
  mfpp->add_option("--lambda", c.lambda, "Rate lambda > 0");
  mfpp->add_option("--t-end", c.t_end, "Horizon");
  mfpp->add_option("--delta", c.delta, "Grid step");

  auto* fprf = app.add_subcommand("simulate-fprf", "Points of a fractional Poisson random field");
  auto* trace = app.add_subcommand("trace", "Counts of a simulated field along the diagonal path");
  for (auto* s : {fprf, trace}) {
    common(s, true);
    alphas(s);
    s->add_option("--lambda", c.lambda, "Rate lambda > 0");
    s->add_option("--window", c.window, "Window side S");
    s->add_option("--delta", c.delta, "Grid step in (0, 0.01]");
    s->add_option("--law", c.law, "Cell law: poisson or bernoulli");
  }
  trace->add_option("--t-max", c.t_max, "End of the diagonal path (<= window)");
  trace->add_option("--n-eval", c.n_eval, "Evaluation points");

  auto* pmf = app.add_subcommand("pmf", "Marginal distribution");
  common(pmf, false);
  pmf->add_option("--process", c.process, "fpp, mfpp or fprf");
  pmf->add_option("--alpha", c.alpha, "alpha in (0, 1] (fpp)");
  mixed_opts(pmf);
  pmf->add_option("--lambda", c.lambda, "Rate lambda > 0");
  pmf->add_option("--t", c.t, "Time");
  pmf->add_option("--t1", c.t1, "First coordinate (fprf)");
  pmf->add_option("--t2", c.t2, "Second coordinate (fprf)");
  pmf->add_option("--k-max", c.k_max, "Largest k");
  pmf->add_option("--method", c.method, "mfpp: laplace (series), convolution or montecarlo");
  pmf->add_option("--n-mc", c.n_mc, "Monte Carlo sample size");
  pmf->add_option("--grid", c.grid, "Convolution grid intervals");
  pmf->add_option("--delta", c.delta, "Grid step of simulated paths");

  auto* mom = app.add_subcommand("moments", "Mean, variance and covariance");
  common(mom, false);
  mom->add_option("--process", c.process, "fpp, mfpp or fprf");
  mom->add_option("--alpha", c.alpha, "alpha in (0, 1] (fpp)");
  mixed_opts(mom);
  mom->add_option("--lambda", c.lambda, "Rate lambda > 0");
  mom->add_option("--t", c.t, "Time t");
  mom->add_option("--s", c.s, "Time s");
  mom->add_option("--t1", c.t1, "t1 (fprf)");
  mom->add_option("--t2", c.t2, "t2 (fprf)");
  mom->add_option("--s1", c.s1, "s1 (fprf)");
  mom->add_option("--s2", c.s2, "s2 (fprf)");

  auto* rec = app.add_subcommand("records", "Record counts of uniforms for m(t) = rate * t");
  common(rec, true);
  rec->add_option("--rate", c.rate, "Intensity slope");
  rec->add_option("--t-max", c.t_max, "Last time");
  rec->add_option("--n-eval", c.n_eval, "Evaluation points");

  auto* val = app.add_subcommand("validate", "Run the acceptance suite (JSON report unless --format csv)");
  common(val, true);
  val->add_option("--suite", c.suite, "'all' or a comma-separated list of criteria");
  val->add_option("--scale", c.scale, "Multiplier on Monte Carlo sizes")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  if (val->parsed() && val->count("--format") == 0) c.format = "json";

  try {
    if (ml->parsed()) return run_ml(c);
    if (sub->parsed()) return run_subordinator(c, false);
    if (inv->parsed()) return run_subordinator(c, true);
    if (fpp->parsed()) return run_fpp(c);
    if (mfpp->parsed()) return run_mfpp(c);
    if (fprf->parsed()) return run_fprf(c);
    if (pmf->parsed()) return run_pmf(c);
    if (mom->parsed()) return run_moments(c);
    if (trace->parsed()) return run_trace(c);
    if (rec->parsed()) return run_records(c);
    if (val->parsed()) return run_validate(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
