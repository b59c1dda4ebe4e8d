#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fracpoisson/fields.hpp"
#include "fracpoisson/fraccalc.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/stats.hpp"
#include "fracpoisson/subordinate.hpp"

namespace fracpoisson {

/// Shortest round-trip decimal form ("%.17g").
std::string format_double(double x);

void write_subordinator_csv(std::ostream& os, const SubordinatorPath& path);
/// Jump points (s_n, n * delta) of an inverse path.
void write_inverse_csv(std::ostream& os, const InversePath& path);
void write_events_csv(std::ostream& os, const EventTimes& events);
void write_pmf_csv(std::ostream& os, const Pmf& pmf);
void write_points_csv(std::ostream& os, const PlanarPoints& points);
void write_trace_csv(std::ostream& os, const std::vector<TraceSample>& trace);
void write_counts_csv(std::ostream& os, const std::vector<double>& t, const std::vector<std::uint64_t>& counts);

std::string to_json(const MomentReport& report);
std::string to_json(const ResidualReport& report);
std::string to_json(const TestResult& result, std::uint64_t seed);
std::string to_json(const std::vector<TestResult>& results, std::uint64_t seed);

}  // namespace fracpoisson
