#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "flowcharge/models.hpp"

namespace flowcharge {

// CSV with '.' decimals, no grouping and LF line endings.

/// node,open,poles,utilization for every facility; pole columns stay empty
/// for uncapacitated plans.
void write_stations_csv(const StationPlan& plan, const Instance& instance, std::ostream& out);
/// flow,origin,destination,volume,coverage,stops (stops space separated).
void write_flows_csv(const StationPlan& plan, const Instance& instance, std::ostream& out);
/// model,fvc,tfv,objective,bound,gap,status,nodes,lp_iterations,time
void write_summary_csv(const StationPlan& plan, const Instance& instance, std::ostream& out);

/// Writes stations.csv, flows.csv and summary.csv into `dir`.
void save_plan(const StationPlan& plan, const Instance& instance, const std::filesystem::path& dir);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace flowcharge
