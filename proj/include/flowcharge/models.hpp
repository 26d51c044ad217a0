#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowcharge/milp/model.hpp"
#include "flowcharge/network.hpp"

namespace flowcharge {

enum class ModelKind { kDfrlp, kMinCoverage, kLocationCost, kCapacitated, kCapacitatedMinCoverage };

/// Short names used on the command line and in file names: dfrlp, mc, lc, c, cmc.
const char* to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(const std::string& text);
bool is_capacitated(ModelKind kind);

/// Raised when a solution contradicts the model it claims to solve.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decision variables by index. Facilities follow instance.facilities();
/// flows follow instance.flows(); segment variables follow the flow's
/// SegmentTable entries.
struct VarMap {
  std::vector<NodeId> facilities;
  std::vector<milp::VarId> x;
  std::vector<milp::VarId> y;
  std::vector<SegmentTable> segments;
  std::vector<std::vector<milp::VarId>> i;

  // Capacitated models only. w has no variable for the direct
  // origin-destination segment.
  std::vector<milp::VarId> z;
  std::vector<milp::VarId> n;
  std::vector<std::vector<milp::VarId>> w;

  std::size_t facility_index(NodeId node) const;
};

/// Pole sizing data. max_poles is per facility (VarMap order) and the
/// refuelling frequency per flow.
struct CapacityConfig {
  double pole_capacity = 0.0;
  std::vector<int> max_poles;
  std::vector<double> frequency;

  static CapacityConfig uniform(const Instance& instance, double pole_capacity, int max_poles = 4);
  int total_poles() const;
};

struct BuiltModel {
  ModelKind kind = ModelKind::kDfrlp;
  milp::Model model;
  VarMap vars;
  std::optional<CapacityConfig> capacity;
};

/// Maximize covered volume with exactly p stations.
BuiltModel build_dfrlp(const Instance& instance, int p);

/// Minimize stations subject to covering at least a share C of the volume.
BuiltModel build_mc_dfrlp(const Instance& instance, double coverage);

/// Maximize covered volume with station costs (facility order) within a budget.
BuiltModel build_lc_dfrlp(const Instance& instance, const std::vector<double>& costs, double budget);

/// Maximize covered volume with exactly S poles of limited capacity.
BuiltModel build_c_dfrlp(const Instance& instance, int total_poles, const CapacityConfig& capacity);

/// Minimize poles subject to covering at least a share C of the volume.
BuiltModel build_cmc_dfrlp(const Instance& instance, double coverage, const CapacityConfig& capacity);

/// Energy each station supplies to a flow that stops at the given table
/// positions (ascending, origin and destination excluded), scaled by volume
/// and refuelling frequency. Keyed by station node.
std::map<NodeId, double> station_demand(const Flow& flow, const SegmentTable& table,
                                        std::span<const int> stop_positions, double frequency);

struct FlowCoverage {
  int flow = 0;
  std::int64_t volume = 0;
  double coverage = 0.0;  // y_f or z_f; 0 for zero-volume flows
  std::vector<NodeId> stops;
};

struct StationPlan {
  ModelKind kind = ModelKind::kDfrlp;
  milp::SolveStatus status = milp::SolveStatus::kOptimal;
  std::vector<NodeId> open;
  std::map<NodeId, int> poles;  // capacitated only
  std::map<NodeId, double> load;
  std::map<NodeId, double> utilization;
  std::vector<FlowCoverage> flows;
  double fvc = 0.0;
  double objective = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  milp::SolveStats stats;
  std::optional<double> pole_capacity;
};

/// Rounds integers, recomputes coverage and station loads, and checks the
/// stopping pattern and pole limits. Throws IntegrityError on violation.
StationPlan decode(const milp::Solution& solution, const BuiltModel& built, const Instance& instance);

}  // namespace flowcharge
