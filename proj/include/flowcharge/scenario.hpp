#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flowcharge/milp/model.hpp"
#include "flowcharge/models.hpp"
#include "flowcharge/network.hpp"

namespace flowcharge {

// ---------------------------------------------------------------------------
// Price classes

enum class PriceClass { kRural, kSubUrban, kUrban };

const char* to_string(PriceClass c);

enum class DistanceMetric { kNetwork, kEuclidean };

// kEndpoint counts flows starting or ending at the node, kThrough every flow
// whose path passes it.
enum class VolumeRule { kEndpoint, kThrough };

struct PartitionParams {
  int neighbors = 4;
  double urban_radius = 100.0;
  double suburban_radius = 150.0;
  DistanceMetric metric = DistanceMetric::kNetwork;
  VolumeRule volume_rule = VolumeRule::kEndpoint;
};

struct Classification {
  std::map<NodeId, PriceClass> classes;
  int urban = 0;
  int suburban = 0;
  int rural = 0;
  PartitionParams params;

  int count(PriceClass c) const;
};

/// Classifies every facility. A node whose own volume reaches 10% of the
/// total is urban; between 5% and 10% it is urban with enough neighbors
/// inside the urban radius and sub-urban otherwise; below 5% the two radii
/// decide between urban, sub-urban and rural. Volume at a dummy node counts
/// for its anchor.
Classification partition(const Instance& instance, const PartitionParams& params = {});

// ---------------------------------------------------------------------------
// Cost scenarios and budgets

struct CostScenario {
  int id = 0;
  double rural = 0.0;
  double suburban = 0.0;
  double urban = 0.0;

  double cost(PriceClass c) const;
};

inline constexpr int kScenarioCount = 16;

/// Scenarios 1..15 fix the urban cost at 7; 16 prices every class at 7.
CostScenario scenario_costs(int id);

/// A quarter of what opening every facility would cost.
double budget(int urban, int suburban, int rural, const CostScenario& scenario);
double budget(const Classification& classification, const CostScenario& scenario);

/// Per-facility costs in `facilities` order.
std::vector<double> station_costs(const Classification& classification, const CostScenario& scenario,
                                  const std::vector<NodeId>& facilities);

// S1 raises the sub-urban cost along each sequence, S2 the rural cost, and
// S3 walks the diagonal.
enum class SequenceKind { kS1, kS2, kS3 };

int sequence_count(SequenceKind kind);
/// `index` counts from 1.
std::vector<int> sequence(SequenceKind kind, int index);

// ---------------------------------------------------------------------------
// Pole capacity and the two-stage pretest

/// Energy demand per facility with every facility open and every flow fully
/// covered.
std::map<NodeId, double> full_demand(const Instance& instance);

/// Median of `values`; an even count averages the middle pair.
double median(std::vector<double> values);

/// scale * median positive full_demand / max_poles.
double derive_pole_capacity(const Instance& instance, int max_poles = 4, double scale = 0.001);

struct PreTestResult {
  double c_max = 0.0;
  int s_evcp = 0;
  milp::SolveStatus stage1 = milp::SolveStatus::kOptimal;
  milp::SolveStatus stage2 = milp::SolveStatus::kOptimal;
  StationPlan stage1_plan;
  StationPlan stage2_plan;
};

/// Stage 1 installs the maximum pole count everywhere and reads off the
/// best reachable coverage; stage 2 finds the fewest poles reaching it.
PreTestResult pretest(const Instance& instance, const CapacityConfig& capacity,
                      const milp::SolveLimits& limits = {});

/// Pole targets at 25, 50, 75 and 100 percent of `s_evcp`, rounded.
std::vector<int> s_ladder(int s_evcp);

// ---------------------------------------------------------------------------
// Instance generation

struct GenParams {
  int facilities = 40;
  int od_nodes = 20;
  double side = 1000.0;
  int neighbors = 3;
  std::int64_t total_volume = 1'000'000;
  double zero_cutoff = 100.0;
  double range = 250.0;
  // OD nodes are drawn from the facilities and may host stations themselves;
  // otherwise they are extra nodes.
  bool od_facilities = true;
};

/// Deterministic for a fixed seed on every platform.
Instance generate(const GenParams& params, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Utilization

struct UtilizationStats {
  double mean = 0.0;
  std::map<NodeId, double> per_station;
  int covered = 0;        // positive volume, some coverage
  int fully_covered = 0;  // coverage 1
  int under_half = 0;     // coverage strictly between 0 and 0.5

  std::string report() const;
};

UtilizationStats utilization_stats(const StationPlan& plan, const Instance& instance, double pole_capacity);

}  // namespace flowcharge
