#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "flowcharge/network.hpp"

namespace flowcharge::oracle {

// Brute-force reference solvers for toy instances. They share nothing with
// the MILP builders beyond coverage_check() and the LP kernel.

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  // Checked between subsets when non-null.
  const std::atomic<bool>* abort = nullptr;
};

struct DfrlpResult {
  std::int64_t best = 0;
  // Every optimal subset, each ascending, in lexicographic order.
  std::vector<std::vector<NodeId>> argmax;
};

/// Best covered volume over all p-subsets of the facilities.
DfrlpResult exhaustive_dfrlp(const Instance& instance, int p, const OracleBudget& budget = {});

struct McResult {
  bool feasible = false;
  int stations = 0;
};

/// Fewest stations covering at least ceil(C * TFV) volume.
McResult exhaustive_mc(const Instance& instance, double coverage, const OracleBudget& budget = {});

/// Best covered volume over all pole allocations with sum S and at most
/// `max_poles` per station, each scored by the LP over the coverage shares.
double exhaustive_capacitated(const Instance& instance, int total_poles, double pole_capacity,
                              int max_poles, const OracleBudget& budget = {});

/// Number of allocations exhaustive_capacitated() would score.
std::uint64_t allocation_count(int stations, int total_poles, int max_poles);

}  // namespace flowcharge::oracle
