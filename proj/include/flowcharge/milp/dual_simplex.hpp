#pragma once

#include <cstdint>
#include <vector>

#include "flowcharge/milp/model.hpp"

namespace flowcharge::milp {

/// Dense column-bounded LP in minimization form:
///   min cost'x  s.t.  row_i(x) {<=,=,>=} rhs_i,  lower <= x <= upper.
struct LpData {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> matrix;  // rows x cols, row-major
  std::vector<Sense> sense;
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;

  /// Maximization models are negated so the LP always minimizes.
  static LpData from_model(const Model& model);
  double& at(std::size_t r, std::size_t c) { return matrix[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return matrix[r * cols + c]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

enum class ColumnState : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

struct LpBasis {
  std::vector<std::int32_t> head;  // basic column of each row
  std::vector<ColumnState> state;  // every column, logicals after structurals

  bool empty() const { return head.empty() && state.empty(); }
};

/// Bounded-variable dual simplex over an explicit dense tableau. Each row i
/// gets a logical column s_i with row_i(x) + s_i = rhs_i, so the slack basis
/// is always available. Nonbasic columns sit at the bound that makes them
/// dual feasible; an unbounded side needed for that gets an artificial bound
/// that signals unboundedness if it stays active at the optimum.
///
/// Rows are scaled by powers of two, and the tableau is rebuilt from the
/// original matrix every few hundred pivots to bound accumulated error.
///
/// Pivot selection is deterministic: largest infeasibility for the leaving
/// row, a two-pass Harris ratio test for the entering column, and Bland's
/// smallest-index rule after a run of degenerate pivots.
class DualSimplex {
 public:
  explicit DualSimplex(LpData data);

  /// Slack basis with every structural at its dual-feasible bound.
  void reset();
  /// Refactors the tableau for `basis`; false if the basis is singular or
  /// cannot be made dual feasible (the caller should reset()).
  bool load(const LpBasis& basis);
  LpBasis basis() const;

  /// Changes structural bounds, keeping the current basis.
  void set_bounds(std::size_t col, double lower, double upper);
  double lower(std::size_t col) const { return true_lower_[col]; }
  double upper(std::size_t col) const { return true_upper_[col]; }

  LpStatus solve();

  double objective() const;
  std::vector<double> primal() const;
  std::int64_t iterations() const { return iterations_; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

 private:
  double* row(std::size_t r) { return tableau_.data() + r * total_; }
  const double* row(std::size_t r) const { return tableau_.data() + r * total_; }

  void fill_identity_tableau();
  void place_nonbasic(std::size_t col);
  double nonbasic_value(std::size_t col) const;
  void recompute_primal();
  void recompute_duals();
  bool repair_dual_infeasibility();
  long choose_leaving() const;
  long choose_entering(std::size_t r, bool to_lower) const;
  void pivot(std::size_t r, std::size_t q, bool to_lower);
  bool artificial_active() const;
  void perturb_costs();
  LpStatus iterate(std::int64_t& budget);
  double primal_tolerance(double bound) const;

  LpData data_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t total_ = 0;

  std::vector<double> tableau_;  // m x (n + m)
  std::vector<double> value_;
  std::vector<double> reduced_;
  std::vector<double> cost_;       // perturbed while iterating
  std::vector<double> base_cost_;
  std::vector<double> work_lower_;
  std::vector<double> work_upper_;
  std::vector<double> true_lower_;
  std::vector<double> true_upper_;
  std::vector<std::int32_t> head_;
  std::vector<ColumnState> state_;

  std::vector<std::size_t> pivot_support_;
  std::int64_t iterations_ = 0;
  bool bland_ = false;
  std::int64_t degenerate_run_ = 0;
  std::int64_t since_refactor_ = 0;
};

}  // namespace flowcharge::milp
