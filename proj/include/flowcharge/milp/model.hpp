#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowcharge::milp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VarId {
  std::int32_t value = -1;

  bool valid() const { return value >= 0; }
  std::size_t index() const { return static_cast<std::size_t>(value); }
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

enum class VarKind { kContinuous, kInteger, kBinary };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class ObjectiveSense { kMinimize, kMaximize };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInfinity;
  // Branch and bound resolves fractional columns of higher priority first.
  int priority = 0;

  bool is_integral() const { return kind != VarKind::kContinuous; }
};

struct Term {
  VarId var;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

/// Self-contained MILP: variables, linear rows and a linear objective.
class Model {
 public:
  explicit Model(std::string name = "model") : name_(std::move(name)) {}

  VarId add_variable(std::string name, VarKind kind, double lower, double upper);
  VarId add_binary(std::string name) { return add_variable(std::move(name), VarKind::kBinary, 0, 1); }
  VarId add_integer(std::string name, double lower, double upper) {
    return add_variable(std::move(name), VarKind::kInteger, lower, upper);
  }
  VarId add_continuous(std::string name, double lower, double upper) {
    return add_variable(std::move(name), VarKind::kContinuous, lower, upper);
  }

  /// Duplicate variables within `terms` are merged; zero coefficients dropped.
  std::size_t add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs);

  void set_objective(ObjectiveSense sense, std::vector<Term> terms);

  const std::string& name() const { return name_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }
  ObjectiveSense objective_sense() const { return objective_sense_; }
  const Variable& variable(VarId id) const { return variables_.at(id.index()); }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::size_t count(VarKind kind) const;

  /// Does not renumber; name changes keep the model structurally identical.
  void rename_variable(VarId id, std::string name);
  void rename_constraint(std::size_t row, std::string name);
  void set_priority(VarId id, int priority);

  /// Checks bounds, names and term references; throws ModelError.
  void validate() const;

 private:
  std::vector<Term> normalize(std::vector<Term> terms, const std::string& where) const;

  std::string name_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  ObjectiveSense objective_sense_ = ObjectiveSense::kMinimize;
  std::map<std::string, VarId> names_;
};

enum class SolveStatus { kOptimal, kFeasibleLimit, kNoSolutionLimit, kInfeasible, kUnbounded };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t lp_iterations = 0;
  double wall_seconds = 0.0;
};

struct Solution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  double best_bound = 0.0;
  SolveStats stats;

  bool has_values() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kFeasibleLimit;
  }
  double value(VarId id) const { return values.at(id.index()); }
  /// Relative gap |objective - bound| / max(1, |objective|).
  double gap() const;
};

struct SolveLimits {
  double time_seconds = 1800.0;
  std::int64_t max_nodes = std::numeric_limits<std::int64_t>::max();
  double relative_gap = 1e-6;
  // Node-log lines go here when non-null, every `log_every` nodes.
  std::ostream* log = nullptr;
  std::int64_t log_every = 100;
};

inline constexpr double kIntegralityTolerance = 1e-6;
inline constexpr double kFeasibilityTolerance = 1e-6;

/// Objective value of `values` under the model objective.
double evaluate_objective(const Model& model, const std::vector<double>& values);

/// Largest absolute violation over rows, bounds and integrality.
double max_violation(const Model& model, const std::vector<double>& values);

}  // namespace flowcharge::milp
