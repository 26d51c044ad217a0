#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "flowcharge/milp/model.hpp"

namespace flowcharge::milp {

class MpsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-format MPS. Columns are written as C0000000, C0000001, ... and rows as
// R0000000, ...; the objective row is COST. A comment block at the top maps
// every sanitized name back to the model name so read_mps() can restore it.
// Numeric fields use the shortest round-trip representation and may run past
// the classic 12-character width; the reader splits on whitespace.
void write_mps(const Model& model, std::ostream& out);
void write_mps(const Model& model, const std::filesystem::path& path);

/// Integer columns with bounds [0,1] come back as binaries.
Model read_mps(std::istream& in);
Model read_mps(const std::filesystem::path& path);

/// CPLEX-LP style text for human inspection.
void write_lp(const Model& model, std::ostream& out);

}  // namespace flowcharge::milp
