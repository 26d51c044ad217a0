#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "flowcharge/network.hpp"

namespace flowcharge {

// Line-oriented instance format, '#' starts a comment:
//
//   param R <float>
//   node <id> <x> <y> <F|O|D|OD|FOD>
//   edge <id> <id> <length>
//   flow <origin> <destination> <volume>
//
// An FOD node is an OD node that may also host a station; it is expanded with
// make_dummy() on load and written back as FOD.

Instance parse_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);

void write_instance(const Instance& instance, std::ostream& out);
std::string format_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double value);

}  // namespace flowcharge
