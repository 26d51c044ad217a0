#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace flowcharge {

/// Thrown for malformed or inconsistent input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeId = std::int32_t;

/// Absolute tolerance applied to every length comparison.
inline constexpr double kLengthTolerance = 1e-9;

enum class OdRole { kNone, kOrigin, kDestination, kBoth };

bool is_origin(OdRole role);
bool is_destination(OdRole role);

struct Node {
  NodeId id = 0;
  double x = 0.0;
  double y = 0.0;
  bool facility = false;
  OdRole od_role = OdRole::kNone;
  // Set on dummy OD nodes: the node whose OD role this one took over.
  std::optional<NodeId> anchor;
};

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double length = 0.0;
};

struct Neighbor {
  NodeId node = 0;
  double length = 0.0;
};

struct Path {
  std::vector<NodeId> nodes;
  double length = 0.0;
};

/// Undirected road network. Immutable once built; neighbors are kept in
/// ascending id order so every traversal is deterministic.
class Network {
 public:
  Network() = default;

  /// Validates ids and edges. Edges are stored canonically (a < b).
  /// Zero-length edges are accepted only between a dummy node and its anchor.
  static Network build(std::vector<Node> nodes, std::vector<Edge> edges);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(NodeId id) const { return index_.contains(id); }
  const Node& node(NodeId id) const;
  std::span<const Neighbor> neighbors(NodeId id) const;

  /// Facility-capable node ids, ascending.
  std::vector<NodeId> facilities() const;
  NodeId max_id() const;

 private:
  std::size_t index_of(NodeId id) const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Minimal-length path; among equal-length paths the lexicographically
/// smallest node-id sequence wins.
Path shortest_path(const Network& network, NodeId origin, NodeId destination);

/// Distances from `source` to every node (infinity when unreachable),
/// indexed like network.nodes().
std::vector<double> distances_from(const Network& network, NodeId source);

struct FlowSpec {
  NodeId origin = 0;
  NodeId destination = 0;
  std::int64_t volume = 0;
};

struct Flow {
  int id = 0;
  NodeId origin = 0;
  NodeId destination = 0;
  std::int64_t volume = 0;
  std::vector<NodeId> path;
  // Distance from the origin to path[i].
  std::vector<double> offsets;
  double length = 0.0;
  // Facility nodes on the path in travel order (K_f).
  std::vector<NodeId> stations;
};

/// A network, its flows on fixed shortest paths, and the driving range.
class Instance {
 public:
  Instance() = default;

  static Instance build(Network network, std::vector<FlowSpec> flows, double range);

  const Network& network() const { return network_; }
  const std::vector<Flow>& flows() const { return flows_; }
  double range() const { return range_; }
  std::int64_t total_volume() const;
  std::vector<NodeId> facilities() const { return network_.facilities(); }
  std::vector<FlowSpec> flow_specs() const;

 private:
  Network network_;
  std::vector<Flow> flows_;
  double range_ = 0.0;
};

/// Per-flow cycle-segment distances. Stops are indexed by position along the
/// flow: 0 is the origin, 1..m the stations, m+1 the destination.
class SegmentTable {
 public:
  struct Entry {
    int from = 0;
    int to = 0;
    double length = 0.0;
  };

  static SegmentTable build(const Flow& flow, double range);

  int flow_id() const { return flow_id_; }
  std::span<const NodeId> stops() const { return stops_; }
  int station_count() const { return static_cast<int>(stops_.size()) - 2; }
  int destination_position() const { return station_count() + 1; }

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t index(int from, int to) const;
  double length(int from, int to) const { return entries_[index(from, to)].length; }
  bool is_direct(std::size_t entry) const;
  /// Finite stand-in for the infinite origin-destination segment.
  double sentinel() const { return sentinel_; }

 private:
  int flow_id_ = 0;
  std::vector<NodeId> stops_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_offset_;
  double sentinel_ = 0.0;
};

/// 2 * length + R + 1: exceeds R and every real segment of the flow.
double segment_sentinel(double flow_length, double range);

/// Share of the flow that recharges per round trip.
double refuel_frequency(double flow_length, double range);

/// True when a flow that stops at every open station on its path never
/// drives more than `range` between consecutive stops. `open` must be
/// sorted ascending.
bool coverage_check(const Flow& flow, std::span<const NodeId> open, double range);

/// Lets a station sit at an OD location: a dummy node co-located with `node`
/// and joined to it by a zero-length edge takes over the OD role, while
/// `node` becomes a facility. Flow paths are recomputed.
Instance make_dummy(const Instance& instance, NodeId node);

}  // namespace flowcharge
