// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/common.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgr {

/// Edge capabilities. At most one movement capability (swap, merge_split,
/// move) per edge; execute may coexist with swap.
enum class EdgeCapability : std::uint8_t {
    Swap = 1 << 0,
    MergeSplit = 1 << 1,
    Move = 1 << 2,
    Execute = 1 << 3,
};

struct CapabilitySet {
    std::uint8_t bits = 0;

    CapabilitySet() = default;
    CapabilitySet(std::initializer_list<EdgeCapability> caps) {
        for (auto c : caps) add(c);
    }

    void add(EdgeCapability c) { bits |= static_cast<std::uint8_t>(c); }
    bool has(EdgeCapability c) const { return bits & static_cast<std::uint8_t>(c); }
    bool empty() const { return bits == 0; }
    bool movement() const {
        return has(EdgeCapability::Swap) || has(EdgeCapability::MergeSplit) ||
               has(EdgeCapability::Move);
    }
    int movement_count() const {
        return int(has(EdgeCapability::Swap)) + int(has(EdgeCapability::MergeSplit)) +
               int(has(EdgeCapability::Move));
    }
    bool operator==(const CapabilitySet&) const = default;
};

struct Edge {
    Position a = 0;
    Position b = 0;  // a < b
    CapabilitySet caps;
    bool operator==(const Edge&) const = default;
};

enum class PositionKind : std::uint8_t { TrapSlot, Transport };

struct PositionInfo {
    PositionKind kind = PositionKind::Transport;
    TrapId trap = kNoQudit;       // valid for TrapSlot
    std::uint32_t slot = 0;       // index within the trap chain
    bool operator==(const PositionInfo&) const = default;
};

struct Trap {
    TrapId id = 0;
    std::vector<Position> slots;  // ordered chain
    bool executable = true;
    std::size_t capacity() const { return slots.size(); }
    bool operator==(const Trap&) const = default;
};

struct Neighbor {
    Position to;
    CapabilitySet caps;
};

/// Labeled graph of occupiable positions. Vertices are places an ion (or a
/// qudit on a fixed-coupling device) may sit; edges are legal transitions or
/// interactions, labeled with capabilities.
///
/// Immutable after construction; shared freely across compilations.
class PositionGraph {
public:
    PositionGraph(std::vector<PositionInfo> positions, std::vector<Edge> edges,
                  std::vector<Trap> traps);

    std::size_t num_positions() const { return positions_.size(); }
    const std::vector<PositionInfo>& positions() const { return positions_; }
    const PositionInfo& info(Position p) const { return positions_.at(p); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Trap>& traps() const { return traps_; }
    const Trap& trap(TrapId t) const { return traps_.at(t); }
    std::size_t num_transport() const { return num_transport_; }

    /// All neighbors of p (sorted by position id), with edge capabilities.
    std::span<const Neighbor> neighbors(Position p) const {
        return {adjacency_[p].data(), adjacency_[p].size()};
    }

    /// Capabilities of edge (a,b); empty set when no edge exists.
    CapabilitySet edge_caps(Position a, Position b) const;

    bool has_capability(Position a, Position b, EdgeCapability c) const {
        return edge_caps(a, b).has(c);
    }

    /// Neighbors reachable over movement-capable edges, sorted.
    std::span<const Position> movement_neighbors(Position p) const {
        return {movement_adj_[p].data(), movement_adj_[p].size()};
    }

    /// Neighbors over swap-capable edges, sorted.
    std::span<const Position> swap_neighbors(Position p) const {
        return {swap_adj_[p].data(), swap_adj_[p].size()};
    }

    /// Total ion capacity: sum of trap capacities.
    std::size_t total_trap_capacity() const;

    bool operator==(const PositionGraph& o) const {
        return positions_ == o.positions_ && edges_ == o.edges_ && traps_ == o.traps_;
    }

private:
    std::vector<PositionInfo> positions_;
    std::vector<Edge> edges_;
    std::vector<Trap> traps_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::vector<Position>> movement_adj_;
    std::vector<std::vector<Position>> swap_adj_;
    std::size_t num_transport_ = 0;
};

/// Versioned JSON serialization; round-trips bit-exactly.
std::string graph_to_json(const PositionGraph& g);
PositionGraph graph_from_json(const std::string& json_text);

/// Mutable partial bijection logical qudit <-> position. One owner per
/// compilation.
class Placement {
public:
    Placement() = default;
    Placement(std::size_t num_qudits, std::size_t num_positions)
        : forward_(num_qudits, kNoPosition), inverse_(num_positions, kNoQudit) {}

    std::size_t num_qudits() const { return forward_.size(); }
    std::size_t num_positions() const { return inverse_.size(); }

    bool placed(Qudit q) const { return forward_.at(q) != kNoPosition; }
    Position position_of(Qudit q) const { return forward_.at(q); }
    Qudit occupant(Position p) const { return inverse_.at(p); }
    bool occupied(Position p) const { return inverse_.at(p) != kNoQudit; }

    void place(Qudit q, Position p);
    void clear(Qudit q);

    const std::vector<Position>& forward() const { return forward_; }

    bool operator==(const Placement&) const = default;

private:
    std::vector<Position> forward_;
    std::vector<Qudit> inverse_;
};

/// Move a qudit across a movement edge to an unoccupied position.
/// Throws ConfigError on occupied destination, non-edge, or capability
/// mismatch.
void apply_move(const PositionGraph& g, Placement& pl, Qudit q, Position to);

/// Exchange occupants of a swap-capable edge (either endpoint may be empty).
void apply_swap(const PositionGraph& g, Placement& pl, Position a, Position b);

}  // namespace pgr
