// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/common.hpp"

#include <set>
#include <string>
#include <vector>

namespace pgr {

/// One circuit operation. Gate semantics are opaque to the router; only the
/// operand list matters for mapping and routing.
struct Gate {
    GateId id = 0;
    std::string kind;
    std::vector<Qudit> operands;  // distinct, size >= 1
    std::vector<double> params;

    bool operator==(const Gate&) const = default;
};

/// Gate list with last-writer-per-qudit dependency edges and the
/// front-layer / lookahead queries the routers consume.
///
/// Immutable after construction; safe to share across concurrent
/// compilations.
class CircuitDag {
public:
    CircuitDag() = default;
    CircuitDag(std::size_t num_qudits, std::vector<Gate> gates);

    std::size_t num_qudits() const { return num_qudits_; }
    std::size_t num_gates() const { return gates_.size(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& gate(GateId id) const { return gates_.at(id); }

    const std::vector<GateId>& preds(GateId id) const { return preds_.at(id); }
    const std::vector<GateId>& succs(GateId id) const { return succs_.at(id); }

    /// Same qudit count, gates in reverse order (fresh dependency edges).
    /// Used by the backward layout passes.
    CircuitDag reversed() const;

    bool operator==(const CircuitDag& o) const {
        return num_qudits_ == o.num_qudits_ && gates_ == o.gates_;
    }

private:
    std::size_t num_qudits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::vector<GateId>> preds_;
    std::vector<std::vector<GateId>> succs_;
};

/// Parse the supported OpenQASM-2 subset (see docs/circuit-format.md).
/// Throws ParseError with a line number on malformed or unsupported input.
CircuitDag parse_qasm(const std::string& text);

/// Serialize back to the supported subset. parse -> serialize -> parse is a
/// fixed point.
std::string to_qasm(const CircuitDag& dag);

/// Gates whose predecessors are all executed. `executed` must be
/// downward-closed under the dependency relation (ConfigError otherwise).
/// Returned ascending by gate id.
std::vector<GateId> front_layer(const CircuitDag& dag, const std::set<GateId>& executed);

/// Up to `size` unexecuted gates beyond the front layer, ordered by
/// (dependency depth from the front, gate id). `front` must equal
/// front_layer(dag, executed).
std::vector<GateId> lookahead_set(const CircuitDag& dag, const std::set<GateId>& executed,
                                  const std::vector<GateId>& front, std::size_t size);

}  // namespace pgr
