// SPDX-License-Identifier: Apache-2.0

#include "pgr/position_graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace pgr {

using ordered_json = nlohmann::ordered_json;

PositionGraph::PositionGraph(std::vector<PositionInfo> positions, std::vector<Edge> edges,
                             std::vector<Trap> traps)
    : positions_(std::move(positions)), edges_(std::move(edges)), traps_(std::move(traps)) {
    const std::size_t n = positions_.size();

    for (auto& e : edges_) {
        if (e.a == e.b) throw ConfigError("self-loop edge");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.b >= n) throw ConfigError("edge endpoint out of range");
        if (e.caps.empty()) throw ConfigError("edge without capabilities");
        if (e.caps.movement_count() > 1)
            throw ConfigError("edge carries more than one movement capability");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].a == edges_[i].a && edges_[i - 1].b == edges_[i].b)
            throw ConfigError("duplicate edge");

    // Trap/position cross-checks: every position is exactly one trap slot or
    // transport, and trap capacity equals its slot count by construction.
    std::vector<bool> seen(n, false);
    for (std::size_t t = 0; t < traps_.size(); ++t) {
        if (traps_[t].id != t) throw ConfigError("trap ids must be dense and ordered");
        for (std::size_t s = 0; s < traps_[t].slots.size(); ++s) {
            Position p = traps_[t].slots[s];
            if (p >= n) throw ConfigError("trap slot out of range");
            if (seen[p]) throw ConfigError("position assigned to two traps");
            seen[p] = true;
            if (positions_[p].kind != PositionKind::TrapSlot || positions_[p].trap != t ||
                positions_[p].slot != s)
                throw ConfigError("trap slot metadata mismatch");
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (positions_[p].kind == PositionKind::TrapSlot && !seen[p])
            throw ConfigError("trap slot not listed in any trap");
        if (positions_[p].kind == PositionKind::Transport) ++num_transport_;
    }

    adjacency_.resize(n);
    movement_adj_.resize(n);
    swap_adj_.resize(n);
    for (const auto& e : edges_) {
        adjacency_[e.a].push_back({e.b, e.caps});
        adjacency_[e.b].push_back({e.a, e.caps});
        if (e.caps.movement()) {
            movement_adj_[e.a].push_back(e.b);
            movement_adj_[e.b].push_back(e.a);
        }
        if (e.caps.has(EdgeCapability::Swap)) {
            swap_adj_[e.a].push_back(e.b);
            swap_adj_[e.b].push_back(e.a);
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        std::sort(adjacency_[p].begin(), adjacency_[p].end(),
                  [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
        std::sort(movement_adj_[p].begin(), movement_adj_[p].end());
        std::sort(swap_adj_[p].begin(), swap_adj_[p].end());
    }
}

CapabilitySet PositionGraph::edge_caps(Position a, Position b) const {
    for (const Neighbor& nb : adjacency_.at(a))
        if (nb.to == b) return nb.caps;
    return {};
}

std::size_t PositionGraph::total_trap_capacity() const {
    std::size_t total = 0;
    for (const Trap& t : traps_) total += t.capacity();
    return total;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

constexpr int kGraphFormatVersion = 1;

std::vector<std::string> caps_to_names(CapabilitySet c) {
    std::vector<std::string> names;
    if (c.has(EdgeCapability::Swap)) names.push_back("swap");
    if (c.has(EdgeCapability::MergeSplit)) names.push_back("merge_split");
    if (c.has(EdgeCapability::Move)) names.push_back("move");
    if (c.has(EdgeCapability::Execute)) names.push_back("execute");
    return names;
}

CapabilitySet caps_from_names(const std::vector<std::string>& names) {
    CapabilitySet c;
    for (const auto& s : names) {
        if (s == "swap")
            c.add(EdgeCapability::Swap);
        else if (s == "merge_split")
            c.add(EdgeCapability::MergeSplit);
        else if (s == "move")
            c.add(EdgeCapability::Move);
        else if (s == "execute")
            c.add(EdgeCapability::Execute);
        else
            throw ParseError("unknown edge capability '" + s + "'");
    }
    return c;
}

}  // namespace

std::string graph_to_json(const PositionGraph& g) {
    ordered_json doc;
    doc["format"] = "position-graph";
    doc["version"] = kGraphFormatVersion;
    ordered_json positions = ordered_json::array();
    for (Position p = 0; p < g.num_positions(); ++p) {
        const PositionInfo& info = g.info(p);
        ordered_json jp;
        jp["id"] = p;
        if (info.kind == PositionKind::TrapSlot) {
            jp["kind"] = "trap";
            jp["trap"] = info.trap;
            jp["slot"] = info.slot;
        } else {
            jp["kind"] = "transport";
        }
        positions.push_back(std::move(jp));
    }
    doc["positions"] = std::move(positions);
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) {
        ordered_json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["caps"] = caps_to_names(e.caps);
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    ordered_json traps = ordered_json::array();
    for (const Trap& t : g.traps()) {
        ordered_json jt;
        jt["id"] = t.id;
        jt["slots"] = t.slots;
        jt["executable"] = t.executable;
        traps.push_back(std::move(jt));
    }
    doc["traps"] = std::move(traps);
    return doc.dump(2) + "\n";
}

PositionGraph graph_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("architecture JSON: ") + e.what());
    }
    if (doc.value("format", "") != "position-graph")
        throw ParseError("not a position-graph document");
    if (doc.value("version", 0) != kGraphFormatVersion)
        throw ParseError("unsupported position-graph version");

    std::vector<PositionInfo> positions(doc.at("positions").size());
    for (const auto& jp : doc.at("positions")) {
        Position id = jp.at("id").get<Position>();
        if (id >= positions.size()) throw ParseError("position ids must be dense");
        PositionInfo info;
        std::string kind = jp.at("kind").get<std::string>();
        if (kind == "trap") {
            info.kind = PositionKind::TrapSlot;
            info.trap = jp.at("trap").get<TrapId>();
            info.slot = jp.at("slot").get<std::uint32_t>();
        } else if (kind == "transport") {
            info.kind = PositionKind::Transport;
        } else {
            throw ParseError("unknown position kind '" + kind + "'");
        }
        positions[id] = info;
    }
    std::vector<Edge> edges;
    for (const auto& je : doc.at("edges")) {
        Edge e;
        e.a = je.at("a").get<Position>();
        e.b = je.at("b").get<Position>();
        e.caps = caps_from_names(je.at("caps").get<std::vector<std::string>>());
        edges.push_back(e);
    }
    std::vector<Trap> traps;
    for (const auto& jt : doc.at("traps")) {
        Trap t;
        t.id = jt.at("id").get<TrapId>();
        t.slots = jt.at("slots").get<std::vector<Position>>();
        t.executable = jt.at("executable").get<bool>();
        traps.push_back(std::move(t));
    }
    return PositionGraph(std::move(positions), std::move(edges), std::move(traps));
}

// ---------------------------------------------------------------------------
// Placement
// ---------------------------------------------------------------------------

void Placement::place(Qudit q, Position p) {
    if (p >= inverse_.size()) throw ConfigError("position out of range");
    if (inverse_[p] != kNoQudit && inverse_[p] != q) throw ConfigError("position already occupied");
    if (forward_.at(q) != kNoPosition) inverse_[forward_[q]] = kNoQudit;
    forward_[q] = p;
    inverse_[p] = q;
}

void Placement::clear(Qudit q) {
    if (forward_.at(q) != kNoPosition) {
        inverse_[forward_[q]] = kNoQudit;
        forward_[q] = kNoPosition;
    }
}

void apply_move(const PositionGraph& g, Placement& pl, Qudit q, Position to) {
    if (!pl.placed(q)) throw ConfigError("move of unplaced qudit");
    Position from = pl.position_of(q);
    CapabilitySet caps = g.edge_caps(from, to);
    if (caps.empty()) throw ConfigError("move along non-edge");
    if (!caps.movement()) throw ConfigError("edge has no movement capability");
    if (pl.occupied(to)) throw ConfigError("move to occupied position");
    pl.place(q, to);
}

void apply_swap(const PositionGraph& g, Placement& pl, Position a, Position b) {
    if (!g.has_capability(a, b, EdgeCapability::Swap)) throw ConfigError("edge lacks swap capability");
    Qudit qa = pl.occupant(a);
    Qudit qb = pl.occupant(b);
    if (qa == kNoQudit && qb == kNoQudit) throw ConfigError("swap of two empty positions");
    if (qa != kNoQudit) pl.clear(qa);
    if (qb != kNoQudit) pl.clear(qb);
    if (qa != kNoQudit) pl.place(qa, b);
    if (qb != kNoQudit) pl.place(qb, a);
}

}  // namespace pgr
