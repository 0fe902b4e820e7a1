#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "tmotif/graph.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

// One edge as seen from a center node.
struct IncidentEdge {
    Timestamp t = 0;
    Ordinal ordinal = 0;
    NodeId other = 0;
    Direction dir = Direction::outward;  // outward iff center is the edge's src

    bool operator==(const IncidentEdge&) const = default;
};

// Per-node incident-edge sequences S_u, each sorted by (t, ordinal). Stored as
// one flat CSR-style array; every edge appears in exactly two sequences.
class NodeSequenceIndex {
public:
    NodeSequenceIndex() = default;
    explicit NodeSequenceIndex(const TemporalGraph& graph);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::span<const IncidentEdge> sequence(NodeId u) const {
        return {incident_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    std::size_t total_records() const { return incident_.size(); }

private:
    std::vector<std::size_t> offsets_;
    std::vector<IncidentEdge> incident_;
};

// One inter-pair edge, direction relative to the smaller node index of the
// unordered pair (outward = min -> max).
struct PairEdgeRecord {
    Timestamp t = 0;
    Ordinal ordinal = 0;
    Direction dir_rel_min = Direction::outward;

    bool operator==(const PairEdgeRecord&) const = default;
};

// Direction re-expressed relative to a query node v.
struct PairWindowRecord {
    Timestamp t = 0;
    Ordinal ordinal = 0;
    Direction dir_rel_v = Direction::outward;

    bool operator==(const PairWindowRecord&) const = default;
};

// Map from unordered node pair to its time-sorted inter-pair edge sequence.
// The union over all pairs reproduces the edge multiset exactly.
class PairEdgeIndex {
public:
    PairEdgeIndex() = default;
    explicit PairEdgeIndex(const TemporalGraph& graph);

    struct Window {
        std::span<const PairEdgeRecord> records;
        bool v_is_min = true;  // when false, re-express dir by complementing
    };

    // All inter-pair edges with lo <= t <= hi in (t, ordinal) order, found by
    // binary search on the sorted per-pair sequence. Unknown pair -> empty.
    Window window(NodeId v, NodeId w, Timestamp lo, Timestamp hi) const;

    // Materialized form of `window` with directions relative to v.
    std::vector<PairWindowRecord> edges_in_window(NodeId v, NodeId w, Timestamp lo,
                                                  Timestamp hi) const;

    std::size_t pair_count() const { return ranges_.size(); }
    std::size_t total_records() const { return records_.size(); }

private:
    struct Range {
        std::size_t offset;
        std::size_t length;
    };
    static std::uint64_t key(NodeId a, NodeId b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::unordered_map<std::uint64_t, Range> ranges_;
    std::vector<PairEdgeRecord> records_;
};

// Immutable per-graph structures shared by the counting engines.
struct GraphContext {
    TemporalGraph graph;
    NodeSequenceIndex sequences;
    PairEdgeIndex pairs;

    static GraphContext build(TemporalGraph g) {
        NodeSequenceIndex seq(g);
        PairEdgeIndex pairs(g);
        return {std::move(g), std::move(seq), std::move(pairs)};
    }
};

}  // namespace tmotif
