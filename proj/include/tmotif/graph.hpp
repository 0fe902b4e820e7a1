#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmotif/types.hpp"

namespace tmotif {

struct TemporalEdge {
    NodeId src = 0;
    NodeId dst = 0;
    Timestamp t = 0;
    Ordinal ordinal = 0;

    bool operator==(const TemporalEdge&) const = default;
};

// Immutable directed temporal multigraph. Nodes carry dense 0-based indices;
// edges are sorted by the total order (t, ordinal), where ordinal is the
// ingestion index. Self-loops are rejected at construction.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // `node_ids[i]` is the external id of node index i; `edges` are taken in
    // ingestion order (ordinals assigned 0..m-1 before sorting).
    struct RawEdge {
        NodeId src;
        NodeId dst;
        Timestamp t;
    };
    static TemporalGraph build(std::vector<std::string> node_ids,
                               const std::vector<RawEdge>& edges,
                               std::size_t dropped_self_loops = 0);

    std::size_t node_count() const { return node_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const TemporalEdge> edges() const { return edges_; }
    const TemporalEdge& edge(std::size_t i) const { return edges_[i]; }

    const std::string& node_id(NodeId u) const { return node_ids_[u]; }
    std::optional<NodeId> find_node(std::string_view external_id) const;

    std::size_t dropped_self_loops() const { return dropped_self_loops_; }

    // Total degree (in + out, multi-edges counted) per node.
    std::vector<std::size_t> degrees() const;

private:
    std::vector<TemporalEdge> edges_;
    std::vector<std::string> node_ids_;
    std::unordered_map<std::string, NodeId> index_of_;
    std::size_t dropped_self_loops_ = 0;
};

struct ParseOptions {
    bool drop_self_loops = true;
};

// Parses whitespace-separated "SRC DST T" lines. '#'-prefixed and blank lines
// are skipped, tokens past the third are ignored, CRLF is accepted. Node ids
// are arbitrary tokens, mapped to dense indices in order of first appearance
// among retained edges. Throws ParseError (with line number) on malformed
// timestamps, short lines, or self-loops when dropping is disabled.
TemporalGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});

TemporalGraph load_edge_list(const std::string& path, const ParseOptions& options = {});

// Deterministic synthetic graph: endpoints uniform over ordered pairs without
// self-loops, timestamps uniform in [0, t_max]. Node ids are decimal strings.
// Requires nodes >= 2 when edge_count > 0.
TemporalGraph generate_random_graph(std::size_t nodes, std::size_t edge_count,
                                    Timestamp t_max, std::uint64_t seed);

void write_edge_list(std::ostream& out, const TemporalGraph& graph);

}  // namespace tmotif
