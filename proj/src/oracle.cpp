#include "tmotif/oracle.hpp"

namespace tmotif {

namespace {

// Signature of an edge triple if it spans 2 or 3 distinct nodes; nullopt for
// 4+ nodes. With self-loops excluded at ingestion, any 3-edge set on at most
// 3 nodes is connected.
std::optional<MotifSignature> classify(const TemporalEdge& a, const TemporalEdge& b,
                                       const TemporalEdge& c) {
    NodeId seen[3];
    std::size_t distinct = 0;
    for (NodeId node : {a.src, a.dst, b.src, b.dst, c.src, c.dst}) {
        std::size_t k = 0;
        while (k < distinct && seen[k] != node) ++k;
        if (k == distinct) {
            if (distinct == 3) return std::nullopt;
            seen[distinct++] = node;
        }
    }
    return canonical_signature({std::pair{a.src, a.dst}, std::pair{b.src, b.dst},
                                std::pair{c.src, c.dst}});
}

// Edges are (t, ordinal)-sorted, so combinations i < j < k are already in
// chronological total order and the delta check reduces to the last edge.
template <typename Emit>
void for_each_instance(const TemporalGraph& graph, Timestamp delta, Emit&& emit) {
    const auto edges = graph.edges();
    const std::size_t m = edges.size();
    for (std::size_t i = 0; i + 2 < m; ++i) {
        const Timestamp horizon = sat_add(edges[i].t, delta);
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            if (edges[j].t > horizon) break;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (edges[k].t > horizon) break;
                auto sig = classify(edges[i], edges[j], edges[k]);
                if (sig) emit(edges[i], edges[j], edges[k], *sig);
            }
        }
    }
}

}  // namespace

std::vector<InstanceRecord> enumerate_instances(const TemporalGraph& graph,
                                                Timestamp delta) {
    std::vector<InstanceRecord> out;
    for_each_instance(graph, delta,
                      [&](const TemporalEdge& a, const TemporalEdge& b,
                          const TemporalEdge& c, const MotifSignature& sig) {
                          out.push_back({{a.ordinal, b.ordinal, c.ordinal}, sig});
                      });
    return out;
}

MotifCensus oracle_census(const TemporalGraph& graph, Timestamp delta) {
    MotifCensus census;
    for_each_instance(graph, delta,
                      [&](const TemporalEdge&, const TemporalEdge&, const TemporalEdge&,
                          const MotifSignature& sig) { census.add_count(sig, 1); });
    census.delta = delta;
    census.meta.edge_count = graph.edge_count();
    census.meta.triangle_mode = "oracle";
    census.meta.workers = 1;
    return census;
}

}  // namespace tmotif
