#pragma once

#include <array>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/graph.hpp"
#include "tmotif/indexes.hpp"
#include "tmotif/motifs.hpp"
#include "tmotif/oracle.hpp"

namespace tmotif::testutil {

inline std::string data_path(const std::string& name) {
    return std::string(TMOTIF_TEST_DATA_DIR) + "/" + name;
}

inline TemporalGraph load_toy() { return load_edge_list(data_path("toy.txt")); }

struct Triple {
    std::string src;
    std::string dst;
    Timestamp t;
};

// Builds a graph from external-id triples, interning ids by first appearance
// (same rule as the parser).
inline TemporalGraph make_graph(const std::vector<Triple>& triples) {
    std::vector<std::string> ids;
    std::vector<TemporalGraph::RawEdge> edges;
    auto intern = [&](const std::string& name) -> NodeId {
        for (NodeId u = 0; u < ids.size(); ++u) {
            if (ids[u] == name) return u;
        }
        ids.push_back(name);
        return static_cast<NodeId>(ids.size() - 1);
    };
    for (const Triple& tr : triples) {
        NodeId s = intern(tr.src);
        NodeId d = intern(tr.dst);
        edges.push_back({s, d, tr.t});
    }
    return TemporalGraph::build(std::move(ids), edges);
}

inline MotifSignature sig(const char* s) { return MotifSignature::from_string(s); }

// Independent per-center star/pair oracle: enumerate all position triples of
// S_u within the raw-timestamp window and classify by which neighbor repeats.
struct CenterStarExpectation {
    StarCounter star;
    PairCounter pair;
};

inline CenterStarExpectation brute_star_pair_at_center(const NodeSequenceIndex& index,
                                                       NodeId u, Timestamp delta) {
    CenterStarExpectation out;
    auto seq = index.sequence(u);
    const std::size_t s = seq.size();
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = a + 1; b < s; ++b) {
            for (std::size_t c = b + 1; c < s; ++c) {
                if (seq[c].t - seq[a].t > delta) continue;
                NodeId x1 = seq[a].other, x2 = seq[b].other, x3 = seq[c].other;
                Direction d1 = seq[a].dir, d2 = seq[b].dir, d3 = seq[c].dir;
                if (x1 == x2 && x2 == x3) {
                    ++out.pair.at(d1, d2, d3);
                } else if (x1 == x2) {
                    ++out.star.at(StarType::isolated_third, d1, d2, d3);
                } else if (x1 == x3) {
                    ++out.star.at(StarType::isolated_second, d1, d2, d3);
                } else if (x2 == x3) {
                    ++out.star.at(StarType::isolated_first, d1, d2, d3);
                }
            }
        }
    }
    return out;
}

// Expected per-center triangle counter, derived from the brute-force instance
// enumeration: each triangle instance containing `center` is mapped to the
// cell seen from that vertex.
inline TriCounter tri_counter_from_oracle(const TemporalGraph& graph, Timestamp delta,
                                          NodeId center) {
    std::vector<const TemporalEdge*> by_ordinal(graph.edge_count());
    for (const TemporalEdge& e : graph.edges()) by_ordinal[e.ordinal] = &e;

    TriCounter out;
    for (const InstanceRecord& inst : enumerate_instances(graph, delta)) {
        if (inst.signature.category() != MotifSignature::Category::triangle) continue;
        const TemporalEdge* edges[3] = {by_ordinal[inst.ordinals[0]],
                                        by_ordinal[inst.ordinals[1]],
                                        by_ordinal[inst.ordinals[2]]};
        int closing = -1;
        int incident[2];
        int found = 0;
        for (int k = 0; k < 3; ++k) {
            if (edges[k]->src == center || edges[k]->dst == center) {
                incident[found++] = k;
            } else {
                closing = k;
            }
        }
        if (found != 2) continue;  // instance does not contain this center
        const TemporalEdge& ei = *edges[incident[0]];
        const TemporalEdge& ej = *edges[incident[1]];
        const TemporalEdge& ek = *edges[closing];
        TriangleType type = closing == 0   ? TriangleType::closing_first
                            : closing == 1 ? TriangleType::closing_middle
                                           : TriangleType::closing_last;
        Direction di = ei.src == center ? Direction::outward : Direction::inward;
        Direction dj = ej.src == center ? Direction::outward : Direction::inward;
        NodeId v = ei.src == center ? ei.dst : ei.src;
        Direction dk = ek.src == v ? Direction::outward : Direction::inward;
        ++out.at(type, di, dj, dk);
    }
    return out;
}

// Oracle census of the 12-edge toy graph at delta = 10, frozen from the
// enumerator and cross-checked against hand-enumerated classes.
inline const std::vector<std::pair<const char*, std::uint64_t>>& frozen_toy_census() {
    static const std::vector<std::pair<const char*, std::uint64_t>> counts = {
        {"12|12|12", 0}, {"12|12|13", 1}, {"12|12|21", 0}, {"12|12|23", 1},
        {"12|12|31", 1}, {"12|12|32", 1}, {"12|13|12", 1}, {"12|13|13", 0},
        {"12|13|21", 1}, {"12|13|23", 2}, {"12|13|31", 3}, {"12|13|32", 0},
        {"12|21|12", 1}, {"12|21|13", 0}, {"12|21|21", 0}, {"12|21|23", 0},
        {"12|21|31", 1}, {"12|21|32", 0}, {"12|23|12", 0}, {"12|23|13", 0},
        {"12|23|21", 0}, {"12|23|23", 0}, {"12|23|31", 1}, {"12|23|32", 0},
        {"12|31|12", 2}, {"12|31|13", 0}, {"12|31|21", 1}, {"12|31|23", 1},
        {"12|31|31", 0}, {"12|31|32", 2}, {"12|32|12", 2}, {"12|32|13", 0},
        {"12|32|21", 1}, {"12|32|23", 2}, {"12|32|31", 1}, {"12|32|32", 1},
    };
    return counts;
}

}  // namespace tmotif::testutil
