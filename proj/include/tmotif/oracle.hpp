#pragma once

#include <array>
#include <vector>

#include "tmotif/graph.hpp"
#include "tmotif/motifs.hpp"

namespace tmotif {

// One enumerated motif instance: the three edges by ordinal, ascending in the
// (t, ordinal) total order, plus the canonical signature of the triple.
struct InstanceRecord {
    std::array<Ordinal, 3> ordinals;
    MotifSignature signature;
};

// Brute-force enumeration of every 3-combination of edges, taken in
// (t, ordinal) order, whose raw-timestamp span is at most delta and whose
// induced static graph is connected on 2 or 3 nodes. Each combination is
// emitted exactly once; a sliding window over the globally time-sorted edge
// list bounds the search. Intentionally simple and sequential; this is the
// ground truth the engines are checked against.
std::vector<InstanceRecord> enumerate_instances(const TemporalGraph& graph,
                                                Timestamp delta);

// Tally of enumerate_instances over the full 36-signature domain.
MotifCensus oracle_census(const TemporalGraph& graph, Timestamp delta);

// Default cap on oracle input size; callers may override explicitly.
inline constexpr std::size_t oracle_default_max_edges = 5000;

}  // namespace tmotif
