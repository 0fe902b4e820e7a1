#pragma once

#include "tmotif/indexes.hpp"
#include "tmotif/motifs.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

// Star and pair contributions of a single center node.
struct CenterStarResult {
    StarCounter star;
    PairCounter pair;

    void add(const CenterStarResult& other) {
        star.add(other.star);
        pair.add(other.pair);
    }
};

// Counts all star and pair motif instances anchored at center u whose first
// edge position lies in `first_edges` (half-open positions into S_u).
//
// For each first edge the scan walks third-edge candidates until their raw
// timestamp leaves the delta window, keeping per-direction counts of the
// incident edges strictly between the current first and third edges, keyed by
// neighbor. A third edge back to the first edge's neighbor closes pair cells
// and isolated-second star cells; any other neighbor closes isolated-first
// (keyed to the third edge's neighbor) and isolated-third (keyed to the first
// edge's neighbor) cells. Candidates enter the counts only after being
// processed as a third edge.
//
// Pure over the immutable index; per-(center, range) calls may run
// concurrently and merge by addition.
CenterStarResult count_star_pair_at_center(const NodeSequenceIndex& sequences,
                                           NodeId u, Timestamp delta,
                                           IndexRange first_edges);

// Valid first-edge positions for a sequence of length s.
inline IndexRange full_star_range(std::size_t s) {
    return {0, s >= 3 ? s - 2 : 0};
}

// Full run over all centers. Pair cells end up complement-symmetric.
CenterStarResult count_star_pair(const NodeSequenceIndex& sequences, Timestamp delta);

}  // namespace tmotif
