#pragma once

#include <vector>

#include "tmotif/indexes.hpp"
#include "tmotif/motifs.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

// Counts triangle instances whose center is u and whose earlier incident edge
// position lies in `first_edges`. For each incident pair (e_i, e_j) to two
// distinct live neighbors with t_j within delta of t_i, every inter-pair edge
// in the raw-timestamp window [t_j - delta, t_i + delta] contributes one
// increment; its cell type is the closing edge's place in the (t, ordinal)
// total order: before e_i, between, or after e_j. Closing directions are
// relative to v = e_i.other.
//
// `live` (optional) masks out removed neighbors; pass nullptr in count_all
// mode. Pure over the immutable indexes.
TriCounter count_triangles_at_center(const NodeSequenceIndex& sequences,
                                     const PairEdgeIndex& pairs, NodeId u,
                                     Timestamp delta, IndexRange first_edges,
                                     const std::vector<std::uint8_t>* live = nullptr);

// Valid earlier-incident-edge positions for a sequence of length s.
inline IndexRange full_triangle_range(std::size_t s) {
    return {0, s >= 2 ? s - 1 : 0};
}

// Full run over all centers. count_all: every instance lands 3 times, once
// per vertex viewpoint, in the 3 cells of one isomorphic class. removal:
// centers processed in ascending node order and masked out afterwards, so
// every instance lands exactly once; strictly sequential.
TriCounter count_triangles(const NodeSequenceIndex& sequences,
                           const PairEdgeIndex& pairs, Timestamp delta,
                           TriangleMode mode);

}  // namespace tmotif
