#include "tmotif/triangle_engine.hpp"

#include <algorithm>

namespace tmotif {

namespace {

// Strict (t, ordinal) order between a closing-edge record and an incident edge.
bool before(Timestamp t, Ordinal ord, const IncidentEdge& e) {
    return t != e.t ? t < e.t : ord < e.ordinal;
}

bool after(Timestamp t, Ordinal ord, const IncidentEdge& e) {
    return t != e.t ? t > e.t : ord > e.ordinal;
}

}  // namespace

TriCounter count_triangles_at_center(const NodeSequenceIndex& sequences,
                                     const PairEdgeIndex& pairs, NodeId u,
                                     Timestamp delta, IndexRange first_edges,
                                     const std::vector<std::uint8_t>* live) {
    TriCounter counter;
    const std::span<const IncidentEdge> seq = sequences.sequence(u);
    const std::size_t s = seq.size();
    if (s < 2 || first_edges.empty()) return counter;

    const std::size_t begin = first_edges.begin;
    const std::size_t end = std::min(first_edges.end, full_triangle_range(s).end);

    for (std::size_t i = begin; i < end; ++i) {
        const IncidentEdge& ei = seq[i];
        if (live && !(*live)[ei.other]) continue;
        const Timestamp horizon = sat_add(ei.t, delta);

        for (std::size_t j = i + 1; j < s; ++j) {
            const IncidentEdge& ej = seq[j];
            if (ej.t > horizon) break;
            if (ej.other == ei.other) continue;
            if (live && !(*live)[ej.other]) continue;

            const NodeId v = ei.other;
            const NodeId w = ej.other;
            const auto win = pairs.window(v, w, sat_sub(ej.t, delta), horizon);
            for (const PairEdgeRecord& rec : win.records) {
                const Direction dk =
                    win.v_is_min ? rec.dir_rel_min : complement(rec.dir_rel_min);
                TriangleType type;
                if (before(rec.t, rec.ordinal, ei)) {
                    type = TriangleType::closing_first;
                } else if (after(rec.t, rec.ordinal, ej)) {
                    type = TriangleType::closing_last;
                } else {
                    type = TriangleType::closing_middle;
                }
                checked_increment(counter.at(type, ei.dir, ej.dir, dk), 1);
            }
        }
    }
    return counter;
}

TriCounter count_triangles(const NodeSequenceIndex& sequences,
                           const PairEdgeIndex& pairs, Timestamp delta,
                           TriangleMode mode) {
    TriCounter total;
    const std::size_t n = sequences.node_count();
    if (mode == TriangleMode::count_all) {
        for (NodeId u = 0; u < n; ++u) {
            total.add(count_triangles_at_center(
                sequences, pairs, u, delta, full_triangle_range(sequences.degree(u))));
        }
        return total;
    }
    std::vector<std::uint8_t> alive(n, 1);
    for (NodeId u = 0; u < n; ++u) {
        total.add(count_triangles_at_center(sequences, pairs, u, delta,
                                            full_triangle_range(sequences.degree(u)),
                                            &alive));
        alive[u] = 0;
    }
    return total;
}

}  // namespace tmotif
