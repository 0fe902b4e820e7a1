#include "tmotif/indexes.hpp"

#include <algorithm>

namespace tmotif {

NodeSequenceIndex::NodeSequenceIndex(const TemporalGraph& graph) {
    const std::size_t n = graph.node_count();
    offsets_.assign(n + 1, 0);
    for (const TemporalEdge& e : graph.edges()) {
        ++offsets_[e.src + 1];
        ++offsets_[e.dst + 1];
    }
    for (std::size_t u = 1; u <= n; ++u) offsets_[u] += offsets_[u - 1];

    // Edges are globally (t, ordinal)-sorted, so appending in edge order keeps
    // every per-node sequence sorted too.
    incident_.resize(2 * graph.edge_count());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const TemporalEdge& e : graph.edges()) {
        incident_[fill[e.src]++] = {e.t, e.ordinal, e.dst, Direction::outward};
        incident_[fill[e.dst]++] = {e.t, e.ordinal, e.src, Direction::inward};
    }
}

PairEdgeIndex::PairEdgeIndex(const TemporalGraph& graph) {
    struct Entry {
        std::uint64_t key;
        PairEdgeRecord rec;
    };
    std::vector<Entry> entries;
    entries.reserve(graph.edge_count());
    for (const TemporalEdge& e : graph.edges()) {
        NodeId lo = std::min(e.src, e.dst);
        NodeId hi = std::max(e.src, e.dst);
        Direction d = e.src == lo ? Direction::outward : Direction::inward;
        entries.push_back({key(lo, hi), {e.t, e.ordinal, d}});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key != b.key) return a.key < b.key;
        if (a.rec.t != b.rec.t) return a.rec.t < b.rec.t;
        return a.rec.ordinal < b.rec.ordinal;
    });

    records_.reserve(entries.size());
    ranges_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].key == entries[i].key) ++j;
        ranges_.emplace(entries[i].key, Range{records_.size(), j - i});
        for (std::size_t k = i; k < j; ++k) records_.push_back(entries[k].rec);
        i = j;
    }
}

PairEdgeIndex::Window PairEdgeIndex::window(NodeId v, NodeId w, Timestamp lo,
                                            Timestamp hi) const {
    NodeId a = std::min(v, w);
    NodeId b = std::max(v, w);
    auto it = ranges_.find(key(a, b));
    if (it == ranges_.end()) return {{}, v == a};

    const PairEdgeRecord* first = records_.data() + it->second.offset;
    const PairEdgeRecord* last = first + it->second.length;
    auto begin = std::lower_bound(first, last, lo,
                                  [](const PairEdgeRecord& r, Timestamp t) { return r.t < t; });
    auto end = std::upper_bound(begin, last, hi,
                                [](Timestamp t, const PairEdgeRecord& r) { return t < r.t; });
    return {{begin, static_cast<std::size_t>(end - begin)}, v == a};
}

std::vector<PairWindowRecord> PairEdgeIndex::edges_in_window(NodeId v, NodeId w,
                                                             Timestamp lo,
                                                             Timestamp hi) const {
    Window win = window(v, w, lo, hi);
    std::vector<PairWindowRecord> out;
    out.reserve(win.records.size());
    for (const PairEdgeRecord& r : win.records) {
        Direction d = win.v_is_min ? r.dir_rel_min : complement(r.dir_rel_min);
        out.push_back({r.t, r.ordinal, d});
    }
    return out;
}

}  // namespace tmotif
