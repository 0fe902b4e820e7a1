#include "tmotif/star_engine.hpp"

#include <unordered_map>
#include <vector>

namespace tmotif {

namespace {

// Neighbor-keyed second-edge candidate counts for one center. Neighbors are
// compacted to dense slots once per call; the per-iteration maps become two
// epoch-stamped arrays, so "reinitialize empty at each first-edge iteration"
// costs O(1) and lookups need no hashing inside the hot loop.
struct CenterScratch {
    std::unordered_map<NodeId, std::uint32_t> slot_of;
    std::vector<std::uint32_t> slot_at;  // per position in S_u
    std::vector<std::uint64_t> count_in, count_out;
    std::vector<std::uint32_t> stamp_in, stamp_out;
    std::uint32_t epoch = 0;

    void prepare(std::span<const IncidentEdge> seq) {
        slot_of.clear();
        slot_at.resize(seq.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
            auto [it, inserted] =
                slot_of.emplace(seq[k].other, static_cast<std::uint32_t>(slot_of.size()));
            slot_at[k] = it->second;
        }
        count_in.assign(slot_of.size(), 0);
        count_out.assign(slot_of.size(), 0);
        stamp_in.assign(slot_of.size(), 0);
        stamp_out.assign(slot_of.size(), 0);
        epoch = 0;
    }

    void next_iteration() { ++epoch; }

    std::uint64_t get(Direction d, std::uint32_t slot) const {
        if (d == Direction::inward) {
            return stamp_in[slot] == epoch ? count_in[slot] : 0;
        }
        return stamp_out[slot] == epoch ? count_out[slot] : 0;
    }

    void bump(Direction d, std::uint32_t slot) {
        if (d == Direction::inward) {
            if (stamp_in[slot] != epoch) {
                stamp_in[slot] = epoch;
                count_in[slot] = 0;
            }
            ++count_in[slot];
        } else {
            if (stamp_out[slot] != epoch) {
                stamp_out[slot] = epoch;
                count_out[slot] = 0;
            }
            ++count_out[slot];
        }
    }
};

}  // namespace

CenterStarResult count_star_pair_at_center(const NodeSequenceIndex& sequences,
                                           NodeId u, Timestamp delta,
                                           IndexRange first_edges) {
    CenterStarResult result;
    const std::span<const IncidentEdge> seq = sequences.sequence(u);
    const std::size_t s = seq.size();
    if (s < 3 || first_edges.empty()) return result;

    thread_local CenterScratch scratch;
    scratch.prepare(seq);

    const std::size_t begin = first_edges.begin;
    const std::size_t end = std::min(first_edges.end, full_star_range(s).end);

    for (std::size_t i = begin; i < end; ++i) {
        const IncidentEdge& first = seq[i];
        const std::uint32_t first_slot = scratch.slot_at[i];
        const Timestamp horizon = sat_add(first.t, delta);
        scratch.next_iteration();
        std::uint64_t total_in = 0, total_out = 0;

        for (std::size_t j = i + 1; j < s; ++j) {
            const IncidentEdge& third = seq[j];
            if (third.t > horizon) break;
            const std::uint32_t third_slot = scratch.slot_at[j];

            if (third.other == first.other) {
                const std::uint64_t mid_in = scratch.get(Direction::inward, first_slot);
                const std::uint64_t mid_out = scratch.get(Direction::outward, first_slot);
                checked_increment(
                    result.pair.at(first.dir, Direction::inward, third.dir), mid_in);
                checked_increment(
                    result.pair.at(first.dir, Direction::outward, third.dir), mid_out);
                checked_increment(result.star.at(StarType::isolated_second, first.dir,
                                                 Direction::inward, third.dir),
                                  total_in - mid_in);
                checked_increment(result.star.at(StarType::isolated_second, first.dir,
                                                 Direction::outward, third.dir),
                                  total_out - mid_out);
            } else {
                checked_increment(result.star.at(StarType::isolated_first, first.dir,
                                                 Direction::inward, third.dir),
                                  scratch.get(Direction::inward, third_slot));
                checked_increment(result.star.at(StarType::isolated_first, first.dir,
                                                 Direction::outward, third.dir),
                                  scratch.get(Direction::outward, third_slot));
                checked_increment(result.star.at(StarType::isolated_third, first.dir,
                                                 Direction::inward, third.dir),
                                  scratch.get(Direction::inward, first_slot));
                checked_increment(result.star.at(StarType::isolated_third, first.dir,
                                                 Direction::outward, third.dir),
                                  scratch.get(Direction::outward, first_slot));
            }

            scratch.bump(third.dir, third_slot);
            if (third.dir == Direction::inward) {
                ++total_in;
            } else {
                ++total_out;
            }
        }
    }
    return result;
}

CenterStarResult count_star_pair(const NodeSequenceIndex& sequences, Timestamp delta) {
    CenterStarResult total;
    for (NodeId u = 0; u < sequences.node_count(); ++u) {
        total.add(count_star_pair_at_center(sequences, u, delta,
                                            full_star_range(sequences.degree(u))));
    }
    return total;
}

}  // namespace tmotif
