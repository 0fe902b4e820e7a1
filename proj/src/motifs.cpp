#include "tmotif/motifs.hpp"

#include <algorithm>
#include <set>

namespace tmotif {

std::string_view triangle_mode_name(TriangleMode mode) {
    return mode == TriangleMode::count_all ? "countall" : "removal";
}

MotifSignature MotifSignature::from_labels(const std::array<std::uint8_t, 6>& labels) {
    MotifSignature sig;
    for (std::size_t e = 0; e < 3; ++e) {
        sig.text_[3 * e] = static_cast<char>('0' + labels[2 * e]);
        sig.text_[3 * e + 1] = static_cast<char>('0' + labels[2 * e + 1]);
        if (e < 2) sig.text_[3 * e + 2] = '|';
    }
    return sig;
}

MotifSignature MotifSignature::from_string(std::string_view s) {
    if (s.size() != 8 || s[2] != '|' || s[5] != '|') {
        throw ClassificationError("malformed signature: " + std::string(s));
    }
    std::array<std::uint8_t, 6> labels{};
    static constexpr std::size_t positions[6] = {0, 1, 3, 4, 6, 7};
    for (std::size_t i = 0; i < 6; ++i) {
        char c = s[positions[i]];
        if (c < '1' || c > '3') {
            throw ClassificationError("malformed signature: " + std::string(s));
        }
        labels[i] = static_cast<std::uint8_t>(c - '0');
    }
    return from_labels(labels);
}

MotifSignature::Category MotifSignature::category() const {
    std::uint8_t max_label = 0;
    for (std::size_t i : {0, 1, 3, 4, 6, 7}) {
        max_label = std::max<std::uint8_t>(max_label, static_cast<std::uint8_t>(text_[i] - '0'));
    }
    if (max_label == 2) return Category::pair;

    // Triangle iff the three edges cover three distinct unordered label pairs.
    std::set<std::pair<char, char>> pairs;
    for (std::size_t e = 0; e < 3; ++e) {
        char a = text_[3 * e];
        char b = text_[3 * e + 1];
        pairs.insert(std::minmax(a, b));
    }
    return pairs.size() == 3 ? Category::triangle : Category::star;
}

MotifSignature canonical_signature(
    const std::array<std::pair<NodeId, NodeId>, 3>& edges) {
    std::array<NodeId, 3> seen{};
    std::size_t distinct = 0;
    std::array<std::uint8_t, 6> labels{};

    auto label_of = [&](NodeId node) -> std::uint8_t {
        for (std::size_t i = 0; i < distinct; ++i) {
            if (seen[i] == node) return static_cast<std::uint8_t>(i + 1);
        }
        if (distinct == 3) {
            throw ClassificationError("edge triple spans more than 3 nodes");
        }
        seen[distinct++] = node;
        return static_cast<std::uint8_t>(distinct);
    };

    for (std::size_t e = 0; e < 3; ++e) {
        if (edges[e].first == edges[e].second) {
            throw ClassificationError("self-loop edge in triple");
        }
        labels[2 * e] = label_of(edges[e].first);
        labels[2 * e + 1] = label_of(edges[e].second);
    }
    // No self-loops and at most 3 nodes, where each node occurs in some edge:
    // the induced static graph is necessarily connected on 2 or 3 nodes.
    return MotifSignature::from_labels(labels);
}

namespace {

using EdgeTriple = std::array<std::pair<NodeId, NodeId>, 3>;

std::pair<NodeId, NodeId> oriented(Direction d, NodeId from, NodeId to) {
    return d == Direction::outward ? std::pair{from, to} : std::pair{to, from};
}

constexpr std::array<Direction, 2> both_dirs = {Direction::outward, Direction::inward};

}  // namespace

MotifSignature star_cell_signature(StarType type, Direction d1, Direction d2,
                                   Direction d3) {
    constexpr NodeId center = 0, shared = 1, isolated = 2;
    const auto iso_pos = static_cast<std::size_t>(type);
    const std::array<Direction, 3> dirs = {d1, d2, d3};
    EdgeTriple triple;
    for (std::size_t pos = 0; pos < 3; ++pos) {
        triple[pos] = oriented(dirs[pos], center, pos == iso_pos ? isolated : shared);
    }
    return canonical_signature(triple);
}

MotifSignature pair_cell_signature(Direction d1, Direction d2, Direction d3) {
    constexpr NodeId u = 0, w = 1;
    return canonical_signature(
        {oriented(d1, u, w), oriented(d2, u, w), oriented(d3, u, w)});
}

MotifSignature tri_cell_signature(TriangleType type, Direction di, Direction dj,
                                  Direction dk) {
    constexpr NodeId u = 0, v = 1, w = 2;
    const auto edge_i = oriented(di, u, v);
    const auto edge_j = oriented(dj, u, w);
    const auto edge_k = oriented(dk, v, w);
    switch (type) {
        case TriangleType::closing_first:
            return canonical_signature({edge_k, edge_i, edge_j});
        case TriangleType::closing_middle:
            return canonical_signature({edge_i, edge_k, edge_j});
        case TriangleType::closing_last:
            return canonical_signature({edge_i, edge_j, edge_k});
    }
    throw ClassificationError("invalid triangle type");
}

void StarCounter::add(const StarCounter& other) {
    for (std::size_t i = 0; i < cell_count; ++i) {
        checked_increment(cells_[i], other.cells_[i]);
    }
}

void PairCounter::add(const PairCounter& other) {
    for (std::size_t i = 0; i < cell_count; ++i) {
        checked_increment(cells_[i], other.cells_[i]);
    }
}

void TriCounter::add(const TriCounter& other) {
    for (std::size_t i = 0; i < cell_count; ++i) {
        checked_increment(cells_[i], other.cells_[i]);
    }
}

namespace {

struct SignatureUniverse {
    std::array<MotifSignature, 36> all;
    std::array<MotifSignature, StarCounter::cell_count> star_by_cell;
    std::array<MotifSignature, PairCounter::cell_count> pair_by_cell;
    std::array<MotifSignature, TriCounter::cell_count> tri_by_cell;
};

const SignatureUniverse& universe() {
    static const SignatureUniverse u = [] {
        SignatureUniverse out;
        std::set<MotifSignature> distinct;
        for (StarType type : {StarType::isolated_first, StarType::isolated_second,
                              StarType::isolated_third}) {
            for (Direction d1 : both_dirs)
                for (Direction d2 : both_dirs)
                    for (Direction d3 : both_dirs) {
                        MotifSignature sig = star_cell_signature(type, d1, d2, d3);
                        out.star_by_cell[StarCounter::index(type, d1, d2, d3)] = sig;
                        distinct.insert(sig);
                    }
        }
        for (Direction d1 : both_dirs)
            for (Direction d2 : both_dirs)
                for (Direction d3 : both_dirs) {
                    MotifSignature sig = pair_cell_signature(d1, d2, d3);
                    out.pair_by_cell[PairCounter::index(d1, d2, d3)] = sig;
                    distinct.insert(sig);
                }
        for (TriangleType type : {TriangleType::closing_first, TriangleType::closing_middle,
                                  TriangleType::closing_last}) {
            for (Direction di : both_dirs)
                for (Direction dj : both_dirs)
                    for (Direction dk : both_dirs) {
                        MotifSignature sig = tri_cell_signature(type, di, dj, dk);
                        out.tri_by_cell[TriCounter::index(type, di, dj, dk)] = sig;
                        distinct.insert(sig);
                    }
        }
        if (distinct.size() != 36) {
            throw ConsistencyError("signature universe is not 36 classes");
        }
        std::copy(distinct.begin(), distinct.end(), out.all.begin());
        return out;
    }();
    return u;
}

}  // namespace

std::span<const MotifSignature> all_signatures() { return universe().all; }

std::optional<std::size_t> signature_index(const MotifSignature& sig) {
    const auto& all = universe().all;
    auto it = std::lower_bound(all.begin(), all.end(), sig);
    if (it == all.end() || *it != sig) return std::nullopt;
    return static_cast<std::size_t>(it - all.begin());
}

std::string label_for_signature(const MotifSignature& sig) {
    // Anchored M_ij names; everything else labels as its own signature. The
    // M_66 entry is inferred by elimination among the pair classes.
    static const std::map<std::string, std::string, std::less<>> anchors = {
        {"12|23|32", "M_24"}, {"12|31|23", "M_25"}, {"12|23|31", "M_26"},
        {"12|32|31", "M_46"}, {"12|12|12", "M_55"}, {"12|21|21", "M_56"},
        {"12|12|31", "M_63"}, {"12|21|12", "M_65"}, {"12|12|21", "M_66"},
    };
    auto it = anchors.find(sig.str());
    return it != anchors.end() ? it->second : sig.to_string();
}

std::uint64_t MotifCensus::count(const MotifSignature& sig) const {
    auto idx = signature_index(sig);
    if (!idx) throw ClassificationError("unknown signature: " + sig.to_string());
    return counts_[*idx];
}

void MotifCensus::set_count(const MotifSignature& sig, std::uint64_t value) {
    auto idx = signature_index(sig);
    if (!idx) throw ClassificationError("unknown signature: " + sig.to_string());
    counts_[*idx] = value;
}

void MotifCensus::add_count(const MotifSignature& sig, std::uint64_t value) {
    auto idx = signature_index(sig);
    if (!idx) throw ClassificationError("unknown signature: " + sig.to_string());
    checked_increment(counts_[*idx], value);
}

std::uint64_t MotifCensus::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) checked_increment(sum, c);
    return sum;
}

MotifCensus merge_census(const StarCounter& star, const PairCounter& pair,
                         const TriCounter& tri, TriangleMode tri_mode) {
    const SignatureUniverse& u = universe();
    MotifCensus census;

    for (std::size_t i = 0; i < StarCounter::cell_count; ++i) {
        census.add_count(u.star_by_cell[i], star.cells()[i]);
    }

    // Each pair instance lands once per endpoint in complementary cells, so
    // one representative cell already equals the instance count.
    for (Direction d1 : both_dirs)
        for (Direction d2 : both_dirs)
            for (Direction d3 : both_dirs) {
                if (d1 == Direction::inward) continue;  // one cell per complement pair
                std::uint64_t a = pair.at(d1, d2, d3);
                std::uint64_t b = pair.at(complement(d1), complement(d2), complement(d3));
                if (a != b) {
                    throw ConsistencyError("complementary pair cells disagree for " +
                                           pair_cell_signature(d1, d2, d3).to_string());
                }
                census.add_count(u.pair_by_cell[PairCounter::index(d1, d2, d3)], a);
            }

    std::map<MotifSignature, std::uint64_t> tri_sums;
    for (std::size_t i = 0; i < TriCounter::cell_count; ++i) {
        checked_increment(tri_sums[u.tri_by_cell[i]], tri.cells()[i]);
    }
    for (const auto& [sig, sum] : tri_sums) {
        if (tri_mode == TriangleMode::count_all) {
            if (sum % 3 != 0) {
                throw ConsistencyError("triangle class sum not divisible by 3 for " +
                                       sig.to_string());
            }
            census.add_count(sig, sum / 3);
        } else {
            census.add_count(sig, sum);
        }
    }
    return census;
}

}  // namespace tmotif
