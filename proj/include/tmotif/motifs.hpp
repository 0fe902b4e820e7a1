#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmotif/types.hpp"

namespace tmotif {

// Star sub-type, keyed to the time position of the isolated edge (the one
// incident to the neighbor the other two edges do not touch).
enum class StarType : std::uint8_t {
    isolated_first = 0,
    isolated_second = 1,
    isolated_third = 2,
};

// Triangle sub-type, keyed to the time position of the closing edge (the one
// not incident to the center).
enum class TriangleType : std::uint8_t {
    closing_first = 0,
    closing_middle = 1,
    closing_last = 2,
};

enum class TriangleMode : std::uint8_t {
    count_all = 0,  // every instance counted 3x, divided at merge
    removal = 1,    // centers masked out after processing; single worker only
};

std::string_view triangle_mode_name(TriangleMode mode);

// Canonical label-free identifier of a motif class: the three edges as
// (src, dst) label pairs with labels in {1,2,3} assigned by first appearance
// scanning edges in chronological order, src before dst. Serialized "12|23|32".
class MotifSignature {
public:
    MotifSignature() : text_{'1', '2', '|', '1', '2', '|', '1', '2'} {}

    static MotifSignature from_labels(const std::array<std::uint8_t, 6>& labels);
    static MotifSignature from_string(std::string_view s);

    std::string_view str() const { return {text_.data(), text_.size()}; }
    std::string to_string() const { return std::string(str()); }

    enum class Category { pair, star, triangle };
    Category category() const;

    auto operator<=>(const MotifSignature&) const = default;

private:
    std::array<char, 8> text_;
};

// Relabels the chronologically ordered edge triple by first appearance and
// serializes it. Throws ClassificationError on self-loop edges or more than
// three distinct nodes (either one breaks the 2-or-3-node connected pattern).
MotifSignature canonical_signature(
    const std::array<std::pair<NodeId, NodeId>, 3>& edges);

// Fixed-shape counter arrays. Cell layout is (type, dir1, dir2, dir3) for the
// quadruple counters and (dir1, dir2, dir3) for the pair counter. Counters
// form a commutative monoid under cell-wise checked addition.
class StarCounter {
public:
    static constexpr std::size_t cell_count = 24;

    std::uint64_t& at(StarType type, Direction d1, Direction d2, Direction d3) {
        return cells_[index(type, d1, d2, d3)];
    }
    std::uint64_t at(StarType type, Direction d1, Direction d2, Direction d3) const {
        return cells_[index(type, d1, d2, d3)];
    }
    void add(const StarCounter& other);
    std::span<const std::uint64_t> cells() const { return cells_; }
    bool operator==(const StarCounter&) const = default;

    static std::size_t index(StarType type, Direction d1, Direction d2, Direction d3) {
        return ((static_cast<std::size_t>(type) * 2 + static_cast<std::size_t>(d1)) * 2 +
                static_cast<std::size_t>(d2)) * 2 +
               static_cast<std::size_t>(d3);
    }

private:
    std::array<std::uint64_t, cell_count> cells_{};
};

class PairCounter {
public:
    static constexpr std::size_t cell_count = 8;

    std::uint64_t& at(Direction d1, Direction d2, Direction d3) {
        return cells_[index(d1, d2, d3)];
    }
    std::uint64_t at(Direction d1, Direction d2, Direction d3) const {
        return cells_[index(d1, d2, d3)];
    }
    void add(const PairCounter& other);
    std::span<const std::uint64_t> cells() const { return cells_; }
    bool operator==(const PairCounter&) const = default;

    static std::size_t index(Direction d1, Direction d2, Direction d3) {
        return (static_cast<std::size_t>(d1) * 2 + static_cast<std::size_t>(d2)) * 2 +
               static_cast<std::size_t>(d3);
    }

private:
    std::array<std::uint64_t, cell_count> cells_{};
};

class TriCounter {
public:
    static constexpr std::size_t cell_count = 24;

    std::uint64_t& at(TriangleType type, Direction di, Direction dj, Direction dk) {
        return cells_[index(type, di, dj, dk)];
    }
    std::uint64_t at(TriangleType type, Direction di, Direction dj, Direction dk) const {
        return cells_[index(type, di, dj, dk)];
    }
    void add(const TriCounter& other);
    std::span<const std::uint64_t> cells() const { return cells_; }
    bool operator==(const TriCounter&) const = default;

    static std::size_t index(TriangleType type, Direction di, Direction dj, Direction dk) {
        return ((static_cast<std::size_t>(type) * 2 + static_cast<std::size_t>(di)) * 2 +
                static_cast<std::size_t>(dj)) * 2 +
               static_cast<std::size_t>(dk);
    }

private:
    std::array<std::uint64_t, cell_count> cells_{};
};

// Representative-pattern signature of one counter cell.
//
// Star cells: the two non-isolated edges join the center to one neighbor, the
// isolated edge (at the position named by the type) joins it to another;
// directions are relative to the center. Injective over the 24 cells.
MotifSignature star_cell_signature(StarType type, Direction d1, Direction d2,
                                   Direction d3);

// Pair cells: three edges between the same two nodes, directions relative to
// one endpoint. Complementary cells map to the same signature; image size 4.
MotifSignature pair_cell_signature(Direction d1, Direction d2, Direction d3);

// Triangle cells: center u with edges to v (earlier) and w, the closing edge
// between v and w placed in time by the type, its direction relative to v.
// The 24 cells map onto 8 signatures with fibers of size 3.
MotifSignature tri_cell_signature(TriangleType type, Direction di, Direction dj,
                                  Direction dk);

// The 36 valid signatures (4 pair, 24 star, 8 triangle) in lexicographic
// order of their serialized form.
std::span<const MotifSignature> all_signatures();

// Index of `sig` within all_signatures(); nullopt if not a valid signature.
std::optional<std::size_t> signature_index(const MotifSignature& sig);

// M_ij label for the signatures with textual anchors; other signatures label
// as themselves.
std::string label_for_signature(const MotifSignature& sig);

struct CensusMeta {
    std::string input;
    std::size_t edge_count = 0;
    std::string triangle_mode;
    unsigned workers = 0;
};

// Final signature -> count map over the full 36-signature domain.
class MotifCensus {
public:
    MotifCensus() = default;

    std::uint64_t count(const MotifSignature& sig) const;
    std::uint64_t count_at(std::size_t index) const { return counts_[index]; }
    void set_count(const MotifSignature& sig, std::uint64_t value);
    void add_count(const MotifSignature& sig, std::uint64_t value);

    std::uint64_t total() const;

    Timestamp delta = 0;
    CensusMeta meta;

    bool same_counts(const MotifCensus& other) const { return counts_ == other.counts_; }
    bool operator==(const MotifCensus&) const = default;

private:
    std::array<std::uint64_t, 36> counts_{};
};

// Folds the raw counters into the 36-signature census: star cells map 1:1,
// each pair class takes the value of one representative cell (its complement
// must agree), each triangle class takes sum/3 in count_all mode or the plain
// sum in removal mode. Throws ConsistencyError on unequal complementary pair
// cells or a class sum not divisible by three.
MotifCensus merge_census(const StarCounter& star, const PairCounter& pair,
                         const TriCounter& tri, TriangleMode tri_mode);

}  // namespace tmotif
