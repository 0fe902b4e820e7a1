#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tmotif {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;
using Ordinal = std::uint64_t;

// Direction of an edge relative to a reference node.
enum class Direction : std::uint8_t { outward = 0, inward = 1 };

constexpr Direction complement(Direction d) {
    return d == Direction::outward ? Direction::inward : Direction::outward;
}

constexpr char direction_char(Direction d) {
    return d == Direction::outward ? 'o' : 'i';
}

// Half-open range of positions into a node's incident-edge sequence.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end > begin ? end - begin : 0; }
    bool empty() const { return end <= begin; }
    bool operator==(const IndexRange&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CounterOverflowError : public std::runtime_error {
public:
    CounterOverflowError() : std::runtime_error("motif counter overflow") {}
};

// Violation of an internal cross-check (complementary cells unequal, class sum
// not divisible by three).
class ConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

class ClassificationError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void checked_increment(std::uint64_t& cell, std::uint64_t amount) {
    if (cell > std::numeric_limits<std::uint64_t>::max() - amount) {
        throw CounterOverflowError();
    }
    cell += amount;
}

// Saturating timestamp arithmetic; window bounds stay well-defined for any
// int64 timestamp/delta combination.
inline Timestamp sat_add(Timestamp a, Timestamp b) {
    Timestamp r;
    if (__builtin_add_overflow(a, b, &r)) {
        return b > 0 ? std::numeric_limits<Timestamp>::max()
                     : std::numeric_limits<Timestamp>::min();
    }
    return r;
}

inline Timestamp sat_sub(Timestamp a, Timestamp b) {
    Timestamp r;
    if (__builtin_sub_overflow(a, b, &r)) {
        return b < 0 ? std::numeric_limits<Timestamp>::max()
                     : std::numeric_limits<Timestamp>::min();
    }
    return r;
}

}  // namespace tmotif
