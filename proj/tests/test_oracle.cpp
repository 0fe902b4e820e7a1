#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "tmotif/oracle.hpp"

using namespace tmotif;
using namespace tmotif::testutil;

namespace {

// Ordinal triple of the given external-id edges, for locating an instance.
std::array<Ordinal, 3> ordinals_of(const TemporalGraph& g,
                                   const std::array<Triple, 3>& triple) {
    std::array<Ordinal, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        bool found = false;
        for (const TemporalEdge& e : g.edges()) {
            if (g.node_id(e.src) == triple[i].src && g.node_id(e.dst) == triple[i].dst &&
                e.t == triple[i].t) {
                out[i] = e.ordinal;
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    return out;
}

bool contains_instance(const std::vector<InstanceRecord>& instances,
                       const std::array<Ordinal, 3>& ordinals,
                       const MotifSignature& expected_sig) {
    return std::any_of(instances.begin(), instances.end(), [&](const InstanceRecord& r) {
        return r.ordinals == ordinals && r.signature == expected_sig;
    });
}

}  // namespace

TEST_CASE("toy enumeration contains the worked instances") {
    TemporalGraph g = load_toy();
    auto instances = enumerate_instances(g, 10);

    CHECK(contains_instance(instances,
                            ordinals_of(g, {{{"e", "c", 6}, {"d", "c", 10}, {"d", "e", 14}}}),
                            sig("12|32|31")));
    CHECK(contains_instance(instances,
                            ordinals_of(g, {{{"d", "e", 14}, {"e", "d", 18}, {"d", "e", 21}}}),
                            sig("12|21|12")));
    CHECK(contains_instance(instances,
                            ordinals_of(g, {{{"a", "c", 4}, {"a", "c", 8}, {"d", "a", 9}}}),
                            sig("12|12|31")));
}

TEST_CASE("zero delta admits no triple when timestamps are distinct") {
    TemporalGraph g = make_graph(
        {{"a", "b", 1}, {"b", "c", 2}, {"c", "a", 3}, {"a", "b", 4}, {"b", "a", 5}});
    CHECK(enumerate_instances(g, 0).empty());

    // Tied timestamps do fit a zero window.
    TemporalGraph tied = make_graph({{"a", "b", 7}, {"a", "b", 7}, {"b", "a", 7}});
    auto instances = enumerate_instances(tied, 0);
    CHECK(instances.size() == 1);
    CHECK(instances[0].signature == sig("12|12|21"));
}

TEST_CASE("three parallel edges make exactly one pair instance") {
    TemporalGraph g = make_graph({{"a", "b", 1}, {"a", "b", 2}, {"a", "b", 3}});
    MotifCensus census = oracle_census(g, 5);
    CHECK(census.count(sig("12|12|12")) == 1);
    CHECK(census.total() == 1);
}

TEST_CASE("census total equals the number of enumerated instances") {
    TemporalGraph g = generate_random_graph(20, 250, 300, 77);
    for (Timestamp delta : {1, 20, 500}) {
        CHECK(oracle_census(g, delta).total() == enumerate_instances(g, delta).size());
    }
}

TEST_CASE("census is invariant under uniform time translation") {
    TemporalGraph g = generate_random_graph(15, 200, 400, 55);
    MotifCensus base = oracle_census(g, 30);
    for (Timestamp shift : {Timestamp{1000}, Timestamp{-5000}}) {
        std::vector<Triple> shifted;
        for (const TemporalEdge& e : g.edges()) {
            shifted.push_back({g.node_id(e.src), g.node_id(e.dst), e.t + shift});
        }
        MotifCensus moved = oracle_census(make_graph(shifted), 30);
        CHECK(base.same_counts(moved));
    }
}

TEST_CASE("census ignores input line order when timestamps are distinct") {
    std::vector<Triple> edges;
    std::mt19937_64 rng(4242);
    std::vector<Timestamp> times(120);
    for (std::size_t i = 0; i < times.size(); ++i) times[i] = static_cast<Timestamp>(i * 3);
    std::shuffle(times.begin(), times.end(), rng);
    for (Timestamp t : times) {
        auto a = static_cast<NodeId>(rng() % 9);
        auto b = static_cast<NodeId>(rng() % 8);
        if (b >= a) ++b;
        edges.push_back({std::to_string(a), std::to_string(b), t});
    }
    MotifCensus base = oracle_census(make_graph(edges), 40);

    std::shuffle(edges.begin(), edges.end(), rng);
    MotifCensus shuffled = oracle_census(make_graph(edges), 40);
    CHECK(base.same_counts(shuffled));
}

TEST_CASE("toy census at delta 10 matches the frozen vector") {
    MotifCensus census = oracle_census(load_toy(), 10);
    std::uint64_t total = 0;
    for (const auto& [text, count] : frozen_toy_census()) {
        CHECK(census.count(sig(text)) == count);
        total += count;
    }
    CHECK(census.total() == total);
}
