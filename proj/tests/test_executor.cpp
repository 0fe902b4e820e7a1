#include <doctest.h>

#include <limits>
#include <numeric>

#include "test_util.hpp"
#include "tmotif/executor.hpp"
#include "tmotif/oracle.hpp"
#include "tmotif/star_engine.hpp"
#include "tmotif/triangle_engine.hpp"

using namespace tmotif;
using namespace tmotif::testutil;

namespace {

constexpr std::size_t no_sharding = std::numeric_limits<std::size_t>::max();

// Hub-and-spoke graph: node "h" with `spokes` incident edges.
TemporalGraph hub_graph(std::size_t spokes) {
    std::vector<Triple> edges;
    edges.reserve(spokes);
    for (std::size_t i = 0; i < spokes; ++i) {
        edges.push_back({"h", "s" + std::to_string(i % (spokes / 2 + 1)),
                         static_cast<Timestamp>(i)});
    }
    return make_graph(edges);
}

}  // namespace

TEST_CASE("auto threshold is the 20th-highest degree") {
    // 25 chains of parallel edges give node "n<k>" degree k+1.
    std::vector<Triple> edges;
    for (int k = 0; k < 25; ++k) {
        for (int e = 0; e <= k; ++e) {
            edges.push_back({"n" + std::to_string(k), "peer", 1});
        }
    }
    TemporalGraph g = make_graph(edges);
    // Degrees: peer = 325, n24..n0 = 25..1; 20th highest is n6 with 7.
    CHECK(auto_degree_threshold(g) == 7);
}

TEST_CASE("auto threshold falls back to the max degree on small graphs") {
    TemporalGraph toy = load_toy();
    CHECK(auto_degree_threshold(toy) == 7);  // degree of d; heavy set stays empty

    MotifFilter all;
    SchedulePlan plan = plan_schedule(toy, auto_degree_threshold(toy), 4096, all);
    CHECK(plan.heavy.empty());
    CHECK(plan.light.size() == toy.node_count());
}

TEST_CASE("auto threshold on a regular graph marks nobody heavy") {
    std::vector<Triple> ring;
    for (int i = 0; i < 30; ++i) {
        ring.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % 30),
                        static_cast<Timestamp>(i)});
    }
    TemporalGraph g = make_graph(ring);
    std::size_t thr = auto_degree_threshold(g);
    CHECK(thr == 2);
    SchedulePlan plan = plan_schedule(g, thr, 4096, {});
    CHECK(plan.heavy.empty());
}

TEST_CASE("empty graph has threshold zero") {
    TemporalGraph g;
    CHECK(auto_degree_threshold(g) == 0);
}

TEST_CASE("plan: infinite threshold makes every node light") {
    TemporalGraph g = generate_random_graph(40, 400, 100, 2);
    SchedulePlan plan = plan_schedule(g, no_sharding, 4096, {});
    CHECK(plan.heavy.empty());
    CHECK(plan.light.size() == 40);
}

TEST_CASE("plan: threshold 0 with shard target 1 gives singleton shards") {
    TemporalGraph g = load_toy();
    NodeSequenceIndex seq(g);
    SchedulePlan plan = plan_schedule(g, 0, 1, {});
    CHECK(plan.light.empty());
    REQUIRE(plan.heavy.size() == g.node_count());
    for (const auto& heavy : plan.heavy) {
        const IndexRange full = full_star_range(seq.degree(heavy.node));
        CHECK(heavy.shards.size() == full.size());
        for (std::size_t k = 0; k < heavy.shards.size(); ++k) {
            CHECK(heavy.shards[k].begin == full.begin + k);
            CHECK(heavy.shards[k].size() == 1);
        }
    }
}

TEST_CASE("plan: a 10000-degree hub with target 1024 gets 10 covering shards") {
    TemporalGraph g = hub_graph(10000);
    const NodeId h = *g.find_node("h");
    SchedulePlan plan = plan_schedule(g, 9999, 1024, {});
    REQUIRE(plan.heavy.size() == 1);
    CHECK(plan.heavy[0].node == h);
    const auto& shards = plan.heavy[0].shards;
    REQUIRE(shards.size() == 10);
    std::size_t covered = 0;
    for (std::size_t k = 0; k < shards.size(); ++k) {
        CHECK(shards[k].size() <= 1024);
        covered += shards[k].size();
        if (k > 0) CHECK(shards[k].begin == shards[k - 1].end);  // disjoint, contiguous
    }
    CHECK(shards.front().begin == 0);
    CHECK(shards.back().end == 9998);
    CHECK(covered == 9998);
}

TEST_CASE("run_parallel equals the sequential composition and the oracle") {
    GraphContext ctx = GraphContext::build(load_toy());
    MotifCensus oracle = oracle_census(ctx.graph, 10);

    CenterStarResult sp = count_star_pair(ctx.sequences, 10);
    TriCounter tri =
        count_triangles(ctx.sequences, ctx.pairs, 10, TriangleMode::count_all);
    MotifCensus sequential = merge_census(sp.star, sp.pair, tri, TriangleMode::count_all);
    CHECK(sequential.same_counts(oracle));

    for (unsigned workers : {1u, 2u, 4u}) {
        for (std::size_t thr : {std::size_t{0}, auto_degree_threshold(ctx.graph),
                                no_sharding}) {
            RunConfig config;
            config.delta = 10;
            config.workers = workers;
            config.degree_threshold = thr;
            MotifCensus census = run_parallel(ctx, config);
            CHECK(census.same_counts(oracle));
        }
    }
}

TEST_CASE("census is identical across thresholds on a random graph") {
    GraphContext ctx = GraphContext::build(generate_random_graph(50, 500, 1000, 7));
    RunConfig config;
    config.delta = 100;
    config.workers = 2;

    config.degree_threshold = std::size_t{0};
    MotifCensus a = run_parallel(ctx, config);
    config.degree_threshold = std::nullopt;  // auto
    MotifCensus b = run_parallel(ctx, config);
    config.degree_threshold = no_sharding;
    MotifCensus c = run_parallel(ctx, config);
    CHECK(a.same_counts(b));
    CHECK(b.same_counts(c));
    CHECK(a.same_counts(oracle_census(ctx.graph, 100)));
}

TEST_CASE("tiny shard targets still cover the triangle tail position") {
    GraphContext ctx = GraphContext::build(generate_random_graph(6, 300, 200, 13));
    MotifCensus oracle = oracle_census(ctx.graph, 50);
    for (std::size_t shard_target : {1, 2, 7, 64}) {
        RunConfig config;
        config.delta = 50;
        config.workers = 3;
        config.degree_threshold = std::size_t{0};
        config.shard_target = shard_target;
        config.light_batch = 1;
        MotifCensus census = run_parallel(ctx, config);
        CHECK(census.same_counts(oracle));
    }
}

TEST_CASE("removal mode refuses multiple workers") {
    GraphContext ctx = GraphContext::build(load_toy());
    RunConfig config;
    config.delta = 10;
    config.workers = 4;
    config.triangle_mode = TriangleMode::removal;
    CHECK_THROWS_AS(run_parallel(ctx, config), ConfigError);

    config.workers = 1;
    MotifCensus removal = run_parallel(ctx, config);
    CHECK(removal.same_counts(oracle_census(ctx.graph, 10)));
}

TEST_CASE("motif filter zeroes the excluded categories") {
    GraphContext ctx = GraphContext::build(generate_random_graph(25, 300, 150, 19));
    RunConfig config;
    config.delta = 40;
    MotifCensus full = run_parallel(ctx, config);

    config.motifs = {true, false, false};
    MotifCensus star_only = run_parallel(ctx, config);
    config.motifs = {false, true, false};
    MotifCensus pair_only = run_parallel(ctx, config);
    config.motifs = {false, false, true};
    MotifCensus tri_only = run_parallel(ctx, config);

    for (const MotifSignature& s : all_signatures()) {
        switch (s.category()) {
            case MotifSignature::Category::star:
                CHECK(star_only.count(s) == full.count(s));
                CHECK(pair_only.count(s) == 0);
                CHECK(tri_only.count(s) == 0);
                break;
            case MotifSignature::Category::pair:
                CHECK(pair_only.count(s) == full.count(s));
                CHECK(star_only.count(s) == 0);
                CHECK(tri_only.count(s) == 0);
                break;
            case MotifSignature::Category::triangle:
                CHECK(tri_only.count(s) == full.count(s));
                CHECK(star_only.count(s) == 0);
                CHECK(pair_only.count(s) == 0);
                break;
        }
    }
}

TEST_CASE("more workers than items is harmless") {
    GraphContext ctx = GraphContext::build(load_toy());
    RunConfig config;
    config.delta = 10;
    config.workers = 64;
    CHECK(run_parallel(ctx, config).same_counts(oracle_census(ctx.graph, 10)));
}
