#pragma once

#include <optional>
#include <vector>

#include "tmotif/indexes.hpp"
#include "tmotif/motifs.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

struct MotifFilter {
    bool star = true;
    bool pair = true;
    bool triangle = true;

    bool any_star_pair() const { return star || pair; }
};

// Work partition for one counting pass: heavy centers (degree strictly above
// thr_d) are sharded over their first-edge positions for intra-node
// parallelism, the rest run whole-center.
struct SchedulePlan {
    struct HeavyNode {
        NodeId node;
        std::vector<IndexRange> shards;  // partition of the star first-edge range
    };
    std::vector<HeavyNode> heavy;
    std::vector<NodeId> light;
    std::size_t thr_d = 0;
    std::size_t shard_target = 0;
    bool run_star_pair = true;
    bool run_triangle = true;
};

struct RunConfig {
    Timestamp delta = 0;
    unsigned workers = 1;
    // Degree threshold for intra-node sharding; nullopt selects the automatic
    // top-20 rule. SIZE_MAX effectively disables sharding.
    std::optional<std::size_t> degree_threshold;
    TriangleMode triangle_mode = TriangleMode::count_all;
    MotifFilter motifs;
    std::size_t shard_target = 4096;
    std::size_t light_batch = 64;
};

// Degree of the 20th-highest-degree node (total degree, multi-edges counted);
// the maximum degree when the graph has fewer than 20 nodes.
std::size_t auto_degree_threshold(const TemporalGraph& graph);

SchedulePlan plan_schedule(const TemporalGraph& graph, std::size_t thr_d,
                           std::size_t shard_target, const MotifFilter& motifs);

struct PhaseTimings {
    double ingest_ms = 0;
    double index_ms = 0;
    double star_pair_ms = 0;
    double triangle_ms = 0;
    double merge_ms = 0;

    double total_ms() const {
        return ingest_ms + index_ms + star_pair_ms + triangle_ms + merge_ms;
    }
};

// Runs the star/pair and triangle passes over a pool of `workers` threads
// pulling plan items from a shared dynamic queue. Workers accumulate into
// private counters, merged by addition afterwards, so the census is
// bit-identical for any worker count, threshold, or interleaving. Removal
// triangle mode requires workers == 1 (it is order-dependent) and runs
// sequentially. Throws ConfigError on invalid combinations.
MotifCensus run_parallel(const GraphContext& context, const RunConfig& config,
                         PhaseTimings* timings = nullptr);

}  // namespace tmotif
