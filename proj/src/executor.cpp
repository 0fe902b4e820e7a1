#include "tmotif/executor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "tmotif/star_engine.hpp"
#include "tmotif/triangle_engine.hpp"

namespace tmotif {

std::size_t auto_degree_threshold(const TemporalGraph& graph) {
    std::vector<std::size_t> degrees = graph.degrees();
    if (degrees.empty()) return 0;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    if (degrees.size() < 20) return degrees.front();
    return degrees[19];
}

SchedulePlan plan_schedule(const TemporalGraph& graph, std::size_t thr_d,
                           std::size_t shard_target, const MotifFilter& motifs) {
    if (shard_target < 1) throw ConfigError("shard_target must be >= 1");
    SchedulePlan plan;
    plan.thr_d = thr_d;
    plan.shard_target = shard_target;
    plan.run_star_pair = motifs.any_star_pair();
    plan.run_triangle = motifs.triangle;

    const std::vector<std::size_t> degrees = graph.degrees();
    for (NodeId u = 0; u < degrees.size(); ++u) {
        if (degrees[u] > thr_d) {
            SchedulePlan::HeavyNode heavy{u, {}};
            const IndexRange full = full_star_range(degrees[u]);
            for (std::size_t b = full.begin; b < full.end; b += shard_target) {
                heavy.shards.push_back({b, std::min(b + shard_target, full.end)});
            }
            plan.heavy.push_back(std::move(heavy));
        } else {
            plan.light.push_back(u);
        }
    }
    return plan;
}

namespace {

// One claimable unit: a heavy-center shard or a batch of light centers.
struct WorkItem {
    NodeId node = 0;
    IndexRange range;
    std::uint32_t batch_begin = 0;
    std::uint32_t batch_end = 0;
    bool is_batch = false;
};

enum class Pass { star_pair, triangle };

std::vector<WorkItem> build_items(const SchedulePlan& plan,
                                  const NodeSequenceIndex& sequences, Pass pass,
                                  std::size_t light_batch) {
    std::vector<WorkItem> items;
    // Heavy shards first: the longest items start earliest under dynamic
    // claiming, which trims the tail.
    for (const auto& heavy : plan.heavy) {
        for (const IndexRange& shard : heavy.shards) {
            items.push_back({heavy.node, shard, 0, 0, false});
        }
        if (pass == Pass::triangle) {
            // The triangle pass has one extra first-edge position past the
            // star range; cover it with a tail item.
            const std::size_t s = sequences.degree(heavy.node);
            const IndexRange star = full_star_range(s);
            const IndexRange tri = full_triangle_range(s);
            if (tri.end > star.end) {
                items.push_back({heavy.node, {star.end, tri.end}, 0, 0, false});
            }
        }
    }
    const std::size_t batch = std::max<std::size_t>(1, light_batch);
    for (std::size_t b = 0; b < plan.light.size(); b += batch) {
        items.push_back({0,
                         {},
                         static_cast<std::uint32_t>(b),
                         static_cast<std::uint32_t>(std::min(b + batch, plan.light.size())),
                         true});
    }
    return items;
}

// Claims items off the shared queue until drained; `process` handles one
// (center, range) unit.
template <typename Process>
void run_pool(const std::vector<WorkItem>& items, const SchedulePlan& plan,
              const NodeSequenceIndex& sequences, Pass pass, unsigned workers,
              Process&& process) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker_loop = [&](unsigned worker_id) {
        try {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
                if (idx >= items.size()) break;
                const WorkItem& item = items[idx];
                if (item.is_batch) {
                    for (std::uint32_t b = item.batch_begin; b < item.batch_end; ++b) {
                        const NodeId u = plan.light[b];
                        const std::size_t s = sequences.degree(u);
                        const IndexRange full = pass == Pass::star_pair
                                                    ? full_star_range(s)
                                                    : full_triangle_range(s);
                        process(worker_id, u, full);
                    }
                } else {
                    process(worker_id, item.node, item.range);
                }
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    if (workers <= 1) {
        worker_loop(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_loop, w);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     since)
        .count();
}

}  // namespace

MotifCensus run_parallel(const GraphContext& context, const RunConfig& config,
                         PhaseTimings* timings) {
    if (config.workers < 1) throw ConfigError("workers must be >= 1");
    if (config.delta < 0) throw ConfigError("delta must be >= 0");
    if (config.triangle_mode == TriangleMode::removal && config.workers > 1) {
        throw ConfigError("removal triangle mode requires a single worker");
    }

    const std::size_t thr_d = config.degree_threshold
                                  ? *config.degree_threshold
                                  : auto_degree_threshold(context.graph);
    const SchedulePlan plan =
        plan_schedule(context.graph, thr_d, config.shard_target, config.motifs);
    const unsigned workers = config.workers;

    StarCounter star_total;
    PairCounter pair_total;
    TriCounter tri_total;

    if (plan.run_star_pair) {
        const auto started = std::chrono::steady_clock::now();
        const auto items =
            build_items(plan, context.sequences, Pass::star_pair, config.light_batch);
        std::vector<CenterStarResult> partial(workers);
        run_pool(items, plan, context.sequences, Pass::star_pair, workers,
                 [&](unsigned worker_id, NodeId u, IndexRange range) {
                     partial[worker_id].add(count_star_pair_at_center(
                         context.sequences, u, config.delta, range));
                 });
        CenterStarResult merged;
        for (const auto& p : partial) merged.add(p);
        star_total = merged.star;
        pair_total = merged.pair;
        if (timings) timings->star_pair_ms = elapsed_ms(started);
    }

    if (plan.run_triangle) {
        const auto started = std::chrono::steady_clock::now();
        if (config.triangle_mode == TriangleMode::removal) {
            tri_total = count_triangles(context.sequences, context.pairs, config.delta,
                                        TriangleMode::removal);
        } else {
            const auto items =
                build_items(plan, context.sequences, Pass::triangle, config.light_batch);
            std::vector<TriCounter> partial(workers);
            run_pool(items, plan, context.sequences, Pass::triangle, workers,
                     [&](unsigned worker_id, NodeId u, IndexRange range) {
                         partial[worker_id].add(count_triangles_at_center(
                             context.sequences, context.pairs, u, config.delta, range));
                     });
            for (const auto& p : partial) tri_total.add(p);
        }
        if (timings) timings->triangle_ms = elapsed_ms(started);
    }

    const auto merge_started = std::chrono::steady_clock::now();
    if (!config.motifs.star) star_total = StarCounter{};
    if (!config.motifs.pair) pair_total = PairCounter{};
    MotifCensus census =
        merge_census(star_total, pair_total, tri_total, config.triangle_mode);
    census.delta = config.delta;
    census.meta.edge_count = context.graph.edge_count();
    census.meta.triangle_mode = std::string(triangle_mode_name(config.triangle_mode));
    census.meta.workers = workers;
    if (timings) timings->merge_ms = elapsed_ms(merge_started);
    return census;
}

}  // namespace tmotif
