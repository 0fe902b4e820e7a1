#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmotif/executor.hpp"
#include "tmotif/graph.hpp"
#include "tmotif/oracle.hpp"
#include "tmotif/report.hpp"

namespace {

using namespace tmotif;

// Exit codes: 0 ok, 1 usage, 2 parse error, 3 counter overflow, 4 invalid
// mode/thread combination, 5 oracle input too large, 6 verify mismatch,
// 7 bench nondeterminism.
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_overflow = 3;
constexpr int exit_config = 4;
constexpr int exit_too_large = 5;
constexpr int exit_mismatch = 6;
constexpr int exit_nondeterministic = 7;

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     since)
        .count();
}

MotifFilter parse_motif_filter(const std::string& spec) {
    if (spec == "all") return {};
    MotifFilter filter{false, false, false};
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == "star") {
            filter.star = true;
        } else if (token == "pair") {
            filter.pair = true;
        } else if (token == "triangle") {
            filter.triangle = true;
        } else {
            throw std::invalid_argument("unknown motif category: " + token);
        }
    }
    if (!filter.star && !filter.pair && !filter.triangle) {
        throw std::invalid_argument("empty motif filter");
    }
    return filter;
}

std::optional<std::size_t> parse_degree_threshold(const std::string& spec) {
    if (spec == "auto") return std::nullopt;
    std::size_t pos = 0;
    unsigned long long value = std::stoull(spec, &pos);
    if (pos != spec.size()) throw std::invalid_argument("bad degree threshold");
    return static_cast<std::size_t>(value);
}

TriangleMode parse_triangle_mode(const std::string& spec) {
    if (spec == "countall") return TriangleMode::count_all;
    if (spec == "removal") return TriangleMode::removal;
    throw std::invalid_argument("triangle mode must be countall or removal");
}

OutputFormat parse_format(const std::string& spec) {
    if (spec == "table") return OutputFormat::table;
    if (spec == "csv") return OutputFormat::csv;
    if (spec == "json") return OutputFormat::json;
    throw std::invalid_argument("format must be table, csv, or json");
}

struct CountFlags {
    std::string input;
    Timestamp delta = 0;
    unsigned threads = 1;
    std::string degree_threshold = "auto";
    std::string triangle_mode = "countall";
    std::string motifs = "all";
    std::string format = "table";
    std::string output;
};

void add_count_flags(CLI::App* cmd, CountFlags& flags, bool with_output,
                     bool with_threads = true) {
    cmd->add_option("--input", flags.input, "edge-list file")->required();
    cmd->add_option("--delta", flags.delta, "time window (input time unit)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    if (with_threads) {
        cmd->add_option("--threads", flags.threads, "worker count")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--degree-threshold", flags.degree_threshold,
                    "intra-node sharding threshold, integer or 'auto'");
    cmd->add_option("--triangle-mode", flags.triangle_mode, "countall or removal");
    cmd->add_option("--motifs", flags.motifs,
                    "comma list of star,pair,triangle or 'all'");
    if (with_output) {
        cmd->add_option("--format", flags.format, "table, csv, or json");
        cmd->add_option("--output", flags.output, "output path (default stdout)");
    }
}

CensusReport run_pipeline(const CountFlags& flags) {
    RunConfig config;
    config.delta = flags.delta;
    config.workers = flags.threads;
    config.degree_threshold = parse_degree_threshold(flags.degree_threshold);
    config.triangle_mode = parse_triangle_mode(flags.triangle_mode);
    config.motifs = parse_motif_filter(flags.motifs);

    CensusReport report;
    report.threads = flags.threads;
    report.degree_threshold = flags.degree_threshold;
    report.motifs = flags.motifs;

    auto t0 = std::chrono::steady_clock::now();
    TemporalGraph graph = load_edge_list(flags.input);
    report.timings.ingest_ms = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    GraphContext context = GraphContext::build(std::move(graph));
    report.timings.index_ms = elapsed_ms(t0);

    report.census = run_parallel(context, config, &report.timings);
    report.census.meta.input = flags.input;
    return report;
}

int cmd_count(const CountFlags& flags) {
    CensusReport report = run_pipeline(flags);
    if (flags.output.empty() || flags.output == "-") {
        write_census(std::cout, report, parse_format(flags.format));
    } else {
        std::ofstream out(flags.output);
        if (!out) throw std::runtime_error("cannot open output file: " + flags.output);
        write_census(out, report, parse_format(flags.format));
    }
    return exit_ok;
}

int cmd_verify(const CountFlags& flags, std::size_t max_edges) {
    TemporalGraph graph = load_edge_list(flags.input);
    if (graph.edge_count() > max_edges) {
        std::cerr << "input has " << graph.edge_count() << " edges, over the oracle cap "
                  << max_edges << " (raise --max-edges to override)\n";
        return exit_too_large;
    }
    MotifCensus oracle = oracle_census(graph, flags.delta);

    CensusReport report = run_pipeline(flags);
    CensusDiff diff = diff_censuses(report.census, oracle);
    write_diff(std::cout, diff, "engine", "oracle");
    return diff.identical() ? exit_ok : exit_mismatch;
}

int cmd_bench(const CountFlags& base, const std::string& thread_list, unsigned repeat) {
    std::vector<unsigned> thread_counts;
    std::istringstream in(thread_list);
    std::string token;
    while (std::getline(in, token, ',')) {
        thread_counts.push_back(static_cast<unsigned>(std::stoul(token)));
        if (thread_counts.back() < 1) throw std::invalid_argument("threads must be >= 1");
    }
    if (thread_counts.empty() || repeat < 1) {
        throw std::invalid_argument("need at least one thread count and one repeat");
    }

    auto stat = [](std::vector<double> xs) {
        std::sort(xs.begin(), xs.end());
        double median = xs.size() % 2 == 1
                            ? xs[xs.size() / 2]
                            : (xs[xs.size() / 2 - 1] + xs[xs.size() / 2]) / 2.0;
        return std::pair{xs.front(), median};
    };

    std::cout << "threads,ingest_min_ms,ingest_med_ms,index_min_ms,index_med_ms,"
                 "star_pair_min_ms,star_pair_med_ms,triangle_min_ms,triangle_med_ms,"
                 "merge_min_ms,merge_med_ms,total_min_ms,total_med_ms\n";

    std::optional<MotifCensus> reference;
    for (unsigned threads : thread_counts) {
        CountFlags flags = base;
        flags.threads = threads;
        std::vector<double> ingest, index, star_pair, triangle, merge, total;
        for (unsigned r = 0; r < repeat; ++r) {
            CensusReport report = run_pipeline(flags);
            if (!reference) {
                reference = report.census;
            } else if (!reference->same_counts(report.census)) {
                std::cerr << "censuses differ across runs\n";
                return exit_nondeterministic;
            }
            ingest.push_back(report.timings.ingest_ms);
            index.push_back(report.timings.index_ms);
            star_pair.push_back(report.timings.star_pair_ms);
            triangle.push_back(report.timings.triangle_ms);
            merge.push_back(report.timings.merge_ms);
            total.push_back(report.timings.total_ms());
        }
        std::cout << threads;
        for (auto* xs : {&ingest, &index, &star_pair, &triangle, &merge, &total}) {
            auto [mn, med] = stat(*xs);
            std::cout << ',' << mn << ',' << med;
        }
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_gen(std::size_t nodes, std::size_t edges, Timestamp t_max, std::uint64_t seed,
            const std::string& output) {
    TemporalGraph graph = generate_random_graph(nodes, edges, t_max, seed);
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    write_edge_list(out, graph);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact delta-window temporal motif counter"};
    app.require_subcommand(1);

    CountFlags count_flags;
    CLI::App* count = app.add_subcommand("count", "count all 36 motif classes");
    add_count_flags(count, count_flags, true);

    CountFlags verify_flags;
    std::size_t max_edges = oracle_default_max_edges;
    CLI::App* verify =
        app.add_subcommand("verify", "compare engine census against the oracle");
    add_count_flags(verify, verify_flags, false);
    verify->add_option("--max-edges", max_edges, "oracle input cap");

    CountFlags bench_flags;
    std::string thread_list = "1";
    unsigned repeat = 3;
    CLI::App* bench = app.add_subcommand("bench", "timing runs across thread counts");
    add_count_flags(bench, bench_flags, false, false);
    bench->add_option("--threads", thread_list, "comma list, e.g. 1,2,4,8");
    bench->add_option("--repeat", repeat, "runs per thread count")
        ->check(CLI::PositiveNumber);

    std::size_t gen_nodes = 0;
    std::size_t gen_edges = 0;
    Timestamp gen_t_max = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    CLI::App* gen = app.add_subcommand("gen", "write a seeded synthetic edge list");
    gen->add_option("--nodes", gen_nodes, "node count")->required();
    gen->add_option("--edges", gen_edges, "edge count")->required();
    gen->add_option("--t-max", gen_t_max, "max timestamp")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--output", gen_output, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count->parsed()) return cmd_count(count_flags);
        if (verify->parsed()) return cmd_verify(verify_flags, max_edges);
        if (bench->parsed()) return cmd_bench(bench_flags, thread_list, repeat);
        if (gen->parsed()) return cmd_gen(gen_nodes, gen_edges, gen_t_max, gen_seed,
                                          gen_output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const CounterOverflowError& e) {
        std::cerr << e.what() << '\n';
        return exit_overflow;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
