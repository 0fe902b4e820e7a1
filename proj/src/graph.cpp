#include "tmotif/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace tmotif {

TemporalGraph TemporalGraph::build(std::vector<std::string> node_ids,
                                   const std::vector<RawEdge>& edges,
                                   std::size_t dropped_self_loops) {
    TemporalGraph g;
    g.node_ids_ = std::move(node_ids);
    g.dropped_self_loops_ = dropped_self_loops;
    g.index_of_.reserve(g.node_ids_.size());
    for (NodeId u = 0; u < g.node_ids_.size(); ++u) {
        auto [it, inserted] = g.index_of_.emplace(g.node_ids_[u], u);
        if (!inserted) {
            throw std::invalid_argument("duplicate node id: " + g.node_ids_[u]);
        }
    }
    g.edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const RawEdge& e = edges[i];
        if (e.src == e.dst) {
            throw std::invalid_argument("self-loop edge at ingestion index " +
                                        std::to_string(i));
        }
        if (e.src >= g.node_ids_.size() || e.dst >= g.node_ids_.size()) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        g.edges_.push_back({e.src, e.dst, e.t, static_cast<Ordinal>(i)});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const TemporalEdge& a, const TemporalEdge& b) {
                  return a.t != b.t ? a.t < b.t : a.ordinal < b.ordinal;
              });
    return g;
}

std::optional<NodeId> TemporalGraph::find_node(std::string_view external_id) const {
    auto it = index_of_.find(std::string(external_id));
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> TemporalGraph::degrees() const {
    std::vector<std::size_t> deg(node_count(), 0);
    for (const TemporalEdge& e : edges_) {
        ++deg[e.src];
        ++deg[e.dst];
    }
    return deg;
}

namespace {

bool parse_timestamp(std::string_view token, Timestamp& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

TemporalGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
    std::vector<std::string> node_ids;
    std::unordered_map<std::string, NodeId> index_of;
    std::vector<TemporalGraph::RawEdge> edges;
    std::size_t dropped = 0;

    auto intern = [&](std::string&& token) -> NodeId {
        auto it = index_of.find(token);
        if (it != index_of.end()) return it->second;
        NodeId id = static_cast<NodeId>(node_ids.size());
        node_ids.push_back(token);
        index_of.emplace(std::move(token), id);
        return id;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::istringstream fields(line);
        std::string src_tok, dst_tok, t_tok;
        if (!(fields >> src_tok)) continue;  // blank line
        if (src_tok[0] == '#') continue;
        if (!(fields >> dst_tok >> t_tok)) {
            throw ParseError(line_no, "expected 3 tokens: SRC DST T");
        }
        Timestamp t;
        if (!parse_timestamp(t_tok, t)) {
            throw ParseError(line_no, "malformed timestamp '" + t_tok + "'");
        }
        if (src_tok == dst_tok) {
            if (!options.drop_self_loops) {
                throw ParseError(line_no, "self-loop edge '" + src_tok + "'");
            }
            ++dropped;
            continue;
        }
        NodeId src = intern(std::move(src_tok));
        NodeId dst = intern(std::move(dst_tok));
        edges.push_back({src, dst, t});
    }
    return TemporalGraph::build(std::move(node_ids), edges, dropped);
}

TemporalGraph load_edge_list(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    return parse_edge_list(in, options);
}

namespace {

// mt19937_64 output is pinned by the standard; uniform_int_distribution is
// not, so bounded draws use rejection sampling for portable determinism.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

TemporalGraph generate_random_graph(std::size_t nodes, std::size_t edge_count,
                                    Timestamp t_max, std::uint64_t seed) {
    if (edge_count > 0 && nodes < 2) {
        throw std::invalid_argument("need at least 2 nodes to place edges");
    }
    if (t_max < 0) {
        throw std::invalid_argument("t_max must be non-negative");
    }
    std::vector<std::string> node_ids(nodes);
    for (std::size_t u = 0; u < nodes; ++u) node_ids[u] = std::to_string(u);

    std::mt19937_64 rng(seed);
    std::vector<TemporalGraph::RawEdge> edges;
    edges.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        auto src = static_cast<NodeId>(bounded_draw(rng, nodes));
        auto other = static_cast<NodeId>(bounded_draw(rng, nodes - 1));
        NodeId dst = other + (other >= src ? 1 : 0);
        auto t = static_cast<Timestamp>(
            bounded_draw(rng, static_cast<std::uint64_t>(t_max) + 1));
        edges.push_back({src, dst, t});
    }
    return TemporalGraph::build(std::move(node_ids), edges);
}

void write_edge_list(std::ostream& out, const TemporalGraph& graph) {
    for (const TemporalEdge& e : graph.edges()) {
        out << graph.node_id(e.src) << ' ' << graph.node_id(e.dst) << ' ' << e.t
            << '\n';
    }
}

}  // namespace tmotif
