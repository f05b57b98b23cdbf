#include "riverfun/fun.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "riverfun/river.hpp"

namespace riverfun {

const char* edge_state_name(EdgeState s) {
    switch (s) {
    case EdgeState::Fix: return "Fix";
    case EdgeState::BC: return "BC";
    case EdgeState::CC: return "CC";
    case EdgeState::CBC: return "CBC";
    }
    return "?";
}

const char* vertex_state_name(VertexState s) {
    switch (s) {
    case VertexState::NotDominated: return "NotDominated";
    case VertexState::FixedlyDominated: return "FixedlyDominated";
    case VertexState::CycleDominated: return "CycleDominated";
    }
    return "?";
}

namespace {

VertexState classify(const std::vector<FunEdge>& edges, const std::vector<int>& incoming) {
    if (incoming.empty()) return VertexState::NotDominated;
    bool all_cc = true;
    bool any_bc_or_cbc = false;
    int fix_count = 0;
    for (int ei : incoming) {
        switch (edges[ei].state) {
        case EdgeState::CC: break;
        case EdgeState::BC:
        case EdgeState::CBC:
            all_cc = false;
            any_bc_or_cbc = true;
            break;
        case EdgeState::Fix:
            all_cc = false;
            ++fix_count;
            break;
        }
    }
    if (all_cc) return VertexState::CycleDominated;
    if (any_bc_or_cbc) return VertexState::FixedlyDominated;
    if (fix_count == 1 && incoming.size() == 1) return VertexState::FixedlyDominated;
    throw Error(Errc::InternalInvariantViolation, "unreachable incoming-edge configuration");
}

// Mutable working copy of the diagram while edges are processed.
struct Builder {
    const MarginGraph& g;
    int m;
    std::vector<FunEdge> edges;
    std::vector<std::vector<int>> in, out; // edge indices per vertex

    explicit Builder(const MarginGraph& graph)
        : g(graph), m(graph.size()), in(graph.size()), out(graph.size()) {}

    VertexState vstate(int v) const { return classify(edges, in[v]); }

    long long max_incoming_margin(int v) const {
        long long best = 0;
        for (int ei : in[v]) best = std::max(best, edges[ei].margin);
        return best;
    }

    // BFS over diagram edges with margin >= min_margin. A banned vertex makes
    // every edge incident to it impassable; excluded flags edges by index.
    std::vector<char> reach(int start, Direction dir, long long min_margin, int banned,
                            const std::vector<char>* excluded) const {
        std::vector<char> seen(m, 0);
        std::vector<int> queue;
        seen[start] = 1;
        queue.push_back(start);
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (u == banned) continue;
            const std::vector<int>& adj = dir == Direction::Forward ? out[u] : in[u];
            for (int ei : adj) {
                const FunEdge& e = edges[ei];
                if (e.margin < min_margin) continue;
                if (excluded && (*excluded)[ei]) continue;
                const int v = dir == Direction::Forward ? e.to : e.from;
                if (v == banned || seen[v]) continue;
                seen[v] = 1;
                queue.push_back(v);
            }
        }
        return seen;
    }

    void process(int x, int y) {
        const long long k = g.margin(x, y);

        // Branching reject check: y is already dominated by a stronger edge
        // in every universe.
        if (vstate(y) == VertexState::FixedlyDominated && max_incoming_margin(y) > k) return;

        // Cycle reject check: the edge closes a strictly stronger cycle in
        // every universe.
        const std::vector<char> strong_from_y = reach(y, Direction::Forward, k + 1, -1, nullptr);
        if (strong_from_y[x]) {
            const std::vector<char> upstream = reach(x, Direction::Reverse, k + 1, -1, nullptr);
            // CC edges whose own cycle can be completed without touching y
            // may be dropped from some universe, so paths through them do
            // not count.
            std::vector<char> excluded(edges.size(), 0);
            for (size_t ei = 0; ei < edges.size(); ++ei) {
                const FunEdge& e = edges[ei];
                if (e.state != EdgeState::CC) continue;
                if (e.margin <= k) continue; // cannot lie on a strength>k path
                const std::vector<char> back = reach(e.to, Direction::Forward, e.margin, y, nullptr);
                if (back[e.from]) excluded[ei] = 1;
            }
            const std::vector<char> covered = reach(y, Direction::Forward, k + 1, -1, &excluded);
            bool all_covered = true;
            for (int v = 0; v < m && all_covered; ++v)
                if (upstream[v] && !covered[v]) all_covered = false;
            if (all_covered) return;
        }

        // Tentative state from the target's current situation.
        EdgeState state;
        const VertexState vy = vstate(y);
        if (vy == VertexState::NotDominated) {
            state = EdgeState::Fix;
        } else if (vy == VertexState::CycleDominated && max_incoming_margin(y) > k) {
            state = EdgeState::CBC;
        } else if (vy == VertexState::CycleDominated) {
            state = EdgeState::BC;
        } else {
            // Fixedly dominated, necessarily by margin-k edges: the new edge
            // and the previous Fix edge become interchangeable choices.
            state = EdgeState::BC;
            for (int ei : in[y])
                if (edges[ei].state == EdgeState::Fix) edges[ei].state = EdgeState::BC;
        }

        const int ei = static_cast<int>(edges.size());
        edges.push_back({x, y, k, state});
        out[x].push_back(ei);
        in[y].push_back(ei);

        // Cycle update check: every edge on a cycle through (x,y) is a
        // choice; equal-margin ones become cycle choices now.
        const std::vector<char> from_y = reach(y, Direction::Forward, 1, -1, nullptr);
        const std::vector<char> to_x = reach(x, Direction::Reverse, 1, -1, nullptr);
        bool closes_cycle = false;
        for (FunEdge& e : edges) {
            if (from_y[e.from] && to_x[e.to]) {
                closes_cycle = true;
                if (e.margin == k) e.state = EdgeState::CC;
            }
        }
        if (closes_cycle) edges[ei].state = EdgeState::CC;
    }
};

FunDiagram run(const MarginGraph& g, const std::vector<std::pair<int, int>>& order) {
    g.require_strict();
    Builder b(g);
    for (const auto& [x, y] : order) b.process(x, y);
    return FunDiagram(g.names(), std::move(b.edges));
}

} // namespace

FunDiagram::FunDiagram(std::vector<std::string> names, std::vector<FunEdge> edges)
    : names_(std::move(names)), edges_(std::move(edges)), in_(names_.size()), out_(names_.size()) {
    for (int ei = 0; ei < static_cast<int>(edges_.size()); ++ei) {
        const FunEdge& e = edges_[ei];
        if (e.from < 0 || e.from >= size() || e.to < 0 || e.to >= size() || e.from == e.to)
            throw Error(Errc::InternalInvariantViolation, "bad diagram edge");
        out_[e.from].push_back(ei);
        in_[e.to].push_back(ei);
    }
}

bool FunDiagram::has_edge(int x, int y) const {
    for (int ei : out_[x])
        if (edges_[ei].to == y) return true;
    return false;
}

VertexState FunDiagram::vertex_state(int v) const { return classify(edges_, in_[v]); }

std::vector<int> FunDiagram::winners() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (vertex_state(v) != VertexState::FixedlyDominated) out.push_back(v);
    return out;
}

FunDiagram fun_diagram(const MarginGraph& g) {
    std::vector<std::pair<int, int>> order;
    for (const WeightedEdge& e : g.positive_edges()) order.push_back({e.from, e.to});
    return run(g, order);
}

FunDiagram fun_diagram(const MarginGraph& g, const std::vector<std::pair<int, int>>& edge_order) {
    try {
        validate_tiebreaker(g, Tiebreaker{edge_order});
    } catch (const Error& e) {
        throw Error(Errc::BadEdgeOrder, e.what());
    }
    return run(g, edge_order);
}

std::vector<std::pair<int, int>> shuffled_edge_order(const MarginGraph& g, std::uint64_t seed) {
    std::vector<WeightedEdge> edges = g.positive_edges();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> order;
    size_t block = 0;
    while (block < edges.size()) {
        size_t end = block;
        while (end < edges.size() && edges[end].weight == edges[block].weight) ++end;
        std::vector<std::pair<int, int>> group;
        for (size_t i = block; i < end; ++i) group.push_back({edges[i].from, edges[i].to});
        std::shuffle(group.begin(), group.end(), rng);
        order.insert(order.end(), group.begin(), group.end());
        block = end;
    }
    return order;
}

std::vector<int> rv_put_winners(const MarginGraph& g) {
    std::vector<int> w = fun_diagram(g).winners();
    if (w.empty())
        throw Error(Errc::InternalInvariantViolation, "empty winner set");
    return w;
}

std::string fun_diagram_to_json(const FunDiagram& d) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const FunEdge& e : d.edges())
        edges.push_back({d.name(e.from), d.name(e.to), e.margin, edge_state_name(e.state)});
    j["edges"] = std::move(edges);
    nlohmann::ordered_json states = nlohmann::ordered_json::object();
    for (int v = 0; v < d.size(); ++v) states[d.name(v)] = vertex_state_name(d.vertex_state(v));
    j["vertex_states"] = std::move(states);
    nlohmann::ordered_json winners = nlohmann::ordered_json::array();
    for (int v : d.winners()) winners.push_back(d.name(v));
    j["winners"] = std::move(winners);
    return j.dump();
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string fun_diagram_to_dot(const FunDiagram& d) {
    std::ostringstream out;
    out << "digraph fun {\n";
    out << "  rankdir=LR;\n";
    for (int v = 0; v < d.size(); ++v) {
        const char* shape = nullptr;
        switch (d.vertex_state(v)) {
        case VertexState::NotDominated: shape = "doublecircle"; break;
        case VertexState::CycleDominated: shape = "circle"; break;
        case VertexState::FixedlyDominated: shape = "box"; break;
        }
        out << "  " << dot_quote(d.name(v)) << " [shape=" << shape << "];\n";
    }
    for (const FunEdge& e : d.edges()) {
        const char* color = nullptr;
        const char* style = nullptr;
        switch (e.state) {
        case EdgeState::Fix: color = "black"; style = "solid"; break;
        case EdgeState::BC: color = "blue"; style = "dashed"; break;
        case EdgeState::CC: color = "red"; style = "dotted"; break;
        case EdgeState::CBC: color = "purple"; style = "dashed"; break;
        }
        out << "  " << dot_quote(d.name(e.from)) << " -> " << dot_quote(d.name(e.to))
            << " [label=\"" << e.margin << " " << edge_state_name(e.state) << "\", color=" << color
            << ", style=" << style << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace riverfun
