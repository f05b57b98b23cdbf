#include "riverfun/margin_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riverfun {

namespace {

bool compute_strict(const std::vector<std::vector<long long>>& margin) {
    const int m = static_cast<int>(margin.size());
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (margin[x][y] == 0) return false;
    return true;
}

} // namespace

MarginGraph::MarginGraph(std::vector<std::string> names, std::vector<std::vector<long long>> margin)
    : m_(static_cast<int>(margin.size())), names_(std::move(names)), margin_(std::move(margin)) {
    if (static_cast<int>(names_.size()) != m_)
        throw Error(Errc::InternalInvariantViolation, "name count does not match matrix size");
    for (int x = 0; x < m_; ++x) {
        if (static_cast<int>(margin_[x].size()) != m_)
            throw Error(Errc::InternalInvariantViolation, "margin matrix is not square");
        if (margin_[x][x] != 0)
            throw Error(Errc::SelfLoop, "nonzero diagonal margin at " + names_[x]);
        for (int y = 0; y < m_; ++y)
            if (margin_[x][y] != -margin_[y][x])
                throw Error(Errc::InternalInvariantViolation,
                            "margin matrix is not antisymmetric at (" + names_[x] + "," + names_[y] + ")");
    }
    strict_ = compute_strict(margin_);
}

MarginGraph MarginGraph::from_edges(int m, const std::vector<WeightedEdge>& edges,
                                    std::vector<std::string> names) {
    if (m < 1) throw Error(Errc::BadConfig, "graph needs at least one vertex");
    if (names.empty()) names = default_names(m);
    if (static_cast<int>(names.size()) != m)
        throw Error(Errc::BadConfig, "expected " + std::to_string(m) + " names");

    std::vector<std::vector<long long>> margin(m, std::vector<long long>(m, 0));
    for (const WeightedEdge& e : edges) {
        if (e.from < 0 || e.from >= m || e.to < 0 || e.to >= m)
            throw Error(Errc::BadConfig, "edge endpoint out of range");
        if (e.from == e.to)
            throw Error(Errc::SelfLoop, "self loop at " + names[e.from]);
        if (e.weight <= 0)
            throw Error(Errc::BadConfig, "edge weights must be positive");
        if (margin[e.from][e.to] != 0 || margin[e.to][e.from] != 0)
            throw Error(Errc::ConflictingEdge,
                        "pair (" + names[e.from] + "," + names[e.to] + ") listed twice");
        margin[e.from][e.to] = e.weight;
        margin[e.to][e.from] = -e.weight;
    }
    return MarginGraph(std::move(names), std::move(margin));
}

void MarginGraph::require_strict() const {
    if (!strict_)
        throw Error(Errc::NonStrictMarginGraph, "margin graph has a zero pairwise margin");
}

int MarginGraph::id_of(const std::string& name) const {
    for (int i = 0; i < m_; ++i)
        if (names_[i] == name) return i;
    throw Error(Errc::UnknownAlternative, name);
}

std::vector<WeightedEdge> MarginGraph::positive_edges() const {
    std::vector<WeightedEdge> edges;
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            if (margin_[x][y] > 0) edges.push_back({x, y, margin_[x][y]});
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
    return edges;
}

std::vector<int> MarginGraph::reachable_above(int start, long long threshold, Direction dir,
                                              const std::set<std::pair<int, int>>& excluded) const {
    std::vector<char> seen(m_, 0);
    std::deque<int> queue;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < m_; ++v) {
            if (seen[v]) continue;
            const bool edge_ok = dir == Direction::Forward
                                     ? (margin_[u][v] > threshold && !excluded.count({u, v}))
                                     : (margin_[v][u] > threshold && !excluded.count({v, u}));
            if (!edge_ok) continue;
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < m_; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<long long>> MarginGraph::strongest_paths() const {
    std::vector<std::vector<long long>> s(m_, std::vector<long long>(m_, 0));
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            if (x != y && margin_[x][y] > 0) s[x][y] = margin_[x][y];
    for (int z = 0; z < m_; ++z)
        for (int x = 0; x < m_; ++x) {
            if (x == z) continue;
            for (int y = 0; y < m_; ++y) {
                if (y == z || y == x) continue;
                s[x][y] = std::max(s[x][y], std::min(s[x][z], s[z][y]));
            }
        }
    return s;
}

std::optional<int> MarginGraph::condorcet_winner() const {
    for (int x = 0; x < m_; ++x) {
        bool wins_all = true;
        for (int y = 0; y < m_ && wins_all; ++y)
            if (y != x && margin_[x][y] <= 0) wins_all = false;
        if (wins_all) return x;
    }
    return std::nullopt;
}

std::vector<std::string> default_names(int m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (m <= 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("a" + std::to_string(i + 1));
    }
    return names;
}

std::string margin_graph_to_json(const MarginGraph& g) {
    nlohmann::ordered_json j;
    j["m"] = g.size();
    j["names"] = g.names();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const WeightedEdge& e : g.positive_edges())
        edges.push_back({e.from, e.to, e.weight});
    j["edges"] = std::move(edges);
    return j.dump();
}

MarginGraph margin_graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedLine, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("edges"))
        throw Error(Errc::MalformedLine, "margin graph JSON needs \"m\" and \"edges\"");
    const int m = j["m"].get<int>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    std::vector<WeightedEdge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 3)
            throw Error(Errc::MalformedLine, "each edge must be [x, y, w]");
        edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<long long>()});
    }
    return MarginGraph::from_edges(m, edges, std::move(names));
}

} // namespace riverfun
