#include "riverfun/river.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riverfun {

void validate_tiebreaker(const MarginGraph& g, const Tiebreaker& t) {
    std::set<std::pair<int, int>> expected;
    for (const WeightedEdge& e : g.positive_edges()) expected.insert({e.from, e.to});

    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < t.order.size(); ++i) {
        const auto& e = t.order[i];
        if (!expected.count(e))
            throw Error(Errc::EdgeNotInGraph,
                        "index " + std::to_string(i) + ": (" + g.name(e.first) + "," +
                            g.name(e.second) + ") is not a positive-margin edge");
        if (!seen.insert(e).second)
            throw Error(Errc::DuplicateEdge,
                        "index " + std::to_string(i) + ": (" + g.name(e.first) + "," +
                            g.name(e.second) + ") listed twice");
        if (i > 0) {
            const auto& p = t.order[i - 1];
            if (g.margin(p.first, p.second) < g.margin(e.first, e.second))
                throw Error(Errc::NotDescending,
                            "index " + std::to_string(i - 1) + "/" + std::to_string(i) +
                                ": margins increase");
        }
    }
    if (seen.size() != expected.size()) {
        for (const auto& e : expected)
            if (!seen.count(e))
                throw Error(Errc::MissingEdge,
                            "(" + g.name(e.first) + "," + g.name(e.second) + ") absent");
    }
}

Tiebreaker default_tiebreaker(const MarginGraph& g) {
    Tiebreaker t;
    for (const WeightedEdge& e : g.positive_edges()) t.order.push_back({e.from, e.to});
    return t;
}

std::vector<WeightedEdge> RiverDiagram::edges() const {
    std::vector<WeightedEdge> out;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        if (parent[v]) out.push_back({parent[v]->first, v, parent[v]->second});
    std::sort(out.begin(), out.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return out;
}

RiverDiagram river(const MarginGraph& g, const Tiebreaker& t) {
    g.require_strict();
    const int m = g.size();
    RiverDiagram d;
    d.parent.assign(m, std::nullopt);

    for (const auto& [x, y] : t.order) {
        if (d.parent[y]) continue; // branching condition
        // Accepted edges form an in-forest, so (x,y) closes a cycle exactly
        // when y is an ancestor of x.
        bool cycle = false;
        for (int v = x; d.parent[v];) {
            v = d.parent[v]->first;
            if (v == y) {
                cycle = true;
                break;
            }
        }
        if (cycle) continue;
        d.parent[y] = {x, g.margin(x, y)};
    }

    d.root = -1;
    for (int v = 0; v < m; ++v) {
        if (d.parent[v]) continue;
        if (d.root != -1)
            throw Error(Errc::InternalInvariantViolation, "river diagram has two roots");
        d.root = v;
    }
    if (d.root == -1)
        throw Error(Errc::InternalInvariantViolation, "river diagram has no root");
    return d;
}

RankedPairsResult ranked_pairs(const MarginGraph& g, const Tiebreaker& t) {
    g.require_strict();
    const int m = g.size();
    std::vector<std::vector<int>> out(m);
    RankedPairsResult r;

    auto reaches = [&](int from, int to) {
        std::vector<char> seen(m, 0);
        std::deque<int> q{from};
        seen[from] = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            if (u == to) return true;
            for (int v : out[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
        }
        return false;
    };

    std::vector<char> dominated(m, 0);
    for (const auto& [x, y] : t.order) {
        if (reaches(y, x)) continue; // would create a cycle
        out[x].push_back(y);
        dominated[y] = 1;
        r.locked.push_back({x, y, g.margin(x, y)});
    }

    r.winner = -1;
    for (int v = 0; v < m; ++v) {
        if (dominated[v]) continue;
        if (r.winner != -1)
            throw Error(Errc::InternalInvariantViolation, "locked graph has two sources");
        r.winner = v;
    }
    if (r.winner == -1)
        throw Error(Errc::InternalInvariantViolation, "locked graph has no source");
    return r;
}

Tiebreaker load_tiebreaker(std::istream& in, const MarginGraph& g) {
    Tiebreaker t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
            body.pop_back();
        size_t start = 0;
        while (start < body.size() && std::isspace(static_cast<unsigned char>(body[start])))
            ++start;
        body = body.substr(start);
        if (body.empty() || body[0] == '#') continue;
        const size_t gt = body.find('>');
        if (gt == std::string::npos)
            throw Error(Errc::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected 'x>y'");
        const std::string a = body.substr(0, gt);
        const std::string b = body.substr(gt + 1);
        t.order.push_back({g.id_of(a), g.id_of(b)});
    }
    validate_tiebreaker(g, t);
    return t;
}

Tiebreaker load_tiebreaker(const std::string& text, const MarginGraph& g) {
    std::istringstream in(text);
    return load_tiebreaker(in, g);
}

std::string river_diagram_to_json(const MarginGraph& g, const RiverDiagram& d) {
    nlohmann::ordered_json j;
    j["root"] = g.name(d.root);
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const WeightedEdge& e : d.edges())
        edges.push_back({g.name(e.from), g.name(e.to), e.weight});
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace riverfun
