#include "riverfun/certificate.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include <nlohmann/json.hpp>

namespace riverfun {

std::vector<WeightedEdge> CertificateTree::edges() const {
    std::vector<WeightedEdge> out;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        if (parent[v]) out.push_back({parent[v]->first, v, parent[v]->second});
    std::sort(out.begin(), out.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return out;
}

bool CertificateTree::spanning() const {
    int without_parent = 0;
    for (const auto& p : parent)
        if (!p) ++without_parent;
    return without_parent == 1;
}

CertificateTree directed_max_prim(const FunDiagram& d, int root) {
    const int m = d.size();
    CertificateTree tree;
    tree.root = root;
    tree.parent.assign(m, std::nullopt);

    // max-heap: highest margin first, then lexicographic (from, to)
    using Entry = std::tuple<long long, int, int>;
    auto worse = [](const Entry& a, const Entry& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::pair(std::get<1>(a), std::get<2>(a)) > std::pair(std::get<1>(b), std::get<2>(b));
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> crossing(worse);

    std::vector<char> in_tree(m, 0);
    auto grow = [&](int v) {
        in_tree[v] = 1;
        for (int ei : d.outgoing(v)) {
            const FunEdge& e = d.edges()[ei];
            if (!in_tree[e.to]) crossing.push({e.margin, e.from, e.to});
        }
    };
    grow(root);

    while (!crossing.empty()) {
        const auto [margin, from, to] = crossing.top();
        crossing.pop();
        if (in_tree[to]) continue;
        tree.parent[to] = {from, margin};
        grow(to);
    }
    return tree;
}

Tiebreaker certificate_tiebreaker(const MarginGraph& g, const CertificateTree& tree) {
    std::vector<WeightedEdge> edges = g.positive_edges();
    std::vector<std::vector<char>> is_tree(g.size(), std::vector<char>(g.size(), 0));
    for (const WeightedEdge& e : tree.edges()) {
        if (e.from < 0 || e.from >= g.size() || e.to < 0 || e.to >= g.size() ||
            g.margin(e.from, e.to) <= 0)
            throw Error(Errc::EdgeNotInGraph,
                        "tree edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                            ") is not a positive-margin edge");
        is_tree[e.from][e.to] = 1;
    }
    std::stable_sort(edges.begin(), edges.end(), [&](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        const bool ta = is_tree[a.from][a.to], tb = is_tree[b.from][b.to];
        if (ta != tb) return ta;
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    Tiebreaker t;
    for (const WeightedEdge& e : edges) t.order.push_back({e.from, e.to});
    return t;
}

CertificateResult verify_certificate(const MarginGraph& g, int alternative) {
    g.require_strict();
    const FunDiagram d = fun_diagram(g);

    CertificateResult r;
    r.tree = directed_max_prim(d, alternative);
    r.tiebreaker = certificate_tiebreaker(g, r.tree);

    const RiverDiagram replay = river(g, r.tiebreaker);
    r.ok = replay.root == alternative && replay.edges() == r.tree.edges();
    return r;
}

std::string certificate_to_json(const MarginGraph& g, int alternative,
                                const CertificateResult& r) {
    nlohmann::ordered_json j;
    j["winner"] = g.name(alternative);
    nlohmann::ordered_json tree = nlohmann::ordered_json::array();
    for (const WeightedEdge& e : r.tree.edges())
        tree.push_back({g.name(e.from), g.name(e.to), e.weight});
    j["tree"] = std::move(tree);
    nlohmann::ordered_json order = nlohmann::ordered_json::array();
    for (const auto& [x, y] : r.tiebreaker.order) order.push_back({g.name(x), g.name(y)});
    j["tiebreaker"] = std::move(order);
    j["verified"] = r.ok;
    return j.dump();
}

} // namespace riverfun
