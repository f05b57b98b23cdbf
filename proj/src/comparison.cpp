#include "riverfun/comparison.hpp"

namespace riverfun {

std::vector<int> immune_alternatives(const MarginGraph& g) {
    const int m = g.size();
    const auto strength = g.strongest_paths();
    std::vector<int> out;
    for (int x = 0; x < m; ++x) {
        bool immune = true;
        for (int y = 0; y < m && immune; ++y)
            if (g.margin(y, x) > 0 && strength[x][y] < g.margin(y, x)) immune = false;
        if (immune) out.push_back(x);
    }
    if (out.empty())
        throw Error(Errc::InternalInvariantViolation, "no immune alternative");
    return out;
}

std::vector<int> split_cycle_winners(const MarginGraph& g) { return immune_alternatives(g); }

std::vector<int> beat_path_winners(const MarginGraph& g) {
    const int m = g.size();
    const auto strength = g.strongest_paths();
    std::vector<int> out;
    for (int x = 0; x < m; ++x) {
        bool wins = true;
        for (int y = 0; y < m && wins; ++y)
            if (y != x && strength[x][y] < strength[y][x]) wins = false;
        if (wins) out.push_back(x);
    }
    if (out.empty())
        throw Error(Errc::InternalInvariantViolation, "empty beat-path winner set");
    return out;
}

} // namespace riverfun
