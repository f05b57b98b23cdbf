#include "riverfun/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace riverfun {

namespace {

void validate(const MallowsConfig& cfg) {
    if (cfg.alternatives < 1) throw Error(Errc::BadConfig, "alternatives must be >= 1");
    if (cfg.voters < 1) throw Error(Errc::BadConfig, "voters must be >= 1");
    if (!(cfg.phi > 0.0) || cfg.phi > 1.0) throw Error(Errc::BadConfig, "phi must be in (0,1]");
    if (!cfg.reference.empty()) {
        if (static_cast<int>(cfg.reference.size()) != cfg.alternatives)
            throw Error(Errc::BadConfig, "reference permutation has wrong length");
        std::vector<char> seen(cfg.alternatives, 0);
        for (int v : cfg.reference) {
            if (v < 0 || v >= cfg.alternatives || seen[v])
                throw Error(Errc::BadConfig, "reference is not a permutation");
            seen[v] = 1;
        }
    }
}

// 53-bit uniform double in [0,1); avoids std::uniform_real_distribution so
// output is identical across standard libraries.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

PreferenceProfile mallows_sample(const MallowsConfig& cfg) {
    validate(cfg);
    const int m = cfg.alternatives;

    std::vector<int> reference = cfg.reference;
    if (reference.empty()) {
        reference.resize(m);
        for (int i = 0; i < m; ++i) reference[i] = i;
    }

    // phi_pow[j] = phi^j, built by repeated multiplication for
    // reproducibility across platforms.
    std::vector<double> phi_pow(m, 1.0);
    for (int j = 1; j < m; ++j) phi_pow[j] = phi_pow[j - 1] * cfg.phi;

    std::mt19937_64 rng(cfg.seed);
    std::vector<Ballot> ballots;
    ballots.reserve(static_cast<size_t>(cfg.voters));

    std::vector<int> ranking;
    for (long long voter = 0; voter < cfg.voters; ++voter) {
        ranking.clear();
        for (int i = 0; i < m; ++i) {
            // Insert reference[i] among the i items placed so far. Position p
            // counts from the top; jumping ahead of (i - p) items has weight
            // phi^(i - p).
            double total = 0.0;
            for (int p = 0; p <= i; ++p) total += phi_pow[i - p];
            const double u = next_unit(rng) * total;
            double acc = 0.0;
            int pos = i;
            for (int p = 0; p <= i; ++p) {
                acc += phi_pow[i - p];
                if (u < acc) {
                    pos = p;
                    break;
                }
            }
            ranking.insert(ranking.begin() + pos, reference[i]);
        }
        ballots.push_back({1, ranking});
    }
    return PreferenceProfile(default_names(m), std::move(ballots));
}

PreferenceProfile generate_no_condorcet(const MallowsConfig& cfg, int max_attempts,
                                        bool require_strict) {
    if (max_attempts < 1) throw Error(Errc::BadConfig, "max_attempts must be >= 1");
    MallowsConfig attempt = cfg;
    for (int i = 0; i < max_attempts; ++i) {
        attempt.seed = cfg.seed + static_cast<std::uint64_t>(i);
        PreferenceProfile profile = mallows_sample(attempt);
        const MarginGraph g = margins(profile);
        if (g.condorcet_winner()) continue;
        if (require_strict && !g.strict()) continue;
        return profile;
    }
    throw Error(Errc::AttemptsExhausted,
                "no suitable profile in " + std::to_string(max_attempts) + " attempts");
}

double expected_kendall_distance(int m, double phi) {
    // Sum over insertions of the expected jump length: inserting the
    // (i+1)-th item draws V in 0..i with P(V = v) proportional to phi^v.
    double total = 0.0;
    for (int i = 1; i < m; ++i) {
        double weight_sum = 0.0, value_sum = 0.0, pw = 1.0;
        for (int v = 0; v <= i; ++v) {
            weight_sum += pw;
            value_sum += v * pw;
            pw *= phi;
        }
        total += value_sum / weight_sum;
    }
    return total;
}

double phi_from_norm_phi(int m, double norm_phi) {
    if (m < 1) throw Error(Errc::BadConfig, "alternatives must be >= 1");
    if (!(norm_phi > 0.0) || norm_phi > 1.0)
        throw Error(Errc::BadConfig, "norm-phi must be in (0,1]");
    if (m == 1 || norm_phi == 1.0) return 1.0;
    const double target = norm_phi * static_cast<double>(m) * (m - 1) / 4.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (expected_kendall_distance(m, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double phi = 0.5 * (lo + hi);
    return std::max(phi, 1e-12);
}

} // namespace riverfun
