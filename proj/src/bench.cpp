#include "riverfun/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include "riverfun/comparison.hpp"
#include "riverfun/fun.hpp"
#include "riverfun/mallows.hpp"

namespace riverfun {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, int m, long long n, int instance) {
    std::uint64_t h = splitmix64(base ^ 0x726976657266756eULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(m));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(instance));
    return h;
}

bool is_brute(const std::string& rule) {
    return rule == "rv-put-brute" || rule == "rp-put-brute";
}

std::size_t run_rule(const std::string& rule, const MarginGraph& g, const BigInt& limit,
                     std::chrono::steady_clock::time_point deadline) {
    if (rule == "fun-put") return rv_put_winners(g).size();
    if (rule == "split-cycle") return split_cycle_winners(g).size();
    if (rule == "beat-path") return beat_path_winners(g).size();
    if (rule == "river") return river(g, default_tiebreaker(g)).root >= 0 ? 1 : 0;
    if (rule == "ranked-pairs") return ranked_pairs(g, default_tiebreaker(g)).winner >= 0 ? 1 : 0;
    if (rule == "rv-put-brute") return brute_force_put(g, FixedRule::River, limit, deadline).size();
    if (rule == "rp-put-brute")
        return brute_force_put(g, FixedRule::RankedPairs, limit, deadline).size();
    throw Error(Errc::BadConfig, "unknown rule '" + rule + "'");
}

struct Instance {
    int m;
    long long n;
    std::uint64_t seed;
    std::optional<MarginGraph> graph; // absent when generation failed
};

Instance prepare_instance(const BenchConfig& cfg, int m, long long n, int index) {
    Instance inst{m, n, instance_seed(cfg.seed, m, n, index), std::nullopt};
    MallowsConfig mc;
    mc.alternatives = m;
    mc.voters = n;
    mc.phi = cfg.phi;
    mc.seed = inst.seed;
    try {
        inst.graph = margins(generate_no_condorcet(mc, cfg.max_attempts, /*require_strict=*/true));
    } catch (const Error& e) {
        if (e.code() != Errc::AttemptsExhausted) throw;
    }
    return inst;
}

} // namespace

const std::vector<std::string>& known_bench_rules() {
    static const std::vector<std::string> rules = {
        "fun-put", "split-cycle", "beat-path", "river",
        "ranked-pairs", "rv-put-brute", "rp-put-brute",
    };
    return rules;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    for (const std::string& rule : cfg.rules) {
        const auto& known = known_bench_rules();
        if (std::find(known.begin(), known.end(), rule) == known.end())
            throw Error(Errc::BadConfig, "unknown rule '" + rule + "'");
    }
    if (cfg.instances_per_cell < 0) throw Error(Errc::BadConfig, "instance count must be >= 0");
    if (cfg.jobs < 1) throw Error(Errc::BadConfig, "jobs must be >= 1");

    std::vector<BenchRecord> records;
    for (int m : cfg.alternatives) {
        std::map<std::string, int> timeouts_for_m;
        for (long long n : cfg.voters) {
            // Profiles for a cell can be generated in parallel; timing runs
            // stay sequential so measurements are undisturbed.
            std::vector<Instance> instances(cfg.instances_per_cell, Instance{m, n, 0, std::nullopt});
            if (cfg.jobs <= 1) {
                for (int i = 0; i < cfg.instances_per_cell; ++i)
                    instances[i] = prepare_instance(cfg, m, n, i);
            } else {
                std::vector<std::future<Instance>> futures;
                for (int i = 0; i < cfg.instances_per_cell; ++i)
                    futures.push_back(std::async(std::launch::async, [&cfg, m, n, i] {
                        return prepare_instance(cfg, m, n, i);
                    }));
                for (int i = 0; i < cfg.instances_per_cell; ++i) instances[i] = futures[i].get();
            }

            for (const Instance& inst : instances) {
                if (!inst.graph) continue; // no suitable election found
                for (const std::string& rule : cfg.rules) {
                    if (timeouts_for_m[rule] >= 3) continue;
                    const double budget =
                        is_brute(rule) ? cfg.timeout_brute_seconds : cfg.timeout_poly_seconds;
                    const auto start = std::chrono::steady_clock::now();
                    const auto deadline =
                        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(budget));
                    BenchRecord rec;
                    rec.rule = rule;
                    rec.m = inst.m;
                    rec.n = inst.n;
                    rec.seed = inst.seed;
                    rec.phi = cfg.phi;
                    try {
                        rec.winner_count = run_rule(rule, *inst.graph, cfg.universe_limit, deadline);
                    } catch (const Error& e) {
                        if (e.code() != Errc::Timeout && e.code() != Errc::UniverseLimitExceeded)
                            throw;
                        rec.timed_out = true;
                        rec.winner_count.reset();
                    }
                    rec.wall_seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
                    if (!rec.timed_out && rec.wall_seconds > budget) rec.timed_out = true;
                    if (rec.timed_out) {
                        rec.winner_count.reset();
                        ++timeouts_for_m[rule];
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "rule,m,n,seed,phi,wall_seconds,winners,timed_out\n";
    char buf[64];
    for (const BenchRecord& r : records) {
        out << r.rule << ',' << r.m << ',' << r.n << ',' << r.seed << ',';
        std::snprintf(buf, sizeof(buf), "%g", r.phi);
        out << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.6f", r.wall_seconds);
        out << buf << ',';
        if (r.winner_count) out << *r.winner_count;
        out << ',' << (r.timed_out ? 1 : 0) << '\n';
    }
    return out.str();
}

} // namespace riverfun
