// Command-line front end: winner computation, certificates, diagram export,
// synthetic election generation, and the benchmark harness.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "riverfun/bench.hpp"
#include "riverfun/certificate.hpp"
#include "riverfun/comparison.hpp"
#include "riverfun/fun.hpp"
#include "riverfun/mallows.hpp"
#include "riverfun/profile.hpp"
#include "riverfun/put_oracle.hpp"

using namespace riverfun;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNonStrict = 3;
constexpr int kExitUniverseLimit = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::NonStrictMarginGraph: return kExitNonStrict;
    case Errc::UniverseLimitExceeded: return kExitUniverseLimit;
    default: return kExitUsage;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::BadConfig, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Either --profile (text or .soc) or --margin-graph (JSON).
struct InputOptions {
    std::string profile_path;
    std::string graph_path;

    void attach(CLI::App* cmd) {
        auto* p =
            cmd->add_option("--profile", profile_path, "profile file (.soc parsed as PrefLib)");
        auto* g = cmd->add_option("--margin-graph", graph_path, "margin graph JSON file");
        p->excludes(g);
    }

    MarginGraph load() const {
        if (!profile_path.empty()) {
            const std::string text = read_file(profile_path);
            return margins(ends_with(profile_path, ".soc") ? parse_soc(text)
                                                           : parse_profile(text));
        }
        if (!graph_path.empty()) return margin_graph_from_json(read_file(graph_path));
        throw Error(Errc::BadConfig, "need --profile or --margin-graph");
    }
};

std::vector<std::string> winner_names(const MarginGraph& g, const std::vector<int>& ids) {
    std::vector<std::string> names;
    for (int v : ids) names.push_back(g.name(v));
    std::sort(names.begin(), names.end());
    return names;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(Errc::BadConfig, "cannot write '" + out_path + "'");
    out << content;
}

int cmd_winners(const InputOptions& input, const std::string& rule,
                const std::string& tiebreaker_path, long long universe_limit,
                const std::string& format) {
    const MarginGraph g = input.load();

    std::vector<int> winners;
    if (rule == "river" || rule == "ranked-pairs") {
        if (tiebreaker_path.empty()) {
            std::cerr << "usage: --rule " << rule << " requires --tiebreaker FILE\n";
            return kExitUsage;
        }
        std::istringstream in(read_file(tiebreaker_path));
        const Tiebreaker t = load_tiebreaker(in, g);
        winners = rule == "river" ? std::vector<int>{river(g, t).root}
                                  : std::vector<int>{ranked_pairs(g, t).winner};
    } else if (rule == "fun-put") {
        winners = rv_put_winners(g);
    } else if (rule == "split-cycle") {
        winners = split_cycle_winners(g);
    } else if (rule == "beat-path") {
        winners = beat_path_winners(g);
    } else if (rule == "rv-put-brute") {
        winners = brute_force_put(g, FixedRule::River, universe_limit);
    } else if (rule == "rp-put-brute") {
        winners = brute_force_put(g, FixedRule::RankedPairs, universe_limit);
    } else {
        std::cerr << "unknown rule '" << rule << "'\n";
        return kExitUsage;
    }

    const std::vector<std::string> names = winner_names(g, winners);
    if (format == "json") {
        std::string out = "{\"rule\":\"" + rule + "\",\"winners\":[";
        for (size_t i = 0; i < names.size(); ++i) {
            if (i) out += ',';
            out += '"' + names[i] + '"';
        }
        out += "]}\n";
        std::cout << out;
    } else {
        for (size_t i = 0; i < names.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << names[i];
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_certificate(const InputOptions& input, const std::string& alternative) {
    const MarginGraph g = input.load();
    const int a = g.id_of(alternative); // UnknownAlternative -> exit 2
    const CertificateResult r = verify_certificate(g, a);
    std::cout << certificate_to_json(g, a, r) << '\n';
    return r.ok ? 0 : 1;
}

int cmd_diagram(const InputOptions& input, const std::string& format,
                const std::string& out_path) {
    const MarginGraph g = input.load();
    const FunDiagram d = fun_diagram(g);
    const std::string content =
        format == "dot" ? fun_diagram_to_dot(d) : fun_diagram_to_json(d) + "\n";
    write_output(out_path, content);
    return 0;
}

int cmd_generate(int m, long long n, double phi, double norm_phi, std::uint64_t seed, int count,
                 bool no_condorcet, bool strict, int max_attempts, const std::string& out_path) {
    if (norm_phi > 0.0) phi = phi_from_norm_phi(m, norm_phi);
    if (count < 1) throw Error(Errc::BadConfig, "--count must be >= 1");
    if (count > 1 && out_path.empty()) throw Error(Errc::BadConfig, "--count > 1 requires --out");

    for (int i = 0; i < count; ++i) {
        MallowsConfig cfg;
        cfg.alternatives = m;
        cfg.voters = n;
        cfg.phi = phi;
        // attempts advance the seed by one, so stride profiles well apart
        cfg.seed = seed + static_cast<std::uint64_t>(i) * 1000003ULL;
        const PreferenceProfile p =
            no_condorcet ? generate_no_condorcet(cfg, max_attempts, strict) : mallows_sample(cfg);
        std::string path = out_path;
        if (count > 1) {
            const size_t dot = path.rfind('.');
            const std::string suffix = "_" + std::to_string(i);
            if (dot == std::string::npos || dot == 0)
                path += suffix;
            else
                path.insert(dot, suffix);
        }
        write_output(path, serialize_profile(p));
    }
    return 0;
}

int cmd_bench(std::vector<std::string> rules, const std::vector<int>& ms,
              std::vector<long long> ns, int count, double phi, double norm_phi,
              std::uint64_t seed, double timeout, double brute_timeout, long long universe_limit,
              int jobs, int max_attempts, const std::string& out_path) {
    for (long long n : ns)
        if (n % 2 == 0)
            std::cerr << "warning: even voter count " << n
                      << " admits pairwise ties; sampling rejects non-strict elections\n";

    BenchConfig cfg;
    cfg.rules = std::move(rules);
    cfg.voters = std::move(ns);
    cfg.instances_per_cell = count;
    cfg.seed = seed;
    cfg.timeout_poly_seconds = timeout;
    cfg.timeout_brute_seconds = brute_timeout;
    cfg.universe_limit = universe_limit;
    cfg.jobs = jobs;
    cfg.max_attempts = max_attempts;

    std::vector<BenchRecord> records;
    for (int m : ms) {
        cfg.alternatives = {m};
        cfg.phi = norm_phi > 0.0 ? phi_from_norm_phi(m, norm_phi) : phi;
        const std::vector<BenchRecord> part = run_bench(cfg);
        records.insert(records.end(), part.begin(), part.end());
    }
    write_output(out_path, bench_csv(records));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"River voting rules with parallel-universe tiebreaking"};
    app.require_subcommand(1);

    // winners
    auto* winners = app.add_subcommand("winners", "compute a rule's winner set");
    InputOptions winners_input;
    winners_input.attach(winners);
    std::string rule;
    winners
        ->add_option("--rule", rule,
                     "fun-put | river | ranked-pairs | split-cycle | beat-path | "
                     "rv-put-brute | rp-put-brute")
        ->required();
    std::string tiebreaker_path;
    winners->add_option("--tiebreaker", tiebreaker_path, "tiebreaker file (x>y per line)");
    long long universe_limit = 1000000;
    winners->add_option("--universe-limit", universe_limit, "brute-force universe cap");
    std::string winners_format = "text";
    winners->add_option("--format", winners_format)->check(CLI::IsMember({"text", "json"}));

    // certificate
    auto* certificate =
        app.add_subcommand("certificate", "extract and verify a winning certificate");
    InputOptions cert_input;
    cert_input.attach(certificate);
    std::string alternative;
    certificate->add_option("--alternative", alternative, "alternative name")->required();

    // diagram
    auto* diagram = app.add_subcommand("diagram", "emit the fused-universe diagram");
    InputOptions diagram_input;
    diagram_input.attach(diagram);
    std::string diagram_format = "json";
    diagram->add_option("--format", diagram_format)->check(CLI::IsMember({"json", "dot"}));
    std::string diagram_out;
    diagram->add_option("--out", diagram_out, "output file (default stdout)");

    // generate
    auto* generate = app.add_subcommand("generate", "sample synthetic elections");
    int gen_m = 0;
    long long gen_n = 0;
    generate->add_option("--alternatives", gen_m)->required()->check(CLI::PositiveNumber);
    generate->add_option("--voters", gen_n)->required()->check(CLI::PositiveNumber);
    double gen_phi = 1.0, gen_norm_phi = 0.0;
    auto* phi_opt = generate->add_option("--phi", gen_phi, "dispersion in (0,1]");
    generate->add_option("--norm-phi", gen_norm_phi, "normalized dispersion in (0,1]")
        ->excludes(phi_opt);
    std::uint64_t gen_seed = 0;
    generate->add_option("--seed", gen_seed);
    int gen_count = 1;
    generate->add_option("--count", gen_count, "number of profiles");
    bool gen_no_condorcet = false;
    generate->add_flag("--no-condorcet", gen_no_condorcet, "reject condorcet-winner elections");
    bool gen_strict = false;
    generate->add_flag("--strict", gen_strict, "with --no-condorcet, also reject pairwise ties");
    int gen_attempts = 50000;
    generate->add_option("--max-attempts", gen_attempts);
    std::string gen_out;
    generate->add_option("--out", gen_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "time rules on synthetic elections, emit CSV");
    std::vector<std::string> bench_rules;
    bench->add_option("--rules", bench_rules, "comma-separated rule list")
        ->required()
        ->delimiter(',');
    std::vector<int> bench_ms{10};
    bench->add_option("--alternatives", bench_ms)->delimiter(',');
    std::vector<long long> bench_ns{51};
    bench->add_option("--voters", bench_ns)->delimiter(',');
    int bench_count = 1;
    bench->add_option("--count", bench_count, "instances per (m,n) cell");
    double bench_phi = 0.8, bench_norm_phi = 0.0;
    auto* bench_phi_opt = bench->add_option("--phi", bench_phi);
    bench->add_option("--norm-phi", bench_norm_phi)->excludes(bench_phi_opt);
    std::uint64_t bench_seed = 0;
    bench->add_option("--seed", bench_seed);
    double bench_timeout = 5.0, bench_brute_timeout = 60.0;
    bench->add_option("--timeout", bench_timeout, "seconds per polynomial-rule run");
    bench->add_option("--brute-timeout", bench_brute_timeout, "seconds per brute-force run");
    long long bench_limit = 1000000;
    bench->add_option("--universe-limit", bench_limit);
    int bench_jobs = 1;
    bench->add_option("--jobs", bench_jobs, "parallel profile generation");
    int bench_attempts = 50000;
    bench->add_option("--max-attempts", bench_attempts);
    std::string bench_out;
    bench->add_option("--out", bench_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 handles help/version with exit code 0 itself
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (winners->parsed())
            return cmd_winners(winners_input, rule, tiebreaker_path, universe_limit,
                               winners_format);
        if (certificate->parsed()) return cmd_certificate(cert_input, alternative);
        if (diagram->parsed()) return cmd_diagram(diagram_input, diagram_format, diagram_out);
        if (generate->parsed())
            return cmd_generate(gen_m, gen_n, gen_phi, gen_norm_phi, gen_seed, gen_count,
                                gen_no_condorcet, gen_strict, gen_attempts, gen_out);
        if (bench->parsed())
            return cmd_bench(bench_rules, bench_ms, bench_ns, bench_count, bench_phi,
                             bench_norm_phi, bench_seed, bench_timeout, bench_brute_timeout,
                             bench_limit, bench_jobs, bench_attempts, bench_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
