#include "riverfun/profile.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace riverfun {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) parts.push_back(trim(cur));
    if (!s.empty() && s.back() == ',') parts.push_back("");
    return parts;
}

// Returns (count, rest) for a "K: ..." prefix, or (1, line) when absent.
std::pair<long long, std::string> split_multiplicity(const std::string& line, int lineno) {
    const size_t colon = line.find(':');
    if (colon == std::string::npos) return {1, line};
    const std::string head = trim(line.substr(0, colon));
    if (head.empty() || !std::all_of(head.begin(), head.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw Error(Errc::MalformedLine,
                    "line " + std::to_string(lineno) + ": multiplicity '" + head +
                        "' is not a positive integer");
    long long count = 0;
    try {
        count = std::stoll(head);
    } catch (const std::exception&) {
        throw Error(Errc::MalformedLine,
                    "line " + std::to_string(lineno) + ": multiplicity out of range");
    }
    if (count < 1)
        throw Error(Errc::MalformedLine,
                    "line " + std::to_string(lineno) + ": multiplicity must be >= 1");
    return {count, line.substr(colon + 1)};
}

struct RawBallot {
    int lineno;
    long long count;
    std::vector<std::string> names;
};

PreferenceProfile build_from_raw(const std::vector<RawBallot>& raw) {
    if (raw.empty()) throw Error(Errc::EmptyProfile, "no ballot lines");

    // Dense ids in order of first appearance.
    std::vector<std::string> names;
    std::map<std::string, int> id;
    for (const RawBallot& rb : raw)
        for (const std::string& n : rb.names)
            if (id.emplace(n, static_cast<int>(names.size())).second) names.push_back(n);

    const int m = static_cast<int>(names.size());
    std::vector<Ballot> ballots;
    ballots.reserve(raw.size());
    for (const RawBallot& rb : raw) {
        Ballot b;
        b.count = rb.count;
        std::vector<char> seen(m, 0);
        for (const std::string& n : rb.names) {
            const int v = id.at(n);
            if (seen[v])
                throw Error(Errc::DuplicateAlternativeInRanking,
                            "line " + std::to_string(rb.lineno) + ": '" + n + "' appears twice");
            seen[v] = 1;
            b.ranking.push_back(v);
        }
        if (static_cast<int>(rb.names.size()) != m)
            throw Error(Errc::MalformedLine,
                        "line " + std::to_string(rb.lineno) + ": ranks " +
                            std::to_string(rb.names.size()) + " of " + std::to_string(m) +
                            " alternatives");
        ballots.push_back(std::move(b));
    }
    return PreferenceProfile(std::move(names), std::move(ballots));
}

} // namespace

PreferenceProfile::PreferenceProfile(std::vector<std::string> names, std::vector<Ballot> ballots)
    : names_(std::move(names)), ballots_(std::move(ballots)), voters_(0) {
    const int m = static_cast<int>(names_.size());
    if (m == 0 || ballots_.empty()) throw Error(Errc::EmptyProfile, "profile has no content");
    for (int i = 0; i < m; ++i) {
        const bool blank = std::all_of(names_[i].begin(), names_[i].end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (blank || names_[i].find(',') != std::string::npos)
            throw Error(Errc::MalformedLine, "invalid alternative name '" + names_[i] + "'");
        for (int j = i + 1; j < m; ++j)
            if (names_[i] == names_[j])
                throw Error(Errc::DuplicateAlternativeInRanking,
                            "duplicate alternative name '" + names_[i] + "'");
    }
    for (const Ballot& b : ballots_) {
        if (b.count < 1) throw Error(Errc::MalformedLine, "ballot multiplicity must be >= 1");
        if (static_cast<int>(b.ranking.size()) != m)
            throw Error(Errc::MalformedLine, "ballot does not rank every alternative");
        std::vector<char> seen(m, 0);
        for (int v : b.ranking) {
            if (v < 0 || v >= m) throw Error(Errc::UnknownAlternative, std::to_string(v));
            if (seen[v])
                throw Error(Errc::DuplicateAlternativeInRanking,
                            "id " + std::to_string(v) + " ranked twice");
            seen[v] = 1;
        }
        voters_ += b.count;
    }
}

int PreferenceProfile::id_of(const std::string& name) const {
    for (int i = 0; i < num_alternatives(); ++i)
        if (names_[i] == name) return i;
    throw Error(Errc::UnknownAlternative, name);
}

PreferenceProfile parse_profile(std::istream& in) {
    std::vector<RawBallot> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        auto [count, rest] = split_multiplicity(body, lineno);
        std::vector<std::string> names = split_csv(rest);
        for (const std::string& n : names)
            if (n.empty())
                throw Error(Errc::MalformedLine,
                            "line " + std::to_string(lineno) + ": empty alternative name");
        raw.push_back({lineno, count, std::move(names)});
    }
    return build_from_raw(raw);
}

PreferenceProfile parse_profile(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

PreferenceProfile parse_soc(std::istream& in) {
    std::vector<Ballot> ballots;
    std::string line;
    int lineno = 0;
    int m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (body.find(':') == std::string::npos)
            throw Error(Errc::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected 'count: i1,i2,...'");
        auto [count, rest] = split_multiplicity(body, lineno);
        std::vector<std::string> fields = split_csv(rest);
        if (m < 0) m = static_cast<int>(fields.size());
        if (static_cast<int>(fields.size()) != m)
            throw Error(Errc::MalformedLine,
                        "line " + std::to_string(lineno) + ": ranks " +
                            std::to_string(fields.size()) + " of " + std::to_string(m) +
                            " alternatives");
        Ballot b;
        b.count = count;
        std::vector<char> seen(m, 0);
        for (const std::string& f : fields) {
            if (f.empty() || !std::all_of(f.begin(), f.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw Error(Errc::MalformedLine,
                            "line " + std::to_string(lineno) + ": '" + f +
                                "' is not an alternative id");
            const int v = std::stoi(f);
            if (v < 1 || v > m)
                throw Error(Errc::UnknownAlternative,
                            "line " + std::to_string(lineno) + ": id " + f + " out of 1.." +
                                std::to_string(m));
            if (seen[v - 1])
                throw Error(Errc::DuplicateAlternativeInRanking,
                            "line " + std::to_string(lineno) + ": id " + f + " appears twice");
            seen[v - 1] = 1;
            b.ranking.push_back(v - 1);
        }
        ballots.push_back(std::move(b));
    }
    if (ballots.empty()) throw Error(Errc::EmptyProfile, "no ballot lines");
    std::vector<std::string> names;
    for (int v = 1; v <= m; ++v) names.push_back(std::to_string(v));
    return PreferenceProfile(std::move(names), std::move(ballots));
}

PreferenceProfile parse_soc(const std::string& text) {
    std::istringstream in(text);
    return parse_soc(in);
}

std::string serialize_profile(const PreferenceProfile& profile) {
    std::ostringstream out;
    for (const Ballot& b : profile.ballots()) {
        if (b.count != 1) out << b.count << ": ";
        for (size_t i = 0; i < b.ranking.size(); ++i) {
            if (i) out << ',';
            out << profile.name(b.ranking[i]);
        }
        out << '\n';
    }
    return out.str();
}

MarginGraph margins(const PreferenceProfile& profile) {
    const int m = profile.num_alternatives();
    std::vector<std::vector<long long>> margin(m, std::vector<long long>(m, 0));
    std::vector<int> position(m);
    for (const Ballot& b : profile.ballots()) {
        for (int rank = 0; rank < m; ++rank) position[b.ranking[rank]] = rank;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                const long long delta = position[x] < position[y] ? b.count : -b.count;
                margin[x][y] += delta;
                margin[y][x] -= delta;
            }
    }
    return MarginGraph(profile.names(), std::move(margin));
}

} // namespace riverfun
