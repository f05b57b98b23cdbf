#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "riverfun/margin_graph.hpp"

namespace riverfun {

// One ballot row: `count` voters who all submitted `ranking`, a permutation
// of the alternative ids with the most preferred alternative first.
struct Ballot {
    long long count = 1;
    std::vector<int> ranking;

    friend bool operator==(const Ballot&, const Ballot&) = default;
};

// Immutable collection of linear orders over a fixed alternative set.
class PreferenceProfile {
public:
    PreferenceProfile(std::vector<std::string> names, std::vector<Ballot> ballots);

    int num_alternatives() const { return static_cast<int>(names_.size()); }
    long long num_voters() const { return voters_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int id) const { return names_[id]; }
    const std::vector<Ballot>& ballots() const { return ballots_; }
    int id_of(const std::string& name) const; // throws UnknownAlternative

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Ballot> ballots_;
    long long voters_;
};

// Profile text format: '#' comment lines and blank lines ignored; every other
// line is "name1,name2,...,nameM" or "K: name1,...,nameM" for K identical
// ballots. Every line must rank the same alternative set.
PreferenceProfile parse_profile(std::istream& in);
PreferenceProfile parse_profile(const std::string& text);

// PrefLib .soc compatibility reader (strict complete orders): lines starting
// with '#' skipped, data lines "count: i1,i2,..." with 1-based integer ids.
PreferenceProfile parse_soc(std::istream& in);
PreferenceProfile parse_soc(const std::string& text);

// Inverse of parse_profile up to comment/blank lines: ballots with count 1
// are written bare, others with the "K: " prefix.
std::string serialize_profile(const PreferenceProfile& profile);

// Pairwise margins, multiplicity-weighted.
MarginGraph margins(const PreferenceProfile& profile);

} // namespace riverfun
