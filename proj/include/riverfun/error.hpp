#pragma once

#include <stdexcept>
#include <string>

namespace riverfun {

enum class Errc {
    // profile parsing
    MalformedLine,
    DuplicateAlternativeInRanking,
    UnknownAlternative,
    EmptyProfile,
    // margin graph construction
    ConflictingEdge,
    SelfLoop,
    NonStrictMarginGraph,
    // tiebreakers and edge orders
    MissingEdge,
    DuplicateEdge,
    NotDescending,
    BadEdgeOrder,
    EdgeNotInGraph,
    // oracle / generator / bench
    UniverseLimitExceeded,
    AttemptsExhausted,
    Timeout,
    BadConfig,
    // should-never-happen guards
    InternalInvariantViolation,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace riverfun
