#include "riverfun/error.hpp"

namespace riverfun {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::DuplicateAlternativeInRanking: return "DuplicateAlternativeInRanking";
    case Errc::UnknownAlternative: return "UnknownAlternative";
    case Errc::EmptyProfile: return "EmptyProfile";
    case Errc::ConflictingEdge: return "ConflictingEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NonStrictMarginGraph: return "NonStrictMarginGraph";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NotDescending: return "NotDescending";
    case Errc::BadEdgeOrder: return "BadEdgeOrder";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::UniverseLimitExceeded: return "UniverseLimitExceeded";
    case Errc::AttemptsExhausted: return "AttemptsExhausted";
    case Errc::Timeout: return "Timeout";
    case Errc::BadConfig: return "BadConfig";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

} // namespace riverfun
