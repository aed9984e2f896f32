#include "degstab/error.hpp"

namespace degstab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NumericFailure: return "NumericFailure";
        case ErrorKind::PatternNotMinimal: return "PatternNotMinimal";
        case ErrorKind::PatternNotRigid: return "PatternNotRigid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OracleTimeout: return "OracleTimeout";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, const std::string& reason)
    : Error(kind, "line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

NumericFailure::NumericFailure(const std::string& what, double best_value)
    : Error(ErrorKind::NumericFailure, what), best_value_(best_value) {}

}  // namespace degstab
