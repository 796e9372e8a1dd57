#ifndef TLEIB_ERRORS_HPP
#define TLEIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tleib {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vector or matrix was applied to an object of a different dimension.
struct DimMismatch : Error {
    using Error::Error;
};

/// Two subspaces (or a subspace and a map) live in different ambient spaces.
struct AmbientMismatch : Error {
    using Error::Error;
};

/// An operation that requires the ternary Leibniz identity was invoked on a
/// table that violates it.
struct NotLeibniz : Error {
    using Error::Error;
};

/// Two supposedly-equivalent computation routes produced different results.
/// Signals a solver bug, never bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct UnknownKey : Error {
    using Error::Error;
};

struct MissingParam : Error {
    using Error::Error;
};

struct UnexpectedParam : Error {
    using Error::Error;
};

enum class ParseErrorKind {
    Syntax,
    IndexOutOfRange,
    DuplicateEntry,
    BadRational,
};

inline const char* to_string(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::Syntax: return "SyntaxError";
        case ParseErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ParseErrorKind::DuplicateEntry: return "DuplicateEntry";
        case ParseErrorKind::BadRational: return "BadRational";
    }
    return "ParseError";
}

/// Algebra file rejected; carries the 1-based line number of the offence.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + to_string(kind) +
                (detail.empty() ? "" : ": " + detail)),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

} // namespace tleib

#endif
