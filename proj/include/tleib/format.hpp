#ifndef TLEIB_FORMAT_HPP
#define TLEIB_FORMAT_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "tleib/algebra.hpp"
#include "tleib/errors.hpp"
#include "tleib/rational.hpp"

namespace tleib {

// Algebra text format
// -------------------
//   dim <n>
//   <i> <j> <k> <p> <rational>
//   ...
// First non-comment line declares the dimension (n >= 1). Every further
// non-comment line is one nonzero structure constant chi_{ijk}^p with 1-based
// indices. Unlisted products are zero. Lines starting with '#' and blank
// lines are ignored on input and never produced on output. Rationals are "a"
// or "a/b" in lowest terms; zero coefficients are rejected.

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string f;
    while (is >> f) out.push_back(f);
    return out;
}

inline int parse_index(const std::string& text, int dim, int lineno) {
    for (char c : text)
        if (c < '0' || c > '9')
            throw ParseError(ParseErrorKind::Syntax, lineno,
                             "expected a basis index, got '" + text + "'");
    if (text.empty() || text.size() > 9)
        throw ParseError(ParseErrorKind::Syntax, lineno, "bad index '" + text + "'");
    const int v = std::stoi(text);
    if (v < 1 || v > dim)
        throw ParseError(ParseErrorKind::IndexOutOfRange, lineno,
                         "index " + text + " outside 1.." + std::to_string(dim));
    return v;
}

} // namespace detail

inline TernaryAlgebra parse_algebra(std::istream& in, const std::string& name = "") {
    std::string line;
    int lineno = 0;
    int dim = -1;
    BracketTable table(1);

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;

        if (dim < 0) {
            if (fields.size() != 2 || fields[0] != "dim")
                throw ParseError(ParseErrorKind::Syntax, lineno,
                                 "expected header 'dim <n>'");
            for (char c : fields[1])
                if (c < '0' || c > '9')
                    throw ParseError(ParseErrorKind::Syntax, lineno,
                                     "bad dimension '" + fields[1] + "'");
            if (fields[1].empty() || fields[1].size() > 6)
                throw ParseError(ParseErrorKind::Syntax, lineno,
                                 "bad dimension '" + fields[1] + "'");
            dim = std::stoi(fields[1]);
            if (dim < 1)
                throw ParseError(ParseErrorKind::Syntax, lineno,
                                 "dimension must be >= 1");
            table = BracketTable(dim);
            continue;
        }

        if (fields.size() != 5)
            throw ParseError(ParseErrorKind::Syntax, lineno,
                             "expected '<i> <j> <k> <p> <rational>'");
        const int i = detail::parse_index(fields[0], dim, lineno);
        const int j = detail::parse_index(fields[1], dim, lineno);
        const int k = detail::parse_index(fields[2], dim, lineno);
        const int p = detail::parse_index(fields[3], dim, lineno);
        const auto value = try_parse_rational(fields[4]);
        if (!value)
            throw ParseError(ParseErrorKind::BadRational, lineno,
                             "'" + fields[4] + "' is not a valid rational");
        if (*value == 0)
            throw ParseError(ParseErrorKind::BadRational, lineno,
                             "zero coefficients may not be listed");
        if (table.coeff(i, j, k, p) != 0)
            throw ParseError(ParseErrorKind::DuplicateEntry, lineno,
                             "coefficient (" + fields[0] + "," + fields[1] + "," +
                                 fields[2] + "," + fields[3] + ") already given");
        table.set(i, j, k, p, *value);
    }
    if (dim < 0)
        throw ParseError(ParseErrorKind::Syntax, lineno + 1, "missing 'dim <n>' header");
    return TernaryAlgebra{name, table, {}};
}

inline TernaryAlgebra parse_algebra(const std::string& text, const std::string& name = "") {
    std::istringstream is(text);
    return parse_algebra(is, name);
}

/// Canonical serialization: header line, then entries sorted lexicographically
/// by (i,j,k,p), LF endings. parse(serialize(A)) reproduces A exactly.
inline std::string serialize_algebra(const TernaryAlgebra& a) {
    std::ostringstream os;
    os << "dim " << a.dim() << "\n";
    for (const auto& [key, c] : a.table.entries())
        os << key[0] << ' ' << key[1] << ' ' << key[2] << ' ' << key[3] << ' '
           << to_string(c) << "\n";
    return os.str();
}

} // namespace tleib

#endif
