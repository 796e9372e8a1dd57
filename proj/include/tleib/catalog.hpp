#ifndef TLEIB_CATALOG_HPP
#define TLEIB_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "tleib/algebra.hpp"
#include "tleib/errors.hpp"
#include "tleib/linear_map.hpp"
#include "tleib/rational.hpp"
#include "tleib/subspace.hpp"

namespace tleib {

/// One entry of the built-in classification catalog. The expected dimensions
/// are the reference values published alongside the classification; the
/// verifier compares computed dimensions against them and reports any
/// disagreement rather than trusting either side silently.
struct CatalogEntry {
    std::string key;                          // "L1".."L18"
    std::vector<std::string> requires_params; // e.g. {"alpha"}
    int expected_cent_dim;
    int expected_qcent_dim;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"L1", {}, 1, 9},       {"L2", {}, 3, 9},       {"L3", {}, 1, 9},
        {"L4", {}, 1, 5},       {"L5", {}, 1, 5},       {"L6", {}, 1, 5},
        {"L7", {"alpha"}, 1, 1}, {"L8", {}, 1, 5},       {"L9", {}, 1, 5},
        {"L10", {}, 1, 1},      {"L11", {}, 1, 6},      {"L12", {}, 1, 2},
        {"L13", {}, 1, 1},      {"L14", {}, 1, 5},      {"L15", {}, 1, 1},
        {"L16", {}, 5, 5},      {"L17", {}, 5, 5},      {"L18", {"alpha"}, 1, 5}};
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& key) {
    for (const auto& e : catalog_entries())
        if (e.key == key) return e;
    throw UnknownKey("no catalog algebra named '" + key + "'");
}

/// Default parameter sample points for the two parameterized families.
inline std::vector<Rational> default_alpha_samples() {
    return {Rational(0), Rational(1), Rational(-1), make_rational(1, 2), Rational(2)};
}

namespace detail {

struct TableBuilder {
    BracketTable table{4};

    // one product [e_i,e_j,e_k] = c * e_p; zero c (from parameter binding) is dropped
    TableBuilder& put(int i, int j, int k, int p, Rational c = Rational(1)) {
        table.set(i, j, k, p, c);
        return *this;
    }
};

inline BracketTable catalog_table(const std::string& key,
                                  const std::map<std::string, Rational>& params) {
    TableBuilder b;
    const Rational half = make_rational(1, 2);
    const Rational third = make_rational(1, 3);
    if (key == "L1") {
        for (auto [i, j, k] : {std::array<int, 3>{1, 1, 1}, {1, 1, 3}, {1, 3, 1},
                               {3, 1, 1}, {3, 1, 3}, {3, 3, 3}})
            b.put(i, j, k, 2).put(i, j, k, 4);
    } else if (key == "L2") {
        b.put(1, 1, 2, 3).put(1, 1, 2, 4);
        b.put(1, 2, 1, 3, 2).put(1, 2, 1, 4);
        b.put(2, 1, 1, 3).put(2, 1, 1, 4);
        b.put(2, 1, 2, 3).put(2, 1, 2, 4);
        b.put(2, 2, 2, 3).put(2, 2, 2, 4);
    } else if (key == "L3") {
        for (auto [i, j, k] : {std::array<int, 3>{1, 1, 4}, {1, 2, 2}, {1, 2, 4},
                               {1, 4, 4}, {2, 1, 1}, {2, 2, 1}, {2, 2, 4}, {2, 4, 4},
                               {4, 1, 1}, {4, 2, 2}, {4, 4, 1}, {4, 4, 4}})
            b.put(i, j, k, 3);
    } else if (key == "L4") {
        b.put(1, 2, 2, 1).put(1, 2, 2, 3);
        b.put(1, 4, 4, 1).put(1, 4, 4, 3);
        for (auto [i, j, k] : {std::array<int, 3>{2, 2, 2}, {2, 2, 4}, {2, 4, 2},
                               {2, 4, 4}, {4, 2, 2}, {4, 2, 4}, {4, 4, 2}, {4, 4, 4}})
            b.put(i, j, k, 3);
    } else if (key == "L5") {
        for (auto [i, j, k] : {std::array<int, 3>{1, 2, 3}, {1, 3, 1}, {1, 3, 2},
                               {1, 3, 3}, {2, 1, 3}, {2, 3, 1}, {3, 1, 3}, {3, 2, 1},
                               {3, 3, 1}})
            b.put(i, j, k, 4);
    } else if (key == "L6") {
        b.put(1, 2, 4, 1).put(1, 2, 4, 3);
        b.put(1, 4, 2, 1).put(1, 4, 2, 3);
        b.put(2, 2, 2, 3).put(2, 2, 4, 3).put(2, 4, 2, 3);
        b.put(4, 2, 2, 3, half).put(4, 4, 2, 3).put(4, 4, 4, 3);
    } else if (key == "L7") {
        const Rational& alpha = params.at("alpha");
        b.put(1, 3, 2, 1, 2 * alpha).put(1, 3, 2, 4);
        b.put(2, 2, 2, 4).put(2, 3, 2, 4).put(2, 3, 3, 4);
        b.put(3, 2, 2, 4).put(3, 2, 3, 4).put(3, 3, 2, 4);
        b.put(3, 3, 3, 4, third);
    } else if (key == "L8") {
        for (auto [i, j, k] : {std::array<int, 3>{1, 1, 1}, {1, 3, 3}, {3, 3, 1},
                               {3, 3, 3}, {4, 1, 1}, {4, 4, 4}})
            b.put(i, j, k, 2);
    } else if (key == "L9") {
        for (auto [i, j, k] : {std::array<int, 3>{1, 1, 1}, {1, 4, 1}, {1, 4, 4},
                               {3, 3, 1}, {4, 1, 1}, {4, 3, 3}, {4, 4, 4}})
            b.put(i, j, k, 2);
    } else if (key == "L10") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 1, 1}, {2, 3, 2}, {2, 3, 4},
                               {2, 4, 3}, {2, 4, 4}})
            b.put(i, j, k, 2);
    } else if (key == "L11") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 1, 1}, {2, 1, 2}, {2, 2, 1},
                               {2, 2, 2}, {3, 3, 3}})
            b.put(i, j, k, 4);
    } else if (key == "L12") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 1, 2}, {2, 2, 1}, {2, 2, 2},
                               {2, 2, 4}, {2, 4, 2}, {4, 1, 1}, {4, 1, 4}, {4, 2, 2},
                               {4, 4, 4}})
            b.put(i, j, k, 3);
    } else if (key == "L13") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 1, 3}, {2, 3, 1}, {2, 3, 4},
                               {2, 4, 3}, {2, 4, 4}})
            b.put(i, j, k, 2);
    } else if (key == "L14") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 1, 3}, {2, 2, 2}, {2, 3, 1},
                               {3, 1, 1}, {3, 1, 2}, {3, 2, 1}, {3, 3, 3}})
            b.put(i, j, k, 4);
    } else if (key == "L15") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 3, 1}, {2, 3, 3}, {2, 4, 3}, {2, 4, 4}})
            b.put(i, j, k, 2);
    } else if (key == "L16") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {3, 3, 3}})
            b.put(i, j, k, 4);
    } else if (key == "L17") {
        for (auto [i, j, k] : {std::array<int, 3>{2, 2, 3}, {3, 2, 1}, {3, 2, 2}, {3, 3, 3}})
            b.put(i, j, k, 4);
    } else if (key == "L18") {
        const Rational& alpha = params.at("alpha");
        b.put(2, 1, 4, 3).put(2, 2, 2, 3).put(2, 4, 1, 3);
        b.put(4, 1, 2, 3, Rational(-1)).put(4, 2, 1, 3);
        b.put(4, 2, 2, 3, alpha).put(4, 4, 4, 3);
    } else {
        throw UnknownKey("no catalog algebra named '" + key + "'");
    }
    return b.table;
}

} // namespace detail

/// Builds a catalog algebra with its parameters bound to concrete scalars.
/// The parameter map must name exactly the family's required parameters.
inline TernaryAlgebra builtin(const std::string& key,
                              const std::map<std::string, Rational>& params = {}) {
    const CatalogEntry& entry = catalog_entry(key);
    for (const auto& need : entry.requires_params)
        if (!params.count(need))
            throw MissingParam("'" + key + "' requires parameter '" + need + "'");
    for (const auto& [given, value] : params) {
        (void)value;
        bool wanted = false;
        for (const auto& need : entry.requires_params)
            if (need == given) wanted = true;
        if (!wanted)
            throw UnexpectedParam("'" + key + "' takes no parameter '" + given + "'");
    }
    return TernaryAlgebra{key, detail::catalog_table(key, params), params};
}

/// A published matrix pattern recorded with the catalog for comparison: a
/// label plus the subspace it spans.
struct ReferencePattern {
    std::string label;
    MatrixSubspace space;
};

/// Reference quasi-centroid patterns shipped with the catalog. L1 carries the
/// worked example's two presentations plus the summary-table matrix; L3
/// carries the summary-table matrix (whose one free parameter visibly
/// contradicts the stated dimension 9 next to it).
inline std::vector<ReferencePattern> reference_qcent_patterns(const std::string& key) {
    const int n = 4;
    auto E = [&](int p, int q) { return LinearMap::elementary(n, p, q); };
    std::vector<ReferencePattern> out;
    if (key == "L1") {
        out.push_back({"worked-example matrix",
                       MatrixSubspace::span_of(
                           n, {E(1, 1) + E(3, 3), E(2, 1), E(2, 2), E(2, 3), E(3, 4),
                               E(4, 1), E(4, 2), E(4, 3), E(4, 4)})});
        out.push_back({"worked-example basis list",
                       MatrixSubspace::span_of(
                           n, {E(1, 1), E(2, 1), E(4, 1), E(2, 2), E(4, 2), E(2, 3),
                               E(4, 3), E(2, 4), E(4, 4)})});
        out.push_back({"summary-table matrix",
                       MatrixSubspace::span_of(
                           n, {E(1, 1) + E(2, 2) + E(3, 3) + E(4, 4), E(3, 1), E(3, 2),
                               E(3, 4), E(4, 1), E(4, 2), E(4, 3)})});
    } else if (key == "L3") {
        out.push_back({"summary-table matrix",
                       MatrixSubspace::span_of(
                           n, {E(1, 1) + E(2, 2) + E(3, 3) + E(4, 4)})});
    }
    return out;
}

} // namespace tleib

#endif
