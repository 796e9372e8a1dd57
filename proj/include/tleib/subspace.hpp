#ifndef TLEIB_SUBSPACE_HPP
#define TLEIB_SUBSPACE_HPP

#include <vector>

#include "tleib/constraints.hpp"
#include "tleib/errors.hpp"
#include "tleib/linear_map.hpp"
#include "tleib/rational.hpp"

namespace tleib {
namespace detail {

using DenseRow = std::vector<Rational>;

inline void clear_denominators(DenseRow& row) {
    BigInt l = 1;
    for (const auto& v : row)
        if (v != 0) l = lcm(l, denominator(v));
    if (l == 1) return;
    Rational f(l);
    for (auto& v : row) v *= f;
}

/// In-place reduction to reduced row echelon form. Forward pass is
/// fraction-free (Bareiss cross-multiplication on denominator-cleared rows),
/// pivots are taken in increasing column order with no row heuristics beyond
/// first nonzero entry; leading-one normalization and back-elimination happen
/// at the end. Zero rows are removed. Returns the pivot columns.
///
/// The nonzero rows of the RREF are the unique canonical basis of the row
/// space, so two spanning sets of the same subspace always reduce to
/// identical output.
inline std::vector<int> rref(std::vector<DenseRow>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m[0].size();
    for (auto& row : m) clear_denominators(row);

    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t hit = r;
        while (hit < m.size() && m[hit][c] == 0) ++hit;
        if (hit == m.size()) continue;
        std::swap(m[r], m[hit]);
        const Rational pivot = m[r][c];
        for (std::size_t t = r + 1; t < m.size(); ++t) {
            const Rational factor = m[t][c];
            for (std::size_t u = c; u < ncols; ++u)
                m[t][u] = (pivot * m[t][u] - factor * m[r][u]) / prev;
        }
        prev = pivot;
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);

    for (std::size_t t = r; t-- > 0;) {
        const int pc = pivots[t];
        const Rational lead = m[t][static_cast<std::size_t>(pc)];
        for (auto& v : m[t]) v /= lead;
        for (std::size_t above = 0; above < t; ++above) {
            const Rational factor = m[above][static_cast<std::size_t>(pc)];
            if (factor == 0) continue;
            for (std::size_t u = 0; u < ncols; ++u)
                m[above][u] -= factor * m[t][u];
        }
    }
    return pivots;
}

} // namespace detail

/// A linear subspace of the n x n matrices, held as the unique RREF basis of
/// its row-major flattenings. Canonical: equal subspaces compare equal
/// entry-for-entry.
class MatrixSubspace {
public:
    /// Canonical subspace spanned by the given maps.
    static MatrixSubspace span_of(int map_dim, const std::vector<LinearMap>& maps) {
        std::vector<detail::DenseRow> rows;
        rows.reserve(maps.size());
        for (const auto& m : maps) {
            if (m.dim() != map_dim) throw AmbientMismatch("span_of: map of wrong dimension");
            rows.push_back(m.flat());
        }
        return MatrixSubspace(map_dim, std::move(rows));
    }

    /// All of End(L): dimension n^2.
    static MatrixSubspace full(int map_dim) {
        std::vector<detail::DenseRow> rows;
        const int amb = map_dim * map_dim;
        for (int t = 0; t < amb; ++t) {
            detail::DenseRow row(static_cast<std::size_t>(amb));
            row[static_cast<std::size_t>(t)] = 1;
            rows.push_back(std::move(row));
        }
        return MatrixSubspace(map_dim, std::move(rows));
    }

    static MatrixSubspace zero(int map_dim) { return MatrixSubspace(map_dim, {}); }

    int map_dim() const { return map_dim_; }
    int ambient_dim() const { return map_dim_ * map_dim_; }
    int dimension() const { return static_cast<int>(rows_.size()); }

    const std::vector<LinearMap>& basis() const { return basis_maps_; }
    const std::vector<detail::DenseRow>& basis_rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    /// Remainder of v after reduction against the RREF basis; zero iff v is in
    /// the subspace.
    detail::DenseRow reduce(const std::vector<Rational>& v) const {
        detail::DenseRow rem = v;
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const Rational factor = rem[static_cast<std::size_t>(pivots_[t])];
            if (factor == 0) continue;
            for (std::size_t u = 0; u < rem.size(); ++u) rem[u] -= factor * rows_[t][u];
        }
        return rem;
    }

    bool contains(const LinearMap& m) const {
        if (m.dim() != map_dim_) throw AmbientMismatch("contains: map of wrong dimension");
        for (const auto& v : reduce(m.flat()))
            if (v != 0) return false;
        return true;
    }

private:
    MatrixSubspace(int map_dim, std::vector<detail::DenseRow> rows)
        : map_dim_(map_dim), rows_(std::move(rows)) {
        if (map_dim < 1) throw DimMismatch("MatrixSubspace dimension must be >= 1");
        pivots_ = detail::rref(rows_);
        basis_maps_.reserve(rows_.size());
        for (const auto& r : rows_) basis_maps_.push_back(LinearMap::from_flat(map_dim_, r));
    }

    friend MatrixSubspace nullspace(const ConstraintSystem&);
    friend MatrixSubspace annihilator(const MatrixSubspace&);
    friend MatrixSubspace intersect(const MatrixSubspace&, const MatrixSubspace&);

    int map_dim_;
    std::vector<detail::DenseRow> rows_;
    std::vector<int> pivots_;
    std::vector<LinearMap> basis_maps_;
};

/// Exact solution space {v : Cv = 0}. An empty system yields the full ambient
/// space. The returned basis is the RREF canonicalization of the standard
/// free-column kernel vectors.
inline MatrixSubspace nullspace(const ConstraintSystem& sys) {
    const int n = sys.map_dim();
    const std::size_t ncols = static_cast<std::size_t>(sys.unknown_count());
    if (sys.rows().empty()) return MatrixSubspace::full(n);

    std::vector<detail::DenseRow> m;
    m.reserve(sys.rows().size());
    for (const auto& row : sys.rows()) {
        detail::DenseRow dense(ncols);
        for (const auto& [col, c] : row.terms) dense[static_cast<std::size_t>(col)] = c;
        m.push_back(std::move(dense));
    }
    const std::vector<int> pivots = detail::rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (int pc : pivots) is_pivot[static_cast<std::size_t>(pc)] = true;

    std::vector<detail::DenseRow> kernel;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        detail::DenseRow v(ncols);
        v[f] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t)
            v[static_cast<std::size_t>(pivots[t])] = -m[t][f];
        kernel.push_back(std::move(v));
    }
    return MatrixSubspace(n, std::move(kernel));
}

/// Orthogonal complement under the entrywise bilinear form. Over the
/// rationals the form is positive definite, so ann(ann(S)) = S.
inline MatrixSubspace annihilator(const MatrixSubspace& s) {
    ConstraintSystem sys(s.map_dim());
    for (const auto& row : s.basis_rows()) {
        ConstraintRow cr;
        for (std::size_t col = 0; col < row.size(); ++col)
            if (row[col] != 0) cr.terms.emplace_back(static_cast<int>(col), row[col]);
        sys.add_row(std::move(cr));
    }
    return nullspace(sys);
}

inline bool subspace_equal(const MatrixSubspace& s1, const MatrixSubspace& s2) {
    if (s1.map_dim() != s2.map_dim())
        throw AmbientMismatch("subspace_equal: ambient spaces differ");
    return s1.basis_rows() == s2.basis_rows();
}

/// Intersection via annihilators: (S1 cap S2) = ann(ann(S1) + ann(S2)).
inline MatrixSubspace intersect(const MatrixSubspace& s1, const MatrixSubspace& s2) {
    if (s1.map_dim() != s2.map_dim())
        throw AmbientMismatch("intersect: ambient spaces differ");
    const MatrixSubspace a1 = annihilator(s1);
    const MatrixSubspace a2 = annihilator(s2);
    std::vector<LinearMap> combined = a1.basis();
    combined.insert(combined.end(), a2.basis().begin(), a2.basis().end());
    return annihilator(MatrixSubspace::span_of(s1.map_dim(), combined));
}

} // namespace tleib

#endif
