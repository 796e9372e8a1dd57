#ifndef TLEIB_CONSTRAINTS_HPP
#define TLEIB_CONSTRAINTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "tleib/algebra.hpp"
#include "tleib/rational.hpp"

namespace tleib {

/// One homogeneous constraint over the n^2 matrix unknowns a_{pq}: a sparse
/// list of (unknown index, coefficient) terms, sorted by unknown index.
/// Unknowns are ordered row-major: a_{pq} has index (p-1)*n + (q-1).
struct ConstraintRow {
    std::vector<std::pair<int, Rational>> terms;

    friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

/// A homogeneous linear system C a = 0 over the entries of an n x n matrix.
class ConstraintSystem {
public:
    explicit ConstraintSystem(int map_dim)
        : map_dim_(map_dim), unknown_count_(map_dim * map_dim) {}

    int map_dim() const { return map_dim_; }
    int unknown_count() const { return unknown_count_; }
    const std::vector<ConstraintRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    /// Adds a row; identically-zero rows are dropped.
    void add_row(ConstraintRow row) {
        if (!row.terms.empty()) rows_.push_back(std::move(row));
    }

    static int unknown_index(int map_dim, int p, int q) {
        return (p - 1) * map_dim + (q - 1);
    }

private:
    int map_dim_;
    int unknown_count_;
    std::vector<ConstraintRow> rows_;
};

namespace detail {

// Accumulates coefficients per unknown, then emits a sparse sorted row with
// zeros dropped.
class RowBuilder {
public:
    explicit RowBuilder(int map_dim) : n_(map_dim) {}

    void add(int p, int q, const Rational& delta) {
        if (delta == 0) return;
        acc_[ConstraintSystem::unknown_index(n_, p, q)] += delta;
    }

    ConstraintRow take() {
        ConstraintRow row;
        for (auto& [col, c] : acc_)
            if (c != 0) row.terms.emplace_back(col, std::move(c));
        acc_.clear();
        return row;
    }

private:
    int n_;
    std::map<int, Rational> acc_;
};

} // namespace detail

/// Linear system for the centroid: for every basis triple (i,j,k) and output
/// coordinate q, three rows
///   Phi([.])  - first-slot insertion:  sum_r chi_ijk^r a_qr - sum_p a_pi chi_pjk^q = 0
///   first     - second-slot insertion: sum_p a_pi chi_pjk^q - sum_p a_pj chi_ipk^q = 0
///   second    - third-slot insertion:  sum_p a_pj chi_ipk^q - sum_p a_pk chi_ijp^q = 0
/// The chain encodes the four-way equality with three independent rows.
inline ConstraintSystem centroid_constraints(const TernaryAlgebra& a) {
    const int n = a.dim();
    const BracketTable& t = a.table;
    ConstraintSystem sys(n);
    detail::RowBuilder row(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int q = 1; q <= n; ++q) {
                    for (int r = 1; r <= n; ++r) row.add(q, r, t.coeff(i, j, k, r));
                    for (int p = 1; p <= n; ++p) row.add(p, i, -t.coeff(p, j, k, q));
                    sys.add_row(row.take());

                    for (int p = 1; p <= n; ++p) {
                        row.add(p, i, t.coeff(p, j, k, q));
                        row.add(p, j, -t.coeff(i, p, k, q));
                    }
                    sys.add_row(row.take());

                    for (int p = 1; p <= n; ++p) {
                        row.add(p, j, t.coeff(i, p, k, q));
                        row.add(p, k, -t.coeff(i, j, p, q));
                    }
                    sys.add_row(row.take());
                }
    return sys;
}

/// Linear system for the quasi-centroid: the slot-insertion chain only, with
/// no condition on Phi of the product. Two rows per (i,j,k,q).
inline ConstraintSystem qcentroid_constraints(const TernaryAlgebra& a) {
    const int n = a.dim();
    const BracketTable& t = a.table;
    ConstraintSystem sys(n);
    detail::RowBuilder row(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int q = 1; q <= n; ++q) {
                    for (int p = 1; p <= n; ++p) {
                        row.add(p, i, t.coeff(p, j, k, q));
                        row.add(p, j, -t.coeff(i, p, k, q));
                    }
                    sys.add_row(row.take());

                    for (int p = 1; p <= n; ++p) {
                        row.add(p, j, t.coeff(i, p, k, q));
                        row.add(p, k, -t.coeff(i, j, p, q));
                    }
                    sys.add_row(row.take());
                }
    return sys;
}

/// Linear system for derivations: one row per (i,j,k,q) encoding
///   sum_r a_qr chi_ijk^r - sum_p (a_pi chi_pjk^q + a_pj chi_ipk^q + a_pk chi_ijp^q) = 0.
inline ConstraintSystem derivation_constraints(const TernaryAlgebra& a) {
    const int n = a.dim();
    const BracketTable& t = a.table;
    ConstraintSystem sys(n);
    detail::RowBuilder row(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int q = 1; q <= n; ++q) {
                    for (int r = 1; r <= n; ++r) row.add(q, r, t.coeff(i, j, k, r));
                    for (int p = 1; p <= n; ++p) {
                        row.add(p, i, -t.coeff(p, j, k, q));
                        row.add(p, j, -t.coeff(i, p, k, q));
                        row.add(p, k, -t.coeff(i, j, p, q));
                    }
                    sys.add_row(row.take());
                }
    return sys;
}

/// Linear system for central derivations, straight from the definition: the
/// image of every product and every slot insertion vanishes. Four rows per
/// (i,j,k,q).
inline ConstraintSystem central_derivation_constraints(const TernaryAlgebra& a) {
    const int n = a.dim();
    const BracketTable& t = a.table;
    ConstraintSystem sys(n);
    detail::RowBuilder row(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int q = 1; q <= n; ++q) {
                    for (int r = 1; r <= n; ++r) row.add(q, r, t.coeff(i, j, k, r));
                    sys.add_row(row.take());
                    for (int p = 1; p <= n; ++p) row.add(p, i, t.coeff(p, j, k, q));
                    sys.add_row(row.take());
                    for (int p = 1; p <= n; ++p) row.add(p, j, t.coeff(i, p, k, q));
                    sys.add_row(row.take());
                    for (int p = 1; p <= n; ++p) row.add(p, k, t.coeff(i, j, p, q));
                    sys.add_row(row.take());
                }
    return sys;
}

/// Substitutes a concrete map into one constraint row.
inline Rational evaluate_row(const ConstraintRow& row, const std::vector<Rational>& flat) {
    Rational acc;
    for (const auto& [col, c] : row.terms) acc += c * flat.at(static_cast<std::size_t>(col));
    return acc;
}

} // namespace tleib

#endif
