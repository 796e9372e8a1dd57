#ifndef TLEIB_ALGEBRA_HPP
#define TLEIB_ALGEBRA_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tleib/errors.hpp"
#include "tleib/rational.hpp"

namespace tleib {

/// Coordinates of an element x = sum_i x_i e_i in the fixed basis.
/// Indices are 1-based throughout, matching the classical notation.
class CoordVector {
public:
    explicit CoordVector(int dim) : entries_(static_cast<std::size_t>(dim)) {
        if (dim < 1) throw DimMismatch("CoordVector dimension must be >= 1");
    }

    /// The basis vector e_i.
    static CoordVector basis(int dim, int i) {
        CoordVector v(dim);
        v.at(i) = 1;
        return v;
    }

    int dim() const { return static_cast<int>(entries_.size()); }

    Rational& at(int i) { return entries_.at(static_cast<std::size_t>(i - 1)); }
    const Rational& at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const CoordVector&, const CoordVector&) = default;

    CoordVector& operator+=(const CoordVector& o) {
        if (o.dim() != dim()) throw DimMismatch("CoordVector size mismatch");
        for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += o.entries_[t];
        return *this;
    }

    CoordVector& operator-=(const CoordVector& o) {
        if (o.dim() != dim()) throw DimMismatch("CoordVector size mismatch");
        for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= o.entries_[t];
        return *this;
    }

    CoordVector& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
    friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
    friend CoordVector operator*(const Rational& s, CoordVector v) { return v *= s; }

private:
    std::vector<Rational> entries_;
};

/// Index quadruple (i,j,k,p) of a structure constant.
using IndexQuad = std::array<int, 4>;

/// Sparse structure-constant tensor of a ternary algebra:
/// [e_i, e_j, e_k] = sum_p coeff(i,j,k,p) e_p.
/// Zero coefficients are never stored, so equality of tables is equality of
/// the underlying algebras' multiplication.
class BracketTable {
public:
    explicit BracketTable(int dim) : dim_(dim) {
        if (dim < 1) throw DimMismatch("BracketTable dimension must be >= 1");
    }

    int dim() const { return dim_; }

    /// Sets chi_{ijk}^p; a zero value erases the entry.
    void set(int i, int j, int k, int p, const Rational& c) {
        check_index(i);
        check_index(j);
        check_index(k);
        check_index(p);
        IndexQuad key{i, j, k, p};
        if (c == 0)
            coeffs_.erase(key);
        else
            coeffs_[key] = c;
    }

    const Rational& coeff(int i, int j, int k, int p) const {
        auto it = coeffs_.find(IndexQuad{i, j, k, p});
        if (it == coeffs_.end()) {
            static const Rational zero{};
            return zero;
        }
        return it->second;
    }

    bool empty() const { return coeffs_.empty(); }
    std::size_t entry_count() const { return coeffs_.size(); }

    /// Entries in lexicographic (i,j,k,p) order.
    const std::map<IndexQuad, Rational>& entries() const { return coeffs_; }

    friend bool operator==(const BracketTable&, const BracketTable&) = default;

private:
    void check_index(int v) const {
        if (v < 1 || v > dim_)
            throw DimMismatch("index " + std::to_string(v) + " outside 1.." +
                              std::to_string(dim_));
    }

    int dim_;
    std::map<IndexQuad, Rational> coeffs_;
};

struct TernaryAlgebra {
    std::string name;
    BracketTable table;
    std::map<std::string, Rational> params; // bound family parameters, if any

    int dim() const { return table.dim(); }
};

/// Trilinear extension of the bracket to arbitrary coordinate vectors.
inline CoordVector bracket(const TernaryAlgebra& a, const CoordVector& x,
                           const CoordVector& y, const CoordVector& z) {
    const int n = a.dim();
    if (x.dim() != n || y.dim() != n || z.dim() != n)
        throw DimMismatch("bracket arguments must have the algebra's dimension");
    CoordVector out(n);
    for (const auto& [key, c] : a.table.entries()) {
        const auto& [i, j, k, p] = key;
        Rational w = x.at(i) * y.at(j) * z.at(k);
        if (w != 0) out.at(p) += w * c;
    }
    return out;
}

/// One violated instance of the coordinate Leibniz identity: indices of the
/// basis quintuple plus output coordinate, and the nonzero residual.
struct LeibnizDefect {
    int i, j, k, p, q, s;
    Rational residual;

    friend bool operator==(const LeibnizDefect&, const LeibnizDefect&) = default;
};

/// Evaluates, for every (i,j,k,p,q,s),
///   sum_r ( chi_ijk^r chi_rpq^s - chi_kpq^r chi_ijr^s
///          - chi_jpq^r chi_irk^s - chi_ipq^r chi_rjk^s )
/// and collects the tuples where the sum is nonzero. Empty result means the
/// table defines a ternary Leibniz algebra.
inline std::vector<LeibnizDefect> leibniz_defects(const TernaryAlgebra& a) {
    const int n = a.dim();
    const BracketTable& t = a.table;
    std::vector<LeibnizDefect> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int p = 1; p <= n; ++p)
                    for (int q = 1; q <= n; ++q)
                        for (int s = 1; s <= n; ++s) {
                            Rational acc;
                            for (int r = 1; r <= n; ++r) {
                                acc += t.coeff(i, j, k, r) * t.coeff(r, p, q, s);
                                acc -= t.coeff(k, p, q, r) * t.coeff(i, j, r, s);
                                acc -= t.coeff(j, p, q, r) * t.coeff(i, r, k, s);
                                acc -= t.coeff(i, p, q, r) * t.coeff(r, j, k, s);
                            }
                            if (acc != 0)
                                out.push_back({i, j, k, p, q, s, acc});
                        }
    return out;
}

inline bool is_leibniz(const TernaryAlgebra& a) { return leibniz_defects(a).empty(); }

/// Full S3-symmetry of the bracket: chi is invariant under every permutation
/// of the three lower indices.
inline bool is_commutative(const TernaryAlgebra& a) {
    const BracketTable& t = a.table;
    for (const auto& [key, c] : t.entries()) {
        const auto& [i, j, k, p] = key;
        const std::array<IndexQuad, 5> perms{
            IndexQuad{i, k, j, p}, IndexQuad{j, i, k, p}, IndexQuad{j, k, i, p},
            IndexQuad{k, i, j, p}, IndexQuad{k, j, i, p}};
        for (const auto& g : perms)
            if (t.coeff(g[0], g[1], g[2], g[3]) != c) return false;
    }
    return true;
}

inline bool is_abelian(const TernaryAlgebra& a) { return a.table.empty(); }

} // namespace tleib

#endif
