#ifndef TLEIB_LINEAR_MAP_HPP
#define TLEIB_LINEAR_MAP_HPP

#include <vector>

#include "tleib/algebra.hpp"
#include "tleib/errors.hpp"
#include "tleib/rational.hpp"

namespace tleib {

/// An endomorphism of the algebra in the fixed basis, stored as the n x n
/// matrix (a_{ji}) with the column convention Phi(e_i) = sum_j a_{ji} e_j.
/// entry(row, col) is 1-based.
class LinearMap {
public:
    explicit LinearMap(int dim)
        : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        if (dim < 1) throw DimMismatch("LinearMap dimension must be >= 1");
    }

    static LinearMap identity(int dim) {
        LinearMap m(dim);
        for (int i = 1; i <= dim; ++i) m.entry(i, i) = 1;
        return m;
    }

    /// Elementary matrix E_{pq}: maps e_q to e_p, kills the other basis vectors.
    static LinearMap elementary(int dim, int p, int q) {
        LinearMap m(dim);
        m.entry(p, q) = 1;
        return m;
    }

    int dim() const { return dim_; }

    Rational& entry(int row, int col) { return entries_.at(index(row, col)); }
    const Rational& entry(int row, int col) const { return entries_.at(index(row, col)); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    CoordVector apply(const CoordVector& x) const {
        if (x.dim() != dim_) throw DimMismatch("LinearMap applied to wrong dimension");
        CoordVector out(dim_);
        for (int r = 1; r <= dim_; ++r)
            for (int c = 1; c <= dim_; ++c) {
                const Rational& a = entry(r, c);
                if (a != 0) out.at(r) += a * x.at(c);
            }
        return out;
    }

    /// Row-major flattening; position (r,c) lands at (r-1)*n + (c-1).
    const std::vector<Rational>& flat() const { return entries_; }

    static LinearMap from_flat(int dim, const std::vector<Rational>& flat) {
        LinearMap m(dim);
        if (flat.size() != m.entries_.size())
            throw DimMismatch("flat vector has wrong length");
        m.entries_ = flat;
        return m;
    }

    LinearMap& operator+=(const LinearMap& o) {
        require_same(o);
        for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += o.entries_[t];
        return *this;
    }

    LinearMap& operator-=(const LinearMap& o) {
        require_same(o);
        for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= o.entries_[t];
        return *this;
    }

    LinearMap& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
    friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
    friend LinearMap operator*(const Rational& s, LinearMap m) { return m *= s; }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 1 || row > dim_ || col < 1 || col > dim_)
            throw DimMismatch("matrix index outside 1..n");
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(col - 1);
    }

    void require_same(const LinearMap& o) const {
        if (o.dim_ != dim_) throw AmbientMismatch("LinearMap dimensions differ");
    }

    int dim_;
    std::vector<Rational> entries_;
};

/// Matrix product m1 * m2 (apply m2 first).
inline LinearMap compose(const LinearMap& m1, const LinearMap& m2) {
    if (m1.dim() != m2.dim()) throw AmbientMismatch("compose: dimensions differ");
    const int n = m1.dim();
    LinearMap out(n);
    for (int r = 1; r <= n; ++r)
        for (int k = 1; k <= n; ++k) {
            const Rational& a = m1.entry(r, k);
            if (a == 0) continue;
            for (int c = 1; c <= n; ++c) {
                const Rational& b = m2.entry(k, c);
                if (b != 0) out.entry(r, c) += a * b;
            }
        }
    return out;
}

inline LinearMap commutator(const LinearMap& m1, const LinearMap& m2) {
    return compose(m1, m2) - compose(m2, m1);
}

} // namespace tleib

#endif
