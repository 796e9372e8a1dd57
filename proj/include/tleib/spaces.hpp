#ifndef TLEIB_SPACES_HPP
#define TLEIB_SPACES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "tleib/constraints.hpp"
#include "tleib/subspace.hpp"

namespace tleib {

inline MatrixSubspace centroid(const TernaryAlgebra& a) {
    return nullspace(centroid_constraints(a));
}

inline MatrixSubspace quasi_centroid(const TernaryAlgebra& a) {
    return nullspace(qcentroid_constraints(a));
}

inline MatrixSubspace derivations(const TernaryAlgebra& a) {
    return nullspace(derivation_constraints(a));
}

/// Central derivations, computed twice: directly from the vanishing
/// conditions and as centroid(a) cap derivations(a). The two canonical bases
/// must coincide; a difference means the solver is broken, not the input.
inline MatrixSubspace central_derivations(const TernaryAlgebra& a) {
    MatrixSubspace direct = nullspace(central_derivation_constraints(a));
    MatrixSubspace via_intersection = intersect(centroid(a), derivations(a));
    if (!subspace_equal(direct, via_intersection))
        throw InternalInconsistency(
            "central derivations: definition route and intersection route disagree");
    return direct;
}

/// Outcome of the closure checks tying the computed operator spaces together.
struct ClosureReport {
    bool composition_closed = false;   // Cent . Cent subset Cent
    bool centroid_in_qcentroid = false; // Cent subset QCent
    bool comp_maps_to_der = false;     // Cent . Der subset Der
    bool commutator_in_centroid = false; // [Cent, Der] subset Cent
    bool cent_dim_le_qcent_dim = false;
    int dim_cent = 0;
    int dim_qcent = 0;
    int dim_der = 0;
    std::vector<std::string> failures; // one witness line per violated membership

    bool all() const {
        return composition_closed && centroid_in_qcentroid && comp_maps_to_der &&
               commutator_in_centroid && cent_dim_le_qcent_dim;
    }
};

namespace detail {

inline std::string residual_witness(const MatrixSubspace& space, const LinearMap& m) {
    std::ostringstream os;
    os << "residual after reduction:";
    const auto rem = space.reduce(m.flat());
    const int n = space.map_dim();
    for (std::size_t t = 0; t < rem.size(); ++t)
        if (rem[t] != 0)
            os << " (" << (static_cast<int>(t) / n + 1) << ","
               << (static_cast<int>(t) % n + 1) << ")=" << to_string(rem[t]);
    return os.str();
}

// Shared by closure_report (which gates on the Leibniz identity) and the
// catalog verifier (which wants the flags even for a defective table).
inline ClosureReport closure_checks(const TernaryAlgebra& a) {
    ClosureReport rep;
    const MatrixSubspace cent = centroid(a);
    const MatrixSubspace qcent = quasi_centroid(a);
    const MatrixSubspace der = derivations(a);
    rep.dim_cent = cent.dimension();
    rep.dim_qcent = qcent.dimension();
    rep.dim_der = der.dimension();

    rep.composition_closed = true;
    for (std::size_t s = 0; s < cent.basis().size(); ++s)
        for (std::size_t t = 0; t < cent.basis().size(); ++t) {
            LinearMap prod = compose(cent.basis()[s], cent.basis()[t]);
            if (!cent.contains(prod)) {
                rep.composition_closed = false;
                rep.failures.push_back("cent[" + std::to_string(s) + "] o cent[" +
                                       std::to_string(t) + "] escapes the centroid; " +
                                       residual_witness(cent, prod));
            }
        }

    rep.centroid_in_qcentroid = true;
    for (std::size_t s = 0; s < cent.basis().size(); ++s)
        if (!qcent.contains(cent.basis()[s])) {
            rep.centroid_in_qcentroid = false;
            rep.failures.push_back("cent[" + std::to_string(s) +
                                   "] is not in the quasi-centroid; " +
                                   residual_witness(qcent, cent.basis()[s]));
        }

    rep.comp_maps_to_der = true;
    rep.commutator_in_centroid = true;
    for (std::size_t s = 0; s < cent.basis().size(); ++s)
        for (std::size_t t = 0; t < der.basis().size(); ++t) {
            LinearMap prod = compose(cent.basis()[s], der.basis()[t]);
            if (!der.contains(prod)) {
                rep.comp_maps_to_der = false;
                rep.failures.push_back("cent[" + std::to_string(s) + "] o der[" +
                                       std::to_string(t) + "] is not a derivation; " +
                                       residual_witness(der, prod));
            }
            LinearMap comm = commutator(cent.basis()[s], der.basis()[t]);
            if (!cent.contains(comm)) {
                rep.commutator_in_centroid = false;
                rep.failures.push_back("[cent[" + std::to_string(s) + "], der[" +
                                       std::to_string(t) + "]] escapes the centroid; " +
                                       residual_witness(cent, comm));
            }
        }

    rep.cent_dim_le_qcent_dim = rep.dim_cent <= rep.dim_qcent;
    if (!rep.cent_dim_le_qcent_dim)
        rep.failures.push_back("dim Cent = " + std::to_string(rep.dim_cent) +
                               " exceeds dim QCent = " + std::to_string(rep.dim_qcent));
    return rep;
}

} // namespace detail

/// Evaluates the five closure properties on the computed spaces. Requires a
/// ternary Leibniz algebra; the properties are theorems under that hypothesis,
/// so any failure here is diagnostic output, not expected behavior.
inline ClosureReport closure_report(const TernaryAlgebra& a) {
    if (!is_leibniz(a))
        throw NotLeibniz("closure_report: '" + a.name + "' violates the Leibniz identity");
    return detail::closure_checks(a);
}

} // namespace tleib

#endif
