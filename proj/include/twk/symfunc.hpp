#ifndef TWK_SYMFUNC_HPP
#define TWK_SYMFUNC_HPP

#include "twk/reprings.hpp"

#include <optional>
#include <vector>

namespace twk {

/// A torus element p with w.p = sign(w) p for all w in S3; checked on
/// construction.
struct AntisymmetricElement {
    RingElement value;  // TorusSU3

    static AntisymmetricElement checked(const RingElement& v);
};

/// Complete homogeneous symmetric polynomial h_k(t1,t2,t3) reduced to
/// Z[s1,s2] with e3 = 1, via h_k = s1 h_{k-1} - s2 h_{k-2} + h_{k-3};
/// h_{-1} = h_{-2} = 0.
RingElement h_complete(int k, Domain dom = Domain::Integer);

/// The antisymmetrizer polynomial prod_{i<j} (t_i - t_j) =
/// (t1-t2)(t1-t3)(t2-t3), in eliminated torus coordinates.  Normalised
/// so that psi of the Koszul generators reproduces the closed forms
/// psi(q+) = -h_{m-2}, psi(q-) = h_{m-1} for the classical twists.
AntisymmetricElement vandermonde(Domain dom = Domain::Integer);

/// The module isomorphism from antisymmetric W-equivariants to
/// symmetric invariants: exact division by the Vandermonde followed by
/// the rewrite into Z[s1,s2].
RingElement psi(const AntisymmetricElement& p);

/// A Galois row seed: a one-variable Laurent polynomial g; the row is
/// (g(t1), g(t2), g(t3)).
struct RowSeed {
    LaurentPoly seed;  // VarSet::T
};

/// -(1/Delta_paper) det of the 3x3 matrix of Galois rows, where
/// Delta_paper = (t1-t2)(t2-t3)(t3-t1) = -vandermonde.  Equivalently
/// +det/vandermonde; with rows (F; t; 1) this is the chi_1 generator.
RingElement bialternant(const std::vector<RowSeed>& rows);

/// Raw determinant of the Galois-row matrix as a torus element.
RingElement galois_determinant(const std::vector<RowSeed>& rows);

} // namespace twk

#endif
