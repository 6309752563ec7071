#ifndef TWK_REPRINGS_HPP
#define TWK_REPRINGS_HPP

#include "twk/laurent.hpp"

#include <array>
#include <optional>
#include <vector>

namespace twk {

/// The working rings.  TorusSU3 elements are stored eliminated over
/// {t1, t2} (t3 = (t1*t2)^-1).
enum class Ring : uint8_t {
    TorusSU2,  // Z[t^+-1]
    TorusSU3,  // Z[t1^+-1, t2^+-1, t3^+-1] / (t1*t2*t3 - 1), eliminated
    U2,        // Z[s, d^+-1]
    SU2,       // Z[rho]
    SU3,       // Z[s1, s2]
};

VarSet ring_vars(Ring r);

/// Ring element: a Laurent polynomial tagged with its ring.
struct RingElement {
    Ring ring;
    LaurentPoly poly;

    bool operator==(const RingElement& o) const { return ring == o.ring && poly == o.poly; }
};

RingElement make_element(Ring r, const LaurentPoly& p);
RingElement ring_zero(Ring r, Domain dom = Domain::Integer);
RingElement ring_one(Ring r, Domain dom = Domain::Integer);

/// Permutation of {1,2,3}; perm[i] is the image of i (0-based storage).
/// SU(2)/U(2) Weyl elements embed as the transposition (12) resp. identity.
struct WeylElement {
    std::array<uint8_t, 3> perm{0, 1, 2};

    static WeylElement identity() { return {}; }
    static WeylElement transposition(int i, int j);  // 1-based labels
    static WeylElement cycle123();                   // 1 -> 2 -> 3 -> 1
    static std::vector<WeylElement> s3();            // all six, fixed order

    WeylElement compose(const WeylElement& o) const;  // this after o
    int sign() const;
    bool is_identity() const { return perm == std::array<uint8_t, 3>{0, 1, 2}; }
    /// The unique fixed index (1-based) of a transposition.
    int fixed_point() const;
    bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

/// Weyl action. TorusSU2: the nontrivial element sends t -> t^-1.
/// TorusSU3: permutes t1,t2,t3 and re-eliminates t3. U2/SU2/SU3: trivial.
RingElement weyl_act(const WeylElement& w, const RingElement& x);

/// Plain averaging (1/6) * sum over W of w.x; the output is W-invariant.
RingElement symmetrize(const RingElement& x);

/// Sign-twisted averaging (1/6) * sum of sign(w) * w.x; the output is
/// antisymmetric (w.y = sign(w) y).
RingElement signed_symmetrize(const RingElement& x);

/// Rewrite a Weyl-invariant element in the generators of the invariant
/// subring: TorusSU2 -> SU2 (t + t^-1 -> rho), TorusSU3 -> SU3
/// (elementary symmetric rewrite with e3 = 1), XY-pair -> U2 (s = x+y,
/// d = xy, Laurent exponents cleared through d).  Throws on
/// non-invariant input.
RingElement to_invariant_ring(const RingElement& x, Ring target);
LaurentPoly xy_to_u2(const LaurentPoly& f);

/// Edge labels for the three U(2) subgroups of SU(3).
enum class Edge : uint8_t { E01, E12, E02 };

/// The transposition stabilising the edge: E01 pairs {2,3}, E12 pairs
/// {1,3}, E02 pairs {1,2}; correctness of this assignment is enforced
/// downstream by d1 o d0 = 0 and the Bredon comparison identities.
WeylElement edge_transposition(Edge e);
/// 1-based index of the torus coordinate fixed by the edge's transposition.
int edge_fixed_variable(Edge e);

enum class Hom : uint8_t {
    SU3toU2,       // s1 -> s + d^-1, s2 -> d^-1 s + d
    SU2toTorus,    // rho -> t + t^-1
    SU3toTorus,    // s1, s2 -> elementary symmetric polynomials
    U2toTorus01,   // s -> t2+t3, d -> t2 t3
    U2toTorus12,   // s -> t1+t3, d -> t1 t3
    U2toTorus02,   // s -> t1+t2, d -> t1 t2
};

Hom edge_hom(Edge e);
RingElement restrict_hom(const RingElement& x, Hom hom);

/// Torus coordinates t1, t2, t3 as eliminated TorusSU3 monomials.
LaurentPoly torus_coordinate(int i, Domain dom = Domain::Integer);  // 1-based

/// f = g1 + t*g2 with g1, g2 in Z[rho]; exact by construction.
std::pair<RingElement, RingElement> su2_decompose(const RingElement& f);

/// Coefficients of f over the Steinberg basis
/// beta = {1, t2, t3, t2^-1, t1^-1, t1^-1 t3} as elements of Q[s1,s2].
/// Throws if the Cramer division fails (cannot happen for valid input).
std::array<RingElement, 6> steinberg_decompose(const RingElement& f);
const std::array<LaurentPoly, 6>& steinberg_basis();

/// Coefficients of f (invariant under the given transposition) over the
/// candidate basis {1, t_i, t_i^-1} of the fixed subring, t_i the fixed
/// coordinate.  Returns nullopt if the candidate basis fails so the
/// caller can fall back to Groebner kernel generators.
std::optional<std::array<RingElement, 3>> fixed_submodule_decompose(const RingElement& f,
                                                                    const WeylElement& transposition);

/// Lazy localization at F(rho): numerator / F(rho)^denom_exp.  The
/// denominator polynomial (the F(rho)-image in the element's ring) is
/// supplied by the caller via the functor context; see expfunctor.
struct Localized {
    RingElement numerator;
    uint32_t denom_exp = 0;
};

/// Canonicalize: strip denominator factors dividing the numerator.
Localized localized_reduce(const Localized& x, const RingElement& denom_poly);
/// a/F^j == b/F^k decided by cross-multiplication.
bool localized_equal(const Localized& a, const Localized& b, const RingElement& denom_poly);
Localized localized_add(const Localized& a, const Localized& b, const RingElement& denom_poly);
Localized localized_mul(const Localized& a, const Localized& b);

} // namespace twk

#endif
