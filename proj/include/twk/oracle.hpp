#ifndef TWK_ORACLE_HPP
#define TWK_ORACLE_HPP

#include "twk/expfunctor.hpp"
#include "twk/reprings.hpp"

#include <vector>

namespace twk {

enum class Group : uint8_t { SU2, SU3 };

/// A point of the complexified maximal torus: unit-modulus coordinates
/// with product 1 ((z, z^-1) for SU(2), (z1, z2, z3) for SU(3)).
struct TorusPoint {
    Group group;
    std::vector<Complex> z;
    uint64_t seed;
};

/// Deterministic sampling given the seed; points with |F(rho)| < 1e-6
/// are rejected and resampled.
std::vector<TorusPoint> sample_points(Group g, const ExponentialFunctor& F, int count,
                                      uint64_t seed);

/// Evaluate a ring element at a torus point through the embedding of
/// its ring: t -> z; rho -> z + z^-1; (t1,t2) -> (z1,z2);
/// (s1,s2) -> elementary symmetric values; U2 at the edge-compatible
/// coordinates (s -> x + y, d -> x y with {x,y} the paired coordinates).
Complex eval_at(const RingElement& x, const TorusPoint& p, Edge edge = Edge::E01);
Complex eval_at(const Localized& x, const ExponentialFunctor& F, const TorusPoint& p,
                Edge edge = Edge::E01);

struct IdentityReport {
    double max_abs_err = 0.0;
    bool pass = false;
    int points_checked = 0;
    int points_failed = 0;
};

/// Numeric check of lhs == rhs over the sampled points; pass iff the
/// maximum error stays below 1e-8.  The oracle is a falsifier: the
/// symbolic checks remain authoritative.
IdentityReport check_identity(const RingElement& lhs, const RingElement& rhs,
                              const std::vector<TorusPoint>& points, Edge edge = Edge::E01);

/// Same check with one coefficient of lhs perturbed by +1 (on the
/// leading term, or the constant 1 when lhs is zero); used to confirm
/// the oracle rejects corrupted identities.
IdentityReport check_perturbed(const RingElement& lhs, const RingElement& rhs,
                               const std::vector<TorusPoint>& points, Edge edge = Edge::E01);

} // namespace twk

#endif
