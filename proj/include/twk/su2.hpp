#ifndef TWK_SU2_HPP
#define TWK_SU2_HPP

#include "twk/expfunctor.hpp"
#include "twk/univar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twk {

/// Coefficients g1, g2 with F(t) = g1 + t * g2 over Z[rho]:
/// g1 = (t^-1 F(t) - t F(t^-1)) / (t^-1 - t),
/// g2 = (F(t^-1) - F(t)) / (t^-1 - t).
std::pair<RingElement, RingElement> g_coefficients(const ExponentialFunctor& F);

/// The 2x2 Mayer-Vietoris matrix [[1, -g1], [0, -g2]] over the
/// localized ring; determinant -g2.
struct MVMatrix {
    Localized entry[2][2];
    Localized determinant;
};

MVMatrix mv_matrix(const ExponentialFunctor& F);

/// Coefficients of an SU2 element over the irreducible characters
/// rho_0 = 1, rho_1 = rho, rho_l = rho*rho_{l-1} - rho_{l-2}.
std::vector<Rat> expand_in_irreducibles(const RingElement& g);
/// Character of the highest-weight-l irreducible as an element of Z[rho].
RingElement irreducible_character(int l);

struct SU2Report {
    std::string functor_spec;
    ExponentialFunctor F;
    HypothesisReport hypothesis{};
    bool theorem_applicable = false;  // g2 != 0

    RingElement g1, g2;        // Z[rho]
    std::vector<Rat> g2_irr;   // g2 over the rho_l basis

    // the remaining fields are only meaningful when theorem_applicable
    RingElement f_rho;             // F(rho) in Z[rho]
    RingElement g2_saturated;      // primitive integer polynomial
    RingElement removed_cofactor;  // monic over Q: g2 = unit_scalar * g2_saturated * removed_cofactor
    Rat unit_scalar = 1;
    int rank = 0;
    Int inverted_integer = 1;  // N = |Res(g2_saturated, F(rho))|
    bool k0_zero = true;
    std::string k1_presentation;

    bool identity_verified = false;  // F(t) == g1 + t g2 in the torus ring

    bool operator==(const SU2Report& o) const;
};

/// Full SU(2) pipeline.  When the hypothesis fails the report stops
/// after the g-coefficients with theorem_applicable = false.
SU2Report k_groups_su2(const ExponentialFunctor& F);

/// Inverse certificate in Z[rho]/(g2_saturated): v with u*v == 1, plus
/// the witness w with u*v - 1 == w * g2_saturated, all exact.
struct InverseCert {
    RingElement inverse;  // SU2, rational coefficients reduced mod g2_saturated
    RingElement witness;
};

std::optional<InverseCert> verify_unit(const RingElement& u, const SU2Report& report);

} // namespace twk

#endif
