#ifndef TWK_EXPFUNCTOR_HPP
#define TWK_EXPFUNCTOR_HPP

#include "twk/reprings.hpp"

#include <string>
#include <vector>

namespace twk {

/// An exponential functor, modelled by its line character F(t): a
/// nonzero one-variable Laurent polynomial with nonnegative integer
/// coefficients.  F on a sum of line characters is the product of F at
/// each line, which is all of the structure the computations use.
struct ExponentialFunctor {
    LaurentPoly character;  // in VarSet::T
    std::string name;       // display string (the DSL spec that produced it)
    bool is_preset = true;  // false for poly: forms ("formal character")

    /// d(F) = F(1); a positive integer.
    Int dimension() const;
    /// max exponent of the character
    int degree() const { return character.max_exp(0); }
    bool has_negative_exponents() const { return character.min_exp(0) < 0; }
};

/// DSL: `ext_top`, `ext_full`, `fw(b)`, `poly:<laurent poly in t>`,
/// combined with `*` (character product) and `^m` (power).  A poly:
/// atom extends to the end of the string unless parenthesised as
/// poly:(...).
ExponentialFunctor parse_functor(const std::string& spec);

/// Canonical printed form `poly:<terms>`; parse_functor(print) recovers
/// the character.
std::string print_functor(const ExponentialFunctor& F);

/// F applied to a sum of line characters: product of F at each line.
/// Every line must be an invertible (unit) monomial of the target ring.
LaurentPoly f_of_lines(const ExponentialFunctor& F, const std::vector<LaurentPoly>& lines);

/// Inverse certificate for a unit u of a localized ring:
/// u * inverse_numerator == F(rho)-image ^ power.
struct UnitCert {
    RingElement inverse_numerator;
    uint32_t power;
};

struct DerivedElements {
    RingElement f_rho_su2;  // F(t)F(t^-1) rewritten in rho
    RingElement f_rho_su3;  // F(t1)F(t2)F(t3) rewritten in s1, s2
    RingElement lambda_F;   // F(d^-1) in U2
    RingElement mu_F;       // F(s): character F(x)F(y) rewritten in s, d
    RingElement nu_F;       // F(t1) in the eliminated torus
    UnitCert lambda_inv;    // lambda_F * mu_F == r(F(rho))
    UnitCert mu_inv;        // mu_F * lambda_F == r(F(rho))
    UnitCert nu_inv;        // nu_F * F(t2)F(t3) == F(rho)|torus
};

DerivedElements derived_elements(const ExponentialFunctor& F);

/// F(rho) restricted to each working ring.
RingElement f_rho_in(const ExponentialFunctor& F, Ring r);

struct HypothesisReport {
    bool su2_ok;  // F(t) != F(t^-1), i.e. g2(F) != 0
    bool su3_ok;  // deg F(t) > 0
};

HypothesisReport hypothesis_checks(const ExponentialFunctor& F);

} // namespace twk

#endif
