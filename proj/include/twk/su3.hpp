#ifndef TWK_SU3_HPP
#define TWK_SU3_HPP

#include "twk/expfunctor.hpp"
#include "twk/groebner.hpp"
#include "twk/symfunc.hpp"

#include <array>
#include <optional>
#include <string>

namespace twk {

/// Symbolic differentials of the E1-page complex
///   R_F(SU3)^3 --d0--> R_F(U2)^3 --d1--> R_F(T^2),
/// with the edge components indexed {0,1}, {1,2}, {0,2}:
///   d0(x0,x1,x2) = (-r(x0) + lambda_F r(x1),
///                   -r(x1) + mu_F^-1 r(x2),
///                   -r(x0) + lambda_F^-1 r(x2)),
///   d1(y01,y12,y02) = r01(y01) + nu_F r12(y12) - r02(y02).
std::array<Localized, 3> d0_apply(const DerivedElements& de, const std::array<Localized, 3>& x);
Localized d1_apply(const DerivedElements& de, const std::array<Localized, 3>& y);

/// Matrixized complex over Q[s1,s2] after clearing one global power of
/// F(rho): A maps the rank-3 free module into the C^1 coordinates
/// (9 = 3 edges x 3 basis elements on the primary path), B maps C^1
/// coordinates into the rank-6 Steinberg coordinates of R(T^2).
struct SU3ChainComplex {
    uint32_t denom_exp = 1;            // A carries 1/F(rho)^denom_exp
    std::vector<gb::ModVec> a_cols;    // 3 columns
    std::vector<gb::ModVec> b_cols;    // one column per C^1 coordinate
    std::vector<gb::ModVec> c1_relations;  // syzygies among C^1 generators; empty when free
    bool used_fallback = false;
    bool ba_zero = false;              // B*A == 0, checked at construction
};

/// Assemble the matrixized complex. The candidate bases {1, t_i, t_i^-1}
/// for the edge fixed subrings are runtime-verified; on failure (or when
/// force_fallback is set) the edge component is presented by Groebner
/// kernel generators of (1 - w_I) with its syzygy relations.
SU3ChainComplex build_differentials(const ExponentialFunctor& F, bool force_fallback = false);

struct BredonReport {
    bool r01_lambda_is_F_t1 = false;
    bool r12_mu_is_F_t1_F_t3 = false;
    bool r02_lambda_is_F_t3 = false;
    bool restrictions_compatible = false;  // r_I o r independent of the edge
    bool d1_after_d0_zero = false;
    bool cellular_comparison = false;  // correction factors F(t1), F(t3)^-1
    bool all_ok = false;
};

/// Verifies the comparison identities that pin the edge bookkeeping;
/// throws with a diagnostic naming the edge assignment if any fails.
BredonReport bredon_identities(const ExponentialFunctor& F);

struct KoszulRoute {
    bool hypothesis_ok = false;  // deg F > 0
    RingElement q_plus, q_minus;    // antisymmetric torus elements
    RingElement psi_plus, psi_minus;  // SU3
    RingElement chi1, chi2;           // SU3 (Theorem sign: +det/Vandermonde)
    bool cross_identities_ok = false;  // chi1 = -psi(q+), chi2 = psi(q-), theta cocycle
    bool reverse_orientation = false;
    uint32_t clearing_exp = 0;  // reversed route is cleared by F(rho)^1
};

/// q+- from theta_jk = F(t_j) - F(t_k); with reverse_orientation the
/// factors F(t_i) are replaced by F(t_i)^-1 and one power of F(rho) is
/// cleared (theta'_jk = F(t_l)(F(t_k) - F(t_j)), l the third index).
KoszulRoute koszul_route(const ExponentialFunctor& F, bool reverse_orientation = false);

struct RegSeqReport {
    bool hypothesis_met = false;  // deg F > 0
    bool certified = false;
    std::string witness;  // a colon generator outside the ideal, on failure
};

/// Certifies that (F(t2)-F(t1), F(t3)-F(t2)) is a regular sequence in
/// the localized rational torus ring, via ideal quotient stabilisation
/// in Q[t1,t2] after clearing denominators.
RegSeqReport regular_sequence_check(const ExponentialFunctor& F);

struct CohomologyReport {
    bool h0_zero = false;
    bool h1_zero = false;
    std::optional<uint64_t> h2_dimension;
    bool ok = false;
};

/// H^0, H^1 vanishing certificates and the H^2 dimension of the
/// matrixized complex, all phrased through saturation by F(rho).
CohomologyReport rational_cohomology(const SU3ChainComplex& cx, const ExponentialFunctor& F);

enum class SU3Route : uint8_t { Koszul, Complex, Both };

struct SU3Report {
    std::string functor_spec;
    ExponentialFunctor F;
    HypothesisReport hypothesis{};
    KoszulRoute koszul;
    RegSeqReport regseq;
    RingElement f_rho;  // SU3

    std::vector<std::string> j_f_saturated;  // reduced basis of saturate((chi1,chi2), F(rho))
    std::optional<uint64_t> k0_dimension;    // dim_Q of the saturated quotient
    bool k1_vanishes = false;
    std::string k1_certificate;  // "theorem-hypothesis" or "complex-route"

    std::optional<std::vector<Rat>> sigma1_h, sigma2_h;  // h-basis expansions when linear

    std::optional<CohomologyReport> cohomology;
    std::optional<SU3ChainComplex> complex;
    bool cross_check_ok = true;  // routes agree when both ran

    bool operator==(const SU3Report& o) const;
};

SU3Report k_groups_su3(const ExponentialFunctor& F, SU3Route route = SU3Route::Koszul);

/// Expansion of an SU3 element as a finite linear combination of the
/// complete homogeneous characters h_k, when one exists: decompose into
/// weighted-homogeneous parts (weight of s1^a s2^b is a + 2b) and test
/// proportionality to h_k.
std::optional<std::vector<Rat>> h_basis_expansion(const RingElement& x);

} // namespace twk

#endif
