#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twk/oracle.hpp"
#include "twk/su2.hpp"
#include "twk/su3.hpp"
#include "twk/symfunc.hpp"

#include <cmath>

using namespace twk;

TEST_CASE("sampling is deterministic and satisfies the constraints") {
    ExponentialFunctor F = parse_functor("ext_full");
    auto a = sample_points(Group::SU3, F, 50, 42);
    auto b = sample_points(Group::SU3, F, 50, 42);
    REQUIRE(a.size() == 50);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].z == b[i].z);
        Complex prod = a[i].z[0] * a[i].z[1] * a[i].z[2];
        CHECK(std::abs(prod - Complex(1.0, 0.0)) < 1e-12);
        for (const Complex& z : a[i].z) CHECK(std::fabs(std::abs(z) - 1.0) < 1e-12);
        // rejection: F(rho) stays away from zero
        Complex frho(1.0, 0.0);
        for (const Complex& z : a[i].z) frho *= eval_complex(F.character, {z});
        CHECK(std::abs(frho) >= 1e-6);
    }
    auto c = sample_points(Group::SU2, F, 50, 7);
    for (const TorusPoint& p : c) {
        CHECK(std::abs(p.z[0] * p.z[1] - Complex(1.0, 0.0)) < 1e-12);
        Complex frho = eval_complex(F.character, {p.z[0]}) * eval_complex(F.character, {p.z[1]});
        CHECK(std::abs(frho) >= 1e-6);
    }
    // a different seed moves the points
    auto d = sample_points(Group::SU2, F, 5, 8);
    CHECK(d[0].z[0] != c[0].z[0]);
}

TEST_CASE("identities pass and corrupted identities fail") {
    ExponentialFunctor F = parse_functor("ext_full^3");
    auto pts2 = sample_points(Group::SU2, F, 100, 0);

    auto [g1, g2] = g_coefficients(F);
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0);
    RingElement lhs = {Ring::TorusSU2, F.character};
    RingElement rhs = {Ring::TorusSU2, restrict_hom(g1, Hom::SU2toTorus).poly +
                                           t * restrict_hom(g2, Hom::SU2toTorus).poly};
    IdentityReport ok = check_identity(lhs, rhs, pts2);
    CHECK(ok.pass);
    CHECK(ok.max_abs_err < 1e-8);

    IdentityReport bad = check_perturbed(lhs, rhs, pts2);
    CHECK_FALSE(bad.pass);
    CHECK(bad.points_failed >= 99);

    // zero == zero passes with error exactly 0
    RingElement z = {Ring::SU2, LaurentPoly::zero(VarSet::Rho)};
    auto r = check_identity(z, z, pts2);
    CHECK(r.pass);
    CHECK(r.max_abs_err == 0.0);

    CHECK_THROWS_AS(check_identity(lhs, z, pts2), Error);
}

TEST_CASE("the theorem determinant identity holds numerically") {
    ExponentialFunctor F = parse_functor("ext_full^2");
    auto pts = sample_points(Group::SU3, F, 100, 3);
    KoszulRoute kr = koszul_route(F);
    std::vector<RowSeed> rows = {{F.character}, {parse_poly(VarSet::T, "t")},
                                 {parse_poly(VarSet::T, "1")}};
    // chi1 * Delta - det == 0 through the torus embedding
    LaurentPoly chi1_torus = restrict_hom(kr.chi1, Hom::SU3toTorus).poly;
    LaurentPoly lhs = chi1_torus * vandermonde().value.poly - galois_determinant(rows).poly;
    IdentityReport rep = check_identity({Ring::TorusSU3, lhs},
                                        {Ring::TorusSU3, LaurentPoly::zero(VarSet::T2)}, pts);
    CHECK(rep.pass);
}

TEST_CASE("localized evaluation divides through the denominator") {
    ExponentialFunctor F = parse_functor("ext_full");
    auto pts = sample_points(Group::SU3, F, 20, 11);
    DerivedElements de = derived_elements(F);
    // mu_F^-1 as (lambda_F, 1): mu_F * mu_F^-1 == 1 numerically
    Localized mu{de.mu_F, 0};
    Localized mu_inv{de.mu_inv.inverse_numerator, de.mu_inv.power};
    for (const TorusPoint& p : pts) {
        Complex prod = eval_at(mu, F, p, Edge::E12) * eval_at(mu_inv, F, p, Edge::E12);
        CHECK(std::abs(prod - Complex(1.0, 0.0)) < 1e-8);
    }
}

TEST_CASE("U2 evaluation is edge-compatible with restriction") {
    ExponentialFunctor F = parse_functor("ext_full^2");
    auto pts = sample_points(Group::SU3, F, 50, 13);
    DerivedElements de = derived_elements(F);
    for (Edge e : {Edge::E01, Edge::E12, Edge::E02}) {
        RingElement restricted = restrict_hom(de.mu_F, edge_hom(e));
        for (const TorusPoint& p : pts) {
            Complex via_u2 = eval_at(de.mu_F, p, e);
            Complex via_torus = eval_at(restricted, p);
            CHECK(std::abs(via_u2 - via_torus) < 1e-8);
        }
    }
}
