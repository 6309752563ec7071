#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "twk/expfunctor.hpp"
#include "twk/su3.hpp"
#include "twk/symfunc.hpp"

#include <cmath>

using namespace twk;
using namespace twk::testing;

namespace {
RingElement su3el(const std::string& s) { return {Ring::SU3, parse_poly(VarSet::S1S2, s)}; }
} // namespace

TEST_CASE("complete homogeneous polynomials") {
    CHECK(h_complete(0) == su3el("1"));
    CHECK(h_complete(1) == su3el("s1"));
    CHECK(h_complete(2) == su3el("s1^2 - s2"));
    CHECK(h_complete(-1).poly.is_zero());
    CHECK(h_complete(-2).poly.is_zero());

    // independent route: expand the degree-k monomials and reduce
    for (int k = 1; k <= 5; ++k) {
        LaurentPoly sum = LaurentPoly::zero(VarSet::T2);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b) {
                int c = k - a - b;
                LaurentPoly mono = torus_coordinate(1).pow(a) * torus_coordinate(2).pow(b) *
                                   torus_coordinate(3).pow(c);
                sum = sum + mono;
            }
        CHECK(to_invariant_ring({Ring::TorusSU3, sum}, Ring::SU3) == h_complete(k));
    }
}

TEST_CASE("vandermonde") {
    AntisymmetricElement v = vandermonde();
    RingElement flipped = weyl_act(WeylElement::transposition(1, 2), v.value);
    CHECK(flipped.poly == -v.value.poly);

    Complex w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
    Complex val = eval_complex(v.value.poly, {Complex(1.0, 0.0), w});
    CHECK(std::abs(val) > 0.5);

    CHECK(symmetrize(v.value).poly.is_zero());

    // non-antisymmetric inputs are rejected at construction
    CHECK_THROWS_AS(AntisymmetricElement::checked({Ring::TorusSU3, parse_poly(VarSet::T2, "t1")}),
                    Error);
}

TEST_CASE("psi on stated examples") {
    CHECK(psi(vandermonde()) == su3el("1"));

    // F = ext_top (m = 1): q- maps to h_0 = 1
    KoszulRoute kr1 = koszul_route(parse_functor("ext_top"));
    CHECK(kr1.q_plus.poly.is_zero());
    CHECK(kr1.psi_minus == su3el("1"));

    // F = ext_top^3: psi(q+) = -h_1 = -s1
    KoszulRoute kr3 = koszul_route(parse_functor("ext_top^3"));
    CHECK(kr3.psi_plus == su3el("-s1"));
}

TEST_CASE("bialternant") {
    std::vector<RowSeed> rows1 = {{parse_poly(VarSet::T, "t^3")}, {parse_poly(VarSet::T, "t")},
                                  {parse_poly(VarSet::T, "1")}};
    CHECK(bialternant(rows1) == h_complete(1));

    std::vector<RowSeed> repeated = {{parse_poly(VarSet::T, "t")}, {parse_poly(VarSet::T, "t")},
                                     {parse_poly(VarSet::T, "1")}};
    CHECK(bialternant(repeated).poly.is_zero());

    // chi_1 for the full twist at m = 3 carries the theorem's sign
    KoszulRoute kr = koszul_route(parse_functor("ext_full^3"));
    CHECK(kr.chi1 == su3el("3 + s1"));
}

TEST_CASE("psi and multiplication by the Vandermonde are inverse") {
    PolyGen gen(71);
    LaurentPoly v = vandermonde().value.poly;
    for (int i = 0; i < 100; ++i) {
        // psi(delta * p) = p for symmetric p
        RingElement p = to_invariant_ring(symmetrize({Ring::TorusSU3, gen.poly(VarSet::T2, 4, 2)}),
                                          Ring::SU3);
        LaurentPoly pt = restrict_hom(p, Hom::SU3toTorus).poly;
        AntisymmetricElement a = AntisymmetricElement::checked({Ring::TorusSU3, pt * v});
        CHECK(psi(a) == p);
    }
}

TEST_CASE("theta cocycle and closed forms for the two families") {
    // theta_12 + theta_23 + theta_31 = 0 for every functor
    for (const char* spec : {"ext_top", "ext_full^2", "fw(3)", "poly:1+t^2"}) {
        ExponentialFunctor F = parse_functor(spec);
        LaurentPoly f1 = f_of_lines(F, {torus_coordinate(1)});
        LaurentPoly f2 = f_of_lines(F, {torus_coordinate(2)});
        LaurentPoly f3 = f_of_lines(F, {torus_coordinate(3)});
        CHECK(((f1 - f2) + (f2 - f3) + (f3 - f1)).is_zero());
    }

    // classical family: psi(q+) = -h_{m-2}, psi(q-) = h_{m-1}
    for (int m = 1; m <= 10; ++m) {
        KoszulRoute kr = koszul_route(parse_functor("ext_top^" + std::to_string(m)));
        CHECK(kr.psi_plus.poly == -h_complete(m - 2).poly);
        CHECK(kr.psi_minus == h_complete(m - 1));
    }

    // full twist: binomial h-sums
    for (int m = 1; m <= 8; ++m) {
        KoszulRoute kr = koszul_route(parse_functor("ext_full^" + std::to_string(m)));
        LaurentPoly plus = LaurentPoly::zero(VarSet::S1S2);
        for (int l = 2; l <= m; ++l)
            plus = plus + h_complete(l - 2).poly * Rat(binomial(static_cast<unsigned>(m),
                                                               static_cast<unsigned>(l)));
        LaurentPoly minus = LaurentPoly::zero(VarSet::S1S2);
        for (int l = 1; l <= m; ++l)
            minus = minus + h_complete(l - 1).poly * Rat(binomial(static_cast<unsigned>(m),
                                                                 static_cast<unsigned>(l)));
        CHECK(kr.psi_plus.poly == -plus);
        CHECK(kr.psi_minus.poly == minus);
    }
}
