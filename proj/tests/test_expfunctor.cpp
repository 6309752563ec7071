#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "twk/expfunctor.hpp"

using namespace twk;
using namespace twk::testing;

TEST_CASE("functor DSL parsing") {
    CHECK(parse_functor("ext_full^3").character == parse_poly(VarSet::T, "1 + 3*t + 3*t^2 + t^3"));
    CHECK(parse_functor("ext_top^2 * fw(3)").character ==
          parse_poly(VarSet::T, "t^2 + 3*t^3"));
    CHECK(parse_functor("poly:2+t^2").character == parse_poly(VarSet::T, "2 + t^2"));
    CHECK(parse_functor("poly:(1+t) * ext_top").character == parse_poly(VarSet::T, "t + t^2"));
    CHECK(parse_functor("ext_top").is_preset);
    CHECK_FALSE(parse_functor("poly:2+t^2").is_preset);

    CHECK_THROWS_AS(parse_functor("ext_banana"), Error);
    CHECK_THROWS_AS(parse_functor("poly:t - 2"), Error);   // negative coefficient
    CHECK_THROWS_AS(parse_functor("poly:0"), Error);       // zero character
    CHECK_THROWS_AS(parse_functor("fw(0)"), Error);
    CHECK_THROWS_AS(parse_functor("ext_full^"), Error);

    CHECK(parse_functor("ext_full").dimension() == 2);
    CHECK(parse_functor("ext_full^3").dimension() == 8);
    CHECK(parse_functor("fw(4)").dimension() == 5);
}

TEST_CASE("print round-trips through the parser") {
    for (const char* spec : {"ext_top", "ext_full^3", "fw(2) * ext_top", "poly:2+t^2+t^5"}) {
        ExponentialFunctor F = parse_functor(spec);
        ExponentialFunctor G = parse_functor(print_functor(F));
        CHECK(F.character == G.character);
    }
}

TEST_CASE("f_of_lines multiplies over lines") {
    ExponentialFunctor full = parse_functor("ext_full");
    LaurentPoly t1 = torus_coordinate(1), t2 = torus_coordinate(2), t3 = torus_coordinate(3);
    LaurentPoly expect =
        (parse_poly(VarSet::T2, "1") + t1) * (parse_poly(VarSet::T2, "1") + t2) *
        (parse_poly(VarSet::T2, "1") + t3);
    CHECK(f_of_lines(full, {t1, t2, t3}) == expect);

    CHECK(f_of_lines(full, {}) == LaurentPoly::constant(VarSet::T, 1));

    ExponentialFunctor top = parse_functor("ext_top");
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0);
    CHECK(f_of_lines(top, {t, t.pow(-1)}) == parse_poly(VarSet::T, "1"));

    CHECK_THROWS_AS(f_of_lines(full, {parse_poly(VarSet::T2, "1 + t1")}), Error);

    // appending a line multiplies the result by F at that line
    PolyGen gen(67);
    for (int i = 0; i < 100; ++i) {
        ExponentialFunctor F = parse_functor(i % 2 ? "ext_full^2" : "fw(3)");
        std::vector<LaurentPoly> lines = {t1, t2};
        LaurentPoly base = f_of_lines(F, lines);
        lines.push_back(t3);
        CHECK(f_of_lines(F, lines) == base * f_of_lines(F, {t3}));
    }
}

TEST_CASE("derived elements for the presets") {
    ExponentialFunctor full = parse_functor("ext_full");
    DerivedElements de = derived_elements(full);
    CHECK(de.f_rho_su2.poly == parse_poly(VarSet::Rho, "rho + 2"));
    CHECK(de.mu_F.poly == parse_poly(VarSet::SD, "1 + s + d"));
    CHECK(de.lambda_F.poly == parse_poly(VarSet::SD, "1 + d^-1"));

    ExponentialFunctor top = parse_functor("ext_top");
    DerivedElements dt = derived_elements(top);
    CHECK(dt.lambda_F.poly == parse_poly(VarSet::SD, "d^-1"));
    CHECK(dt.f_rho_su2.poly == parse_poly(VarSet::Rho, "1"));
    CHECK(dt.f_rho_su3.poly == parse_poly(VarSet::S1S2, "1"));

    // unit certificates multiply back to the F(rho) restriction
    for (const char* spec : {"ext_top", "ext_full", "ext_full^3", "fw(2)", "ext_top^2 * fw(3)"}) {
        ExponentialFunctor F = parse_functor(spec);
        DerivedElements d = derived_elements(F);
        RingElement frho_u2 = f_rho_in(F, Ring::U2);
        CHECK(d.lambda_F.poly * d.lambda_inv.inverse_numerator.poly == frho_u2.poly);
        CHECK(d.mu_F.poly * d.mu_inv.inverse_numerator.poly == frho_u2.poly);
        RingElement frho_t = f_rho_in(F, Ring::TorusSU3);
        CHECK(d.nu_F.poly * d.nu_inv.inverse_numerator.poly == frho_t.poly);
    }
}

TEST_CASE("hypothesis checks") {
    HypothesisReport h1 = hypothesis_checks(parse_functor("ext_top"));
    CHECK(h1.su2_ok);
    CHECK(h1.su3_ok);
    HypothesisReport h2 = hypothesis_checks(parse_functor("poly:2"));
    CHECK_FALSE(h2.su2_ok);
    CHECK_FALSE(h2.su3_ok);
    HypothesisReport h3 = hypothesis_checks(parse_functor("ext_full^5"));
    CHECK(h3.su2_ok);
    CHECK(h3.su3_ok);
}
