#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "twk/laurent.hpp"

#include <cmath>
#include <complex>

using namespace twk;
using namespace twk::testing;

namespace {
LaurentPoly T(const std::string& s) { return parse_poly(VarSet::T, s); }
LaurentPoly T2(const std::string& s) { return parse_poly(VarSet::T2, s); }
} // namespace

TEST_CASE("ring operations on stated examples") {
    CHECK(T("1+t") * T("1+t^-1") == T("t^-1 + 2 + t"));
    CHECK(T("t - t^-1") * T("t - t^-1") == T("t^2 - 2 + t^-2"));
    CHECK(T("t").pow(-3) == T("t^-3"));
    CHECK(T("1+t") - T("1+t") == LaurentPoly::zero(VarSet::T));
    CHECK((-T("2*t")) == T("-2*t"));
}

TEST_CASE("negative powers require unit monomials") {
    CHECK_THROWS_AS(T("1+t").pow(-1), Error);
    CHECK_THROWS_AS(T("2*t").pow(-2), Error);
    CHECK(T("-t").pow(-2) == T("t^-2"));
    CHECK(T("-t").pow(-3) == T("-t^-3"));
}

TEST_CASE("mismatched ambient sets are rejected") {
    CHECK_THROWS_AS(T("t") + T2("t1"), Error);
    CHECK_THROWS_AS(T("t") * T2("t1"), Error);
}

TEST_CASE("substitution is a homomorphism with invertibility checks") {
    // t -> d^-1
    LaurentPoly d = LaurentPoly::variable(VarSet::SD, 1);
    CHECK(substitute(T("t"), {d.pow(-1)}) == parse_poly(VarSet::SD, "d^-1"));
    // s1 -> t1+t2+t3 is realised by plain images
    LaurentPoly s1 = LaurentPoly::variable(VarSet::S1S2, 0);
    LaurentPoly e1 = T2("t1 + t2 + t1^-1*t2^-1");
    CHECK(substitute(s1, {e1, T2("0")}) == e1);
    // 1+t with t -> t1
    CHECK(substitute(T("1+t"), {T2("t1")}) == T2("1 + t1"));
    // negative exponent on a non-invertible image fails
    CHECK_THROWS_AS(substitute(T("t^-1"), {T2("1 + t1")}), Error);

    PolyGen gen(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = gen.poly(VarSet::T, 4, 3);
        LaurentPoly q = gen.poly(VarSet::T, 4, 3);
        // remove negative exponents so any image is allowed
        Mono shift;
        shift[0] = 3;
        LaurentPoly sh = LaurentPoly::monomial(VarSet::T, shift, 1);
        p = p * sh;
        q = q * sh;
        LaurentPoly img = gen.poly(VarSet::T2, 3, 2);
        CHECK(substitute(p * q, {img}) == substitute(p, {img}) * substitute(q, {img}));
    }
}

TEST_CASE("exact division on stated examples") {
    auto q = exact_div(T("t^2 - t^-2"), T("t - t^-1"));
    REQUIRE(q.has_value());
    CHECK(*q == T("t + t^-1"));

    // Vandermonde in eliminated coordinates
    LaurentPoly t1 = T2("t1"), t2 = T2("t2"), t3 = T2("t1^-1*t2^-1");
    LaurentPoly v = (t1 - t2) * (t1 - t3) * (t2 - t3);
    CHECK(*exact_div(LaurentPoly::zero(VarSet::T2), v) == LaurentPoly::zero(VarSet::T2));
    CHECK_THROWS_AS(exact_div(T("t"), LaurentPoly::zero(VarSet::T)), Error);

    // non-exact division is a distinct outcome, not a panic
    CHECK_FALSE(exact_div(T("t + 1"), T("t - 1")).has_value());
    CHECK_FALSE(exact_div(T("t^2+1"), T("3+t")).has_value());
}

TEST_CASE("exact_div(a*b, b) == a on random inputs") {
    PolyGen gen(11);
    for (int i = 0; i < 400; ++i) {
        VarSet vs = (i % 2 == 0) ? VarSet::T : VarSet::T2;
        LaurentPoly a = gen.poly(vs, 4, 3);
        LaurentPoly b = gen.nonzero_poly(vs, 4, 3);
        auto q = exact_div(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("ring axioms hold exactly on randomized inputs") {
    PolyGen gen(13);
    for (int i = 0; i < 1000; ++i) {
        VarSet vs = (i % 3 == 0) ? VarSet::T : (i % 3 == 1) ? VarSet::T2 : VarSet::SD;
        LaurentPoly a = gen.poly(vs, 4, 2);
        LaurentPoly b = gen.poly(vs, 4, 2);
        LaurentPoly c = gen.poly(vs, 4, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("complex evaluation") {
    Complex i(0.0, 1.0);
    CHECK(std::abs(eval_complex(T("t + t^-1"), {i})) < 1e-12);

    // the torus relation makes t1 t2 t3 the constant 1 in eliminated form
    LaurentPoly prod = T2("t1") * T2("t2") * T2("t1^-1*t2^-1");
    CHECK(prod == T2("1"));

    // Vandermonde at (1, w, w^2) against the directly multiplied factors
    Complex w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
    Complex z1(1.0, 0.0), z2 = w, z3 = w * w;
    LaurentPoly t1 = T2("t1"), t2 = T2("t2"), t3 = T2("t1^-1*t2^-1");
    LaurentPoly v = (t1 - t2) * (t1 - t3) * (t2 - t3);
    Complex direct = (z1 - z2) * (z1 - z3) * (z2 - z3);
    CHECK(std::abs(eval_complex(v, {z1, z2}) - direct) < 1e-12);
    CHECK(std::abs(direct) > 0.1);

    CHECK_THROWS_AS(eval_complex(T("t"), {Complex(0.0, 0.0)}), Error);
}

TEST_CASE("evaluation is multiplicative on unit-modulus points") {
    PolyGen gen(17);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = gen.poly(VarSet::T2, 4, 3);
        LaurentPoly b = gen.poly(VarSet::T2, 4, 3);
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::vector<Complex> pt = {std::polar(1.0, 6.283185307 * u),
                                   std::polar(1.0, 6.283185307 * v)};
        Complex lhs = eval_complex(a * b, pt);
        Complex rhs = eval_complex(a, pt) * eval_complex(b, pt);
        double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-9);
    }
}

TEST_CASE("canonical text form round-trips") {
    CHECK(to_string(T("0")) == "0");
    CHECK(parse_poly(VarSet::T, "0") == LaurentPoly::zero(VarSet::T));
    CHECK(to_string(T("t^-1 + 2 + t")) == "t + 2 + t^-1");

    PolyGen gen(23);
    for (int i = 0; i < 500; ++i) {
        VarSet vs = (i % 3 == 0) ? VarSet::T : (i % 3 == 1) ? VarSet::T2 : VarSet::S1S2;
        LaurentPoly p = gen.poly(vs, 5, 3);
        CHECK(parse_poly(vs, to_string(p)) == p);
    }

    CHECK_THROWS_AS(parse_poly(VarSet::T, "t +"), Error);
    CHECK_THROWS_AS(parse_poly(VarSet::T, "q^2"), Error);
    CHECK_THROWS_AS(parse_poly(VarSet::Rho, "rho^-1"), Error);
}
