#include "twk/su2.hpp"

#include <sstream>

namespace twk {

std::pair<RingElement, RingElement> g_coefficients(const ExponentialFunctor& F) {
    return su2_decompose({Ring::TorusSU2, F.character});
}

MVMatrix mv_matrix(const ExponentialFunctor& F) {
    auto [g1, g2] = g_coefficients(F);
    MVMatrix m;
    m.entry[0][0] = {ring_one(Ring::SU2), 0};
    m.entry[0][1] = {{Ring::SU2, -g1.poly}, 0};
    m.entry[1][0] = {ring_zero(Ring::SU2), 0};
    m.entry[1][1] = {{Ring::SU2, -g2.poly}, 0};
    m.determinant = {{Ring::SU2, -g2.poly}, 0};
    return m;
}

RingElement irreducible_character(int l) {
    if (l < 0) throw Error("irreducible_character: l >= 0 required");
    LaurentPoly rho = LaurentPoly::variable(VarSet::Rho, 0);
    LaurentPoly prev = LaurentPoly::constant(VarSet::Rho, 1);  // rho_0
    if (l == 0) return {Ring::SU2, prev};
    LaurentPoly cur = rho;  // rho_1
    for (int i = 2; i <= l; ++i) {
        LaurentPoly next = rho * cur - prev;
        prev = cur;
        cur = next;
    }
    return {Ring::SU2, cur};
}

std::vector<Rat> expand_in_irreducibles(const RingElement& g) {
    if (g.ring != Ring::SU2) throw Error("expand_in_irreducibles: SU2 element expected");
    UniPoly rem = UniPoly::from_laurent(g.poly);
    int top = rem.degree();
    std::vector<Rat> out(static_cast<size_t>(std::max(top + 1, 0)), Rat(0));
    while (!rem.is_zero()) {
        int d = rem.degree();
        Rat c = rem.lead();
        out[static_cast<size_t>(d)] = c;  // rho_d is monic of degree d
        rem = rem - UniPoly::from_laurent(irreducible_character(d).poly).scale(c);
    }
    return out;
}

namespace {

std::string poly_str(const RingElement& e) { return to_string(e.poly); }

} // namespace

bool SU2Report::operator==(const SU2Report& o) const {
    return functor_spec == o.functor_spec && F.character == o.F.character &&
           hypothesis.su2_ok == o.hypothesis.su2_ok && hypothesis.su3_ok == o.hypothesis.su3_ok &&
           theorem_applicable == o.theorem_applicable && g1 == o.g1 && g2 == o.g2 &&
           g2_irr == o.g2_irr && f_rho == o.f_rho && g2_saturated == o.g2_saturated &&
           removed_cofactor == o.removed_cofactor && unit_scalar == o.unit_scalar &&
           rank == o.rank && inverted_integer == o.inverted_integer && k0_zero == o.k0_zero &&
           k1_presentation == o.k1_presentation && identity_verified == o.identity_verified;
}

SU2Report k_groups_su2(const ExponentialFunctor& F) {
    SU2Report rep;
    rep.functor_spec = F.name;
    rep.F = F;
    rep.hypothesis = hypothesis_checks(F);
    auto [g1, g2] = g_coefficients(F);
    rep.g1 = g1;
    rep.g2 = g2;
    rep.g2_irr = expand_in_irreducibles(g2);
    rep.theorem_applicable = rep.hypothesis.su2_ok;

    // F(t) = g1 + t g2 back in the torus ring
    {
        LaurentPoly t = LaurentPoly::variable(VarSet::T, 0, F.character.domain());
        LaurentPoly lhs = F.character;
        LaurentPoly rhs = restrict_hom(g1, Hom::SU2toTorus).poly +
                          t * restrict_hom(g2, Hom::SU2toTorus).poly;
        rep.identity_verified = (lhs == rhs);
        if (!rep.identity_verified) throw Error("k_groups_su2: decomposition identity failed");
    }

    if (!rep.theorem_applicable) {
        rep.g2_saturated = ring_zero(Ring::SU2);
        rep.removed_cofactor = ring_one(Ring::SU2);
        rep.f_rho = f_rho_in(F, Ring::SU2);
        rep.k1_presentation = "theorem inapplicable: F(C) and F(C*) are isomorphic (g2 = 0)";
        return rep;
    }

    rep.f_rho = f_rho_in(F, Ring::SU2);
    UniPoly f_rho_u = UniPoly::from_laurent(rep.f_rho.poly);

    // strip every irreducible factor shared with F(rho):
    // g <- g / gcd(g, F(rho)^deg g), iterated to stabilization
    UniPoly g = UniPoly::from_laurent(g2.poly);
    UniPoly cofactor;
    cofactor.c = {Rat(1)};
    for (;;) {
        int dg = g.degree();
        if (dg <= 0) break;
        UniPoly h = gcd_q(g, f_rho_u.pow(static_cast<unsigned>(dg)));
        if (h.degree() <= 0) break;
        auto [q, r] = g.divmod(h);
        if (!r.is_zero()) throw Error("k_groups_su2: saturation division not exact (internal)");
        g = q;
        cofactor = cofactor * h;
    }
    auto [g_sat, unit] = primitive_part(g);
    rep.g2_saturated = {Ring::SU2, g_sat.to_laurent(VarSet::Rho)};
    rep.removed_cofactor = {Ring::SU2, cofactor.to_laurent(VarSet::Rho)};
    rep.unit_scalar = unit;

    // g2 == unit_scalar * g2_saturated * removed_cofactor, exactly
    if (!(g_sat.scale(rep.unit_scalar) * cofactor == UniPoly::from_laurent(g2.poly)))
        throw Error("k_groups_su2: saturation factorization check failed");

    rep.rank = std::max(g_sat.degree(), 0);
    Int res = resultant_z(g_sat, f_rho_u);
    rep.inverted_integer = res < 0 ? Int(-res) : res;
    rep.k0_zero = true;

    std::ostringstream pres;
    if (rep.rank == 0) {
        pres << "0";
    } else if (rep.inverted_integer == 1) {
        pres << "Z[rho]/(" << poly_str(rep.g2_saturated) << ")";
    } else {
        pres << "Z[rho][1/" << rep.inverted_integer << "]/(" << poly_str(rep.g2_saturated) << ")";
    }
    rep.k1_presentation = pres.str();
    return rep;
}

namespace {

// extended Euclid over Q[x]: returns (gcd, s, t) with s f + t g = gcd
struct EGcd {
    UniPoly g, s, t;
};

EGcd egcd(UniPoly f, UniPoly g) {
    UniPoly s0, s1, t0, t1;
    s0.c = {Rat(1)};
    t1.c = {Rat(1)};
    while (!g.is_zero()) {
        auto [q, r] = f.divmod(g);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        f = std::move(g);
        g = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {f, s0, t0};
}

} // namespace

std::optional<InverseCert> verify_unit(const RingElement& u, const SU2Report& report) {
    if (u.ring != Ring::SU2) throw Error("verify_unit: SU2 element expected");
    UniPoly m = UniPoly::from_laurent(report.g2_saturated.poly);
    if (m.is_zero()) throw Error("verify_unit: no K1 presentation available");
    UniPoly um = UniPoly::from_laurent(u.poly).divmod(m).second;
    EGcd e = egcd(um, m);
    if (e.g.degree() != 0) return std::nullopt;  // nontrivial common factor: not a unit
    UniPoly v = e.s.scale(Rat(1) / e.g.lead()).divmod(m).second;
    // witness: u v - 1 = w * g2_saturated
    UniPoly prod = UniPoly::from_laurent(u.poly) * v;
    UniPoly one;
    one.c = {Rat(1)};
    auto [w, r] = (prod - one).divmod(m);
    if (!r.is_zero()) throw Error("verify_unit: certificate verification failed (internal)");
    return InverseCert{{Ring::SU2, v.to_laurent(VarSet::Rho)},
                       {Ring::SU2, w.to_laurent(VarSet::Rho)}};
}

} // namespace twk
