#include "twk/symfunc.hpp"

namespace twk {

AntisymmetricElement AntisymmetricElement::checked(const RingElement& v) {
    if (v.ring != Ring::TorusSU3) throw Error("antisymmetric element must live in the torus ring");
    for (const WeylElement& w : {WeylElement::transposition(1, 2), WeylElement::cycle123()}) {
        RingElement img = weyl_act(w, v);
        RingElement want = (w.sign() > 0) ? v : RingElement{v.ring, -v.poly};
        if (!(img == want)) throw Error("element is not antisymmetric");
    }
    return {v};
}

RingElement h_complete(int k, Domain dom) {
    if (k < 0) return ring_zero(Ring::SU3, dom);
    LaurentPoly s1 = LaurentPoly::variable(VarSet::S1S2, 0, dom);
    LaurentPoly s2 = LaurentPoly::variable(VarSet::S1S2, 1, dom);
    std::vector<LaurentPoly> h(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        if (i == 0) {
            h[0] = LaurentPoly::constant(VarSet::S1S2, 1, dom);
            continue;
        }
        LaurentPoly v = s1 * h[static_cast<size_t>(i - 1)];
        if (i >= 2) v = v - s2 * h[static_cast<size_t>(i - 2)];
        if (i >= 3) v = v + h[static_cast<size_t>(i - 3)];
        h[static_cast<size_t>(i)] = v;
    }
    return {Ring::SU3, h[static_cast<size_t>(k)]};
}

AntisymmetricElement vandermonde(Domain dom) {
    LaurentPoly t1 = torus_coordinate(1, dom), t2 = torus_coordinate(2, dom),
                t3 = torus_coordinate(3, dom);
    return AntisymmetricElement::checked({Ring::TorusSU3, (t1 - t2) * (t1 - t3) * (t2 - t3)});
}

RingElement psi(const AntisymmetricElement& p) {
    Domain dom = p.value.poly.domain();
    auto q = exact_div(p.value.poly, vandermonde(dom).value.poly);
    if (!q) throw Error("psi: input not divisible by the Vandermonde (internal)");
    return to_invariant_ring({Ring::TorusSU3, *q}, Ring::SU3);
}

RingElement galois_determinant(const std::vector<RowSeed>& rows) {
    if (rows.size() != 3) throw Error("bialternant: exactly three rows expected");
    Domain dom = Domain::Integer;
    for (const RowSeed& r : rows)
        if (r.seed.domain() == Domain::Rational) dom = Domain::Rational;
    LaurentPoly m[3][3];
    for (int i = 0; i < 3; ++i) {
        if (rows[static_cast<size_t>(i)].seed.vars() != VarSet::T)
            throw Error("bialternant: row seeds must be one-variable polynomials");
        for (int j = 0; j < 3; ++j)
            m[i][j] = substitute(rows[static_cast<size_t>(i)].seed.with_domain(dom),
                                 {torus_coordinate(j + 1, dom)});
    }
    LaurentPoly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {Ring::TorusSU3, det};
}

RingElement bialternant(const std::vector<RowSeed>& rows) {
    RingElement det = galois_determinant(rows);
    if (det.poly.is_zero()) return ring_zero(Ring::SU3, det.poly.domain());
    auto q = exact_div(det.poly, vandermonde(det.poly.domain()).value.poly);
    if (!q) throw Error("bialternant: determinant not divisible by the Vandermonde (internal)");
    return to_invariant_ring({Ring::TorusSU3, *q}, Ring::SU3);
}

} // namespace twk
