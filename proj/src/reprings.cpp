#include "twk/reprings.hpp"

#include <algorithm>

namespace twk {

VarSet ring_vars(Ring r) {
    switch (r) {
        case Ring::TorusSU2: return VarSet::T;
        case Ring::TorusSU3: return VarSet::T2;
        case Ring::U2: return VarSet::SD;
        case Ring::SU2: return VarSet::Rho;
        case Ring::SU3: return VarSet::S1S2;
    }
    throw Error("bad ring tag");
}

RingElement make_element(Ring r, const LaurentPoly& p) {
    if (p.vars() != ring_vars(r)) throw Error("polynomial belongs to a different ring");
    return {r, p};
}

RingElement ring_zero(Ring r, Domain dom) { return {r, LaurentPoly::zero(ring_vars(r), dom)}; }
RingElement ring_one(Ring r, Domain dom) { return {r, LaurentPoly::constant(ring_vars(r), 1, dom)}; }

WeylElement WeylElement::transposition(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw Error("bad transposition");
    WeylElement w;
    std::swap(w.perm[static_cast<size_t>(i - 1)], w.perm[static_cast<size_t>(j - 1)]);
    return w;
}

WeylElement WeylElement::cycle123() {
    WeylElement w;
    w.perm = {1, 2, 0};
    return w;
}

std::vector<WeylElement> WeylElement::s3() {
    std::vector<WeylElement> ws;
    ws.push_back(identity());
    ws.push_back(transposition(1, 2));
    ws.push_back(transposition(1, 3));
    ws.push_back(transposition(2, 3));
    ws.push_back(cycle123());
    ws.push_back(cycle123().compose(cycle123()));
    return ws;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
    WeylElement r;
    for (int i = 0; i < 3; ++i)
        r.perm[static_cast<size_t>(i)] = perm[o.perm[static_cast<size_t>(i)]];
    return r;
}

int WeylElement::sign() const {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

int WeylElement::fixed_point() const {
    for (int i = 0; i < 3; ++i)
        if (perm[static_cast<size_t>(i)] == i && !is_identity()) return i + 1;
    throw Error("not a transposition");
}

LaurentPoly torus_coordinate(int i, Domain dom) {
    switch (i) {
        case 1: return LaurentPoly::variable(VarSet::T2, 0, dom);
        case 2: return LaurentPoly::variable(VarSet::T2, 1, dom);
        case 3: {
            Mono m;
            m[0] = -1;
            m[1] = -1;
            return LaurentPoly::monomial(VarSet::T2, m, 1, dom);
        }
    }
    throw Error("torus coordinate index must be 1, 2 or 3");
}

namespace {

// w acting on an eliminated torus monomial: lift (a,b) to (a,b,0),
// permute exponents, re-eliminate via t3 = (t1 t2)^-1.
Mono permute_torus_mono(const WeylElement& w, const Mono& m) {
    int32_t alpha[3] = {m[0], m[1], 0};
    int32_t beta[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) beta[w.perm[static_cast<size_t>(i)]] = alpha[i];
    Mono r;
    r[0] = beta[0] - beta[2];
    r[1] = beta[1] - beta[2];
    return r;
}

LaurentPoly weyl_act_torus3(const WeylElement& w, const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) ts.push_back({permute_torus_mono(w, t.m), t.c});
    return LaurentPoly::from_terms(p.vars(), p.domain(), std::move(ts));
}

bool is_w_invariant_torus3(const LaurentPoly& p) {
    return weyl_act_torus3(WeylElement::transposition(1, 2), p) == p &&
           weyl_act_torus3(WeylElement::cycle123(), p) == p;
}

} // namespace

RingElement weyl_act(const WeylElement& w, const RingElement& x) {
    switch (x.ring) {
        case Ring::TorusSU2: {
            // only the transposition acts: t -> t^-1
            if (w.is_identity()) return x;
            std::vector<LaurentPoly::Term> ts;
            for (const auto& t : x.poly.terms()) {
                Mono m;
                m[0] = -t.m[0];
                ts.push_back({m, t.c});
            }
            return {x.ring, LaurentPoly::from_terms(x.poly.vars(), x.poly.domain(), std::move(ts))};
        }
        case Ring::TorusSU3:
            return {x.ring, weyl_act_torus3(w, x.poly)};
        case Ring::U2:
        case Ring::SU2:
        case Ring::SU3:
            return x;  // trivial action
    }
    throw Error("bad ring tag");
}

RingElement symmetrize(const RingElement& x) {
    if (x.ring != Ring::TorusSU3) throw Error("symmetrize: TorusSU3 element expected");
    LaurentPoly acc = LaurentPoly::zero(VarSet::T2, Domain::Rational);
    for (const WeylElement& w : WeylElement::s3())
        acc = acc + weyl_act_torus3(w, x.poly.with_domain(Domain::Rational));
    return {x.ring, acc * Rat(1, 6)};
}

RingElement signed_symmetrize(const RingElement& x) {
    if (x.ring != Ring::TorusSU3) throw Error("signed_symmetrize: TorusSU3 element expected");
    LaurentPoly acc = LaurentPoly::zero(VarSet::T2, Domain::Rational);
    for (const WeylElement& w : WeylElement::s3()) {
        LaurentPoly img = weyl_act_torus3(w, x.poly.with_domain(Domain::Rational));
        acc = (w.sign() > 0) ? acc + img : acc - img;
    }
    return {x.ring, acc * Rat(1, 6)};
}

namespace {

LaurentPoly torus2_to_su2(const LaurentPoly& f) {
    // invariance: t <-> t^-1
    {
        std::vector<LaurentPoly::Term> ts;
        for (const auto& t : f.terms()) {
            Mono m;
            m[0] = -t.m[0];
            ts.push_back({m, t.c});
        }
        if (!(LaurentPoly::from_terms(f.vars(), f.domain(), std::move(ts)) == f))
            throw Error("to_invariant_ring: element not invariant under t <-> t^-1");
    }
    LaurentPoly rem = f;
    LaurentPoly rho = LaurentPoly::variable(VarSet::Rho, 0, f.domain());
    LaurentPoly q = parse_poly(VarSet::T, "t + t^-1").with_domain(f.domain());
    LaurentPoly out = LaurentPoly::zero(VarSet::Rho, f.domain());
    while (!rem.is_zero()) {
        int32_t n = rem.max_exp(0);
        if (n == 0) {
            out = out + LaurentPoly::constant(VarSet::Rho, rem.constant_coeff(), f.domain());
            break;
        }
        Mono m;
        m[0] = n;
        Rat c = rem.coeff(m);
        out = out + rho.pow(n) * c;
        rem = rem - q.pow(n) * c;
    }
    return out;
}

// elementary symmetric polynomials in the eliminated torus coordinates
LaurentPoly elim_e1(Domain dom) {
    return torus_coordinate(1, dom) + torus_coordinate(2, dom) + torus_coordinate(3, dom);
}
LaurentPoly elim_e2(Domain dom) {
    LaurentPoly t1 = torus_coordinate(1, dom), t2 = torus_coordinate(2, dom),
                t3 = torus_coordinate(3, dom);
    return t1 * t2 + t1 * t3 + t2 * t3;
}

// canonical 3-variable lift of an eliminated monomial: exponents >= 0, min = 0
std::array<int32_t, 3> canonical_lift(const Mono& m) {
    int32_t k = std::min({m[0], m[1], 0});
    return {m[0] - k, m[1] - k, -k};
}

std::array<int32_t, 3> sorted_desc(std::array<int32_t, 3> v) {
    std::sort(v.begin(), v.end(), std::greater<int32_t>());
    return v;
}

LaurentPoly torus3_to_su3(const LaurentPoly& f) {
    if (!is_w_invariant_torus3(f)) throw Error("to_invariant_ring: element not W-invariant");
    Domain dom = f.domain();
    LaurentPoly rem = f;
    LaurentPoly out = LaurentPoly::zero(VarSet::S1S2, dom);
    LaurentPoly e1 = elim_e1(dom), e2 = elim_e2(dom);
    LaurentPoly s1 = LaurentPoly::variable(VarSet::S1S2, 0, dom);
    LaurentPoly s2 = LaurentPoly::variable(VarSet::S1S2, 1, dom);
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 200000) throw Error("to_invariant_ring: rewrite did not terminate");
        // leading sorted lifted exponent over the support
        std::array<int32_t, 3> best{-1, -1, -1};
        Rat c;
        for (const auto& t : rem.terms()) {
            auto lam = sorted_desc(canonical_lift(t.m));
            if (lam > best) {
                best = lam;
                c = t.c;
            }
        }
        // with e3 = 1 the canonical representative has best[2] == 0
        if (best[2] != 0) throw Error("to_invariant_ring: internal lift error");
        out = out + s1.pow(best[0] - best[1]) * s2.pow(best[1]) * c;
        rem = rem - e1.pow(best[0] - best[1]) * e2.pow(best[1]) * c;
    }
    return out;
}

} // namespace

LaurentPoly xy_to_u2(const LaurentPoly& f) {
    if (f.vars() != VarSet::XY) throw Error("xy_to_u2: XY element expected");
    // invariance under x <-> y
    {
        std::vector<LaurentPoly::Term> ts;
        for (const auto& t : f.terms()) {
            Mono m;
            m[0] = t.m[1];
            m[1] = t.m[0];
            ts.push_back({m, t.c});
        }
        if (!(LaurentPoly::from_terms(f.vars(), f.domain(), std::move(ts)) == f))
            throw Error("xy_to_u2: element not symmetric in x, y");
    }
    Domain dom = f.domain();
    int32_t k = std::min({f.min_exp(0), f.min_exp(1), 0});
    Mono shift;
    shift[0] = -k;
    shift[1] = -k;
    LaurentPoly rem = f * LaurentPoly::monomial(VarSet::XY, shift, 1, dom);
    LaurentPoly e1 = parse_poly(VarSet::XY, "x + y").with_domain(dom);
    LaurentPoly e2 = parse_poly(VarSet::XY, "x*y").with_domain(dom);
    LaurentPoly s = LaurentPoly::variable(VarSet::SD, 0, dom);
    LaurentPoly d = LaurentPoly::variable(VarSet::SD, 1, dom);
    LaurentPoly out = LaurentPoly::zero(VarSet::SD, dom);
    while (!rem.is_zero()) {
        std::array<int32_t, 2> best{-1, -1};
        Rat c;
        for (const auto& t : rem.terms()) {
            std::array<int32_t, 2> lam{std::max(t.m[0], t.m[1]), std::min(t.m[0], t.m[1])};
            if (lam > best) {
                best = lam;
                c = t.c;
            }
        }
        out = out + s.pow(best[0] - best[1]) * d.pow(best[1]) * c;
        rem = rem - e1.pow(best[0] - best[1]) * e2.pow(best[1]) * c;
    }
    return out * d.pow(k);
}

RingElement to_invariant_ring(const RingElement& x, Ring target) {
    if (x.ring == Ring::TorusSU2 && target == Ring::SU2)
        return {Ring::SU2, torus2_to_su2(x.poly)};
    if (x.ring == Ring::TorusSU3 && target == Ring::SU3)
        return {Ring::SU3, torus3_to_su3(x.poly)};
    throw Error("to_invariant_ring: unsupported source/target pair");
}

WeylElement edge_transposition(Edge e) {
    switch (e) {
        case Edge::E01: return WeylElement::transposition(2, 3);
        case Edge::E12: return WeylElement::transposition(1, 3);
        case Edge::E02: return WeylElement::transposition(1, 2);
    }
    throw Error("bad edge");
}

int edge_fixed_variable(Edge e) {
    switch (e) {
        case Edge::E01: return 1;
        case Edge::E12: return 2;
        case Edge::E02: return 3;
    }
    throw Error("bad edge");
}

Hom edge_hom(Edge e) {
    switch (e) {
        case Edge::E01: return Hom::U2toTorus01;
        case Edge::E12: return Hom::U2toTorus12;
        case Edge::E02: return Hom::U2toTorus02;
    }
    throw Error("bad edge");
}

RingElement restrict_hom(const RingElement& x, Hom hom) {
    Domain dom = x.poly.domain();
    switch (hom) {
        case Hom::SU3toU2: {
            if (x.ring != Ring::SU3) throw Error("restrict: SU3 element expected");
            LaurentPoly s1 = parse_poly(VarSet::SD, "s + d^-1").with_domain(dom);
            LaurentPoly s2 = parse_poly(VarSet::SD, "d^-1*s + d").with_domain(dom);
            return {Ring::U2, substitute(x.poly, {s1, s2})};
        }
        case Hom::SU2toTorus: {
            if (x.ring != Ring::SU2) throw Error("restrict: SU2 element expected");
            LaurentPoly q = parse_poly(VarSet::T, "t + t^-1").with_domain(dom);
            return {Ring::TorusSU2, substitute(x.poly, {q})};
        }
        case Hom::SU3toTorus: {
            if (x.ring != Ring::SU3) throw Error("restrict: SU3 element expected");
            return {Ring::TorusSU3, substitute(x.poly, {elim_e1(dom), elim_e2(dom)})};
        }
        case Hom::U2toTorus01:
        case Hom::U2toTorus12:
        case Hom::U2toTorus02: {
            if (x.ring != Ring::U2) throw Error("restrict: U2 element expected");
            int j, k;  // the paired coordinates; s -> tj + tk, d -> tj tk
            if (hom == Hom::U2toTorus01) {
                j = 2, k = 3;
            } else if (hom == Hom::U2toTorus12) {
                j = 1, k = 3;
            } else {
                j = 1, k = 2;
            }
            LaurentPoly s_img = torus_coordinate(j, dom) + torus_coordinate(k, dom);
            LaurentPoly d_img = torus_coordinate(j, dom) * torus_coordinate(k, dom);
            return {Ring::TorusSU3, substitute(x.poly, {s_img, d_img})};
        }
    }
    throw Error("unknown hom tag");
}

std::pair<RingElement, RingElement> su2_decompose(const RingElement& f) {
    if (f.ring != Ring::TorusSU2) throw Error("su2_decompose: TorusSU2 element expected");
    Domain dom = f.poly.domain();
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0, dom);
    LaurentPoly tinv = t.pow(-1);
    LaurentPoly af = weyl_act(WeylElement::transposition(1, 2), f).poly;
    LaurentPoly den = tinv - t;
    auto g1 = exact_div(tinv * f.poly - t * af, den);
    auto g2 = exact_div(af - f.poly, den);
    if (!g1 || !g2) throw Error("su2_decompose: exact division failed (internal)");
    return {to_invariant_ring({Ring::TorusSU2, *g1}, Ring::SU2),
            to_invariant_ring({Ring::TorusSU2, *g2}, Ring::SU2)};
}

const std::array<LaurentPoly, 6>& steinberg_basis() {
    static const std::array<LaurentPoly, 6> beta = [] {
        auto mono = [](int32_t a, int32_t b) {
            Mono m;
            m[0] = a;
            m[1] = b;
            return LaurentPoly::monomial(VarSet::T2, m, 1, Domain::Rational);
        };
        // {1, t2, t3, t2^-1, t1^-1, t1^-1 t3} eliminated over (t1, t2)
        return std::array<LaurentPoly, 6>{mono(0, 0),  mono(0, 1),  mono(-1, -1),
                                          mono(0, -1), mono(-1, 0), mono(-2, -1)};
    }();
    return beta;
}

namespace {

// n x n determinant of Laurent polynomial entries by cofactor expansion;
// only used for n <= 6 with monomial entries.
LaurentPoly det_expand(const std::vector<std::vector<LaurentPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly acc = LaurentPoly::zero(m[0][0].vars(), Domain::Rational);
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> sub;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<LaurentPoly> row(m[r].begin() + 1, m[r].end());
            sub.push_back(std::move(row));
        }
        LaurentPoly term = m[i][0] * det_expand(sub);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

struct SteinbergTables {
    std::vector<WeylElement> ws;
    std::vector<std::vector<LaurentPoly>> M;       // 6x6, monomials
    LaurentPoly D;                                 // det(M)
    std::array<std::array<LaurentPoly, 6>, 6> cof; // cofactors C[i][j] = (-1)^{i+j} minor_ij
};

const SteinbergTables& steinberg_tables() {
    static const SteinbergTables tab = [] {
        SteinbergTables t;
        t.ws = WeylElement::s3();
        const auto& beta = steinberg_basis();
        t.M.assign(6, std::vector<LaurentPoly>(6, LaurentPoly::zero(VarSet::T2, Domain::Rational)));
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j)
                t.M[i][j] = weyl_act_torus3(t.ws[i], beta[j]);
        t.D = det_expand(t.M);
        if (t.D.is_zero()) throw Error("Steinberg matrix is singular (internal)");
        for (size_t i = 0; i < 6; ++i) {
            for (size_t j = 0; j < 6; ++j) {
                std::vector<std::vector<LaurentPoly>> sub;
                for (size_t r = 0; r < 6; ++r) {
                    if (r == i) continue;
                    std::vector<LaurentPoly> row;
                    for (size_t c = 0; c < 6; ++c)
                        if (c != j) row.push_back(t.M[r][c]);
                    sub.push_back(std::move(row));
                }
                LaurentPoly mm = det_expand(sub);
                t.cof[i][j] = ((i + j) % 2 == 0) ? mm : -mm;
            }
        }
        return t;
    }();
    return tab;
}

} // namespace

std::array<RingElement, 6> steinberg_decompose(const RingElement& f) {
    if (f.ring != Ring::TorusSU3) throw Error("steinberg_decompose: TorusSU3 element expected");
    const SteinbergTables& tab = steinberg_tables();
    LaurentPoly fp = f.poly.with_domain(Domain::Rational);
    std::array<LaurentPoly, 6> rhs;
    for (size_t i = 0; i < 6; ++i) rhs[i] = weyl_act_torus3(tab.ws[i], fp);
    std::array<RingElement, 6> out;
    LaurentPoly recomposed = LaurentPoly::zero(VarSet::T2, Domain::Rational);
    for (size_t j = 0; j < 6; ++j) {
        LaurentPoly nj = LaurentPoly::zero(VarSet::T2, Domain::Rational);
        for (size_t i = 0; i < 6; ++i)
            if (!rhs[i].is_zero()) nj = nj + rhs[i] * tab.cof[i][j];
        auto cj = exact_div(nj, tab.D);
        if (!cj) throw Error("steinberg_decompose: Cramer division failed (internal)");
        out[j] = to_invariant_ring({Ring::TorusSU3, *cj}, Ring::SU3);
        recomposed = recomposed + *cj * steinberg_basis()[j];
    }
    if (!(recomposed == fp)) throw Error("steinberg_decompose: recomposition check failed");
    return out;
}

std::optional<std::array<RingElement, 3>> fixed_submodule_decompose(const RingElement& f,
                                                                    const WeylElement& w) {
    if (f.ring != Ring::TorusSU3) throw Error("fixed_submodule_decompose: TorusSU3 expected");
    int fixed = w.fixed_point();
    LaurentPoly fp = f.poly.with_domain(Domain::Rational);
    if (!(weyl_act_torus3(w, fp) == fp))
        throw Error("fixed_submodule_decompose: element not invariant under the transposition");

    // rows k = 1..3: apply the transposition (fixed k); candidate basis {1, t_fixed, t_fixed^-1}
    std::vector<std::vector<LaurentPoly>> M(3);
    std::array<LaurentPoly, 3> rhs;
    for (int k = 1; k <= 3; ++k) {
        WeylElement sigma =
            (k == fixed) ? WeylElement::identity() : WeylElement::transposition(fixed, k);
        LaurentPoly tk = torus_coordinate(k, Domain::Rational);
        M[static_cast<size_t>(k - 1)] = {LaurentPoly::constant(VarSet::T2, 1, Domain::Rational), tk,
                                         tk.pow(-1)};
        rhs[static_cast<size_t>(k - 1)] = weyl_act_torus3(sigma, fp);
    }
    LaurentPoly D = det_expand(M);
    std::array<RingElement, 3> out;
    for (size_t j = 0; j < 3; ++j) {
        LaurentPoly nj = LaurentPoly::zero(VarSet::T2, Domain::Rational);
        for (size_t i = 0; i < 3; ++i) {
            std::vector<std::vector<LaurentPoly>> sub;
            for (size_t r = 0; r < 3; ++r) {
                if (r == i) continue;
                std::vector<LaurentPoly> row;
                for (size_t c = 0; c < 3; ++c)
                    if (c != j) row.push_back(M[r][c]);
                sub.push_back(std::move(row));
            }
            LaurentPoly term = rhs[i] * det_expand(sub);
            nj = ((i + j) % 2 == 0) ? nj + term : nj - term;
        }
        auto cj = exact_div(nj, D);
        if (!cj) return std::nullopt;
        if (!is_w_invariant_torus3(*cj)) return std::nullopt;
        out[j] = to_invariant_ring({Ring::TorusSU3, *cj}, Ring::SU3);
    }
    // recomposition check
    LaurentPoly ti = torus_coordinate(fixed, Domain::Rational);
    LaurentPoly rec = restrict_hom(out[0], Hom::SU3toTorus).poly +
                      restrict_hom(out[1], Hom::SU3toTorus).poly * ti +
                      restrict_hom(out[2], Hom::SU3toTorus).poly * ti.pow(-1);
    if (!(rec == fp)) return std::nullopt;
    return out;
}

Localized localized_reduce(const Localized& x, const RingElement& denom_poly) {
    if (denom_poly.ring != x.numerator.ring)
        throw Error("localized_reduce: denominator in a different ring");
    Localized r = x;
    while (r.denom_exp > 0) {
        auto q = exact_div(r.numerator.poly, denom_poly.poly);
        if (!q) break;
        r.numerator.poly = *q;
        --r.denom_exp;
    }
    return r;
}

bool localized_equal(const Localized& a, const Localized& b, const RingElement& denom_poly) {
    LaurentPoly lhs = a.numerator.poly * denom_poly.poly.pow(b.denom_exp);
    LaurentPoly rhs = b.numerator.poly * denom_poly.poly.pow(a.denom_exp);
    return lhs == rhs;
}

Localized localized_add(const Localized& a, const Localized& b, const RingElement& denom_poly) {
    uint32_t k = std::max(a.denom_exp, b.denom_exp);
    LaurentPoly num = a.numerator.poly * denom_poly.poly.pow(k - a.denom_exp) +
                      b.numerator.poly * denom_poly.poly.pow(k - b.denom_exp);
    return localized_reduce({{a.numerator.ring, num}, k}, denom_poly);
}

Localized localized_mul(const Localized& a, const Localized& b) {
    return {{a.numerator.ring, a.numerator.poly * b.numerator.poly}, a.denom_exp + b.denom_exp};
}

} // namespace twk
