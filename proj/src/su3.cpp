#include "twk/su3.hpp"

#include <algorithm>
#include <sstream>

namespace twk {

namespace {

RingElement restrict_su3_to_torus(const RingElement& x) { return restrict_hom(x, Hom::SU3toTorus); }

LaurentPoly f_at_torus(const ExponentialFunctor& F, int i) {
    return f_of_lines(F, {torus_coordinate(i)});
}

LaurentPoly f_rho_torus(const ExponentialFunctor& F) {
    return f_of_lines(F, {torus_coordinate(1), torus_coordinate(2), torus_coordinate(3)});
}

} // namespace

std::array<Localized, 3> d0_apply(const DerivedElements& de, const std::array<Localized, 3>& x) {
    RingElement denom_u2 = {Ring::U2, de.lambda_F.poly * de.mu_F.poly};  // r(F(rho))
    auto r = [&](const Localized& v) -> Localized {
        return {restrict_hom(v.numerator, Hom::SU3toU2), v.denom_exp};
    };
    Localized rx0 = r(x[0]), rx1 = r(x[1]), rx2 = r(x[2]);
    Localized lambda{de.lambda_F, 0};
    Localized lambda_inv{de.lambda_inv.inverse_numerator, de.lambda_inv.power};
    Localized mu_inv{de.mu_inv.inverse_numerator, de.mu_inv.power};
    auto neg = [](const Localized& v) -> Localized {
        return {{v.numerator.ring, -v.numerator.poly}, v.denom_exp};
    };
    std::array<Localized, 3> out;
    out[0] = localized_add(neg(rx0), localized_mul(lambda, rx1), denom_u2);
    out[1] = localized_add(neg(rx1), localized_mul(mu_inv, rx2), denom_u2);
    out[2] = localized_add(neg(rx0), localized_mul(lambda_inv, rx2), denom_u2);
    return out;
}

Localized d1_apply(const DerivedElements& de, const std::array<Localized, 3>& y) {
    RingElement denom_t = {Ring::TorusSU3, de.nu_F.poly * de.nu_inv.inverse_numerator.poly};
    auto rI = [&](const Localized& v, Edge e) -> Localized {
        return {restrict_hom(v.numerator, edge_hom(e)), v.denom_exp};
    };
    Localized a = rI(y[0], Edge::E01);
    Localized b = localized_mul({de.nu_F, 0}, rI(y[1], Edge::E12));
    Localized c = rI(y[2], Edge::E02);
    Localized nc{{Ring::TorusSU3, -c.numerator.poly}, c.denom_exp};
    return localized_add(localized_add(a, b, denom_t), nc, denom_t);
}

namespace {

// C^1 data for one edge: generating torus elements of the fixed
// submodule with their Steinberg coordinate vectors and syzygies.
struct EdgeComponent {
    Edge edge;
    std::vector<LaurentPoly> gens;      // torus elements
    std::vector<gb::ModVec> gen_coords; // Steinberg coordinates (rank 6)
    std::vector<gb::ModVec> relations;  // syzygies among the generators
    bool fallback = false;
};

gb::ModVec steinberg_coords(const LaurentPoly& torus_elem) {
    auto cs = steinberg_decompose({Ring::TorusSU3, torus_elem});
    gb::ModVec v = gb::ModVec::zero(6);
    for (size_t i = 0; i < 6; ++i) v.comp[i] = gb::from_laurent(cs[i].poly);
    return v;
}

EdgeComponent build_edge_primary(Edge e) {
    EdgeComponent ec;
    ec.edge = e;
    LaurentPoly ti = torus_coordinate(edge_fixed_variable(e), Domain::Rational);
    ec.gens = {LaurentPoly::constant(VarSet::T2, 1, Domain::Rational), ti, ti.pow(-1)};
    for (const LaurentPoly& b : ec.gens) ec.gen_coords.push_back(steinberg_coords(b));
    return ec;
}

EdgeComponent build_edge_fallback(Edge e) {
    // Groebner kernel generators of (1 - w) in Steinberg coordinates
    EdgeComponent ec;
    ec.edge = e;
    ec.fallback = true;
    WeylElement w = edge_transposition(e);
    std::vector<gb::ModVec> one_minus_w;
    const auto& beta = steinberg_basis();
    for (size_t j = 0; j < 6; ++j) {
        LaurentPoly img = beta[j] - weyl_act(w, RingElement{Ring::TorusSU3, beta[j]}).poly;
        one_minus_w.push_back(steinberg_coords(img));
    }
    gb::Submodule ker = gb::kernel(one_minus_w, 6);
    for (const gb::ModVec& v : ker.basis()) {
        LaurentPoly g = LaurentPoly::zero(VarSet::T2, Domain::Rational);
        for (size_t j = 0; j < 6; ++j) {
            for (const auto& t : gb::to_laurent(v.comp[j], VarSet::T2).terms())
                g = g + beta[j] * LaurentPoly::monomial(VarSet::T2, t.m, t.c, Domain::Rational);
        }
        ec.gens.push_back(g);
        ec.gen_coords.push_back(v);
    }
    gb::Submodule syz = gb::kernel(ec.gen_coords, static_cast<int>(ec.gen_coords.size()));
    for (const gb::ModVec& s : syz.basis()) ec.relations.push_back(s);
    return ec;
}

// coordinates of a fixed-submodule element over the edge generators;
// nullopt signals that the candidate basis is inadequate
std::optional<std::vector<gb::BiPoly>> edge_coordinates(const EdgeComponent& ec,
                                                        const LaurentPoly& elem) {
    if (!ec.fallback) {
        auto dec = fixed_submodule_decompose({Ring::TorusSU3, elem}, edge_transposition(ec.edge));
        if (!dec) return std::nullopt;
        std::vector<gb::BiPoly> out;
        for (const RingElement& c : *dec) out.push_back(gb::from_laurent(c.poly));
        return out;
    }
    gb::Submodule span(6, ec.gen_coords);
    auto lifted = gb::lift(span, steinberg_coords(elem));
    if (!lifted) throw Error("fallback lift failed: element not in the fixed submodule");
    return *lifted;
}

} // namespace

SU3ChainComplex build_differentials(const ExponentialFunctor& F, bool force_fallback) {
    SU3ChainComplex cx;
    cx.denom_exp = 1;

    LaurentPoly frho = f_rho_torus(F).with_domain(Domain::Rational);
    LaurentPoly f1 = f_at_torus(F, 1).with_domain(Domain::Rational);
    LaurentPoly f2 = f_at_torus(F, 2).with_domain(Domain::Rational);

    // cleared d0 entries per edge and SU3 slot:
    //   edge {0,1}: (-F(rho), F(t1) F(rho), 0)
    //   edge {1,2}: (0, -F(rho), F(t2))          (mu_F^-1 = lambda_F / F(rho))
    //   edge {0,2}: (-F(rho), 0, F(t1) F(t2))    (lambda_F^-1 = mu_F / F(rho))
    std::array<std::array<LaurentPoly, 3>, 3> entry;
    LaurentPoly zero_t = LaurentPoly::zero(VarSet::T2, Domain::Rational);
    entry[0] = {-frho, f1 * frho, zero_t};
    entry[1] = {zero_t, -frho, f2};
    entry[2] = {-frho, zero_t, f1 * f2};

    // per edge: try the candidate basis, fall back to kernel generators
    std::array<EdgeComponent, 3> edges;
    std::array<std::array<std::vector<gb::BiPoly>, 3>, 3> coords;  // [edge][col]
    const std::array<Edge, 3> edge_ids = {Edge::E01, Edge::E12, Edge::E02};
    for (int e = 0; e < 3; ++e) {
        EdgeComponent ec =
            force_fallback ? build_edge_fallback(edge_ids[static_cast<size_t>(e)])
                           : build_edge_primary(edge_ids[static_cast<size_t>(e)]);
        bool ok = true;
        for (int col = 0; col < 3 && ok; ++col) {
            const LaurentPoly& x = entry[static_cast<size_t>(e)][static_cast<size_t>(col)];
            if (x.is_zero()) {
                coords[static_cast<size_t>(e)][static_cast<size_t>(col)].clear();
                continue;
            }
            auto c = edge_coordinates(ec, x);
            if (!c) {
                ok = false;
                break;
            }
            coords[static_cast<size_t>(e)][static_cast<size_t>(col)] = std::move(*c);
        }
        if (!ok) {
            ec = build_edge_fallback(edge_ids[static_cast<size_t>(e)]);
            for (int col = 0; col < 3; ++col) {
                const LaurentPoly& x = entry[static_cast<size_t>(e)][static_cast<size_t>(col)];
                if (x.is_zero()) {
                    coords[static_cast<size_t>(e)][static_cast<size_t>(col)].clear();
                    continue;
                }
                auto c = edge_coordinates(ec, x);
                if (!c) throw Error("build_differentials: fallback decomposition failed");
                coords[static_cast<size_t>(e)][static_cast<size_t>(col)] = std::move(*c);
            }
        }
        edges[static_cast<size_t>(e)] = std::move(ec);
    }
    cx.used_fallback = edges[0].fallback || edges[1].fallback || edges[2].fallback;

    std::vector<int> offsets(3);
    int total = 0;
    for (int e = 0; e < 3; ++e) {
        offsets[static_cast<size_t>(e)] = total;
        total += static_cast<int>(edges[static_cast<size_t>(e)].gens.size());
    }

    for (int col = 0; col < 3; ++col) {
        gb::ModVec v = gb::ModVec::zero(total);
        for (int e = 0; e < 3; ++e) {
            const auto& cs = coords[static_cast<size_t>(e)][static_cast<size_t>(col)];
            for (size_t k = 0; k < cs.size(); ++k)
                v.comp[static_cast<size_t>(offsets[static_cast<size_t>(e)]) + k] = cs[k];
        }
        cx.a_cols.push_back(std::move(v));
    }

    // relations among C^1 coordinates, embedded in the total coordinate space
    for (int e = 0; e < 3; ++e) {
        const EdgeComponent& ec = edges[static_cast<size_t>(e)];
        for (const gb::ModVec& s : ec.relations) {
            gb::ModVec v = gb::ModVec::zero(total);
            for (size_t k = 0; k < s.comp.size(); ++k)
                v.comp[static_cast<size_t>(offsets[static_cast<size_t>(e)]) + k] = s.comp[k];
            cx.c1_relations.push_back(std::move(v));
        }
    }

    // B columns: edge {0,1} -> +steinberg(g), edge {1,2} -> +steinberg(F(t1) g),
    // edge {0,2} -> -steinberg(g)
    for (int e = 0; e < 3; ++e) {
        const EdgeComponent& ec = edges[static_cast<size_t>(e)];
        for (const LaurentPoly& g : ec.gens) {
            LaurentPoly elem = g;
            if (ec.edge == Edge::E12) elem = f1 * elem;
            gb::ModVec coords = steinberg_coords(elem);
            if (ec.edge == Edge::E02)
                coords = gb::ModVec::zero(6) - coords;
            cx.b_cols.push_back(std::move(coords));
        }
    }

    // B * A == 0 exactly
    cx.ba_zero = true;
    for (const gb::ModVec& a : cx.a_cols) {
        gb::ModVec prod = gb::ModVec::zero(6);
        for (size_t k = 0; k < cx.b_cols.size(); ++k)
            prod = prod + cx.b_cols[k].mul(a.comp[k]);
        if (!prod.is_zero()) cx.ba_zero = false;
    }
    if (!cx.ba_zero) throw Error("build_differentials: B*A != 0 (edge assignment broken)");
    return cx;
}

BredonReport bredon_identities(const ExponentialFunctor& F) {
    BredonReport rep;
    DerivedElements de = derived_elements(F);
    LaurentPoly f1 = f_at_torus(F, 1), f2 = f_at_torus(F, 2), f3 = f_at_torus(F, 3);

    rep.r01_lambda_is_F_t1 = restrict_hom(de.lambda_F, Hom::U2toTorus01).poly == f1;
    rep.r12_mu_is_F_t1_F_t3 = restrict_hom(de.mu_F, Hom::U2toTorus12).poly == f1 * f3;
    rep.r02_lambda_is_F_t3 = restrict_hom(de.lambda_F, Hom::U2toTorus02).poly == f3;

    // the three composites SU3 -> U2 -> torus agree with the direct restriction
    rep.restrictions_compatible = true;
    for (int g = 0; g < 2; ++g) {
        RingElement sg = {Ring::SU3, LaurentPoly::variable(VarSet::S1S2, g)};
        RingElement via_u2 = restrict_hom(sg, Hom::SU3toU2);
        RingElement direct = restrict_su3_to_torus(sg);
        for (Edge e : {Edge::E01, Edge::E12, Edge::E02})
            if (!(restrict_hom(via_u2, edge_hom(e)).poly == direct.poly))
                rep.restrictions_compatible = false;
    }

    // d1(d0(x)) == 0 for a generic triple of SU3 elements
    {
        RingElement s1 = {Ring::SU3, LaurentPoly::variable(VarSet::S1S2, 0)};
        RingElement s2 = {Ring::SU3, LaurentPoly::variable(VarSet::S1S2, 1)};
        std::array<Localized, 3> x = {Localized{{Ring::SU3, s1.poly + s2.poly * s2.poly}, 0},
                                      Localized{{Ring::SU3, s2.poly - s1.poly * s1.poly}, 1},
                                      Localized{{Ring::SU3, s1.poly * s2.poly + s1.poly}, 0}};
        Localized z = d1_apply(de, d0_apply(de, x));
        rep.d1_after_d0_zero = z.numerator.poly.is_zero();
    }

    // cellular comparison: with correction factors r~_1 = mult by F(t1)
    // and r~_2 = mult by F(t3)^-1 the hatted d0 turns into the cellular
    // sum of inclusions, and d1 composed with r~ picks up nu_F = F(t1).
    {
        // middle component, cleared by F(t1) F(t3):
        //   F(t1) * (-x1 + (F(t1)F(t3))^-1 x2) == -r~_1(x1) + r~_2(x2)
        LaurentPoly x1 = torus_coordinate(1) + torus_coordinate(2) + torus_coordinate(3);
        LaurentPoly x2 = x1 * x1;
        LaurentPoly lhs_cleared = f1 * (f1 * f3 * (-x1) + x2);        // F(t1)F(t3) * lhs
        LaurentPoly rhs_cleared = f3 * (f1 * (-x1)) * f1 + f1 * x2;   // F(t1)F(t3) * rhs
        bool d0_mid = (lhs_cleared == rhs_cleared);
        // nu_F is the r~_1 correction factor
        bool nu_is_f1 = (de.nu_F.poly == f1);
        // d1 composite on generic members of the three fixed subrings
        LaurentPoly y01 = torus_coordinate(1) + torus_coordinate(1).pow(-1);
        LaurentPoly y12 = torus_coordinate(2) * torus_coordinate(2);
        LaurentPoly y02 = torus_coordinate(3).pow(-1);
        LaurentPoly via_cell = y01 + f1 * y12 - y02;
        LaurentPoly via_d1 = y01 + de.nu_F.poly * y12 - y02;
        rep.cellular_comparison = d0_mid && nu_is_f1 && (via_d1 == via_cell);
    }

    rep.all_ok = rep.r01_lambda_is_F_t1 && rep.r12_mu_is_F_t1_F_t3 && rep.r02_lambda_is_F_t3 &&
                 rep.restrictions_compatible && rep.d1_after_d0_zero && rep.cellular_comparison;
    if (!rep.all_ok)
        throw Error(
            "bredon_identities failed for the edge assignment {0,1}->(23), {1,2}->(13), "
            "{0,2}->(12)");
    return rep;
}

KoszulRoute koszul_route(const ExponentialFunctor& F, bool reverse_orientation) {
    KoszulRoute kr;
    kr.hypothesis_ok = hypothesis_checks(F).su3_ok;
    kr.reverse_orientation = reverse_orientation;
    kr.clearing_exp = reverse_orientation ? 1 : 0;

    LaurentPoly f[4];
    for (int i = 1; i <= 3; ++i) f[i] = f_at_torus(F, i);

    // theta_jk = F(t_j) - F(t_k); reversed and cleared by F(rho):
    // theta'_jk = F(t_l) (F(t_k) - F(t_j)), l the remaining index
    auto theta = [&](int j, int k) -> LaurentPoly {
        if (!reverse_orientation) return f[j] - f[k];
        int l = 6 - j - k;
        return f[l] * (f[k] - f[j]);
    };
    LaurentPoly th12 = theta(1, 2), th23 = theta(2, 3), th31 = theta(3, 1);

    LaurentPoly t1 = torus_coordinate(1), t2 = torus_coordinate(2), t3 = torus_coordinate(3);
    LaurentPoly qp = th12 * t3 + th23 * t1 + th31 * t2;
    LaurentPoly qm = th12 * t3.pow(-1) + th23 * t1.pow(-1) + th31 * t2.pow(-1);

    AntisymmetricElement aqp = AntisymmetricElement::checked({Ring::TorusSU3, qp});
    AntisymmetricElement aqm = AntisymmetricElement::checked({Ring::TorusSU3, qm});
    kr.q_plus = aqp.value;
    kr.q_minus = aqm.value;
    kr.psi_plus = psi(aqp);
    kr.psi_minus = psi(aqm);
    kr.chi1 = {Ring::SU3, -kr.psi_plus.poly};
    kr.chi2 = kr.psi_minus;

    // cross-identities: theta cocycle, chi via the determinant route
    bool ok = (th12 + th23 + th31).is_zero();
    if (!reverse_orientation) {
        std::vector<RowSeed> rows1 = {{F.character}, {parse_poly(VarSet::T, "t")},
                                      {parse_poly(VarSet::T, "1")}};
        LaurentPoly tvar = LaurentPoly::variable(VarSet::T, 0);
        std::vector<RowSeed> rows2 = {{F.character * tvar}, {parse_poly(VarSet::T, "t")},
                                      {parse_poly(VarSet::T, "1")}};
        ok = ok && (bialternant(rows1).poly == kr.chi1.poly);
        ok = ok && (bialternant(rows2).poly == kr.chi2.poly);
        // q+ == -detGalois(F; t; 1)
        ok = ok && (galois_determinant(rows1).poly == -qp);
        ok = ok && (galois_determinant(rows2).poly == qm);
    }
    kr.cross_identities_ok = ok;
    if (!ok) throw Error("koszul_route: cross identities failed (internal)");
    return kr;
}

RegSeqReport regular_sequence_check(const ExponentialFunctor& F) {
    RegSeqReport rep;
    rep.hypothesis_met = hypothesis_checks(F).su3_ok;
    if (!rep.hypothesis_met) return rep;

    LaurentPoly f1 = f_at_torus(F, 1), f2 = f_at_torus(F, 2), f3 = f_at_torus(F, 3);
    auto clear_poly = [](const LaurentPoly& p) -> LaurentPoly {
        Mono shift;
        shift[0] = -std::min(p.min_exp(0), 0);
        shift[1] = -std::min(p.min_exp(1), 0);
        return p * LaurentPoly::monomial(VarSet::T2, shift, 1, p.domain());
    };
    gb::BiPoly a = gb::from_laurent(clear_poly(f2 - f1));
    gb::BiPoly b = gb::from_laurent(clear_poly(f3 - f2));
    gb::BiPoly fsat = gb::from_laurent(clear_poly(f_rho_torus(F)));
    // also invert the torus coordinates themselves
    fsat = fsat * gb::BiPoly::monomial(1, 1, 1);

    gb::Ideal ideal_a({a});
    gb::Ideal sat = gb::saturate(ideal_a, fsat);
    gb::Ideal quot = gb::colon(sat, b);
    rep.certified = quot.equals(sat);
    if (!rep.certified) {
        for (const gb::BiPoly& g : quot.reduced_basis())
            if (!sat.contains(g)) {
                rep.witness = to_string(gb::to_laurent(g, VarSet::T2));
                break;
            }
    }
    return rep;
}

CohomologyReport rational_cohomology(const SU3ChainComplex& cx, const ExponentialFunctor& F) {
    CohomologyReport rep;
    gb::BiPoly frho = gb::from_laurent(f_rho_in(F, Ring::SU3).poly);
    int c1_rank = cx.a_cols.empty() ? 0 : cx.a_cols[0].rank();

    // H0: {v in F^3 : A v in relations} must saturate to zero
    {
        std::vector<gb::ModVec> cols = cx.a_cols;
        for (const gb::ModVec& s : cx.c1_relations) cols.push_back(s);
        gb::Submodule ker = gb::kernel(cols, static_cast<int>(cols.size()));
        std::vector<gb::ModVec> proj;
        for (const gb::ModVec& v : ker.generators()) {
            gb::ModVec w = gb::ModVec::zero(3);
            bool nz = false;
            for (int i = 0; i < 3; ++i) {
                w.comp[static_cast<size_t>(i)] = v.comp[static_cast<size_t>(i)];
                nz = nz || !w.comp[static_cast<size_t>(i)].is_zero();
            }
            if (nz) proj.push_back(std::move(w));
        }
        gb::Submodule h0 = gb::saturate(gb::Submodule(3, proj), frho);
        rep.h0_zero = h0.is_zero_module();
    }

    // H1: kernel(B) contained in saturate(image(A) + relations)
    {
        gb::Submodule kerB = gb::kernel(cx.b_cols, static_cast<int>(cx.b_cols.size()));
        std::vector<gb::ModVec> img = cx.a_cols;
        for (const gb::ModVec& s : cx.c1_relations) img.push_back(s);
        gb::Submodule satA = gb::saturate(gb::Submodule(c1_rank, img), frho);
        rep.h1_zero = satA.contains(kerB);
    }

    // H2: Q-dimension of F^6 / saturate(image B)
    {
        gb::Submodule imgB(6, cx.b_cols);
        gb::Submodule satB = gb::saturate(imgB, frho);
        rep.h2_dimension = gb::quotient_dimension(satB);
    }

    rep.ok = rep.h0_zero && rep.h1_zero && rep.h2_dimension.has_value();
    return rep;
}

std::optional<std::vector<Rat>> h_basis_expansion(const RingElement& x) {
    if (x.ring != Ring::SU3) throw Error("h_basis_expansion: SU3 element expected");
    if (x.poly.is_zero()) return std::vector<Rat>{};
    // weighted-homogeneous parts: weight(s1^a s2^b) = a + 2b
    int64_t wmax = 0;
    for (const auto& t : x.poly.terms())
        wmax = std::max<int64_t>(wmax, int64_t(t.m[0]) + 2 * int64_t(t.m[1]));
    std::vector<Rat> out(static_cast<size_t>(wmax) + 1, Rat(0));
    for (int64_t w = 0; w <= wmax; ++w) {
        std::vector<LaurentPoly::Term> part;
        for (const auto& t : x.poly.terms())
            if (int64_t(t.m[0]) + 2 * int64_t(t.m[1]) == w) part.push_back(t);
        if (part.empty()) continue;
        LaurentPoly pw = LaurentPoly::from_terms(VarSet::S1S2, Domain::Rational, std::move(part));
        LaurentPoly hk = h_complete(static_cast<int>(w), Domain::Rational).poly;
        // pw must be a scalar multiple of h_w
        Rat scalar = pw.leading_term().c / hk.coeff(pw.leading_term().m);
        if (!(hk * scalar == pw)) return std::nullopt;
        out[static_cast<size_t>(w)] = scalar;
    }
    return out;
}

bool SU3Report::operator==(const SU3Report& o) const {
    return functor_spec == o.functor_spec && F.character == o.F.character &&
           hypothesis.su3_ok == o.hypothesis.su3_ok && koszul.chi1 == o.koszul.chi1 &&
           koszul.chi2 == o.koszul.chi2 && regseq.certified == o.regseq.certified &&
           f_rho == o.f_rho && j_f_saturated == o.j_f_saturated &&
           k0_dimension == o.k0_dimension && k1_vanishes == o.k1_vanishes &&
           k1_certificate == o.k1_certificate && sigma1_h == o.sigma1_h && sigma2_h == o.sigma2_h &&
           cross_check_ok == o.cross_check_ok;
}

SU3Report k_groups_su3(const ExponentialFunctor& F, SU3Route route) {
    SU3Report rep;
    rep.functor_spec = F.name;
    rep.F = F;
    rep.hypothesis = hypothesis_checks(F);
    rep.koszul = koszul_route(F);
    rep.regseq = regular_sequence_check(F);
    rep.f_rho = f_rho_in(F, Ring::SU3);

    gb::BiPoly frho = gb::from_laurent(rep.f_rho.poly);
    gb::Ideal jf({gb::from_laurent(rep.koszul.chi1.poly), gb::from_laurent(rep.koszul.chi2.poly)});
    gb::Ideal jf_sat = gb::saturate(jf, frho);
    for (const gb::BiPoly& g : jf_sat.reduced_basis())
        rep.j_f_saturated.push_back(to_string(gb::to_laurent(g)));
    rep.k0_dimension = gb::quotient_dimension(jf_sat);

    rep.sigma1_h = h_basis_expansion(rep.koszul.chi1);
    rep.sigma2_h = h_basis_expansion(rep.koszul.chi2);

    bool run_complex = (route != SU3Route::Koszul);
    if (run_complex) {
        rep.complex = build_differentials(F);
        rep.cohomology = rational_cohomology(*rep.complex, F);
    }

    if (rep.hypothesis.su3_ok && rep.regseq.certified) {
        rep.k1_vanishes = true;
        rep.k1_certificate = "theorem-hypothesis";
    }
    if (rep.cohomology && rep.cohomology->h1_zero) {
        rep.k1_vanishes = true;
        if (rep.k1_certificate.empty()) rep.k1_certificate = "complex-route";
    }
    if (rep.k1_certificate.empty()) rep.k1_certificate = "not-certified";

    rep.cross_check_ok = true;
    if (rep.cohomology && rep.cohomology->h2_dimension.has_value() &&
        rep.k0_dimension.has_value())
        rep.cross_check_ok = (*rep.cohomology->h2_dimension == *rep.k0_dimension);
    return rep;
}

} // namespace twk
