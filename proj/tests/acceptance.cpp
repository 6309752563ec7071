// Acceptance suite: one pass/fail line per criterion, exit nonzero on
// any failure.  Tolerances are pinned in code; symbolic checks are
// exact, numeric oracle checks use 1e-8 at 100 points.

#include "twk/cli.hpp"
#include "twk/oracle.hpp"
#include "twk/report_json.hpp"
#include "twk/su2.hpp"
#include "twk/su3.hpp"
#include "twk/symfunc.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace twk;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

RingElement su2el(const std::string& s) { return {Ring::SU2, parse_poly(VarSet::Rho, s)}; }

// ---- criterion 1: classical SU(2) family -------------------------------

void criterion1(Check& c) {
    for (int k = 1; k <= 10; ++k) {
        SU2Report rep = k_groups_su2(parse_functor("ext_top^" + std::to_string(k)));
        RingElement rho_km1 = irreducible_character(k - 1);
        c.require(rep.g2 == rho_km1, "g2 != rho_{k-1} at k=" + std::to_string(k));
        c.require(rep.g2_saturated == rho_km1 || k == 1,
                  "saturation should be trivial at k=" + std::to_string(k));
        c.require(rep.f_rho == su2el("1"), "F(rho) != 1 at k=" + std::to_string(k));
        c.require(rep.inverted_integer == 1, "N != 1 at k=" + std::to_string(k));
        std::string expect =
            k == 1 ? "0" : "Z[rho]/(" + to_string(rho_km1.poly) + ")";
        c.require(rep.k1_presentation == expect,
                  "presentation mismatch at k=" + std::to_string(k));
    }
}

// ---- criterion 2: full exterior factorizations --------------------------

void criterion2(Check& c) {
    auto P = [](const std::string& s) { return parse_poly(VarSet::Rho, s); };
    std::vector<std::pair<int, LaurentPoly>> cases = {
        {3, P("rho + 2") * P("rho + 1")},
        {4, P("rho") * P("rho + 2") * P("rho + 2")},
        {5, P("rho + 2") * P("rho + 2") * P("rho^2 + rho - 1")},
        {6, P("rho + 2") * P("rho + 2") * P("rho + 2") * P("rho^2 - 1")},
    };
    for (const auto& [k, expected] : cases) {
        auto [g1, g2] = g_coefficients(parse_functor("ext_full^" + std::to_string(k)));
        c.require(g2.poly == expected, "g2 mismatch at k=" + std::to_string(k));
    }
}

// ---- criterion 3: Yang-Lee ----------------------------------------------

void criterion3(Check& c) {
    SU2Report rep = k_groups_su2(parse_functor("ext_full^5"));
    c.require(rep.rank == 2, "rank != 2");
    c.require(rep.inverted_integer == 1, "N != 1");
    c.require(rep.g2_saturated == su2el("rho^2 + rho - 1"), "g2_saturated mismatch");
    // x = [-rho]: x^2 - x - 1 == 0 mod g2_saturated, as exact divisibility
    UniPoly m = UniPoly::from_laurent(rep.g2_saturated.poly);
    UniPoly x_rel = UniPoly::from_laurent(parse_poly(VarSet::Rho, "rho^2 + rho - 1"));
    c.require(x_rel.divmod(m).second.is_zero(), "x^2 = x + 1 fails");
    auto cert = verify_unit(su2el("rho + 2"), rep);
    c.require(cert.has_value(), "rho + 2 not invertible");
    if (cert) {
        c.require(cert->inverse == su2el("1 - rho"), "(rho+2)^-1 != 1 - rho");
        LaurentPoly resid = parse_poly(VarSet::Rho, "rho + 2") * cert->inverse.poly -
                            parse_poly(VarSet::Rho, "1") -
                            cert->witness.poly * rep.g2_saturated.poly;
        c.require(resid.is_zero(), "inverse certificate not exact");
    }
}

// ---- criterion 4: classical closed forms on SU(3) ------------------------

void criterion4(Check& c) {
    for (int m = 1; m <= 10; ++m) {
        KoszulRoute kr = koszul_route(parse_functor("ext_top^" + std::to_string(m)));
        c.require(kr.psi_plus.poly == -h_complete(m - 2).poly,
                  "psi(q+) != -h_{m-2} at m=" + std::to_string(m));
        c.require(kr.psi_minus == h_complete(m - 1),
                  "psi(q-) != h_{m-1} at m=" + std::to_string(m));
    }
}

// ---- criterion 5: full twist closed forms and Sym expansions -------------

void criterion5(Check& c) {
    for (int m = 1; m <= 8; ++m) {
        SU3Report rep = k_groups_su3(parse_functor("ext_full^" + std::to_string(m)));
        LaurentPoly plus = LaurentPoly::zero(VarSet::S1S2);
        for (int l = 2; l <= m; ++l)
            plus = plus + h_complete(l - 2).poly *
                              Rat(binomial(static_cast<unsigned>(m), static_cast<unsigned>(l)));
        LaurentPoly minus = LaurentPoly::zero(VarSet::S1S2);
        for (int l = 1; l <= m; ++l)
            minus = minus + h_complete(l - 1).poly *
                                Rat(binomial(static_cast<unsigned>(m), static_cast<unsigned>(l)));
        c.require(rep.koszul.psi_plus.poly == -plus,
                  "psi(q+) binomial sum fails at m=" + std::to_string(m));
        c.require(rep.koszul.psi_minus.poly == minus,
                  "psi(q-) binomial sum fails at m=" + std::to_string(m));
        // sigma_i as characters: h-basis coefficients are the binomials
        c.require(rep.sigma1_h.has_value() && rep.sigma2_h.has_value(),
                  "sigma expansions missing at m=" + std::to_string(m));
        if (rep.sigma1_h && rep.sigma2_h) {
            std::vector<Rat> want1, want2;
            for (int l = 2; l <= m; ++l)
                want1.push_back(Rat(binomial(static_cast<unsigned>(m), static_cast<unsigned>(l))));
            for (int l = 1; l <= m; ++l)
                want2.push_back(Rat(binomial(static_cast<unsigned>(m), static_cast<unsigned>(l))));
            auto trim = [](std::vector<Rat> v) {
                while (!v.empty() && v.back() == 0) v.pop_back();
                return v;
            };
            c.require(trim(*rep.sigma1_h) == trim(want1),
                      "sigma1 expansion mismatch at m=" + std::to_string(m));
            c.require(trim(*rep.sigma2_h) == trim(want2),
                      "sigma2 expansion mismatch at m=" + std::to_string(m));
        }
    }
}

// ---- criterion 6: complex consistency over randomized functors -----------

std::vector<std::string> random_functor_specs(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> specs;
    while (static_cast<int>(specs.size()) < count) {
        std::ostringstream os;
        int nfactors = 1 + static_cast<int>(rng() % 2);
        for (int f = 0; f < nfactors; ++f) {
            if (f) os << " * ";
            switch (rng() % 3) {
                case 0: os << "ext_top^" << 1 + rng() % 3; break;
                case 1: os << "ext_full^" << 1 + rng() % 2; break;
                default: os << "fw(" << 1 + rng() % 3 << ")"; break;
            }
        }
        specs.push_back(os.str());
    }
    return specs;
}

void criterion6(Check& c) {
    for (const std::string& spec : random_functor_specs(20, 2026)) {
        ExponentialFunctor F = parse_functor(spec);
        try {
            SU3ChainComplex cx = build_differentials(F);
            c.require(cx.ba_zero, "B*A != 0 for " + spec);
            BredonReport br = bredon_identities(F);
            c.require(br.all_ok, "bredon identities fail for " + spec);
        } catch (const Error& e) {
            c.require(false, "exception for " + spec + ": " + e.what());
        }
    }
}

// ---- criterion 7: rational vanishing and cross-route dimensions ----------

void criterion7(Check& c) {
    std::vector<std::string> specs = {"ext_full",  "ext_full^2", "ext_full^3",
                                      "ext_top^2", "ext_top^3",  "ext_top^4"};
    for (const std::string& spec : specs) {
        ExponentialFunctor F = parse_functor(spec);
        SU3Report rep = k_groups_su3(F, SU3Route::Both);
        c.require(rep.cohomology.has_value(), "complex route missing for " + spec);
        if (!rep.cohomology) continue;
        c.require(rep.cohomology->h0_zero, "H0 != 0 for " + spec);
        c.require(rep.cohomology->h1_zero, "H1 != 0 for " + spec);
        c.require(rep.cohomology->h2_dimension.has_value(),
                  "dim H2 not finite for " + spec);
        c.require(rep.k0_dimension.has_value(), "koszul dim not finite for " + spec);
        if (rep.cohomology->h2_dimension && rep.k0_dimension)
            c.require(*rep.cohomology->h2_dimension == *rep.k0_dimension,
                      "route dimensions disagree for " + spec);
    }
}

// ---- criterion 8: regular sequence certificates ---------------------------

void criterion8(Check& c) {
    for (const char* spec : {"ext_top", "ext_full", "ext_full^2", "fw(2)"}) {
        RegSeqReport rep = regular_sequence_check(parse_functor(spec));
        c.require(rep.hypothesis_met, std::string("hypothesis not met for ") + spec);
        c.require(rep.certified, std::string("not certified for ") + spec + " " + rep.witness);
    }
}

// ---- criterion 9: oracle falsification suite ------------------------------

void criterion9(Check& c) {
    struct Item {
        Group group;
        RingElement lhs, rhs;
        std::string name;
    };
    std::vector<Item> items;
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0);

    // identities behind criteria 1-3
    for (int k : {1, 4, 7, 10}) {
        ExponentialFunctor F = parse_functor("ext_top^" + std::to_string(k));
        auto [g1, g2] = g_coefficients(F);
        items.push_back({Group::SU2,
                         {Ring::TorusSU2, F.character},
                         {Ring::TorusSU2, restrict_hom(g1, Hom::SU2toTorus).poly +
                                              t * restrict_hom(g2, Hom::SU2toTorus).poly},
                         "decomposition ext_top^" + std::to_string(k)});
        items.push_back({Group::SU2, g2, irreducible_character(k - 1),
                         "g2 = rho_{k-1} at k=" + std::to_string(k)});
    }
    for (int k : {3, 4, 5, 6}) {
        ExponentialFunctor F = parse_functor("ext_full^" + std::to_string(k));
        auto [g1, g2] = g_coefficients(F);
        items.push_back({Group::SU2,
                         {Ring::TorusSU2, F.character},
                         {Ring::TorusSU2, restrict_hom(g1, Hom::SU2toTorus).poly +
                                              t * restrict_hom(g2, Hom::SU2toTorus).poly},
                         "decomposition ext_full^" + std::to_string(k)});
    }
    {
        SU2Report yl = k_groups_su2(parse_functor("ext_full^5"));
        items.push_back({Group::SU2,
                         {Ring::SU2, yl.g2_saturated.poly * yl.removed_cofactor.poly *
                                         yl.unit_scalar},
                         yl.g2,
                         "Yang-Lee saturation factorization"});
    }
    // identities behind criteria 4-5 (psi closed forms, through the torus)
    LaurentPoly v = vandermonde().value.poly;
    for (int m : {1, 3, 6, 10}) {
        KoszulRoute kr = koszul_route(parse_functor("ext_top^" + std::to_string(m)));
        items.push_back({Group::SU3,
                         {Ring::TorusSU3, restrict_hom(h_complete(m - 2), Hom::SU3toTorus).poly *
                                              -v},
                         kr.q_plus,
                         "classical psi(q+) at m=" + std::to_string(m)});
        items.push_back({Group::SU3,
                         {Ring::TorusSU3,
                          restrict_hom(h_complete(m - 1), Hom::SU3toTorus).poly * v},
                         kr.q_minus,
                         "classical psi(q-) at m=" + std::to_string(m)});
    }
    for (int m : {2, 5, 8}) {
        KoszulRoute kr = koszul_route(parse_functor("ext_full^" + std::to_string(m)));
        items.push_back({Group::SU3,
                         {Ring::TorusSU3, restrict_hom(kr.psi_plus, Hom::SU3toTorus).poly * v},
                         kr.q_plus,
                         "full twist psi(q+)*Delta = q+ at m=" + std::to_string(m)});
    }
    // identities behind criteria 6-8: bredon factors and the theta cocycle
    for (const char* spec : {"ext_full^2", "fw(2)"}) {
        ExponentialFunctor F = parse_functor(spec);
        DerivedElements de = derived_elements(F);
        LaurentPoly f1 = f_of_lines(F, {torus_coordinate(1)});
        LaurentPoly f3 = f_of_lines(F, {torus_coordinate(3)});
        items.push_back({Group::SU3, restrict_hom(de.lambda_F, Hom::U2toTorus01),
                         {Ring::TorusSU3, f1}, std::string("bredon r01 for ") + spec});
        items.push_back({Group::SU3, restrict_hom(de.mu_F, Hom::U2toTorus12),
                         {Ring::TorusSU3, f1 * f3}, std::string("bredon r12 for ") + spec});
        items.push_back({Group::SU3, restrict_hom(de.lambda_F, Hom::U2toTorus02),
                         {Ring::TorusSU3, f3}, std::string("bredon r02 for ") + spec});
    }

    ExponentialFunctor Fsample2 = parse_functor("ext_full");
    auto pts2 = sample_points(Group::SU2, Fsample2, 100, 0);
    auto pts3 = sample_points(Group::SU3, Fsample2, 100, 0);
    for (const Item& it : items) {
        const auto& pts = it.group == Group::SU2 ? pts2 : pts3;
        IdentityReport direct = check_identity(it.lhs, it.rhs, pts);
        c.require(direct.pass && direct.max_abs_err < 1e-8, "oracle fails: " + it.name);
        IdentityReport corrupted = check_perturbed(it.lhs, it.rhs, pts);
        c.require(corrupted.points_failed >= 99,
                  "perturbation not detected: " + it.name);
    }
}

// ---- criterion 10: orientation invariance ---------------------------------

void criterion10(Check& c) {
    for (const char* spec : {"ext_top", "ext_top^3", "ext_full", "ext_full^2", "fw(2)"}) {
        ExponentialFunctor F = parse_functor(spec);
        KoszulRoute fwd = koszul_route(F, false);
        KoszulRoute rev = koszul_route(F, true);
        gb::BiPoly frho = gb::from_laurent(f_rho_in(F, Ring::SU3).poly);
        gb::Ideal a = gb::saturate(
            gb::Ideal({gb::from_laurent(fwd.chi1.poly), gb::from_laurent(fwd.chi2.poly)}), frho);
        gb::Ideal b = gb::saturate(
            gb::Ideal({gb::from_laurent(rev.chi1.poly), gb::from_laurent(rev.chi2.poly)}), frho);
        c.require(a.equals(b), std::string("saturated ideals differ for ") + spec);
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> fn;
    };
    std::vector<Criterion> criteria = {
        {"SU(2) classical family k=1..10", criterion1},
        {"SU(2) full-exterior factorizations k=3..6", criterion2},
        {"Yang-Lee reproduction (ext_full^5)", criterion3},
        {"SU(3) classical closed forms m=1..10", criterion4},
        {"SU(3) full-twist closed forms m=1..8", criterion5},
        {"complex consistency for 20 randomized functors", criterion6},
        {"rational vanishing and cross-route dimensions", criterion7},
        {"regular-sequence certification", criterion8},
        {"oracle falsification suite", criterion9},
        {"orientation-remark invariance", criterion10},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        auto stop = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(stop - start).count();
        std::ostringstream line;
        line << (c.ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": "
             << criteria[i].name << " (" << secs << " s)";
        if (!c.ok) line << " -- " << c.detail.str();
        std::cout << line.str() << std::endl;
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
