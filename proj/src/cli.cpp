#include "twk/cli.hpp"

#include "twk/groebner.hpp"
#include "twk/report_json.hpp"
#include "twk/symfunc.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace twk {

namespace {

void apply_step_limit_env() {
    if (const char* env = std::getenv("TWK_STEP_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) gb::set_step_limit(v);
    }
}

std::string tex_poly(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "rho") == 0) {
            out += "\\rho";
            i += 3;
        } else if (s.compare(i, 2, "s1") == 0 || s.compare(i, 2, "s2") == 0 ||
                   s.compare(i, 2, "t1") == 0 || s.compare(i, 2, "t2") == 0) {
            out += s[i];
            out += '_';
            out += s[i + 1];
            i += 2;
        } else if (s[i] == '*') {
            out += "\\,";
            ++i;
        } else if (s[i] == '^') {
            out += "^{";
            ++i;
            if (i < s.size() && s[i] == '-') {
                out += s[i];
                ++i;
            }
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                out += s[i];
                ++i;
            }
            out += "}";
        } else {
            out += s[i];
            ++i;
        }
    }
    return out;
}

std::string rat_text(const Rat& r) {
    std::ostringstream os;
    if (is_integer(r))
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

std::string irr_basis_tex(const std::vector<Rat>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t l = 0; l < coeffs.size(); ++l) {
        if (coeffs[l] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeffs[l] != 1 || l == 0) os << rat_text(coeffs[l]);
        if (l > 0) os << "\\rho_{" << l << "}";
    }
    if (first) os << "0";
    return os.str();
}

std::string sym_basis_tex(const std::vector<Rat>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeffs[k] != 1) os << rat_text(coeffs[k]) << "\\,";
        os << "\\mathrm{Sym}^{" << k << "}(\\rho)";
    }
    if (first) os << "0";
    return os.str();
}

void emit_su2_text(const SU2Report& rep, std::ostream& out) {
    out << "group: SU(2)\n";
    out << "functor: " << rep.functor_spec << "  character F(t) = " << to_string(rep.F.character)
        << (rep.F.is_preset ? "" : "  [formal character]") << "\n";
    out << "hypothesis F(C) != F(C*): " << (rep.hypothesis.su2_ok ? "holds" : "FAILS") << "\n";
    out << "g1 = " << to_string(rep.g1.poly) << "\n";
    out << "g2 = " << to_string(rep.g2.poly) << "\n";
    if (!rep.theorem_applicable) {
        out << "theorem inapplicable (g2 = 0): no K-theory presentation\n";
        return;
    }
    out << "F(rho) = " << to_string(rep.f_rho.poly) << "\n";
    out << "g2 saturated at F(rho): " << to_string(rep.g2_saturated.poly)
        << "   removed cofactor: " << to_string(rep.removed_cofactor.poly)
        << "   unit: " << rat_text(rep.unit_scalar) << "\n";
    out << "K0 = 0\n";
    out << "K1 rank = " << rep.rank << ", inverted integer N = " << rep.inverted_integer << "\n";
    out << "K1 = " << rep.k1_presentation << "\n";
}

void emit_su2_tex(const SU2Report& rep, std::ostream& out) {
    out << "\\begin{tabular}{llll}\n";
    out << "functor & $g_2$ (irreducible basis) & $g_2$ & $K_1$ \\\\\n\\hline\n";
    out << "\\verb|" << rep.functor_spec << "| & $" << irr_basis_tex(rep.g2_irr) << "$ & $"
        << tex_poly(to_string(rep.g2.poly)) << "$ & $"
        << (rep.theorem_applicable ? tex_poly(rep.k1_presentation) : std::string("-"))
        << "$ \\\\\n";
    out << "\\end{tabular}\n";
}

void emit_su3_text(const SU3Report& rep, std::ostream& out) {
    out << "group: SU(3), rational coefficients\n";
    out << "functor: " << rep.functor_spec << "  character F(t) = " << to_string(rep.F.character)
        << (rep.F.is_preset ? "" : "  [formal character]") << "\n";
    out << "hypothesis deg F > 0: " << (rep.hypothesis.su3_ok ? "holds" : "FAILS") << "\n";
    out << "chi1 = " << to_string(rep.koszul.chi1.poly) << "\n";
    out << "chi2 = " << to_string(rep.koszul.chi2.poly) << "\n";
    out << "F(rho) = " << to_string(rep.f_rho.poly) << "\n";
    out << "J_F saturated, reduced basis:";
    if (rep.j_f_saturated.empty()) out << " (zero ideal)";
    for (const std::string& g : rep.j_f_saturated) out << "  " << g;
    out << "\n";
    out << "regular sequence certified: " << (rep.regseq.certified ? "yes" : "no") << "\n";
    if (rep.k0_dimension)
        out << "K0 tensor Q: dimension " << *rep.k0_dimension << "\n";
    else
        out << "K0 tensor Q: infinite-dimensional\n";
    out << "K1 tensor Q = 0: " << (rep.k1_vanishes ? "certified" : "not certified") << " ("
        << rep.k1_certificate << ")\n";
    if (rep.cohomology) {
        out << "complex route: H0 zero " << (rep.cohomology->h0_zero ? "yes" : "NO") << ", H1 zero "
            << (rep.cohomology->h1_zero ? "yes" : "NO") << ", dim H2 ";
        if (rep.cohomology->h2_dimension)
            out << *rep.cohomology->h2_dimension;
        else
            out << "infinite";
        out << ", cross-check " << (rep.cross_check_ok ? "agrees" : "DISAGREES") << "\n";
    }
}

void emit_su3_tex(const SU3Report& rep, std::ostream& out) {
    out << "\\begin{tabular}{llll}\n";
    out << "functor & $\\sigma_1$ & $\\sigma_2$ & $\\dim_{\\mathbb{Q}} K_0$ \\\\\n\\hline\n";
    out << "\\verb|" << rep.functor_spec << "| & $";
    if (rep.sigma1_h)
        out << sym_basis_tex(*rep.sigma1_h);
    else
        out << tex_poly(to_string(rep.koszul.chi1.poly));
    out << "$ & $";
    if (rep.sigma2_h)
        out << sym_basis_tex(*rep.sigma2_h);
    else
        out << tex_poly(to_string(rep.koszul.chi2.poly));
    out << "$ & $";
    if (rep.k0_dimension)
        out << *rep.k0_dimension;
    else
        out << "\\infty";
    out << "$ \\\\\n\\end{tabular}\n";
}

struct VerifyItem {
    std::string name;
    RingElement lhs, rhs;
    Edge edge = Edge::E01;
};

std::vector<VerifyItem> su2_verify_items(const ExponentialFunctor& F) {
    std::vector<VerifyItem> items;
    auto [g1, g2] = g_coefficients(F);
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0, F.character.domain());
    RingElement lhs = {Ring::TorusSU2, F.character};
    RingElement rhs = {Ring::TorusSU2, restrict_hom(g1, Hom::SU2toTorus).poly +
                                           t * restrict_hom(g2, Hom::SU2toTorus).poly};
    items.push_back({"su2-decomposition F = g1 + t g2", lhs, rhs});
    RingElement frho_t = f_rho_in(F, Ring::TorusSU2);
    RingElement frho = f_rho_in(F, Ring::SU2);
    items.push_back(
        {"su2-f-rho restriction", frho_t, restrict_hom(frho, Hom::SU2toTorus)});
    MVMatrix mv = mv_matrix(F);
    items.push_back({"su2-mv-determinant", mv.determinant.numerator,
                     {Ring::SU2, -g2.poly}});
    SU2Report rep = k_groups_su2(F);
    if (rep.theorem_applicable) {
        LaurentPoly prod = rep.g2_saturated.poly * rep.removed_cofactor.poly * rep.unit_scalar;
        items.push_back({"su2-saturation-factorization", rep.g2, {Ring::SU2, prod}});
    }
    return items;
}

std::vector<VerifyItem> su3_verify_items(const ExponentialFunctor& F) {
    std::vector<VerifyItem> items;
    KoszulRoute kr = koszul_route(F);
    DerivedElements de = derived_elements(F);
    LaurentPoly zero_t = LaurentPoly::zero(VarSet::T2, F.character.domain());

    LaurentPoly f1 = f_of_lines(F, {torus_coordinate(1)});
    LaurentPoly f2 = f_of_lines(F, {torus_coordinate(2)});
    LaurentPoly f3 = f_of_lines(F, {torus_coordinate(3)});
    items.push_back({"su3-theta-cocycle",
                     {Ring::TorusSU3, (f1 - f2) + (f2 - f3) + (f3 - f1)},
                     {Ring::TorusSU3, zero_t}});

    std::vector<RowSeed> rows1 = {{F.character}, {parse_poly(VarSet::T, "t")},
                                  {parse_poly(VarSet::T, "1")}};
    items.push_back({"su3-q-plus-determinant", kr.q_plus,
                     {Ring::TorusSU3, -galois_determinant(rows1).poly}});
    LaurentPoly v = vandermonde().value.poly;
    items.push_back({"su3-chi1-vandermonde",
                     {Ring::TorusSU3, restrict_hom(kr.chi1, Hom::SU3toTorus).poly * v},
                     {Ring::TorusSU3, -kr.q_plus.poly}});
    items.push_back({"su3-chi2-vandermonde",
                     {Ring::TorusSU3, restrict_hom(kr.chi2, Hom::SU3toTorus).poly * v},
                     kr.q_minus});
    items.push_back({"su3-bredon-r01", restrict_hom(de.lambda_F, Hom::U2toTorus01),
                     {Ring::TorusSU3, f1}});
    items.push_back({"su3-bredon-r12", restrict_hom(de.mu_F, Hom::U2toTorus12),
                     {Ring::TorusSU3, f1 * f3}});
    items.push_back({"su3-bredon-r02", restrict_hom(de.lambda_F, Hom::U2toTorus02),
                     {Ring::TorusSU3, f3}});
    items.push_back({"su3-unit-certificate",
                     {Ring::U2, de.lambda_F.poly * de.mu_F.poly},
                     f_rho_in(F, Ring::U2)});
    return items;
}

int run_verify(const RunConfig& cfg, const ExponentialFunctor& F, std::ostream& out) {
    std::vector<VerifyItem> items =
        cfg.group == Group::SU2 ? su2_verify_items(F) : su3_verify_items(F);
    std::vector<TorusPoint> points = sample_points(cfg.group, F, cfg.oracle_points, cfg.seed);
    bool all_ok = true;
    for (const VerifyItem& it : items) {
        IdentityReport direct = check_identity(it.lhs, it.rhs, points, it.edge);
        IdentityReport corrupted = check_perturbed(it.lhs, it.rhs, points, it.edge);
        double fail_frac =
            corrupted.points_checked
                ? double(corrupted.points_failed) / double(corrupted.points_checked)
                : 0.0;
        bool ok = direct.pass && fail_frac >= 0.99;
        all_ok = all_ok && ok;
        out << (ok ? "[ok]   " : "[FAIL] ") << it.name << "  max_err=" << direct.max_abs_err
            << "  perturbed_fail_fraction=" << fail_frac << "\n";
    }
    return all_ok ? kExitOk : kExitInternal;
}

int run_single(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ExponentialFunctor F;
    try {
        F = parse_functor(cfg.functor);
    } catch (const Error& e) {
        err << "bad functor spec: " << e.what() << "\n";
        return kExitUsage;
    }

    if (cfg.mode == Mode::Verify) return run_verify(cfg, F, out);

    if (cfg.group == Group::SU2) {
        SU2Report rep = k_groups_su2(F);
        switch (cfg.emit) {
            case EmitFormat::Json: out << su2_report_to_json(rep).dump(2) << "\n"; break;
            case EmitFormat::Tex: emit_su2_tex(rep, out); break;
            case EmitFormat::Text: emit_su2_text(rep, out); break;
        }
        if (!rep.theorem_applicable) {
            err << "hypothesis failure: F(C) and F(C*) are isomorphic T-representations "
                   "(g2 = 0); the SU(2) theorem does not apply\n";
            return kExitHypothesis;
        }
        return kExitOk;
    }

    if (cfg.mode == Mode::ExportMatrices) {
        SU3ChainComplex cx = build_differentials(F);
        out << matrices_to_json(cx).dump(2) << "\n";
        return kExitOk;
    }

    SU3Report rep = k_groups_su3(F, cfg.route);
    switch (cfg.emit) {
        case EmitFormat::Json: out << su3_report_to_json(rep).dump(2) << "\n"; break;
        case EmitFormat::Tex: emit_su3_tex(rep, out); break;
        case EmitFormat::Text: emit_su3_text(rep, out); break;
    }
    if (!rep.hypothesis.su3_ok) {
        err << "hypothesis failure: deg F(t) = 0; the SU(3) theorem does not apply\n";
        return kExitHypothesis;
    }
    if (!rep.cross_check_ok) {
        err << "internal error: the two routes disagree\n";
        return kExitInternal;
    }
    return kExitOk;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

int run_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.batch_path);
    if (!in) {
        err << "cannot open batch file: " << cfg.batch_path << "\n";
        return kExitUsage;
    }
    out << "# twk-csv v1\n";
    out << "functor,group,status,g2_or_chi1,g2_saturated_or_chi2,rank_or_dim,inverted_integer\n";
    std::string line;
    bool any_error = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string group = cfg.group == Group::SU2 ? "su2" : "su3";
        try {
            ExponentialFunctor F = parse_functor(line);
            if (cfg.group == Group::SU2) {
                SU2Report rep = k_groups_su2(F);
                if (!rep.theorem_applicable) {
                    out << csv_quote(line) << ",su2,hypothesis-failed,"
                        << csv_quote(to_string(rep.g2.poly)) << ",,,\n";
                    continue;
                }
                out << csv_quote(line) << ",su2,ok," << csv_quote(to_string(rep.g2.poly)) << ","
                    << csv_quote(to_string(rep.g2_saturated.poly)) << "," << rep.rank << ","
                    << rep.inverted_integer << "\n";
            } else {
                SU3Report rep = k_groups_su3(F, cfg.route);
                std::string status = rep.hypothesis.su3_ok ? "ok" : "hypothesis-failed";
                out << csv_quote(line) << ",su3," << status << ","
                    << csv_quote(to_string(rep.koszul.chi1.poly)) << ","
                    << csv_quote(to_string(rep.koszul.chi2.poly)) << ",";
                if (rep.k0_dimension)
                    out << *rep.k0_dimension;
                else
                    out << "infinite";
                out << ",\n";
            }
        } catch (const Error& e) {
            out << csv_quote(line) << "," << group << ",error,,,," << "\n";
            err << "entry '" << line << "': " << e.what() << "\n";
            any_error = true;
        }
    }
    return any_error ? kExitInternal : kExitOk;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    apply_step_limit_env();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) {
            err << "cannot open output path: " << cfg.output_path << "\n";
            return kExitUsage;
        }
        sink = &file;
    }
    try {
        if (!cfg.batch_path.empty()) return run_batch(cfg, *sink, err);
        return run_single(cfg, *sink, err);
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace twk
