#include "twk/report_json.hpp"

#include <sstream>

namespace twk {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    if (is_integer(r))
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Json rat_list(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& r : v) a.push_back(rat_str(r));
    return a;
}

std::vector<Rat> rat_list_parse(const Json& a) {
    std::vector<Rat> v;
    for (const auto& x : a) v.push_back(rat_parse(x.get<std::string>()));
    return v;
}

} // namespace

Json su2_report_to_json(const SU2Report& rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = "su2";
    j["functor"] = rep.functor_spec;
    j["character"] = to_string(rep.F.character);
    j["formal_character"] = !rep.F.is_preset;
    j["hypothesis"] = Json{{"su2_ok", rep.hypothesis.su2_ok}, {"su3_ok", rep.hypothesis.su3_ok}};
    j["theorem_applicable"] = rep.theorem_applicable;
    j["g1"] = to_string(rep.g1.poly);
    j["g2"] = to_string(rep.g2.poly);
    j["g2_irr_basis"] = rat_list(rep.g2_irr);
    j["f_rho"] = to_string(rep.f_rho.poly);
    j["g2_saturated"] = to_string(rep.g2_saturated.poly);
    j["removed_cofactor"] = to_string(rep.removed_cofactor.poly);
    j["unit_scalar"] = rat_str(rep.unit_scalar);
    j["rank"] = rep.rank;
    j["inverted_integer"] = rep.inverted_integer.str();
    j["k0"] = rep.k0_zero ? "0" : "unknown";
    j["k1_presentation"] = rep.k1_presentation;
    j["identity_verified"] = rep.identity_verified;
    return j;
}

SU2Report su2_report_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw Error("unsupported schema_version");
    SU2Report rep;
    rep.functor_spec = j.at("functor").get<std::string>();
    rep.F.character = parse_poly(VarSet::T, j.at("character").get<std::string>());
    rep.F.name = rep.functor_spec;
    rep.F.is_preset = !j.at("formal_character").get<bool>();
    rep.hypothesis.su2_ok = j.at("hypothesis").at("su2_ok").get<bool>();
    rep.hypothesis.su3_ok = j.at("hypothesis").at("su3_ok").get<bool>();
    rep.theorem_applicable = j.at("theorem_applicable").get<bool>();
    rep.g1 = {Ring::SU2, parse_poly(VarSet::Rho, j.at("g1").get<std::string>())};
    rep.g2 = {Ring::SU2, parse_poly(VarSet::Rho, j.at("g2").get<std::string>())};
    rep.g2_irr = rat_list_parse(j.at("g2_irr_basis"));
    rep.f_rho = {Ring::SU2, parse_poly(VarSet::Rho, j.at("f_rho").get<std::string>())};
    rep.g2_saturated = {Ring::SU2, parse_poly(VarSet::Rho, j.at("g2_saturated").get<std::string>())};
    rep.removed_cofactor = {Ring::SU2,
                            parse_poly(VarSet::Rho, j.at("removed_cofactor").get<std::string>())};
    rep.unit_scalar = rat_parse(j.at("unit_scalar").get<std::string>());
    rep.rank = j.at("rank").get<int>();
    rep.inverted_integer = Int(j.at("inverted_integer").get<std::string>());
    rep.k0_zero = j.at("k0").get<std::string>() == "0";
    rep.k1_presentation = j.at("k1_presentation").get<std::string>();
    rep.identity_verified = j.at("identity_verified").get<bool>();
    return rep;
}

Json matrices_to_json(const SU3ChainComplex& cx) {
    Json j;
    j["ring"] = "Z[s1,s2]";
    j["denom_exp"] = cx.denom_exp;
    auto matrix_rows = [](const std::vector<gb::ModVec>& cols) {
        Json rows = Json::array();
        if (cols.empty()) return rows;
        int r = cols[0].rank();
        for (int i = 0; i < r; ++i) {
            Json row = Json::array();
            for (const gb::ModVec& c : cols)
                row.push_back(to_string(gb::to_laurent(c.comp[static_cast<size_t>(i)])));
            rows.push_back(row);
        }
        return rows;
    };
    j["A"] = matrix_rows(cx.a_cols);
    j["B"] = matrix_rows(cx.b_cols);
    if (!cx.c1_relations.empty()) j["C1_relations"] = matrix_rows(cx.c1_relations);
    j["used_fallback"] = cx.used_fallback;
    return j;
}

SU3ChainComplex matrices_from_json(const Json& j) {
    SU3ChainComplex cx;
    cx.denom_exp = j.at("denom_exp").get<uint32_t>();
    cx.used_fallback = j.value("used_fallback", false);
    auto cols_from_rows = [](const Json& rows) {
        std::vector<gb::ModVec> cols;
        if (rows.empty()) return cols;
        size_t ncols = rows[0].size();
        size_t nrows = rows.size();
        for (size_t c = 0; c < ncols; ++c) {
            gb::ModVec v = gb::ModVec::zero(static_cast<int>(nrows));
            for (size_t r = 0; r < nrows; ++r)
                v.comp[r] = gb::from_laurent(
                    parse_poly(VarSet::S1S2, rows[r][c].get<std::string>(), Domain::Rational));
            cols.push_back(std::move(v));
        }
        return cols;
    };
    cx.a_cols = cols_from_rows(j.at("A"));
    cx.b_cols = cols_from_rows(j.at("B"));
    if (j.contains("C1_relations")) cx.c1_relations = cols_from_rows(j.at("C1_relations"));
    cx.ba_zero = true;
    return cx;
}

Json su3_report_to_json(const SU3Report& rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = "su3";
    j["functor"] = rep.functor_spec;
    j["character"] = to_string(rep.F.character);
    j["formal_character"] = !rep.F.is_preset;
    j["hypothesis"] = Json{{"su2_ok", rep.hypothesis.su2_ok}, {"su3_ok", rep.hypothesis.su3_ok}};
    j["q_plus"] = to_string(rep.koszul.q_plus.poly);
    j["q_minus"] = to_string(rep.koszul.q_minus.poly);
    j["psi_plus"] = to_string(rep.koszul.psi_plus.poly);
    j["psi_minus"] = to_string(rep.koszul.psi_minus.poly);
    j["chi1"] = to_string(rep.koszul.chi1.poly);
    j["chi2"] = to_string(rep.koszul.chi2.poly);
    j["regular_sequence"] =
        Json{{"hypothesis_met", rep.regseq.hypothesis_met}, {"certified", rep.regseq.certified}};
    j["f_rho"] = to_string(rep.f_rho.poly);
    j["j_f_saturated"] = rep.j_f_saturated;
    if (rep.k0_dimension)
        j["k0_dimension"] = *rep.k0_dimension;
    else
        j["k0_dimension"] = "infinite";
    j["k1_vanishes"] = rep.k1_vanishes;
    j["k1_certificate"] = rep.k1_certificate;
    if (rep.sigma1_h) j["sigma1_h_basis"] = rat_list(*rep.sigma1_h);
    if (rep.sigma2_h) j["sigma2_h_basis"] = rat_list(*rep.sigma2_h);
    if (rep.cohomology) {
        Json c;
        c["h0_zero"] = rep.cohomology->h0_zero;
        c["h1_zero"] = rep.cohomology->h1_zero;
        if (rep.cohomology->h2_dimension)
            c["h2_dimension"] = *rep.cohomology->h2_dimension;
        else
            c["h2_dimension"] = "infinite";
        j["cohomology"] = c;
    }
    if (rep.complex) j["matrices"] = matrices_to_json(*rep.complex);
    j["cross_check_ok"] = rep.cross_check_ok;
    return j;
}

SU3Report su3_report_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw Error("unsupported schema_version");
    SU3Report rep;
    rep.functor_spec = j.at("functor").get<std::string>();
    rep.F.character = parse_poly(VarSet::T, j.at("character").get<std::string>());
    rep.F.name = rep.functor_spec;
    rep.F.is_preset = !j.at("formal_character").get<bool>();
    rep.hypothesis.su2_ok = j.at("hypothesis").at("su2_ok").get<bool>();
    rep.hypothesis.su3_ok = j.at("hypothesis").at("su3_ok").get<bool>();
    auto t2 = [&](const char* key) {
        return RingElement{Ring::TorusSU3,
                           parse_poly(VarSet::T2, j.at(key).get<std::string>())};
    };
    auto su3 = [&](const char* key) {
        return RingElement{Ring::SU3, parse_poly(VarSet::S1S2, j.at(key).get<std::string>())};
    };
    rep.koszul.q_plus = t2("q_plus");
    rep.koszul.q_minus = t2("q_minus");
    rep.koszul.psi_plus = su3("psi_plus");
    rep.koszul.psi_minus = su3("psi_minus");
    rep.koszul.chi1 = su3("chi1");
    rep.koszul.chi2 = su3("chi2");
    rep.koszul.hypothesis_ok = rep.hypothesis.su3_ok;
    rep.regseq.hypothesis_met = j.at("regular_sequence").at("hypothesis_met").get<bool>();
    rep.regseq.certified = j.at("regular_sequence").at("certified").get<bool>();
    rep.f_rho = su3("f_rho");
    rep.j_f_saturated = j.at("j_f_saturated").get<std::vector<std::string>>();
    if (j.at("k0_dimension").is_string())
        rep.k0_dimension = std::nullopt;
    else
        rep.k0_dimension = j.at("k0_dimension").get<uint64_t>();
    rep.k1_vanishes = j.at("k1_vanishes").get<bool>();
    rep.k1_certificate = j.at("k1_certificate").get<std::string>();
    if (j.contains("sigma1_h_basis")) rep.sigma1_h = rat_list_parse(j.at("sigma1_h_basis"));
    if (j.contains("sigma2_h_basis")) rep.sigma2_h = rat_list_parse(j.at("sigma2_h_basis"));
    if (j.contains("cohomology")) {
        CohomologyReport c;
        c.h0_zero = j.at("cohomology").at("h0_zero").get<bool>();
        c.h1_zero = j.at("cohomology").at("h1_zero").get<bool>();
        if (!j.at("cohomology").at("h2_dimension").is_string())
            c.h2_dimension = j.at("cohomology").at("h2_dimension").get<uint64_t>();
        c.ok = c.h0_zero && c.h1_zero && c.h2_dimension.has_value();
        rep.cohomology = c;
    }
    if (j.contains("matrices")) rep.complex = matrices_from_json(j.at("matrices"));
    rep.cross_check_ok = j.at("cross_check_ok").get<bool>();
    return rep;
}

} // namespace twk
