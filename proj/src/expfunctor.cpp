#include "twk/expfunctor.hpp"

#include <cctype>

namespace twk {

Int ExponentialFunctor::dimension() const {
    Rat d = 0;
    for (const auto& t : character.terms()) d += t.c;
    return numerator(d);
}

namespace {

struct FunctorParser {
    const std::string& s;
    size_t pos = 0;

    explicit FunctorParser(const std::string& str) : s(str) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw Error("functor spec error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool accept_word(const char* w) {
        skip_ws();
        size_t n = std::string(w).size();
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    int64_t parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a positive integer");
        return std::stoll(s.substr(start, pos - start));
    }

    // atom := ext_top | ext_full | fw(b) | poly:(...) | poly:<to end>
    std::pair<LaurentPoly, bool> parse_atom() {
        skip_ws();
        if (accept_word("ext_top")) return {parse_poly(VarSet::T, "t"), true};
        if (accept_word("ext_full")) return {parse_poly(VarSet::T, "1 + t"), true};
        if (accept_word("fw")) {
            if (!accept('(')) fail("expected ( after fw");
            int64_t b = parse_uint();
            if (b < 1) fail("fw(b) requires b >= 1");
            if (!accept(')')) fail("expected ) in fw(b)");
            return {parse_poly(VarSet::T, "1 + " + std::to_string(b) + "*t"), true};
        }
        if (accept_word("poly:")) {
            std::string body;
            if (accept('(')) {
                size_t depth = 1;
                size_t start = pos;
                while (pos < s.size() && depth > 0) {
                    if (s[pos] == '(') ++depth;
                    if (s[pos] == ')') --depth;
                    ++pos;
                }
                if (depth != 0) fail("unbalanced parentheses after poly:(");
                body = s.substr(start, pos - start - 1);
            } else {
                body = s.substr(pos);
                pos = s.size();
            }
            LaurentPoly p = parse_poly(VarSet::T, body);
            return {p, false};
        }
        fail("expected ext_top, ext_full, fw(b) or poly:");
    }

    // factor := atom ( '^' m )?
    std::pair<LaurentPoly, bool> parse_factor() {
        auto [p, preset] = parse_atom();
        if (accept('^')) {
            int64_t m = parse_uint();
            if (m < 1) fail("power must be >= 1");
            p = p.pow(m);
        }
        return {p, preset};
    }

    ExponentialFunctor parse() {
        auto [p, preset] = parse_factor();
        while (accept('*')) {
            auto [q, qpreset] = parse_factor();
            p = p * q;
            preset = preset && qpreset;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        ExponentialFunctor F;
        F.character = p;
        F.is_preset = preset;
        return F;
    }
};

} // namespace

ExponentialFunctor parse_functor(const std::string& spec) {
    FunctorParser parser(spec);
    ExponentialFunctor F = parser.parse();
    F.name = spec;
    if (F.character.is_zero()) throw Error("functor character must be nonzero");
    for (const auto& t : F.character.terms())
        if (t.c < 0 || !is_integer(t.c))
            throw Error("functor character must have nonnegative integer coefficients");
    return F;
}

std::string print_functor(const ExponentialFunctor& F) { return "poly:" + to_string(F.character); }

LaurentPoly f_of_lines(const ExponentialFunctor& F, const std::vector<LaurentPoly>& lines) {
    if (lines.empty()) return LaurentPoly::constant(VarSet::T, 1);
    VarSet target = lines[0].vars();
    LaurentPoly r = LaurentPoly::constant(target, 1, F.character.domain());
    for (const LaurentPoly& line : lines) {
        if (!line.is_unit_monomial()) throw Error("f_of_lines: line is not a unit monomial");
        r = r * substitute(F.character, std::vector<LaurentPoly>{line});
    }
    return r;
}

RingElement f_rho_in(const ExponentialFunctor& F, Ring r) {
    switch (r) {
        case Ring::TorusSU2: {
            LaurentPoly t = LaurentPoly::variable(VarSet::T, 0);
            return {Ring::TorusSU2, f_of_lines(F, {t, t.pow(-1)})};
        }
        case Ring::SU2:
            return to_invariant_ring(f_rho_in(F, Ring::TorusSU2), Ring::SU2);
        case Ring::TorusSU3: {
            return {Ring::TorusSU3, f_of_lines(F, {torus_coordinate(1), torus_coordinate(2),
                                                   torus_coordinate(3)})};
        }
        case Ring::SU3:
            return to_invariant_ring(f_rho_in(F, Ring::TorusSU3), Ring::SU3);
        case Ring::U2: {
            // F(rho)|U2 = F(s + d^-1) = F(s) * F(d^-1)
            LaurentPoly x = LaurentPoly::variable(VarSet::XY, 0);
            LaurentPoly y = LaurentPoly::variable(VarSet::XY, 1);
            LaurentPoly mu = xy_to_u2(f_of_lines(F, {x, y}));
            LaurentPoly d = LaurentPoly::variable(VarSet::SD, 1);
            LaurentPoly lambda = substitute(F.character, {d.pow(-1)});
            return {Ring::U2, mu * lambda};
        }
    }
    throw Error("bad ring tag");
}

DerivedElements derived_elements(const ExponentialFunctor& F) {
    DerivedElements de;
    de.f_rho_su2 = f_rho_in(F, Ring::SU2);
    de.f_rho_su3 = f_rho_in(F, Ring::SU3);

    LaurentPoly d = LaurentPoly::variable(VarSet::SD, 1);
    de.lambda_F = {Ring::U2, substitute(F.character, {d.pow(-1)})};

    LaurentPoly x = LaurentPoly::variable(VarSet::XY, 0);
    LaurentPoly y = LaurentPoly::variable(VarSet::XY, 1);
    de.mu_F = {Ring::U2, xy_to_u2(f_of_lines(F, {x, y}))};

    de.nu_F = {Ring::TorusSU3, f_of_lines(F, {torus_coordinate(1)})};

    de.lambda_inv = {de.mu_F, 1};
    de.mu_inv = {de.lambda_F, 1};
    de.nu_inv = {{Ring::TorusSU3, f_of_lines(F, {torus_coordinate(2), torus_coordinate(3)})}, 1};

    // verify the certificates exactly
    RingElement f_rho_u2 = f_rho_in(F, Ring::U2);
    if (!(de.lambda_F.poly * de.lambda_inv.inverse_numerator.poly == f_rho_u2.poly))
        throw Error("derived_elements: lambda_F unit certificate failed");
    if (!(de.mu_F.poly * de.mu_inv.inverse_numerator.poly == f_rho_u2.poly))
        throw Error("derived_elements: mu_F unit certificate failed");
    RingElement f_rho_t2 = f_rho_in(F, Ring::TorusSU3);
    if (!(de.nu_F.poly * de.nu_inv.inverse_numerator.poly == f_rho_t2.poly))
        throw Error("derived_elements: nu_F unit certificate failed");
    return de;
}

HypothesisReport hypothesis_checks(const ExponentialFunctor& F) {
    HypothesisReport h{};
    LaurentPoly t = LaurentPoly::variable(VarSet::T, 0, F.character.domain());
    LaurentPoly flipped = substitute(F.character, {t.pow(-1)});
    h.su2_ok = !(F.character == flipped);
    h.su3_ok = F.degree() > 0;
    return h;
}

} // namespace twk
