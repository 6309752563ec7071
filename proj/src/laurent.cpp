#include "twk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace twk {

const VarInfo& var_info(VarSet vs) {
    static const VarInfo tables[] = {
        {1, {"t", ""}, {true, true}},
        {2, {"t1", "t2"}, {true, true}},
        {2, {"s", "d"}, {false, true}},
        {1, {"rho", ""}, {false, false}},
        {2, {"s1", "s2"}, {false, false}},
        {2, {"x", "y"}, {true, true}},
    };
    return tables[static_cast<size_t>(vs)];
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (vs_ != o.vs_)
        throw Error("mismatched ambient variable sets");
}

LaurentPoly LaurentPoly::constant(VarSet vs, const Rat& c, Domain dom) {
    LaurentPoly p(vs, dom);
    if (c != 0) p.terms_.push_back({Mono{}, c});
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vs, const Mono& m, const Rat& c, Domain dom) {
    LaurentPoly p(vs, dom);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::variable(VarSet vs, int i, Domain dom) {
    if (i < 0 || i >= var_info(vs).count) throw Error("variable index out of range");
    Mono m;
    m[i] = 1;
    return monomial(vs, m, 1, dom);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Mono{});
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const Rat& c = terms_[0].c;
    if (!(c == 1 || c == -1)) return false;
    const VarInfo& vi = var_info(vs_);
    for (int i = 0; i < vi.count; ++i)
        if (terms_[0].m[i] < 0 && !vi.laurent[static_cast<size_t>(i)]) return false;
    return true;
}

bool LaurentPoly::is_integral() const {
    for (const Term& t : terms_)
        if (!is_integer(t.c)) return false;
    return true;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

Rat LaurentPoly::coeff(const Mono& m) const {
    MonoCmp lt;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term& a, const Mono& b) { return lt(b, a.m); });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
}

int32_t LaurentPoly::min_exp(int i) const {
    int32_t r = 0;
    bool first = true;
    for (const Term& t : terms_) {
        if (first || t.m[i] < r) r = t.m[i];
        first = false;
    }
    return r;
}

int32_t LaurentPoly::max_exp(int i) const {
    int32_t r = 0;
    bool first = true;
    for (const Term& t : terms_) {
        if (first || t.m[i] > r) r = t.m[i];
        first = false;
    }
    return r;
}

LaurentPoly LaurentPoly::with_domain(Domain dom) const {
    if (dom == Domain::Integer && !is_integral())
        throw Error("cannot narrow to integer domain: rational coefficient present");
    LaurentPoly p = *this;
    p.dom_ = dom;
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarSet vs, Domain dom, std::vector<Term> ts) {
    std::map<Mono, Rat, MonoCmp> acc;
    for (Term& t : ts) {
        if (t.c == 0) continue;
        acc[t.m] += t.c;
    }
    LaurentPoly p(vs, dom);
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.push_back({it->first, it->second});
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (Term& t : p.terms_) t.c = -t.c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same(o);
    std::vector<Term> ts;
    ts.reserve(terms_.size() + o.terms_.size());
    MonoCmp lt;
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Rat c = terms_[i].c + o.terms_[j].c;
            if (c != 0) ts.push_back({terms_[i].m, c});
            ++i, ++j;
        } else if (lt(o.terms_[j].m, terms_[i].m)) {
            ts.push_back(terms_[i++]);
        } else {
            ts.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) ts.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) ts.push_back(o.terms_[j]);
    LaurentPoly p(vs_, join(dom_, o.dom_));
    p.terms_ = std::move(ts);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o);
    std::map<Mono, Rat, MonoCmp> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Mono m;
            m[0] = a.m[0] + b.m[0];
            m[1] = a.m[1] + b.m[1];
            acc[m] += a.c * b.c;
        }
    }
    LaurentPoly p(vs_, join(dom_, o.dom_));
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.push_back({it->first, it->second});
    return p;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    if (c == 0) return zero(vs_, dom_);
    LaurentPoly p = *this;
    if (!is_integer(c)) p.dom_ = Domain::Rational;
    for (Term& t : p.terms_) t.c *= c;
    return p;
}

LaurentPoly LaurentPoly::pow(int64_t n) const {
    if (n < 0) {
        if (!is_unit_monomial())
            throw Error("negative power of a non-unit");
        Mono m;
        m[0] = static_cast<int32_t>(n * terms_[0].m[0]);
        m[1] = static_cast<int32_t>(n * terms_[0].m[1]);
        Rat c = (terms_[0].c == 1 || (n % 2 == 0)) ? Rat(1) : Rat(-1);
        return monomial(vs_, m, c, dom_);
    }
    LaurentPoly r = constant(vs_, 1, dom_);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw Error("substitute: wrong number of images");
    VarSet target = images.empty() ? p.vars() : images[0].vars();
    for (const LaurentPoly& im : images)
        if (im.vars() != target) throw Error("substitute: images in different rings");
    for (int i = 0; i < p.nvars(); ++i) {
        if (p.min_exp(i) < 0 && !images[static_cast<size_t>(i)].is_unit_monomial())
            throw Error(std::string("substitute: negative exponent on variable ") +
                        var_info(p.vars()).names[static_cast<size_t>(i)] +
                        " with non-invertible image");
    }
    Domain dom = p.domain();
    for (const LaurentPoly& im : images)
        if (im.domain() == Domain::Rational) dom = Domain::Rational;
    LaurentPoly r = LaurentPoly::zero(target, dom);
    for (const LaurentPoly::Term& t : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(target, t.c, dom);
        for (int i = 0; i < p.nvars(); ++i)
            if (t.m[i] != 0) term = term * images[static_cast<size_t>(i)].pow(t.m[i]);
        r = r + term;
    }
    return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error("exact_div: division by zero");
    if (num.is_zero()) return LaurentPoly::zero(num.vars(), num.domain());
    if (num.vars() != den.vars()) throw Error("exact_div: mismatched ambient sets");

    // Any true quotient term lies in the exponent box derived from the
    // Newton polytopes: min(num)-max(den) <= e <= max(num)-min(den).
    int32_t lo[2], hi[2];
    for (int i = 0; i < num.nvars(); ++i) {
        lo[i] = num.min_exp(i) - den.max_exp(i);
        hi[i] = num.max_exp(i) - den.min_exp(i);
    }

    LaurentPoly rem = num;
    std::vector<LaurentPoly::Term> qterms;
    const LaurentPoly::Term& dlt = den.leading_term();
    while (!rem.is_zero()) {
        const LaurentPoly::Term& rlt = rem.leading_term();
        Mono qm;
        qm[0] = rlt.m[0] - dlt.m[0];
        qm[1] = rlt.m[1] - dlt.m[1];
        for (int i = 0; i < num.nvars(); ++i)
            if (qm[i] < lo[i] || qm[i] > hi[i]) return std::nullopt;
        Rat qc = rlt.c / dlt.c;
        qterms.push_back({qm, qc});
        rem = rem - (den * LaurentPoly::monomial(num.vars(), qm, qc, Domain::Rational));
    }
    Domain dom = (num.domain() == Domain::Rational || den.domain() == Domain::Rational)
                     ? Domain::Rational
                     : Domain::Integer;
    LaurentPoly q = LaurentPoly::from_terms(num.vars(), Domain::Rational, std::move(qterms));
    if (!(q * den == num)) return std::nullopt;  // verification multiply-back
    if (dom == Domain::Integer && !q.is_integral()) dom = Domain::Rational;
    return q.with_domain(dom);
}

Complex eval_complex(const LaurentPoly& p, const std::vector<Complex>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw Error("eval_complex: wrong point dimension");
    for (const Complex& z : point)
        if (z == Complex(0.0, 0.0)) throw Error("eval_complex: zero coordinate");
    Complex r(0.0, 0.0);
    for (const LaurentPoly::Term& t : p.terms()) {
        Complex v(to_double(t.c), 0.0);
        for (int i = 0; i < p.nvars(); ++i) {
            int32_t e = t.m[i];
            if (e == 0) continue;
            Complex base = point[static_cast<size_t>(i)];
            if (e < 0) {
                base = 1.0 / base;
                e = -e;
            }
            Complex acc(1.0, 0.0);
            for (int32_t k = 0; k < e; ++k) acc *= base;
            v *= acc;
        }
        r += v;
    }
    return r;
}

namespace {

std::string coeff_string(const Rat& c) {
    std::ostringstream os;
    if (is_integer(c))
        os << numerator(c);
    else
        os << numerator(c) << "/" << denominator(c);
    return os.str();
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    const VarInfo& vi = var_info(p.vars());

    int32_t shift[2] = {0, 0};
    for (int i = 0; i < p.nvars(); ++i) shift[i] = p.min_exp(i);

    // graded-lex descending on shifted exponent vectors
    std::vector<const LaurentPoly::Term*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const LaurentPoly::Term* a, const LaurentPoly::Term* b) {
        int64_t da = 0, db = 0;
        for (int i = 0; i < p.nvars(); ++i) {
            da += a->m[i] - shift[i];
            db += b->m[i] - shift[i];
        }
        if (da != db) return da > db;
        for (int i = 0; i < p.nvars(); ++i)
            if (a->m[i] != b->m[i]) return a->m[i] > b->m[i];
        return false;
    });

    std::ostringstream os;
    bool first = true;
    for (const LaurentPoly::Term* t : ts) {
        Rat c = t->c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;

        bool has_var = false;
        std::string vars_part;
        for (int i = 0; i < p.nvars(); ++i) {
            if (t->m[i] == 0) continue;
            if (has_var) vars_part += "*";
            vars_part += vi.names[static_cast<size_t>(i)];
            if (t->m[i] != 1) vars_part += "^" + std::to_string(t->m[i]);
            has_var = true;
        }
        if (!has_var) {
            os << coeff_string(c);
        } else if (c == 1) {
            os << vars_part;
        } else {
            os << coeff_string(c) << "*" << vars_part;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    VarSet vs;

    explicit Parser(const std::string& str, VarSet v) : s(str), vs(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw Error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(s.substr(start, pos - start));
    }

    int64_t parse_int() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        Int v = parse_uint();
        if (v > Int(1) << 30) fail("exponent too large");
        return neg ? -v.convert_to<int64_t>() : v.convert_to<int64_t>();
    }

    int var_index() {
        skip_ws();
        const VarInfo& vi = var_info(vs);
        for (int i = 0; i < vi.count; ++i) {
            std::string name = vi.names[static_cast<size_t>(i)];
            // longest-match: check both and prefer the longer name
            if (s.compare(pos, name.size(), name) == 0) {
                // avoid matching "t" inside "t1" when both exist
                bool longer = false;
                for (int j = 0; j < vi.count; ++j) {
                    std::string other = vi.names[static_cast<size_t>(j)];
                    if (other.size() > name.size() && s.compare(pos, other.size(), other) == 0)
                        longer = true;
                }
                if (longer) continue;
                pos += name.size();
                return i;
            }
        }
        return -1;
    }

    // term := [sign] [coeff ['/' den]] ('*'? var ('^' int)?)*
    LaurentPoly::Term parse_term() {
        skip_ws();
        Rat c = 1;
        bool saw_any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Int num = parse_uint();
            if (accept('/')) {
                Int den = parse_uint();
                if (den == 0) fail("zero denominator");
                c = Rat(num, den);
            } else {
                c = Rat(num);
            }
            saw_any = true;
        }
        Mono m;
        for (;;) {
            size_t before = pos;
            skip_ws();
            if (accept('*')) skip_ws();
            int vi_idx = var_index();
            if (vi_idx < 0) {
                pos = before;
                break;
            }
            int64_t e = 1;
            if (accept('^')) e = parse_int();
            m[vi_idx] += static_cast<int32_t>(e);
            saw_any = true;
        }
        if (!saw_any) fail("expected term");
        return {m, c};
    }

    LaurentPoly parse(Domain dom) {
        std::vector<LaurentPoly::Term> ts;
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        for (;;) {
            LaurentPoly::Term t = parse_term();
            if (neg) t.c = -t.c;
            ts.push_back(t);
            skip_ws();
            if (accept('+')) {
                neg = false;
            } else if (accept('-')) {
                neg = true;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        LaurentPoly p = LaurentPoly::from_terms(vs, Domain::Rational, std::move(ts));
        if (dom == Domain::Integer && !p.is_integral()) dom = Domain::Rational;
        return p.with_domain(dom);
    }
};

} // namespace

LaurentPoly parse_poly(VarSet vs, const std::string& text, Domain dom) {
    if (text == "0") return LaurentPoly::zero(vs, dom);
    Parser p(text, vs);
    LaurentPoly r = p.parse(dom);
    const VarInfo& vi = var_info(vs);
    for (int i = 0; i < vi.count; ++i)
        if (!vi.laurent[static_cast<size_t>(i)] && r.min_exp(i) < 0)
            throw Error(std::string("negative exponent on non-invertible variable ") +
                        vi.names[static_cast<size_t>(i)]);
    return r;
}

} // namespace twk
