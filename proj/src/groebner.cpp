#include "twk/groebner.hpp"

#include <algorithm>
#include <atomic>

namespace twk::gb {

namespace {
std::atomic<uint64_t> g_step_limit{1000000};
}

void set_step_limit(uint64_t limit) { g_step_limit.store(limit == 0 ? 1 : limit); }
uint64_t step_limit() { return g_step_limit.load(); }

namespace {

// graded order, ties broken by larger s1-exponent (== grevlex in 2 vars)
inline int cmp_mono(int32_t a1, int32_t b1, int32_t a2, int32_t b2) {
    int64_t d1 = int64_t(a1) + b1, d2 = int64_t(a2) + b2;
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    if (a1 != a2) return a1 < a2 ? -1 : 1;
    return 0;
}

inline bool divides(int32_t a1, int32_t b1, int32_t a2, int32_t b2) {
    return a1 <= a2 && b1 <= b2;
}

} // namespace

const BiTerm& BiPoly::lt() const {
    if (terms.empty()) throw Error("leading term of zero polynomial");
    return terms[0];
}

BiPoly BiPoly::constant(const Rat& c) {
    BiPoly p;
    if (c != 0) p.terms.push_back({0, 0, c});
    return p;
}

BiPoly BiPoly::monomial(int32_t a, int32_t b, const Rat& c) {
    BiPoly p;
    if (c != 0) p.terms.push_back({a, b, c});
    return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r;
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        int c = cmp_mono(terms[i].a, terms[i].b, o.terms[j].a, o.terms[j].b);
        if (c == 0) {
            Rat s = terms[i].c + o.terms[j].c;
            if (s != 0) r.terms.push_back({terms[i].a, terms[i].b, s});
            ++i, ++j;
        } else if (c > 0) {
            r.terms.push_back(terms[i++]);
        } else {
            r.terms.push_back(o.terms[j++]);
        }
    }
    for (; i < terms.size(); ++i) r.terms.push_back(terms[i]);
    for (; j < o.terms.size(); ++j) r.terms.push_back(o.terms[j]);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (BiTerm& t : r.terms) t.c = -t.c;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::mul_term(int32_t a, int32_t b, const Rat& c) const {
    if (c == 0) return {};
    BiPoly r = *this;
    for (BiTerm& t : r.terms) {
        t.a += a;
        t.b += b;
        t.c *= c;
    }
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly acc;
    for (const BiTerm& t : o.terms) acc = acc + mul_term(t.a, t.b, t.c);
    return acc;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].a != o.terms[i].a || terms[i].b != o.terms[i].b || terms[i].c != o.terms[i].c)
            return false;
    return true;
}

BiPoly BiPoly::primitive() const {
    if (terms.empty()) return {};
    Int den_lcm = 1, num_gcd = 0;
    for (const BiTerm& t : terms) {
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(t.c));
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(t.c));
    }
    Rat scale = Rat(den_lcm, num_gcd);
    if (terms[0].c < 0) scale = -scale;
    if (scale < 0) scale = -scale;
    if (terms[0].c < 0) scale = -scale;
    BiPoly r = *this;
    for (BiTerm& t : r.terms) t.c *= scale;
    return r;
}

BiPoly BiPoly::monic() const {
    if (terms.empty()) return {};
    Rat inv = Rat(1) / terms[0].c;
    BiPoly r = *this;
    for (BiTerm& t : r.terms) t.c *= inv;
    return r;
}

double BiPoly::eval(double x, double y) const {
    double r = 0;
    for (const BiTerm& t : terms) {
        double v = to_double(t.c);
        for (int32_t i = 0; i < t.a; ++i) v *= x;
        for (int32_t i = 0; i < t.b; ++i) v *= y;
        r += v;
    }
    return r;
}

BiPoly from_laurent(const LaurentPoly& p) {
    BiPoly r;
    std::vector<BiTerm> ts;
    for (const auto& t : p.terms()) {
        if (t.m[0] < 0 || (p.nvars() > 1 && t.m[1] < 0))
            throw Error("from_laurent: negative exponent");
        ts.push_back({t.m[0], p.nvars() > 1 ? t.m[1] : 0, t.c});
    }
    std::sort(ts.begin(), ts.end(), [](const BiTerm& x, const BiTerm& y) {
        return cmp_mono(x.a, x.b, y.a, y.b) > 0;
    });
    r.terms = std::move(ts);
    return r;
}

LaurentPoly to_laurent(const BiPoly& p, VarSet vs) {
    std::vector<LaurentPoly::Term> ts;
    for (const BiTerm& t : p.terms) {
        Mono m;
        m[0] = t.a;
        m[1] = t.b;
        ts.push_back({m, t.c});
    }
    return LaurentPoly::from_terms(vs, Domain::Rational, std::move(ts));
}

bool ModVec::is_zero() const {
    for (const BiPoly& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

int ModVec::lead_pos() const {
    for (size_t i = 0; i < comp.size(); ++i)
        if (!comp[i].is_zero()) return static_cast<int>(i);
    return -1;
}

ModVec ModVec::zero(int rank) {
    ModVec v;
    v.comp.assign(static_cast<size_t>(rank), BiPoly{});
    return v;
}

ModVec ModVec::unit(int rank, int pos) {
    ModVec v = zero(rank);
    v.comp[static_cast<size_t>(pos)] = BiPoly::constant(1);
    return v;
}

ModVec ModVec::operator+(const ModVec& o) const {
    if (comp.size() != o.comp.size()) throw Error("module rank mismatch");
    ModVec r;
    r.comp.reserve(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) r.comp.push_back(comp[i] + o.comp[i]);
    return r;
}

ModVec ModVec::operator-(const ModVec& o) const {
    if (comp.size() != o.comp.size()) throw Error("module rank mismatch");
    ModVec r;
    r.comp.reserve(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) r.comp.push_back(comp[i] - o.comp[i]);
    return r;
}

ModVec ModVec::mul_term(int32_t a, int32_t b, const Rat& c) const {
    ModVec r;
    r.comp.reserve(comp.size());
    for (const BiPoly& p : comp) r.comp.push_back(p.mul_term(a, b, c));
    return r;
}

ModVec ModVec::mul(const BiPoly& p) const {
    ModVec r;
    r.comp.reserve(comp.size());
    for (const BiPoly& q : comp) r.comp.push_back(q * p);
    return r;
}

bool ModVec::operator==(const ModVec& o) const {
    if (comp.size() != o.comp.size()) return false;
    for (size_t i = 0; i < comp.size(); ++i)
        if (!(comp[i] == o.comp[i])) return false;
    return true;
}

ModVec ModVec::primitive() const {
    Int den_lcm = 1, num_gcd = 0;
    for (const BiPoly& p : comp)
        for (const BiTerm& t : p.terms) {
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(t.c));
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(t.c));
        }
    if (num_gcd == 0) return *this;
    Rat scale(den_lcm, num_gcd);
    if (scale < 0) scale = -scale;
    int lp = lead_pos();
    if (lp >= 0 && comp[static_cast<size_t>(lp)].lt().c < 0) scale = -scale;
    ModVec r;
    r.comp.reserve(comp.size());
    for (const BiPoly& p : comp) {
        BiPoly q = p;
        for (BiTerm& t : q.terms) t.c *= scale;
        r.comp.push_back(std::move(q));
    }
    return r;
}

namespace {

struct LeadInfo {
    int pos;
    int32_t a, b;
    Rat c;
};

LeadInfo lead(const ModVec& v) {
    int p = v.lead_pos();
    if (p < 0) throw Error("lead of zero vector");
    const BiTerm& t = v.comp[static_cast<size_t>(p)].lt();
    return {p, t.a, t.b, t.c};
}

// Fully reduce v against basis (every term of every component); exact,
// used for normal forms and the final interreduction.
ModVec reduce_full(ModVec v, const std::vector<ModVec>& basis) {
    ModVec out = ModVec::zero(v.rank());
    uint64_t guard = 0;
    const uint64_t limit = step_limit() * 64;
    while (!v.is_zero()) {
        if (++guard > limit) throw ResourceLimit("normal form exceeded step limit");
        LeadInfo lv = lead(v);
        bool reduced = false;
        for (const ModVec& g : basis) {
            if (g.is_zero()) continue;
            LeadInfo lg = lead(g);
            if (lg.pos == lv.pos && divides(lg.a, lg.b, lv.a, lv.b)) {
                v = v - g.mul_term(lv.a - lg.a, lv.b - lg.b, lv.c / lg.c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the leading term to the output
            out.comp[static_cast<size_t>(lv.pos)] =
                out.comp[static_cast<size_t>(lv.pos)] + BiPoly::monomial(lv.a, lv.b, lv.c);
            v.comp[static_cast<size_t>(lv.pos)] =
                v.comp[static_cast<size_t>(lv.pos)] - BiPoly::monomial(lv.a, lv.b, lv.c);
        }
    }
    return out;
}

// Top-reduction with primitive rescaling after every step; the result
// spans the same module, which is all the basis loop needs, and the
// rescaling keeps the integer coefficients from swelling.
ModVec reduce_top(ModVec v, const std::vector<ModVec>& basis, uint64_t limit) {
    uint64_t guard = 0;
    while (!v.is_zero()) {
        if (++guard > limit * 64) throw ResourceLimit("top reduction exceeded the step limit");
        LeadInfo lv = lead(v);
        bool reduced = false;
        for (const ModVec& g : basis) {
            if (g.is_zero()) continue;
            LeadInfo lg = lead(g);
            if (lg.pos == lv.pos && divides(lg.a, lg.b, lv.a, lv.b)) {
                v = (v - g.mul_term(lv.a - lg.a, lv.b - lg.b, lv.c / lg.c)).primitive();
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return v;
}

std::vector<ModVec> buchberger(std::vector<ModVec> gens) {
    std::vector<ModVec> g;
    for (ModVec& v : gens)
        if (!v.is_zero()) g.push_back(v.primitive());

    struct Pair {
        size_t i, j;
        int64_t lcm_deg;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](size_t k) {
        LeadInfo lk = lead(g[k]);
        for (size_t i = 0; i < k; ++i) {
            LeadInfo li = lead(g[i]);
            if (li.pos != lk.pos) continue;
            int64_t d = int64_t(std::max(li.a, lk.a)) + std::max(li.b, lk.b);
            pairs.push_back({i, k, d});
        }
    };
    for (size_t k = 0; k < g.size(); ++k) add_pairs(k);

    bool rank_one = !g.empty() && g[0].rank() == 1;
    uint64_t steps = 0;
    const uint64_t limit = step_limit();
    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first
        size_t best = 0;
        for (size_t p = 1; p < pairs.size(); ++p)
            if (pairs[p].lcm_deg < pairs[best].lcm_deg) best = p;
        auto [i, j, deg] = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        if (++steps > limit)
            throw ResourceLimit("Groebner basis computation exceeded the step limit (" +
                                std::to_string(limit) + " S-pair reductions)");
        LeadInfo li = lead(g[i]), lj = lead(g[j]);
        // product criterion (valid for the ideal case only)
        if (rank_one && (std::min(li.a, lj.a) == 0 && std::min(li.b, lj.b) == 0) &&
            !(li.a == 0 && li.b == 0) && !(lj.a == 0 && lj.b == 0))
            continue;
        int32_t ga = std::max(li.a, lj.a), gb = std::max(li.b, lj.b);
        ModVec s = g[i].mul_term(ga - li.a, gb - li.b, Rat(1) / li.c) -
                   g[j].mul_term(ga - lj.a, gb - lj.b, Rat(1) / lj.c);
        s = reduce_top(std::move(s), g, limit);
        if (!s.is_zero()) {
            g.push_back(s.primitive());
            add_pairs(g.size() - 1);
        }
    }

    // minimalize: drop elements whose LT is divisible by another's LT
    std::vector<ModVec> min_basis;
    for (size_t i = 0; i < g.size(); ++i) {
        LeadInfo li = lead(g[i]);
        bool drop = false;
        for (size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j) continue;
            LeadInfo lj = lead(g[j]);
            if (lj.pos == li.pos && divides(lj.a, lj.b, li.a, li.b)) {
                // break ties so exactly one of two equal LTs survives
                if (li.a == lj.a && li.b == lj.b)
                    drop = j < i;
                else
                    drop = true;
            }
        }
        if (!drop) min_basis.push_back(g[i]);
    }

    // tail-reduce each element against the others, make monic
    std::vector<ModVec> reduced;
    for (size_t i = 0; i < min_basis.size(); ++i) {
        std::vector<ModVec> others;
        for (size_t j = 0; j < min_basis.size(); ++j)
            if (j != i) others.push_back(min_basis[j]);
        ModVec r = reduce_full(min_basis[i], others);
        if (r.is_zero()) continue;
        LeadInfo lr = lead(r);
        reduced.push_back(r.mul_term(0, 0, Rat(1) / lr.c));
    }

    // canonical order: by leading term descending
    std::sort(reduced.begin(), reduced.end(), [](const ModVec& x, const ModVec& y) {
        LeadInfo lx = lead(x), ly = lead(y);
        if (lx.pos != ly.pos) return lx.pos < ly.pos;
        return cmp_mono(lx.a, lx.b, ly.a, ly.b) > 0;
    });
    return reduced;
}

} // namespace

Submodule::Submodule(int rank, std::vector<ModVec> gens) : rank_(rank), gens_(std::move(gens)) {
    for (const ModVec& v : gens_)
        if (v.rank() != rank_) throw Error("generator rank mismatch");
}

const std::vector<ModVec>& Submodule::basis() const {
    if (!basis_) basis_ = buchberger(gens_);
    return *basis_;
}

ModVec Submodule::normal_form(const ModVec& v) const {
    if (v.rank() != rank_) throw Error("rank mismatch");
    return reduce_full(v, basis());
}

bool Submodule::contains(const ModVec& v) const { return normal_form(v).is_zero(); }

bool Submodule::contains(const Submodule& other) const {
    if (other.rank_ != rank_) throw Error("rank mismatch");
    for (const ModVec& v : other.gens_)
        if (!contains(v)) return false;
    return true;
}

bool Submodule::equals(const Submodule& other) const {
    if (other.rank_ != rank_) return false;
    const auto& a = basis();
    const auto& b = other.basis();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool Submodule::is_zero_module() const { return basis().empty(); }

Ideal::Ideal(std::vector<BiPoly> gens)
    : gens_(std::move(gens)), mod_(1, [&] {
          std::vector<ModVec> ms;
          for (const BiPoly& p : gens_) {
              ModVec v;
              v.comp.push_back(p);
              ms.push_back(std::move(v));
          }
          return ms;
      }()) {}

std::vector<BiPoly> Ideal::reduced_basis() const {
    std::vector<BiPoly> out;
    for (const ModVec& v : mod_.basis()) out.push_back(v.comp[0]);
    return out;
}

BiPoly Ideal::normal_form(const BiPoly& p) const {
    ModVec v;
    v.comp.push_back(p);
    return mod_.normal_form(v).comp[0];
}

bool Ideal::contains(const BiPoly& p) const { return normal_form(p).is_zero(); }
bool Ideal::contains(const Ideal& other) const { return mod_.contains(other.mod_); }
bool Ideal::equals(const Ideal& other) const { return mod_.equals(other.mod_); }

bool Ideal::is_unit_ideal() const {
    const auto& b = mod_.basis();
    return b.size() == 1 && b[0].comp[0].terms.size() == 1 && b[0].comp[0].lt().a == 0 &&
           b[0].comp[0].lt().b == 0;
}

Submodule kernel(const std::vector<ModVec>& columns, int domain_rank) {
    if (static_cast<int>(columns.size()) != domain_rank)
        throw Error("kernel: column count does not match the domain rank");
    if (columns.empty()) return Submodule(0, {});
    int r = columns[0].rank();
    // graph module {(col_j, e_j)} in F^{r+c}; POT eliminates the first block
    int c = domain_rank;
    std::vector<ModVec> graph;
    for (int j = 0; j < c; ++j) {
        ModVec v = ModVec::zero(r + c);
        for (int i = 0; i < r; ++i) v.comp[static_cast<size_t>(i)] = columns[static_cast<size_t>(j)].comp[static_cast<size_t>(i)];
        v.comp[static_cast<size_t>(r + j)] = BiPoly::constant(1);
        graph.push_back(std::move(v));
    }
    Submodule g(r + c, graph);
    std::vector<ModVec> syz;
    for (const ModVec& v : g.basis()) {
        if (v.lead_pos() >= r) {
            ModVec w = ModVec::zero(c);
            for (int j = 0; j < c; ++j) w.comp[static_cast<size_t>(j)] = v.comp[static_cast<size_t>(r + j)];
            syz.push_back(std::move(w));
        }
    }
    return Submodule(c, syz);
}

Submodule colon(const Submodule& n, const BiPoly& f) {
    if (f.is_zero()) throw Error("colon by zero");
    int r = n.rank();
    // kernel of [f*e_1 .. f*e_r | gens] projected to the first r coordinates
    std::vector<ModVec> cols;
    for (int i = 0; i < r; ++i) cols.push_back(ModVec::unit(r, i).mul(f));
    for (const ModVec& g : n.generators()) cols.push_back(g);
    Submodule s = kernel(cols, static_cast<int>(cols.size()));
    std::vector<ModVec> out;
    for (const ModVec& v : s.generators()) {
        ModVec w = ModVec::zero(r);
        bool nonzero = false;
        for (int i = 0; i < r; ++i) {
            w.comp[static_cast<size_t>(i)] = v.comp[static_cast<size_t>(i)];
            nonzero = nonzero || !w.comp[static_cast<size_t>(i)].is_zero();
        }
        if (nonzero) out.push_back(std::move(w));
    }
    return Submodule(r, out);
}

Ideal colon(const Ideal& i, const BiPoly& f) {
    Submodule s = colon(i.module(), f);
    std::vector<BiPoly> gens;
    for (const ModVec& v : s.generators()) gens.push_back(v.comp[0]);
    return Ideal(gens);
}

Submodule saturate(const Submodule& n, const BiPoly& f) {
    if (f.is_zero()) throw Error("saturate by zero");
    Submodule cur = n;
    for (;;) {
        Submodule next = colon(cur, f);
        if (next.equals(cur)) return cur;
        cur = std::move(next);
    }
}

Ideal saturate(const Ideal& i, const BiPoly& f) {
    Ideal cur = i;
    for (;;) {
        Ideal next = colon(cur, f);
        if (next.equals(cur)) return cur;
        cur = std::move(next);
    }
}

std::optional<uint64_t> quotient_dimension(const Submodule& n) {
    uint64_t total = 0;
    for (int pos = 0; pos < n.rank(); ++pos) {
        // leading terms at this position
        std::vector<std::pair<int32_t, int32_t>> lts;
        for (const ModVec& v : n.basis()) {
            LeadInfo l = lead(v);
            if (l.pos == pos) lts.emplace_back(l.a, l.b);
        }
        // pure powers bound the staircase
        int32_t pure_a = -1, pure_b = -1;
        for (auto& [a, b] : lts) {
            if (b == 0 && (pure_a < 0 || a < pure_a)) pure_a = a;
            if (a == 0 && (pure_b < 0 || b < pure_b)) pure_b = b;
        }
        if (pure_a < 0 || pure_b < 0) return std::nullopt;  // unbounded staircase
        for (int32_t a = 0; a < pure_a; ++a) {
            int32_t bmin = pure_b;  // monomials (a, b) standard for b < bmin
            for (auto& [la, lb] : lts)
                if (la <= a && lb < bmin) bmin = lb;
            total += static_cast<uint64_t>(bmin);
        }
    }
    return total;
}

std::optional<uint64_t> quotient_dimension(const Ideal& i) { return quotient_dimension(i.module()); }

std::optional<std::vector<BiPoly>> lift(const Submodule& n, const ModVec& v) {
    int r = n.rank();
    int c = static_cast<int>(n.generators().size());
    std::vector<ModVec> graph;
    for (int j = 0; j < c; ++j) {
        ModVec g = ModVec::zero(r + c);
        for (int i = 0; i < r; ++i)
            g.comp[static_cast<size_t>(i)] = n.generators()[static_cast<size_t>(j)].comp[static_cast<size_t>(i)];
        g.comp[static_cast<size_t>(r + j)] = BiPoly::constant(1);
        graph.push_back(std::move(g));
    }
    Submodule g(r + c, graph);
    ModVec ext = ModVec::zero(r + c);
    for (int i = 0; i < r; ++i) ext.comp[static_cast<size_t>(i)] = v.comp[static_cast<size_t>(i)];
    ModVec nf = g.normal_form(ext);
    for (int i = 0; i < r; ++i)
        if (!nf.comp[static_cast<size_t>(i)].is_zero()) return std::nullopt;
    std::vector<BiPoly> a;
    for (int j = 0; j < c; ++j) a.push_back(-nf.comp[static_cast<size_t>(r + j)]);
    return a;
}

} // namespace twk::gb
