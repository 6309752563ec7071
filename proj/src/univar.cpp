#include "twk/univar.hpp"

namespace twk {

int UniPoly::degree() const {
    for (size_t i = c.size(); i > 0; --i)
        if (c[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Rat UniPoly::lead() const {
    int d = degree();
    if (d < 0) throw Error("leading coefficient of zero polynomial");
    return c[static_cast<size_t>(d)];
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::from_laurent(const LaurentPoly& p) {
    UniPoly u;
    if (p.nvars() != 1) throw Error("from_laurent: univariate polynomial expected");
    if (p.min_exp(0) < 0) throw Error("from_laurent: negative exponent");
    u.c.assign(static_cast<size_t>(p.max_exp(0)) + 1, Rat(0));
    for (const auto& t : p.terms()) u.c[static_cast<size_t>(t.m[0])] = t.c;
    u.trim();
    return u;
}

LaurentPoly UniPoly::to_laurent(VarSet vs) const {
    std::vector<LaurentPoly::Term> ts;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Mono m;
        m[0] = static_cast<int32_t>(i);
        ts.push_back({m, c[i]});
    }
    return LaurentPoly::from_terms(vs, Domain::Rational, std::move(ts));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scale(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scale(const Rat& k) const {
    UniPoly r = *this;
    for (Rat& x : r.c) x *= k;
    r.trim();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& den) const {
    if (den.is_zero()) throw Error("univariate division by zero");
    UniPoly q, r = *this;
    int dd = den.degree();
    Rat dl = den.lead();
    q.c.assign(c.size(), Rat(0));
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat f = r.lead() / dl;
        q.c[static_cast<size_t>(k)] += f;
        UniPoly shift;
        shift.c.assign(static_cast<size_t>(k) + 1, Rat(0));
        shift.c[static_cast<size_t>(k)] = f;
        r = r - den * shift;
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly r;
    r.c = {Rat(1)};
    UniPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    UniPoly a = *this, b = o;
    a.trim();
    b.trim();
    return a.c == b.c;
}

UniPoly gcd_q(UniPoly f, UniPoly g) {
    f.trim();
    g.trim();
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f.scale(Rat(1) / f.lead());
}

std::pair<UniPoly, Rat> primitive_part(const UniPoly& f) {
    if (f.is_zero()) return {f, Rat(1)};
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& x : f.c) {
        if (x == 0) continue;
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(x));
    }
    Rat scale(den_lcm, num_gcd);
    if (f.lead() < 0) scale = -scale;
    UniPoly p = f.scale(scale);
    return {p, Rat(1) / scale};
}

Int resultant_z(const UniPoly& f, const UniPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    for (const Rat& x : f.c)
        if (!is_integer(x)) throw Error("resultant_z: integer polynomials expected");
    for (const Rat& x : g.c)
        if (!is_integer(x)) throw Error("resultant_z: integer polynomials expected");
    if (m == 0 && n == 0) return 1;
    if (m == 0) return boost::multiprecision::pow(numerator(f.c[0]), static_cast<unsigned>(n));
    if (n == 0) return boost::multiprecision::pow(numerator(g.c[0]), static_cast<unsigned>(m));

    // Sylvester matrix, (m+n) x (m+n)
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> a(size, std::vector<Int>(size, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            a[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
                numerator(f.c[static_cast<size_t>(m - k)]);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            a[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] =
                numerator(g.c[static_cast<size_t>(n - k)]);

    // fraction-free Bareiss elimination
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < size; ++i) {
            for (size_t j = k + 1; j < size; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[size - 1][size - 1] : -a[size - 1][size - 1];
}

} // namespace twk
