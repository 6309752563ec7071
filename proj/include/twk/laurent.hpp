#ifndef TWK_LAURENT_HPP
#define TWK_LAURENT_HPP

#include "twk/numeric.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twk {

/// Ambient variable sets for the rings appearing in the pipeline.
/// TorusSU3 elements are stored in eliminated form over {t1, t2} with
/// t3 = (t1*t2)^-1; the relation itself is never stored.
enum class VarSet : uint8_t {
    T,     // {t}        one-variable Laurent (torus of SU(2), functor characters)
    T2,    // {t1, t2}   eliminated maximal torus of SU(3)
    SD,    // {s, d}     U(2): d is invertible, s is not
    Rho,   // {rho}      R(SU(2))
    S1S2,  // {s1, s2}   R(SU(3))
    XY,    // {x, y}     scratch pair of line variables (both invertible)
};

struct VarInfo {
    int count;
    std::array<const char*, 2> names;
    std::array<bool, 2> laurent;  // negative exponents allowed?
};

const VarInfo& var_info(VarSet vs);

/// Exponent vector; length = ambient variable count (1 or 2 here).
struct Mono {
    std::array<int32_t, 2> e{0, 0};

    int32_t& operator[](int i) { return e[static_cast<size_t>(i)]; }
    int32_t operator[](int i) const { return e[static_cast<size_t>(i)]; }
    bool operator==(const Mono& o) const { return e == o.e; }

    int64_t total() const { return int64_t(e[0]) + e[1]; }
};

/// Fixed global order: graded (total raw degree) then lexicographic.
/// Compatible with multiplication, used for leading-term selection.
struct MonoCmp {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e < b.e;
    }
};

enum class Domain : uint8_t { Integer, Rational };

/// Exact multivariate Laurent polynomial. Terms are kept sorted
/// descending in the global monomial order with no zero coefficients;
/// two values are equal iff their term lists are identical.
/// Immutable in spirit: all operations return new values, so sharing
/// across threads is safe.
class LaurentPoly {
public:
    struct Term {
        Mono m;
        Rat c;
    };

    LaurentPoly() : vs_(VarSet::T), dom_(Domain::Integer) {}
    explicit LaurentPoly(VarSet vs, Domain dom = Domain::Integer) : vs_(vs), dom_(dom) {}

    static LaurentPoly zero(VarSet vs, Domain dom = Domain::Integer) { return LaurentPoly(vs, dom); }
    static LaurentPoly constant(VarSet vs, const Rat& c, Domain dom = Domain::Integer);
    static LaurentPoly monomial(VarSet vs, const Mono& m, const Rat& c = 1,
                                Domain dom = Domain::Integer);
    /// The i-th variable of the ambient set.
    static LaurentPoly variable(VarSet vs, int i, Domain dom = Domain::Integer);

    VarSet vars() const { return vs_; }
    Domain domain() const { return dom_; }
    int nvars() const { return var_info(vs_).count; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero single term with coefficient +-1 and only laurent-legal exponents.
    bool is_unit_monomial() const;
    bool is_integral() const;  // all coefficients have denominator 1

    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const;

    Rat coeff(const Mono& m) const;
    Rat constant_coeff() const { return coeff(Mono{}); }

    /// Min/max exponent of variable i over the support (0 for the zero poly).
    int32_t min_exp(int i) const;
    int32_t max_exp(int i) const;

    LaurentPoly with_domain(Domain dom) const;

    bool operator==(const LaurentPoly& o) const {
        return vs_ == o.vs_ && terms_.size() == o.terms_.size() &&
               [&] {
                   for (size_t i = 0; i < terms_.size(); ++i)
                       if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
                           return false;
                   return true;
               }();
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;

    /// Integer power; negative exponents only for unit monomials.
    LaurentPoly pow(int64_t n) const;

    /// Build from an unsorted term list (zero coefficients dropped, duplicates merged).
    static LaurentPoly from_terms(VarSet vs, Domain dom, std::vector<Term> ts);

private:
    VarSet vs_;
    Domain dom_;
    std::vector<Term> terms_;  // sorted descending by MonoCmp

    static Domain join(Domain a, Domain b) {
        return (a == Domain::Rational || b == Domain::Rational) ? Domain::Rational
                                                                : Domain::Integer;
    }
    void check_same(const LaurentPoly& o) const;
};

/// Homomorphic substitution: every variable is replaced by its assigned
/// image. A variable carrying a negative exponent must be assigned a
/// unit monomial (single term, coefficient +-1).
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

/// Exact division in the Laurent ring (a domain): returns q with
/// q * den == num exactly, or nullopt when num is not divisible.
/// Throws on den == 0.
std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Evaluate at a point with one nonzero complex coordinate per variable.
Complex eval_complex(const LaurentPoly& p, const std::vector<Complex>& point);

/// Canonical text form: sum of c*t1^a*t2^b terms, ordered by graded-lex
/// on exponents shifted so each variable's minimum is zero.
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string; also accepts rational coefficients c or a/b.
/// Throws Error with a position on malformed input.
LaurentPoly parse_poly(VarSet vs, const std::string& text, Domain dom = Domain::Integer);

} // namespace twk

#endif
