#ifndef TWK_GROEBNER_HPP
#define TWK_GROEBNER_HPP

#include "twk/laurent.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace twk::gb {

/// Step limit for a single basis computation (number of S-pair
/// reductions).  Default 1e6; the CLI maps TWK_STEP_LIMIT onto this.
void set_step_limit(uint64_t limit);
uint64_t step_limit();

/// Bivariate polynomial over Q in the variables (s1, s2), graded order
/// (degree first, then s1-exponent); in two variables this coincides
/// with graded reverse lex.
struct BiTerm {
    int32_t a = 0, b = 0;
    Rat c;
};

struct BiPoly {
    std::vector<BiTerm> terms;  // sorted descending, no zero coefficients

    bool is_zero() const { return terms.empty(); }
    const BiTerm& lt() const;
    int64_t degree() const { return terms.empty() ? -1 : int64_t(terms[0].a) + terms[0].b; }

    static BiPoly zero() { return {}; }
    static BiPoly constant(const Rat& c);
    static BiPoly monomial(int32_t a, int32_t b, const Rat& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly mul_term(int32_t a, int32_t b, const Rat& c) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const;

    /// Scale to an integer polynomial with content 1 and positive leading
    /// coefficient.
    BiPoly primitive() const;
    /// Scale so the leading coefficient is 1.
    BiPoly monic() const;

    /// Evaluate at a rational point (for numeric rank spot-checks).
    double eval(double x, double y) const;
};

/// Conversion to/from the S1S2 Laurent carrier (exponents must be >= 0).
BiPoly from_laurent(const LaurentPoly& p);
LaurentPoly to_laurent(const BiPoly& p, VarSet vs = VarSet::S1S2);

/// Element of a free module Q[s1,s2]^r under the position-over-term
/// order (position 0 highest).
struct ModVec {
    std::vector<BiPoly> comp;

    int rank() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;
    /// position of the leading term; -1 when zero
    int lead_pos() const;

    static ModVec zero(int rank);
    static ModVec unit(int rank, int pos);

    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec mul_term(int32_t a, int32_t b, const Rat& c) const;
    ModVec mul(const BiPoly& p) const;
    bool operator==(const ModVec& o) const;
    ModVec primitive() const;
};

/// Finitely generated submodule of Q[s1,s2]^r with a cached reduced
/// Groebner basis (POT order, graded order on monomial parts).  Rank 1
/// doubles as the ideal case.  Completed values are immutable and can
/// be shared between threads.
class Submodule {
public:
    Submodule(int rank, std::vector<ModVec> gens);

    int rank() const { return rank_; }
    const std::vector<ModVec>& generators() const { return gens_; }
    /// Reduced Groebner basis (computed on first use, then cached).
    const std::vector<ModVec>& basis() const;

    /// Fully reduced normal form against the basis.
    ModVec normal_form(const ModVec& v) const;
    bool contains(const ModVec& v) const;
    bool contains(const Submodule& other) const;
    /// Reduced bases are unique, so equality of submodules is equality
    /// of reduced bases.
    bool equals(const Submodule& other) const;

    bool is_zero_module() const;

private:
    int rank_;
    std::vector<ModVec> gens_;
    mutable std::optional<std::vector<ModVec>> basis_;
};

/// Ideal of Q[s1,s2]; thin wrapper over the rank-1 module machinery.
class Ideal {
public:
    explicit Ideal(std::vector<BiPoly> gens);

    const std::vector<BiPoly>& generators() const { return gens_; }
    std::vector<BiPoly> reduced_basis() const;
    BiPoly normal_form(const BiPoly& p) const;
    bool contains(const BiPoly& p) const;
    bool contains(const Ideal& other) const;
    bool equals(const Ideal& other) const;
    bool is_unit_ideal() const;

    const Submodule& module() const { return mod_; }

private:
    std::vector<BiPoly> gens_;
    Submodule mod_;
};

/// Generating set of the syzygy module of the columns: all v with
/// sum_j v_j * col_j = 0.  Computed from a module Groebner basis of the
/// graph module {(col_j, e_j)} under an order eliminating the first
/// block, which realises Schreyer-style syzygy extraction.
Submodule kernel(const std::vector<ModVec>& columns, int domain_rank);

/// Module quotient (N : f) = { v | f v in N }.
Submodule colon(const Submodule& n, const BiPoly& f);
Ideal colon(const Ideal& i, const BiPoly& f);

/// Saturation N : f^infinity by iterated colon until the reduced basis
/// stabilises.
Submodule saturate(const Submodule& n, const BiPoly& f);
Ideal saturate(const Ideal& i, const BiPoly& f);

/// Number of standard monomials of F^r / N, or nullopt for "infinite".
std::optional<uint64_t> quotient_dimension(const Submodule& n);
std::optional<uint64_t> quotient_dimension(const Ideal& i);

/// Express v over the generators of n: returns a with v = sum a_j gen_j,
/// or nullopt when v is not in n.
std::optional<std::vector<BiPoly>> lift(const Submodule& n, const ModVec& v);

} // namespace twk::gb

#endif
