#ifndef TWK_UNIVAR_HPP
#define TWK_UNIVAR_HPP

#include "twk/laurent.hpp"

#include <vector>

namespace twk {

/// Dense univariate polynomial over Q; coefficient of x^i at index i.
/// Small helper layer for the SU(2) saturation and resultant work.
struct UniPoly {
    std::vector<Rat> c;

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    Rat lead() const;
    void trim();

    static UniPoly from_laurent(const LaurentPoly& p);  // nonneg exponents only
    LaurentPoly to_laurent(VarSet vs) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(const Rat& k) const;
    /// Division with remainder over Q.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& den) const;
    UniPoly pow(unsigned n) const;
    bool operator==(const UniPoly& o) const;
};

/// Monic gcd over Q.
UniPoly gcd_q(UniPoly f, UniPoly g);

/// Resultant of two integer polynomials (Sylvester determinant by
/// fraction-free Bareiss elimination); Res(f, c) = c^deg f for constant c.
Int resultant_z(const UniPoly& f, const UniPoly& g);

/// Clear denominators and divide by the content: returns the primitive
/// integer polynomial with positive leading coefficient and the
/// rational unit u with input = u * primitive.
std::pair<UniPoly, Rat> primitive_part(const UniPoly& f);

} // namespace twk

#endif
