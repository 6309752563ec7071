#ifndef TWK_NUMERIC_HPP
#define TWK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace twk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Complex = std::complex<double>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

/// Errors raised when an operation's preconditions are violated.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a Groebner computation exceeds the configured step limit.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace twk

#endif
