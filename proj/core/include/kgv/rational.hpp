#ifndef KGV_RATIONAL_HPP
#define KGV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace kgv {

// Exact rational scalar. All algebra in this library is done with these;
// there are no floating point numbers and no tolerances anywhere.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "n", "-n" or "n/d". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace kgv

#endif  // KGV_RATIONAL_HPP
