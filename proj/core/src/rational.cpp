#include "kgv/rational.hpp"

#include <stdexcept>

namespace kgv {

Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kgv
