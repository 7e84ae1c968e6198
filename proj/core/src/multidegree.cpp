#include "kgv/multidegree.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kgv {

MultiDegree MultiDegree::unit(std::size_t k, std::size_t i) {
    MultiDegree d = zero(k);
    d.coords.at(i) = 1;
    return d;
}

int MultiDegree::total() const {
    int s = 0;
    for (int c : coords) s += c;
    return s;
}

int MultiDegree::totalAbs() const {
    int s = 0;
    for (int c : coords) s += std::abs(c);
    return s;
}

bool MultiDegree::isZero() const {
    for (int c : coords)
        if (c != 0) return false;
    return true;
}

bool MultiDegree::nonNegative() const {
    for (int c : coords)
        if (c < 0) return false;
    return true;
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("degree length mismatch");
    MultiDegree r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("degree length mismatch");
    MultiDegree r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

bool MultiDegree::dominatedBy(const MultiDegree& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("degree length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] > o.coords[i]) return false;
    return true;
}

MultiDegree MultiDegree::join(const MultiDegree& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("degree length mismatch");
    MultiDegree r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (o.coords[i] > r.coords[i]) r.coords[i] = o.coords[i];
    return r;
}

std::string MultiDegree::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    s += ")";
    return s;
}

}  // namespace kgv
