#ifndef KGV_MULTIDEGREE_HPP
#define KGV_MULTIDEGREE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kgv {

// Element of N^k: the degree of a path, one count per color.
// Also used with possibly-negative entries as a Z^k grade.
struct MultiDegree {
    std::vector<int> coords;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> c) : coords(std::move(c)) {}
    static MultiDegree zero(std::size_t k) { return MultiDegree(std::vector<int>(k, 0)); }
    static MultiDegree unit(std::size_t k, std::size_t i);  // e_{i}, 0-based i

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    int total() const;         // sum of entries
    int totalAbs() const;      // sum of |entries| (for grades)
    bool isZero() const;
    bool nonNegative() const;

    bool operator==(const MultiDegree& o) const { return coords == o.coords; }
    bool operator!=(const MultiDegree& o) const { return coords != o.coords; }
    bool operator<(const MultiDegree& o) const { return coords < o.coords; }  // lex, for map keys

    MultiDegree operator+(const MultiDegree& o) const;
    MultiDegree operator-(const MultiDegree& o) const;

    // componentwise partial order
    bool dominatedBy(const MultiDegree& o) const;

    MultiDegree join(const MultiDegree& o) const;  // componentwise max

    std::string str() const;  // "(1,0,2)"
};

}  // namespace kgv

#endif  // KGV_MULTIDEGREE_HPP
