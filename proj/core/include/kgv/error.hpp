#ifndef KGV_ERROR_HPP
#define KGV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kgv {

// Error classes surfaced by the library. Validation failures carry the
// offending ids in the message so the CLI can render them verbatim.
enum class ErrorKind {
    MalformedInput,       // unparseable document / structurally broken square
    SourceViolation,      // vertex receives no edge of some color
    MissingSquare,        // composable bicolored pair not covered by a square
    AmbiguousSquare,      // composable bicolored pair covered twice
    NotBijective,         // square flip fails to be a bijection
    CubeFailure,          // tricolored rewrite routes disagree
    BadSplit,             // factorization split does not sum to the degree
    GraphMismatch,        // operands live over different graphs
    LevelTooLow,          // expansion level below a monomial degree
    LevelTooLarge,        // census level exceeds the combinatorial guard
    ShapeMismatch,        // module elements with incompatible shapes
    ColorOutOfRange,      // generator color not allowed at this ladder stage
    GenerationExhausted,  // fuzz retry budget exceeded
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace kgv

#endif  // KGV_ERROR_HPP
