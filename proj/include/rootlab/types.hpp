#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rootlab {

using Int = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator; arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};
struct ZeroVector : std::runtime_error {
    ZeroVector() : std::runtime_error("zero vector has no canonical normal") {}
};
struct InvalidRank : std::runtime_error {
    explicit InvalidRank(const std::string& what) : std::runtime_error(what) {}
};
struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};
struct NotARoot : std::invalid_argument {
    NotARoot() : std::invalid_argument("vector is not a root of the system") {}
};
struct NonSimpleLetter : std::invalid_argument {
    NonSimpleLetter() : std::invalid_argument("word letter is not a simple root") {}
};
struct NotAFacetIndex : std::invalid_argument {
    explicit NotAFacetIndex(const std::string& what) : std::invalid_argument(what) {}
};
struct RankTooLargeForFullArrangement : std::invalid_argument {
    RankTooLargeForFullArrangement()
        : std::invalid_argument("full arrangement enumeration is capped at rank 6") {}
};
struct GeneratorSetTooLarge : std::invalid_argument {
    GeneratorSetTooLarge()
        : std::invalid_argument("exhaustive subset search is capped at 20 generators") {}
};
struct WrongType : std::invalid_argument {
    explicit WrongType(const std::string& what) : std::invalid_argument(what) {}
};
struct NotAZonotopeType : std::invalid_argument {
    explicit NotAZonotopeType(const std::string& what) : std::invalid_argument(what) {}
};
struct MissingWitnessRow : std::invalid_argument {
    explicit MissingWitnessRow(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rootlab
