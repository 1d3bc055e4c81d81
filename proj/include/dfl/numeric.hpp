#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/float128.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfl {

/// Exact scalar used for every coordinate, predicate and polynomial measure.
using Rational = mpq_class;

/// Software quad precision (113-bit significand) for quantities that need
/// square roots or transcendental functions.
using Real = boost::multiprecision::float128;

/// Relative tolerance used whenever two non-exact values are compared.
inline constexpr double kRelativeTolerance = 1e-12;

enum class ErrorKind {
    DimensionMismatch,
    DegenerateTriangle,
    DegenerateTetrahedron,
    DegenerateSimplex,
    InvalidSiteSet,
    InvalidTriangulation,
    NotInterior,
    NotConvex,
    Degenerate,
    LemmaViolation,
    TooFewSites,
    AllCollinear,
    TooManySites,
    BadExponent,
    SelfIntersecting,
    ZeroArea,
    HeightFieldMismatch,
    DegenerateConfiguration,
    SingleTriangulation,
    BadParams,
    ParseError,
    FileNotFound,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parses "3", "-0.25", "1.5e-3" or "7/9" into an exact rational.
/// Throws Error(ParseError) on malformed text.
Rational parse_rational(std::string_view text);

/// Terminating decimal expansion when one exists ("0.125"), otherwise "p/q".
std::string to_exact_string(const Rational& value);

/// Correctly scaled conversion keeping ~112 significant bits.
Real to_real(const Rational& value);
Real to_real(const mpz_class& value);

/// Shortest round-trippable-ish decimal text for a Real (34 significant digits).
std::string to_string(const Real& value);

int sign_of(const Rational& value);

}  // namespace dfl
