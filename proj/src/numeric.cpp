#include "dfl/numeric.hpp"

#include <cctype>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace dfl {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::InvalidSiteSet: return "InvalidSiteSet";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::TooFewSites: return "TooFewSites";
    case ErrorKind::AllCollinear: return "AllCollinear";
    case ErrorKind::TooManySites: return "TooManySites";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::ZeroArea: return "ZeroArea";
    case ErrorKind::HeightFieldMismatch: return "HeightFieldMismatch";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::SingleTriangulation: return "SingleTriangulation";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileNotFound: return "FileNotFound";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

namespace {

mpz_class parse_digits(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        return 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, "not a number: '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long exponent)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view whole = text;
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty number");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_digits(text.substr(0, slash), whole);
        mpz_class den = parse_digits(text.substr(slash + 1), whole);
        if (slash == 0 || slash + 1 == text.size() || den == 0)
            throw Error(ErrorKind::ParseError, "bad fraction: '" + std::string(whole) + "'");
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (exp_text.empty() || exp_text.size() > 6)
            throw Error(ErrorKind::ParseError, "bad exponent: '" + std::string(whole) + "'");
        exponent = parse_digits(exp_text, whole).get_si();
        if (exp_negative)
            exponent = -exponent;
        text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw Error(ErrorKind::ParseError, "not a number: '" + std::string(whole) + "'");

    mpz_class mantissa = parse_digits(std::string(int_part) + std::string(frac_part), whole);
    exponent -= static_cast<long>(frac_part.size());

    Rational r;
    if (exponent >= 0)
        r = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    else
        r = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_exact_string(const Rational& value)
{
    mpz_class den = value.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1)
        return value.get_str();

    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
    const bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string digits = scaled.get_str();
    if (places > 0) {
        if (digits.size() <= places)
            digits.insert(0, places - digits.size() + 1, '0');
        digits.insert(digits.size() - places, ".");
    }
    return negative ? "-" + digits : digits;
}

Real to_real(const mpz_class& value)
{
    if (value == 0)
        return Real(0);
    mpz_class magnitude = abs(value);
    const long bits = static_cast<long>(mpz_sizeinbase(magnitude.get_mpz_t(), 2));
    long shift = 0;
    if (bits > 120) {
        shift = bits - 120;
        magnitude >>= static_cast<mp_bitcnt_t>(shift);
    }
    // Two 60-bit chunks hold the remaining (at most 120) bits.
    mpz_class low = magnitude & ((mpz_class(1) << 60) - 1);
    mpz_class high = magnitude >> 60;
    Real r = Real(static_cast<std::uint64_t>(mpz_get_ui(high.get_mpz_t())));
    r = ldexp(r, 60) + Real(static_cast<std::uint64_t>(mpz_get_ui(low.get_mpz_t())));
    r = ldexp(r, static_cast<int>(shift));
    return value < 0 ? Real(-r) : r;
}

Real to_real(const Rational& value)
{
    return to_real(mpz_class(value.get_num())) / to_real(mpz_class(value.get_den()));
}

std::string to_string(const Real& value)
{
    std::ostringstream os;
    os << std::setprecision(34) << value;
    return os.str();
}

int sign_of(const Rational& value)
{
    return sgn(value);
}

}  // namespace dfl
