#pragma once

#include "dfl/numeric.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace dfl {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

Sign to_sign(int value);
std::string_view to_string(Sign sign);

/// A point with exact rational coordinates in R^d.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Rational> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

    Point operator-(const Point& other) const;
    Point operator+(const Point& other) const;
    Point scaled(const Rational& factor) const;

    Rational squared_norm() const;
    Rational dot(const Point& other) const;

private:
    std::vector<Rational> coords_;
};

/// Parses a point from numeric tokens, e.g. {"0.5", "1/3"}.
Point make_point(std::initializer_list<const char*> coords);

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant of a square matrix (explicit expansion up to 3x3,
/// fraction-free elimination beyond).
Rational determinant(Matrix m);

/// Sign of det[v1-v0, ..., vd-v0]; expects d+1 points of dimension d.
Sign orientation(std::span<const Point> simplex);
Sign orientation(const Point& a, const Point& b, const Point& c);

/// POSITIVE iff q lies strictly inside the circumcircle of a,b,c (any winding).
Sign in_circle(const Point& a, const Point& b, const Point& c, const Point& q);

/// POSITIVE iff q lies strictly inside the circumsphere of a,b,c,d (any winding).
Sign in_sphere(const Point& a, const Point& b, const Point& c, const Point& d, const Point& q);

/// Unsigned d-volume of a d-simplex. Zero for degenerate input.
Rational simplex_volume(std::span<const Point> simplex);

/// det[v1-v0, ..., vd-v0] / d!
Rational signed_volume(std::span<const Point> simplex);

Point centroid(std::span<const Point> simplex);

/// R^2 of the circumcircle, from a^2 b^2 c^2 / (16 area^2).
Rational circumradius2(const Point& a, const Point& b, const Point& c);

/// Exact circumcenter of a planar triangle.
Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Integral of |x|^2 over the simplex:
///   vol * (sum |v_i|^2 + |sum v_i|^2) / ((d+1)(d+2))
Rational second_moment(std::span<const Point> simplex);

/// Squared k-measure of the k-simplex spanned by k+1 points living in any
/// ambient dimension (Gram determinant over (k!)^2).
Rational squared_measure(std::span<const Point> points);

/// Squared (d-1)-measures of the d+1 facets; facet i omits vertex i.
std::vector<Rational> face_volumes(std::span<const Point> simplex);

}  // namespace dfl
