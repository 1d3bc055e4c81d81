#include "dfl/geom.hpp"

#include <utility>

namespace dfl {

Sign to_sign(int value)
{
    return value > 0 ? Sign::Positive : (value < 0 ? Sign::Negative : Sign::Zero);
}

std::string_view to_string(Sign sign)
{
    switch (sign) {
    case Sign::Negative: return "NEGATIVE";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POSITIVE";
    }
    return "?";
}

Point Point::operator-(const Point& other) const
{
    if (dim() != other.dim())
        throw Error(ErrorKind::DimensionMismatch, "point dimensions differ");
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] - other.coords_[i];
    return Point(std::move(out));
}

Point Point::operator+(const Point& other) const
{
    if (dim() != other.dim())
        throw Error(ErrorKind::DimensionMismatch, "point dimensions differ");
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] + other.coords_[i];
    return Point(std::move(out));
}

Point Point::scaled(const Rational& factor) const
{
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = coords_[i] * factor;
    return Point(std::move(out));
}

Rational Point::squared_norm() const
{
    Rational s = 0;
    for (const auto& c : coords_)
        s += c * c;
    return s;
}

Rational Point::dot(const Point& other) const
{
    if (dim() != other.dim())
        throw Error(ErrorKind::DimensionMismatch, "point dimensions differ");
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        s += coords_[i] * other.coords_[i];
    return s;
}

Point make_point(std::initializer_list<const char*> coords)
{
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const char* c : coords)
        out.push_back(parse_rational(c));
    return Point(std::move(out));
}

Rational determinant(Matrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    }
    switch (n) {
    case 0: return 1;
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default: break;
    }

    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

namespace {

std::size_t checked_simplex_dim(std::span<const Point> simplex)
{
    if (simplex.empty())
        throw Error(ErrorKind::DimensionMismatch, "empty simplex");
    const std::size_t d = simplex[0].dim();
    if (simplex.size() != d + 1)
        throw Error(ErrorKind::DimensionMismatch, "a simplex in R^d needs d+1 vertices");
    for (const auto& p : simplex) {
        if (p.dim() != d)
            throw Error(ErrorKind::DimensionMismatch, "simplex vertices differ in dimension");
    }
    return d;
}

Matrix edge_matrix(std::span<const Point> simplex)
{
    Matrix m;
    m.reserve(simplex.size() - 1);
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        const Point e = simplex[i] - simplex[0];
        m.emplace_back(e.coords().begin(), e.coords().end());
    }
    return m;
}

Rational factorial(std::size_t k)
{
    Rational f = 1;
    for (std::size_t i = 2; i <= k; ++i)
        f *= static_cast<unsigned long>(i);
    return f;
}

// Determinant of rows (p - q, |p - q|^2); sign convention fixed by the callers.
Rational lifted_determinant(std::span<const Point> pts, const Point& q)
{
    Matrix m;
    for (const auto& p : pts) {
        const Point e = p - q;
        std::vector<Rational> row(e.coords().begin(), e.coords().end());
        row.push_back(e.squared_norm());
        m.push_back(std::move(row));
    }
    return determinant(std::move(m));
}

}  // namespace

Sign orientation(std::span<const Point> simplex)
{
    checked_simplex_dim(simplex);
    return to_sign(sgn(determinant(edge_matrix(simplex))));
}

Sign orientation(const Point& a, const Point& b, const Point& c)
{
    const Point pts[] = {a, b, c};
    return orientation(pts);
}

Sign in_circle(const Point& a, const Point& b, const Point& c, const Point& q)
{
    const Point pts[] = {a, b, c};
    const Sign o = orientation(pts);
    if (q.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "in_circle expects planar points");
    if (o == Sign::Zero)
        throw Error(ErrorKind::DegenerateTriangle, "in_circle on collinear triangle");
    return to_sign(sgn(lifted_determinant(pts, q)) * static_cast<int>(o));
}

Sign in_sphere(const Point& a, const Point& b, const Point& c, const Point& d, const Point& q)
{
    const Point pts[] = {a, b, c, d};
    const Sign o = orientation(pts);
    if (q.dim() != 3)
        throw Error(ErrorKind::DimensionMismatch, "in_sphere expects points in R^3");
    if (o == Sign::Zero)
        throw Error(ErrorKind::DegenerateTetrahedron, "in_sphere on coplanar tetrahedron");
    // In R^3 the lifted determinant is negative for interior points of a
    // positively oriented tetrahedron.
    return to_sign(-sgn(lifted_determinant(pts, q)) * static_cast<int>(o));
}

Rational signed_volume(std::span<const Point> simplex)
{
    const std::size_t d = checked_simplex_dim(simplex);
    return determinant(edge_matrix(simplex)) / factorial(d);
}

Rational simplex_volume(std::span<const Point> simplex)
{
    return abs(signed_volume(simplex));
}

Point centroid(std::span<const Point> simplex)
{
    if (simplex.empty())
        throw Error(ErrorKind::DimensionMismatch, "centroid of nothing");
    Point sum = simplex[0];
    for (std::size_t i = 1; i < simplex.size(); ++i)
        sum = sum + simplex[i];
    return sum.scaled(Rational(1, static_cast<unsigned long>(simplex.size())));
}

Rational circumradius2(const Point& a, const Point& b, const Point& c)
{
    const Point pts[] = {a, b, c};
    const Rational twice_area = signed_volume(pts) * 2;
    if (twice_area == 0)
        throw Error(ErrorKind::DegenerateTriangle, "circumradius of a collinear triangle");
    const Rational ab = (a - b).squared_norm();
    const Rational bc = (b - c).squared_norm();
    const Rational ca = (c - a).squared_norm();
    // R = abc / (4 area) = abc / (2 * twice_area)
    return ab * bc * ca / (4 * twice_area * twice_area);
}

Point circumcenter(const Point& a, const Point& b, const Point& c)
{
    const Point ba = b - a;
    const Point ca = c - a;
    const Rational denom = 2 * (ba[0] * ca[1] - ba[1] * ca[0]);
    if (denom == 0)
        throw Error(ErrorKind::DegenerateTriangle, "circumcenter of a collinear triangle");
    const Rational b2 = ba.squared_norm();
    const Rational c2 = ca.squared_norm();
    Rational ux = (ca[1] * b2 - ba[1] * c2) / denom;
    Rational uy = (ba[0] * c2 - ca[0] * b2) / denom;
    return Point{a[0] + ux, a[1] + uy};
}

Rational second_moment(std::span<const Point> simplex)
{
    const std::size_t d = checked_simplex_dim(simplex);
    const Rational vol = simplex_volume(simplex);
    if (vol == 0)
        return 0;
    Rational norms = 0;
    Point sum = simplex[0];
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        norms += simplex[i].squared_norm();
        if (i > 0)
            sum = sum + simplex[i];
    }
    const auto dd = static_cast<unsigned long>(d);
    return vol * (norms + sum.squared_norm()) / Rational((dd + 1) * (dd + 2));
}

Rational squared_measure(std::span<const Point> points)
{
    if (points.size() < 2)
        return points.empty() ? Rational(0) : Rational(1);
    const std::size_t k = points.size() - 1;
    std::vector<Point> edges;
    edges.reserve(k);
    for (std::size_t i = 1; i < points.size(); ++i)
        edges.push_back(points[i] - points[0]);
    Matrix gram(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            gram[i][j] = edges[i].dot(edges[j]);
            gram[j][i] = gram[i][j];
        }
    }
    const Rational f = factorial(k);
    return determinant(std::move(gram)) / (f * f);
}

std::vector<Rational> face_volumes(std::span<const Point> simplex)
{
    const std::size_t d = checked_simplex_dim(simplex);
    if (d != 2 && d != 3)
        throw Error(ErrorKind::DimensionMismatch, "face_volumes supports d in {2,3}");
    std::vector<Rational> out;
    out.reserve(d + 1);
    std::vector<Point> facet;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        facet.clear();
        for (std::size_t i = 0; i <= d; ++i) {
            if (i != skip)
                facet.push_back(simplex[i]);
        }
        out.push_back(squared_measure(facet));
    }
    return out;
}

}  // namespace dfl
