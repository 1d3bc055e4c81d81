#include "dfl/sites.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dfl {

namespace {

std::size_t affine_rank(std::span<const Point> points)
{
    Matrix m;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Point e = points[i] - points[0];
        m.emplace_back(e.coords().begin(), e.coords().end());
    }
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t row = rank + 1; row < m.size(); ++row) {
            if (m[row][col] == 0)
                continue;
            const Rational f = m[row][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k)
                m[row][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

Rational planar_hull_area(std::span<const Point> points, std::span<const Index> cycle)
{
    Rational twice = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point& p = points[cycle[i]];
        const Point& q = points[cycle[(i + 1) % cycle.size()]];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    return abs(twice) / 2;
}

// Brute-force supporting planes; each hull face polygon is fanned and coned
// from an interior point.
Rational spatial_hull_volume(std::span<const Point> points, const Point& inside)
{
    const std::size_t n = points.size();
    std::set<std::vector<Index>> seen;
    Rational volume = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Point& a = points[i];
                const Point& b = points[j];
                const Point& c = points[k];
                const Point ab = b - a;
                const Point ac = c - a;
                const Point normal{ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2],
                                   ab[0] * ac[1] - ab[1] * ac[0]};
                if (normal.squared_norm() == 0)
                    continue;
                bool pos = false;
                bool neg = false;
                std::vector<Index> on_plane;
                for (std::size_t l = 0; l < n; ++l) {
                    const int s = sgn(normal.dot(points[l] - a));
                    if (s > 0)
                        pos = true;
                    else if (s < 0)
                        neg = true;
                    else
                        on_plane.push_back(static_cast<Index>(l));
                }
                if (pos && neg)
                    continue;
                if (!seen.insert(on_plane).second)
                    continue;

                // Project onto the coordinate plane where the normal is largest.
                std::size_t drop = 0;
                for (std::size_t axis = 1; axis < 3; ++axis) {
                    if (abs(normal[axis]) > abs(normal[drop]))
                        drop = axis;
                }
                std::vector<Point> projected;
                for (Index idx : on_plane) {
                    std::vector<Rational> c2;
                    for (std::size_t axis = 0; axis < 3; ++axis) {
                        if (axis != drop)
                            c2.push_back(points[idx][axis]);
                    }
                    projected.emplace_back(std::move(c2));
                }
                const std::vector<Index> cycle = planar_hull_cycle(projected);
                for (std::size_t t = 1; t + 1 < cycle.size(); ++t) {
                    const Point tet[] = {inside, points[on_plane[cycle[0]]], points[on_plane[cycle[t]]],
                                         points[on_plane[cycle[t + 1]]]};
                    volume += simplex_volume(tet);
                }
            }
        }
    }
    return volume;
}

}  // namespace

std::vector<Index> planar_hull_cycle(std::span<const Point> points)
{
    std::vector<Index> order(points.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        const Point& p = points[a];
        const Point& q = points[b];
        if (p[0] != q[0])
            return p[0] < q[0];
        return p[1] < q[1];
    });
    if (order.size() < 3)
        return order;

    // Andrew's monotone chain, popping only on strict right turns so that
    // collinear boundary sites stay on the cycle.
    std::vector<Index> lower;
    std::vector<Index> upper;
    for (Index idx : order) {
        while (lower.size() >= 2
               && orientation(points[lower[lower.size() - 2]], points[lower.back()], points[idx]) == Sign::Negative)
            lower.pop_back();
        lower.push_back(idx);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        while (upper.size() >= 2
               && orientation(points[upper[upper.size() - 2]], points[upper.back()], points[*it]) == Sign::Negative)
            upper.pop_back();
        upper.push_back(*it);
    }
    // All points collinear: both chains are the whole run.
    if (lower.size() == points.size() && upper.size() == points.size()) {
        bool collinear = true;
        for (std::size_t i = 2; i < order.size() && collinear; ++i)
            collinear = orientation(points[order[0]], points[order[1]], points[order[i]]) == Sign::Zero;
        if (collinear)
            return order;
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

SiteSet::SiteSet(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels))
{
    if (points_.empty())
        throw Error(ErrorKind::InvalidSiteSet, "no sites");
    dim_ = points_[0].dim();
    if (dim_ < 2)
        throw Error(ErrorKind::DimensionMismatch, "sites must have dimension >= 2");
    for (const auto& p : points_) {
        if (p.dim() != dim_)
            throw Error(ErrorKind::DimensionMismatch, "sites differ in dimension");
    }
    if (!labels_.empty() && labels_.size() != points_.size())
        throw Error(ErrorKind::InvalidSiteSet, "label count differs from site count");
    if (points_.size() < dim_ + 1)
        throw Error(ErrorKind::TooFewSites, "need at least d+1 sites");

    std::vector<const Point*> sorted;
    for (const auto& p : points_)
        sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) {
        return std::lexicographical_compare(a->coords().begin(), a->coords().end(), b->coords().begin(),
                                            b->coords().end());
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (*sorted[i] == *sorted[i - 1])
            throw Error(ErrorKind::InvalidSiteSet, "duplicate site");
    }
    if (affine_rank(points_) < dim_) {
        throw Error(dim_ == 2 ? ErrorKind::AllCollinear : ErrorKind::InvalidSiteSet,
                    "sites do not span R^" + std::to_string(dim_));
    }

    interior_ = centroid(points_);
    if (dim_ == 2) {
        hull_cycle_ = planar_hull_cycle(points_);
        hull_volume_ = planar_hull_area(points_, hull_cycle_);
    } else if (dim_ == 3) {
        hull_volume_ = spatial_hull_volume(points_, interior_);
    }
}

const Rational& SiteSet::hull_volume() const
{
    if (!hull_volume_)
        throw Error(ErrorKind::DimensionMismatch, "hull volume only available for d in {2,3}");
    return *hull_volume_;
}

std::span<const Index> SiteSet::hull_cycle() const
{
    if (dim_ != 2)
        throw Error(ErrorKind::DimensionMismatch, "hull cycle is planar only");
    return hull_cycle_;
}

SiteSetPtr make_sites(std::vector<Point> points)
{
    return std::make_shared<const SiteSet>(std::move(points));
}

}  // namespace dfl
