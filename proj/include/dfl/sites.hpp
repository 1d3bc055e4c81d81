#pragma once

#include "dfl/geom.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dfl {

using Index = std::uint32_t;

/// Immutable, validated set of sites: pairwise distinct, at least d+1 of
/// them, affinely spanning R^d.
class SiteSet {
public:
    explicit SiteSet(std::vector<Point> points, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    /// Exact volume of the convex hull (d in {2,3}).
    const Rational& hull_volume() const;

    /// Planar only: hull boundary in counter-clockwise order, including
    /// sites lying in the relative interior of hull edges.
    std::span<const Index> hull_cycle() const;

    /// A point strictly inside the hull (the mean of all sites).
    const Point& interior_point() const noexcept { return interior_; }

private:
    std::vector<Point> points_;
    std::vector<std::string> labels_;
    std::size_t dim_ = 0;
    Point interior_;
    std::optional<Rational> hull_volume_;
    std::vector<Index> hull_cycle_;
};

using SiteSetPtr = std::shared_ptr<const SiteSet>;

SiteSetPtr make_sites(std::vector<Point> points);

/// Counter-clockwise hull boundary of planar points (collinear boundary
/// sites kept). Input indices refer to `points`.
std::vector<Index> planar_hull_cycle(std::span<const Point> points);

}  // namespace dfl
