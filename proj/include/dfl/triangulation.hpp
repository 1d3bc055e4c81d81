#pragma once

#include "dfl/sites.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace dfl {

/// Up to four site indices, kept sorted. Used for simplices (d+1 indices)
/// and their facets (d indices).
class Simplex {
public:
    static constexpr std::size_t kMaxVertices = 4;

    Simplex() = default;
    Simplex(std::initializer_list<Index> indices);
    explicit Simplex(std::span<const Index> indices);

    std::size_t size() const noexcept { return size_; }
    Index operator[](std::size_t i) const { return v_[i]; }
    const Index* begin() const noexcept { return v_.data(); }
    const Index* end() const noexcept { return v_.data() + size_; }

    bool contains(Index i) const noexcept;
    /// The facet obtained by dropping vertex `i` (must be present).
    Simplex without(Index i) const;
    /// First vertex of *this not in `facet`.
    Index opposite(const Simplex& facet) const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

    std::string to_string() const;

private:
    std::array<Index, kMaxVertices> v_{};
    std::uint8_t size_ = 0;
};

/// Planar edge between two distinct sites, stored with a < b.
struct Edge {
    Index a = 0;
    Index b = 0;

    Edge() = default;
    Edge(Index u, Index v);

    Simplex as_facet() const { return Simplex{a, b}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct FacetUse {
    Simplex facet;
    std::uint32_t count = 0;
    std::array<std::size_t, 2> incident{};  // first two incident simplices

    bool interior() const noexcept { return count == 2; }
};

/// Immutable set of d-simplices over a shared site set, with facet
/// adjacency. Construction rejects malformed or zero-volume simplices; full
/// tiling validity is checked by validate().
class Triangulation {
public:
    Triangulation(SiteSetPtr sites, std::vector<Simplex> simplices);

    const SiteSet& sites() const noexcept { return *sites_; }
    const SiteSetPtr& site_ptr() const noexcept { return sites_; }
    std::size_t dim() const noexcept { return sites_->dim(); }

    std::span<const Simplex> simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    std::span<const FacetUse> facets() const noexcept { return facets_; }
    const FacetUse* find_facet(const Simplex& facet) const;

    std::vector<Point> points_of(const Simplex& s) const;

private:
    SiteSetPtr sites_;
    std::vector<Simplex> simplices_;
    std::vector<FacetUse> facets_;
};

enum class ViolationKind {
    VolumeMismatch,
    Overlap,
    OverfullFacet,
    DanglingFacet,
    MissingSite,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidityReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

ValidityReport validate(const Triangulation& t);

/// Throws Error(InvalidTriangulation) listing the first violation.
void require_valid(const Triangulation& t);

/// True iff the closed simplices have intersecting interiors (exact
/// separating-axis test; d in {2,3}).
bool interiors_intersect(std::span<const Point> a, std::span<const Point> b);

/// Replaces interior edge e by the other diagonal of its quadrilateral.
Triangulation flip_edge(const Triangulation& t, Edge e);

/// True when e is interior and its quadrilateral is strictly convex.
bool is_flippable(const Triangulation& t, Edge e);

/// The two apexes of the triangles incident on interior edge e.
std::array<Index, 2> edge_apexes(const Triangulation& t, Edge e);

std::vector<Edge> interior_edges(const Triangulation& t);

/// "i,j,k|..." over sorted simplices; empty string for no simplices.
std::string canonical_key(const Triangulation& t);
std::string canonical_key(std::span<const Simplex> simplices);

}  // namespace dfl
