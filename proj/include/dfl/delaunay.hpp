#pragma once

#include "dfl/triangulation.hpp"

#include <optional>

namespace dfl {

struct BuildStats {
    std::size_t flips = 0;
    /// Lawson flips whose exact V decrease was confirmed.
    std::size_t v_decrease_checks = 0;
};

/// Planar Delaunay triangulation: lexicographic sweep triangulation followed
/// by Lawson flips to a fixpoint. Cocircular edges are left unflipped.
/// Every flip is checked to strictly decrease V; a failure throws
/// std::logic_error.
Triangulation build_dt(const SiteSetPtr& sites, BuildStats* stats = nullptr);

struct DelaunayCheck {
    bool delaunay = true;
    /// Interior facet whose opposite vertex lies strictly inside the
    /// neighbouring circumcircle / circumsphere.
    std::optional<Simplex> witness;
};

/// Empty-circle (d=2) / empty-sphere (d=3) test over all interior facets.
DelaunayCheck is_delaunay(const Triangulation& t);

struct DegeneracyReport {
    std::vector<std::vector<Index>> collinear;    // triples
    std::vector<std::vector<Index>> cocircular;   // planar quadruples
    std::vector<std::vector<Index>> coplanar;     // spatial quadruples
    std::vector<std::vector<Index>> cospherical;  // spatial quintuples

    bool empty() const noexcept
    {
        return collinear.empty() && cocircular.empty() && coplanar.empty() && cospherical.empty();
    }
};

/// Brute force over all small subsets; meant for n <= 16.
DegeneracyReport degeneracy_scan(const SiteSet& sites);

/// Cheaper yes/no variant of degeneracy_scan that stops at the first hit.
bool in_general_position(const SiteSet& sites);

}  // namespace dfl
