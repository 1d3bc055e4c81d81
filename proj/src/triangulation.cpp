#include "dfl/triangulation.hpp"

#include <algorithm>
#include <sstream>

namespace dfl {

Simplex::Simplex(std::initializer_list<Index> indices)
    : Simplex(std::span<const Index>(indices.begin(), indices.size()))
{
}

Simplex::Simplex(std::span<const Index> indices)
{
    if (indices.size() > kMaxVertices)
        throw Error(ErrorKind::DimensionMismatch, "simplices above dimension 3 are not stored");
    std::copy(indices.begin(), indices.end(), v_.begin());
    size_ = static_cast<std::uint8_t>(indices.size());
    std::sort(v_.begin(), v_.begin() + size_);
}

bool Simplex::contains(Index i) const noexcept
{
    return std::find(begin(), end(), i) != end();
}

Simplex Simplex::without(Index i) const
{
    std::array<Index, kMaxVertices> out{};
    std::size_t n = 0;
    for (Index v : *this) {
        if (v != i)
            out[n++] = v;
    }
    return Simplex(std::span<const Index>(out.data(), n));
}

Index Simplex::opposite(const Simplex& facet) const
{
    for (Index v : *this) {
        if (!facet.contains(v))
            return v;
    }
    throw Error(ErrorKind::InvalidTriangulation, "facet is not part of simplex " + to_string());
}

std::string Simplex::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
        if (i)
            out += ',';
        out += std::to_string(v_[i]);
    }
    return out;
}

Edge::Edge(Index u, Index v) : a(std::min(u, v)), b(std::max(u, v))
{
    if (u == v)
        throw Error(ErrorKind::InvalidTriangulation, "edge endpoints coincide");
}

Triangulation::Triangulation(SiteSetPtr sites, std::vector<Simplex> simplices)
    : sites_(std::move(sites)), simplices_(std::move(simplices))
{
    if (!sites_)
        throw Error(ErrorKind::InvalidTriangulation, "no site set");
    const std::size_t d = sites_->dim();
    for (const auto& s : simplices_) {
        if (s.size() != d + 1)
            throw Error(ErrorKind::InvalidTriangulation, "simplex " + s.to_string() + " needs d+1 indices");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= sites_->size())
                throw Error(ErrorKind::InvalidTriangulation, "simplex " + s.to_string() + " index out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw Error(ErrorKind::InvalidTriangulation, "simplex " + s.to_string() + " repeats a vertex");
        }
        const auto pts = points_of(s);
        if (orientation(pts) == Sign::Zero)
            throw Error(ErrorKind::InvalidTriangulation, "simplex " + s.to_string() + " is degenerate");
    }
    std::sort(simplices_.begin(), simplices_.end());

    std::vector<std::pair<Simplex, std::size_t>> all;
    all.reserve(simplices_.size() * (d + 1));
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        for (Index v : simplices_[i])
            all.emplace_back(simplices_[i].without(v), i);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
        FacetUse use;
        use.facet = all[i].first;
        std::size_t j = i;
        for (; j < all.size() && all[j].first == use.facet; ++j) {
            if (use.count < 2)
                use.incident[use.count] = all[j].second;
            ++use.count;
        }
        facets_.push_back(use);
        i = j;
    }
}

const FacetUse* Triangulation::find_facet(const Simplex& facet) const
{
    auto it = std::lower_bound(facets_.begin(), facets_.end(), facet,
                               [](const FacetUse& u, const Simplex& f) { return u.facet < f; });
    if (it == facets_.end() || it->facet != facet)
        return nullptr;
    return &*it;
}

std::vector<Point> Triangulation::points_of(const Simplex& s) const
{
    std::vector<Point> out;
    out.reserve(s.size());
    for (Index i : s)
        out.push_back((*sites_)[i]);
    return out;
}

std::string_view to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::VolumeMismatch: return "volume_mismatch";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::OverfullFacet: return "overfull_facet";
    case ViolationKind::DanglingFacet: return "dangling_facet";
    case ViolationKind::MissingSite: return "missing_site";
    }
    return "?";
}

namespace {

Point cross(const Point& u, const Point& v)
{
    return Point{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::vector<Point> separating_axes(std::span<const Point> s)
{
    std::vector<Point> axes;
    if (s.size() == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            const Point e = s[(i + 1) % 3] - s[i];
            axes.push_back(Point{-e[1], e[0]});
        }
    } else {
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<const Point*> f;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i != skip)
                    f.push_back(&s[i]);
            }
            axes.push_back(cross(*f[1] - *f[0], *f[2] - *f[0]));
        }
    }
    return axes;
}

std::vector<Point> edges_of(std::span<const Point> s)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j)
            out.push_back(s[j] - s[i]);
    }
    return out;
}

bool separates(const Point& axis, std::span<const Point> a, std::span<const Point> b)
{
    if (axis.squared_norm() == 0)
        return false;
    Rational amin = axis.dot(a[0]);
    Rational amax = amin;
    for (const auto& p : a.subspan(1)) {
        const Rational v = axis.dot(p);
        amin = std::min(amin, v);
        amax = std::max(amax, v);
    }
    Rational bmin = axis.dot(b[0]);
    Rational bmax = bmin;
    for (const auto& p : b.subspan(1)) {
        const Rational v = axis.dot(p);
        bmin = std::min(bmin, v);
        bmax = std::max(bmax, v);
    }
    return amax <= bmin || bmax <= amin;
}

// All sites lie in one closed half-space of the facet's hyperplane.
bool facet_on_hull(const Triangulation& t, const Simplex& facet)
{
    const SiteSet& sites = t.sites();
    std::vector<Point> probe = t.points_of(facet);
    probe.emplace_back();
    bool pos = false;
    bool neg = false;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        probe.back() = sites[i];
        const Sign s = orientation(probe);
        pos = pos || s == Sign::Positive;
        neg = neg || s == Sign::Negative;
    }
    return !(pos && neg);
}

}  // namespace

bool interiors_intersect(std::span<const Point> a, std::span<const Point> b)
{
    for (const auto& axis : separating_axes(a)) {
        if (separates(axis, a, b))
            return false;
    }
    for (const auto& axis : separating_axes(b)) {
        if (separates(axis, a, b))
            return false;
    }
    if (a.size() == 4) {
        const auto ea = edges_of(a);
        const auto eb = edges_of(b);
        for (const auto& u : ea) {
            for (const auto& v : eb) {
                if (separates(cross(u, v), a, b))
                    return false;
            }
        }
    }
    return true;
}

ValidityReport validate(const Triangulation& t)
{
    ValidityReport report;
    const SiteSet& sites = t.sites();
    const auto simplices = t.simplices();

    Rational total = 0;
    std::vector<std::vector<Point>> pts;
    pts.reserve(simplices.size());
    for (const auto& s : simplices) {
        pts.push_back(t.points_of(s));
        total += simplex_volume(pts.back());
    }
    if (total != sites.hull_volume()) {
        report.violations.push_back({ViolationKind::VolumeMismatch,
                                     "simplex volumes sum to " + to_exact_string(total) + ", hull volume is "
                                         + to_exact_string(sites.hull_volume())});
    }

    for (std::size_t i = 0; i < simplices.size(); ++i) {
        for (std::size_t j = i + 1; j < simplices.size(); ++j) {
            if (interiors_intersect(pts[i], pts[j])) {
                report.violations.push_back(
                    {ViolationKind::Overlap, simplices[i].to_string() + " overlaps " + simplices[j].to_string()});
            }
        }
    }

    for (const auto& use : t.facets()) {
        if (use.count > 2) {
            report.violations.push_back({ViolationKind::OverfullFacet, "facet " + use.facet.to_string() + " shared by "
                                                                           + std::to_string(use.count) + " simplices"});
        } else if (use.count == 1 && !facet_on_hull(t, use.facet)) {
            report.violations.push_back(
                {ViolationKind::DanglingFacet, "facet " + use.facet.to_string() + " is unmatched inside the hull"});
        }
    }

    std::vector<bool> used(sites.size(), false);
    for (const auto& s : simplices) {
        for (Index v : s)
            used[v] = true;
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i])
            report.violations.push_back({ViolationKind::MissingSite, "site " + std::to_string(i) + " unused"});
    }
    return report;
}

void require_valid(const Triangulation& t)
{
    const auto report = validate(t);
    if (!report.valid())
        throw Error(ErrorKind::InvalidTriangulation, report.violations.front().detail);
}

std::array<Index, 2> edge_apexes(const Triangulation& t, Edge e)
{
    if (t.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "edge operations are planar");
    const FacetUse* use = t.find_facet(e.as_facet());
    if (use == nullptr || use->count != 2)
        throw Error(ErrorKind::NotInterior, "edge " + e.as_facet().to_string() + " is not interior");
    const Simplex f = e.as_facet();
    return {t.simplices()[use->incident[0]].opposite(f), t.simplices()[use->incident[1]].opposite(f)};
}

namespace {

bool strictly_convex_quad(const SiteSet& s, Edge e, Index p, Index q)
{
    const int side_p = static_cast<int>(orientation(s[e.a], s[e.b], s[p]));
    const int side_q = static_cast<int>(orientation(s[e.a], s[e.b], s[q]));
    const int side_a = static_cast<int>(orientation(s[p], s[q], s[e.a]));
    const int side_b = static_cast<int>(orientation(s[p], s[q], s[e.b]));
    return side_p * side_q < 0 && side_a * side_b < 0;
}

}  // namespace

bool is_flippable(const Triangulation& t, Edge e)
{
    const FacetUse* use = t.dim() == 2 ? t.find_facet(e.as_facet()) : nullptr;
    if (use == nullptr || use->count != 2)
        return false;
    const auto [p, q] = edge_apexes(t, e);
    return strictly_convex_quad(t.sites(), e, p, q);
}

Triangulation flip_edge(const Triangulation& t, Edge e)
{
    const auto [p, q] = edge_apexes(t, e);
    if (!strictly_convex_quad(t.sites(), e, p, q))
        throw Error(ErrorKind::NotConvex, "quadrilateral around " + e.as_facet().to_string() + " is not strictly convex");
    const Simplex left{e.a, e.b, p};
    const Simplex right{e.a, e.b, q};
    std::vector<Simplex> next;
    next.reserve(t.size());
    for (const auto& s : t.simplices()) {
        if (s != left && s != right)
            next.push_back(s);
    }
    next.push_back(Simplex{p, q, e.a});
    next.push_back(Simplex{p, q, e.b});
    return Triangulation(t.site_ptr(), std::move(next));
}

std::vector<Edge> interior_edges(const Triangulation& t)
{
    if (t.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "edge operations are planar");
    std::vector<Edge> out;
    for (const auto& use : t.facets()) {
        if (use.interior())
            out.emplace_back(use.facet[0], use.facet[1]);
    }
    return out;
}

std::string canonical_key(std::span<const Simplex> simplices)
{
    std::vector<Simplex> sorted(simplices.begin(), simplices.end());
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i)
            key += '|';
        key += sorted[i].to_string();
    }
    return key;
}

std::string canonical_key(const Triangulation& t)
{
    return canonical_key(t.simplices());
}

}  // namespace dfl
