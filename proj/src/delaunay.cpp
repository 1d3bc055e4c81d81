#include "dfl/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dfl {

namespace {

using Tri = std::array<Index, 3>;

// Mutable working mesh for the Lawson loop; converted to an immutable
// Triangulation once at the end.
class WorkMesh {
public:
    explicit WorkMesh(const SiteSet& sites) : sites_(sites) {}

    void add(Index a, Index b, Index c)
    {
        const int id = static_cast<int>(tris_.size());
        tris_.push_back({a, b, c});
        alive_.push_back(true);
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}})
            edges_[Edge(u, v)].push_back(id);
    }

    void remove(int id)
    {
        alive_[id] = false;
        const Tri& t = tris_[id];
        for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}}) {
            auto& list = edges_[Edge(u, v)];
            list.erase(std::find(list.begin(), list.end(), id));
        }
    }

    std::vector<Edge> interior_edges() const
    {
        std::vector<Edge> out;
        for (const auto& [e, list] : edges_) {
            if (list.size() == 2)
                out.push_back(e);
        }
        return out;
    }

    // V restricted to the given triangles: sum of |x|^2 over vertices times area.
    Rational local_v(std::initializer_list<Tri> tris) const
    {
        Rational total = 0;
        for (const auto& t : tris) {
            const Point pts[] = {sites_[t[0]], sites_[t[1]], sites_[t[2]]};
            total += (pts[0].squared_norm() + pts[1].squared_norm() + pts[2].squared_norm()) * simplex_volume(pts);
        }
        return total;
    }

    /// Flips e if its opposite vertex is strictly inside the circumcircle.
    /// Returns the outer edges of the quad when a flip happened.
    std::optional<std::array<Edge, 4>> legalize(Edge e, BuildStats& stats)
    {
        auto it = edges_.find(e);
        if (it == edges_.end() || it->second.size() != 2)
            return std::nullopt;
        const int t0 = it->second[0];
        const int t1 = it->second[1];
        const Index p = apex(t0, e);
        const Index q = apex(t1, e);
        if (in_circle(sites_[e.a], sites_[e.b], sites_[p], sites_[q]) != Sign::Positive)
            return std::nullopt;

        const Rational before = local_v({Tri{e.a, e.b, p}, Tri{e.a, e.b, q}});
        const Rational after = local_v({Tri{p, q, e.a}, Tri{p, q, e.b}});
        if (!(after < before))
            throw std::logic_error("Lawson flip of " + e.as_facet().to_string() + " did not decrease V");
        ++stats.v_decrease_checks;

        remove(t0);
        remove(t1);
        add(p, q, e.a);
        add(p, q, e.b);
        ++stats.flips;
        return std::array<Edge, 4>{Edge(e.a, p), Edge(p, e.b), Edge(e.b, q), Edge(q, e.a)};
    }

    std::vector<Simplex> simplices() const
    {
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < tris_.size(); ++i) {
            if (alive_[i])
                out.push_back(Simplex{tris_[i][0], tris_[i][1], tris_[i][2]});
        }
        return out;
    }

private:
    Index apex(int tri, Edge e) const
    {
        for (Index v : tris_[tri]) {
            if (v != e.a && v != e.b)
                return v;
        }
        throw std::logic_error("degenerate working triangle");
    }

    const SiteSet& sites_;
    std::vector<Tri> tris_;
    std::vector<bool> alive_;
    std::map<Edge, std::vector<int>> edges_;
};

// Lexicographic sweep: every new site lies outside the current hull and is
// joined to each hull edge it strictly sees.
void sweep_triangulate(const SiteSet& sites, WorkMesh& mesh)
{
    std::vector<Index> order(sites.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (sites[a][0] != sites[b][0])
            return sites[a][0] < sites[b][0];
        return sites[a][1] < sites[b][1];
    });

    std::size_t m = 2;
    while (m < order.size() && orientation(sites[order[0]], sites[order[1]], sites[order[m]]) == Sign::Zero)
        ++m;
    if (m == order.size())
        throw Error(ErrorKind::AllCollinear, "all sites are collinear");

    const Index apex = order[m];
    for (std::size_t i = 0; i + 1 < m; ++i)
        mesh.add(apex, order[i], order[i + 1]);

    std::vector<Index> hull;
    if (orientation(sites[order[0]], sites[order[m - 1]], sites[apex]) == Sign::Positive) {
        hull.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
        hull.push_back(apex);
    } else {
        hull.push_back(order[0]);
        hull.push_back(apex);
        for (std::size_t i = m - 1; i >= 1; --i)
            hull.push_back(order[i]);
    }

    for (std::size_t next = m + 1; next < order.size(); ++next) {
        const Index q = order[next];
        const std::size_t h = hull.size();
        auto visible = [&](std::size_t i) {
            return orientation(sites[hull[i % h]], sites[hull[(i + 1) % h]], sites[q]) == Sign::Negative;
        };
        // Rotate so that edge h-1 (closing edge) is hidden and the visible
        // run is contiguous in [0, h-1).
        std::size_t start = 0;
        while (visible(start))
            ++start;
        std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>((start + 1) % h), hull.end());
        std::size_t first = 0;
        while (first < h && !visible(first))
            ++first;
        std::size_t last = first;
        while (last + 1 < h && visible(last + 1))
            ++last;
        for (std::size_t i = first; i <= last; ++i)
            mesh.add(hull[i], hull[i + 1], q);
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(first + 1),
                   hull.begin() + static_cast<std::ptrdiff_t>(last + 1));
        hull.insert(hull.begin() + static_cast<std::ptrdiff_t>(first + 1), q);
    }
}

}  // namespace

Triangulation build_dt(const SiteSetPtr& sites, BuildStats* stats)
{
    if (sites->dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "Delaunay construction is planar only");
    if (sites->size() < 3)
        throw Error(ErrorKind::TooFewSites, "need at least three sites");

    WorkMesh mesh(*sites);
    sweep_triangulate(*sites, mesh);

    BuildStats local;
    std::vector<Edge> stack = mesh.interior_edges();
    while (!stack.empty()) {
        const Edge e = stack.back();
        stack.pop_back();
        if (auto outer = mesh.legalize(e, local))
            stack.insert(stack.end(), outer->begin(), outer->end());
    }
    if (stats)
        *stats = local;
    return Triangulation(sites, mesh.simplices());
}

DelaunayCheck is_delaunay(const Triangulation& t)
{
    if (t.dim() != 2 && t.dim() != 3)
        throw Error(ErrorKind::DimensionMismatch, "Delaunay test supports d in {2,3}");
    require_valid(t);
    const SiteSet& s = t.sites();
    for (const auto& use : t.facets()) {
        if (!use.interior())
            continue;
        const Simplex& first = t.simplices()[use.incident[0]];
        const Index q = t.simplices()[use.incident[1]].opposite(use.facet);
        Sign inside;
        if (t.dim() == 2)
            inside = in_circle(s[first[0]], s[first[1]], s[first[2]], s[q]);
        else
            inside = in_sphere(s[first[0]], s[first[1]], s[first[2]], s[first[3]], s[q]);
        if (inside == Sign::Positive)
            return {false, use.facet};
    }
    return {};
}

namespace {

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    std::vector<Index> idx(k);
    std::iota(idx.begin(), idx.end(), Index{0});
    if (k > n)
        return;
    while (true) {
        if (!visit(idx))
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool collinear(const SiteSet& s, Index a, Index b, Index c)
{
    const Point ab = s[b] - s[a];
    const Point ac = s[c] - s[a];
    if (s.dim() == 2)
        return ab[0] * ac[1] - ab[1] * ac[0] == 0;
    const Point pts[] = {s[a], s[b], s[c]};
    return squared_measure(pts) == 0;
}

// Scans subsets; `stop_at_first` turns it into a general-position test.
DegeneracyReport scan(const SiteSet& s, bool stop_at_first)
{
    DegeneracyReport r;
    const std::size_t n = s.size();
    auto keep_going = [&] { return !(stop_at_first && !r.empty()); };

    for_each_subset(n, 3, [&](const std::vector<Index>& t) {
        if (collinear(s, t[0], t[1], t[2]))
            r.collinear.push_back(t);
        return keep_going();
    });
    if (!keep_going())
        return r;

    if (s.dim() == 2) {
        for_each_subset(n, 4, [&](const std::vector<Index>& q) {
            if (!collinear(s, q[0], q[1], q[2]) && in_circle(s[q[0]], s[q[1]], s[q[2]], s[q[3]]) == Sign::Zero)
                r.cocircular.push_back(q);
            return keep_going();
        });
    } else if (s.dim() == 3) {
        for_each_subset(n, 4, [&](const std::vector<Index>& q) {
            const Point pts[] = {s[q[0]], s[q[1]], s[q[2]], s[q[3]]};
            if (orientation(pts) == Sign::Zero)
                r.coplanar.push_back(q);
            return keep_going();
        });
        if (!keep_going())
            return r;
        for_each_subset(n, 5, [&](const std::vector<Index>& f) {
            for (std::size_t skip = 0; skip < 5; ++skip) {
                std::vector<Index> four;
                for (std::size_t i = 0; i < 5; ++i) {
                    if (i != skip)
                        four.push_back(f[i]);
                }
                const Point pts[] = {s[four[0]], s[four[1]], s[four[2]], s[four[3]]};
                if (orientation(pts) == Sign::Zero)
                    continue;
                if (in_sphere(pts[0], pts[1], pts[2], pts[3], s[f[skip]]) == Sign::Zero)
                    r.cospherical.push_back(f);
                break;
            }
            return keep_going();
        });
    }
    return r;
}

}  // namespace

DegeneracyReport degeneracy_scan(const SiteSet& sites)
{
    return scan(sites, false);
}

bool in_general_position(const SiteSet& sites)
{
    return scan(sites, true).empty();
}

}  // namespace dfl
