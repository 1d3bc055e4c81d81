#include "dfl/explore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dfl {

std::optional<std::size_t> EnumerationResult::index_of(const std::string& key) const
{
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
}

EnumerationResult enumerate_triangulations(const SiteSetPtr& sites, std::size_t cap)
{
    if (sites->dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "enumeration is planar only");
    if (sites->size() > cap) {
        throw Error(ErrorKind::TooManySites,
                    std::to_string(sites->size()) + " sites exceed the enumeration cap of " + std::to_string(cap));
    }

    const Triangulation dt = build_dt(sites);
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<Triangulation> found;
    std::deque<std::size_t> queue;

    seen.emplace(canonical_key(dt), 0);
    found.push_back(dt);
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& e : interior_edges(found[cur])) {
            if (!is_flippable(found[cur], e))
                continue;
            Triangulation next = flip_edge(found[cur], e);
            if (seen.emplace(canonical_key(next), found.size()).second) {
                found.push_back(std::move(next));
                queue.push_back(found.size() - 1);
            }
        }
    }

    EnumerationResult r;
    r.dt_key = canonical_key(dt);
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::string> keys;
    keys.reserve(found.size());
    for (const auto& t : found)
        keys.push_back(canonical_key(t));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t i : order) {
        r.triangulations.push_back(found[i]);
        r.keys.push_back(keys[i]);
    }
    r.degenerate = !in_general_position(*sites);
    return r;
}

namespace {

class Tiler {
public:
    explicit Tiler(const SiteSet& sites) : sites_(sites)
    {
        const std::size_t n = sites.size();
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                for (Index k = j + 1; k < n; ++k) {
                    if (orientation(sites[i], sites[j], sites[k]) == Sign::Zero || !empty_triangle(i, j, k))
                        continue;
                    const std::size_t id = candidates_.size();
                    candidates_.push_back({Simplex{i, j, k}, {sites[i], sites[j], sites[k]}});
                    by_edge_[Edge(i, j)].push_back(id);
                    by_edge_[Edge(j, k)].push_back(id);
                    by_edge_[Edge(i, k)].push_back(id);
                }
            }
        }
        const auto cycle = sites.hull_cycle();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const Edge e(cycle[i], cycle[(i + 1) % cycle.size()]);
            hull_edges_.insert(e);
            open_.insert(e);
        }
    }

    std::vector<std::string> run()
    {
        recurse();
        std::sort(keys_.begin(), keys_.end());
        return keys_;
    }

private:
    struct Candidate {
        Simplex tri;
        std::vector<Point> pts;
    };

    bool empty_triangle(Index i, Index j, Index k) const
    {
        const int o = static_cast<int>(orientation(sites_[i], sites_[j], sites_[k]));
        for (Index l = 0; l < sites_.size(); ++l) {
            if (l == i || l == j || l == k)
                continue;
            const Point& p = sites_[l];
            if (static_cast<int>(orientation(sites_[i], sites_[j], p)) * o >= 0
                && static_cast<int>(orientation(sites_[j], sites_[k], p)) * o >= 0
                && static_cast<int>(orientation(sites_[k], sites_[i], p)) * o >= 0)
                return false;
        }
        return true;
    }

    int required_side(const Edge& e) const
    {
        if (hull_edges_.contains(e))
            return static_cast<int>(orientation(sites_[e.a], sites_[e.b], sites_.interior_point()));
        return -static_cast<int>(orientation(sites_[e.a], sites_[e.b], sites_[first_apex_.at(e)]));
    }

    void touch(const Edge& e, Index apex, int delta)
    {
        int& c = count_[e];
        c += delta;
        const bool hull = hull_edges_.contains(e);
        if (delta > 0 && c == 1)
            first_apex_[e] = apex;
        const bool open = hull ? c == 0 : c == 1;
        if (open)
            open_.insert(e);
        else
            open_.erase(e);
        if (c == 1 && delta < 0) {
            // Restore the apex of the remaining triangle on this edge.
            for (std::size_t id : chosen_) {
                const Simplex& t = candidates_[id].tri;
                if (t.contains(e.a) && t.contains(e.b)) {
                    first_apex_[e] = t.opposite(e.as_facet());
                    break;
                }
            }
        }
    }

    void place(std::size_t id, int delta)
    {
        const Simplex& t = candidates_[id].tri;
        touch(Edge(t[0], t[1]), t[2], delta);
        touch(Edge(t[1], t[2]), t[0], delta);
        touch(Edge(t[0], t[2]), t[1], delta);
    }

    void recurse()
    {
        if (open_.empty()) {
            std::vector<Simplex> tris;
            Rational area = 0;
            for (std::size_t id : chosen_) {
                tris.push_back(candidates_[id].tri);
                area += simplex_volume(candidates_[id].pts);
            }
            if (area != sites_.hull_volume())
                throw std::logic_error("tiler closed a region that is not the hull");
            keys_.push_back(canonical_key(tris));
            return;
        }
        const Edge e = *open_.begin();
        const int side = required_side(e);
        auto it = by_edge_.find(e);
        if (it == by_edge_.end())
            return;
        for (std::size_t id : it->second) {
            const Index apex = candidates_[id].tri.opposite(e.as_facet());
            if (static_cast<int>(orientation(sites_[e.a], sites_[e.b], sites_[apex])) != side)
                continue;
            bool clash = false;
            for (std::size_t other : chosen_) {
                if (interiors_intersect(candidates_[id].pts, candidates_[other].pts)) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            chosen_.push_back(id);
            place(id, +1);
            recurse();
            chosen_.pop_back();
            place(id, -1);
        }
    }

    const SiteSet& sites_;
    std::vector<Candidate> candidates_;
    std::map<Edge, std::vector<std::size_t>> by_edge_;
    std::set<Edge> hull_edges_;
    std::set<Edge> open_;
    std::map<Edge, int> count_;
    std::map<Edge, Index> first_apex_;
    std::vector<std::size_t> chosen_;
    std::vector<std::string> keys_;
};

}  // namespace

std::vector<std::string> tile_triangulations(const SiteSet& sites)
{
    if (sites.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "tiling oracle is planar only");
    return Tiler(sites).run();
}

VerificationReport verify_optimality(const EnumerationResult& all, const FunctionalSpec& spec)
{
    VerificationReport r;
    r.functional = spec;
    r.dt_key = all.dt_key;
    r.degeneracy_caveat = all.degenerate;
    r.triangulation_count = all.count();
    if (all.count() == 0)
        return r;

    std::vector<FunctionalValue> values;
    values.reserve(all.count());
    for (std::size_t i = 0; i < all.count(); ++i) {
        const auto& t = all.triangulations[i];
        values.push_back(evaluate_simplices(spec, t.sites(), t.simplices()));
        r.values.emplace(all.keys[i], values.back());
    }

    const Goal goal = spec.goal();
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (strictly_better(values[i], values[best], goal))
            best = i;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Comparison c = i == best ? Comparison::Equal : compare(values[i], values[best]);
        if (c == Comparison::Equal || c == Comparison::NearTie) {
            r.optimum_keys.push_back(all.keys[i]);
            r.undecided = r.undecided || c == Comparison::NearTie;
        }
    }
    r.dt_is_optimal = std::find(r.optimum_keys.begin(), r.optimum_keys.end(), all.dt_key) != r.optimum_keys.end();
    r.dt_is_unique_optimal = r.dt_is_optimal && r.optimum_keys.size() == 1 && !r.degeneracy_caveat && !r.undecided;
    return r;
}

VerificationReport verify_optimality(const SiteSetPtr& sites, const FunctionalSpec& spec)
{
    return verify_optimality(enumerate_triangulations(sites), spec);
}

namespace {

std::vector<Rational> sorted_radii2(const Triangulation& t)
{
    std::vector<Rational> out;
    for (const auto& s : t.simplices()) {
        const auto p = t.points_of(s);
        out.push_back(circumradius2(p[0], p[1], p[2]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RadiusSequenceReport verify_radius_sequence(const EnumerationResult& all)
{
    RadiusSequenceReport r;
    const auto dt_index = all.index_of(all.dt_key);
    if (!dt_index)
        throw std::logic_error("Delaunay triangulation missing from enumeration");
    const auto dt = sorted_radii2(all.triangulations[*dt_index]);
    for (std::size_t i = 0; i < all.count(); ++i) {
        if (i == *dt_index)
            continue;
        ++r.compared;
        const auto other = sorted_radii2(all.triangulations[i]);
        if (other.size() != dt.size())
            throw std::logic_error("triangle counts differ between triangulations of one site set");
        for (std::size_t j = 0; j < dt.size(); ++j) {
            if (dt[j] > other[j]) {
                r.holds = false;
                r.violator_key = all.keys[i];
                return r;
            }
        }
    }
    return r;
}

RadiusSequenceReport verify_radius_sequence(const SiteSetPtr& sites)
{
    return verify_radius_sequence(enumerate_triangulations(sites));
}

AngleSequenceReport verify_angle_sequence(const EnumerationResult& all)
{
    AngleSequenceReport r;
    const auto dt_index = all.index_of(all.dt_key);
    if (!dt_index)
        throw std::logic_error("Delaunay triangulation missing from enumeration");
    const auto dt = angle_sequence(all.triangulations[*dt_index]);
    for (std::size_t i = 0; i < all.count(); ++i) {
        if (i == *dt_index)
            continue;
        const auto other = angle_sequence(all.triangulations[i]);
        for (std::size_t j = 0; j < dt.size(); ++j) {
            const Real diff = dt[j] - other[j];
            if (abs(diff) <= Real(kRelativeTolerance) * std::max(abs(dt[j]), abs(other[j])))
                continue;
            if (diff < 0) {
                r.dt_lex_max = false;
                r.violator_key = all.keys[i];
                return r;
            }
            break;
        }
    }
    return r;
}

namespace {

FunctionalValue negated(const FunctionalValue& v)
{
    if (v.is_exact())
        return FunctionalValue::exact(-v.exact_part());
    return FunctionalValue::split(-v.exact_part(), -v.inexact_part());
}

}  // namespace

DescentResult flip_descent(const Triangulation& start, const FunctionalSpec& spec)
{
    if (start.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "flip descent is planar only");
    require_valid(start);
    const SiteSet& sites = start.sites();
    const Goal goal = spec.goal();

    DescentResult r{start, {}};
    FunctionalValue current = evaluate_simplices(spec, sites, start.simplices());
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& e : interior_edges(r.fixpoint)) {
            if (!is_flippable(r.fixpoint, e))
                continue;
            const auto [p, q] = edge_apexes(r.fixpoint, e);
            const Simplex before[] = {Simplex{e.a, e.b, p}, Simplex{e.a, e.b, q}};
            const Simplex after[] = {Simplex{p, q, e.a}, Simplex{p, q, e.b}};
            FunctionalValue candidate = current;
            candidate += negated(evaluate_simplices(spec, sites, before));
            candidate += evaluate_simplices(spec, sites, after);
            if (!strictly_better(candidate, current, goal))
                continue;
            r.fixpoint = flip_edge(r.fixpoint, e);
            current = candidate;
            r.trace.push_back({e, Edge(p, q), current});
            improved = true;
            break;
        }
    }
    return r;
}

std::vector<Triangulation> small_triangulations(const SiteSetPtr& sites)
{
    const std::size_t d = sites->dim();
    if ((d != 2 && d != 3) || sites->size() != d + 2)
        throw Error(ErrorKind::BadParams, "expected d+2 sites with d in {2,3}");
    const auto degeneracies = degeneracy_scan(*sites);
    if (!degeneracies.collinear.empty() || !degeneracies.coplanar.empty())
        throw Error(ErrorKind::DegenerateConfiguration, "sites are not in general position");

    std::vector<Simplex> candidates;
    for (Index skip = 0; skip < sites->size(); ++skip) {
        std::vector<Index> idx;
        for (Index i = 0; i < sites->size(); ++i) {
            if (i != skip)
                idx.push_back(i);
        }
        candidates.emplace_back(idx);
    }
    std::vector<Triangulation> out;
    for (unsigned mask = 1; mask < (1U << candidates.size()); ++mask) {
        std::vector<Simplex> chosen;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (mask & (1U << i))
                chosen.push_back(candidates[i]);
        }
        Triangulation t(sites, std::move(chosen));
        if (validate(t).valid())
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const Triangulation& a, const Triangulation& b) { return canonical_key(a) < canonical_key(b); });
    return out;
}

std::vector<Triangulation> two_triangulations_3d(const SiteSetPtr& sites)
{
    if (sites->dim() != 3 || sites->size() != 5)
        throw Error(ErrorKind::BadParams, "expected five sites in R^3");
    return small_triangulations(sites);
}

namespace {

struct Reduced {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

Reduced row_reduce(Matrix m)
{
    Reduced r;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[row]);
        const Rational lead = m[row][col];
        for (auto& v : m[row])
            v /= lead;
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == row || m[other][col] == 0)
                continue;
            const Rational f = m[other][col];
            for (std::size_t k = 0; k < cols; ++k)
                m[other][k] -= f * m[row][k];
        }
        r.pivots.push_back(col);
        ++row;
    }
    r.rref = std::move(m);
    return r;
}

std::vector<std::vector<Rational>> null_space(const Reduced& red, std::size_t cols)
{
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            v[red.pivots[r]] = -red.rref[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

QuadraticFormSummary theorem8_form(const SiteSetPtr& sites)
{
    const auto tris = small_triangulations(sites);
    if (tris.size() != 2)
        throw Error(ErrorKind::SingleTriangulation, "the sites admit only one triangulation");

    const std::size_t n = sites->size();
    auto form = [&](std::vector<Rational> y) {
        const auto spec = FunctionalSpec::df(HeightField{std::move(y)});
        const FunctionalValue a = evaluate_simplices(spec, *sites, tris[0].simplices());
        const FunctionalValue b = evaluate_simplices(spec, *sites, tris[1].simplices());
        return Rational(a.exact_part() - b.exact_part());
    };
    auto unit = [&](std::size_t i, std::size_t j) {
        std::vector<Rational> y(n, Rational(0));
        y[i] += 1;
        y[j] += 1;
        return y;
    };

    QuadraticFormSummary s;
    s.first_key = canonical_key(tris[0]);
    s.second_key = canonical_key(tris[1]);
    s.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> y(n, Rational(0));
        y[i] = 1;
        diag[i] = form(y);
        s.matrix[i][i] = diag[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            s.matrix[i][j] = (form(unit(i, j)) - diag[i] - diag[j]) / 2;
            s.matrix[j][i] = s.matrix[i][j];
        }
    }

    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.matrix[i][j].get_d();
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        s.singular_values.push_back(sv(i));
    s.rank1_residual = sv(0) > 0 ? sv(1) / sv(0) : 0.0;

    const Reduced red = row_reduce(s.matrix);
    s.exact_rank = red.pivots.size();
    s.kernel = null_space(red, n);
    s.kernel_vanishes = std::all_of(s.kernel.begin(), s.kernel.end(), [&](const auto& y) { return form(y) == 0; });

    if (s.exact_rank == 1) {
        std::size_t j = 0;
        while (s.matrix[j][j] == 0)
            ++j;
        for (std::size_t i = 0; i < n; ++i)
            s.linear_form.push_back(s.matrix[i][j]);
        s.coefficient = 1 / s.matrix[j][j];
    }
    return s;
}

std::string_view to_string(SearchKind kind)
{
    switch (kind) {
    case SearchKind::HrmK: return "HRM_K";
    case SearchKind::SvPlanar: return "SV_PLANAR";
    case SearchKind::Dst3d: return "DST_3D";
    case SearchKind::Hrm3d: return "HRM_3D";
    }
    return "?";
}

SearchKind parse_search_kind(std::string_view text)
{
    for (SearchKind k : {SearchKind::HrmK, SearchKind::SvPlanar, SearchKind::Dst3d, SearchKind::Hrm3d}) {
        if (to_string(k) == text)
            return k;
    }
    throw Error(ErrorKind::BadParams, "unknown search kind '" + std::string(text) + "'");
}

namespace {

// Re-evaluates both triangulations from scratch (with validation) and
// certifies Delaunayhood before accepting a witness.
std::optional<Witness> certify(SiteSetPtr sites, std::optional<HeightField> heights, const FunctionalSpec& spec,
                               const Triangulation& dt, const Triangulation& better)
{
    Witness w;
    w.sites = std::move(sites);
    w.heights = std::move(heights);
    w.functional = spec;
    w.triangulations = {dt, better};
    for (const auto& t : w.triangulations) {
        w.values.push_back(evaluate(spec, t));
        w.delaunay.push_back(is_delaunay(t).delaunay);
    }
    w.exact = w.values[0].is_exact() && w.values[1].is_exact();
    if (!w.delaunay[0] || w.delaunay[1])
        return std::nullopt;
    if (!strictly_better(w.values[1], w.values[0], spec.goal()))
        return std::nullopt;
    return w;
}

std::optional<Witness> try_hrm_quad(Rng& rng, const SearchParams& params, SearchReport& report)
{
    const Quad quad = random_convex_quad(rng);
    const auto spec = FunctionalSpec::hrm(params.k);
    const LctResult lct = lct_check(spec, quad);
    if (lct.near_tie) {
        ++report.stats["near_ties"];
        return std::nullopt;
    }
    if (lct.holds)
        return std::nullopt;
    auto sites = make_sites(std::vector<Point>(quad.begin(), quad.end()));
    auto tri_for = [&](Edge diag) {
        const Index other[2] = {diag.a == 0 ? Index{1} : Index{0}, diag.a == 0 ? Index{3} : Index{2}};
        return Triangulation(sites, {Simplex{diag.a, diag.b, other[0]}, Simplex{diag.a, diag.b, other[1]}});
    };
    return certify(sites, std::nullopt, spec, tri_for(lct.dt_diagonal), tri_for(lct.other_diagonal));
}

std::optional<Witness> try_sv_planar(Rng& rng, const SearchParams& params, SearchReport& report)
{
    auto sites = random_sites(rng, params.sites, 2);
    HeightField h = random_heights(rng, params.sites, params.height_scale);
    const auto all = enumerate_triangulations(sites);
    const auto spec = FunctionalSpec::sv(h);
    const auto v = verify_optimality(all, spec);
    if (v.undecided) {
        ++report.stats["near_ties"];
        return std::nullopt;
    }
    if (v.dt_is_optimal)
        return std::nullopt;
    const auto dt = all.triangulations[*all.index_of(all.dt_key)];
    const auto best = all.triangulations[*all.index_of(v.optimum_keys.front())];
    return certify(sites, h, spec, dt, best);
}

std::optional<Witness> try_spatial(Rng& rng, const SearchParams& params, SearchReport& report, bool dirichlet)
{
    auto sites = random_sites(rng, 5, 3);
    const auto tris = small_triangulations(sites);
    if (tris.size() != 2) {
        ++report.stats["single_triangulation"];
        return std::nullopt;
    }
    std::optional<HeightField> h;
    FunctionalSpec spec = FunctionalSpec::hrm(1);
    if (dirichlet) {
        h = random_heights(rng, 5, params.height_scale);
        spec = FunctionalSpec::df(*h);
    }
    const bool first_is_dt = is_delaunay(tris[0]).delaunay;
    const Triangulation& dt = first_is_dt ? tris[0] : tris[1];
    const Triangulation& other = first_is_dt ? tris[1] : tris[0];
    const FunctionalValue a = evaluate_simplices(spec, *sites, dt.simplices());
    const FunctionalValue b = evaluate_simplices(spec, *sites, other.simplices());
    const Comparison c = compare(b, a);
    if (c == Comparison::NearTie) {
        ++report.stats["near_ties"];
        return std::nullopt;
    }
    if (c != Comparison::Less)
        return std::nullopt;
    return certify(sites, h, spec, dt, other);
}

}  // namespace

SearchReport search_counterexample(SearchKind kind, const SearchParams& params, std::uint64_t seed,
                                   std::uint64_t budget)
{
    if (kind == SearchKind::HrmK && (params.k == 1 || params.k < Rational(1, 2)))
        throw Error(ErrorKind::BadParams, "HRM_K needs k != 1 and k >= 1/2");
    if (kind == SearchKind::SvPlanar && (params.sites < 4 || params.sites > kDefaultEnumerationCap))
        throw Error(ErrorKind::BadParams, "SV_PLANAR needs between 4 and 10 sites");
    if (params.height_scale <= 0)
        throw Error(ErrorKind::BadParams, "height scale must be positive");
    if (budget == 0)
        throw Error(ErrorKind::BadParams, "budget must be positive");

    SearchReport report{kind, params, seed, budget, 0, false, {}, std::nullopt};
    for (std::uint64_t i = 0; i < budget; ++i) {
        Rng rng = stream_rng(seed, i);
        ++report.iterations;
        std::optional<Witness> w;
        switch (kind) {
        case SearchKind::HrmK: w = try_hrm_quad(rng, params, report); break;
        case SearchKind::SvPlanar: w = try_sv_planar(rng, params, report); break;
        case SearchKind::Dst3d: w = try_spatial(rng, params, report, true); break;
        case SearchKind::Hrm3d: w = try_spatial(rng, params, report, false); break;
        }
        if (w) {
            report.found = true;
            report.witness = std::move(w);
            break;
        }
    }
    return report;
}

std::vector<Rational> default_probe_scales()
{
    std::vector<Rational> out;
    for (unsigned i = 0; i <= 20; ++i)
        out.emplace_back(1UL, 1UL << i);
    return out;
}

SvProbeReport sv_epsilon_probe(const EnumerationResult& all, const HeightField& direction,
                               const std::vector<Rational>& scales)
{
    SvProbeReport r;
    r.dt_key = all.dt_key;
    for (const auto& s : scales) {
        const auto v = verify_optimality(all, FunctionalSpec::sv(direction.scaled(s)));
        r.rows.push_back({s, v.optimum_keys, v.dt_is_unique_optimal, v.undecided});
    }
    std::vector<const SvProbeRow*> ascending;
    for (const auto& row : r.rows)
        ascending.push_back(&row);
    std::sort(ascending.begin(), ascending.end(), [](const auto* a, const auto* b) { return a->scale < b->scale; });
    for (const auto* row : ascending) {
        if (row->undecided)
            continue;
        if (!row->is_dt)
            break;
        r.threshold = row->scale;
    }
    return r;
}

SvProbeReport sv_epsilon_probe(const SiteSetPtr& sites, const HeightField& direction,
                               const std::vector<Rational>& scales)
{
    return sv_epsilon_probe(enumerate_triangulations(sites), direction, scales);
}

}  // namespace dfl
