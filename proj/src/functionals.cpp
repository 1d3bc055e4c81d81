#include "dfl/functionals.hpp"

#include <algorithm>

namespace dfl {

HeightField HeightField::scaled(const Rational& factor) const
{
    HeightField out;
    out.values.reserve(values.size());
    for (const auto& v : values)
        out.values.push_back(v * factor);
    return out;
}

std::string_view to_string(FunctionalKind kind)
{
    switch (kind) {
    case FunctionalKind::C2: return "c2";
    case FunctionalKind::V: return "v";
    case FunctionalKind::MeanRadius: return "radius";
    case FunctionalKind::Hrm: return "hrm";
    case FunctionalKind::Sv: return "sv";
    case FunctionalKind::Df: return "df";
    case FunctionalKind::MinAngleSum: return "minangle";
    }
    return "?";
}

std::string_view to_string(Phi phi)
{
    switch (phi) {
    case Phi::Identity: return "identity";
    case Phi::Square: return "square";
    case Phi::Sqrt: return "sqrt";
    case Phi::Log: return "log";
    }
    return "?";
}

Phi parse_phi(std::string_view text)
{
    for (Phi p : {Phi::Identity, Phi::Square, Phi::Sqrt, Phi::Log}) {
        if (to_string(p) == text)
            return p;
    }
    throw Error(ErrorKind::BadParams, "unknown phi '" + std::string(text) + "'");
}

FunctionalSpec FunctionalSpec::c2(std::optional<Point> origin)
{
    FunctionalSpec s;
    s.kind = FunctionalKind::C2;
    s.origin = std::move(origin);
    return s;
}

FunctionalSpec FunctionalSpec::v()
{
    return FunctionalSpec{};
}

FunctionalSpec FunctionalSpec::mean_radius(Phi phi)
{
    FunctionalSpec s;
    s.kind = FunctionalKind::MeanRadius;
    s.phi = phi;
    return s;
}

FunctionalSpec FunctionalSpec::hrm(Rational k)
{
    if (k < Rational(1, 2))
        throw Error(ErrorKind::BadExponent, "hrm exponent must be >= 1/2");
    FunctionalSpec s;
    s.kind = FunctionalKind::Hrm;
    s.k = std::move(k);
    return s;
}

FunctionalSpec FunctionalSpec::sv(HeightField heights)
{
    FunctionalSpec s;
    s.kind = FunctionalKind::Sv;
    s.heights = std::make_shared<const HeightField>(std::move(heights));
    return s;
}

FunctionalSpec FunctionalSpec::df(HeightField heights)
{
    FunctionalSpec s;
    s.kind = FunctionalKind::Df;
    s.heights = std::make_shared<const HeightField>(std::move(heights));
    return s;
}

FunctionalSpec FunctionalSpec::min_angle_sum()
{
    FunctionalSpec s;
    s.kind = FunctionalKind::MinAngleSum;
    return s;
}

Goal FunctionalSpec::goal() const noexcept
{
    return kind == FunctionalKind::C2 || kind == FunctionalKind::MinAngleSum ? Goal::Maximize : Goal::Minimize;
}

FunctionalSpec FunctionalSpec::with_heights(HeightField h) const
{
    FunctionalSpec s = *this;
    s.heights = std::make_shared<const HeightField>(std::move(h));
    return s;
}

std::string FunctionalSpec::name() const
{
    std::string n(to_string(kind));
    if (kind == FunctionalKind::MeanRadius)
        n += "(" + std::string(to_string(phi)) + ")";
    if (kind == FunctionalKind::Hrm)
        n += "(k=" + to_exact_string(k) + ")";
    return n;
}

FunctionalValue FunctionalValue::exact(Rational value)
{
    FunctionalValue v;
    v.exact_part_ = std::move(value);
    return v;
}

FunctionalValue FunctionalValue::approximate(Real value)
{
    FunctionalValue v;
    v.inexact_part_ = value;
    v.exact_ = false;
    return v;
}

FunctionalValue FunctionalValue::split(Rational exact_part, Real inexact_part)
{
    FunctionalValue v;
    v.exact_part_ = std::move(exact_part);
    v.inexact_part_ = inexact_part;
    v.exact_ = false;
    return v;
}

Real FunctionalValue::value() const
{
    return to_real(exact_part_) + inexact_part_;
}

std::string FunctionalValue::to_string() const
{
    return exact_ ? to_exact_string(exact_part_) : dfl::to_string(value());
}

FunctionalValue& FunctionalValue::operator+=(const FunctionalValue& other)
{
    exact_part_ += other.exact_part_;
    inexact_part_ += other.inexact_part_;
    exact_ = exact_ && other.exact_;
    return *this;
}

Comparison compare(const FunctionalValue& a, const FunctionalValue& b, double tolerance)
{
    if (a.is_exact() && b.is_exact()) {
        const int c = cmp(a.exact_part(), b.exact_part());
        return c < 0 ? Comparison::Less : (c > 0 ? Comparison::Greater : Comparison::Equal);
    }
    const bool same_exact = a.exact_part() == b.exact_part();
    const Real diff = to_real(Rational(a.exact_part() - b.exact_part())) + (a.inexact_part() - b.inexact_part());
    const Real scale = same_exact ? std::max(abs(a.inexact_part()), abs(b.inexact_part()))
                                  : std::max(abs(a.value()), abs(b.value()));
    if (abs(diff) <= Real(tolerance) * scale)
        return Comparison::NearTie;
    return diff < 0 ? Comparison::Less : Comparison::Greater;
}

bool strictly_better(const FunctionalValue& candidate, const FunctionalValue& incumbent, Goal goal)
{
    const Comparison c = compare(candidate, incumbent);
    return goal == Goal::Minimize ? c == Comparison::Less : c == Comparison::Greater;
}

namespace {

Rational power(const Rational& base, unsigned long exponent)
{
    Rational r = 1;
    for (unsigned long i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

bool small_positive_integer(const Rational& k)
{
    return k.get_den() == 1 && k >= 1 && k <= 64;
}

const HeightField& require_heights(const FunctionalSpec& spec, const SiteSet& sites)
{
    if (!spec.heights)
        throw Error(ErrorKind::HeightFieldMismatch, "functional " + spec.name() + " needs a height field");
    if (spec.heights->values.size() != sites.size()) {
        throw Error(ErrorKind::HeightFieldMismatch, "height field has " + std::to_string(spec.heights->values.size())
                                                        + " values for " + std::to_string(sites.size()) + " sites");
    }
    return *spec.heights;
}

std::vector<Point> lifted(const SiteSet& sites, const Simplex& s, const HeightField& h)
{
    std::vector<Point> out;
    for (Index i : s) {
        std::vector<Rational> c(sites[i].coords().begin(), sites[i].coords().end());
        c.push_back(h.values[i]);
        out.emplace_back(std::move(c));
    }
    return out;
}

Real apply_phi(Phi phi, const Rational& r2)
{
    const Real x = to_real(r2);
    switch (phi) {
    case Phi::Identity: return sqrt(x);
    case Phi::Square: return x;
    case Phi::Sqrt: return sqrt(sqrt(x));
    case Phi::Log: return log(x) / 2;
    }
    return x;
}

void require_planar(const SiteSet& sites, const FunctionalSpec& spec)
{
    if (sites.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "functional " + spec.name() + " is planar only");
}

FunctionalValue planar_hrm(const std::array<Point, 3>& tri, const Rational& k)
{
    const Rational area = simplex_volume(tri);
    Rational sq[3];
    for (std::size_t i = 0; i < 3; ++i)
        sq[i] = (tri[(i + 1) % 3] - tri[i]).squared_norm();
    if (small_positive_integer(k)) {
        const unsigned long e = k.get_num().get_ui();
        return FunctionalValue::exact((power(sq[0], e) + power(sq[1], e) + power(sq[2], e)) / power(area, e));
    }
    const Real kr = to_real(k);
    Real num = 0;
    for (const auto& s : sq)
        num += pow(to_real(s), kr);
    return FunctionalValue::approximate(num / pow(to_real(area), kr));
}

FunctionalValue simplex_term(const FunctionalSpec& spec, const SiteSet& sites, const Simplex& s)
{
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (Index i : s)
        pts.push_back(sites[i]);

    switch (spec.kind) {
    case FunctionalKind::C2: {
        Point c = centroid(pts);
        if (spec.origin)
            c = c - *spec.origin;
        return FunctionalValue::exact(c.squared_norm() * simplex_volume(pts));
    }
    case FunctionalKind::V: {
        Rational norms = 0;
        for (const auto& p : pts)
            norms += p.squared_norm();
        return FunctionalValue::exact(norms * simplex_volume(pts));
    }
    case FunctionalKind::MeanRadius: {
        require_planar(sites, spec);
        const Rational r2 = circumradius2(pts[0], pts[1], pts[2]);
        if (spec.phi == Phi::Square)
            return FunctionalValue::exact(r2);
        return FunctionalValue::approximate(apply_phi(spec.phi, r2));
    }
    case FunctionalKind::Hrm: {
        if (sites.dim() == 3) {
            if (spec.k != 1)
                throw Error(ErrorKind::BadExponent, "the spatial harmonic index has no exponent");
            return eval_hrm_simplex3(pts);
        }
        require_planar(sites, spec);
        return planar_hrm({pts[0], pts[1], pts[2]}, spec.k);
    }
    case FunctionalKind::Sv: {
        const auto up = lifted(sites, s, require_heights(spec, sites));
        const Rational vol = simplex_volume(pts);
        // lift^2 = vol^2 (1 + |grad|^2); the excess over vol is computed as
        // vol * q / (1 + sqrt(1 + q)) to avoid cancellation.
        const Rational q = squared_measure(up) / (vol * vol) - 1;
        if (q == 0)
            return FunctionalValue::exact(vol);
        const Real qr = to_real(q);
        return FunctionalValue::split(vol, to_real(vol) * qr / (1 + sqrt(1 + qr)));
    }
    case FunctionalKind::Df: {
        const auto up = lifted(sites, s, require_heights(spec, sites));
        const Rational vol = simplex_volume(pts);
        return FunctionalValue::exact(squared_measure(up) / vol - vol);
    }
    case FunctionalKind::MinAngleSum: {
        require_planar(sites, spec);
        const Real a = triangle_angle(pts[0], pts[1], pts[2]);
        const Real b = triangle_angle(pts[1], pts[2], pts[0]);
        const Real c = triangle_angle(pts[2], pts[0], pts[1]);
        return FunctionalValue::approximate(std::min({a, b, c}));
    }
    }
    throw Error(ErrorKind::BadParams, "unknown functional");
}

}  // namespace

FunctionalValue evaluate_simplices(const FunctionalSpec& spec, const SiteSet& sites, std::span<const Simplex> simplices)
{
    if (spec.kind == FunctionalKind::C2 && spec.origin && spec.origin->dim() != sites.dim())
        throw Error(ErrorKind::DimensionMismatch, "origin dimension differs from sites");
    if (spec.kind == FunctionalKind::Hrm && spec.k < Rational(1, 2))
        throw Error(ErrorKind::BadExponent, "hrm exponent must be >= 1/2");
    if (spec.needs_heights())
        require_heights(spec, sites);

    FunctionalValue total;
    if (spec.kind == FunctionalKind::MeanRadius && spec.phi != Phi::Square)
        total = FunctionalValue::approximate(0);
    for (const auto& s : simplices)
        total += simplex_term(spec, sites, s);
    return total;
}

FunctionalValue evaluate(const FunctionalSpec& spec, const Triangulation& t)
{
    require_valid(t);
    return evaluate_simplices(spec, t.sites(), t.simplices());
}

FunctionalValue eval_c2(const Triangulation& t, const std::optional<Point>& origin)
{
    return evaluate(FunctionalSpec::c2(origin), t);
}

FunctionalValue eval_v(const Triangulation& t)
{
    return evaluate(FunctionalSpec::v(), t);
}

Rational identity_residual(const Triangulation& t)
{
    require_valid(t);
    const auto d = static_cast<unsigned long>(t.dim());
    const Rational c2 = evaluate_simplices(FunctionalSpec::c2(), t.sites(), t.simplices()).exact_part();
    const Rational v = evaluate_simplices(FunctionalSpec::v(), t.sites(), t.simplices()).exact_part();
    Rational moment = 0;
    for (const auto& s : t.simplices())
        moment += second_moment(t.points_of(s));
    return Rational((d + 1) * (d + 1)) * c2 + v - Rational((d + 1) * (d + 2)) * moment;
}

FunctionalValue eval_mean_radius(const Triangulation& t, Phi phi)
{
    return evaluate(FunctionalSpec::mean_radius(phi), t);
}

FunctionalValue eval_mean_radius(const Triangulation& t, const std::function<Real(Real)>& phi)
{
    require_valid(t);
    if (t.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "mean radius is planar only");
    Real total = 0;
    for (const auto& s : t.simplices()) {
        const auto p = t.points_of(s);
        total += phi(sqrt(to_real(circumradius2(p[0], p[1], p[2]))));
    }
    return FunctionalValue::approximate(total);
}

FunctionalValue eval_hrm(const Triangulation& t, const Rational& k)
{
    return evaluate(FunctionalSpec::hrm(k), t);
}

namespace {

bool on_segment(const Point& p, const Point& q, const Point& x)
{
    return std::min(p[0], q[0]) <= x[0] && x[0] <= std::max(p[0], q[0]) && std::min(p[1], q[1]) <= x[1]
        && x[1] <= std::max(p[1], q[1]);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const int o1 = static_cast<int>(orientation(a, b, c));
    const int o2 = static_cast<int>(orientation(a, b, d));
    const int o3 = static_cast<int>(orientation(c, d, a));
    const int o4 = static_cast<int>(orientation(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

FunctionalValue eval_hrm_polygon(std::span<const Point> polygon, const Rational& k)
{
    if (k < Rational(1, 2))
        throw Error(ErrorKind::BadExponent, "hrm exponent must be >= 1/2");
    const std::size_t n = polygon.size();
    if (n < 3)
        throw Error(ErrorKind::ZeroArea, "a polygon needs at least three vertices");
    for (const auto& p : polygon) {
        if (p.dim() != 2)
            throw Error(ErrorKind::DimensionMismatch, "polygon vertices must be planar");
    }
    if (std::all_of(polygon.begin() + 2, polygon.end(),
                    [&](const Point& p) { return orientation(polygon[0], polygon[1], p) == Sign::Zero; }))
        throw Error(ErrorKind::ZeroArea, "polygon vertices are collinear");
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = polygon[(i + n - 1) % n];
        const Point& cur = polygon[i];
        const Point& next = polygon[(i + 1) % n];
        if (cur == next)
            throw Error(ErrorKind::SelfIntersecting, "repeated vertex");
        if (orientation(prev, cur, next) == Sign::Zero && (prev - cur).dot(next - cur) > 0)
            throw Error(ErrorKind::SelfIntersecting, "edges fold back at vertex " + std::to_string(i));
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (segments_touch(cur, next, polygon[j], polygon[(j + 1) % n]))
                throw Error(ErrorKind::SelfIntersecting,
                            "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }

    Rational twice = 0;
    std::vector<Rational> sq;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = polygon[i];
        const Point& q = polygon[(i + 1) % n];
        twice += p[0] * q[1] - p[1] * q[0];
        sq.push_back((q - p).squared_norm());
    }
    const Rational area = abs(twice) / 2;
    if (area == 0)
        throw Error(ErrorKind::ZeroArea, "polygon has zero area");

    if (small_positive_integer(k)) {
        const unsigned long e = k.get_num().get_ui();
        Rational num = 0;
        for (const auto& s : sq)
            num += power(s, e);
        return FunctionalValue::exact(num / power(area, e));
    }
    const Real kr = to_real(k);
    Real num = 0;
    for (const auto& s : sq)
        num += pow(to_real(s), kr);
    return FunctionalValue::approximate(num / pow(to_real(area), kr));
}

FunctionalValue eval_hrm_simplex3(std::span<const Point> tet)
{
    if (tet.size() != 4 || tet[0].dim() != 3)
        throw Error(ErrorKind::DimensionMismatch, "expected a tetrahedron in R^3");
    const Rational vol = simplex_volume(tet);
    if (vol == 0)
        throw Error(ErrorKind::DegenerateTetrahedron, "zero-volume tetrahedron");
    Real num = 0;
    for (const auto& f2 : face_volumes(tet)) {
        const Real f = to_real(f2);
        num += f * sqrt(f);  // F^3 from F^2
    }
    return FunctionalValue::approximate(num / to_real(Rational(vol * vol)));
}

FunctionalValue eval_sv(const Triangulation& t, const HeightField& heights)
{
    return evaluate(FunctionalSpec::sv(heights), t);
}

FunctionalValue eval_df(const Triangulation& t, const HeightField& heights)
{
    return evaluate(FunctionalSpec::df(heights), t);
}

FunctionalValue eval_min_angle_sum(const Triangulation& t)
{
    return evaluate(FunctionalSpec::min_angle_sum(), t);
}

Real triangle_angle(const Point& at, const Point& u, const Point& v)
{
    const Point e1 = u - at;
    const Point e2 = v - at;
    const Rational cr = e1[0] * e2[1] - e1[1] * e2[0];
    return atan2(abs(to_real(cr)), to_real(e1.dot(e2)));
}

std::vector<Real> angle_sequence(const Triangulation& t)
{
    require_valid(t);
    if (t.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "angle sequence is planar only");
    std::vector<Real> out;
    for (const auto& s : t.simplices()) {
        const auto p = t.points_of(s);
        out.push_back(triangle_angle(p[0], p[1], p[2]));
        out.push_back(triangle_angle(p[1], p[2], p[0]));
        out.push_back(triangle_angle(p[2], p[0], p[1]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool strictly_convex(const Quad& quad)
{
    int expected = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const int o = static_cast<int>(orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]));
        if (o == 0 || (expected != 0 && o != expected))
            return false;
        expected = o;
    }
    return true;
}

namespace {

void require_convex_general(const Quad& quad)
{
    for (const auto& p : quad) {
        if (p.dim() != 2)
            throw Error(ErrorKind::DimensionMismatch, "quadrilateral must be planar");
    }
    if (!strictly_convex(quad))
        throw Error(ErrorKind::NotConvex, "quadrilateral is not strictly convex in the given order");
    if (in_circle(quad[0], quad[1], quad[2], quad[3]) == Sign::Zero)
        throw Error(ErrorKind::Degenerate, "quadrilateral is cocircular");
}

// BD is the Delaunay diagonal iff C is outside the circumcircle of ABD.
bool bd_is_delaunay(const Quad& q)
{
    return in_circle(q[0], q[1], q[3], q[2]) == Sign::Negative;
}

}  // namespace

Lemma2Result lemma2_relation(const Quad& input)
{
    require_convex_general(input);
    Lemma2Result r;
    Quad q = input;
    if (!bd_is_delaunay(q)) {
        q = {input[1], input[2], input[3], input[0]};
        r.relabeled = true;
    }
    const auto& [A, B, C, D] = q;
    r.radii2 = {circumradius2(A, B, D), circumradius2(B, C, D), circumradius2(A, B, C), circumradius2(A, D, C)};
    for (std::size_t i = 0; i < 4; ++i)
        r.radii[i] = sqrt(to_real(r.radii2[i]));

    const Rational& abd = r.radii2[0];
    const Rational& bcd = r.radii2[1];
    const Rational& abc = r.radii2[2];
    const Rational& adc = r.radii2[3];
    if (abd < abc && abd < adc && bcd < abc && bcd < adc)
        r.relation = 1;
    else if (abd < abc && abc < bcd && bcd < adc)
        r.relation = 2;
    else if (abd < adc && adc < bcd && bcd < abc)
        r.relation = 3;
    else if (bcd < abc && abc < abd && abd < adc)
        r.relation = 4;
    else if (bcd < adc && adc < abd && abd < abc)
        r.relation = 5;
    else
        throw Error(ErrorKind::LemmaViolation, "no radius relation holds");
    return r;
}

LctResult lct_check(const FunctionalSpec& input_spec, const Quad& quad, const std::optional<HeightField>& heights)
{
    require_convex_general(quad);
    FunctionalSpec spec = input_spec;
    if (spec.needs_heights()) {
        if (heights)
            spec = spec.with_heights(*heights);
        if (!spec.heights || spec.heights->values.size() != 4)
            throw Error(ErrorKind::HeightFieldMismatch, "lct_check on " + spec.name() + " needs four heights");
    }

    const SiteSet sites(std::vector<Point>(quad.begin(), quad.end()));
    const std::array<Simplex, 2> t_ac = {Simplex{0, 1, 2}, Simplex{0, 2, 3}};
    const std::array<Simplex, 2> t_bd = {Simplex{0, 1, 3}, Simplex{1, 2, 3}};
    const bool bd = bd_is_delaunay(quad);

    LctResult r;
    r.dt_diagonal = bd ? Edge(1, 3) : Edge(0, 2);
    r.other_diagonal = bd ? Edge(0, 2) : Edge(1, 3);
    r.dt_value = evaluate_simplices(spec, sites, bd ? t_bd : t_ac);
    r.other_value = evaluate_simplices(spec, sites, bd ? t_ac : t_bd);

    const Comparison c = compare(r.other_value, r.dt_value);
    r.near_tie = c == Comparison::NearTie;
    if (spec.goal() == Goal::Minimize)
        r.holds = c != Comparison::Less;
    else
        r.holds = c != Comparison::Greater;
    return r;
}

}  // namespace dfl
