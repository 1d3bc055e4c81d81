#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace dfl;
using dfl::test::as_double;
using dfl::test::error_kind;
using dfl::test::sites_of;

namespace {

constexpr double kPi = std::numbers::pi;

SiteSetPtr quad_sites()
{
    return sites_of({{"0", "0"}, {"2", "0"}, {"3", "2"}, {"0", "2"}});
}

Triangulation single(const SiteSetPtr& s)
{
    return Triangulation(s, {Simplex{0, 1, 2}});
}

Quad reference_quad()
{
    return {make_point({"0", "0"}), make_point({"2", "0"}), make_point({"3", "2"}), make_point({"0", "2"})};
}

double dx(const Point& p, std::size_t i)
{
    return p[i].get_d();
}

// Independent float oracles built from coordinates only.

double oracle_circumradius(const Point& a, const Point& b, const Point& c)
{
    const double ax = dx(a, 0), ay = dx(a, 1), bx = dx(b, 0), by = dx(b, 1), cx = dx(c, 0), cy = dx(c, 1);
    const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d;
    return std::hypot(ax - ux, ay - uy);
}

double oracle_lifted_area(const Point& a, const Point& b, const Point& c, double ya, double yb, double yc)
{
    const double u[3] = {dx(b, 0) - dx(a, 0), dx(b, 1) - dx(a, 1), yb - ya};
    const double v[3] = {dx(c, 0) - dx(a, 0), dx(c, 1) - dx(a, 1), yc - ya};
    const double n[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    return 0.5 * std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
}

// Exact |grad|^2 * area of the linear interpolant on a triangle.
Rational gradient_energy(const Point& a, const Point& b, const Point& c, const Rational& ya, const Rational& yb,
                         const Rational& yc)
{
    const Rational e1x = b[0] - a[0], e1y = b[1] - a[1], e2x = c[0] - a[0], e2y = c[1] - a[1];
    const Rational det = e1x * e2y - e1y * e2x;
    const Rational d1 = yb - ya, d2 = yc - ya;
    const Rational gx = (d1 * e2y - d2 * e1y) / det;
    const Rational gy = (e1x * d2 - e2x * d1) / det;
    return (gx * gx + gy * gy) * abs(det) / 2;
}

double oracle_min_angle(const Point& a, const Point& b, const Point& c)
{
    auto ang = [](const Point& o, const Point& p, const Point& q) {
        const double ux = dx(p, 0) - dx(o, 0), uy = dx(p, 1) - dx(o, 1);
        const double vx = dx(q, 0) - dx(o, 0), vy = dx(q, 1) - dx(o, 1);
        return std::acos((ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy)));
    };
    return std::min({ang(a, b, c), ang(b, c, a), ang(c, a, b)});
}

Point regular_vertex(int n, int i)
{
    // 40 significant digits; the k=1 hrm tolerance is 1e-12.
    const long double t = 2.0L * std::numbers::pi_v<long double> * i / n;
    char buf[2][64];
    std::snprintf(buf[0], sizeof buf[0], "%.30Lf", std::cos(t));
    std::snprintf(buf[1], sizeof buf[1], "%.30Lf", std::sin(t));
    return Point{parse_rational(buf[0]), parse_rational(buf[1])};
}

}  // namespace

TEST_CASE("C2 and V examples")
{
    auto s = sites_of({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    CHECK(eval_c2(single(s)).exact_part() == Rational(1, 9));
    CHECK(eval_c2(single(s), make_point({"1/3", "1/3"})).exact_part() == 0);
    CHECK(eval_v(single(s)).exact_part() == 1);
    auto tet = sites_of({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    const Triangulation t3(tet, {Simplex{0, 1, 2, 3}});
    CHECK(eval_v(t3).exact_part() == Rational(1, 2));
    CHECK(identity_residual(single(s)) == 0);
    CHECK(identity_residual(t3) == 0);
}

TEST_CASE("identity residual vanishes on random triangulations")
{
    for (std::uint64_t trial = 0; trial < 80; ++trial) {
        auto rng = stream_rng(41, trial);
        auto sites = random_sites(rng, 4 + trial % 5);
        const auto t = random_flip_walk(rng, build_dt(sites), 6);
        CHECK(identity_residual(t) == 0);
    }
}

TEST_CASE("C2 differences do not depend on the origin")
{
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = stream_rng(42, trial);
        auto sites = random_sites(rng, 6);
        const auto a = build_dt(sites);
        const auto b = random_flip_walk(rng, a, 5);
        const Point o1 = dfl::test::random_point(rng, 2), o2 = dfl::test::random_point(rng, 2);
        CHECK(eval_c2(a, o1).exact_part() - eval_c2(b, o1).exact_part()
              == eval_c2(a, o2).exact_part() - eval_c2(b, o2).exact_part());
    }
}

TEST_CASE("mean radius examples")
{
    auto s = sites_of({{"0", "0"}, {"2", "0"}, {"0", "2"}});
    CHECK(as_double(eval_mean_radius(single(s), Phi::Identity).value()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    const auto sq = eval_mean_radius(single(s), Phi::Square);
    CHECK(sq.is_exact());
    CHECK(sq.exact_part() == 2);

    auto q = quad_sites();
    const Triangulation bd(q, {Simplex{0, 1, 3}, Simplex{1, 2, 3}});
    const Triangulation ac(q, {Simplex{0, 1, 2}, Simplex{0, 2, 3}});
    const double v_bd = as_double(eval_mean_radius(bd, Phi::Identity).value());
    const double v_ac = as_double(eval_mean_radius(ac, Phi::Identity).value());
    CHECK(v_bd == doctest::Approx(std::sqrt(2.0) + std::sqrt(2.5)).epsilon(1e-12));
    CHECK(v_ac == doctest::Approx(std::sqrt(4.0625) + std::sqrt(3.25)).epsilon(1e-12));
    CHECK(v_bd == doctest::Approx(2.995352392457285).epsilon(1e-12));
    CHECK(v_ac == doctest::Approx(3.818340074806632).epsilon(1e-12));
    CHECK(v_bd < v_ac);
    const auto custom = eval_mean_radius(bd, [](Real r) { return r * r * r; });
    CHECK(as_double(custom.value()) == doctest::Approx(std::pow(2.0, 1.5) + std::pow(2.5, 1.5)).epsilon(1e-12));
}

TEST_CASE("mean radius matches the circumcenter oracle")
{
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        auto rng = stream_rng(43, trial);
        auto sites = random_sites(rng, 7);
        const auto t = random_flip_walk(rng, build_dt(sites), 4);
        double sum = 0, logs = 0;
        for (const auto& s : t.simplices()) {
            const auto p = t.points_of(s);
            const double r = oracle_circumradius(p[0], p[1], p[2]);
            sum += r;
            logs += std::log(r);
        }
        CHECK(as_double(eval_mean_radius(t, Phi::Identity).value()) == doctest::Approx(sum).epsilon(1e-9));
        CHECK(as_double(eval_mean_radius(t, Phi::Log).value()) == doctest::Approx(logs).epsilon(1e-9));
    }
}

TEST_CASE("lemma relation on the reference quad")
{
    const auto r = lemma2_relation(reference_quad());
    CHECK(r.relation == 1);
    CHECK_FALSE(r.relabeled);
    CHECK(r.radii2[0] == 2);
    CHECK(r.radii2[1] == Rational(5, 2));
    CHECK(r.radii2[2] == Rational(65, 16));
    CHECK(r.radii2[3] == Rational(13, 4));
    CHECK(as_double(r.radii[0]) == doctest::Approx(1.414).epsilon(1e-3));
    CHECK(as_double(r.radii[2]) == doctest::Approx(2.016).epsilon(1e-3));
    CHECK(as_double(r.radii[3]) == doctest::Approx(1.803).epsilon(1e-3));
    CHECK(as_double(r.radii[1]) == doctest::Approx(1.581).epsilon(1e-3));
}

TEST_CASE("lemma relation coverage and errors")
{
    Quad square{make_point({"0", "0"}), make_point({"1", "0"}), make_point({"1", "1"}), make_point({"0", "1"})};
    CHECK(error_kind([&] { (void)lemma2_relation(square); }) == ErrorKind::Degenerate);
    Quad reflex{make_point({"0", "0"}), make_point({"4", "0"}), make_point({"1", "1"}), make_point({"0", "4"})};
    CHECK(error_kind([&] { (void)lemma2_relation(reflex); }) == ErrorKind::NotConvex);
    Quad near{make_point({"0", "0"}), make_point({"1", "0.001"}), make_point({"1", "1"}), make_point({"0", "1"})};
    const int rel = lemma2_relation(near).relation;
    CHECK(rel >= 1);
    CHECK(rel <= 5);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        auto rng = stream_rng(44, i);
        const int k = lemma2_relation(random_convex_quad(rng)).relation;
        CHECK(k >= 1);
        CHECK(k <= 5);
    }
}

TEST_CASE("hrm examples")
{
    auto right = sites_of({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    const auto v = eval_hrm(single(right));
    CHECK(v.is_exact());
    CHECK(v.exact_part() == 8);

    auto eq = sites_of({{"0", "0"}, {"2", "0"}, {"1", "1.7320508075688772935274463415058723669"}});
    CHECK(as_double(eval_hrm(single(eq)).value()) == doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(error_kind([&] { (void)eval_hrm(single(right), Rational(1, 4)); }) == ErrorKind::BadExponent);

    const auto half = eval_hrm(single(right), Rational(1, 2));
    CHECK_FALSE(half.is_exact());
    CHECK(as_double(half.value()) == doctest::Approx((2 + std::sqrt(2.0)) / std::sqrt(0.5)).epsilon(1e-12));
    const auto k2 = eval_hrm(single(right), 2);
    CHECK(k2.exact_part() == Rational(1 + 1 + 4) / Rational(1, 4));
}

TEST_CASE("hrm lower bound and similarity invariance")
{
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto rng = stream_rng(45, trial);
        auto s = random_sites(rng, 3);
        const auto t = single(s);
        const Rational h = eval_hrm(t).exact_part();
        CHECK(h.get_d() >= 4 * std::sqrt(3.0));
        // Rotation by the rational angle (3/5, 4/5), scaling and translation.
        const Rational c(3, 5), sn(4, 5), f = random_grid(rng) + 1;
        std::vector<Point> moved;
        for (std::size_t i = 0; i < 3; ++i) {
            const Point& p = (*s)[i];
            moved.push_back(Point{f * (c * p[0] - sn * p[1]) + 7, f * (sn * p[0] + c * p[1]) - 2});
        }
        CHECK(eval_hrm(single(make_sites(moved))).exact_part() == h);
        CHECK(as_double(eval_hrm(single(make_sites(moved)), 3).value())
              == doctest::Approx(as_double(eval_hrm(t, 3).value())).epsilon(1e-12));
    }
}

TEST_CASE("hrm of polygons")
{
    std::vector<Point> square{make_point({"0", "0"}), make_point({"1", "0"}), make_point({"1", "1"}), make_point({"0", "1"})};
    CHECK(eval_hrm_polygon(square).exact_part() == 4);
    std::vector<Point> rect{make_point({"0", "0"}), make_point({"2", "0"}), make_point({"2", "1"}), make_point({"0", "1"})};
    CHECK(eval_hrm_polygon(rect).exact_part() == 5);
    for (int n = 3; n <= 12; ++n) {
        std::vector<Point> poly;
        for (int i = 0; i < n; ++i)
            poly.push_back(regular_vertex(n, i));
        CHECK(as_double(eval_hrm_polygon(poly).value()) == doctest::Approx(4 * std::tan(kPi / n)).epsilon(1e-12));
    }
    std::vector<Point> bow{make_point({"0", "0"}), make_point({"1", "1"}), make_point({"1", "0"}), make_point({"0", "1"})};
    CHECK(error_kind([&] { (void)eval_hrm_polygon(bow); }) == ErrorKind::SelfIntersecting);
    std::vector<Point> flat{make_point({"0", "0"}), make_point({"1", "0"}), make_point({"2", "0"})};
    CHECK(error_kind([&] { (void)eval_hrm_polygon(flat); }) == ErrorKind::ZeroArea);
}

TEST_CASE("hrm of tetrahedra")
{
    std::vector<Point> corner{make_point({"0", "0", "0"}), make_point({"1", "0", "0"}), make_point({"0", "1", "0"}),
                              make_point({"0", "0", "1"})};
    const double expected = (3.0 / 8 + 3 * std::sqrt(3.0) / 8) * 36;
    CHECK(as_double(eval_hrm_simplex3(corner).value()) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(as_double(eval_hrm_simplex3(corner).value()) == doctest::Approx(36.882685902179844).epsilon(1e-12));

    // Regular tetrahedron on alternate cube corners.
    std::vector<Point> reg{make_point({"0", "0", "0"}), make_point({"1", "1", "0"}), make_point({"1", "0", "1"}),
                           make_point({"0", "1", "1"})};
    const double face = std::sqrt(3.0) / 4, vol = std::sqrt(2.0) / 12;
    CHECK(as_double(eval_hrm_simplex3(reg).value())
          == doctest::Approx(4 * face * face * face / (vol * vol)).epsilon(1e-12));
    CHECK(as_double(eval_hrm_simplex3(reg).value()) == doctest::Approx(23.382685902179837).epsilon(1e-12));

    std::vector<Point> big;
    for (const auto& p : corner)
        big.push_back(p.scaled(Rational(7, 3)));
    CHECK(as_double(eval_hrm_simplex3(big).value())
          == doctest::Approx(as_double(eval_hrm_simplex3(corner).value())).epsilon(1e-12));
    std::vector<Point> flat{make_point({"0", "0", "0"}), make_point({"1", "0", "0"}), make_point({"0", "1", "0"}),
                            make_point({"1", "1", "0"})};
    CHECK(error_kind([&] { (void)eval_hrm_simplex3(flat); }) == ErrorKind::DegenerateTetrahedron);
}

TEST_CASE("SV examples and lifted-area oracle")
{
    auto s = sites_of({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    const auto v = eval_sv(single(s), HeightField{{1, 0, 0}});
    CHECK(as_double(v.value()) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(error_kind([&] { (void)eval_sv(single(s), HeightField{{1, 0}}); }) == ErrorKind::HeightFieldMismatch);

    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = stream_rng(46, trial);
        auto sites = random_sites(rng, 7);
        const auto t = random_flip_walk(rng, build_dt(sites), 4);
        const HeightField h = random_heights(rng, 7, 2);
        double area = 0;
        for (const auto& sx : t.simplices()) {
            const auto p = t.points_of(sx);
            area += oracle_lifted_area(p[0], p[1], p[2], h.values[sx[0]].get_d(), h.values[sx[1]].get_d(),
                                       h.values[sx[2]].get_d());
        }
        CHECK(as_double(eval_sv(t, h).value()) == doctest::Approx(area).epsilon(1e-12));

        // Flat heights give the hull area exactly; larger heights never shrink SV.
        const HeightField flat{std::vector<Rational>(7, Rational(3))};
        const auto fv = eval_sv(t, flat);
        CHECK(fv.exact_part() == sites->hull_volume());
        CHECK(fv.is_exact());
        CHECK(compare(eval_sv(t, h.scaled(2)), eval_sv(t, h)) == Comparison::Greater);
    }
}

TEST_CASE("DF examples and gradient oracle")
{
    auto s = sites_of({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    CHECK(eval_df(single(s), HeightField{{1, 0, 0}}).exact_part() == 1);
    CHECK(eval_df(single(s), HeightField{{5, 5, 5}}).exact_part() == 0);

    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = stream_rng(47, trial);
        auto sites = random_sites(rng, 7);
        const auto t = random_flip_walk(rng, build_dt(sites), 4);
        const HeightField h = random_heights(rng, 7, 2);
        Rational energy = 0;
        for (const auto& sx : t.simplices()) {
            const auto p = t.points_of(sx);
            energy += gradient_energy(p[0], p[1], p[2], h.values[sx[0]], h.values[sx[1]], h.values[sx[2]]);
        }
        const auto df = eval_df(t, h);
        CHECK(df.is_exact());
        CHECK(df.exact_part() == energy);

        const Rational a = dfl::test::signed_grid(rng) * 3, b = dfl::test::signed_grid(rng);
        HeightField affine_shift;
        for (const auto& y : h.values)
            affine_shift.values.push_back(a * y + b);
        CHECK(eval_df(t, affine_shift).exact_part() == a * a * df.exact_part());

        const Rational gx = dfl::test::signed_grid(rng), gy = dfl::test::signed_grid(rng);
        HeightField linear;
        for (std::size_t i = 0; i < sites->size(); ++i)
            linear.values.push_back(gx * (*sites)[i][0] + gy * (*sites)[i][1] + b);
        CHECK(eval_df(t, linear).exact_part() == (gx * gx + gy * gy) * sites->hull_volume());
    }
}

TEST_CASE("DF in three dimensions is exact")
{
    auto s = sites_of({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    const Triangulation t(s, {Simplex{0, 1, 2, 3}});
    // Linear field y = x + 2y + 3z: |grad|^2 * vol = 7/3.
    CHECK(eval_df(t, HeightField{{0, 1, 2, 3}}).exact_part() == Rational(7, 3));
}

TEST_CASE("min-angle sum and angle sequences")
{
    auto right = sites_of({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    CHECK(as_double(eval_min_angle_sum(single(right)).value()) == doctest::Approx(kPi / 4).epsilon(1e-12));
    auto eq = sites_of({{"0", "0"}, {"2", "0"}, {"1", "1.7320508075688772935274463415058723669"}});
    CHECK(as_double(eval_min_angle_sum(single(eq)).value()) == doctest::Approx(kPi / 3).epsilon(1e-12));

    auto q = quad_sites();
    const Triangulation bd(q, {Simplex{0, 1, 3}, Simplex{1, 2, 3}});
    const Triangulation ac(q, {Simplex{0, 1, 2}, Simplex{0, 2, 3}});
    const auto sa = angle_sequence(bd), sb = angle_sequence(ac);
    REQUIRE(sa.size() == 6);
    CHECK(std::is_sorted(sa.begin(), sa.end()));
    CHECK(std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end()));
    double oracle = 0;
    for (const auto& s : bd.simplices()) {
        const auto p = bd.points_of(s);
        oracle += oracle_min_angle(p[0], p[1], p[2]);
    }
    CHECK(as_double(eval_min_angle_sum(bd).value()) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("min-angle sum fails the local circle test on some convex quads")
{
    // Found by `dfl lct --fn minangle --random 2000 --seed 0`.
    Quad q{make_point({"0.013671875", "0.748046875"}), make_point({"0.5703125", "0.0576171875"}),
           make_point({"0.748046875", "0.19921875"}), make_point({"0.8525390625", "0.466796875"})};
    const auto r = lct_check(FunctionalSpec::min_angle_sum(), q);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.near_tie);
    CHECK(r.dt_diagonal == Edge(0, 2));
    CHECK(as_double(r.other_value.value()) > as_double(r.dt_value.value()));
    // The Delaunay side still wins on the smallest angle.
    const auto sites = make_sites(std::vector<Point>(q.begin(), q.end()));
    const Triangulation dt(sites, {Simplex{0, 1, 2}, Simplex{0, 2, 3}});
    const Triangulation other(sites, {Simplex{0, 1, 3}, Simplex{1, 2, 3}});
    CHECK(angle_sequence(dt).front() > angle_sequence(other).front());
}

TEST_CASE("lct examples")
{
    const auto hrm = lct_check(FunctionalSpec::hrm(), reference_quad());
    CHECK(hrm.holds);
    CHECK(hrm.dt_diagonal == Edge(1, 3));
    CHECK(hrm.dt_value.exact_part() == Rational(46, 3));
    CHECK(lct_check(FunctionalSpec::c2(), reference_quad()).holds);
    CHECK(lct_check(FunctionalSpec::v(), reference_quad()).holds);
    CHECK(lct_check(FunctionalSpec::df({}), reference_quad(), HeightField{{1, 0, 2, -1}}).holds);
    CHECK(error_kind([] { (void)lct_check(FunctionalSpec::df({}), reference_quad()); }).has_value());
    Quad square{make_point({"0", "0"}), make_point({"1", "0"}), make_point({"1", "1"}), make_point({"0", "1"})};
    CHECK(error_kind([&] { (void)lct_check(FunctionalSpec::v(), square); }) == ErrorKind::Degenerate);
}

TEST_CASE("LCT functionals pass on random convex quads")
{
    std::vector<FunctionalSpec> specs{FunctionalSpec::c2(), FunctionalSpec::v(), FunctionalSpec::hrm(),
                                      FunctionalSpec::mean_radius(Phi::Identity), FunctionalSpec::mean_radius(Phi::Square),
                                      FunctionalSpec::mean_radius(Phi::Sqrt), FunctionalSpec::mean_radius(Phi::Log),
                                      FunctionalSpec::df({})};
    for (std::uint64_t i = 0; i < 2000; ++i) {
        auto rng = stream_rng(48, i);
        const Quad q = random_convex_quad(rng);
        const HeightField h = random_heights(rng, 4);
        for (const auto& spec : specs) {
            const auto r = lct_check(spec, q, spec.needs_heights() ? std::optional(h) : std::nullopt);
            CHECK((r.holds || r.near_tie));
        }
        // Small heights: the surface-area functional behaves like V.
        const auto sv = lct_check(FunctionalSpec::sv({}), q, h.scaled(Rational(1, 1024)));
        CHECK((sv.holds || sv.near_tie));
    }
}

TEST_CASE("functional values compare exactly or within tolerance")
{
    CHECK(compare(FunctionalValue::exact(1), FunctionalValue::exact(2)) == Comparison::Less);
    CHECK(compare(FunctionalValue::exact(Rational(1, 3)), FunctionalValue::exact(Rational(2, 6))) == Comparison::Equal);
    CHECK(compare(FunctionalValue::approximate(Real(1)), FunctionalValue::approximate(Real(1) + Real(1e-14)))
          == Comparison::NearTie);
    CHECK(compare(FunctionalValue::approximate(Real(1)), FunctionalValue::approximate(Real(1.001))) == Comparison::Less);
    // Split values with equal exact parts compare on the inexact remainder.
    CHECK(compare(FunctionalValue::split(5, Real(1e-20)), FunctionalValue::split(5, Real(2e-20))) == Comparison::Less);
    CHECK(compare(FunctionalValue::split(5, Real(0)), FunctionalValue::split(5, Real(0))) == Comparison::NearTie);
    CHECK(strictly_better(FunctionalValue::exact(2), FunctionalValue::exact(1), Goal::Maximize));
    CHECK_FALSE(strictly_better(FunctionalValue::approximate(Real(1)), FunctionalValue::approximate(Real(1) + Real(1e-14)),
                                Goal::Minimize));
}

TEST_CASE("evaluate validates")
{
    auto q = quad_sites();
    const Triangulation broken(q, {Simplex{0, 1, 2}});
    CHECK(error_kind([&] { (void)evaluate(FunctionalSpec::v(), broken); }) == ErrorKind::InvalidTriangulation);
    CHECK(FunctionalSpec::c2().goal() == Goal::Maximize);
    CHECK(FunctionalSpec::min_angle_sum().goal() == Goal::Maximize);
    CHECK(FunctionalSpec::hrm(3).goal() == Goal::Minimize);
    CHECK(FunctionalSpec::hrm(3).name() == "hrm(k=3)");
    CHECK(FunctionalSpec::mean_radius(Phi::Sqrt).name() == "radius(sqrt)");
}
