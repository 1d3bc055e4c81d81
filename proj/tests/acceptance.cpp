// Acceptance checks. `acceptance N` runs criterion N (1..11) and prints one
// [PASS]/[FAIL] line; without arguments every criterion runs in turn.

#include "dfl/explore.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

using namespace dfl;

namespace {

constexpr std::uint64_t kTrialSeed = 2000;
constexpr std::size_t kTrialCount = 100;
constexpr double kFloatTolerance = 1e-12;
constexpr double kRankTolerance = 1e-10;

struct Outcome {
    bool pass;
    std::string detail;
};

/// The shared planar trials: 100 general-position site sets, 20 each of
/// n = 4..8, with their full enumerations.
const std::vector<EnumerationResult>& planar_trials()
{
    static const std::vector<EnumerationResult> trials = [] {
        std::vector<EnumerationResult> out;
        for (std::size_t i = 0; i < kTrialCount; ++i) {
            Rng rng = stream_rng(kTrialSeed, i);
            out.push_back(enumerate_triangulations(random_sites(rng, 4 + i % 5)));
        }
        return out;
    }();
    return trials;
}

SiteSetPtr spatial_pair_sites(Rng& rng)
{
    while (true) {
        auto s = random_sites(rng, 5, 3);
        if (small_triangulations(s).size() == 2)
            return s;
    }
}

std::string fraction(std::size_t good, std::size_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

Outcome criterion1()
{
    std::size_t zero = 0, total = 0;
    for (std::uint64_t i = 0; i < 800; ++i) {
        Rng rng = stream_rng(1000, i);
        auto sites = random_sites(rng, 4 + i % 5);
        const auto t = random_flip_walk(rng, build_dt(sites), 8);
        require_valid(t);
        zero += identity_residual(t) == 0 ? 1 : 0;
        ++total;
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = stream_rng(1001, i);
        for (const auto& t : small_triangulations(spatial_pair_sites(rng))) {
            zero += identity_residual(t) == 0 ? 1 : 0;
            ++total;
        }
    }
    return {zero == total && total >= 1000, "identity residual exactly zero on " + fraction(zero, total)
                                                 + " triangulations (800 planar, 200 spatial)"};
}

Outcome criterion2()
{
    std::size_t c2 = 0, v = 0;
    for (const auto& all : planar_trials()) {
        c2 += verify_optimality(all, FunctionalSpec::c2()).dt_is_unique_optimal ? 1 : 0;
        v += verify_optimality(all, FunctionalSpec::v()).dt_is_unique_optimal ? 1 : 0;
    }
    const std::size_t n = planar_trials().size();
    return {c2 == n && v == n, "DT unique argmax C2 " + fraction(c2, n) + ", unique argmin V " + fraction(v, n)};
}

Outcome criterion3()
{
    std::size_t lemma_ok = 0, lemma_bad = 0;
    int histogram[6] = {};
    for (std::uint64_t i = 0; i < 100000; ++i) {
        Rng rng = stream_rng(3000, i);
        try {
            const int r = lemma2_relation(random_convex_quad(rng)).relation;
            ++histogram[r];
            ++lemma_ok;
        } catch (const Error&) {
            ++lemma_bad;
        }
    }

    std::size_t seq = 0;
    for (const auto& all : planar_trials())
        seq += verify_radius_sequence(all).holds ? 1 : 0;

    std::size_t decided = 0, unique = 0, undecided = 0;
    for (const auto& all : planar_trials()) {
        for (Phi phi : {Phi::Identity, Phi::Square, Phi::Sqrt, Phi::Log}) {
            const auto r = verify_optimality(all, FunctionalSpec::mean_radius(phi));
            if (r.undecided) {
                ++undecided;
                continue;
            }
            ++decided;
            unique += r.dt_is_unique_optimal ? 1 : 0;
        }
    }
    const std::size_t n = planar_trials().size();
    std::ostringstream d;
    d << "(a) lemma relation found on " << fraction(lemma_ok, lemma_ok + lemma_bad) << " quads [relations 1-5: "
      << histogram[1] << ' ' << histogram[2] << ' ' << histogram[3] << ' ' << histogram[4] << ' ' << histogram[5]
      << "]; (b) radius sequence dominated " << fraction(seq, n) << "; (c) sum phi(R) DT unique min "
      << fraction(unique, decided) << ", undecided " << undecided;
    return {lemma_bad == 0 && seq == n && unique == decided, d.str()};
}

Point regular_vertex(int n, int i)
{
    const long double t = 2.0L * std::numbers::pi_v<long double> * i / n;
    char x[64], y[64];
    std::snprintf(x, sizeof x, "%.30Lf", std::cos(t));
    std::snprintf(y, sizeof y, "%.30Lf", std::sin(t));
    return Point{parse_rational(x), parse_rational(y)};
}

Outcome criterion4()
{
    std::size_t unique = 0;
    for (const auto& all : planar_trials())
        unique += verify_optimality(all, FunctionalSpec::hrm()).dt_is_unique_optimal ? 1 : 0;
    std::size_t polygons = 0;
    double worst = 0;
    for (int n = 3; n <= 12; ++n) {
        std::vector<Point> poly;
        for (int i = 0; i < n; ++i)
            poly.push_back(regular_vertex(n, i));
        const double got = static_cast<double>(eval_hrm_polygon(poly).value());
        const double want = 4 * std::tan(std::numbers::pi / n);
        const double rel = std::abs(got - want) / want;
        worst = std::max(worst, rel);
        polygons += rel <= kFloatTolerance ? 1 : 0;
    }
    std::ostringstream d;
    d << "DT unique argmin hrm(t,1) " << fraction(unique, planar_trials().size()) << "; regular n-gon hrm = 4tan(pi/n) "
      << fraction(polygons, 10) << " (worst rel err " << worst << ")";
    return {unique == planar_trials().size() && polygons == 10, d.str()};
}

Outcome criterion5()
{
    std::size_t unique = 0, total = 0;
    for (std::size_t i = 0; i < planar_trials().size(); ++i) {
        const auto& all = planar_trials()[i];
        const std::size_t n = all.triangulations.front().sites().size();
        for (std::uint64_t k = 0; k < 10; ++k) {
            Rng rng = stream_rng(5000 + i, k);
            unique += verify_optimality(all, FunctionalSpec::df(random_heights(rng, n))).dt_is_unique_optimal ? 1 : 0;
            ++total;
        }
    }
    return {unique == total, "DT unique argmin DF " + fraction(unique, total) + " (10 height fields per site set)"};
}

Outcome criterion6()
{
    std::size_t found = 0, undecided_rows = 0;
    std::vector<double> thresholds;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = stream_rng(6000, i);
        const std::size_t n = 4 + i % 5;
        auto sites = random_sites(rng, n);
        const auto probe = sv_epsilon_probe(sites, random_heights(rng, n));
        for (const auto& row : probe.rows)
            undecided_rows += row.undecided ? 1 : 0;
        if (probe.threshold) {
            ++found;
            thresholds.push_back(probe.threshold->get_d());
        }
    }
    std::sort(thresholds.begin(), thresholds.end());
    std::ostringstream d;
    d << "threshold scale found for " << fraction(found, 100) << " (S, direction) pairs";
    if (!thresholds.empty())
        d << ", smallest " << thresholds.front() << ", median " << thresholds[thresholds.size() / 2];
    d << ", undecided rows " << undecided_rows;
    return {found == 100, d.str()};
}

Outcome criterion7()
{
    constexpr std::size_t kSiteSets = 10;
    constexpr std::size_t kStarts = 100;
    std::size_t reached = 0, total = 0, monotone_breaks = 0, flips = 0;
    std::size_t build_checks = 0;
    bool build_ok = true;
    std::ostringstream misses;
    for (std::uint64_t i = 0; i < kSiteSets; ++i) {
        Rng rng = stream_rng(7000, i);
        const std::size_t n = 6 + i % 3;
        auto sites = random_sites(rng, n);
        BuildStats stats;
        std::optional<Triangulation> built;
        try {
            built = build_dt(sites, &stats);
        } catch (const std::logic_error&) {
            build_ok = false;
            continue;
        }
        const Triangulation& dt = *built;
        build_checks += stats.v_decrease_checks;
        const std::string dt_key = canonical_key(dt);
        const HeightField y = random_heights(rng, n);
        std::vector<FunctionalSpec> specs{FunctionalSpec::c2(),
                                          FunctionalSpec::v(),
                                          FunctionalSpec::mean_radius(Phi::Identity),
                                          FunctionalSpec::mean_radius(Phi::Square),
                                          FunctionalSpec::mean_radius(Phi::Sqrt),
                                          FunctionalSpec::mean_radius(Phi::Log),
                                          FunctionalSpec::hrm(),
                                          FunctionalSpec::df(y),
                                          FunctionalSpec::sv(y.scaled(Rational(1, 1024)))};
        for (std::uint64_t s = 0; s < kStarts; ++s) {
            Rng walk = stream_rng(7100 + i, s);
            const Triangulation start = random_flip_walk(walk, dt, 3 * n);
            for (const auto& spec : specs) {
                const auto r = flip_descent(start, spec);
                ++total;
                flips += r.trace.size();
                if (canonical_key(r.fixpoint) == dt_key) {
                    ++reached;
                } else if (misses.tellp() < 200) {
                    misses << " [set " << i << " start " << s << ' ' << spec.name() << ']';
                }
                FunctionalValue prev = evaluate(spec, start);
                for (const auto& step : r.trace) {
                    if (!strictly_better(step.value, prev, spec.goal()))
                        ++monotone_breaks;
                    prev = step.value;
                }
            }
        }
    }
    std::ostringstream d;
    d << "descents reaching DT " << fraction(reached, total) << " (" << kSiteSets << " site sets x " << kStarts
      << " starts x 9 functionals, " << flips << " flips), non-monotone steps " << monotone_breaks
      << ", build V-decrease checks " << build_checks << (build_ok ? " all held" : " FIRED") << misses.str();
    return {reached == total && monotone_breaks == 0 && build_ok, d.str()};
}

Outcome criterion8()
{
    std::size_t good = 0;
    double worst = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = stream_rng(8000, i);
        const auto form = theorem8_form(spatial_pair_sites(rng));
        worst = std::max(worst, form.rank1_residual);
        const bool kernel_ok = form.kernel.size() == 4 && form.kernel_vanishes;
        good += form.rank1_residual < kRankTolerance && form.exact_rank == 1 && kernel_ok ? 1 : 0;
    }
    std::ostringstream d;
    d << "rank-one form with vanishing kernel " << fraction(good, 100) << ", worst sigma2/sigma1 " << worst;
    return {good == 100, d.str()};
}

Outcome criterion9()
{
    bool all = true;
    std::ostringstream d;
    for (SearchKind kind : {SearchKind::HrmK, SearchKind::SvPlanar, SearchKind::Dst3d, SearchKind::Hrm3d}) {
        SearchParams p;
        p.k = 3;
        p.sites = 6;
        const auto r = search_counterexample(kind, p, 0, 100000);
        bool ok = r.found;
        if (ok) {
            const Witness& w = *r.witness;
            const FunctionalValue a = evaluate(w.functional, w.triangulations[0]);
            const FunctionalValue b = evaluate(w.functional, w.triangulations[1]);
            ok = w.delaunay[0] && !w.delaunay[1] && is_delaunay(w.triangulations[0]).delaunay
                 && strictly_better(b, a, w.functional.goal());
        }
        all = all && ok;
        d << to_string(kind) << ' ' << (ok ? "witness" : "NOT_FOUND") << " after " << r.iterations << "; ";
    }
    return {all, d.str()};
}

Outcome criterion10()
{
    std::size_t agree = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = stream_rng(10000, i);
        auto sites = random_sites(rng, 3 + i % 5);
        agree += tile_triangulations(*sites) == enumerate_triangulations(sites).keys ? 1 : 0;
    }
    return {agree == 200, "flip-graph and tiler enumerations identical on " + fraction(agree, 200) + " site sets"};
}

Outcome criterion11()
{
    std::size_t max_at_dt = 0, min_at_dt = 0, lex = 0, undecided = 0;
    for (const auto& all : planar_trials()) {
        const auto r = verify_optimality(all, FunctionalSpec::min_angle_sum());
        undecided += r.undecided ? 1 : 0;
        max_at_dt += r.dt_is_unique_optimal ? 1 : 0;
        // Minimization view: is DT the unique smallest sum?
        const FunctionalValue& dt = r.values.at(all.dt_key);
        bool smallest = true;
        for (const auto& [key, v] : r.values) {
            if (key != all.dt_key && compare(v, dt) != Comparison::Greater)
                smallest = false;
        }
        min_at_dt += smallest ? 1 : 0;
        lex += verify_angle_sequence(all).dt_lex_max ? 1 : 0;
    }
    const std::size_t n = planar_trials().size();
    const bool consistent = max_at_dt == n - undecided || min_at_dt == n - undecided;
    std::ostringstream d;
    d << "min-angle sum: DT unique max " << fraction(max_at_dt, n) << ", DT unique min " << fraction(min_at_dt, n)
      << ", undecided " << undecided << " -> direction " << (consistent ? "consistent" : "INCONSISTENT")
      << "; DT angle sequence lexicographically maximal " << fraction(lex, n);
    return {consistent && max_at_dt == n - undecided && lex == n, d.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"identity residual", criterion1},
    {"C2 max and V min at DT", criterion2},
    {"circumradius lemma and sequences", criterion3},
    {"harmonic index", criterion4},
    {"Dirichlet functional", criterion5},
    {"surface area at small heights", criterion6},
    {"flip descent", criterion7},
    {"rank-one Dirichlet difference", criterion8},
    {"counterexample searches", criterion9},
    {"enumeration oracle", criterion10},
    {"min-angle direction", criterion11},
};

bool run_one(std::size_t index)
{
    const auto& [name, fn] = kCriteria[index - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " C" << index << ' ' << name << ": " << o.detail << " ("
              << static_cast<int>(secs * 10) / 10.0 << " s)" << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        const long v = std::strtol(argv[i], nullptr, 10);
        if (v < 1 || v > static_cast<long>(kCriteria.size())) {
            std::cerr << "usage: acceptance [1-" << kCriteria.size() << "]...\n";
            return 2;
        }
        which.push_back(static_cast<std::size_t>(v));
    }
    if (which.empty()) {
        for (std::size_t i = 1; i <= kCriteria.size(); ++i)
            which.push_back(i);
    }
    bool all = true;
    for (std::size_t i : which)
        all = run_one(i) && all;
    return all ? 0 : 1;
}
