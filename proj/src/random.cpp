#include "dfl/random.hpp"

#include "dfl/delaunay.hpp"

#include <algorithm>

namespace dfl {

Rng stream_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Rational random_grid(Rng& rng, unsigned bits)
{
    const std::uint64_t k = rng() >> (64 - bits);
    Rational r(static_cast<unsigned long>(k), 1UL << bits);
    r.canonicalize();
    return r;
}

namespace {

std::uint64_t below(Rng& rng, std::uint64_t n)
{
    // Multiply-shift keeps the draw independent of the standard library's
    // distribution implementation.
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace

SiteSetPtr random_sites(Rng& rng, std::size_t n, std::size_t d)
{
    while (true) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> c;
            for (std::size_t k = 0; k < d; ++k)
                c.push_back(random_grid(rng));
            pts.emplace_back(std::move(c));
        }
        try {
            auto sites = make_sites(std::move(pts));
            if (in_general_position(*sites))
                return sites;
        } catch (const Error&) {
            // duplicate or non-spanning draw
        }
    }
}

Quad random_convex_quad(Rng& rng)
{
    while (true) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(Point{random_grid(rng), random_grid(rng)});
        const auto cycle = planar_hull_cycle(pts);
        if (cycle.size() != 4)
            continue;
        Quad q{pts[cycle[0]], pts[cycle[1]], pts[cycle[2]], pts[cycle[3]]};
        if (!strictly_convex(q) || in_circle(q[0], q[1], q[2], q[3]) == Sign::Zero)
            continue;
        return q;
    }
}

HeightField random_heights(Rng& rng, std::size_t n, const Rational& scale)
{
    HeightField h;
    for (std::size_t i = 0; i < n; ++i)
        h.values.push_back((2 * random_grid(rng) - 1) * scale);
    return h;
}

Triangulation random_flip_walk(Rng& rng, const Triangulation& t, std::size_t steps)
{
    Triangulation cur = t;
    for (std::size_t i = 0; i < steps; ++i) {
        std::vector<Edge> legal;
        for (const auto& e : interior_edges(cur)) {
            if (is_flippable(cur, e))
                legal.push_back(e);
        }
        if (legal.empty())
            break;
        cur = flip_edge(cur, legal[below(rng, legal.size())]);
    }
    return cur;
}

}  // namespace dfl
