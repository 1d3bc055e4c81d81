#pragma once

#include "dfl/explore.hpp"

#include <doctest.h>

#include <functional>
#include <optional>

namespace dfl::test {

/// Kind of the dfl::Error thrown by `f`, or nullopt when nothing is thrown.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

/// Uniform rational in [-1, 1) on the 2^-10 grid.
inline Rational signed_grid(Rng& rng)
{
    return 2 * random_grid(rng) - 1;
}

inline Point random_point(Rng& rng, std::size_t d)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i)
        c.push_back(signed_grid(rng));
    return Point(std::move(c));
}

/// d+1 random points spanning a non-degenerate simplex.
inline std::vector<Point> random_simplex(Rng& rng, std::size_t d)
{
    while (true) {
        std::vector<Point> s;
        for (std::size_t i = 0; i <= d; ++i)
            s.push_back(random_point(rng, d));
        if (orientation(s) != Sign::Zero)
            return s;
    }
}

inline SiteSetPtr sites_of(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<Point> pts;
    for (auto r : rows)
        pts.push_back(make_point(r));
    return make_sites(std::move(pts));
}

inline double as_double(const Real& r)
{
    return static_cast<double>(r);
}

}  // namespace dfl::test
