#pragma once

#include "dfl/functionals.hpp"

#include <cstdint>
#include <random>

namespace dfl {

using Rng = std::mt19937_64;

/// Independent stream for iteration `index` of a run seeded with `seed`, so
/// results do not depend on the order in which iterations execute.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform grid value k / 2^bits with k in [0, 2^bits).
Rational random_grid(Rng& rng, unsigned bits = 10);

/// n sites in [0,1)^d on the 2^-10 grid, rejection-sampled until they are
/// pairwise distinct and in general position.
SiteSetPtr random_sites(Rng& rng, std::size_t n, std::size_t d = 2);

/// Strictly convex, non-cocircular quad in counter-clockwise order.
Quad random_convex_quad(Rng& rng);

/// Heights uniform on the grid over [-scale, scale).
HeightField random_heights(Rng& rng, std::size_t n, const Rational& scale = 1);

/// Triangulation reached by `steps` uniformly chosen legal flips from `t`.
Triangulation random_flip_walk(Rng& rng, const Triangulation& t, std::size_t steps);

}  // namespace dfl
