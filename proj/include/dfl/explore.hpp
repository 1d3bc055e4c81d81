#pragma once

#include "dfl/delaunay.hpp"
#include "dfl/functionals.hpp"
#include "dfl/random.hpp"

#include <map>
#include <optional>

namespace dfl {

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationResult {
    std::vector<Triangulation> triangulations;  // sorted by key
    std::vector<std::string> keys;
    std::string dt_key;
    /// Set when the site set is not in general position.
    bool degenerate = false;

    std::size_t count() const noexcept { return triangulations.size(); }
    std::optional<std::size_t> index_of(const std::string& key) const;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// All triangulations of a planar site set: breadth-first closure of the
/// Delaunay triangulation under legal edge flips (the flip graph of a planar
/// point set is connected).
EnumerationResult enumerate_triangulations(const SiteSetPtr& sites, std::size_t cap = kDefaultEnumerationCap);

/// Independent oracle: backtracking over empty triangles, closing one open
/// edge at a time. Returns sorted canonical keys.
std::vector<std::string> tile_triangulations(const SiteSet& sites);

// ---------------------------------------------------------------------------
// Optimality verification

struct VerificationReport {
    FunctionalSpec functional;
    std::string dt_key;
    std::vector<std::string> optimum_keys;
    bool dt_is_optimal = false;
    bool dt_is_unique_optimal = false;
    /// Some optimum differs from the best only within float tolerance.
    bool undecided = false;
    bool degeneracy_caveat = false;
    std::map<std::string, FunctionalValue> values;
    std::size_t triangulation_count = 0;
};

VerificationReport verify_optimality(const EnumerationResult& all, const FunctionalSpec& spec);
VerificationReport verify_optimality(const SiteSetPtr& sites, const FunctionalSpec& spec);

struct RadiusSequenceReport {
    bool holds = true;
    std::optional<std::string> violator_key;
    std::size_t compared = 0;
};

/// The sorted circumradius sequence of the Delaunay triangulation is
/// pointwise <= that of every other triangulation. Equivalent to
/// sum phi(R) being minimal for every increasing phi: take phi as the
/// indicator step of (r, inf) for each threshold r.
RadiusSequenceReport verify_radius_sequence(const EnumerationResult& all);
RadiusSequenceReport verify_radius_sequence(const SiteSetPtr& sites);

struct AngleSequenceReport {
    /// The Delaunay ascending angle sequence is lexicographically >= all others.
    bool dt_lex_max = true;
    std::optional<std::string> violator_key;
};

AngleSequenceReport verify_angle_sequence(const EnumerationResult& all);

// ---------------------------------------------------------------------------
// Flip descent

struct FlipStep {
    Edge removed;
    Edge added;
    FunctionalValue value;  // whole-triangulation value after the flip
};

struct DescentResult {
    Triangulation fixpoint;
    std::vector<FlipStep> trace;
};

/// Repeatedly flips the first (in sorted edge order) interior edge whose
/// quadrilateral strictly improves `spec`, until no such edge remains.
DescentResult flip_descent(const Triangulation& start, const FunctionalSpec& spec);

// ---------------------------------------------------------------------------
// n = d + 2 configurations

/// Every triangulation of d+2 sites (d in {2,3}), found by testing all
/// subsets of the d+2 candidate simplices. One or two results.
std::vector<Triangulation> small_triangulations(const SiteSetPtr& sites);

/// Five sites in R^3 with no four coplanar.
std::vector<Triangulation> two_triangulations_3d(const SiteSetPtr& sites);

struct QuadraticFormSummary {
    std::string first_key;
    std::string second_key;
    /// B(Y) = DF(first, Y) - DF(second, Y) = Y^T M Y.
    Matrix matrix;
    std::vector<double> singular_values;  // descending
    double rank1_residual = 0;            // sigma_2 / sigma_1
    std::size_t exact_rank = 0;
    /// Rational basis of {Y : M Y = 0}.
    std::vector<std::vector<Rational>> kernel;
    /// B vanishes exactly on every kernel vector (checked through DF).
    bool kernel_vanishes = false;
    /// When rank is 1: B(Y) = coefficient * (linear_form . Y)^2.
    std::vector<Rational> linear_form;
    Rational coefficient = 0;
};

QuadraticFormSummary theorem8_form(const SiteSetPtr& sites);

// ---------------------------------------------------------------------------
// Counterexample search

enum class SearchKind { HrmK, SvPlanar, Dst3d, Hrm3d };

std::string_view to_string(SearchKind kind);
SearchKind parse_search_kind(std::string_view text);

struct SearchParams {
    Rational k = 3;              // HrmK
    std::size_t sites = 6;       // SvPlanar
    Rational height_scale = 4;   // SvPlanar, Dst3d
};

struct Witness {
    SiteSetPtr sites;
    std::optional<HeightField> heights;
    FunctionalSpec functional;
    /// Delaunay triangulation first, then the better competitor.
    std::vector<Triangulation> triangulations;
    std::vector<FunctionalValue> values;
    std::vector<bool> delaunay;
    bool exact = false;
};

struct SearchReport {
    SearchKind kind;
    SearchParams params;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t iterations = 0;
    bool found = false;
    std::map<std::string, std::uint64_t> stats;
    std::optional<Witness> witness;
};

SearchReport search_counterexample(SearchKind kind, const SearchParams& params, std::uint64_t seed,
                                   std::uint64_t budget);

// ---------------------------------------------------------------------------
// SV small-height probe

struct SvProbeRow {
    Rational scale;
    std::vector<std::string> minimizer_keys;
    bool is_dt = false;  // Delaunay is the unique minimizer
    bool undecided = false;
};

struct SvProbeReport {
    std::string dt_key;
    std::vector<SvProbeRow> rows;
    /// Largest tested scale s such that every decided scale <= s has the
    /// Delaunay triangulation as unique SV minimizer.
    std::optional<Rational> threshold;
};

/// 1, 1/2, ..., 2^-20.
std::vector<Rational> default_probe_scales();

SvProbeReport sv_epsilon_probe(const EnumerationResult& all, const HeightField& direction,
                               const std::vector<Rational>& scales = default_probe_scales());
SvProbeReport sv_epsilon_probe(const SiteSetPtr& sites, const HeightField& direction,
                               const std::vector<Rational>& scales = default_probe_scales());

}  // namespace dfl
