#pragma once

#include "dfl/triangulation.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace dfl {

/// Per-site scalar data y_i interpolated piecewise linearly over a
/// triangulation.
struct HeightField {
    std::vector<Rational> values;

    HeightField scaled(const Rational& factor) const;
};

enum class FunctionalKind { C2, V, MeanRadius, Hrm, Sv, Df, MinAngleSum };
enum class Phi { Identity, Square, Sqrt, Log };
enum class Goal { Minimize, Maximize };

std::string_view to_string(FunctionalKind kind);
std::string_view to_string(Phi phi);
Phi parse_phi(std::string_view text);

/// Names one functional together with its parameters.
struct FunctionalSpec {
    FunctionalKind kind = FunctionalKind::V;
    Phi phi = Phi::Identity;                    // MeanRadius
    Rational k = 1;                             // Hrm
    std::optional<Point> origin;                // C2; zero when absent
    std::shared_ptr<const HeightField> heights; // Sv, Df

    static FunctionalSpec c2(std::optional<Point> origin = std::nullopt);
    static FunctionalSpec v();
    static FunctionalSpec mean_radius(Phi phi);
    static FunctionalSpec hrm(Rational k = 1);
    static FunctionalSpec sv(HeightField heights);
    static FunctionalSpec df(HeightField heights);
    static FunctionalSpec min_angle_sum();

    /// C2 and MinAngleSum are maximized, everything else minimized.
    Goal goal() const noexcept;
    bool needs_heights() const noexcept { return kind == FunctionalKind::Sv || kind == FunctionalKind::Df; }
    FunctionalSpec with_heights(HeightField heights) const;
    std::string name() const;
};

/// A functional value split as exact_part + inexact_part. Exact values have
/// a zero inexact part. SV keeps the hull volume in the exact part and only
/// the lift excess in the inexact part, so SV comparisons between
/// triangulations of one site set stay sharp at small heights.
class FunctionalValue {
public:
    FunctionalValue() = default;

    static FunctionalValue exact(Rational value);
    static FunctionalValue approximate(Real value);
    static FunctionalValue split(Rational exact_part, Real inexact_part);

    bool is_exact() const noexcept { return exact_; }
    const Rational& exact_part() const noexcept { return exact_part_; }
    const Real& inexact_part() const noexcept { return inexact_part_; }
    /// Rounded total.
    Real value() const;
    /// Exact rational text when exact, otherwise 34 significant digits.
    std::string to_string() const;

    FunctionalValue& operator+=(const FunctionalValue& other);

private:
    Rational exact_part_ = 0;
    Real inexact_part_ = 0;
    bool exact_ = true;
};

enum class Comparison { Less, Equal, Greater, NearTie };

/// Exact comparison when both values are exact. Otherwise values within
/// `tolerance` (relative to the inexact parts when the exact parts agree,
/// else to the totals) compare as NearTie.
Comparison compare(const FunctionalValue& a, const FunctionalValue& b, double tolerance = kRelativeTolerance);

/// True iff `candidate` is strictly better than `incumbent` under `goal`
/// (near ties never count as better).
bool strictly_better(const FunctionalValue& candidate, const FunctionalValue& incumbent, Goal goal);

/// Sum of the functional over an arbitrary simplex list of `sites`.
/// No validity check; local flip comparisons use this directly.
FunctionalValue evaluate_simplices(const FunctionalSpec& spec, const SiteSet& sites,
                                   std::span<const Simplex> simplices);

/// Validates `t`, then evaluates.
FunctionalValue evaluate(const FunctionalSpec& spec, const Triangulation& t);

FunctionalValue eval_c2(const Triangulation& t, const std::optional<Point>& origin = std::nullopt);
FunctionalValue eval_v(const Triangulation& t);

/// (d+1)^2 C2 + V - (d+1)(d+2) * integral of |x|^2 over the hull; zero for
/// every valid triangulation.
Rational identity_residual(const Triangulation& t);

FunctionalValue eval_mean_radius(const Triangulation& t, Phi phi);
FunctionalValue eval_mean_radius(const Triangulation& t, const std::function<Real(Real)>& phi);

FunctionalValue eval_hrm(const Triangulation& t, const Rational& k = 1);
FunctionalValue eval_hrm_polygon(std::span<const Point> polygon, const Rational& k = 1);
FunctionalValue eval_hrm_simplex3(std::span<const Point> tetrahedron);

FunctionalValue eval_sv(const Triangulation& t, const HeightField& heights);
FunctionalValue eval_df(const Triangulation& t, const HeightField& heights);

FunctionalValue eval_min_angle_sum(const Triangulation& t);
/// Every triangle angle, ascending.
std::vector<Real> angle_sequence(const Triangulation& t);

/// Angle at vertex `at` of triangle (at, u, v), radians.
Real triangle_angle(const Point& at, const Point& u, const Point& v);

using Quad = std::array<Point, 4>;

struct Lemma2Result {
    int relation = 0;                 // 1..5
    bool relabeled = false;           // true when AC was the Delaunay diagonal
    std::array<Rational, 4> radii2{}; // R^2 of ABD, BCD, ABC, ADC after relabeling
    std::array<Real, 4> radii{};
};

/// Classifies a strictly convex quadrilateral ABCD (cyclic order) into one
/// of the five circumradius orderings, after relabeling so that BD is the
/// Delaunay diagonal.
Lemma2Result lemma2_relation(const Quad& quad);

struct LctResult {
    bool holds = false;
    bool near_tie = false;
    Edge dt_diagonal;    // indices into the quad
    Edge other_diagonal;
    FunctionalValue dt_value;
    FunctionalValue other_value;
};

/// Compares the functional on the two diagonal triangulations of a strictly
/// convex, non-cocircular quad. `heights` is required for SV and DF and
/// replaces any height field carried by `spec`.
LctResult lct_check(const FunctionalSpec& spec, const Quad& quad, const std::optional<HeightField>& heights = std::nullopt);

/// Sites of a strictly convex quad must be in cyclic order.
bool strictly_convex(const Quad& quad);

}  // namespace dfl
