#include "dfl/report.hpp"

#include <sstream>

namespace dfl {

Json report_header()
{
    Json j = Json::object();
    j["schema"] = kSchema;
    return j;
}

Json to_json(const FunctionalValue& v)
{
    return Json{{"value", v.to_string()}, {"exact", v.is_exact()}};
}

Json to_json(const FunctionalSpec& spec)
{
    Json j = Json::object();
    j["name"] = spec.name();
    j["kind"] = to_string(spec.kind);
    j["goal"] = spec.goal() == Goal::Maximize ? "max" : "min";
    if (spec.kind == FunctionalKind::MeanRadius)
        j["phi"] = to_string(spec.phi);
    if (spec.kind == FunctionalKind::Hrm)
        j["k"] = to_exact_string(spec.k);
    if (spec.origin)
        j["origin"] = to_json(*spec.origin);
    if (spec.heights)
        j["heights"] = to_json(*spec.heights);
    return j;
}

Json to_json(const Point& p)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < p.dim(); ++i)
        j.push_back(to_exact_string(p[i]));
    return j;
}

Json to_json(const SiteSet& sites)
{
    Json j = Json::array();
    for (const auto& p : sites.points())
        j.push_back(to_json(p));
    return j;
}

Json to_json(const HeightField& h)
{
    Json j = Json::array();
    for (const auto& y : h.values)
        j.push_back(to_exact_string(y));
    return j;
}

Json to_json(const Triangulation& t)
{
    Json j = Json::array();
    for (const auto& s : t.simplices()) {
        Json row = Json::array();
        for (std::size_t i = 0; i < s.size(); ++i)
            row.push_back(s[i]);
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const ValidityReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
    return Json{{"valid", r.valid()}, {"violations", std::move(violations)}};
}

namespace {

Json index_lists(const std::vector<std::vector<Index>>& lists)
{
    Json j = Json::array();
    for (const auto& l : lists)
        j.push_back(l);
    return j;
}

Json edge_json(const Edge& e)
{
    return Json::array({e.a, e.b});
}

}  // namespace

Json to_json(const DegeneracyReport& r)
{
    Json j = Json::object();
    j["general_position"] = r.empty();
    j["collinear"] = index_lists(r.collinear);
    j["cocircular"] = index_lists(r.cocircular);
    j["coplanar"] = index_lists(r.coplanar);
    j["cospherical"] = index_lists(r.cospherical);
    return j;
}

Json to_json(const EnumerationResult& r)
{
    Json j = Json::object();
    j["count"] = r.count();
    j["dt_key"] = r.dt_key;
    j["degenerate"] = r.degenerate;
    j["keys"] = r.keys;
    return j;
}

Json to_json(const VerificationReport& r)
{
    Json j = Json::object();
    j["functional"] = to_json(r.functional);
    j["dt_key"] = r.dt_key;
    j["triangulation_count"] = r.triangulation_count;
    j["optimum_keys"] = r.optimum_keys;
    j["dt_is_optimal"] = r.dt_is_optimal;
    j["dt_is_unique_optimal"] = r.dt_is_unique_optimal;
    j["undecided"] = r.undecided;
    j["degeneracy_caveat"] = r.degeneracy_caveat;
    Json values = Json::object();
    for (const auto& [key, v] : r.values)
        values[key] = to_json(v);
    j["values"] = std::move(values);
    return j;
}

Json to_json(const RadiusSequenceReport& r)
{
    Json j = Json::object();
    j["holds"] = r.holds;
    j["compared"] = r.compared;
    j["violator_key"] = r.violator_key ? Json(*r.violator_key) : Json(nullptr);
    return j;
}

Json to_json(const AngleSequenceReport& r)
{
    Json j = Json::object();
    j["dt_lex_max"] = r.dt_lex_max;
    j["violator_key"] = r.violator_key ? Json(*r.violator_key) : Json(nullptr);
    return j;
}

Json to_json(const DescentResult& r, const std::string& dt_key)
{
    Json trace = Json::array();
    for (const auto& step : r.trace) {
        Json s = Json::object();
        s["removed"] = edge_json(step.removed);
        s["added"] = edge_json(step.added);
        s["value"] = to_json(step.value);
        trace.push_back(std::move(s));
    }
    Json j = Json::object();
    j["fixpoint_key"] = canonical_key(r.fixpoint);
    j["dt_key"] = dt_key;
    j["fixpoint_is_dt"] = canonical_key(r.fixpoint) == dt_key;
    j["flips"] = r.trace.size();
    j["trace"] = std::move(trace);
    return j;
}

namespace {

Json rational_matrix(const Matrix& m)
{
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(to_exact_string(v));
        j.push_back(std::move(r));
    }
    return j;
}

Json rational_vector(const std::vector<Rational>& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_exact_string(x));
    return j;
}

}  // namespace

Json to_json(const QuadraticFormSummary& s)
{
    Json j = Json::object();
    j["first_key"] = s.first_key;
    j["second_key"] = s.second_key;
    j["matrix"] = rational_matrix(s.matrix);
    j["singular_values"] = s.singular_values;
    j["rank1_residual"] = s.rank1_residual;
    j["exact_rank"] = s.exact_rank;
    Json kernel = Json::array();
    for (const auto& k : s.kernel)
        kernel.push_back(rational_vector(k));
    j["kernel"] = std::move(kernel);
    j["kernel_vanishes"] = s.kernel_vanishes;
    if (s.exact_rank == 1) {
        j["linear_form"] = rational_vector(s.linear_form);
        j["coefficient"] = to_exact_string(s.coefficient);
    }
    return j;
}

Json to_json(const Witness& w)
{
    Json j = Json::object();
    j["sites"] = to_json(*w.sites);
    j["heights"] = w.heights ? to_json(*w.heights) : Json(nullptr);
    j["functional"] = to_json(w.functional);
    Json tris = Json::array();
    for (std::size_t i = 0; i < w.triangulations.size(); ++i) {
        Json t = Json::object();
        t["role"] = i == 0 ? "delaunay" : "better";
        t["key"] = canonical_key(w.triangulations[i]);
        t["simplices"] = to_json(w.triangulations[i]);
        t["value"] = to_json(w.values[i]);
        t["is_delaunay"] = static_cast<bool>(w.delaunay[i]);
        tris.push_back(std::move(t));
    }
    j["triangulations"] = std::move(tris);
    j["exact"] = w.exact;
    return j;
}

Json to_json(const SearchReport& r)
{
    Json j = Json::object();
    j["kind"] = to_string(r.kind);
    j["seed"] = r.seed;
    j["budget"] = r.budget;
    j["iterations"] = r.iterations;
    j["status"] = r.found ? "FOUND" : "NOT_FOUND";
    Json params = Json::object();
    if (r.kind == SearchKind::HrmK)
        params["k"] = to_exact_string(r.params.k);
    if (r.kind == SearchKind::SvPlanar)
        params["sites"] = r.params.sites;
    if (r.kind == SearchKind::SvPlanar || r.kind == SearchKind::Dst3d)
        params["height_scale"] = to_exact_string(r.params.height_scale);
    j["params"] = std::move(params);
    j["stats"] = r.stats;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const SvProbeReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x = Json::object();
        x["scale"] = to_exact_string(row.scale);
        x["minimizer_keys"] = row.minimizer_keys;
        x["is_dt"] = row.is_dt;
        x["undecided"] = row.undecided;
        rows.push_back(std::move(x));
    }
    Json j = Json::object();
    j["dt_key"] = r.dt_key;
    j["threshold"] = r.threshold ? Json(to_exact_string(*r.threshold)) : Json(nullptr);
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const LctResult& r)
{
    Json j = Json::object();
    j["holds"] = r.holds;
    j["near_tie"] = r.near_tie;
    j["dt_diagonal"] = edge_json(r.dt_diagonal);
    j["other_diagonal"] = edge_json(r.other_diagonal);
    j["dt_value"] = to_json(r.dt_value);
    j["other_value"] = to_json(r.other_value);
    return j;
}

std::string render_text(const Json& report)
{
    std::ostringstream out;
    for (const auto& [key, value] : report.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    return out.str();
}

}  // namespace dfl
