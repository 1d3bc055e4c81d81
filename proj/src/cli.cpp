#include "dfl/cli.hpp"

#include "dfl/io.hpp"
#include "dfl/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace dfl {

namespace {

const std::vector<std::string> kFunctionals = {"c2", "v", "identity", "radius", "hrm", "sv", "df", "minangle"};

struct FnOptions {
    std::string fn;
    std::string phi = "identity";
    std::string k = "1";
    std::string y;
    std::string origin;
};

void add_fn_options(CLI::App* sub, FnOptions& o)
{
    sub->add_option("--fn", o.fn, "Functional")->required()->check(CLI::IsMember(kFunctionals));
    sub->add_option("--phi", o.phi, "Radius transform for --fn radius")
        ->check(CLI::IsMember({"identity", "square", "sqrt", "log"}));
    sub->add_option("--k", o.k, "Exponent for --fn hrm (k >= 1/2)");
    sub->add_option("--y", o.y, "Heights file for --fn sv|df");
    sub->add_option("--origin", o.origin, "Origin \"x,y\" for --fn c2");
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

Point parse_point_list(const std::string& text)
{
    std::vector<Rational> c;
    for (const auto& part : split(text, ','))
        c.push_back(parse_rational(part));
    if (c.empty())
        throw Error(ErrorKind::ParseError, "empty point '" + text + "'");
    return Point(std::move(c));
}

/// Height fields for SV/DF come from --y; `sites` is used to check length.
FunctionalSpec make_spec(const FnOptions& o, const SiteSet* sites)
{
    if (o.fn == "c2") {
        if (o.origin.empty())
            return FunctionalSpec::c2();
        Point origin = parse_point_list(o.origin);
        if (sites && origin.dim() != sites->dim())
            throw Error(ErrorKind::DimensionMismatch, "origin dimension differs from the sites");
        return FunctionalSpec::c2(std::move(origin));
    }
    if (o.fn == "v")
        return FunctionalSpec::v();
    if (o.fn == "radius")
        return FunctionalSpec::mean_radius(parse_phi(o.phi));
    if (o.fn == "hrm")
        return FunctionalSpec::hrm(parse_rational(o.k));
    if (o.fn == "minangle")
        return FunctionalSpec::min_angle_sum();
    if (o.fn == "sv" || o.fn == "df") {
        if (o.y.empty())
            throw Error(ErrorKind::BadParams, "--fn " + o.fn + " needs --y FILE");
        HeightField h = read_heights(o.y);
        if (sites && h.values.size() != sites->size())
            throw Error(ErrorKind::HeightFieldMismatch, "heights file has " + std::to_string(h.values.size())
                                                            + " values for " + std::to_string(sites->size()) + " sites");
        return o.fn == "sv" ? FunctionalSpec::sv(std::move(h)) : FunctionalSpec::df(std::move(h));
    }
    throw Error(ErrorKind::BadParams, "functional '" + o.fn + "' is not available here");
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int main(std::span<const std::string> args)
    {
        CLI::App app{"Delaunay functionals toolkit", "dfl"};
        app.require_subcommand(1);
        app.fallthrough(false);

        add_build(app);
        add_check(app);
        add_eval(app);
        add_enumerate(app);
        add_verify(app);
        add_radius_seq(app);
        add_descend(app);
        add_lct(app);
        add_thm8(app);
        add_search(app);
        add_sv_probe(app);
        add_degeneracy(app);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? kExitOk : kExitUsage;
        }
        try {
            return action_();
        } catch (const Error& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

private:
    void add_format(CLI::App* sub)
    {
        sub->add_option("--format", format_, "Output format")->check(CLI::IsMember({"json", "text"}));
    }

    void emit(const Json& j)
    {
        if (format_ == "text")
            out_ << render_text(j);
        else
            out_ << j.dump(2) << '\n';
    }

    CLI::App* verb(CLI::App& app, const std::string& name, const std::string& help, std::function<int()> fn)
    {
        CLI::App* sub = app.add_subcommand(name, help);
        add_format(sub);
        sub->callback([this, fn = std::move(fn)] { action_ = fn; });
        return sub;
    }

    void add_build(CLI::App& app)
    {
        auto* sub = verb(app, "build", "Delaunay triangulation of a planar site set", [this] {
            auto sites = read_sites(sites_path_);
            BuildStats stats;
            const Triangulation t = build_dt(sites, &stats);
            if (!output_path_.empty()) {
                std::ofstream f(output_path_);
                if (!f)
                    throw Error(ErrorKind::FileNotFound, "cannot write '" + output_path_ + "'");
                write_triangulation(f, t);
            } else if (format_ == "text") {
                write_triangulation(out_, t);
                return int{kExitOk};
            }
            Json j = report_header();
            j["sites"] = sites->size();
            j["flips"] = stats.flips;
            j["key"] = canonical_key(t);
            j["simplices"] = to_json(t);
            if (!output_path_.empty())
                j["output"] = output_path_;
            emit(j);
            return int{kExitOk};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("-o,--output", output_path_, "Write the triangulation here");
    }

    void add_check(CLI::App& app)
    {
        auto* sub = verb(app, "check", "Validate a triangulation and test the empty-circle property", [this] {
            auto sites = read_sites(sites_path_);
            const Triangulation t = read_triangulation(tri_path_, sites);
            const ValidityReport v = validate(t);
            Json j = report_header();
            j["valid"] = v.valid();
            bool delaunay = false;
            if (v.valid()) {
                const DelaunayCheck d = is_delaunay(t);
                delaunay = d.delaunay;
                j["delaunay"] = delaunay;
                j["witness"] = d.witness ? Json(d.witness->to_string()) : Json(nullptr);
            } else {
                j["delaunay"] = false;
                j["violations"] = to_json(v)["violations"];
            }
            emit(j);
            return v.valid() && delaunay ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("triangulation", tri_path_, "Triangulation file")->required();
    }

    void add_eval(CLI::App& app)
    {
        auto* sub = verb(app, "eval", "Evaluate a functional on a triangulation", [this] {
            auto sites = read_sites(sites_path_);
            const Triangulation t = read_triangulation(tri_path_, sites);
            Json j = report_header();
            if (fn_.fn == "identity") {
                require_valid(t);
                j["functional"] = "identity";
                j["value"] = to_exact_string(identity_residual(t));
                j["exact"] = true;
            } else {
                const FunctionalSpec spec = make_spec(fn_, sites.get());
                const FunctionalValue v = evaluate(spec, t);
                j["functional"] = spec.name();
                j["value"] = v.to_string();
                j["exact"] = v.is_exact();
            }
            emit(j);
            return int{kExitOk};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("triangulation", tri_path_, "Triangulation file")->required();
        add_fn_options(sub, fn_);
    }

    void add_enumerate(CLI::App& app)
    {
        auto* sub = verb(app, "enumerate", "All triangulations of a planar site set", [this] {
            auto sites = read_sites(sites_path_);
            const EnumerationResult r = enumerate_triangulations(sites, cap_);
            Json j = report_header();
            j.update(to_json(r));
            bool agree = true;
            if (oracle_) {
                const auto keys = tile_triangulations(*sites);
                agree = keys == r.keys;
                j["oracle_count"] = keys.size();
                j["oracle_agrees"] = agree;
            }
            emit(j);
            return agree ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("--cap", cap_, "Maximum number of sites")->check(CLI::PositiveNumber);
        sub->add_flag("--oracle", oracle_, "Cross-check against the backtracking tiler");
    }

    void add_verify(CLI::App& app)
    {
        auto* sub = verb(app, "verify", "Check that the Delaunay triangulation is the unique optimum", [this] {
            auto sites = read_sites(sites_path_);
            const FunctionalSpec spec = make_spec(fn_, sites.get());
            const EnumerationResult all = enumerate_triangulations(sites, cap_);
            const VerificationReport r = verify_optimality(all, spec);
            Json j = report_header();
            j.update(to_json(r));
            if (spec.kind == FunctionalKind::MinAngleSum)
                j["angle_sequence"] = to_json(verify_angle_sequence(all));
            emit(j);
            return r.dt_is_unique_optimal ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("--cap", cap_, "Maximum number of sites")->check(CLI::PositiveNumber);
        add_fn_options(sub, fn_);
    }

    void add_radius_seq(CLI::App& app)
    {
        auto* sub = verb(app, "radius-seq", "Pointwise minimality of the sorted circumradius sequence", [this] {
            auto sites = read_sites(sites_path_);
            const RadiusSequenceReport r = verify_radius_sequence(enumerate_triangulations(sites, cap_));
            Json j = report_header();
            j.update(to_json(r));
            emit(j);
            return r.holds ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("--cap", cap_, "Maximum number of sites")->check(CLI::PositiveNumber);
    }

    void add_descend(CLI::App& app)
    {
        auto* sub = verb(app, "descend", "Greedy improving flips from a start triangulation", [this] {
            auto sites = read_sites(sites_path_);
            const FunctionalSpec spec = make_spec(fn_, sites.get());
            const Triangulation start = read_triangulation(start_path_, sites);
            const DescentResult r = flip_descent(start, spec);
            const std::string dt_key = canonical_key(build_dt(sites));
            Json j = report_header();
            j["functional"] = to_json(spec);
            j.update(to_json(r, dt_key));
            emit(j);
            return canonical_key(r.fixpoint) == dt_key ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("--start", start_path_, "Start triangulation file")->required();
        add_fn_options(sub, fn_);
    }

    void add_lct(CLI::App& app)
    {
        auto* sub = verb(app, "lct", "Local circle test on one or many convex quadrilaterals", [this] {
            if (fn_.fn == "identity")
                throw Error(ErrorKind::BadParams, "identity is not a functional to compare");
            const bool explicit_quad = !quad_.empty();
            if (explicit_quad == (random_ > 0))
                throw Error(ErrorKind::BadParams, "give exactly one of --quad or --random N");
            FnOptions o = fn_;
            const bool heights = o.fn == "sv" || o.fn == "df";
            FunctionalSpec spec = heights ? (o.fn == "sv" ? FunctionalSpec::sv({}) : FunctionalSpec::df({}))
                                          : make_spec(o, nullptr);
            Json j = report_header();
            j["functional"] = spec.name();
            if (explicit_quad) {
                const auto pts = split(quad_, ' ');
                if (pts.size() != 4)
                    throw Error(ErrorKind::BadParams, "--quad needs four points \"x,y x,y x,y x,y\"");
                Quad q;
                for (std::size_t i = 0; i < 4; ++i) {
                    q[i] = parse_point_list(pts[i]);
                    if (q[i].dim() != 2)
                        throw Error(ErrorKind::DimensionMismatch, "quad points must be planar");
                }
                std::optional<HeightField> h;
                if (heights) {
                    HeightField f;
                    for (const auto& v : split(heights_, ','))
                        f.values.push_back(parse_rational(v));
                    if (f.values.size() != 4)
                        throw Error(ErrorKind::HeightFieldMismatch, "--heights needs four values");
                    h = std::move(f);
                }
                const LctResult r = lct_check(spec, q, h);
                j.update(to_json(r));
                emit(j);
                return r.holds || r.near_tie ? int{kExitOk} : int{kExitRefuted};
            }
            std::uint64_t passed = 0, near_ties = 0, failures = 0;
            Json first_failure = nullptr;
            for (std::uint64_t i = 0; i < random_; ++i) {
                Rng rng = stream_rng(seed_, i);
                const Quad q = random_convex_quad(rng);
                std::optional<HeightField> h;
                if (heights)
                    h = random_heights(rng, 4);
                const LctResult r = lct_check(spec, q, h);
                if (r.holds) {
                    ++passed;
                } else if (r.near_tie) {
                    ++near_ties;
                } else {
                    ++failures;
                    if (first_failure.is_null()) {
                        first_failure = Json::object();
                        first_failure["index"] = i;
                        Json quad = Json::array();
                        for (const auto& p : q)
                            quad.push_back(to_json(p));
                        first_failure["quad"] = std::move(quad);
                        if (h)
                            first_failure["heights"] = to_json(*h);
                        first_failure["result"] = to_json(r);
                    }
                }
            }
            j["seed"] = seed_;
            j["checked"] = random_;
            j["passed"] = passed;
            j["near_ties"] = near_ties;
            j["failures"] = failures;
            j["first_failure"] = std::move(first_failure);
            emit(j);
            return failures == 0 ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("--quad", quad_, "Four points \"x,y x,y x,y x,y\" in cyclic order");
        sub->add_option("--heights", heights_, "Four heights \"a,b,c,d\" for --fn sv|df");
        sub->add_option("--random", random_, "Number of random quads");
        sub->add_option("--seed", seed_, "Random seed");
        add_fn_options(sub, fn_);
    }

    void add_thm8(CLI::App& app)
    {
        auto* sub = verb(app, "thm8", "Quadratic form of the Dirichlet difference on five spatial sites", [this] {
            auto sites = read_sites(sites_path_);
            const QuadraticFormSummary s = theorem8_form(sites);
            Json j = report_header();
            j.update(to_json(s));
            emit(j);
            const bool rank_one = s.exact_rank == 1 && s.rank1_residual < 1e-10 && s.kernel_vanishes;
            return rank_one ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
    }

    void add_search(CLI::App& app)
    {
        auto* sub = verb(app, "search", "Seeded random search for a non-Delaunay optimum", [this] {
            SearchParams p;
            p.k = parse_rational(search_k_);
            p.sites = search_sites_;
            p.height_scale = parse_rational(height_scale_);
            const SearchReport r = search_counterexample(parse_search_kind(kind_), p, seed_, budget_);
            Json j = report_header();
            j.update(to_json(r));
            emit(j);
            return r.found ? int{kExitOk} : int{kExitNotFound};
        });
        sub->add_option("--kind", kind_, "Search kind")
            ->required()
            ->check(CLI::IsMember({"HRM_K", "SV_PLANAR", "DST_3D", "HRM_3D"}));
        sub->add_option("--k", search_k_, "Exponent for HRM_K");
        sub->add_option("--sites", search_sites_, "Site count for SV_PLANAR");
        sub->add_option("--height-scale", height_scale_, "Heights are drawn from [-scale, scale)");
        sub->add_option("--seed", seed_, "Random seed");
        sub->add_option("--budget", budget_, "Iterations before giving up")->check(CLI::PositiveNumber);
    }

    void add_sv_probe(CLI::App& app)
    {
        auto* sub = verb(app, "sv-probe", "Surface-area optimality over a ladder of height scales", [this] {
            auto sites = read_sites(sites_path_);
            const HeightField h = read_heights(fn_.y);
            if (h.values.size() != sites->size())
                throw Error(ErrorKind::HeightFieldMismatch, "heights and sites differ in length");
            std::vector<Rational> scales = default_probe_scales();
            if (!scales_.empty()) {
                scales.clear();
                for (const auto& s : split(scales_, ','))
                    scales.push_back(parse_rational(s));
            }
            const SvProbeReport r = sv_epsilon_probe(sites, h, scales);
            Json j = report_header();
            j.update(to_json(r));
            emit(j);
            return r.threshold ? int{kExitOk} : int{kExitRefuted};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
        sub->add_option("--y", fn_.y, "Direction heights file")->required();
        sub->add_option("--scales", scales_, "Comma-separated scales (default 1, 1/2, ..., 2^-20)");
    }

    void add_degeneracy(CLI::App& app)
    {
        auto* sub = verb(app, "degeneracy", "List collinear / cocircular / coplanar / cospherical subsets", [this] {
            auto sites = read_sites(sites_path_);
            Json j = report_header();
            j.update(to_json(degeneracy_scan(*sites)));
            emit(j);
            return int{kExitOk};
        });
        sub->add_option("sites", sites_path_, "Sites file")->required();
    }

    std::ostream& out_;
    std::ostream& err_;
    std::function<int()> action_;
    std::string format_ = "json";
    std::string sites_path_;
    std::string tri_path_;
    std::string output_path_;
    std::string start_path_;
    std::string quad_;
    std::string heights_;
    std::string kind_;
    std::string search_k_ = "3";
    std::string height_scale_ = "4";
    std::string scales_;
    std::size_t cap_ = kDefaultEnumerationCap;
    std::size_t search_sites_ = 6;
    std::uint64_t random_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t budget_ = 100000;
    bool oracle_ = false;
    FnOptions fn_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    return Runner(out, err).main(args);
}

}  // namespace dfl
