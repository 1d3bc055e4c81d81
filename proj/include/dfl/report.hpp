#pragma once

#include "dfl/explore.hpp"

#include <json.hpp>

namespace dfl {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "dfl/1";

/// Fresh object carrying the schema tag.
Json report_header();

Json to_json(const FunctionalValue& v);
Json to_json(const FunctionalSpec& spec);
Json to_json(const Point& p);
Json to_json(const SiteSet& sites);
Json to_json(const HeightField& h);
Json to_json(const Triangulation& t);
Json to_json(const ValidityReport& r);
Json to_json(const DegeneracyReport& r);
Json to_json(const EnumerationResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const RadiusSequenceReport& r);
Json to_json(const AngleSequenceReport& r);
Json to_json(const DescentResult& r, const std::string& dt_key);
Json to_json(const QuadraticFormSummary& s);
Json to_json(const Witness& w);
Json to_json(const SearchReport& r);
Json to_json(const SvProbeReport& r);
Json to_json(const LctResult& r);

/// "key: value" lines for the top-level members; nested values stay JSON.
std::string render_text(const Json& report);

}  // namespace dfl
