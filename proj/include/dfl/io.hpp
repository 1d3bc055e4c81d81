#pragma once

#include "dfl/functionals.hpp"
#include "dfl/triangulation.hpp"

#include <iosfwd>
#include <string>

namespace dfl {

// Plain-text formats. Every format: '#' starts a comment line, blank lines
// are skipped, tokens are whitespace separated.
//
//   sites:          one point per line, decimal/fraction coordinates; the
//                   first point fixes the dimension
//   triangulation:  one simplex per line, d+1 zero-based site indices
//   heights:        one value per line, aligned with the sites file

SiteSetPtr parse_sites(std::istream& in, const std::string& source = "<sites>");
Triangulation parse_triangulation(std::istream& in, SiteSetPtr sites, const std::string& source = "<triangulation>");
HeightField parse_heights(std::istream& in, const std::string& source = "<heights>");

SiteSetPtr read_sites(const std::string& path);
Triangulation read_triangulation(const std::string& path, SiteSetPtr sites);
HeightField read_heights(const std::string& path);

void write_sites(std::ostream& out, const SiteSet& sites);
void write_triangulation(std::ostream& out, const Triangulation& t);

}  // namespace dfl
