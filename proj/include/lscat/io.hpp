#pragma once

#include "lscat/complex.hpp"

#include <iosfwd>
#include <string>

namespace lscat {

/// Facet-list text format: one facet per line, labels separated by
/// single spaces; lines starting with '#' are comments; blank lines are
/// ignored; labels may not contain spaces. Output is canonical (labels
/// sorted within a facet, facet lines sorted), so write-then-read is
/// byte-stable.
SimplicialComplex read_facets(std::istream& in);
SimplicialComplex read_facets_file(const std::string& path);
SimplicialComplex parse_facets(const std::string& text);

std::string format_facets(const SimplicialComplex& k);
void write_facets_file(const SimplicialComplex& k, const std::string& path);

} // namespace lscat
