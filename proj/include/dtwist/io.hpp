#pragma once

#include <iosfwd>
#include <string>

#include "dtwist/persistence.hpp"
#include "dtwist/rips.hpp"

namespace dtwist {

// Text inputs: '#' lines and blank lines are skipped; numbers are separated
// by whitespace and/or commas. All parsers throw ParseError.

/// One point per line.
PointCloud parse_point_cloud(std::istream& is);

/// Lower-triangular distance matrix, row i holding d(i,0)..d(i,i-1). Line
/// breaks are not significant: the entry count must be triangular,
/// m = n(n-1)/2, and n is inferred from it. A leading empty row 0 is
/// therefore optional.
DistanceMatrix parse_lower_distance_matrix(std::istream& is);

PointCloud read_point_cloud(const std::string& path);
DistanceMatrix read_lower_distance_matrix(const std::string& path);

/// {"dims", "pairs": [{"dim","birth_index","death_index","birth","death",
/// "representative"}], "essentials": [{"dim","birth_index","birth"}]}.
/// Representatives are arrays of vertex tuples, or null when not requested.
std::string diagram_to_json(const Diagram& d, const Filtration& f, bool with_representatives);

}  // namespace dtwist
