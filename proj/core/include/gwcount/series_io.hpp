#pragma once

#include "gwcount/series.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace gwcount {

// Series documents are JSON objects
//
//   {"degree": 3, "basis": [["1","0","0","0"], ["0","1","0","0"], ["0","0","0","1"]]}
//
// with exactly three rows of degree + 1 coefficient strings each, lowest
// power first. A coefficient is "p" or "p/q" with optional leading sign on p
// and q > 0.

/// Throws FormatError naming the offending literal.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& value);

/// Throws FormatError on malformed documents (with a field path such as
/// "basis[1][2]") and RankDeficientError on dependent rows.
PolySeries read_series_json(std::istream& in);
PolySeries parse_series_json(std::string_view text);

/// Compact canonical document with the key order degree, basis.
std::string write_series_json(const PolySeries& series);

}  // namespace gwcount
