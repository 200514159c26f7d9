#pragma once

#include <filesystem>
#include <iosfwd>

#include "effradius/series.hpp"

namespace effradius {

// Series file formats.
//
// JSON: {"center": c, "coeffs": [a0, a1, ...]}
// CSV:  an "n,a_n" header followed by consecutive rows starting at n = 0;
//       the center is 0 by convention.
//
// Readers throw std::invalid_argument on malformed content; the file-path
// reader picks the format from the extension (".json" vs anything else).
PowerSeries read_series_file(const std::filesystem::path& path);
PowerSeries read_series_json(std::istream& in);
PowerSeries read_series_csv(std::istream& in);

void write_series_json(std::ostream& out, const PowerSeries& p);
void write_series_csv(std::ostream& out, const PowerSeries& p);

}  // namespace effradius
