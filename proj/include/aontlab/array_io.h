#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "aontlab/array.h"

namespace aontlab {

// CSV array files: one row per line, 2s comma-separated single-token symbols,
// optionally preceded by a "# v=<v> s=<s>" header line. Blank lines are
// ignored.
//
// Without a header, s is half the row width and v is inferred from the
// tokens: decimal tokens give max+1, single lowercase letters give the
// highest letter's rank + 1, anything else gives the number of distinct
// tokens (glyphs then numbered in order of first appearance).
AontArray read_array_csv(std::istream& in);
AontArray read_array_file(const std::filesystem::path& path);

void write_array_csv(std::ostream& out, const AontArray& array,
                     bool with_header = true);
std::string to_csv(const AontArray& array, bool with_header = true);

}  // namespace aontlab
