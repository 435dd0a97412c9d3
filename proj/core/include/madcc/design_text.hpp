#pragma once

#include <string>
#include <vector>

#include "madcc/designs.hpp"

namespace madcc::designs {

/// Parsed design file: the design plus any `class:` lines.
struct DesignFile {
  Design design;
  std::vector<std::vector<int>> classes;  // 0-based block indices

  bool has_resolution() const { return !classes.empty(); }
  Resolution resolution() const;
};

// Text formats. Point labels may be written 0-based; parsers shift to the
// internal 1-based form and record the offset so writers round-trip exactly.
// Any unrecognized or trailing content is rejected with a line number.

DesignFile parse_design(const std::string& text);
std::string write_design(const Design& d, const std::vector<std::vector<int>>& classes = {});
std::string write_design(const Resolution& res);

OrthogonalArray parse_oa(const std::string& text);
std::string write_oa(const OrthogonalArray& oa);

GroupDivisibleDesign parse_gdd(const std::string& text);
std::string write_gdd(const GroupDivisibleDesign& g);

}  // namespace madcc::designs
