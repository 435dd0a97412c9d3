#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "madcc/arrays.hpp"
#include "madcc/designs.hpp"

namespace madcc::fixtures {

// Built-in structures used as canonical inputs throughout the tests and the
// CLI. Block and row order is part of each fixture's identity.

designs::Design fano();              // 2-(7,3,1), blocks 124 235 346 457 156 267 137
designs::Design steiner843();        // 3-(8,4,1), 14 blocks
designs::Design bibd632();           // 2-(6,3,2), 10 blocks
designs::Resolution affine9();       // 9 points (0-based labels), 4 parallel classes
designs::Resolution pairs4();        // all pairs of [4], 3 parallel classes
designs::Resolution resolv6();       // 6-point resolvable design that is not a CRD
designs::OrthogonalArray oa231();    // 2-(2,3,1) OA, 0-based symbols
designs::OrthogonalArray oa272();    // 2-(2,7,2) OA, 0-based symbols
designs::OrthogonalArray oa331();    // 2-(3,3,1) OA (rows of [3]^3 with sum divisible by 3)
designs::GroupDivisibleDesign gdd323();  // 2-(3,2,3,1) GDD, 4 blocks
designs::GroupDivisibleDesign gdd332();  // 2-(3,3,2,1) GDD, 27 blocks
arrays::PdaFile dpda44();            // the 4x4 sender-mapped array with identity map

struct NamedFixture {
  std::string_view name;
  std::string_view kind;  // "design", "oa", "gdd", "pda"
  std::string_view note;
};

/// Names accepted wherever a file path is expected.
const std::vector<NamedFixture>& all_fixtures();

/// Fixture content in its text format, or nullopt when the name is unknown.
std::optional<std::string> fixture_text(std::string_view name);

}  // namespace madcc::fixtures
