#include "madcc/fixtures.hpp"

#include "madcc/design_text.hpp"
#include "madcc/errors.hpp"

namespace madcc::fixtures {

namespace {

designs::Design design_from(int v, std::vector<std::vector<int>> blocks, int t, long long lambda) {
  designs::Design d;
  d.v = v;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    d.blocks.push_back(std::move(b));
  }
  d.declared_t = t;
  d.declared_lambda = lambda;
  return d;
}

}  // namespace

designs::Design fano() {
  return design_from(7,
                     {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}},
                     2, 1);
}

designs::Design steiner843() {
  return design_from(8,
                     {{1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 7}, {1, 3, 6, 8}, {1, 4, 5, 8},
                      {1, 4, 6, 7}, {1, 2, 3, 4}, {3, 4, 5, 6}, {3, 4, 7, 8}, {2, 4, 5, 7},
                      {2, 4, 6, 8}, {2, 3, 5, 8}, {2, 3, 6, 7}, {5, 6, 7, 8}},
                     3, 1);
}

designs::Design bibd632() {
  return design_from(6,
                     {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6}, {2, 3, 5}, {2, 3, 6},
                      {2, 4, 5}, {3, 4, 6}, {4, 5, 6}},
                     2, 2);
}

designs::Resolution affine9() {
  // Level sets of the four functionals (1,0),(0,1),(1,1),(1,2) over GF(3)^2.
  return designs::resolvable_from_code(3, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

designs::Resolution pairs4() {
  designs::Resolution r;
  r.design = design_from(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 2, 1);
  r.classes = {{0, 5}, {1, 4}, {2, 3}};
  return r;
}

designs::Resolution resolv6() {
  designs::Resolution r;
  r.design = design_from(
      6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, 1, 3);
  r.classes = {{0, 5, 8}, {1, 3, 7}, {2, 4, 6}};
  return r;
}

designs::OrthogonalArray oa231() {
  designs::OrthogonalArray oa;
  oa.q = 2;
  oa.r = 3;
  oa.label_offset = -1;
  oa.rows = {{2, 2, 1}, {1, 1, 1}, {2, 1, 2}, {1, 2, 2}};  // printed symbols 0/1
  oa.declared_strength = 2;
  oa.declared_index = 1;
  return oa;
}

designs::OrthogonalArray oa272() {
  designs::OrthogonalArray oa;
  oa.q = 2;
  oa.r = 7;
  oa.label_offset = -1;
  oa.rows = {{2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 1, 1, 1, 1}, {2, 1, 1, 2, 2, 1, 1},
             {2, 1, 1, 1, 1, 2, 2}, {1, 2, 1, 2, 1, 2, 1}, {1, 2, 1, 1, 2, 1, 2},
             {1, 1, 2, 2, 1, 1, 2}, {1, 1, 2, 1, 2, 2, 1}};
  oa.declared_strength = 2;
  oa.declared_index = 2;
  return oa;
}

designs::OrthogonalArray oa331() { return designs::proper_oa(3, 3); }

designs::GroupDivisibleDesign gdd323() {
  designs::GroupDivisibleDesign g;
  g.m = 3;
  g.q = 2;
  g.declared_t = 2;
  g.declared_lambda = 1;
  g.blocks = {{{1, 1}, {2, 1}, {3, 1}},
              {{1, 2}, {2, 1}, {3, 2}},
              {{1, 1}, {2, 2}, {3, 2}},
              {{1, 2}, {2, 2}, {3, 1}}};
  return g;
}

designs::GroupDivisibleDesign gdd332() {
  designs::GroupDivisibleDesign g;
  g.m = 3;
  g.q = 3;
  g.declared_t = 2;
  g.declared_lambda = 1;
  for (int u1 = 1; u1 <= 2; ++u1)
    for (int u2 = u1 + 1; u2 <= 3; ++u2)
      for (int v1 = 1; v1 <= 3; ++v1)
        for (int v2 = 1; v2 <= 3; ++v2) g.blocks.push_back({{u1, v1}, {u2, v2}});
  // Reorder to the source listing: all blocks through (1,v) first, then the
  // group-(2,3) blocks.
  std::sort(g.blocks.begin(), g.blocks.end());
  return g;
}

arrays::PdaFile dpda44() {
  arrays::PdaFile f;
  f.array = arrays::CodedArray::make(4, 4);
  auto& a = f.array;
  auto set = [&](long long j, long long k, int32_t id) { a.at(j, k) = id - 1; };
  // row 1: * 3 * 1 / row 2: 3 * * 2 / row 3: * 4 1 * / row 4: 4 * 2 *
  set(0, 1, 3); set(0, 3, 1);
  set(1, 0, 3); set(1, 3, 2);
  set(2, 1, 4); set(2, 2, 1);
  set(3, 0, 4); set(3, 2, 2);
  a.S = 4;
  f.phi = arrays::SenderMap{{0, 1, 2, 3}};
  return f;
}

const std::vector<NamedFixture>& all_fixtures() {
  static const std::vector<NamedFixture> list = {
      {"fano", "design", "2-(7,3,1) design"},
      {"steiner843", "design", "3-(8,4,1) design"},
      {"bibd632", "design", "2-(6,3,2) design"},
      {"affine9", "design", "resolvable 2-(9,3,1) design, 4 parallel classes"},
      {"pairs4", "design", "all pairs of [4], 3 parallel classes"},
      {"resolv6", "design", "resolvable 6-point design that is not a CRD"},
      {"oa231", "oa", "2-(2,3,1) orthogonal array"},
      {"oa272", "oa", "2-(2,7,2) orthogonal array"},
      {"oa331", "oa", "2-(3,3,1) orthogonal array"},
      {"gdd323", "gdd", "2-(3,2,3,1) group divisible design"},
      {"gdd332", "gdd", "2-(3,3,2,1) group divisible design"},
      {"dpda44", "pda", "(4,4,2,4) sender-mapped array with identity map"},
  };
  return list;
}

std::optional<std::string> fixture_text(std::string_view name) {
  using designs::write_design;
  if (name == "fano") return write_design(fano());
  if (name == "steiner843") return write_design(steiner843());
  if (name == "bibd632") return write_design(bibd632());
  if (name == "affine9") return write_design(affine9());
  if (name == "pairs4") return write_design(pairs4());
  if (name == "resolv6") return write_design(resolv6());
  if (name == "oa231") return designs::write_oa(oa231());
  if (name == "oa272") return designs::write_oa(oa272());
  if (name == "oa331") return designs::write_oa(oa331());
  if (name == "gdd323") return designs::write_gdd(gdd323());
  if (name == "gdd332") return designs::write_gdd(gdd332());
  if (name == "dpda44") {
    auto f = dpda44();
    return arrays::write_pda(f.array, &*f.phi);
  }
  return std::nullopt;
}

}  // namespace madcc::fixtures
