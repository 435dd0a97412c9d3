#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "madcc/combinatorics.hpp"
#include "madcc/design_text.hpp"
#include "madcc/designs.hpp"
#include "madcc/errors.hpp"
#include "madcc/fixtures.hpp"

using namespace madcc;
using namespace madcc::designs;

namespace {

// Test-local oracle: blocks containing every point of `sub`.
long long count_containing(const std::vector<std::vector<int>>& blocks,
                           const std::vector<int>& sub) {
  long long n = 0;
  for (const auto& b : blocks)
    if (std::includes(b.begin(), b.end(), sub.begin(), sub.end())) ++n;
  return n;
}

// Test-local oracle: pairwise cross-class intersection sizes.
std::set<size_t> cross_intersection_sizes(const Resolution& res) {
  std::set<size_t> sizes;
  for (size_t c1 = 0; c1 < res.classes.size(); ++c1)
    for (size_t c2 = c1 + 1; c2 < res.classes.size(); ++c2)
      for (int b1 : res.classes[c1])
        for (int b2 : res.classes[c2]) {
          std::vector<int> inter;
          const auto& x = res.design.blocks[b1];
          const auto& y = res.design.blocks[b2];
          std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                std::back_inserter(inter));
          sizes.insert(inter.size());
        }
  return sizes;
}

}  // namespace

TEST_CASE("complete designs") {
  auto d = complete_design(4, 2);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(d.blocks == want);

  auto d83 = complete_design(8, 3);
  CHECK(d83.blocks.size() == 56);
  // Oracle: every pair lies in the same number of blocks, frozen value 6.
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) CHECK(count_containing(d83.blocks, {a, b}) == 6);
  CHECK(design_profile(d83, 2) == 6);

  auto full = complete_design(5, 5);
  CHECK(full.blocks.size() == 1);
  CHECK(full.blocks[0] == std::vector<int>{1, 2, 3, 4, 5});

  CHECK_THROWS_AS(complete_design(3, 4), Error);
}

TEST_CASE("design profiles of the built-in designs") {
  CHECK(design_profile(fixtures::fano(), 2) == 1);
  CHECK(design_profile(fixtures::steiner843(), 3) == 1);
  CHECK(design_profile(fixtures::bibd632(), 2) == 2);
  CHECK(design_profile(complete_design(5, 3), 2) == 3);
  CHECK(!design_profile(fixtures::bibd632(), 3).has_value());
  CHECK_THROWS_AS(design_profile(fixtures::fano(), 4), Error);

  auto best = design_max_strength(fixtures::steiner843());
  REQUIRE(best.has_value());
  CHECK(best->first == 3);
  CHECK(best->second == 1);
}

TEST_CASE("block counting") {
  auto fano = fixtures::fano();
  CHECK(block_count(fano, {1, 2}, {}) == 1);
  CHECK(block_count(fano, {2}, {1}) == 2);
  CHECK(block_count(fano, {}, {}) == 7);
  CHECK_THROWS_AS(block_count(fano, {8}, {}), Error);
  CHECK_THROWS_AS(block_count(fano, {1}, {1}), Error);
}

TEST_CASE("closed-form block counts") {
  CHECK(lambda_closed_form(7, 3, 1, 2, 1, 1) == Rational(2));
  CHECK(lambda_closed_form(7, 3, 1, 2, 0, 0) == Rational(7));
  CHECK(lambda_closed_form(9, 4, 6, 3, 3, 0) == Rational(6));  // i=t gives lambda back
  CHECK_THROWS_AS(lambda_closed_form(7, 3, 1, 2, 2, 1), Error);
}

TEST_CASE("closed form agrees with exhaustive counts on every fixture design") {
  struct Item {
    Design d;
    int t;
    long long lambda;
  };
  std::vector<Item> items = {{fixtures::fano(), 2, 1},
                             {fixtures::steiner843(), 3, 1},
                             {fixtures::bibd632(), 2, 2},
                             {fixtures::affine9().design, 2, 1},
                             {fixtures::pairs4().design, 2, 1}};
  for (const auto& item : items) {
    const int v = item.d.v;
    const int k = *item.d.block_size();
    for (int s = 0; s <= item.t; ++s)
      CHECK(Rational(*design_profile(item.d, s)) ==
            lambda_closed_form(v, k, item.lambda, item.t, s, 0));
    for (int i = 0; i + 0 <= item.t; ++i)
      for (int j = 0; i + j <= item.t; ++j)
        for (const auto& contain : k_subsets(v, i)) {
          std::vector<int> rest;
          for (int x = 1; x <= v; ++x)
            if (!std::binary_search(contain.begin(), contain.end(), x)) rest.push_back(x);
          for (const auto& pick : k_subsets(static_cast<int>(rest.size()), j)) {
            std::vector<int> avoid;
            for (int idx : pick) avoid.push_back(rest[idx - 1]);
            CHECK(Rational(block_count(item.d, contain, avoid)) ==
                  lambda_closed_form(v, k, item.lambda, item.t, i, j));
          }
        }
  }
}

TEST_CASE("dual designs") {
  auto fano = fixtures::fano();
  auto dual = dual_design(fano);
  CHECK(dual.v == 7);
  CHECK(dual.blocks.size() == 7);
  CHECK(dual.blocks[0] == std::vector<int>{1, 5, 7});  // blocks 124, 156, 137

  // Involution up to the incidence matrix.
  auto again = dual_design(dual);
  REQUIRE(again.v == fano.v);
  REQUIRE(again.blocks.size() == fano.blocks.size());
  CHECK(again.blocks == fano.blocks);

  Design single;
  single.v = 3;
  single.blocks = {{1, 2, 3}};
  auto ds = dual_design(single);
  CHECK(ds.v == 1);
  CHECK(ds.blocks == std::vector<std::vector<int>>{{1}, {1}, {1}});

  // An irregular design (point degrees 2,1,1) has a dual with mixed block
  // sizes, which writes and parses without a k= header.
  Design mixed;
  mixed.v = 3;
  mixed.blocks = {{1, 2}, {1, 3}};
  auto dm = dual_design(mixed);
  CHECK(!dm.block_size().has_value());
  auto text = write_design(dm);
  CHECK(text.find("k=") == std::string::npos);
  CHECK(parse_design(text).design.blocks == dm.blocks);
}

TEST_CASE("resolvable designs from functional level sets") {
  auto res = fixtures::affine9();
  CHECK(res.design.v == 9);
  CHECK(res.design.label_offset == -1);
  CHECK(res.classes.size() == 4);
  // Frozen from the construction: displayed (0-based) blocks class by class.
  std::vector<std::vector<int>> want = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                        {1, 4, 7}, {2, 5, 8}, {0, 5, 7}, {1, 3, 8},
                                        {2, 4, 6}, {0, 4, 8}, {2, 3, 7}, {1, 5, 6}};
  REQUIRE(res.design.blocks.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    std::vector<int> displayed;
    for (int p : res.design.blocks[i]) displayed.push_back(p - 1);
    CHECK(displayed == want[i]);
  }
  CHECK(design_profile(res.design, 2) == 1);

  auto bit = resolvable_from_code(2, {{1}});
  CHECK(bit.design.blocks == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(bit.classes.size() == 1);

  auto three = resolvable_from_code(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(three.classes.size() == 3);
  CHECK(cross_intersection_sizes(three) == std::set<size_t>{1});  // oracle: mu_2 = 1
  CHECK(crd_profile(three).mu.at(2) == 1);

  CHECK_THROWS_AS(resolvable_from_code(6, {{1}}), Error);        // no such field
  CHECK_THROWS_AS(resolvable_from_code(3, {{0, 0}}), Error);     // zero column
  CHECK_THROWS_AS(resolvable_from_code(3, {{1}, {1, 2}}), Error);  // ragged

  // GF(4) arithmetic backs the construction as well.
  auto gf4 = resolvable_from_code(4, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(gf4.design.v == 16);
  CHECK(gf4.classes.size() == 5);
  for (const auto& b : gf4.design.blocks) CHECK(b.size() == 4);
  CHECK(crd_profile(gf4).mu.at(2) == 1);
}

TEST_CASE("cross resolvability profiles") {
  auto p4 = crd_profile(fixtures::pairs4());
  CHECK(p4.mu.at(2) == 1);
  CHECK(p4.mu.count(3) == 0);  // |12 ∩ 13 ∩ 14| = 1 but |12 ∩ 13 ∩ 23| = 0
  CHECK(p4.is_crd());

  CHECK(!crd_profile(fixtures::resolv6()).is_crd());
  CHECK(crd_profile(fixtures::affine9()).mu.at(2) == 1);

  // Classes must partition the point set.
  auto broken = fixtures::pairs4();
  broken.classes[0] = {0, 1};  // blocks 12 and 13 overlap
  CHECK_THROWS_AS(crd_profile(broken), Error);
  broken.classes[0] = {0};  // point 3 and 4 uncovered
  CHECK_THROWS_AS(crd_profile(broken), Error);
}

TEST_CASE("orthogonal array profiles") {
  CHECK(oa_profile(fixtures::oa231(), 2) == 1);
  CHECK(oa_profile(fixtures::oa272(), 2) == 2);

  OrthogonalArray one;
  one.q = 1;
  one.r = 4;
  one.rows = {{1, 1, 1, 1}};
  CHECK(oa_profile(one, 1) == 1);

  OrthogonalArray bad = fixtures::oa231();
  bad.rows[0].pop_back();
  CHECK_THROWS_AS(oa_profile(bad, 2), Error);

  auto strength = oa_max_strength(fixtures::oa272());
  REQUIRE(strength.has_value());
  CHECK(strength->first == 2);
  CHECK(strength->second == 2);
}

TEST_CASE("constant-sum orthogonal arrays") {
  auto oa33 = proper_oa(3, 3);
  std::vector<std::vector<int>> want33 = {{1, 1, 1}, {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 2, 2},
                                          {2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {3, 3, 3}};
  CHECK(oa33.rows == want33);

  auto oa23 = proper_oa(2, 3);
  std::vector<std::vector<int>> want23 = {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
  CHECK(oa23.rows == want23);

  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {5, 3}}) {
    auto oa = proper_oa(q, m);
    CHECK(static_cast<long long>(oa.rows.size()) == ipow(q, m - 1));
    CHECK(oa_profile(oa, m - 1) == 1);
    CHECK(std::find(oa.rows.begin(), oa.rows.end(), std::vector<int>(m, 1)) != oa.rows.end());
  }
}

TEST_CASE("minimum distance and covering radius") {
  CHECK(oa_min_distance(proper_oa(3, 3)) == 2);
  CHECK(oa_min_distance(fixtures::oa231()) == 2);
  CHECK(oa_min_distance(proper_oa(2, 2)) == 2);
  CHECK_THROWS_AS(oa_min_distance(fixtures::oa272()), Error);  // index 2

  CHECK(covering_check(proper_oa(3, 3), 1));
  CHECK(!covering_check(proper_oa(2, 3), 0));
  CHECK(covering_check(fixtures::oa231(), 1));
}

TEST_CASE("parallel classes from orthogonal array columns") {
  auto res = crd_from_oa(fixtures::oa272());
  REQUIRE(res.classes.size() == 7);
  auto block_str = [&](int b) {
    std::string s;
    for (int x : res.design.blocks[b]) s += std::to_string(x);
    return s;
  };
  std::vector<std::vector<std::string>> want = {
      {"1234", "5678"}, {"1256", "3478"}, {"1278", "3456"}, {"1357", "2468"},
      {"1368", "2457"}, {"1458", "2367"}, {"1467", "2358"}};
  for (size_t c = 0; c < 7; ++c) {
    REQUIRE(res.classes[c].size() == 2);
    CHECK(block_str(res.classes[c][0]) == want[c][0]);
    CHECK(block_str(res.classes[c][1]) == want[c][1]);
  }
  CHECK(crd_profile(res).mu.at(2) == 2);

  auto small = crd_from_oa(fixtures::oa231());
  CHECK(small.design.v == 4);
  CHECK(small.classes.size() == 3);
  for (const auto& b : small.design.blocks) CHECK(b.size() == 2);
  CHECK(crd_profile(small).mu.at(2) == 1);

  OrthogonalArray column;
  column.q = 3;
  column.r = 1;
  column.rows = {{1}, {2}, {3}};
  auto singles = crd_from_oa(column);
  CHECK(singles.classes.size() == 1);
  CHECK(singles.design.blocks == std::vector<std::vector<int>>{{1}, {2}, {3}});

  OrthogonalArray dup = fixtures::oa231();
  dup.rows.push_back(dup.rows[0]);
  CHECK_THROWS_AS(crd_from_oa(dup), Error);
}

TEST_CASE("uniform group divisible designs") {
  auto g = trivial_gdd(3, 2, 2);
  CHECK(g.blocks.size() == 12);
  // Same block multiset as the 12 printed pairs.
  std::multiset<std::vector<std::pair<int, int>>> got(g.blocks.begin(), g.blocks.end());
  std::multiset<std::vector<std::pair<int, int>>> want;
  for (int u1 = 1; u1 <= 2; ++u1)
    for (int u2 = u1 + 1; u2 <= 3; ++u2)
      for (int v1 = 1; v1 <= 2; ++v1)
        for (int v2 = 1; v2 <= 2; ++v2)
          want.insert({{u1, v1}, {u2, v2}});
  CHECK(got == want);

  auto g33 = trivial_gdd(3, 3, 2);
  std::multiset<std::vector<std::pair<int, int>>> got33(g33.blocks.begin(), g33.blocks.end());
  auto fixture = fixtures::gdd332();
  std::multiset<std::vector<std::pair<int, int>>> want33(fixture.blocks.begin(),
                                                         fixture.blocks.end());
  CHECK(got33 == want33);

  CHECK(trivial_gdd(4, 2, 3).blocks.size() == 32);  // C(4,3) * 2^3
  CHECK_THROWS_AS(trivial_gdd(3, 2, 3), Error);
  CHECK_THROWS_AS(trivial_gdd(3, 1, 2), Error);
}

TEST_CASE("group divisible design profiles") {
  auto g = fixtures::gdd323();
  CHECK(gdd_profile(g, 1) == 2);
  CHECK(gdd_profile(g, 2) == 1);
  CHECK(gdd_lambda_closed(3, 2, 3, 1, 2, 1) == Rational(2));
  CHECK(gdd_profile(trivial_gdd(3, 3, 2), 2) == 1);
  CHECK_THROWS_AS(gdd_lambda_closed(3, 2, 3, 1, 2, 3), Error);

  // Exhaustive counts match the closed form on all small uniform GDDs.
  for (auto [m, q, t] : std::vector<std::array<int, 3>>{{3, 2, 2}, {4, 2, 2}, {4, 3, 2}, {5, 3, 3}}) {
    auto gd = trivial_gdd(m, q, t);
    for (int i = 1; i <= t; ++i)
      CHECK(Rational(*gdd_profile(gd, i)) == gdd_lambda_closed(m, q, t, 1, t, i));
  }
}

TEST_CASE("duals of cross resolvable designs") {
  auto p4 = fixtures::pairs4();
  auto g = gdd_from_crd(p4, crd_profile(p4));
  CHECK(g.m == 3);
  CHECK(g.q == 2);
  CHECK(g.declared_t == 2);
  CHECK(g.declared_lambda == 1);
  std::vector<std::vector<std::pair<int, int>>> want = {{{1, 1}, {2, 1}, {3, 1}},
                                                        {{1, 1}, {2, 2}, {3, 2}},
                                                        {{1, 2}, {2, 1}, {3, 2}},
                                                        {{1, 2}, {2, 2}, {3, 1}}};
  CHECK(g.blocks == want);
  CHECK(gdd_profile(g, 2) == 1);

  auto via_oa = crd_from_oa(fixtures::oa231());
  auto g2 = gdd_from_crd(via_oa, crd_profile(via_oa));
  CHECK(g2.m == 3);
  CHECK(g2.q == 2);
  CHECK(gdd_profile(g2, 2) == 1);

  Resolution lone;
  lone.design = fixtures::pairs4().design;
  lone.classes = {{0, 5}};
  CHECK_THROWS_AS(gdd_from_crd(lone, crd_profile(lone)), Error);
}

TEST_CASE("composing the orthogonal-array and dual transforms") {
  for (auto oa : {fixtures::oa231(), proper_oa(2, 3), proper_oa(3, 3)}) {
    auto res = crd_from_oa(oa);
    auto profile = crd_profile(res);
    REQUIRE(profile.is_crd());
    auto g = gdd_from_crd(res, profile);
    CHECK(gdd_profile(g, profile.mu.begin()->first) == profile.mu.begin()->second);
  }
}

TEST_CASE("design text format") {
  auto fano = fixtures::fano();
  auto text = write_design(fano);
  auto parsed = parse_design(text);
  CHECK(parsed.design.blocks == fano.blocks);
  CHECK(write_design(parsed.design) == text);

  // 0-based labels round-trip byte-exactly.
  auto res = fixtures::affine9();
  auto rtext = write_design(res);
  auto rparsed = parse_design(rtext);
  CHECK(rparsed.design.label_offset == -1);
  CHECK(rparsed.classes.size() == 4);
  CHECK(write_design(rparsed.resolution()) == rtext);

  CHECK_THROWS_WITH_AS(parse_design("design v=4 k=2\nblock: 1 2\njunk\n"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_AS(parse_design("design v=4 k=2\nblock: 1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_design("design v=4 k=2\nblock: 1 9\n"), Error);
  CHECK_THROWS_AS(parse_design(""), Error);
}

TEST_CASE("oa and gdd text formats") {
  auto text = write_oa(fixtures::oa272());
  auto oa = parse_oa(text);
  CHECK(oa.label_offset == -1);
  CHECK(oa.rows == fixtures::oa272().rows);
  CHECK(write_oa(oa) == text);
  CHECK_THROWS_AS(parse_oa("oa q=2 r=3\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_oa("oa q=2 r=3\n0 1 0 1\n"), Error);

  auto gtext = write_gdd(fixtures::gdd332());
  auto g = parse_gdd(gtext);
  CHECK(g.blocks == fixtures::gdd332().blocks);
  CHECK(write_gdd(g) == gtext);
  CHECK_THROWS_AS(parse_gdd("gdd m=3 q=2\nblock: (1,1) (1,2)\n"), Error);
  CHECK_THROWS_AS(parse_gdd("gdd m=3 q=2\nblock: (1,1) (4,1)\n"), Error);
}
