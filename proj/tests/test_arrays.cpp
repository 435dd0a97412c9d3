#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "madcc/arrays.hpp"
#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"
#include "madcc/fixtures.hpp"
#include "madcc/schemes.hpp"

using namespace madcc;
using namespace madcc::arrays;

TEST_CASE("the 4x4 sender-mapped array") {
  auto f = fixtures::dpda44();
  auto rep = verify_pda(f.array);
  CHECK(rep.valid());
  CHECK(rep.K == 4);
  CHECK(rep.F == 4);
  CHECK(rep.Z == 2);
  CHECK(rep.S == 4);
  CHECK(rep.regularity == 2);

  auto phi = find_phi(f.array);
  REQUIRE(phi.has_value());
  CHECK(phi->to_column == std::vector<int32_t>{0, 1, 2, 3});  // identity
  CHECK(verify_dpda(f.array, *phi).valid());

  auto m = scheme_metrics_from_dpda(f.array, *phi);
  CHECK(m.memory_ratio == Rational(1, 2));
  CHECK(m.load == Rational(1));
}

TEST_CASE("star-only arrays carry no integers") {
  auto arr = CodedArray::make(3, 3);
  auto rep = verify_pda(arr);
  CHECK(!rep.valid());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].cond == PdaCond::C2);
}

TEST_CASE("the checker localizes a broken pair") {
  auto f = fixtures::dpda44();
  f.array.at(0, 3) = 2;  // repaint the top-right 1 as a 3
  auto rep = verify_pda(f.array);
  CHECK(!rep.valid());
  bool witnessed = false;
  for (const auto& v : rep.violations) {
    if (v.cond != PdaCond::C3a && v.cond != PdaCond::C3b) continue;
    for (auto [j, k] : v.cells)
      if (j == 0 && k == 3) witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("classic caching arrays") {
  auto man = man_pda(4, 2);
  auto rep = verify_pda(man);
  CHECK(rep.valid());
  CHECK(rep.K == 4);
  CHECK(rep.F == 6);
  CHECK(rep.Z == 3);
  CHECK(rep.S == 4);
  CHECK(rep.regularity == 3);

  // No column shows a star in every occurrence row of any integer, so no
  // sender assignment exists for this array (exhaustive candidate check).
  auto cands = phi_candidates(man);
  for (const auto& c : cands) CHECK(c.empty());
  CHECK(!find_phi(man).has_value());

  auto man61 = man_pda(6, 1);
  auto rep61 = verify_pda(man61);
  CHECK(rep61.valid());
  CHECK(rep61.K == 6);
  CHECK(rep61.F == 6);
  CHECK(rep61.Z == 1);
  CHECK(rep61.S == 15);

  CHECK_THROWS_AS(man_pda(4, 4), Error);  // S would be 0
  CHECK_THROWS_AS(man_pda(4, 5), Error);

  for (auto [K0, t0] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}}) {
    auto arr = man_pda(K0, t0);
    auto r = verify_pda(arr);
    CHECK(r.Z == binom(K0 - 1, t0 - 1));
    CHECK(r.S == binom(K0, t0 + 1));
    CHECK(r.regularity == t0 + 1);
    long long nonstars = 0;
    for (auto c : arr.cells) nonstars += (c != kStar);
    CHECK(nonstars == (t0 + 1) * binom(K0, t0 + 1));
  }
}

TEST_CASE("sender candidates") {
  // Valid 2x2 array whose only integer has an empty candidate set.
  auto arr = CodedArray::make(2, 2);
  arr.at(0, 1) = 0;
  arr.at(1, 0) = 0;
  arr.S = 1;
  CHECK(verify_pda(arr).valid());
  CHECK(!find_phi(arr).has_value());

  // Deterministic smallest-index tie break.
  auto f = fixtures::dpda44();
  auto cands = phi_candidates(f.array);
  auto phi = find_phi(f.array);
  REQUIRE(phi.has_value());
  for (int32_t s = 0; s < f.array.S; ++s) {
    REQUIRE(!cands[s].empty());
    CHECK(phi->to_column[s] == cands[s].front());
  }
}

TEST_CASE("metrics require a valid array") {
  auto f = fixtures::dpda44();
  f.array.at(0, 0) = 0;  // break C1 and C3
  CHECK_THROWS_AS(scheme_metrics_from_dpda(f.array, *f.phi), Error);
}

TEST_CASE("pda text round trip") {
  auto f = fixtures::dpda44();
  auto text = write_pda(f.array, &*f.phi);
  auto parsed = parse_pda(text);
  CHECK(parsed.array.cells == f.array.cells);
  CHECK(parsed.array.S == f.array.S);
  REQUIRE(parsed.phi.has_value());
  CHECK(parsed.phi->to_column == f.phi->to_column);
  CHECK(write_pda(parsed.array, &*parsed.phi) == text);

  CHECK_THROWS_AS(parse_pda("pda F=2 K=2\n* s1\n"), Error);          // short file
  CHECK_THROWS_AS(parse_pda("pda F=1 K=2\n* s1 s2\n"), Error);       // long row
  CHECK_THROWS_AS(parse_pda("pda F=1 K=2\n* x\n"), Error);           // bad token
  CHECK_THROWS_AS(parse_pda("pda F=1 K=1\ns1\nphi: s1->9\n"), Error);  // phi out of range
  CHECK_THROWS_AS(parse_pda("pda F=1 K=2\ns1 s2\nphi: s1->1\n"), Error);  // phi incomplete
}

namespace {

void check_mutation_localized(const CodedArray& base, long long j, long long k, int32_t value) {
  auto arr = base;
  arr.at(j, k) = value;
  auto rep = verify_pda(arr);
  if (rep.valid()) return;
  bool localized = false;
  for (const auto& v : rep.violations) {
    if (v.cond == PdaCond::C2) localized = true;  // the mutated label vanished
    for (auto [wj, wk] : v.cells)
      if (wj == j || wk == k) localized = true;
  }
  CHECK_MESSAGE(localized, "mutation at (", j, ",", k, ") -> ", value,
                " produced only unrelated witnesses");
}

}  // namespace

TEST_CASE("single-cell mutations are either harmless or witnessed") {
  auto base = fixtures::dpda44().array;
  for (long long j = 0; j < base.F; ++j)
    for (long long k = 0; k < base.K; ++k)
      for (int32_t value = -1; value < base.S; ++value)
        if (base.at(j, k) != value) check_mutation_localized(base, j, k, value);
}

TEST_CASE("random mutations of a larger array stay localized") {
  auto bundle = schemes::build_tdesign_scheme(fixtures::fano(), 2, 1, 1,
                                              schemes::SplitRule::complement);
  const auto& base = bundle.delivery;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    long long j = static_cast<long long>(rng() % base.F);
    long long k = static_cast<long long>(rng() % base.K);
    int32_t value = static_cast<int32_t>(rng() % (base.S + 1)) - 1;
    if (base.at(j, k) == value) continue;
    check_mutation_localized(base, j, k, value);
  }
}
