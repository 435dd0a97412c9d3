#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"
#include "madcc/fixtures.hpp"
#include "madcc/report.hpp"
#include "madcc/schemes.hpp"

using namespace madcc;
using namespace madcc::report;

TEST_CASE("wrap-around baseline parameters") {
  auto a = wccwc_metrics(6, 1, 2);
  CHECK(a.users == 7);
  CHECK(a.memory_ratio == Rational(1, 7));
  CHECK(a.load == Rational(5));
  CHECK(a.subpacketization == 42);

  auto b = wccwc_metrics(3, 1, 3);
  CHECK(b.users == 7);
  CHECK(b.load == Rational(4));
  CHECK(b.subpacketization == 21);

  auto c = wccwc_metrics(6, 3, 2);
  CHECK(c.users == 9);
  CHECK(c.memory_ratio == Rational(1, 3));
  CHECK(c.load == Rational(1));
  CHECK(c.subpacketization == 540);

  CHECK_THROWS_AS(wccwc_metrics(6, 1, 1), Error);
  CHECK_THROWS_AS(wccwc_metrics(6, 7, 2), Error);
}

TEST_CASE("derived block-design scheme") {
  auto row = cweg_tdesign_metrics(7, 3, 2);
  CHECK(row.subpacketization == 42);
  CHECK(row.load == Rational(2));
  CHECK(row.users == 7);

  // Same load as the direct construction, subpacketization larger by k-t+1.
  for (auto [v, k, t] : std::vector<std::array<int, 3>>{{7, 3, 2}, {8, 4, 3}, {9, 3, 2}}) {
    auto proposed = schemes::tdesign_metrics(v, k, 1, t, 1, schemes::SplitRule::complement);
    auto derived = cweg_tdesign_metrics(v, k, t);
    CHECK(proposed.load == derived.load);
    CHECK(Rational(proposed.F) / Rational(derived.subpacketization) == Rational(1, k - t + 1));
  }
}

TEST_CASE("derived group-divisible scheme") {
  auto row = cweg_tgdd_metrics(3, 3, 2);
  CHECK(row.subpacketization == 18);
  CHECK(row.load == Rational(6));
  CHECK(row.per_user_load == Rational(2, 9));

  // At t = m-1 the subpacketizations match and the per-user loads sit in the
  // ratio (m-1)/m.
  for (auto [m, q] : std::vector<std::pair<int, int>>{{3, 3}, {3, 2}, {4, 2}}) {
    const int t = m - 1;
    auto proposed = schemes::tgdd_metrics(m, q, t, t, m - 1, 1);
    auto derived = cweg_tgdd_metrics(m, q, t);
    CHECK(proposed.F == derived.subpacketization);
    CHECK(proposed.per_user_load / derived.per_user_load == Rational(m - 1, m));
  }

  CHECK_THROWS_AS(cweg_tgdd_metrics(3, 3, 3), Error);
}

TEST_CASE("dedicated-cache baseline") {
  auto row = jcm_metrics(30, Rational(2, 5));
  CHECK(row.load == Rational(3, 2));
  CHECK(row.subpacketization == 12 * binom(30, 12));

  CHECK(jcm_metrics(5, Rational(1)).load == Rational(0));
  CHECK_THROWS_AS(jcm_metrics(30, Rational(1, 7)), Error);

  // Closed form specialized to the block-design memory points.
  for (auto [v, k, t, i] : std::vector<std::array<int, 4>>{{10, 4, 3, 1}, {10, 4, 3, 2}, {7, 3, 2, 1}}) {
    auto m = schemes::tdesign_metrics(v, k, 1, t, i, schemes::SplitRule::complement);
    Rational mn = Rational(m.Z, m.F);
    Rational km = Rational(m.K) * mn;
    if (!km.is_integer()) continue;
    auto j = jcm_metrics(m.K, mn);
    CHECK(j.load == Rational(binom(v - k, i), binom(v, i) - binom(v - k, i)));
  }
}

TEST_CASE("memory sharing envelope") {
  std::vector<MemoryLoadPoint> pts = {{Rational(0), Rational(30)},
                                      {Rational(30), Rational(0)},
                                      {Rational(12), Rational(3, 2)},
                                      {Rational(20), Rational(2, 3)}};
  MemoryShareEnvelope env(pts, Rational(30), 30);
  CHECK(env.load_at(Rational(12)) == Rational(3, 2));
  CHECK(env.load_at(Rational(0)) == Rational(30));
  CHECK(env.load_at(Rational(30)) == Rational(0));
  CHECK(env.load_at(Rational(16)) == Rational(13, 12));

  // Convex and non-increasing.
  const auto& v = env.vertices();
  for (size_t i = 0; i + 1 < v.size(); ++i) CHECK(!(v[i].R < v[i + 1].R));
  for (size_t i = 0; i + 2 < v.size(); ++i) {
    Rational s1 = (v[i + 1].R - v[i].R) / (v[i + 1].M - v[i].M);
    Rational s2 = (v[i + 2].R - v[i + 1].R) / (v[i + 2].M - v[i + 1].M);
    CHECK(s1 <= s2);
  }

  // A dominated point never becomes a vertex.
  pts.push_back({Rational(16), Rational(100)});
  MemoryShareEnvelope env2(pts, Rational(30), 30);
  CHECK(env2.load_at(Rational(16)) == Rational(13, 12));

  CHECK_THROWS_AS(env.load_at(Rational(31)), Error);
  CHECK_THROWS_AS(env.load_at(Rational(-1)), Error);
  CHECK_THROWS_AS(MemoryShareEnvelope({{Rational(0), Rational(30)}}, Rational(30), 30), Error);
}

TEST_CASE("block-design comparison table") {
  auto rows = table_tdesign(7, 3, 1, 2, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].per_user_load == Rational(2, 7));
  CHECK(rows[1].per_user_load == Rational(2, 7));
  CHECK(rows[2].per_user_load == Rational(4, 7));
  CHECK(rows[0].subpacketization == 21);
  CHECK(rows[1].subpacketization == 42);
  CHECK(rows[2].subpacketization == 21);
  for (const auto& r : rows) {
    CHECK(r.caches == 7);
    CHECK(r.memory_ratio == Rational(1, 7));
  }
}

TEST_CASE("group-divisible comparison table") {
  auto rows = table_tgdd(3, 3, 2, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].load == Rational(4));
  CHECK(rows[1].load == Rational(6));
  CHECK(rows[2].load == Rational(1));
  CHECK(rows[0].subpacketization == 18);
  CHECK(rows[1].subpacketization == 18);
  CHECK(rows[2].subpacketization == 540);
  CHECK(rows[0].per_user_load == Rational(4, 27));
  CHECK(rows[1].per_user_load == Rational(2, 9));
  CHECK(rows[2].per_user_load == Rational(1, 9));
}

TEST_CASE("complete-design table measured from constructions") {
  auto rows = table_complete_family(8, 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].scheme == "i=1");
  CHECK(rows[0].memory_ratio == Rational(3, 8));
  CHECK(rows[0].subpacketization == 24);
  CHECK(rows[0].load == Rational(35, 2));
  CHECK(rows[1].memory_ratio == Rational(5, 8));
  CHECK(rows[1].subpacketization == 80);
  CHECK(rows[1].load == Rational(21, 4));
  CHECK(rows[2].memory_ratio == Rational(25, 28));
  CHECK(rows[2].subpacketization == 280);
  CHECK(rows[2].load == Rational(1));
  CHECK(rows[3].memory_ratio == Rational(55, 56));
  CHECK(rows[3].subpacketization == 280);
  CHECK(rows[3].load == Rational(1, 4));

  auto parallel = table_complete_family(8, 3, 4);
  REQUIRE(parallel.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(parallel[i].scheme == rows[i].scheme);
    CHECK(parallel[i].load == rows[i].load);
  }
}

TEST_CASE("dedicated-cache catalogue") {
  Table4Params p;
  p.uniform = {{3, 2, 2}};
  auto rows = table_d2d_schemes(p);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].scheme == "d2d-uniform-gdd");
  CHECK(rows[0].users == 12);
  CHECK(rows[0].load == Rational(1));  // (q-1)^t C(m-1,t-1)/t = 1*2/2
  CHECK(rows[0].subpacketization == 8);
  CHECK(rows[1].scheme == "d2d-oa-user");
  CHECK(rows[1].users == 4);
  CHECK(rows[1].load == Rational(1, 3));
  CHECK(rows[1].subpacketization == 12);
  CHECK(rows[1].memory_ratio == Rational(3, 4));

  Table4Params pd;
  pd.design = {{7, 3, 1, 2, 1}};
  auto drows = table_d2d_schemes(pd);
  REQUIRE(drows.size() == 2);
  CHECK(drows[0].memory_ratio == Rational(9, 21));
  CHECK(drows[0].load == Rational(2));
}

TEST_CASE("calculator rows match constructions") {
  auto fano = schemes::build_tdesign_scheme(fixtures::fano(), 2, 1, 1,
                                            schemes::SplitRule::complement);
  auto rows = table_tdesign(7, 3, 1, 2, 3);
  CHECK(fano.metrics.K == rows[0].users);
  CHECK(fano.metrics.F == rows[0].subpacketization);
  CHECK(fano.metrics.load == rows[0].load);
  CHECK(fano.metrics.memory_ratio == rows[0].memory_ratio);

  auto ex14 = schemes::build_tgdd_scheme(fixtures::gdd332(), 2, fixtures::oa331(), 1);
  auto grows = table_tgdd(3, 3, 2, 2);
  CHECK(ex14.metrics.K == grows[0].users);
  CHECK(ex14.metrics.F == grows[0].subpacketization);
  CHECK(ex14.metrics.load == grows[0].load);

  auto oa_user = schemes::build_oa_user_dpda(3, 2, 2);
  Table4Params p;
  p.uniform = {{3, 2, 2}};
  auto t4 = table_d2d_schemes(p);
  CHECK(oa_user.metrics.K == t4[1].users);
  CHECK(oa_user.metrics.F == t4[1].subpacketization);
  CHECK(oa_user.metrics.load == t4[1].load);
  CHECK(oa_user.metrics.memory_ratio == t4[1].memory_ratio);

  auto uniform = schemes::build_uniform_gdd_d2d_scheme(3, 2, 2);
  CHECK(uniform.metrics.K == t4[0].users);
  CHECK(uniform.metrics.F == t4[0].subpacketization);
  CHECK(uniform.metrics.load == t4[0].load);
  CHECK(uniform.metrics.memory_ratio == t4[0].memory_ratio);
}

TEST_CASE("csv and text rendering") {
  auto rows = table_tgdd(3, 3, 2, 2);
  auto csv = rows_to_csv(rows);
  CHECK(csv.find("scheme,caches,memory_ratio") == 0);
  CHECK(csv.find("proposed-tgdd,9,1/3,27,2,4/1,4/27,18,0") != std::string::npos);
  auto text = rows_to_text(rows);
  CHECK(text.find("0.148") != std::string::npos);
  CHECK(text.find("0.222") != std::string::npos);
  CHECK(text.find("0.111") != std::string::npos);
}
