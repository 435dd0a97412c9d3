#include "madcc/designs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"

namespace madcc::designs {

namespace {

bool includes_sorted(const std::vector<int>& block, const std::vector<int>& sub) {
  return std::includes(block.begin(), block.end(), sub.begin(), sub.end());
}

bool intersects_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

std::optional<int> Design::block_size() const {
  if (blocks.empty()) return std::nullopt;
  size_t k = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != k) return std::nullopt;
  return static_cast<int>(k);
}

bool Design::has_repeated_blocks() const {
  auto sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

bool OrthogonalArray::is_simple() const {
  auto sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<int> GroupDivisibleDesign::block_size() const {
  if (blocks.empty()) return std::nullopt;
  size_t k = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != k) return std::nullopt;
  return static_cast<int>(k);
}

GaloisField::GaloisField(int q) : q_(q), is_gf4_(q == 4) {
  if (q < 2) fail(Errc::unsupported_field, "field size must be at least 2");
  if (q == 4) return;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) fail(Errc::unsupported_field, "GF(" + std::to_string(q) + ") not supported");
}

int GaloisField::add(int a, int b) const {
  if (is_gf4_) return a ^ b;
  return (a + b) % q_;
}

int GaloisField::mul(int a, int b) const {
  if (!is_gf4_) return static_cast<int>((static_cast<long long>(a) * b) % q_);
  // GF(4) = GF(2)[x]/(x^2+x+1) with elements 0,1,x=2,x+1=3.
  static constexpr int table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

Design complete_design(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    fail(Errc::invalid_parameters, "complete design needs 1 <= k <= n");
  Design d;
  d.v = n;
  d.blocks = k_subsets(n, k);
  return d;
}

Design dual_design(const Design& d) {
  Design out;
  out.v = static_cast<int>(d.blocks.size());
  out.blocks.resize(d.v);
  for (int bi = 0; bi < out.v; ++bi)
    for (int x : d.blocks[bi]) out.blocks[x - 1].push_back(bi + 1);
  return out;
}

Resolution resolvable_from_code(int q, const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) fail(Errc::invalid_parameters, "need at least one column");
  GaloisField gf(q);
  const int s = static_cast<int>(columns.front().size());
  if (s < 1) fail(Errc::invalid_parameters, "columns must have length >= 1");
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != s) fail(Errc::malformed_input, "ragged column lengths");
    bool nonzero = false;
    for (int e : c) {
      if (e < 0 || e >= q) fail(Errc::invalid_parameters, "column entry outside GF(q)");
      nonzero |= (e != 0);
    }
    if (!nonzero) fail(Errc::invalid_parameters, "zero column has no level-set parallel class");
  }

  const long long npoints = ipow(q, s);
  Resolution res;
  res.design.v = static_cast<int>(npoints);
  res.design.label_offset = -1;  // points are the messages 0..q^s-1
  for (const auto& col : columns) {
    std::vector<std::vector<int>> level(q);
    for (long long msg = 0; msg < npoints; ++msg) {
      auto digits = base_q_digits(msg, q, s);
      int acc = 0;
      for (int i = 0; i < s; ++i) acc = gf.add(acc, gf.mul(digits[i], col[i]));
      level[acc].push_back(static_cast<int>(msg) + 1);
    }
    std::vector<int> cls;
    for (int val = 0; val < q; ++val) {
      cls.push_back(static_cast<int>(res.design.blocks.size()));
      res.design.blocks.push_back(std::move(level[val]));
    }
    res.classes.push_back(std::move(cls));
  }
  return res;
}

OrthogonalArray proper_oa(int q, int m) {
  if (q < 2 || m < 2) fail(Errc::invalid_parameters, "proper OA needs q >= 2, m >= 2");
  OrthogonalArray oa;
  oa.q = q;
  oa.r = m;
  oa.declared_strength = m - 1;
  oa.declared_index = 1;
  const int target = m % q;
  std::vector<int> row(m, 1);
  while (true) {
    long long sum = 0;
    for (int x : row) sum += x;
    if (sum % q == target) oa.rows.push_back(row);
    int i = m - 1;
    while (i >= 0 && row[i] == q) --i;
    if (i < 0) break;
    ++row[i];
    for (int j = i + 1; j < m; ++j) row[j] = 1;
  }
  return oa;
}

Resolution crd_from_oa(const OrthogonalArray& oa) {
  if (!oa.is_simple()) fail(Errc::duplicate_rows, "OA has repeated rows");
  const int nrows = static_cast<int>(oa.rows.size());
  Resolution res;
  res.design.v = nrows;
  for (int c = 0; c < oa.r; ++c) {
    std::vector<std::vector<int>> by_symbol(oa.q + 1);
    for (int j = 0; j < nrows; ++j) by_symbol[oa.rows[j][c]].push_back(j + 1);
    std::vector<std::vector<int>> blocks;
    for (int s = 1; s <= oa.q; ++s)
      if (!by_symbol[s].empty()) blocks.push_back(std::move(by_symbol[s]));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> cls;
    for (auto& b : blocks) {
      cls.push_back(static_cast<int>(res.design.blocks.size()));
      res.design.blocks.push_back(std::move(b));
    }
    res.classes.push_back(std::move(cls));
  }
  return res;
}

GroupDivisibleDesign trivial_gdd(int m, int q, int t) {
  if (!(1 < t && t < m) || q < 2)
    fail(Errc::invalid_parameters, "trivial GDD needs 1 < t < m and q >= 2");
  GroupDivisibleDesign g;
  g.m = m;
  g.q = q;
  g.declared_t = t;
  g.declared_lambda = 1;
  for (const auto& groups : k_subsets(m, t)) {
    const long long combos = ipow(q, t);
    for (long long x = 0; x < combos; ++x) {
      auto vals = base_q_digits(x, q, t);
      std::vector<std::pair<int, int>> block(t);
      for (int i = 0; i < t; ++i) block[i] = {groups[i], vals[i] + 1};
      g.blocks.push_back(std::move(block));
    }
  }
  return g;
}

GroupDivisibleDesign gdd_from_crd(const Resolution& res, const CrdProfile& profile) {
  validate_resolution(res);
  if (!profile.is_crd())
    fail(Errc::precondition_failed, "resolution is not a cross resolvable design");
  const int t = profile.mu.begin()->first;
  const int r = static_cast<int>(res.classes.size());
  // Dual points are (class, block-within-class); each original point lies in
  // exactly one block per class, so its dual block meets every group once.
  std::vector<std::pair<int, int>> locate(res.design.blocks.size());
  int class_size = -1;
  for (int c = 0; c < r; ++c) {
    if (class_size == -1) class_size = static_cast<int>(res.classes[c].size());
    else if (class_size != static_cast<int>(res.classes[c].size()))
      fail(Errc::precondition_failed, "parallel classes of unequal size");
    for (int pos = 0; pos < static_cast<int>(res.classes[c].size()); ++pos)
      locate[res.classes[c][pos]] = {c + 1, pos + 1};
  }
  GroupDivisibleDesign g;
  g.m = r;
  g.q = class_size;
  g.declared_t = t;
  g.declared_lambda = profile.mu.begin()->second;
  g.blocks.assign(res.design.v, {});
  for (size_t bi = 0; bi < res.design.blocks.size(); ++bi)
    for (int x : res.design.blocks[bi]) g.blocks[x - 1].push_back(locate[bi]);
  for (auto& b : g.blocks) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != r)
      fail(Errc::precondition_failed, "point not covered once per class");
  }
  return g;
}

std::optional<long long> design_profile(const Design& d, int t) {
  auto k = d.block_size();
  if (!k || t > *k) fail(Errc::invalid_parameters, "profile strength exceeds block size");
  if (t < 0) fail(Errc::invalid_parameters, "negative strength");
  std::optional<long long> common;
  for (const auto& sub : k_subsets(d.v, t)) {
    long long count = 0;
    for (const auto& b : d.blocks)
      if (includes_sorted(b, sub)) ++count;
    if (!common) common = count;
    else if (*common != count) return std::nullopt;
  }
  return common;
}

long long block_count(const Design& d, const std::vector<int>& contain,
                      const std::vector<int>& avoid) {
  auto in_range = [&](int x) { return x >= 1 && x <= d.v; };
  for (int x : contain)
    if (!in_range(x)) fail(Errc::invalid_parameters, "contain point outside design");
  for (int x : avoid)
    if (!in_range(x)) fail(Errc::invalid_parameters, "avoid point outside design");
  auto c = contain;
  auto a = avoid;
  std::sort(c.begin(), c.end());
  std::sort(a.begin(), a.end());
  std::vector<int> both;
  std::set_intersection(c.begin(), c.end(), a.begin(), a.end(), std::back_inserter(both));
  if (!both.empty()) fail(Errc::invalid_parameters, "contain and avoid sets overlap");
  long long count = 0;
  for (const auto& b : d.blocks)
    if (includes_sorted(b, c) && !intersects_sorted(b, a)) ++count;
  return count;
}

Rational lambda_closed_form(int v, int k, long long lambda, int t, int i, int j) {
  if (i < 0 || j < 0 || i + j > t)
    fail(Errc::out_of_range, "closed form requires i + j <= t");
  return Rational(lambda) * Rational(binom(v - i - j, k - i)) / Rational(binom(v - t, k - t));
}

void validate_resolution(const Resolution& res) {
  std::vector<char> seen(res.design.v + 1);
  for (const auto& cls : res.classes) {
    std::fill(seen.begin(), seen.end(), 0);
    int covered = 0;
    for (int bi : cls) {
      if (bi < 0 || bi >= static_cast<int>(res.design.blocks.size()))
        fail(Errc::invalid_parameters, "class references a missing block");
      for (int x : res.design.blocks[bi]) {
        if (seen[x]) fail(Errc::invalid_parameters, "blocks within a class overlap");
        seen[x] = 1;
        ++covered;
      }
    }
    if (covered != res.design.v)
      fail(Errc::invalid_parameters, "a class does not cover the point set");
  }
}

CrdProfile crd_profile(const Resolution& res) {
  validate_resolution(res);
  const int r = static_cast<int>(res.classes.size());
  CrdProfile out;
  for (int i = 2; i <= r; ++i) {
    std::optional<long long> common;
    bool uniform = true;
    for (const auto& classes : k_subsets(r, i)) {
      std::vector<int> pick(i, 0);
      while (uniform) {
        std::vector<int> inter = res.design.blocks[res.classes[classes[0] - 1][pick[0]]];
        for (int c = 1; c < i && !inter.empty(); ++c) {
          const auto& blk = res.design.blocks[res.classes[classes[c] - 1][pick[c]]];
          std::vector<int> next;
          std::set_intersection(inter.begin(), inter.end(), blk.begin(), blk.end(),
                                std::back_inserter(next));
          inter = std::move(next);
        }
        long long card = static_cast<long long>(inter.size());
        if (!common) common = card;
        else if (*common != card) uniform = false;
        int c = i - 1;
        while (c >= 0 && pick[c] + 1 == static_cast<int>(res.classes[classes[c] - 1].size())) --c;
        if (c < 0) break;
        ++pick[c];
        for (int c2 = c + 1; c2 < i; ++c2) pick[c2] = 0;
      }
      if (!uniform) break;
    }
    if (uniform && common && *common > 0) out.mu[i] = *common;
  }
  return out;
}

std::optional<long long> oa_profile(const OrthogonalArray& oa, int t) {
  if (t < 1 || t > oa.r) fail(Errc::invalid_parameters, "strength outside [1, r]");
  for (const auto& row : oa.rows) {
    if (static_cast<int>(row.size()) != oa.r) fail(Errc::malformed_input, "ragged OA row");
    for (int s : row)
      if (s < 1 || s > oa.q) fail(Errc::malformed_input, "OA symbol outside alphabet");
  }
  const long long tuples = ipow(oa.q, t);
  std::optional<long long> common;
  for (const auto& cols : k_subsets(oa.r, t)) {
    std::vector<long long> counts(tuples, 0);
    for (const auto& row : oa.rows) {
      long long key = 0;
      for (int c : cols) key = key * oa.q + (row[c - 1] - 1);
      ++counts[key];
    }
    for (long long c : counts) {
      if (!common) common = c;
      else if (*common != c) return std::nullopt;
    }
  }
  if (common && *common == 0) return std::nullopt;
  return common;
}

std::optional<std::pair<int, long long>> oa_max_strength(const OrthogonalArray& oa) {
  std::optional<std::pair<int, long long>> best;
  for (int t = 1; t <= oa.r; ++t) {
    auto lambda = oa_profile(oa, t);
    if (!lambda) break;
    best = {t, *lambda};
  }
  return best;
}

int oa_min_distance(const OrthogonalArray& oa) {
  if (!oa.declared_index || *oa.declared_index != 1)
    fail(Errc::not_applicable, "minimum distance check applies to index-1 arrays");
  const int n = static_cast<int>(oa.rows.size());
  if (n < 2) fail(Errc::invalid_parameters, "need at least two rows");
  int best = oa.r + 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = 0;
      for (int c = 0; c < oa.r; ++c) d += (oa.rows[i][c] != oa.rows[j][c]);
      best = std::min(best, d);
    }
  return best;
}

bool covering_check(const OrthogonalArray& oa, int radius) {
  const long long all = ipow(oa.q, oa.r);
  std::vector<int> vec(oa.r, 1);
  for (long long x = 0; x < all; ++x) {
    auto digits = base_q_digits(x, oa.q, oa.r);
    for (int i = 0; i < oa.r; ++i) vec[i] = digits[i] + 1;
    bool covered = false;
    for (const auto& row : oa.rows) {
      int d = 0;
      for (int c = 0; c < oa.r && d <= radius; ++c) d += (row[c] != vec[c]);
      if (d <= radius) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::optional<long long> gdd_profile(const GroupDivisibleDesign& g, int i) {
  auto k = g.block_size();
  if (!k) fail(Errc::invalid_parameters, "GDD has no uniform block size");
  if (i < 1 || i > *k) fail(Errc::invalid_parameters, "profile order outside [1, k]");
  for (const auto& b : g.blocks)
    for (size_t idx = 1; idx < b.size(); ++idx)
      if (b[idx].first <= b[idx - 1].first)
        fail(Errc::invalid_parameters, "block meets a group more than once");
  std::optional<long long> common;
  for (const auto& groups : k_subsets(g.m, i)) {
    const long long combos = ipow(g.q, i);
    for (long long x = 0; x < combos; ++x) {
      auto vals = base_q_digits(x, g.q, i);
      std::vector<std::pair<int, int>> pts(i);
      for (int c = 0; c < i; ++c) pts[c] = {groups[c], vals[c] + 1};
      long long count = 0;
      for (const auto& b : g.blocks)
        if (std::includes(b.begin(), b.end(), pts.begin(), pts.end())) ++count;
      if (!common) common = count;
      else if (*common != count) return std::nullopt;
    }
  }
  return common;
}

std::optional<std::pair<int, long long>> gdd_max_strength(const GroupDivisibleDesign& g) {
  auto k = g.block_size();
  if (!k) return std::nullopt;
  std::optional<std::pair<int, long long>> best;
  for (int t = 1; t <= *k; ++t) {
    auto lambda = gdd_profile(g, t);
    if (!lambda || *lambda == 0) break;
    best = {t, *lambda};
  }
  return best;
}

Rational gdd_lambda_closed(int m, int q, int k, long long lambda, int t, int i) {
  if (i < 1 || i > t) fail(Errc::out_of_range, "closed form requires 1 <= i <= t");
  return Rational(lambda) * Rational(ipow(q, t - i)) * Rational(binom(m - i, t - i)) /
         Rational(binom(k - i, t - i));
}

std::optional<std::pair<int, long long>> design_max_strength(const Design& d) {
  auto k = d.block_size();
  if (!k) return std::nullopt;
  std::optional<std::pair<int, long long>> best;
  for (int t = 1; t <= *k; ++t) {
    auto lambda = design_profile(d, t);
    if (!lambda || *lambda == 0) break;
    best = {t, *lambda};
  }
  return best;
}

}  // namespace madcc::designs
