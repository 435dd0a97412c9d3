#include "madcc/schemes.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"

namespace madcc::schemes {

using arrays::CodedArray;
using arrays::kStar;
using arrays::SenderMap;
using designs::Design;
using designs::GroupDivisibleDesign;
using designs::OrthogonalArray;

namespace {

bool intersects_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) { ++n; ++i; ++j; }
    else if (*i < *j) ++i;
    else ++j;
  }
  return n;
}

/// Assigns dense ids to (raw label, alpha) pairs in first-appearance order.
class LabelInterner {
 public:
  int32_t intern(const std::vector<int>& raw, int alpha) {
    auto [it, inserted] = ids_.try_emplace({raw, alpha}, next_);
    if (inserted) {
      raws_.push_back(raw);
      alphas_.push_back(alpha);
      ++next_;
    }
    return it->second;
  }
  int32_t size() const { return next_; }
  const std::vector<int>& raw(int32_t id) const { return raws_[id]; }
  int alpha(int32_t id) const { return alphas_[id]; }

 private:
  std::map<std::pair<std::vector<int>, int>, int32_t> ids_;
  std::vector<std::vector<int>> raws_;
  std::vector<int> alphas_;
  int32_t next_ = 0;
};

void attach_registry(CodedArray& arr, const LabelInterner& interner, int display_offset,
                     bool vector_label) {
  arr.S = interner.size();
  arr.registry.resize(arr.S);
  for (int32_t id = 0; id < arr.S; ++id) {
    arrays::LabelInfo info;
    info.elems = interner.raw(id);
    for (int& e : info.elems) e += display_offset;
    info.alpha = interner.alpha(id);
    info.vector_label = vector_label;
    arr.registry[static_cast<size_t>(id)] = std::move(info);
  }
}

SchemeMetrics measured_metrics(const CodedArray& arr, const SenderMap& phi, Errc on_invalid,
                               const char* what) {
  auto rep = arrays::verify_dpda(arr, phi);
  if (!rep.valid()) fail(on_invalid, std::string(what) + " rejected by checker: " + rep.summary());
  SchemeMetrics m;
  m.K = arr.K;
  m.F = arr.F;
  m.Z = rep.Z;
  m.S = arr.S;
  m.memory_ratio = Rational(m.Z, m.F);
  m.load = Rational(m.S, m.F);
  m.per_user_load = m.load / Rational(m.K);
  return m;
}

SchemeBundle to_d2d(SchemeBundle b) {
  b.mode = SchemeMode::d2d;
  b.placement = {};
  b.topology = {};
  b.metrics.Gamma = 0;
  b.metrics.L = 0;
  b.metrics.Zprime = 0;
  b.metrics.memory_ratio = Rational(b.metrics.Z, b.metrics.F);
  return b;
}

void check_tdesign_ranges(int v, int k, int t, int i, SplitRule rule) {
  if (!(v > k && k >= t && t >= 1))
    fail(Errc::invalid_parameters, "need v > k >= t >= 1");
  const int max_i = rule == SplitRule::complement ? t - 1 : std::min(t, k - t + 1);
  if (i < 1 || i > max_i)
    fail(Errc::invalid_parameters,
         "i=" + std::to_string(i) + " outside [1.." + std::to_string(max_i) + "]");
}

struct TgddInputs {
  int m, q, k, t, s;
  std::vector<std::vector<int>> psi;   // group coordinates per block
  std::vector<std::vector<int>> vals;  // value coordinates per block
};

TgddInputs check_tgdd_inputs(const GroupDivisibleDesign& g, int t, const OrthogonalArray& oa,
                             int l) {
  auto kopt = g.block_size();
  if (!kopt) fail(Errc::invalid_parameters, "GDD blocks must share one size");
  TgddInputs in;
  in.m = g.m;
  in.q = g.q;
  in.k = *kopt;
  in.t = t;
  if (oa.r != g.m || oa.q != g.q)
    fail(Errc::invalid_parameters, "orthogonal array shape does not match the GDD");
  long long nrows = static_cast<long long>(oa.rows.size());
  int s = 0;
  for (long long p = 1; p < nrows; p *= g.q) ++s;
  if (ipow(g.q, s) != nrows)
    fail(Errc::invalid_parameters, "OA row count is not a power of q");
  in.s = s;
  if (!(1 <= t && t <= in.k && in.k <= s && s < in.m))
    fail(Errc::invalid_parameters, "need 1 <= t <= k <= s < m");
  if (l < 1 || l > std::min(in.m - s, t - 1))
    fail(Errc::invalid_parameters, "l outside [1..min(m-s, t-1)]");
  auto strength = designs::oa_profile(oa, s);
  if (!strength || *strength != 1)
    fail(Errc::invalid_parameters, "array is not an s-(q,m,1) orthogonal array");
  auto gl = designs::gdd_profile(g, t);
  if (!gl || *gl != 1) fail(Errc::invalid_parameters, "design is not a t-(m,q,k,1) GDD");
  in.psi.reserve(g.blocks.size());
  in.vals.reserve(g.blocks.size());
  for (const auto& b : g.blocks) {
    std::vector<int> psi(in.k), vals(in.k);
    for (int h = 0; h < in.k; ++h) {
      psi[h] = b[h].first;
      vals[h] = b[h].second;
    }
    in.psi.push_back(std::move(psi));
    in.vals.push_back(std::move(vals));
  }
  return in;
}

}  // namespace

long long PlacementArray::star_per_column() const {
  std::vector<long long> counts(cols, 0);
  for (long long j = 0; j < rows; ++j)
    for (int g = 0; g < cols; ++g)
      if (at(j, g)) ++counts[g];
  for (int g = 1; g < cols; ++g)
    if (counts[g] != counts[0])
      fail(Errc::consistency_violation, "placement column star counts differ");
  return cols ? counts[0] : 0;
}

PlacementArray tdesign_placement(const Design& d, int t, int i, SplitRule rule) {
  auto kopt = d.block_size();
  if (!kopt) fail(Errc::invalid_parameters, "design blocks must share one size");
  const int k = *kopt;
  check_tdesign_ranges(d.v, k, t, i, rule);
  const int w = rule == SplitRule::complement ? t - i : t - 1;
  auto Ds = k_subsets(d.v, i);
  const long long nT = binom(k, w);
  PlacementArray pl;
  pl.rows = static_cast<long long>(Ds.size()) * nT;
  pl.cols = d.v;
  pl.star.assign(static_cast<size_t>(pl.rows) * pl.cols, 0);
  for (size_t di = 0; di < Ds.size(); ++di)
    for (long long ti = 0; ti < nT; ++ti) {
      long long row = static_cast<long long>(di) * nT + ti;
      for (int x : Ds[di]) pl.star[row * pl.cols + (x - 1)] = 1;
    }
  return pl;
}

SchemeBundle build_tdesign_scheme(const Design& d, int t, long long lambda, int i,
                                  SplitRule rule) {
  auto kopt = d.block_size();
  if (!kopt) fail(Errc::invalid_parameters, "design blocks must share one size");
  const int k = *kopt;
  const int v = d.v;
  check_tdesign_ranges(v, k, t, i, rule);
  auto prof = designs::design_profile(d, t);
  if (!prof || *prof != lambda)
    fail(Errc::invalid_parameters, "input is not a " + std::to_string(t) + "-(" +
                                       std::to_string(v) + "," + std::to_string(k) + "," +
                                       std::to_string(lambda) + ") design");

  const int w = rule == SplitRule::complement ? t - i : t - 1;
  auto Ds = k_subsets(v, i);
  auto Ts = k_subsets(k, w);
  const long long K = static_cast<long long>(d.blocks.size());
  const long long F = static_cast<long long>(Ds.size()) * static_cast<long long>(Ts.size());

  CodedArray arr = CodedArray::make(F, K);
  LabelInterner interner;
  std::vector<int> raw;
  for (size_t di = 0; di < Ds.size(); ++di) {
    const auto& D = Ds[di];
    std::map<std::vector<int>, int> alpha_count;  // per fixed-D row group
    for (size_t ti = 0; ti < Ts.size(); ++ti) {
      const long long row = static_cast<long long>(di) * Ts.size() + ti;
      for (long long col = 0; col < K; ++col) {
        const auto& A = d.blocks[col];
        if (intersects_sorted(D, A)) continue;  // star
        raw.clear();
        for (int pos : Ts[ti]) raw.push_back(A[pos - 1]);
        raw.insert(raw.end(), D.begin(), D.end());
        std::sort(raw.begin(), raw.end());
        const int alpha = ++alpha_count[raw];
        arr.at(row, col) = interner.intern(raw, alpha);
      }
    }
  }
  attach_registry(arr, interner, d.label_offset, /*vector_label=*/false);

  SenderMap phi;
  phi.to_column.reserve(arr.S);
  for (int32_t id = 0; id < arr.S; ++id) {
    const auto& E = interner.raw(id);
    int32_t chosen = -1;
    for (long long col = 0; col < K && chosen < 0; ++col) {
      const auto& A = d.blocks[col];
      bool ok = rule == SplitRule::complement
                    ? std::includes(A.begin(), A.end(), E.begin(), E.end())
                    : sorted_intersection_size(E, A) >= t;
      if (ok) chosen = static_cast<int32_t>(col);
    }
    if (chosen < 0)
      fail(Errc::construction_unsupported,
           "no qualifying sender for label " + arr.registry[id].str());
    phi.to_column.push_back(chosen);
  }

  SchemeBundle bundle;
  bundle.mode = SchemeMode::madcc;
  bundle.placement = tdesign_placement(d, t, i, rule);
  bundle.topology.L = k;
  for (const auto& b : d.blocks) {
    std::vector<int> caches;
    for (int x : b) caches.push_back(x - 1);
    bundle.topology.user_caches.push_back(std::move(caches));
  }
  bundle.delivery = std::move(arr);
  bundle.phi = std::move(phi);
  bundle.metrics = measured_metrics(bundle.delivery, bundle.phi, Errc::construction_unsupported,
                                    "block-design delivery array");
  bundle.metrics.Gamma = v;
  bundle.metrics.L = k;
  bundle.metrics.Zprime = bundle.placement.star_per_column();
  bundle.metrics.memory_ratio = Rational(bundle.metrics.Zprime, F);
  return bundle;
}

SchemeMetrics tdesign_metrics(int v, int k, long long lambda, int t, int i, SplitRule rule) {
  check_tdesign_ranges(v, k, t, i, rule);
  const int w = rule == SplitRule::complement ? t - i : t - 1;
  SchemeMetrics m;
  m.Gamma = v;
  m.L = k;
  m.F = binom(v, i) * binom(k, w);
  m.Z = (binom(v, i) - binom(v - k, i)) * binom(k, w);
  m.Zprime = binom(v - 1, i - 1) * binom(k, w);
  Rational users = Rational(lambda) * Rational(binom(v, t)) / Rational(binom(k, t));
  if (!users.is_integer()) fail(Errc::invalid_parameters, "non-integer user count");
  m.K = users.num();
  Rational S = rule == SplitRule::complement
                   ? Rational(lambda) * Rational(binom(v, t)) * Rational(binom(v - t, k - t + i)) /
                         Rational(binom(v - t, k - t))
                   : Rational(lambda) * Rational(binom(v, i + t - 1)) *
                         Rational(binom(v - (i + t - 1), k - t + 1)) /
                         Rational(binom(v - t, k - t));
  if (!S.is_integer()) fail(Errc::invalid_parameters, "non-integer transmission count");
  m.S = S.num();
  m.memory_ratio = Rational(i, v);
  m.load = Rational(m.S, m.F);
  m.per_user_load = m.load / Rational(m.K);
  return m;
}

PlacementArray tgdd_placement(const GroupDivisibleDesign& g, const OrthogonalArray& oa, int l) {
  auto kopt = g.block_size();
  if (!kopt) fail(Errc::invalid_parameters, "GDD blocks must share one size");
  const int k = *kopt;
  if (l < 1 || l > k) fail(Errc::invalid_parameters, "l outside [1..k]");
  const long long nT = binom(k, l);
  PlacementArray pl;
  pl.rows = static_cast<long long>(oa.rows.size()) * nT;
  pl.cols = g.m * g.q;
  pl.star.assign(static_cast<size_t>(pl.rows) * pl.cols, 0);
  for (size_t j = 0; j < oa.rows.size(); ++j)
    for (long long ti = 0; ti < nT; ++ti) {
      const long long row = static_cast<long long>(j) * nT + ti;
      for (int u = 1; u <= g.m; ++u) {
        const int vsym = oa.rows[j][u - 1];
        pl.star[row * pl.cols + (u - 1) * g.q + (vsym - 1)] = 1;
      }
    }
  return pl;
}

SchemeBundle build_tgdd_scheme(const GroupDivisibleDesign& g, int t, const OrthogonalArray& oa,
                               int l) {
  TgddInputs in = check_tgdd_inputs(g, t, oa, l);
  auto Ts = k_subsets(in.k, l);
  const long long K = static_cast<long long>(g.blocks.size());
  const long long F = static_cast<long long>(oa.rows.size()) * static_cast<long long>(Ts.size());

  CodedArray arr = CodedArray::make(F, K);
  LabelInterner interner;
  for (size_t j = 0; j < oa.rows.size(); ++j) {
    const auto& Dj = oa.rows[j];
    std::map<std::vector<int>, int> alpha_count;  // per OA-row group
    for (size_t ti = 0; ti < Ts.size(); ++ti) {
      const long long row = static_cast<long long>(j) * Ts.size() + ti;
      for (long long col = 0; col < K; ++col) {
        const auto& psi = in.psi[col];
        const auto& vals = in.vals[col];
        bool any_match = false;
        for (int h = 0; h < in.k && !any_match; ++h)
          any_match = (Dj[psi[h] - 1] == vals[h]);
        if (any_match) continue;  // user retrieves this packet: star
        std::vector<int> e = Dj;
        for (int pos : Ts[ti]) e[psi[pos - 1] - 1] = vals[pos - 1];
        const int alpha = ++alpha_count[e];
        arr.at(row, col) = interner.intern(e, alpha);
      }
    }
  }
  attach_registry(arr, interner, oa.label_offset, /*vector_label=*/true);

  SenderMap phi;
  phi.to_column.reserve(arr.S);
  for (int32_t id = 0; id < arr.S; ++id) {
    const auto& e = interner.raw(id);
    int32_t chosen = -1;
    for (long long col = 0; col < K && chosen < 0; ++col) {
      const auto& psi = in.psi[col];
      const auto& vals = in.vals[col];
      int matches = 0;
      for (int h = 0; h < in.k; ++h) matches += (e[psi[h] - 1] == vals[h]);
      if (matches >= t) chosen = static_cast<int32_t>(col);
    }
    if (chosen < 0)
      fail(Errc::construction_unsupported,
           "no qualifying sender for label " + arr.registry[id].str());
    phi.to_column.push_back(chosen);
  }

  SchemeBundle bundle;
  bundle.mode = SchemeMode::madcc;
  bundle.placement = tgdd_placement(g, oa, l);
  bundle.topology.L = in.k;
  for (const auto& b : g.blocks) {
    std::vector<int> caches;
    for (const auto& [u, vsym] : b) caches.push_back((u - 1) * g.q + (vsym - 1));
    bundle.topology.user_caches.push_back(std::move(caches));
  }
  bundle.delivery = std::move(arr);
  bundle.phi = std::move(phi);
  bundle.metrics = measured_metrics(bundle.delivery, bundle.phi, Errc::construction_unsupported,
                                    "group-divisible delivery array");
  bundle.metrics.Gamma = static_cast<long long>(g.m) * g.q;
  bundle.metrics.L = in.k;
  bundle.metrics.Zprime = bundle.placement.star_per_column();
  bundle.metrics.memory_ratio = Rational(bundle.metrics.Zprime, F);
  return bundle;
}

SchemeMetrics tgdd_metrics(int m, int q, int k, int t, int s, int l) {
  if (!(1 <= t && t <= k && k <= s && s < m && q >= 2))
    fail(Errc::invalid_parameters, "need 1 <= t <= k <= s < m and q >= 2");
  if (l < 1 || l > std::min(m - s, t - 1))
    fail(Errc::invalid_parameters, "l outside [1..min(m-s, t-1)]");
  SchemeMetrics mm;
  mm.Gamma = static_cast<long long>(m) * q;
  mm.L = k;
  Rational users = Rational(binom(m, t)) * Rational(ipow(q, t)) / Rational(binom(k, t));
  if (!users.is_integer()) fail(Errc::invalid_parameters, "non-integer user count");
  mm.K = users.num();
  mm.F = ipow(q, s) * binom(k, l);
  mm.Z = (ipow(q, s) - ipow(q - 1, k) * ipow(q, s - k)) * binom(k, l);
  mm.Zprime = ipow(q, s - 1) * binom(k, l);
  if (k == t && s == m - 1 && l == 1) {
    mm.S = ipow(q, m - 1) * ipow(q - 1, t) * binom(m - 1, t - 1);
  } else if (k == t && s == m - t + 1 && s > t && l == m - s) {
    mm.S = (ipow(q, m) - ipow(q, m - t + 1)) * (q - 1) * (m - t + 1);
  } else {
    Rational bound = Rational(ipow(q, m) - ipow(q, s)) * Rational(ipow(q, t - l)) *
                     Rational(binom(m - l, t - l)) / Rational(binom(k - l, t - l));
    mm.S = bound.num() / bound.den();  // floor of the bound; load keeps the exact rational
    mm.load_is_bound = true;
    mm.memory_ratio = Rational(1, q);
    mm.load = bound / Rational(mm.F);
    mm.per_user_load = mm.load / Rational(mm.K);
    return mm;
  }
  mm.memory_ratio = Rational(1, q);
  mm.load = Rational(mm.S, mm.F);
  mm.per_user_load = mm.load / Rational(mm.K);
  return mm;
}

SchemeBundle build_oa_user_dpda(int m, int q, int t) {
  if (!(1 < t && t < m) || q < 2)
    fail(Errc::invalid_parameters, "need 1 < t < m and q >= 2");
  GroupDivisibleDesign g = designs::trivial_gdd(m, q, t);
  OrthogonalArray oa = designs::proper_oa(q, m);
  const long long F = static_cast<long long>(g.blocks.size());
  const long long K = static_cast<long long>(oa.rows.size());

  std::vector<std::vector<int>> psi(F), vals(F);
  for (long long r = 0; r < F; ++r) {
    psi[r].resize(t);
    vals[r].resize(t);
    for (int h = 0; h < t; ++h) {
      psi[r][h] = g.blocks[r][h].first;
      vals[r][h] = g.blocks[r][h].second;
    }
  }

  CodedArray arr = CodedArray::make(F, K);
  LabelInterner interner;
  for (long long row = 0; row < F; ++row) {
    std::map<std::vector<int>, int> alpha_count;  // occurrences left to right in this row
    for (long long col = 0; col < K; ++col) {
      const auto& Dj = oa.rows[col];
      bool any_match = false;
      for (int h = 0; h < t && !any_match; ++h) any_match = (Dj[psi[row][h] - 1] == vals[row][h]);
      if (any_match) continue;  // star
      std::vector<int> e = Dj;
      for (int h = 0; h < t; ++h) e[psi[row][h] - 1] = vals[row][h];
      const int alpha = ++alpha_count[e];
      arr.at(row, col) = interner.intern(e, alpha);
    }
  }
  attach_registry(arr, interner, oa.label_offset, /*vector_label=*/true);

  SenderMap phi;
  phi.to_column.reserve(arr.S);
  for (int32_t id = 0; id < arr.S; ++id) {
    const auto& e = interner.raw(id);
    int32_t chosen = -1;
    for (long long col = 0; col < K && chosen < 0; ++col) {
      int d = 0;
      for (int c = 0; c < m && d <= 1; ++c) d += (oa.rows[col][c] != e[c]);
      if (d <= 1) chosen = static_cast<int32_t>(col);
    }
    if (chosen < 0)
      fail(Errc::construction_unsupported,
           "no user within Hamming distance 1 of label " + arr.registry[id].str());
    phi.to_column.push_back(chosen);
  }

  SchemeBundle bundle;
  bundle.mode = SchemeMode::d2d;
  bundle.delivery = std::move(arr);
  bundle.phi = std::move(phi);
  bundle.metrics = measured_metrics(bundle.delivery, bundle.phi, Errc::construction_unsupported,
                                    "orthogonal-array user array");
  return bundle;
}

SchemeBundle build_complete_family_scheme(int n, int k, CompleteFamily family, int idx,
                                          bool as_printed) {
  if (k < 1 || 2 * k > n)
    fail(Errc::invalid_parameters, "need k <= n/2");
  if (family == CompleteFamily::i_family) {
    if (k < 3 || idx < 1 || idx > k - 2)
      fail(Errc::invalid_parameters, "i outside [1..k-2]");
    Design d = designs::complete_design(n, k);
    const int t = k - 1;
    const long long lambda = binom(n - t, k - t);
    return to_d2d(build_tdesign_scheme(d, t, lambda, idx, SplitRule::complement));
  }
  const int jmax = std::min(n - k - 2, k);
  if (idx < 1 || idx > jmax)
    fail(Errc::invalid_parameters, "j outside [1..min(n-k-2,k)]");
  Design d = designs::complete_design(n, n - k);
  const int t = as_printed ? k - 1 : k + 1;
  if (t > n - k)
    fail(Errc::invalid_parameters, "strength exceeds the complement block size; need n > 2k");
  if (as_printed && idx > t - 1)
    fail(Errc::invalid_parameters, "as-printed j family only defined for j <= k-2");
  const long long lambda = binom(n - t, (n - k) - t);
  return to_d2d(build_tdesign_scheme(d, t, lambda, idx, SplitRule::complement));
}

SchemeBundle build_uniform_gdd_d2d_scheme(int m, int q, int t) {
  if (!(1 < t && t < m) || q < 2)
    fail(Errc::invalid_parameters, "need 1 < t < m and q >= 2");
  GroupDivisibleDesign g = designs::trivial_gdd(m, q, t);
  OrthogonalArray oa = designs::proper_oa(q, m);
  return to_d2d(build_tgdd_scheme(g, t, oa, /*l=*/1));
}

void validate_bundle(const SchemeBundle& bundle) {
  if (bundle.mode == SchemeMode::d2d) return;
  const auto& pl = bundle.placement;
  const auto& arr = bundle.delivery;
  if (pl.rows != arr.F)
    fail(Errc::consistency_violation, "placement and delivery row counts differ");
  if (static_cast<long long>(bundle.topology.user_caches.size()) != arr.K)
    fail(Errc::consistency_violation, "topology user count differs from delivery columns");
  {
    auto sorted = bundle.topology.user_caches;
    for (auto& caches : sorted) {
      if (static_cast<int>(caches.size()) != bundle.topology.L)
        fail(Errc::consistency_violation, "a user accesses the wrong number of caches");
      std::sort(caches.begin(), caches.end());
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::consistency_violation, "two users access the same cache set");
  }
  for (long long k = 0; k < arr.K; ++k) {
    const auto& caches = bundle.topology.user_caches[k];
    for (long long j = 0; j < arr.F; ++j) {
      bool reachable = false;
      for (int g : caches)
        if (pl.at(j, g)) {
          reachable = true;
          break;
        }
      const bool star = arr.at(j, k) == kStar;
      if (reachable != star)
        fail(Errc::consistency_violation,
             "retrievability mismatch at row " + std::to_string(j + 1) + ", user " +
                 std::to_string(k + 1));
    }
  }
}

}  // namespace madcc::schemes
