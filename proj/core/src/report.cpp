#include "madcc/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"
#include "madcc/schemes.hpp"

namespace madcc::report {

ComparisonRow wccwc_metrics(int K0, int t0, int r) {
  if (r <= 1) fail(Errc::invalid_parameters, "wrap-around access degree r must exceed 1");
  if (t0 < 1 || t0 > K0) fail(Errc::invalid_parameters, "need t0 in [K0]");
  ComparisonRow row;
  row.scheme = "wccwc";
  const long long K = static_cast<long long>(r - 1) * K0 + t0;
  row.caches = K;
  row.users = K;
  row.access = r;
  row.memory_ratio = Rational(t0, K);
  row.load = Rational(static_cast<long long>(K0 - t0) * (r - 1), t0);
  row.per_user_load = row.load / Rational(K);
  row.subpacketization = binom(K0, t0) * t0 * K;
  return row;
}

ComparisonRow cweg_tdesign_metrics(int v, int k, int t) {
  if (!(v > k && k >= t && t >= 1)) fail(Errc::invalid_parameters, "need v > k >= t >= 1");
  ComparisonRow row;
  row.scheme = "derived-tdesign";
  row.caches = v;
  row.memory_ratio = Rational(1, v);
  Rational users = Rational(binom(v, t)) / Rational(binom(k, t));
  if (!users.is_integer()) fail(Errc::invalid_parameters, "non-integer user count");
  row.users = users.num();
  row.access = k;
  row.load = Rational(binom(v - 1, k)) / (Rational(binom(v - t, k - t)) * Rational(t));
  row.per_user_load = row.load / Rational(row.users);
  row.subpacketization = static_cast<long long>(v) * t * binom(k, t);
  return row;
}

ComparisonRow cweg_tgdd_metrics(int m, int q, int t) {
  if (!(m > t && t >= 1 && q >= 2)) fail(Errc::invalid_parameters, "need m > t >= 1, q >= 2");
  if (binom(m, t) == 1) fail(Errc::invalid_parameters, "degenerate: C(m,t) = 1");
  ComparisonRow row;
  row.scheme = "derived-tgdd";
  row.caches = static_cast<long long>(m) * q;
  row.memory_ratio = Rational(1, q);
  row.users = binom(m, t) * ipow(q, t);
  row.access = t;
  row.load = Rational(binom(m, t) * ipow(q - 1, t), binom(m, t) - 1);
  row.per_user_load = row.load / Rational(row.users);
  row.subpacketization = (binom(m, t) - 1) * ipow(q, m - 1);
  return row;
}

ComparisonRow jcm_metrics(long long K, const Rational& memory_ratio) {
  Rational t = Rational(K) * memory_ratio;
  if (!t.is_integer() || t.num() < 1 || t.num() > K)
    fail(Errc::not_applicable, "K*M/N must be a positive integer up to K (memory-share instead)");
  ComparisonRow row;
  row.scheme = "jcm";
  row.users = K;
  row.memory_ratio = memory_ratio;
  row.load = (Rational(1) - memory_ratio) / memory_ratio;
  row.per_user_load = row.load / Rational(K);
  row.subpacketization = t.num() * binom(K, t.num());
  return row;
}

MemoryShareEnvelope::MemoryShareEnvelope(std::vector<MemoryLoadPoint> points, const Rational& N,
                                         long long K) {
  n_files_ = N;
  Rational top = Rational(K) < N ? Rational(K) : N;
  bool has_zero = false, has_full = false;
  for (const auto& p : points) {
    if (p.M == Rational(0) && p.R == top) has_zero = true;
    if (p.M == N && p.R == Rational(0)) has_full = true;
  }
  if (!has_zero || !has_full)
    fail(Errc::invalid_parameters,
         "points must include the trivial corners (0, min(K,N)) and (N, 0)");
  std::sort(points.begin(), points.end(), [](const MemoryLoadPoint& a, const MemoryLoadPoint& b) {
    if (a.M != b.M) return a.M < b.M;
    return a.R < b.R;
  });
  // Lower convex hull, left to right (monotone chain).
  auto cross_nonpositive = [](const MemoryLoadPoint& o, const MemoryLoadPoint& a,
                              const MemoryLoadPoint& b) {
    Rational c = (a.M - o.M) * (b.R - o.R) - (a.R - o.R) * (b.M - o.M);
    return !(Rational(0) < c);
  };
  for (const auto& p : points) {
    if (!vertices_.empty() && vertices_.back().M == p.M) continue;  // keep the lower duplicate
    while (vertices_.size() >= 2 &&
           cross_nonpositive(vertices_[vertices_.size() - 2], vertices_.back(), p))
      vertices_.pop_back();
    vertices_.push_back(p);
  }
}

Rational MemoryShareEnvelope::load_at(const Rational& M) const {
  if (M < Rational(0) || n_files_ < M) fail(Errc::out_of_range, "memory outside [0, N]");
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[i + 1];
    if (!(M < a.M) && (M < b.M || M == b.M)) {
      if (a.M == b.M) return a.R;
      return a.R + (b.R - a.R) * (M - a.M) / (b.M - a.M);
    }
  }
  return vertices_.back().R;
}

namespace {

ComparisonRow from_metrics(const char* name, const SchemeMetrics& m) {
  ComparisonRow row;
  row.scheme = name;
  row.caches = m.Gamma;
  row.memory_ratio = m.memory_ratio;
  row.users = m.K;
  row.access = m.L;
  row.load = m.load;
  row.per_user_load = m.per_user_load;
  row.subpacketization = m.F;
  row.load_is_bound = m.load_is_bound;
  return row;
}

}  // namespace

std::vector<ComparisonRow> table_tdesign(int v, int k, long long lambda, int t, int r) {
  std::vector<ComparisonRow> rows;
  rows.push_back(from_metrics("proposed-tdesign",
                              schemes::tdesign_metrics(v, k, lambda, t, 1, schemes::SplitRule::complement)));
  if (lambda == 1) rows.push_back(cweg_tdesign_metrics(v, k, t));
  if ((v - 1) % (r - 1) == 0) {
    ComparisonRow w = wccwc_metrics((v - 1) / (r - 1), 1, r);
    rows.push_back(std::move(w));
  }
  return rows;
}

std::vector<ComparisonRow> table_tgdd(int m, int q, int t, int r) {
  std::vector<ComparisonRow> rows;
  rows.push_back(from_metrics("proposed-tgdd", schemes::tgdd_metrics(m, q, t, t, m - 1, 1)));
  rows.push_back(cweg_tgdd_metrics(m, q, t));
  if ((static_cast<long long>(m) * (q - 1)) % (r - 1) == 0) {
    int K0 = static_cast<int>(static_cast<long long>(m) * (q - 1) / (r - 1));
    if (K0 >= m) rows.push_back(wccwc_metrics(K0, m, r));
  }
  return rows;
}

std::vector<ComparisonRow> table_complete_family(int n, int k, int jobs) {
  struct Job {
    std::string name;
    schemes::CompleteFamily family;
    int idx;
  };
  std::vector<Job> jobs_list;
  for (int i = 1; i <= k - 2; ++i)
    jobs_list.push_back({"i=" + std::to_string(i), schemes::CompleteFamily::i_family, i});
  for (int j = 1; j <= std::min(n - k - 2, k); ++j)
    jobs_list.push_back({"j=" + std::to_string(j), schemes::CompleteFamily::j_family, j});

  std::vector<ComparisonRow> rows(jobs_list.size());
  auto run_one = [&](size_t idx) {
    auto bundle = schemes::build_complete_family_scheme(n, k, jobs_list[idx].family,
                                                        jobs_list[idx].idx);
    rows[idx] = from_metrics(jobs_list[idx].name.c_str(), bundle.metrics);
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < jobs_list.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> futs;
    for (size_t i = 0; i < jobs_list.size(); ++i)
      futs.push_back(std::async(std::launch::async, run_one, i));
    for (auto& f : futs) f.get();
  }
  return rows;
}

std::vector<ComparisonRow> table_d2d_schemes(const Table4Params& p) {
  std::vector<ComparisonRow> rows;
  if (p.design) {
    auto [v, k, lambda, t, i] = *p.design;
    {
      auto m = schemes::tdesign_metrics(static_cast<int>(v), static_cast<int>(k), lambda,
                                        static_cast<int>(t), static_cast<int>(i),
                                        schemes::SplitRule::complement);
      auto row = from_metrics("d2d-tdesign", m);
      row.memory_ratio = Rational(m.Z, m.F);
      row.caches = 0;
      row.access = 0;
      rows.push_back(std::move(row));
    }
    if (i <= std::min(t, k - t + 1)) {
      auto m = schemes::tdesign_metrics(static_cast<int>(v), static_cast<int>(k), lambda,
                                        static_cast<int>(t), static_cast<int>(i),
                                        schemes::SplitRule::fixed);
      auto row = from_metrics("d2d-tdesign-fixed", m);
      row.memory_ratio = Rational(m.Z, m.F);
      row.caches = 0;
      row.access = 0;
      rows.push_back(std::move(row));
    }
  }
  if (p.gdd) {
    auto [m, q, k, t, s, l] = *p.gdd;
    auto mm = schemes::tgdd_metrics(static_cast<int>(m), static_cast<int>(q), static_cast<int>(k),
                                    static_cast<int>(t), static_cast<int>(s), static_cast<int>(l));
    auto row = from_metrics("d2d-tgdd", mm);
    row.memory_ratio = Rational(mm.Z, mm.F);
    row.caches = 0;
    row.access = 0;
    rows.push_back(std::move(row));
  }
  if (p.complete) {
    auto [n, k] = *p.complete;
    for (auto& row : table_complete_family(static_cast<int>(n), static_cast<int>(k)))
      rows.push_back(std::move(row));
  }
  if (p.uniform) {
    auto [m, q, t] = *p.uniform;
    {
      ComparisonRow row;
      row.scheme = "d2d-uniform-gdd";
      row.users = binom(m, t) * ipow(q, t);
      row.memory_ratio = Rational(1) - Rational(ipow(q - 1, t), ipow(q, t));
      row.load = Rational(ipow(q - 1, t) * binom(m - 1, t - 1), t);
      row.per_user_load = row.load / Rational(row.users);
      row.subpacketization = ipow(q, m - 1) * t;
      rows.push_back(std::move(row));
    }
    {
      ComparisonRow row;
      row.scheme = "d2d-oa-user";
      row.users = ipow(q, m - 1);
      row.memory_ratio = Rational(1) - Rational(ipow(q - 1, t), ipow(q, t));
      row.load = Rational(ipow(q - 1, t) * ipow(q, m - t - 1), binom(m, t));
      row.per_user_load = row.load / Rational(row.users);
      row.subpacketization = binom(m, t) * ipow(q, t);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string rows_to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << "scheme,caches,memory_ratio,users,access,load,load_per_user,subpacketization,load_is_bound\n";
  for (const auto& r : rows) {
    os << r.scheme << "," << r.caches << "," << r.memory_ratio.str() << "," << r.users << ","
       << r.access << "," << r.load.str() << "," << r.per_user_load.str() << ","
       << r.subpacketization << "," << (r.load_is_bound ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string rows_to_text(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  auto emit = [&os](const std::string& s, size_t width) {
    os << s;
    for (size_t i = s.size(); i < width; ++i) os << ' ';
    os << "  ";
  };
  emit("scheme", 20);
  emit("Gamma", 6);
  emit("M/N", 8);
  emit("K", 6);
  emit("L", 3);
  emit("R", 10);
  emit("R/K", 8);
  emit("F", 10);
  os << "\n";
  for (const auto& r : rows) {
    emit(r.scheme, 20);
    emit(r.caches ? std::to_string(r.caches) : "-", 6);
    emit(r.memory_ratio.str_decimal3(), 8);
    emit(std::to_string(r.users), 6);
    emit(r.access ? std::to_string(r.access) : "-", 3);
    emit((r.load_is_bound ? "<=" : "") + r.load.str_decimal3(), 10);
    emit(r.per_user_load.str_decimal3(), 8);
    emit(std::to_string(r.subpacketization), 10);
    os << "\n";
  }
  return os.str();
}

}  // namespace madcc::report
