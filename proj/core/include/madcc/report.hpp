#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "madcc/metrics.hpp"
#include "madcc/rational.hpp"

namespace madcc::report {

struct ComparisonRow {
  std::string scheme;
  long long caches = 0;       // Gamma
  Rational memory_ratio;      // M/N
  long long users = 0;        // K
  long long access = 0;       // L
  Rational load;              // R
  Rational per_user_load;     // R/K
  long long subpacketization = 0;  // F
  bool load_is_bound = false;
};

/// Cyclic wrap-around baseline: K = Gamma = (r-1)K0 + t0, L = r,
/// M/N = t0/K, F = C(K0,t0) t0 K, R = (K0-t0)(r-1)/t0.
ComparisonRow wccwc_metrics(int K0, int t0, int r);

/// Multiaccess scheme derived from the user-retrieve array over a t-(v,k,1)
/// design: F = v t C(k,t), R = C(v-1,k) / (C(v-t,k-t) t).
ComparisonRow cweg_tdesign_metrics(int v, int k, int t);

/// Multiaccess scheme derived from the user-retrieve array over a
/// t-(m,q,t,1) GDD: F = (C(m,t)-1) q^(m-1), R = C(m,t)(q-1)^t / (C(m,t)-1).
ComparisonRow cweg_tgdd_metrics(int m, int q, int t);

/// Dedicated-cache baseline at integer K*M/N: R = (1 - M/N)/(M/N),
/// F = (K M/N) C(K, K M/N). Non-integer K*M/N is not-applicable.
ComparisonRow jcm_metrics(long long K, const Rational& memory_ratio);

struct MemoryLoadPoint {
  Rational M;  // memory in files
  Rational R;  // load
};

/// Lower convex envelope of achievable (M,R) points; memory sharing makes
/// every point on it achievable. The input must include the trivial corners
/// (0, min(K,N)) and (N, 0).
class MemoryShareEnvelope {
 public:
  MemoryShareEnvelope(std::vector<MemoryLoadPoint> points, const Rational& N, long long K);
  const std::vector<MemoryLoadPoint>& vertices() const { return vertices_; }
  Rational load_at(const Rational& M) const;

 private:
  std::vector<MemoryLoadPoint> vertices_;
  Rational n_files_;
};

/// Rows of the block-design comparison: the proposed scheme (i=1), the
/// derived scheme, and the wrap-around baseline with t0=1, K0=(v-1)/(r-1).
std::vector<ComparisonRow> table_tdesign(int v, int k, long long lambda, int t, int r);

/// Rows of the group-divisible comparison: proposed (k=t, s=m-1, l=1),
/// derived, and the wrap-around baseline with t0=m, K0=m(q-1)/(r-1).
std::vector<ComparisonRow> table_tgdd(int m, int q, int t, int r);

/// Dedicated-cache schemes over complete designs for (n,k), measured from
/// the constructed arrays: the i rows then the j rows.
std::vector<ComparisonRow> table_complete_family(int n, int k, int jobs = 1);

struct Table4Params {
  std::optional<std::array<long long, 5>> design;  // v,k,lambda,t,i
  std::optional<std::array<long long, 6>> gdd;     // m,q,k,t,s,l
  std::optional<std::array<long long, 2>> complete;  // n,k
  std::optional<std::array<long long, 3>> uniform;   // m,q,t
};

/// Catalogue of the dedicated-cache schemes (closed forms; the complete
/// family delegates to the constructions).
std::vector<ComparisonRow> table_d2d_schemes(const Table4Params& p);

std::string rows_to_csv(const std::vector<ComparisonRow>& rows);
std::string rows_to_text(const std::vector<ComparisonRow>& rows);

}  // namespace madcc::report
