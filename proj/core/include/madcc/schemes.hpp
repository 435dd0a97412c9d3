#pragma once

#include <filesystem>
#include <vector>

#include "madcc/arrays.hpp"
#include "madcc/designs.hpp"
#include "madcc/metrics.hpp"

namespace madcc::schemes {

/// Star/null grid mapping packet rows to cache nodes.
struct PlacementArray {
  long long rows = 0;
  int cols = 0;
  std::vector<uint8_t> star;
  bool at(long long j, int g) const { return star[j * cols + g] != 0; }
  /// Stars per column; throws consistency-violation when not constant.
  long long star_per_column() const;
};

/// Which cache columns each user reads (0-based), all of size L.
struct AccessTopology {
  std::vector<std::vector<int>> user_caches;
  int L = 0;
};

enum class SchemeMode { madcc, d2d };

struct SchemeBundle {
  SchemeMode mode = SchemeMode::d2d;
  PlacementArray placement;  // empty in d2d mode
  AccessTopology topology;   // empty in d2d mode
  arrays::CodedArray delivery;
  arrays::SenderMap phi;
  SchemeMetrics metrics;
};

/// Packet split rule for the block-design scheme. `complement` splits each
/// packet into C(k, t-i) sub-packets; `fixed` always uses C(k, t-1), which
/// widens the usable i range at the cost of a conditional construction that
/// only the checker can accept.
enum class SplitRule { complement, fixed };

// --- block-design topology ---------------------------------------------------

PlacementArray tdesign_placement(const designs::Design& d, int t, int i, SplitRule rule);

/// Builds placement, topology, delivery array and sender map for a
/// t-(v,k,lambda) design with per-point packet index D of size i. The
/// delivery array is re-checked with the generic C1-C4 verifier; `fixed`
/// variants that fail it raise construction-unsupported.
SchemeBundle build_tdesign_scheme(const designs::Design& d, int t, long long lambda, int i,
                                  SplitRule rule);

/// Closed-form parameters (multiaccess view).
SchemeMetrics tdesign_metrics(int v, int k, long long lambda, int t, int i, SplitRule rule);

// --- group-divisible topology ------------------------------------------------

PlacementArray tgdd_placement(const designs::GroupDivisibleDesign& g,
                              const designs::OrthogonalArray& oa, int l);

/// Scheme over a t-(m,q,k,1) GDD with packet rows drawn from an s-(q,m,1)
/// orthogonal array, sub-split over C(k,l).
SchemeBundle build_tgdd_scheme(const designs::GroupDivisibleDesign& g, int t,
                               const designs::OrthogonalArray& oa, int l);

/// Closed-form parameters; S (and the load) is exact in the two k=t cases
/// and an upper bound otherwise (load_is_bound set).
SchemeMetrics tgdd_metrics(int m, int q, int k, int t, int s, int l);

// --- dedicated-cache constructions --------------------------------------------

/// Dedicated-cache array with the orthogonal-array rows as users and the
/// uniform GDD blocks as packet rows: a (q^(m-1), C(m,t)q^t,
/// (q^t-(q-1)^t)C(m,t), (q-1)^t q^(m-1)) sender-mapped array.
SchemeBundle build_oa_user_dpda(int m, int q, int t);

enum class CompleteFamily { i_family, j_family };

/// Dedicated-cache schemes over complete designs: the i family runs the
/// block-design pipeline on all k-subsets of [n] at strength k-1; the j
/// family on all (n-k)-subsets at strength k+1. `as_printed` switches the
/// j family to strength k-1 (kept for reference; it does not reproduce the
/// j-family parameter table).
SchemeBundle build_complete_family_scheme(int n, int k, CompleteFamily family, int idx,
                                          bool as_printed = false);

/// Dedicated-cache scheme from the uniform GDD plus the proper orthogonal
/// array with k=t, s=m-1, l=1.
SchemeBundle build_uniform_gdd_d2d_scheme(int m, int q, int t);

// --- bundle directory I/O ------------------------------------------------------

/// Writes placement.pda / topology.txt / delivery.pda / metrics.txt
/// (placement and topology only in multiaccess mode).
void write_bundle(const std::filesystem::path& dir, const SchemeBundle& bundle);
SchemeBundle read_bundle(const std::filesystem::path& dir);

/// Re-derives the retrievability star pattern from placement and topology and
/// compares it with the delivery array; throws consistency-violation naming
/// the first differing cell.
void validate_bundle(const SchemeBundle& bundle);

}  // namespace madcc::schemes
