#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "madcc/rational.hpp"

namespace madcc::designs {

/// A block design: a point set {1..v} plus a multiset of blocks. Points are
/// held 1-based internally; label_offset records how the source labelled them
/// (0 for 1-based input, -1 for 0-based) so text output round-trips exactly.
struct Design {
  int v = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending, values in [1..v]
  int label_offset = 0;
  std::optional<int> declared_t;
  std::optional<long long> declared_lambda;

  /// Common block size, or nullopt when block sizes differ.
  std::optional<int> block_size() const;
  bool has_repeated_blocks() const;
};

/// A design together with a partition of its blocks into parallel classes.
struct Resolution {
  Design design;
  std::vector<std::vector<int>> classes;  // 0-based block indices per class
};

/// Cross-intersection profile of a resolution: mu[i] is the constant nonzero
/// cardinality of the intersection of i blocks drawn from i distinct parallel
/// classes; i is absent when that cardinality varies or is zero.
struct CrdProfile {
  std::map<int, long long> mu;
  bool is_crd() const { return !mu.empty(); }
};

struct OrthogonalArray {
  int q = 0;                          // alphabet size
  int r = 0;                          // columns
  std::vector<std::vector<int>> rows; // symbols 1..q internally
  int label_offset = 0;               // display symbol = internal + offset
  std::optional<int> declared_strength;
  std::optional<long long> declared_index;

  bool is_simple() const;
};

/// Uniform group divisible design on m groups of q points; points are (u,v)
/// pairs with u in [m], v in [q]. Each block meets a group at most once, so
/// blocks are stored with strictly increasing group coordinate.
struct GroupDivisibleDesign {
  int m = 0;
  int q = 0;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::optional<int> declared_t;
  std::optional<long long> declared_lambda;

  std::optional<int> block_size() const;
};

/// Arithmetic for the small finite fields the resolvable-design construction
/// needs: prime fields via modular arithmetic plus GF(4) via tables.
class GaloisField {
 public:
  explicit GaloisField(int q);  // throws unsupported-field
  int size() const { return q_; }
  int add(int a, int b) const;
  int mul(int a, int b) const;

 private:
  int q_;
  bool is_gf4_;
};

// --- constructions ---------------------------------------------------------

/// All k-subsets of [n] in lexicographic order; a t-(n,k,C(n-t,k-t)) design
/// for every t <= k.
Design complete_design(int n, int k);

/// Dual: points become block indices, block i of the dual lists the original
/// blocks containing point i (in block-index order).
Design dual_design(const Design& d);

/// Resolvable design from the level sets of linear functionals over GF(q):
/// points are the q^s messages (0-based labels), one parallel class per
/// column, block c,val = {messages with inner product val against column c}.
Resolution resolvable_from_code(int q, const std::vector<std::vector<int>>& columns);

/// The rows of [q]^m whose coordinate sum is congruent to m mod q, in
/// lexicographic order: an (m-1)-(q,m,1) orthogonal array that always
/// contains the all-ones row.
OrthogonalArray proper_oa(int q, int m);

/// Parallel classes from the columns of a simple OA: points are row indices,
/// block (c,s) collects the rows showing symbol s in column c. For a
/// t-(q,r,lambda) OA this is a CRD with mu_t = lambda.
Resolution crd_from_oa(const OrthogonalArray& oa);

/// All t-sets of points from t distinct groups, ordered by (group tuple,
/// value tuple): the t-(m,q,t,1) GDD that exists for every 1 < t < m, q >= 2.
GroupDivisibleDesign trivial_gdd(int m, int q, int t);

/// Dual of a cross resolvable design: groups are the parallel classes and the
/// dual blocks pick one block per class, giving a t-(r, v/k, r, mu_t) GDD.
/// t is the smallest cross level present in the profile.
GroupDivisibleDesign gdd_from_crd(const Resolution& res, const CrdProfile& profile);

// --- checkers / counters ---------------------------------------------------

/// Exhaustive t-design check: the common number of blocks through every
/// t-subset of points, or nullopt when that count is not uniform.
std::optional<long long> design_profile(const Design& d, int t);

/// Number of blocks containing every point of `contain` and none of `avoid`.
long long block_count(const Design& d, const std::vector<int>& contain,
                      const std::vector<int>& avoid);

/// lambda * C(v-i-j, k-i) / C(v-t, k-t): blocks of a t-(v,k,lambda) design
/// through i given points and avoiding j others (valid for i + j <= t).
Rational lambda_closed_form(int v, int k, long long lambda, int t, int i, int j);

/// Checks that every class is a partition of the point set into v/k blocks;
/// throws invalid-parameters otherwise.
void validate_resolution(const Resolution& res);

/// Cross-intersection profile of a valid resolution (exhaustive).
CrdProfile crd_profile(const Resolution& res);

/// Exhaustive strength check: the common count of each t-tuple within every
/// t-column projection, or nullopt when the array is not an OA at strength t.
std::optional<long long> oa_profile(const OrthogonalArray& oa, int t);

/// Largest t (up to r) at which oa_profile is uniform, with its index.
std::optional<std::pair<int, long long>> oa_max_strength(const OrthogonalArray& oa);

/// Minimum pairwise Hamming distance between rows; requires index 1.
int oa_min_distance(const OrthogonalArray& oa);

/// True when every vector of [q]^r lies within the given Hamming radius of
/// some row.
bool covering_check(const OrthogonalArray& oa, int radius);

/// Exhaustive i-GDD check over i-sets of points from i distinct groups.
std::optional<long long> gdd_profile(const GroupDivisibleDesign& g, int i);

/// Largest t at which gdd_profile is uniform, with its index.
std::optional<std::pair<int, long long>> gdd_max_strength(const GroupDivisibleDesign& g);

/// lambda * q^(t-i) * C(m-i,t-i) / C(k-i,t-i) for a t-(m,q,k,lambda) GDD.
Rational gdd_lambda_closed(int m, int q, int k, long long lambda, int t, int i);

/// Largest t <= k at which the design is a uniform t-design, with lambda.
std::optional<std::pair<int, long long>> design_max_strength(const Design& d);

}  // namespace madcc::designs
