#pragma once

#include "madcc/rational.hpp"

namespace madcc {

/// Parameters of a caching scheme. For multiaccess schemes the memory ratio
/// is the placement-array star fraction Zprime/F; for dedicated-cache schemes
/// it is the delivery-array star fraction Z/F. Gamma, L and Zprime stay zero
/// when the scheme has no separate cache nodes.
struct SchemeMetrics {
  long long K = 0;
  long long Gamma = 0;
  long long L = 0;
  long long F = 0;
  long long Z = 0;
  long long Zprime = 0;
  long long S = 0;
  Rational memory_ratio;
  Rational load;
  Rational per_user_load;
  bool load_is_bound = false;  // true when S/load are upper bounds, not exact
};

}  // namespace madcc
