#pragma once

#include <vector>

namespace madcc {

/// C(n,k) as an exact 64-bit value; 0 when k < 0 or k > n; throws
/// Errc::out_of_range if the value does not fit.
long long binom(long long n, long long k);

/// b^e with overflow checking.
long long ipow(long long b, int e);

/// All k-subsets of {1,...,n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// 0-based lexicographic rank of a sorted k-subset of {1,...,n}.
long long subset_lex_rank(const std::vector<int>& s, int n);

/// Digits of x in base q, most significant first, padded to len.
std::vector<int> base_q_digits(long long x, int q, int len);

}  // namespace madcc
