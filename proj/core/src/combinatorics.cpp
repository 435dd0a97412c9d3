#include "madcc/combinatorics.hpp"

#include <cstdint>
#include <numeric>

#include "madcc/errors.hpp"

namespace madcc {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i);
    acc /= i;  // exact: product of i consecutive integers is divisible by i!
    if (acc > INT64_MAX) fail(Errc::out_of_range, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

long long ipow(long long b, int e) {
  if (e < 0) fail(Errc::invalid_parameters, "negative exponent");
  __int128 acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= b;
    if (acc > INT64_MAX || acc < INT64_MIN) fail(Errc::out_of_range, "integer power exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

long long subset_lex_rank(const std::vector<int>& s, int n) {
  long long rank = 0;
  int k = static_cast<int>(s.size());
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < s[i]; ++x) rank += binom(n - x, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

std::vector<int> base_q_digits(long long x, int q, int len) {
  std::vector<int> d(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    d[i] = static_cast<int>(x % q);
    x /= q;
  }
  return d;
}

}  // namespace madcc
