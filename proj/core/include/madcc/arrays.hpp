#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "madcc/metrics.hpp"

namespace madcc::arrays {

inline constexpr int32_t kStar = -1;

/// Scheme-level name of an integer entry: a point set or a symbol vector,
/// plus the occurrence counter that keeps repeated names distinct.
struct LabelInfo {
  std::vector<int> elems;
  int alpha = 1;
  bool vector_label = false;  // true: symbol vector; false: point set
  std::string str() const;
};

/// An F x K array of stars and integers. Cells hold kStar or a 0-based label
/// id; ids are dense in [0, S). The registry, when present, carries the
/// scheme-level label behind each id for display.
struct CodedArray {
  long long F = 0;
  long long K = 0;
  std::vector<int32_t> cells;
  int32_t S = 0;
  std::vector<LabelInfo> registry;

  int32_t at(long long j, long long k) const { return cells[j * K + k]; }
  int32_t& at(long long j, long long k) { return cells[j * K + k]; }
  static CodedArray make(long long F, long long K);
};

/// Sender assignment: label id -> 0-based column of the transmitting user.
struct SenderMap {
  std::vector<int32_t> to_column;
};

enum class PdaCond { C1, C2, C3a, C3b, C4 };

const char* pda_cond_name(PdaCond c);

struct PdaViolation {
  PdaCond cond;
  std::vector<std::pair<long long, long long>> cells;  // witnesses (row, col)
  std::string detail;
};

struct PdaReport {
  long long K = 0;
  long long F = 0;
  long long Z = -1;          // -1 when column star counts differ
  long long S = 0;
  long long regularity = 0;  // 0 = irregular
  std::vector<PdaViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks C1 (constant stars per column), C2 (every id present), C3a
/// (repeats of an id lie in distinct rows and columns) and C3b (the crossing
/// cells of any repeat are stars). Violations carry witness cells in
/// deterministic row-major order.
PdaReport verify_pda(const CodedArray& arr);

/// verify_pda plus C4: every occurrence row of each id must show a star in
/// the sender's column.
PdaReport verify_dpda(const CodedArray& arr, const SenderMap& phi);

/// For each id, the columns showing a star in every row where the id occurs.
std::vector<std::vector<int32_t>> phi_candidates(const CodedArray& arr);

/// Smallest-index candidate per id, or nullopt when some id has none.
std::optional<SenderMap> find_phi(const CodedArray& arr);

/// The classic caching array: rows are the t0-subsets of [K0] in
/// lexicographic order, a star where the column belongs to the subset, and
/// the (t0+1)-subset union as the integer elsewhere.
CodedArray man_pda(int K0, int t0);

/// Measured parameters of a valid sender-mapped array (throws
/// precondition-failed when verification rejects it).
SchemeMetrics scheme_metrics_from_dpda(const CodedArray& arr, const SenderMap& phi);

// Text format: "pda F=<F> K=<K>", F rows of '*' / 's<id>' tokens, then
// optional "phi: s<id>-><col>" lines. Round-trips byte-exactly.
struct PdaFile {
  CodedArray array;
  std::optional<SenderMap> phi;
};

PdaFile parse_pda(const std::string& text);
std::string write_pda(const CodedArray& arr, const SenderMap* phi = nullptr);

}  // namespace madcc::arrays
