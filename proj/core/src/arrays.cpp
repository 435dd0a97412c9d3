#include "madcc/arrays.hpp"

#include <algorithm>
#include <sstream>

#include "madcc/combinatorics.hpp"
#include "madcc/errors.hpp"

namespace madcc::arrays {

std::string LabelInfo::str() const {
  std::string s;
  if (vector_label) {
    for (size_t i = 0; i < elems.size(); ++i) s += std::to_string(elems[i]);
  } else {
    s += "{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems[i]);
    }
    s += "}";
  }
  s += "_" + std::to_string(alpha);
  return s;
}

CodedArray CodedArray::make(long long F, long long K) {
  if (F < 1 || K < 1) fail(Errc::invalid_parameters, "array dimensions must be positive");
  CodedArray a;
  a.F = F;
  a.K = K;
  a.cells.assign(static_cast<size_t>(F * K), kStar);
  return a;
}

const char* pda_cond_name(PdaCond c) {
  switch (c) {
    case PdaCond::C1: return "C1";
    case PdaCond::C2: return "C2";
    case PdaCond::C3a: return "C3a";
    case PdaCond::C3b: return "C3b";
    case PdaCond::C4: return "C4";
  }
  return "?";
}

std::string PdaReport::summary() const {
  std::ostringstream os;
  os << "(" << K << "," << F << "," << Z << "," << S << ")";
  if (regularity > 0) os << " g=" << regularity;
  if (!valid()) {
    os << " violations:";
    for (const auto& v : violations) {
      os << " " << pda_cond_name(v.cond);
      for (auto [j, k] : v.cells) os << "(" << j + 1 << "," << k + 1 << ")";
    }
  }
  return os.str();
}

namespace {

std::vector<std::vector<std::pair<long long, long long>>> occurrences(const CodedArray& arr) {
  std::vector<std::vector<std::pair<long long, long long>>> occ(arr.S);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k) {
      int32_t c = arr.at(j, k);
      if (c != kStar) {
        if (c < 0 || c >= arr.S) fail(Errc::malformed_input, "label id outside [S]");
        occ[c].push_back({j, k});
      }
    }
  return occ;
}

}  // namespace

PdaReport verify_pda(const CodedArray& arr) {
  PdaReport rep;
  rep.K = arr.K;
  rep.F = arr.F;
  rep.S = arr.S;

  std::vector<long long> stars(arr.K, 0);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k)
      if (arr.at(j, k) == kStar) ++stars[k];
  rep.Z = stars.empty() ? -1 : stars[0];
  for (long long k = 1; k < arr.K; ++k) {
    if (stars[k] != stars[0]) {
      rep.violations.push_back({PdaCond::C1,
                                {{-1, 0}, {-1, k}},
                                "column star counts differ (" + std::to_string(stars[0]) +
                                    " vs " + std::to_string(stars[k]) + ")"});
      rep.Z = -1;
      break;
    }
  }

  if (arr.S == 0) {
    rep.violations.push_back({PdaCond::C2, {}, "array carries no integers (S=0)"});
    return rep;
  }

  auto occ = occurrences(arr);
  for (int32_t s = 0; s < arr.S; ++s)
    if (occ[s].empty())
      rep.violations.push_back({PdaCond::C2, {}, "integer " + std::to_string(s + 1) + " never occurs"});

  long long g = -1;
  bool regular = true;
  for (int32_t s = 0; s < arr.S; ++s) {
    const auto& cells = occ[s];
    if (g == -1) g = static_cast<long long>(cells.size());
    else if (g != static_cast<long long>(cells.size())) regular = false;
    for (size_t a = 0; a < cells.size(); ++a)
      for (size_t b = a + 1; b < cells.size(); ++b) {
        auto [j1, k1] = cells[a];
        auto [j2, k2] = cells[b];
        if (j1 == j2 || k1 == k2) {
          rep.violations.push_back({PdaCond::C3a,
                                    {cells[a], cells[b]},
                                    "integer " + std::to_string(s + 1) + " repeats in a row or column"});
          continue;
        }
        if (arr.at(j1, k2) != kStar || arr.at(j2, k1) != kStar)
          rep.violations.push_back({PdaCond::C3b,
                                    {cells[a], cells[b]},
                                    "crossing cells of integer " + std::to_string(s + 1) +
                                        " are not both stars"});
      }
  }
  rep.regularity = regular ? g : 0;
  return rep;
}

PdaReport verify_dpda(const CodedArray& arr, const SenderMap& phi) {
  PdaReport rep = verify_pda(arr);
  if (static_cast<int32_t>(phi.to_column.size()) != arr.S) {
    rep.violations.push_back({PdaCond::C4, {}, "sender map does not cover [S]"});
    return rep;
  }
  auto occ = occurrences(arr);
  for (int32_t s = 0; s < arr.S; ++s) {
    int32_t col = phi.to_column[s];
    if (col < 0 || col >= arr.K) {
      rep.violations.push_back({PdaCond::C4, {}, "sender column out of range for integer " +
                                                     std::to_string(s + 1)});
      continue;
    }
    for (auto [j, k] : occ[s]) {
      (void)k;
      if (arr.at(j, col) != kStar) {
        rep.violations.push_back({PdaCond::C4,
                                  {{j, col}},
                                  "sender of integer " + std::to_string(s + 1) +
                                      " lacks a star in an occurrence row"});
        break;
      }
    }
  }
  return rep;
}

std::vector<std::vector<int32_t>> phi_candidates(const CodedArray& arr) {
  // Star membership per row as bitmask words, so candidate sets are ANDs.
  const size_t words = static_cast<size_t>((arr.K + 63) / 64);
  std::vector<uint64_t> row_stars(static_cast<size_t>(arr.F) * words, 0);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k)
      if (arr.at(j, k) == kStar)
        row_stars[j * words + k / 64] |= (uint64_t{1} << (k % 64));

  std::vector<std::vector<int32_t>> out(arr.S);
  std::vector<uint64_t> acc(words);
  std::vector<std::vector<long long>> rows_of(arr.S);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k) {
      int32_t c = arr.at(j, k);
      if (c != kStar && (rows_of[c].empty() || rows_of[c].back() != j)) rows_of[c].push_back(j);
    }
  for (int32_t s = 0; s < arr.S; ++s) {
    if (rows_of[s].empty()) continue;
    std::fill(acc.begin(), acc.end(), ~uint64_t{0});
    for (long long j : rows_of[s])
      for (size_t w = 0; w < words; ++w) acc[w] &= row_stars[j * words + w];
    for (long long k = 0; k < arr.K; ++k)
      if (acc[k / 64] & (uint64_t{1} << (k % 64))) out[s].push_back(static_cast<int32_t>(k));
  }
  return out;
}

std::optional<SenderMap> find_phi(const CodedArray& arr) {
  auto cand = phi_candidates(arr);
  SenderMap phi;
  phi.to_column.reserve(arr.S);
  for (int32_t s = 0; s < arr.S; ++s) {
    if (cand[s].empty()) return std::nullopt;
    phi.to_column.push_back(cand[s].front());
  }
  return phi;
}

CodedArray man_pda(int K0, int t0) {
  if (t0 < 1 || t0 > K0) fail(Errc::invalid_parameters, "need 1 <= t0 <= K0");
  const long long S = binom(K0, t0 + 1);
  if (S == 0)
    fail(Errc::invalid_parameters, "t0 = K0 leaves an all-star array (S = 0)");
  auto rows = k_subsets(K0, t0);
  CodedArray arr = CodedArray::make(static_cast<long long>(rows.size()), K0);
  arr.S = static_cast<int32_t>(S);
  arr.registry.resize(arr.S);
  for (size_t j = 0; j < rows.size(); ++j) {
    const auto& T = rows[j];
    for (int k = 1; k <= K0; ++k) {
      if (std::binary_search(T.begin(), T.end(), k)) continue;  // star
      std::vector<int> u = T;
      u.insert(std::lower_bound(u.begin(), u.end(), k), k);
      auto id = static_cast<int32_t>(subset_lex_rank(u, K0));
      arr.at(static_cast<long long>(j), k - 1) = id;
      if (arr.registry[id].elems.empty()) arr.registry[id] = {u, 1, false};
    }
  }
  return arr;
}

SchemeMetrics scheme_metrics_from_dpda(const CodedArray& arr, const SenderMap& phi) {
  PdaReport rep = verify_dpda(arr, phi);
  if (!rep.valid())
    fail(Errc::precondition_failed, "array is not a valid DPDA: " + rep.summary());
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

PdaFile parse_pda(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(is, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) {
        out = line;
        return true;
      }
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) fail(Errc::malformed_input, "empty pda file");
  long long F = 0, K = 0;
  {
    std::istringstream hs(header);
    std::string word, ftok, ktok;
    hs >> word >> ftok >> ktok;
    if (word != "pda" || sscanf(ftok.c_str(), "F=%lld", &F) != 1 ||
        sscanf(ktok.c_str(), "K=%lld", &K) != 1 || F < 1 || K < 1)
      fail(Errc::malformed_input, "line 1: expected 'pda F=<F> K=<K>'");
    std::string extra;
    if (hs >> extra) fail(Errc::malformed_input, "line 1: trailing content");
  }
  PdaFile out;
  out.array = CodedArray::make(F, K);
  int32_t max_id = 0;
  for (long long j = 0; j < F; ++j) {
    std::string row;
    if (!next_line(row)) fail(Errc::malformed_input, "unexpected end of file in row data");
    std::istringstream rs(row);
    std::string tok;
    for (long long k = 0; k < K; ++k) {
      if (!(rs >> tok))
        fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": short row");
      if (tok == "*") {
        out.array.at(j, k) = kStar;
      } else {
        long long id = 0;
        if (sscanf(tok.c_str(), "s%lld", &id) != 1 || id < 1)
          fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
        out.array.at(j, k) = static_cast<int32_t>(id - 1);
        max_id = std::max(max_id, static_cast<int32_t>(id));
      }
    }
    if (rs >> tok)
      fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": trailing content");
  }
  out.array.S = max_id;
  std::string rest;
  std::vector<int32_t> phi_cols;
  while (next_line(rest)) {
    long long id = 0, col = 0;
    char extra = 0;
    if (sscanf(rest.c_str(), "phi: s%lld->%lld%c", &id, &col, &extra) != 2 || id < 1 || col < 1 ||
        col > K)
      fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": expected 'phi: s<id>-><col>'");
    if (phi_cols.empty()) phi_cols.assign(max_id, -1);
    if (id > max_id) fail(Errc::malformed_input, "phi references unknown integer");
    phi_cols[id - 1] = static_cast<int32_t>(col - 1);
  }
  if (!phi_cols.empty()) {
    for (int32_t c : phi_cols)
      if (c < 0) fail(Errc::malformed_input, "phi lines do not cover every integer");
    out.phi = SenderMap{std::move(phi_cols)};
  }
  return out;
}

std::string write_pda(const CodedArray& arr, const SenderMap* phi) {
  std::ostringstream os;
  os << "pda F=" << arr.F << " K=" << arr.K << "\n";
  for (long long j = 0; j < arr.F; ++j) {
    for (long long k = 0; k < arr.K; ++k) {
      if (k) os << " ";
      int32_t c = arr.at(j, k);
      if (c == kStar) os << "*";
      else os << "s" << c + 1;
    }
    os << "\n";
  }
  if (phi) {
    for (size_t s = 0; s < phi->to_column.size(); ++s)
      os << "phi: s" << s + 1 << "->" << phi->to_column[s] + 1 << "\n";
  }
  return os.str();
}

}  // namespace madcc::arrays
