#include "madcc/design_text.hpp"

#include <algorithm>
#include <sstream>

#include "madcc/errors.hpp"

namespace madcc::designs {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(tok[i]))) return false;
  out = std::stoll(tok);
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> toks;
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

// "key=value" token; returns false on shape mismatch.
bool key_value(const std::string& tok, const std::string& key, long long& out) {
  if (tok.rfind(key + "=", 0) != 0) return false;
  return parse_int(tok.substr(key.size() + 1), out);
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Resolution DesignFile::resolution() const {
  Resolution r;
  r.design = design;
  r.classes = classes;
  return r;
}

DesignFile parse_design(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::malformed_input, "empty design file");
  auto header = tokens_of(lines[0]);
  long long v = 0, k = -1;
  if (header.size() < 2 || header.size() > 3 || header[0] != "design" ||
      !key_value(header[1], "v", v) ||
      (header.size() == 3 && !key_value(header[2], "k", k)))
    bad_line(1, "expected 'design v=<n> [k=<k>]'");
  if (v < 1) bad_line(1, "v must be positive");

  DesignFile out;
  out.design.v = static_cast<int>(v);
  bool saw_zero = false;
  std::vector<std::vector<int>> raw_blocks;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto toks = tokens_of(lines[i]);
    if (toks[0] == "block:") {
      std::vector<int> block;
      for (size_t j = 1; j < toks.size(); ++j) {
        long long p;
        if (!parse_int(toks[j], p)) bad_line(static_cast<int>(i + 1), "bad point '" + toks[j] + "'");
        if (p == 0) saw_zero = true;
        block.push_back(static_cast<int>(p));
      }
      if (block.empty()) bad_line(static_cast<int>(i + 1), "empty block");
      raw_blocks.push_back(std::move(block));
    } else if (toks[0] == "class:") {
      std::vector<int> cls;
      for (size_t j = 1; j < toks.size(); ++j) {
        long long idx;
        if (!parse_int(toks[j], idx) || idx < 1)
          bad_line(static_cast<int>(i + 1), "bad block index '" + toks[j] + "'");
        cls.push_back(static_cast<int>(idx) - 1);
      }
      out.classes.push_back(std::move(cls));
    } else {
      bad_line(static_cast<int>(i + 1), "unexpected content '" + toks[0] + "'");
    }
  }

  out.design.label_offset = saw_zero ? -1 : 0;
  const int shift = saw_zero ? 1 : 0;
  for (auto& b : raw_blocks) {
    for (auto& p : b) {
      p += shift;
      if (p < 1 || p > out.design.v)
        fail(Errc::malformed_input, "point outside [1..v] after offset");
    }
    std::sort(b.begin(), b.end());
    out.design.blocks.push_back(std::move(b));
  }
  if (k >= 0) {
    for (const auto& b : out.design.blocks)
      if (static_cast<long long>(b.size()) != k)
        fail(Errc::malformed_input, "block size differs from declared k");
  }
  for (const auto& cls : out.classes)
    for (int idx : cls)
      if (idx >= static_cast<int>(out.design.blocks.size()))
        fail(Errc::malformed_input, "class references missing block");
  return out;
}

std::string write_design(const Design& d, const std::vector<std::vector<int>>& classes) {
  std::ostringstream os;
  os << "design v=" << d.v;
  if (auto k = d.block_size()) os << " k=" << *k;
  os << "\n";
  for (const auto& b : d.blocks) {
    os << "block:";
    for (int p : b) os << " " << p + d.label_offset;
    os << "\n";
  }
  for (const auto& cls : classes) {
    os << "class:";
    for (int idx : cls) os << " " << idx + 1;
    os << "\n";
  }
  return os.str();
}

std::string write_design(const Resolution& res) { return write_design(res.design, res.classes); }

OrthogonalArray parse_oa(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::malformed_input, "empty OA file");
  auto header = tokens_of(lines[0]);
  long long q = 0, r = 0;
  if (header.size() != 3 || header[0] != "oa" || !key_value(header[1], "q", q) ||
      !key_value(header[2], "r", r))
    bad_line(1, "expected 'oa q=<v> r=<r>'");
  if (q < 1 || r < 1) bad_line(1, "q and r must be positive");

  OrthogonalArray oa;
  oa.q = static_cast<int>(q);
  oa.r = static_cast<int>(r);
  bool saw_zero = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto toks = tokens_of(lines[i]);
    if (static_cast<long long>(toks.size()) != r)
      bad_line(static_cast<int>(i + 1), "row has wrong number of symbols");
    std::vector<int> row;
    for (const auto& t : toks) {
      long long s;
      if (!parse_int(t, s)) bad_line(static_cast<int>(i + 1), "bad symbol '" + t + "'");
      if (s == 0) saw_zero = true;
      row.push_back(static_cast<int>(s));
    }
    oa.rows.push_back(std::move(row));
  }
  oa.label_offset = saw_zero ? -1 : 0;
  const int shift = saw_zero ? 1 : 0;
  for (auto& row : oa.rows)
    for (auto& s : row) {
      s += shift;
      if (s < 1 || s > oa.q) fail(Errc::malformed_input, "symbol outside alphabet after offset");
    }
  return oa;
}

std::string write_oa(const OrthogonalArray& oa) {
  std::ostringstream os;
  os << "oa q=" << oa.q << " r=" << oa.r << "\n";
  for (const auto& row : oa.rows) {
    for (int c = 0; c < oa.r; ++c) os << (c ? " " : "") << row[c] + oa.label_offset;
    os << "\n";
  }
  return os.str();
}

GroupDivisibleDesign parse_gdd(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::malformed_input, "empty GDD file");
  auto header = tokens_of(lines[0]);
  long long m = 0, q = 0;
  if (header.size() != 3 || header[0] != "gdd" || !key_value(header[1], "m", m) ||
      !key_value(header[2], "q", q))
    bad_line(1, "expected 'gdd m=<m> q=<q>'");

  GroupDivisibleDesign g;
  g.m = static_cast<int>(m);
  g.q = static_cast<int>(q);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto toks = tokens_of(lines[i]);
    if (toks[0] != "block:") bad_line(static_cast<int>(i + 1), "expected 'block:'");
    std::vector<std::pair<int, int>> block;
    for (size_t j = 1; j < toks.size(); ++j) {
      int u = 0, v = 0;
      char extra = 0;
      if (sscanf(toks[j].c_str(), "(%d,%d)%c", &u, &v, &extra) != 2)
        bad_line(static_cast<int>(i + 1), "bad point '" + toks[j] + "'");
      if (u < 1 || u > g.m || v < 1 || v > g.q)
        bad_line(static_cast<int>(i + 1), "point coordinates outside (m,q) ranges");
      block.emplace_back(u, v);
    }
    if (block.empty()) bad_line(static_cast<int>(i + 1), "empty block");
    std::sort(block.begin(), block.end());
    for (size_t j = 1; j < block.size(); ++j)
      if (block[j].first == block[j - 1].first)
        bad_line(static_cast<int>(i + 1), "block meets a group twice");
    g.blocks.push_back(std::move(block));
  }
  return g;
}

std::string write_gdd(const GroupDivisibleDesign& g) {
  std::ostringstream os;
  os << "gdd m=" << g.m << " q=" << g.q << "\n";
  for (const auto& b : g.blocks) {
    os << "block:";
    for (const auto& [u, v] : b) os << " (" << u << "," << v << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace madcc::designs
