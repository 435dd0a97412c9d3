#include <fstream>
#include <map>
#include <sstream>

#include "madcc/errors.hpp"
#include "madcc/schemes.hpp"

namespace madcc::schemes {

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) fail(Errc::malformed_input, "cannot open " + p.string() + " for writing");
  os << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) fail(Errc::malformed_input, "cannot open " + p.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Placement arrays reuse the pda layout with '-' for empty cells.
std::string write_placement(const PlacementArray& pl) {
  std::ostringstream os;
  os << "pda F=" << pl.rows << " K=" << pl.cols << "\n";
  for (long long j = 0; j < pl.rows; ++j) {
    for (int g = 0; g < pl.cols; ++g) os << (g ? " " : "") << (pl.at(j, g) ? "*" : "-");
    os << "\n";
  }
  return os.str();
}

PlacementArray parse_placement(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  long long F = 0, K = 0;
  if (sscanf(header.c_str(), "pda F=%lld K=%lld", &F, &K) != 2 || F < 1 || K < 1)
    fail(Errc::malformed_input, "bad placement header");
  PlacementArray pl;
  pl.rows = F;
  pl.cols = static_cast<int>(K);
  pl.star.assign(static_cast<size_t>(F) * K, 0);
  std::string tok;
  for (long long j = 0; j < F; ++j)
    for (long long g = 0; g < K; ++g) {
      if (!(is >> tok)) fail(Errc::malformed_input, "placement array truncated");
      if (tok == "*") pl.star[j * K + g] = 1;
      else if (tok != "-") fail(Errc::malformed_input, "bad placement token '" + tok + "'");
    }
  if (is >> tok) fail(Errc::malformed_input, "trailing content in placement array");
  return pl;
}

std::string write_topology(const AccessTopology& topo) {
  std::ostringstream os;
  for (const auto& caches : topo.user_caches) {
    os << "user:";
    for (int c : caches) os << " " << c + 1;
    os << "\n";
  }
  return os.str();
}

AccessTopology parse_topology(const std::string& text) {
  AccessTopology topo;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != "user:")
      fail(Errc::malformed_input, "topology line " + std::to_string(lineno) + ": expected 'user:'");
    std::vector<int> caches;
    int c;
    while (ls >> c) caches.push_back(c - 1);
    topo.user_caches.push_back(std::move(caches));
  }
  for (const auto& caches : topo.user_caches) {
    if (topo.L == 0) topo.L = static_cast<int>(caches.size());
    else if (topo.L != static_cast<int>(caches.size()))
      fail(Errc::malformed_input, "topology users access differing cache counts");
  }
  return topo;
}

std::string write_metrics(const SchemeBundle& b) {
  std::ostringstream os;
  const auto& m = b.metrics;
  os << "mode=" << (b.mode == SchemeMode::madcc ? "madcc" : "d2d") << "\n";
  os << "K=" << m.K << "\n";
  if (b.mode == SchemeMode::madcc) {
    os << "Gamma=" << m.Gamma << "\n";
    os << "L=" << m.L << "\n";
  }
  os << "F=" << m.F << "\n";
  os << "Z=" << m.Z << "\n";
  if (b.mode == SchemeMode::madcc) os << "Zprime=" << m.Zprime << "\n";
  os << "S=" << m.S << "\n";
  os << "MN=" << m.memory_ratio.str() << "\n";
  os << "R=" << m.load.str() << "\n";
  os << "RperK=" << m.per_user_load.str() << "\n";
  return os.str();
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(Errc::malformed_input, "bad metrics line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

void write_bundle(const std::filesystem::path& dir, const SchemeBundle& bundle) {
  std::filesystem::create_directories(dir);
  write_file(dir / "delivery.pda", arrays::write_pda(bundle.delivery, &bundle.phi));
  write_file(dir / "metrics.txt", write_metrics(bundle));
  if (bundle.mode == SchemeMode::madcc) {
    write_file(dir / "placement.pda", write_placement(bundle.placement));
    write_file(dir / "topology.txt", write_topology(bundle.topology));
  }
}

SchemeBundle read_bundle(const std::filesystem::path& dir) {
  SchemeBundle b;
  auto pda = arrays::parse_pda(read_file(dir / "delivery.pda"));
  b.delivery = std::move(pda.array);
  if (!pda.phi) fail(Errc::malformed_input, "delivery.pda carries no sender map");
  b.phi = std::move(*pda.phi);

  auto kv = parse_kv(read_file(dir / "metrics.txt"));
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) fail(Errc::malformed_input, std::string("metrics.txt missing ") + key);
    return it->second;
  };
  b.mode = need("mode") == "madcc" ? SchemeMode::madcc : SchemeMode::d2d;
  auto& m = b.metrics;
  m.K = std::stoll(need("K"));
  m.F = std::stoll(need("F"));
  m.Z = std::stoll(need("Z"));
  m.S = std::stoll(need("S"));
  m.memory_ratio = Rational::parse(need("MN"));
  m.load = Rational::parse(need("R"));
  m.per_user_load = Rational::parse(need("RperK"));
  if (b.mode == SchemeMode::madcc) {
    m.Gamma = std::stoll(need("Gamma"));
    m.L = std::stoll(need("L"));
    m.Zprime = std::stoll(need("Zprime"));
    b.placement = parse_placement(read_file(dir / "placement.pda"));
    b.topology = parse_topology(read_file(dir / "topology.txt"));
  }
  return b;
}

}  // namespace madcc::schemes
