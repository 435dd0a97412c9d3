#include "madcc/sim.hpp"

#include <algorithm>
#include <random>

#include "madcc/errors.hpp"

namespace madcc::sim {

using arrays::CodedArray;
using arrays::kStar;

std::pair<Library, PacketStore> split_library(int N, long long B, long long F, uint64_t seed) {
  if (N < 1 || B < 1 || F < 1) fail(Errc::invalid_parameters, "need N, B, F >= 1");
  Library lib;
  lib.N = N;
  lib.B = B;
  lib.seed = seed;
  std::mt19937_64 rng(seed);
  lib.files.resize(N);
  for (int n = 0; n < N; ++n) {
    auto& f = lib.files[n];
    f.resize(B);
    for (long long i = 0; i < B; ++i) f[i] = static_cast<uint8_t>(rng() & 0xff);
  }
  PacketStore ps;
  ps.N = N;
  ps.F = F;
  ps.packet_bytes = (B + F - 1) / F;
  const long long padded = ps.packet_bytes * F;
  ps.padded.resize(N);
  for (int n = 0; n < N; ++n) {
    ps.padded[n] = lib.files[n];
    ps.padded[n].resize(padded, 0);
  }
  return {std::move(lib), std::move(ps)};
}

std::vector<std::vector<long long>> place_madcc(const schemes::PlacementArray& pl) {
  std::vector<std::vector<long long>> caches(pl.cols);
  for (long long j = 0; j < pl.rows; ++j)
    for (int g = 0; g < pl.cols; ++g)
      if (pl.at(j, g)) caches[g].push_back(j);
  return caches;
}

std::vector<std::vector<long long>> place_d2d(const CodedArray& arr) {
  std::vector<std::vector<long long>> caches(arr.K);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k)
      if (arr.at(j, k) == kStar) caches[k].push_back(j);
  return caches;
}

std::vector<uint8_t> retrieval_stars(const schemes::AccessTopology& topo,
                                     const schemes::PlacementArray& pl,
                                     const CodedArray* expect) {
  const long long K = static_cast<long long>(topo.user_caches.size());
  std::vector<uint8_t> grid(static_cast<size_t>(pl.rows) * K, 0);
  for (long long k = 0; k < K; ++k)
    for (long long j = 0; j < pl.rows; ++j) {
      bool reach = false;
      for (int g : topo.user_caches[k])
        if (pl.at(j, g)) {
          reach = true;
          break;
        }
      grid[j * K + k] = reach ? 1 : 0;
      if (expect) {
        const bool star = expect->at(j, k) == kStar;
        if (star != reach)
          fail(Errc::consistency_violation,
               "delivery star pattern disagrees with placement at row " + std::to_string(j + 1) +
                   ", user " + std::to_string(k + 1));
      }
    }
  return grid;
}

TransmissionLog deliver(const CodedArray& arr, const arrays::SenderMap& phi,
                        const std::vector<int>& demand, const PacketStore& packets) {
  if (static_cast<long long>(demand.size()) != arr.K)
    fail(Errc::invalid_parameters, "demand vector length differs from user count");
  for (int d : demand)
    if (d < 1 || d > packets.N) fail(Errc::invalid_parameters, "demanded file outside library");
  if (packets.F != arr.F) fail(Errc::invalid_parameters, "packet split differs from array rows");
  if (static_cast<int32_t>(phi.to_column.size()) != arr.S)
    fail(Errc::invalid_parameters, "sender map does not cover [S]");

  std::vector<std::vector<std::pair<long long, long long>>> occ(arr.S);
  for (long long j = 0; j < arr.F; ++j)
    for (long long k = 0; k < arr.K; ++k) {
      int32_t c = arr.at(j, k);
      if (c != kStar) occ[c].push_back({j, k});
    }

  TransmissionLog log;
  log.tx.resize(arr.S);
  for (int32_t s = 0; s < arr.S; ++s) {
    Transmission& tx = log.tx[s];
    tx.label = s;
    tx.sender = phi.to_column[s];
    if (tx.sender < 0 || tx.sender >= arr.K)
      fail(Errc::protocol_violation, "sender column out of range for label " + std::to_string(s + 1));
    tx.parts = occ[s];
    tx.payload.assign(packets.packet_bytes, 0);
    for (auto [j, k] : occ[s]) {
      // The sender multicasts this packet, so it must itself retrieve row j.
      if (arr.at(j, tx.sender) != kStar)
        fail(Errc::protocol_violation,
             "sender " + std::to_string(tx.sender + 1) + " cannot retrieve row " +
                 std::to_string(j + 1) + " needed for label " + std::to_string(s + 1));
      const uint8_t* p = packets.packet(demand[k] - 1, j);
      for (long long b = 0; b < packets.packet_bytes; ++b) tx.payload[b] ^= p[b];
    }
  }
  return log;
}

DecodeResult decode_all(const CodedArray& arr, const TransmissionLog& log,
                        const std::vector<int>& demand, const PacketStore& packets,
                        const Library& lib) {
  DecodeResult res;
  res.recovered.resize(arr.K);
  std::vector<uint8_t> assembled(packets.packet_bytes * arr.F);
  for (long long k = 0; k < arr.K; ++k) {
    const int file = demand[k] - 1;
    std::fill(assembled.begin(), assembled.end(), 0);
    for (long long j = 0; j < arr.F; ++j) {
      uint8_t* out = assembled.data() + j * packets.packet_bytes;
      const int32_t cell = arr.at(j, k);
      if (cell == kStar) {
        const uint8_t* p = packets.packet(file, j);
        std::copy(p, p + packets.packet_bytes, out);
        continue;
      }
      // One-shot recovery: exactly the transmission carrying this cell's
      // label, with every other contribution cancelled from retrievable rows.
      const Transmission& tx = log.tx[cell];
      std::copy(tx.payload.begin(), tx.payload.end(), out);
      for (auto [j2, k2] : tx.parts) {
        if (j2 == j && k2 == k) continue;
        if (arr.at(j2, k) != kStar) {
          res.failure = DecodeWitness{static_cast<int>(k), j, cell,
                                      "needed packet row " + std::to_string(j2 + 1) +
                                          " is not retrievable"};
          res.ok = false;
          return res;
        }
        const uint8_t* p = packets.packet(demand[k2] - 1, j2);
        for (long long b = 0; b < packets.packet_bytes; ++b) out[b] ^= p[b];
      }
    }
    res.recovered[k].assign(assembled.begin(), assembled.begin() + lib.B);
    if (res.recovered[k] != lib.files[file]) {
      res.failure = DecodeWitness{static_cast<int>(k), -1, -1, "recovered bytes differ from library"};
      res.ok = false;
      return res;
    }
  }
  res.ok = true;
  return res;
}

ExperimentReport run_experiment(const schemes::SchemeBundle& bundle, const ExperimentConfig& cfg) {
  const CodedArray& arr = bundle.delivery;
  ExperimentReport rep;

  if (bundle.mode == schemes::SchemeMode::madcc)
    retrieval_stars(bundle.topology, bundle.placement, &arr);

  std::mt19937_64 rng(cfg.seed);
  switch (cfg.mode) {
    case DemandMode::fixed:
      rep.demand = cfg.fixed_demand;
      break;
    case DemandMode::worst: {
      if (cfg.N >= arr.K) {
        std::vector<int> all(cfg.N);
        for (int n = 0; n < cfg.N; ++n) all[n] = n + 1;
        std::shuffle(all.begin(), all.end(), rng);
        rep.demand.assign(all.begin(), all.begin() + arr.K);
      } else {
        rep.worst_fallback_random = true;
        std::uniform_int_distribution<int> pick(1, cfg.N);
        for (long long k = 0; k < arr.K; ++k) rep.demand.push_back(pick(rng));
      }
      break;
    }
    case DemandMode::random_uniform: {
      std::uniform_int_distribution<int> pick(1, cfg.N);
      for (long long k = 0; k < arr.K; ++k) rep.demand.push_back(pick(rng));
      break;
    }
  }

  auto [lib, packets] = split_library(cfg.N, cfg.B, arr.F, cfg.seed);
  rep.log = deliver(arr, bundle.phi, rep.demand, packets);
  rep.transmissions = static_cast<long long>(rep.log.tx.size());
  rep.measured_load = Rational(rep.transmissions, arr.F);
  rep.per_user_messages.assign(arr.K, 0);
  for (const auto& tx : rep.log.tx) ++rep.per_user_messages[tx.sender];

  auto decoded = decode_all(arr, rep.log, rep.demand, packets, lib);
  rep.decode_ok = decoded.ok;
  rep.failure = decoded.failure;
  return rep;
}

}  // namespace madcc::sim
