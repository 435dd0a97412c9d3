#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "madcc/schemes.hpp"

namespace madcc::sim {

/// N files of B pseudo-random bytes, reproducible from the seed.
struct Library {
  int N = 0;
  long long B = 0;
  uint64_t seed = 0;
  std::vector<std::vector<uint8_t>> files;
};

/// Files zero-padded to a multiple of F and cut into F equal packets.
struct PacketStore {
  int N = 0;
  long long F = 0;
  long long packet_bytes = 0;
  std::vector<std::vector<uint8_t>> padded;
  const uint8_t* packet(int n, long long f) const { return padded[n].data() + f * packet_bytes; }
};

std::pair<Library, PacketStore> split_library(int N, long long B, long long F, uint64_t seed);

/// Packet rows stored by each cache column of a multiaccess placement.
std::vector<std::vector<long long>> place_madcc(const schemes::PlacementArray& pl);
/// Packet rows cached by each user of a dedicated-cache array.
std::vector<std::vector<long long>> place_d2d(const arrays::CodedArray& arr);

/// F x K retrievability grid recomputed from placement and topology. Throws
/// consistency-violation naming the first cell that disagrees with the
/// delivery array when `expect` is given.
std::vector<uint8_t> retrieval_stars(const schemes::AccessTopology& topo,
                                     const schemes::PlacementArray& pl,
                                     const arrays::CodedArray* expect = nullptr);

struct Transmission {
  int32_t label = 0;
  int32_t sender = 0;                                   // 0-based user column
  std::vector<uint8_t> payload;                         // packet_bytes long
  std::vector<std::pair<long long, long long>> parts;   // contributing (row, user) cells
};

struct TransmissionLog {
  std::vector<Transmission> tx;  // in label order
};

/// One multicast per label: the sender XORs the demanded packets of every
/// cell carrying that label. Senders must be able to retrieve every packet
/// they combine; a gap indicates a broken sender condition and raises
/// protocol-violation.
TransmissionLog deliver(const arrays::CodedArray& arr, const arrays::SenderMap& phi,
                        const std::vector<int>& demand, const PacketStore& packets);

struct DecodeWitness {
  int user = 0;
  long long row = 0;
  int32_t label = 0;
  std::string what;
};

struct DecodeResult {
  bool ok = false;
  std::optional<DecodeWitness> failure;
  std::vector<std::vector<uint8_t>> recovered;  // per user, unpadded demanded file
};

/// Each user rebuilds its demanded file: starred rows come from its caches,
/// every other row from exactly one transmission with the user's retrievable
/// packets XORed back out. Byte-compares against the library.
DecodeResult decode_all(const arrays::CodedArray& arr, const TransmissionLog& log,
                        const std::vector<int>& demand, const PacketStore& packets,
                        const Library& lib);

enum class DemandMode { worst, random_uniform, fixed };

struct ExperimentConfig {
  int N = 0;
  long long B = 0;
  DemandMode mode = DemandMode::worst;
  std::vector<int> fixed_demand;
  uint64_t seed = 0;
};

struct ExperimentReport {
  std::vector<int> demand;
  long long transmissions = 0;
  Rational measured_load;
  bool decode_ok = false;
  std::optional<DecodeWitness> failure;
  std::vector<long long> per_user_messages;
  bool worst_fallback_random = false;  // worst mode with N < K
  TransmissionLog log;
};

/// Full placement / delivery / decode cycle on a bundle. Deterministic for a
/// given seed. Multiaccess bundles are first cross-checked against their
/// placement and topology.
ExperimentReport run_experiment(const schemes::SchemeBundle& bundle, const ExperimentConfig& cfg);

}  // namespace madcc::sim
