#pragma once

#include <cmath>
#include <cstdint>

namespace fracpp {

/// Counter-based 64-bit random stream: the SplitMix64 output function
/// applied to a Weyl sequence keyed by (seed, stream_id).
///
/// Identical (seed, stream_id) reproduce identical draws bit for bit, and
/// distinct stream_ids give statistically independent streams, so Monte
/// Carlo runs can hand one substream to each replication and stay
/// reproducible under any parallel schedule.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_(stream_id), base_(mix(mix(seed + kGamma) ^ mix(stream_id + kLeaf))), ctr_(0) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  /// Derived stream for replication i; deterministic in (seed, stream_id, i).
  RngStream substream(std::uint64_t i) const {
    return RngStream(seed_, mix(base_ + (i + 1) * kLeaf));
  }

  std::uint64_t next_u64() { return mix(base_ + (++ctr_) * kGamma); }

  /// Uniform draw strictly inside (0,1).
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exp(1) draw, strictly positive and finite.
  double next_exponential() { return -std::log(next_uniform()); }

  /// Poisson draw; product method for small means, PTRS rejection otherwise.
  std::int64_t next_poisson(double mean);

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kLeaf = 0xda942042e4dd58b5ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t base_;
  std::uint64_t ctr_;
};

}  // namespace fracpp
