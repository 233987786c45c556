#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "twobridge/distributions.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

/// SplitMix64 as a counter-based generator: output k of stream `key` is
/// mix64(key + (k + 1) * 0x9E3779B97F4A7C15).
class SplitMixStream {
 public:
  SplitMixStream(std::uint64_t seed, std::uint64_t worker);

  std::uint64_t at(std::uint64_t counter) const noexcept;
  std::uint64_t next() noexcept { return at(counter_++); }
  std::uint64_t key() const noexcept { return key_; }

  static std::uint64_t mix64(std::uint64_t z) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform word of length n drawn from the stream, 64 bits per draw, least
/// significant bit first.
Word draw_word(SplitMixStream& stream, std::size_t n);

/// Distribution over crossing numbers; key 0 is the unknot.
using CrossingDistribution = std::map<std::size_t, double>;

struct SampleReport {
  std::size_t n = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::map<std::size_t, std::uint64_t> histogram;
  CrossingDistribution empirical;
  std::optional<double> tv_distance_to_exact;
};

/// Worker w takes the contiguous block [w*count/W, (w+1)*count/W) of sample
/// indices and draws them from SplitMixStream(seed, w). Results depend only on
/// (n, count, seed, workers). tv_distance_to_exact is filled when
/// compare_exact is set.
SampleReport sample_pmf(std::size_t n, std::uint64_t count, std::uint64_t seed, std::size_t workers = 1,
                        bool compare_exact = true);

/// (1/2) sum |p - q| over the union of supports.
double tv_distance(const CrossingDistribution& p, const CrossingDistribution& q);

CrossingDistribution to_distribution(const CrossingPmf& pmf);

}  // namespace twobridge
