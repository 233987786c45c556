#include "twobridge/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "twobridge/errors.hpp"

namespace twobridge {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t SplitMixStream::mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMixStream::SplitMixStream(std::uint64_t seed, std::uint64_t worker)
    : key_(mix64(seed ^ mix64(worker + 1))) {}

std::uint64_t SplitMixStream::at(std::uint64_t counter) const noexcept {
  return mix64(key_ + (counter + 1) * kGolden);
}

Word draw_word(SplitMixStream& stream, std::size_t n) {
  Word w;
  std::uint64_t chunk = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) chunk = stream.next();
    w.push_back(static_cast<int>((chunk >> (i % 64)) & 1));
  }
  return w;
}

SampleReport sample_pmf(std::size_t n, std::uint64_t count, std::uint64_t seed, std::size_t workers,
                        bool compare_exact) {
  require_billiard_length(n);
  if (workers == 0) throw InvalidInput("workers must be positive");

  SampleReport report;
  report.n = n;
  report.sample_count = count;
  report.seed = seed;
  report.workers = workers;

  std::vector<std::map<std::size_t, std::uint64_t>> partial(workers);
  auto run = [&](std::size_t worker) {
    const std::uint64_t begin = count * worker / workers;
    const std::uint64_t end = count * (worker + 1) / workers;
    SplitMixStream stream(seed, worker);
    auto& hist = partial[worker];
    for (std::uint64_t k = begin; k < end; ++k) ++hist[crossing_number(draw_word(stream, n))];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& hist : partial) {
    for (auto [c, k] : hist) report.histogram[c] += k;
  }
  if (count > 0) {
    for (auto [c, k] : report.histogram) {
      report.empirical[c] = static_cast<double>(k) / static_cast<double>(count);
    }
  }
  if (compare_exact && count > 0) {
    report.tv_distance_to_exact = tv_distance(report.empirical, to_distribution(crossing_pmf(n)));
  }
  return report;
}

double tv_distance(const CrossingDistribution& p, const CrossingDistribution& q) {
  double sum = 0.0;
  for (const auto& [c, mass] : p) {
    const auto it = q.find(c);
    sum += std::abs(mass - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [c, mass] : q) {
    if (!p.contains(c)) sum += std::abs(mass);
  }
  return 0.5 * sum;
}

CrossingDistribution to_distribution(const CrossingPmf& pmf) {
  CrossingDistribution d;
  d[0] = pmf.unknot.to_double();
  for (const auto& [c, mass] : pmf.masses) d[c] = mass.to_double();
  return d;
}

}  // namespace twobridge
