#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace golfstats {

// Reproducible random stream.
//
// Wraps std::mt19937_64, whose output sequence is fully specified by the
// standard, and applies hand-rolled uniform/normal transforms so that a
// given seed yields identical draws on every platform and toolchain. The
// distribution classes from <random> are deliberately not used; their
// algorithms are implementation-defined.
//
// Independent child streams are derived by folding a path of task indices
// into the seed with a splitmix64 finalizer. Parallel work must assign one
// stream per task index (career, event/iteration pair, ...); aggregate
// results are then independent of the thread count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Child stream for a task path, e.g. derive(seed, {career_index}) or
  // derive(seed, {event_index, iteration_index}).
  static RngStream derive(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal draw; Marsaglia polar method with a cached spare.
  double normal();

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  // Uniform integer in [0, n); rejection sampling, no modulo bias.
  std::size_t pick(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer; the building block of stream derivation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace golfstats
