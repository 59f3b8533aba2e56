#pragma once

#include <cstdint>
#include <random>

namespace tracedist {

// Reproducible random stream: identical (seed, stream_id) pairs replay the
// identical draw sequence, independent of how many streams run concurrently.
// Parallel code derives one stream per task from a master seed and the task
// index, never sharing streams across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 significant bits.
  double uniform();
  // Standard normal via Box-Muller (second value cached).
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tracedist
