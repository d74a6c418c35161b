#pragma once

#include <array>
#include <cstdint>

namespace biaslab {

// Philox4x32-10 counter-based generator. Every randomized routine in the
// library takes (seed, stream) explicitly; a fixed pair reproduces the same
// draws on any platform. Parallel work assigns one stream per task index.
struct Philox4x32 {
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);
};

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Unbiased draw from [0, m) by rejection; m >= 1.
  std::uint32_t uniform_below(std::uint32_t m);

  // True with probability threshold / 2^32 (threshold in [0, 2^32]).
  bool bernoulli(std::uint64_t threshold);

  double uniform01();  // 53-bit mantissa in [0, 1)

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;
};

// Integer coin threshold for probability p: round(p * 2^32), clamped so
// p = 0 never fires and p = 1 always does.
std::uint64_t bernoulli_threshold(double p);

}  // namespace biaslab
