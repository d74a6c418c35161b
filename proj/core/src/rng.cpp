#include "biaslab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace biaslab {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> round_once(
    const std::array<std::uint32_t, 4>& c,
    const std::array<std::uint32_t, 2>& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    ctr = round_once(ctr, key);
  }
  return ctr;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void Rng::refill() {
  std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_index_),
      static_cast<std::uint32_t>(block_index_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32)};
  buffer_ = Philox4x32::block(ctr, key_);
  ++block_index_;
  buffered_ = 4;
}

std::uint32_t Rng::next_u32() {
  if (buffered_ == 0) refill();
  return buffer_[4 - buffered_--];
}

std::uint64_t Rng::next_u64() {
  std::uint64_t lo = next_u32();
  std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

std::uint32_t Rng::uniform_below(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("uniform_below: m must be >= 1");
  // reject the tail so every residue is equally likely
  std::uint32_t limit = static_cast<std::uint32_t>(
      (std::uint64_t{1} << 32) - ((std::uint64_t{1} << 32) % m));
  for (;;) {
    std::uint32_t v = next_u32();
    if (limit == 0 || v < limit) return v % m;
  }
}

bool Rng::bernoulli(std::uint64_t threshold) {
  return static_cast<std::uint64_t>(next_u32()) < threshold;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t bernoulli_threshold(double p) {
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("probability must lie in [0,1]");
  long double scaled = static_cast<long double>(p) * 4294967296.0L;
  auto t = static_cast<std::uint64_t>(std::llroundl(scaled));
  if (t > (std::uint64_t{1} << 32)) t = std::uint64_t{1} << 32;
  return t;
}

}  // namespace biaslab
