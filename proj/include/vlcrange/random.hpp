#pragma once

#include <array>
#include <cstdint>

namespace vlcrange {

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3", SC'11). Output is a pure function of
/// (counter, key), so any draw can be computed without generating the ones
/// before it.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key) noexcept;
};

/// Random stream tags. Distinct consumers draw from disjoint counter spaces.
enum class StreamTag : std::uint32_t {
  FisherScore = 1,
  RangeEstimation = 2,
};

/// Variates for one (seed, tag, index) triple.
///
/// Key = seed split into two 32-bit words. Counter = (index low word,
/// index high word, tag, block number). Each block yields two 64-bit words,
/// each mapped to a uniform in (0, 1) by its top 53 bits. Normals use the
/// Box-Muller transform on consecutive uniform pairs.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, StreamTag tag, std::uint64_t index) noexcept;

  /// Uniform on the open interval (0, 1).
  double uniform() noexcept;
  /// Standard normal.
  double normal() noexcept;

 private:
  void refill() noexcept;

  Philox4x32::Key key_;
  Philox4x32::Counter counter_;
  std::array<std::uint64_t, 2> words_{};
  int used_ = 2;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace vlcrange
