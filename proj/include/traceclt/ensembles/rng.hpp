#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace traceclt::ensembles {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based stream keyed by (seed, stream id). The stream id occupies the
/// high half of the counter and the block index the low half, so every Haar
/// sample can own an independent, reproducible sequence regardless of which
/// worker thread draws it.
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform on (0, 1], 53-bit resolution.
  double uniform_open_zero();
  /// Standard normal by the Box-Muller transform; values come in cached pairs.
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;  // 64-bit words left in buffer_
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace traceclt::ensembles
