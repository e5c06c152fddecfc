#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace gtlab {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based random stream keyed by (master_seed, stream_index).
///
/// Output i is mix64(key + (i + 1) * golden), the SplitMix64 sequence started
/// at a key derived from both indices, so a stream depends only on its two
/// indices and draw count. Normal variates use the Marsaglia polar method,
/// whose spare value is part of the stream state.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : master_(master_seed),
        index_(stream_index),
        key_(detail::mix64(master_seed ^ detail::mix64(stream_index + detail::kGolden))) {}

  std::uint64_t master_seed() const noexcept { return master_; }
  std::uint64_t stream_index() const noexcept { return index_; }
  std::uint64_t draws() const noexcept { return counter_; }

  /// Independent child stream; trial i of an experiment uses child(i).
  RngStream child(std::uint64_t i) const {
    return RngStream(master_, detail::mix64(index_ * detail::kGolden + detail::mix64(i + 1)));
  }

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return detail::mix64(key_ + counter_ * detail::kGolden);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (-1, 1).
  double uniform_symmetric() noexcept {
    double u;
    do {
      u = 2.0 * uniform() - 1.0;
    } while (u == -1.0);
    return u;
  }

  /// Fair sign in {-1, +1}.
  int rademacher() noexcept { return (next_u64() >> 63) != 0 ? 1 : -1; }

  /// Standard normal by the Marsaglia polar method.
  double std_normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform_symmetric();
      v = uniform_symmetric();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  friend bool operator==(const RngStream& a, const RngStream& b) {
    return a.key_ == b.key_ && a.counter_ == b.counter_ && a.has_spare_ == b.has_spare_ &&
           (!a.has_spare_ || a.spare_ == b.spare_);
  }

 private:
  std::uint64_t master_;
  std::uint64_t index_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0;
  bool has_spare_ = false;
};

inline constexpr std::uint64_t kDefaultSeed = 20140424ULL;

/// Master seed, overridden by the GTLAB_SEED environment variable when set.
inline std::uint64_t master_seed_from_env(std::uint64_t fallback = kDefaultSeed) {
  if (const char* s = std::getenv("GTLAB_SEED"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != nullptr && *end == '\0') return v;
  }
  return fallback;
}

}  // namespace gtlab
