#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace pflc::random {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a over bytes, used to fold string components into a key.
constexpr std::uint64_t hash_bytes(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based stream: the n-th draw of a key is a pure function of
/// (key, n), so any unit's randomness can be replayed without touching the
/// draws of any other unit.
class KeyedStream {
 public:
  constexpr explicit KeyedStream(std::uint64_t key) noexcept : key_(key) {}

  /// Folds components into a key in order; (1, 2) and (2, 1) differ.
  static constexpr KeyedStream of(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t k = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t p : parts) k = mix64(k ^ mix64(p));
    return KeyedStream(k);
  }

  constexpr std::uint64_t key() const noexcept { return key_; }

  constexpr std::uint64_t next_u64() noexcept { return mix64(key_ ^ mix64(++counter_)); }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(double p) noexcept { return next_unit() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Bit pattern of a double, so real-valued key components hash exactly.
/// +0.0 and -0.0 map to the same key.
constexpr std::uint64_t key_of(double value) noexcept {
  return std::bit_cast<std::uint64_t>(value == 0.0 ? 0.0 : value);
}

}  // namespace pflc::random
