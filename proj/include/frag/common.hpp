#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frag {

using Token = int32_t;
using Pos = int32_t;  // token position; models count from 1, RoPE accepts any >= 0

// Precondition / invariant violations surface as ContractError.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Store-level failures (duplicate record, missing id, capacity exhausted).
class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File-format failures carry a distinct kind so callers can tell a bad
// magic from a short read.
class FormatError : public std::runtime_error {
 public:
  enum class Kind { BadMagic, BadVersion, Truncated, Malformed, Io };
  FormatError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Deterministic 64-bit generator (splitmix64) with a Box-Muller gaussian.
// Self-contained on purpose: std distributions are not pinned across
// standard libraries, and every artifact output must replay bit-identically.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }
  float next_float() { return static_cast<float>(next_double()); }

  // Uniform in [0, n) without modulo bias.
  uint64_t below(uint64_t n) {
    if (n == 0) throw ContractError("Rng::below: n must be positive");
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Inclusive integer range.
  int64_t range(int64_t lo, int64_t hi) {
    if (hi < lo) throw ContractError("Rng::range: hi < lo");
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(6.283185307179586477 * u2);
    has_spare_ = true;
    return mag * std::cos(6.283185307179586477 * u2);
  }

  float normal_f(float sigma) { return static_cast<float>(normal()) * sigma; }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// 128-bit content hash; used for chunk ids and prefix keys.
struct Hash128 {
  std::array<uint8_t, 16> bytes{};

  auto operator<=>(const Hash128&) const = default;

  std::string hex() const;
  static Hash128 from_hex(const std::string& s);
  bool is_zero() const {
    for (uint8_t b : bytes)
      if (b != 0) return false;
    return true;
  }
};

using ChunkId = Hash128;
using PrefixKey = Hash128;

Hash128 hash_bytes(std::span<const uint8_t> data, uint64_t salt = 0);
Hash128 hash_string(const std::string& s, uint64_t salt = 0);
Hash128 hash_tokens(std::span<const Token> tokens, uint64_t salt = 0);
// Order-sensitive rolling combine: key' = H(key || next).
Hash128 hash_combine(const Hash128& key, const Hash128& next);

struct Hash128Hasher {
  size_t operator()(const Hash128& h) const {
    uint64_t v;
    std::memcpy(&v, h.bytes.data(), sizeof(v));
    return static_cast<size_t>(v);
  }
};

// FNV-1a over raw bytes; weight checksums and byte-equality audits.
uint64_t fnv1a(std::span<const uint8_t> data);

inline std::span<const uint8_t> as_bytes_span(const std::vector<float>& v) {
  return {reinterpret_cast<const uint8_t*>(v.data()), v.size() * sizeof(float)};
}

// Fixed float formatting for CSV/JSON emitters (replay-stable).
std::string format_float(double v);

std::vector<Token> tokenize_bytes(const std::string& text);
std::string detokenize_bytes(std::span<const Token> tokens);

}  // namespace frag
