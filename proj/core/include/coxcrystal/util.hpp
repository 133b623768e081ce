#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coxcrystal {

// Error taxonomy, mirrored by the CLI exit codes: IoError -> 1,
// ParseError -> 2, DomainError -> 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position(0) {}
  std::size_t position;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultSeed = 0xC0C5E7E5ull;

// splitmix64: tiny, portable, deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

}  // namespace coxcrystal
