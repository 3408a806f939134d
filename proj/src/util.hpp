#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotkit {

// Error categories, aligned with the CLI exit-code contract:
// 1 = a verification check failed, 2 = bad input, 3 = a budget was exceeded.
enum class ErrorKind { check_failed = 1, invalid_input = 2, budget_exceeded = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::invalid_input, what); }
inline Error budget_error(const std::string& what) { return Error(ErrorKind::budget_exceeded, what); }

// Deterministic 64-bit generator. std::mt19937_64 produces an identical
// stream on every platform; the distribution helpers below avoid
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // splitmix64; tiny, stable, and good enough for test-instance generation.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw input_error("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1u) != 0; }

private:
  std::uint64_t state_;
};

}  // namespace knotkit
