#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrcvrp {

enum class ErrorCode {
  kMalformedFile,
  kInconsistentDimension,
  kNegativeDemand,
  kUnsupportedFormat,
  kEmptyRange,
  kIndexOutOfRange,
  kNoCoordinates,
  kTooFewCustomers,
  kTooLarge,
  kInfeasible,
  kEmptyBatch,
  kMissingBks,
  kMissingSignal,
  kNoFeasibleSolution,
  kAllInfeasible,
  kNoAvailableQubits,
  kNoErrorData,
  kInsufficientQubits,
  kEmptyPool,
  kEmptyResults,
  kInvalidConfig,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// TSPLIB nearest-integer rounding.
inline int nint(double x) { return static_cast<int>(std::floor(x + 0.5)); }

// Deterministic splitmix64 generator. Used for every stochastic component so
// that artifacts are reproducible independently of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double next_normal() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent substream seed from a base seed and stream indices.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0) {
  Rng mixer(seed ^ (a * 0xd1342543de82ef95ULL) ^
            (b * 0xaf251af3b0f025b5ULL));
  return mixer.next_u64();
}

}  // namespace lrcvrp
