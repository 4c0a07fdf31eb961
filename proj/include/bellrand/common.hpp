#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bellrand {

// Absolute tolerance for probability-level checks (positivity,
// normalization, no-signalling).
inline constexpr double kProbTol = 1e-9;

// Tolerance for LP feasibility over vertex weights.
inline constexpr double kLpTol = 1e-7;

// Input violates a structural invariant (normalization, no-signalling,
// malformed file content, non-unitary matrix, ...).
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parameter outside an operation's domain (e.g. alpha < 1, theta = 0).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Parameters admit no quantum violation above the local bound
// (alpha * beta >= 2 in the I_alpha^beta family).
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// x rendered with 9 significant digits, locale-independent.
std::string format9(double x);

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// distributions so that streams are identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (two fresh uniforms per call).
    double gaussian();

  private:
    std::uint64_t state_;
};

// Distinct deterministic stream per (seed, index) pair.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

}  // namespace bellrand
