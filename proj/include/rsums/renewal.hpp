#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsums/exact.hpp"

namespace rsums {

/// Philox4x32-10 counter-based generator. Each (seed, stream) pair yields an
/// independent substream, so per-path draws are reproducible bit-for-bit
/// regardless of evaluation order.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

private:
    void refill();
    std::uint32_t key0_, key1_;
    std::uint32_t ctr0_ = 0, ctr1_ = 0;  // 64-bit block counter
    std::uint32_t ctr2_, ctr3_;          // stream id, fixed per path
    std::uint64_t buf_[2];
    int avail_ = 0;
};

enum class LawKind { uniform, bernoulli, beta_mixed_bernoulli };

/// Tagged description of an interarrival law: a base law plus a number of
/// unit shifts (each shift adds +1 to every draw), and an optional delay
/// distribution for S_0.
struct InterarrivalSpec {
    LawKind law = LawKind::uniform;
    double a = 0.0;     // uniform lower bound / beta a
    double b = 1.0;     // uniform upper bound / beta b
    double p = 0.5;     // bernoulli success probability
    unsigned shift = 0;

    bool has_delay = false;
    unsigned delay_uniform_count = 0;  // delay = sum of j standard uniforms

    static InterarrivalSpec uniform(double a, double b);
    static InterarrivalSpec bernoulli(double p);
    static InterarrivalSpec beta_mixed_bernoulli(double a, double b);
    /// The same law shifted by +1 (X + 1).
    InterarrivalSpec shifted_plus_one() const;
    InterarrivalSpec with_delay_sum_of_uniforms(unsigned j) const;

    double mean() const;
    /// True when the law is supported on the integers with span 1
    /// (bernoulli-type laws, including their unit shifts and beta mixtures).
    bool is_arithmetic() const;
    std::string name() const;
};

/// Monte Carlo estimate of a renewal measure over the interval (x, x+delta].
struct RenewalEstimate {
    double mean_count = 0.0;
    double std_error = 0.0;
    std::uint64_t paths = 0;
    double x = 0.0;
    double delta = 0.0;
};

/// Blackwell limit delta/mu. Arithmetic laws accept only delta equal to the
/// span (1); non-arithmetic laws accept any positive delta.
double theoretical_blackwell_limit(const InterarrivalSpec& spec, double delta);

inline constexpr std::uint64_t kMaxDrawsPerPath = 1000000000ULL;

/// Expected number of partial sums S_n (n >= 0, including the delayed start)
/// landing in (x, x+delta], estimated over `paths` independent walks. A walk
/// stops as soon as S_n > x+delta; the per-path draw budget guards
/// degenerate parameters (an exhausted budget raises std::runtime_error).
/// Bitwise deterministic in (spec, x, delta, paths, seed).
RenewalEstimate simulate_count(const InterarrivalSpec& spec, double x, double delta,
                               std::uint64_t paths, std::uint64_t seed,
                               std::uint64_t max_draws_per_path = kMaxDrawsPerPath);

/// Contrast-weighted variant: accumulates c[n mod m] per arrival n in the
/// interval, for a contrast vector c with exact zero sum.
RenewalEstimate simulate_contrast_sum(const InterarrivalSpec& spec,
                                      const std::vector<ExactRational>& contrast, double x,
                                      double delta, std::uint64_t paths, std::uint64_t seed,
                                      std::uint64_t max_draws_per_path = kMaxDrawsPerPath);

}  // namespace rsums
