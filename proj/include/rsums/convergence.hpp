#pragma once

#include <cstddef>
#include <vector>

#include "rsums/exact.hpp"

namespace rsums {

/// One row of the Eulerian column-sum gap table: the exact partial-sum value
/// of sum_n <n,k>/n! - 2 with its certified truncation bound. The bound is
/// kept at least 10x below |gap| (or below the 10^-digits reporting
/// threshold), so every printed digit is trustworthy.
struct GapRecord {
    std::size_t k = 0;
    ExactRational gap;
    ExactRational truncation_bound;
    std::size_t terms_used = 0;
    std::size_t digits = 0;
};

std::vector<GapRecord> eulerian_gap_table(std::size_t k_max, std::size_t digits);

inline constexpr std::size_t kRateCheckBurnIn = 5;

/// Empirical decay report for |gap(k)| k^alpha over k in [k_lo, k_hi].
/// `pointwise_nonincreasing` applies the literal step-by-step test past the
/// burn-in; the gap oscillates through zero, so dips make this false even
/// though the decay is super-polynomial — `envelope_nonincreasing` checks
/// the right-running maximum instead, which is the o(k^-alpha) content.
/// Violations are reported, never thrown.
struct RateCheckReport {
    double alpha = 0.0;
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;
    bool insufficient_range = false;
    bool pointwise_nonincreasing = false;
    bool envelope_nonincreasing = false;
    std::vector<std::size_t> violations;  // k whose step up broke the pointwise test
    double fitted_exponent = 0.0;         // least-squares slope of log|gap| vs log k
};

RateCheckReport rate_check(double alpha, std::size_t k_lo, std::size_t k_hi);

}  // namespace rsums
