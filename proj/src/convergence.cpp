#include "rsums/convergence.hpp"

#include <cmath>

#include "rsums/series.hpp"

namespace rsums {

namespace {

const ExactRational kTwo(2L);
const ExactRational kTen(10L);

// Gap with the bound tightened until it sits 10x under |gap| (or under the
// threshold when the gap itself is smaller than what gets reported).
GapRecord certified_gap(std::size_t k, std::size_t digits, const ExactRational& threshold) {
    ExactRational eps = ExactRational::pow10(-static_cast<long>(digits + 10));
    for (;;) {
        SeriesResult r = column_sum(Family::eulerian(), k, eps);
        GapRecord rec;
        rec.k = k;
        rec.gap = r.value - kTwo;
        rec.truncation_bound = r.truncation_bound;
        rec.terms_used = r.terms_used;
        rec.digits = digits;
        ExactRational allowance = rec.gap.abs();
        if (allowance < threshold) allowance = threshold;
        if (rec.truncation_bound * kTen <= allowance) return rec;
        eps = allowance / ExactRational(20L);
    }
}

}  // namespace

std::vector<GapRecord> eulerian_gap_table(std::size_t k_max, std::size_t digits) {
    if (digits < 6) throw std::domain_error("eulerian_gap_table: digits must be >= 6");
    const ExactRational threshold = ExactRational::pow10(-static_cast<long>(digits));
    std::vector<GapRecord> out;
    out.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) out.push_back(certified_gap(k, digits, threshold));
    return out;
}

RateCheckReport rate_check(double alpha, std::size_t k_lo, std::size_t k_hi) {
    if (!(alpha > 0.0)) throw std::domain_error("rate_check: alpha must be > 0");
    RateCheckReport rep;
    rep.alpha = alpha;
    rep.k_lo = k_lo;
    rep.k_hi = k_hi;
    const std::size_t lo = std::max(k_lo, kRateCheckBurnIn);
    if (k_hi < lo + 1) {
        rep.insufficient_range = true;
        return rep;
    }

    // |gap| certified to a relative 0.1%, enough to settle every comparison
    // (adjacent values differ by whole orders of magnitude).
    std::vector<double> weighted;  // |gap(k)| * k^alpha, after burn-in
    std::vector<double> log_absgap;
    weighted.reserve(k_hi - lo + 1);
    for (std::size_t k = lo; k <= k_hi; ++k) {
        ExactRational eps = ExactRational::pow10(-static_cast<long>(3 * k + 20));
        SeriesResult r = column_sum(Family::eulerian(), k, eps);
        ExactRational gap = (r.value - kTwo).abs();
        while (!gap.is_zero() && r.truncation_bound * ExactRational(1000L) > gap) {
            eps = gap / ExactRational(2000L);
            r = column_sum(Family::eulerian(), k, eps);
            gap = (r.value - kTwo).abs();
        }
        const double g = gap.to_double();
        weighted.push_back(g * std::pow(static_cast<double>(k), alpha));
        log_absgap.push_back(std::log(g));
    }

    rep.pointwise_nonincreasing = true;
    for (std::size_t i = 1; i < weighted.size(); ++i) {
        if (weighted[i] > weighted[i - 1]) {
            rep.pointwise_nonincreasing = false;
            rep.violations.push_back(lo + i);
        }
    }
    // envelope(k) = max_{k' >= k} weighted(k') is non-increasing by
    // construction; the o(k^-alpha) content is that it actually decays
    // across the window (10x is the confirmation threshold).
    std::vector<double> env(weighted.size());
    double m = 0.0;
    for (std::size_t i = weighted.size(); i-- > 0;) {
        m = std::max(m, weighted[i]);
        env[i] = m;
    }
    rep.envelope_nonincreasing = env.front() > 0.0 && env.back() <= env.front() * 0.1;

    // least-squares slope of log|gap| against log k
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t n = weighted.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(static_cast<double>(lo + i));
        sx += lx;
        sy += log_absgap[i];
        sxx += lx * lx;
        sxy += lx * log_absgap[i];
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    rep.fitted_exponent = denom != 0.0 ? -((static_cast<double>(n) * sxy - sx * sy) / denom) : 0.0;
    return rep;
}

}  // namespace rsums
