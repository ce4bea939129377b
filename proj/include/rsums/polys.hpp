#pragma once

#include <cstddef>

#include "rsums/exact.hpp"

namespace rsums {

/// Bernstein basis value C(n,k) t^k (1-t)^{n-k}, evaluated exactly.
/// Requires t in [0,1]; returns 0 when k > n.
ExactRational bernstein(std::size_t n, std::size_t k, const ExactRational& t);

/// Polya-Eggenberger (beta-binomial) probability
///   B^n_k(t; h) = C(n,k) prod_{i<k}(t+ih) prod_{i<n-k}(1-t+ih) / prod_{i<n}(1+ih)
/// with h >= 0 and t in (0,1); h = 0 reduces to the plain Bernstein value.
ExactRational h_bernstein(std::size_t n, std::size_t k, const ExactRational& t,
                          const ExactRational& h);

/// j-th raw moment E[p^j] of p ~ Beta(a,b): prod_{i<j} (a+i)/(a+b+i).
ExactRational beta_moment(const ExactRational& a, const ExactRational& b, std::size_t j);

/// Mixed moment E[p^r (1-p)^s] = B(a+r, b+s)/B(a, b) for integer r >= -1,
/// s >= 0 (r = -1 requires a > 1). Exact via Gamma-shift products.
ExactRational beta_mixed_moment(const ExactRational& a, const ExactRational& b,
                                long r, std::size_t s);

/// Uniform B-spline of degree n on knots 0..n+1, i.e. the Irwin-Hall density
/// of a sum of n+1 standard uniforms:
///   N_{0,n}(t) = (1/n!) sum_{j<=floor(t)} (-1)^j C(n+1,j) (t-j)^n on [0, n+1].
ExactRational irwin_hall_density(std::size_t n, const ExactRational& t);

/// P(S_{n+1} <= t) for the same sum: exact antiderivative of the density,
/// so irwin_hall_cdf(n, t) - irwin_hall_cdf(n, t-1) recovers N_{0,n}(t).
ExactRational irwin_hall_cdf(std::size_t n, const ExactRational& t);

}  // namespace rsums
