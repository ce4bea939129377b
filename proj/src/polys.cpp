#include "rsums/polys.hpp"

#include <stdexcept>

#include "rsums/triangles.hpp"

namespace rsums {

namespace {
const ExactRational kZero(0L);
const ExactRational kOne(1L);
}  // namespace

ExactRational bernstein(std::size_t n, std::size_t k, const ExactRational& t) {
    if (t < kZero || t > kOne) throw std::domain_error("bernstein: t must lie in [0,1]");
    if (k > n) return kZero;
    ExactRational r(ExactInteger::binomial(n, k));
    r *= ExactRational::pow(t, k);
    r *= ExactRational::pow(kOne - t, n - k);
    return r;
}

ExactRational h_bernstein(std::size_t n, std::size_t k, const ExactRational& t,
                          const ExactRational& h) {
    if (h.sign() < 0) throw std::domain_error("h_bernstein: h must be >= 0");
    if (h.is_zero()) return bernstein(n, k, t);
    if (t <= kZero || t >= kOne) throw std::domain_error("h_bernstein: t must lie in (0,1)");
    if (k > n) return kZero;
    ExactRational num(ExactInteger::binomial(n, k));
    ExactRational x = t;
    for (std::size_t i = 0; i < k; ++i, x += h) num *= x;
    x = kOne - t;
    for (std::size_t i = 0; i < n - k; ++i, x += h) num *= x;
    ExactRational den = kOne;
    x = kOne;
    for (std::size_t i = 0; i < n; ++i, x += h) den *= x;
    return num / den;
}

ExactRational beta_moment(const ExactRational& a, const ExactRational& b, std::size_t j) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::domain_error("beta_moment: requires a > 0 and b > 0");
    ExactRational v = kOne;
    ExactRational num = a, den = a + b;
    for (std::size_t i = 0; i < j; ++i, num += kOne, den += kOne) v *= num / den;
    return v;
}

ExactRational beta_mixed_moment(const ExactRational& a, const ExactRational& b,
                                long r, std::size_t s) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::domain_error("beta_mixed_moment: requires a > 0 and b > 0");
    if (r < -1) throw std::domain_error("beta_mixed_moment: r must be >= -1");
    ExactRational v = kOne;
    if (r >= 0) {
        ExactRational x = a;
        for (long i = 0; i < r; ++i, x += kOne) v *= x;
    } else {
        if (a <= kOne) throw std::domain_error("beta_mixed_moment: r = -1 needs a > 1");
        v /= a - kOne;
    }
    ExactRational x = b;
    for (std::size_t i = 0; i < s; ++i, x += kOne) v *= x;
    const long rs = r + static_cast<long>(s);
    if (rs >= 0) {
        x = a + b;
        for (long i = 0; i < rs; ++i, x += kOne) v /= x;
    } else {
        v *= a + b - kOne;
    }
    return v;
}

ExactRational irwin_hall_density(std::size_t n, const ExactRational& t) {
    if (t < kZero || t > ExactRational(static_cast<long>(n) + 1)) return kZero;
    if (n == 0) return kOne;  // characteristic function of the closed [0,1]
    const long ft = t.floor_long();
    ExactRational s = kZero;
    for (long j = 0; j <= ft && j <= static_cast<long>(n) + 1; ++j) {
        ExactRational term(ExactInteger::binomial(n + 1, static_cast<std::size_t>(j)));
        term *= ExactRational::pow(t - ExactRational(j), n);
        if (j & 1)
            s -= term;
        else
            s += term;
    }
    return s / ExactRational(ExactInteger::factorial(n));
}

ExactRational irwin_hall_cdf(std::size_t n, const ExactRational& t) {
    if (t.sign() <= 0) return kZero;
    if (t >= ExactRational(static_cast<long>(n) + 1)) return kOne;
    const long ft = t.floor_long();
    ExactRational s = kZero;
    for (long j = 0; j <= ft; ++j) {
        ExactRational term(ExactInteger::binomial(n + 1, static_cast<std::size_t>(j)));
        term *= ExactRational::pow(t - ExactRational(j), n + 1);
        if (j & 1)
            s -= term;
        else
            s += term;
    }
    return s / ExactRational(ExactInteger::factorial(n + 1));
}

}  // namespace rsums
