#include "rsums/series.hpp"

#include <cmath>

#include "rsums/polys.hpp"
#include "rsums/triangles.hpp"

namespace rsums {

namespace {

const ExactRational kZero(0L);
const ExactRational kOne(1L);
const ExactRational kTwo(2L);
const ExactRational kHalf(1L, 2UL);

[[noreturn]] void throw_tolerance(const std::string& where, const ExactRational& bound,
                                  bool known, std::size_t terms) {
    std::string msg = where + ": tolerance not reached after " + std::to_string(terms) +
                      " terms";
    if (known) msg += " (best bound " + bound.to_sci_string(3) + ")";
    throw ToleranceError(msg, bound, known, terms);
}

// ln of a positive rational, robust to magnitudes far beyond double range.
double approx_ln(const ExactRational& v) {
    constexpr double kLn2 = 0.6931471805599453;
    long nexp = 0, dexp = 0;
    const double nman = mpz_get_d_2exp(&nexp, mpq_numref(v.raw()));
    const double dman = mpz_get_d_2exp(&dexp, mpq_denref(v.raw()));
    return std::log(nman / dman) + static_cast<double>(nexp - dexp) * kLn2;
}

// The h-Bernstein column terms decay only polynomially (n^{-a}), so a tight
// eps can sit far beyond any realistic term budget. At power-of-two
// milestones, project the terms needed from the measured decay slope of the
// proven bound and fail early when the budget is provably insufficient; the
// carried bound is still the exact bound at the point of bailing.
struct DivergenceGuard {
    std::size_t next_check = 512;
    double last_ln_bound = 0.0;
    double last_ln_terms = 0.0;
    bool have_last = false;

    bool hopeless(std::size_t terms, const ExactRational& bound, const ExactRational& eps,
                  std::size_t max_terms) {
        if (terms < next_check) return false;
        next_check *= 2;
        const double lb = approx_ln(bound);
        const double lt = std::log(static_cast<double>(terms));
        bool bail = false;
        if (have_last) {
            const double slope = (lb - last_ln_bound) / (lt - last_ln_terms);
            if (slope >= -1e-9) {
                bail = true;
            } else {
                const double needed = lt + (approx_ln(eps) - lb) / slope;
                bail = needed > std::log(static_cast<double>(max_terms)) + std::log(4.0);
            }
        }
        last_ln_bound = lb;
        last_ln_terms = lt;
        have_last = true;
        return bail;
    }
};

void require_probability_open(const ExactRational& t, const char* what) {
    if (t <= kZero || t >= kOne)
        throw std::domain_error(std::string(what) + ": t must lie strictly inside (0,1)");
}

// ---------------------------------------------------------------------------
// Bernoulli-type column terms C(n,k) t^k (1-t)^{n-k}, nonzero from n = k.
// term ratio r(n) = term_{n+1}/term_n = (n+1)(1-t) / (n+1-k), decreasing in n
// and below one once (n+1) t > k; the geometric tail bound follows.
// ---------------------------------------------------------------------------
struct BernoulliColumn {
    std::size_t k;
    ExactRational q;  // 1 - t
    std::size_t n;
    ExactRational term;

    BernoulliColumn(std::size_t k_, const ExactRational& t)
        : k(k_), q(kOne - t), n(k_), term(ExactRational::pow(t, k_)) {}

    ExactRational ratio(std::size_t m) const {
        return ExactRational(static_cast<long>(m + 1), static_cast<unsigned long>(m + 1 - k)) * q;
    }
    void advance() {
        term *= ratio(n);
        ++n;
    }
};

// ---------------------------------------------------------------------------
// Eulerian column terms <n,k>/n! from n = 0, with the simplex tail bound
//   sum_{n>N} <n,k>/n! <= (k+1)^{N+1}/(N+1)! * 1/(1 - (k+1)/(N+2))
// valid once N+2 > k+1 (each term is at most P(S_n <= k+1) <= (k+1)^n/n!).
// ---------------------------------------------------------------------------
struct EulerianColumn {
    std::size_t k;
    std::size_t n = 0;
    ExactRational inv_fact{1L};            // 1/n!
    ExactRational simplex_pow{1L};         // (k+1)^{n+1}/(n+1)! after update
    const Triangle& tri = shared_eulerian_triangle();

    explicit EulerianColumn(std::size_t k_) : k(k_) {
        simplex_pow = ExactRational(static_cast<long>(k + 1), 1UL);  // (k+1)^1/1!
    }

    ExactRational term() const { return ExactRational(tri.entry(n, k)) * inv_fact; }

    // Tail bound for the sum truncated after the current n (may be invalid
    // early on; returns false then).
    bool tail_bound(ExactRational& out) const {
        if (n + 2 <= k + 1) return false;
        ExactRational r(static_cast<long>(k + 1), static_cast<unsigned long>(n + 2));
        out = simplex_pow / (kOne - r);
        return true;
    }
    void advance() {
        inv_fact /= ExactRational(static_cast<long>(n + 1));
        simplex_pow *= ExactRational(static_cast<long>(k + 1), static_cast<unsigned long>(n + 2));
        ++n;
    }
};

// ---------------------------------------------------------------------------
// h-Bernstein column terms B^n_k(t;h) from n = k, with the exact tail
//   sum_{n>N} B^n_k(t;h) = sum_{i=0}^{k} C(N+1,i) E[p^{i-1} (1-p)^{N+1-i}]
// (negative-binomial tail mixed over p ~ Beta(a,b)); needs a = t/h > 1.
// The k+1 components update in O(1) rational operations per step.
// ---------------------------------------------------------------------------
struct HBernsteinColumn {
    std::size_t k;
    ExactRational t, h, a, b;
    std::size_t n;
    ExactRational term;
    std::vector<ExactRational> tail_comp;  // component i at the current n

    HBernsteinColumn(std::size_t k_, const ExactRational& t_, const ExactRational& h_)
        : k(k_), t(t_), h(h_), a(t_ / h_), b((kOne - t_) / h_), n(k_) {
        term = kOne;
        ExactRational x = t;
        ExactRational y = kOne;
        for (std::size_t i = 0; i < k; ++i, x += h, y += h) term *= x / y;
        tail_comp.reserve(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            ExactRational c(ExactInteger::binomial(k + 1, i));
            c *= beta_mixed_moment(a, b, static_cast<long>(i) - 1, k + 1 - i);
            tail_comp.push_back(std::move(c));
        }
    }

    ExactRational ratio(std::size_t m) const {
        // term_{m+1}/term_m = (m+1)/(m+1-k) * (1-t+(m-k)h)/(1+mh)
        ExactRational num(static_cast<long>(m + 1));
        num *= kOne - t + ExactRational(static_cast<long>(m - k)) * h;
        ExactRational den(static_cast<long>(m + 1 - k));
        den *= kOne + ExactRational(static_cast<long>(m)) * h;
        return num / den;
    }

    ExactRational tail_bound() const {
        ExactRational s = kZero;
        for (const auto& c : tail_comp) s += c;
        return s;
    }

    void advance() {
        term *= ratio(n);
        // components move from N = n to N = n+1:
        //   *= (N+2)/(N+2-i) * (b+N+1-i)/(a+b+N)
        const ExactRational apb_n = a + b + ExactRational(static_cast<long>(n));
        for (std::size_t i = 0; i <= k; ++i) {
            tail_comp[i] *= ExactRational(static_cast<long>(n + 2),
                                          static_cast<unsigned long>(n + 2 - i));
            tail_comp[i] *= (b + ExactRational(static_cast<long>(n + 1 - i))) / apb_n;
        }
        ++n;
    }
};

void require_h_bernstein_column_domain(const Family& f) {
    if (f.h() >= f.t())
        throw std::domain_error(
            "h_bernstein column/alternating sums need h < t (so that t/h > 1)");
}

ExactRational contrast_abs_max(const std::vector<ExactRational>& c) {
    ExactRational m = kZero;
    for (const auto& v : c) {
        ExactRational a = v.abs();
        if (a > m) m = a;
    }
    return m;
}

// Generic driver for Bernoulli-type (binomial/bernstein) column-style sums
// with per-term weights supplied by `weight(n)`.
template <typename WeightFn>
SeriesResult bernoulli_weighted_sum(std::size_t k, const ExactRational& t,
                                    const ExactRational& weight_cap, WeightFn weight,
                                    const ExactRational& eps, std::size_t max_terms,
                                    const char* what) {
    BernoulliColumn st(k, t);
    ExactRational value = kZero;
    ExactRational bound = kZero;
    bool bound_known = false;
    std::size_t terms = 0;
    while (true) {
        value += weight(st.n) * st.term;
        ++terms;
        ExactRational next = st.term * st.ratio(st.n);
        ExactRational r = st.ratio(st.n + 1);
        if (r < kOne) {
            bound = weight_cap * next / (kOne - r);
            bound_known = true;
            if (bound <= eps) return {value, bound, terms};
        }
        if (terms >= max_terms) throw_tolerance(what, bound, bound_known, terms);
        st.term = next;
        ++st.n;
    }
}

template <typename WeightFn>
SeriesResult eulerian_weighted_sum(std::size_t k, const ExactRational& weight_cap,
                                   WeightFn weight, const ExactRational& eps,
                                   std::size_t max_terms, const char* what) {
    EulerianColumn st(k);
    ExactRational value = kZero;
    ExactRational bound = kZero;
    bool bound_known = false;
    std::size_t terms = 0;
    while (true) {
        value += weight(st.n) * st.term();
        ++terms;
        ExactRational raw;
        if (st.tail_bound(raw)) {
            bound = weight_cap * raw;
            bound_known = true;
            if (bound <= eps) return {value, bound, terms};
        }
        if (terms >= max_terms) throw_tolerance(what, bound, bound_known, terms);
        st.advance();
    }
}

SeriesResult hbernstein_column_signed(const Family& f, std::size_t k, bool alternating,
                                      const ExactRational& eps, std::size_t max_terms) {
    require_h_bernstein_column_domain(f);
    HBernsteinColumn st(k, f.t(), f.h());
    ExactRational value = kZero;
    ExactRational bound = kZero;
    bool bound_known = false;
    std::size_t terms = 0;
    const char* what = alternating ? "alternating_sum(h_bernstein)" : "column_sum(h_bernstein)";
    // Terms decrease strictly once (m+1) t > k (1-h); from there the
    // alternating remainder is bounded by the first omitted term.
    const ExactRational kOneMinusH = kOne - f.h();
    DivergenceGuard guard;
    while (true) {
        if (alternating && (st.n & 1U))
            value -= st.term;
        else
            value += st.term;
        ++terms;
        if (alternating) {
            ExactRational next = st.term * st.ratio(st.n);
            if (ExactRational(static_cast<long>(st.n + 2)) * f.t() >
                ExactRational(static_cast<long>(k)) * kOneMinusH) {
                bound = next;
                bound_known = true;
                if (bound <= eps) return {value, bound, terms};
            }
        } else {
            bound = st.tail_bound();
            bound_known = true;
            if (bound <= eps) return {value, bound, terms};
        }
        if (terms >= max_terms ||
            (bound_known && guard.hopeless(terms, bound, eps, max_terms)))
            throw_tolerance(what, bound, bound_known, terms);
        st.advance();
    }
}

// B-spline column terms N_{0,n}(t) with the simplex tail bound driven by t.
template <typename WeightFn>
SeriesResult bspline_weighted_sum(const ExactRational& t, WeightFn weight,
                                  const ExactRational& eps, std::size_t max_terms,
                                  const char* what) {
    if (t < kZero) throw std::domain_error("bspline sums need t >= 0");
    ExactRational value = kZero;
    ExactRational bound = kZero;
    bool bound_known = false;
    std::size_t terms = 0;
    std::size_t n = 0;
    ExactRational simplex_pow = t;  // t^{n+1}/(n+1)!
    while (true) {
        value += weight(n) * irwin_hall_density(n, t);
        ++terms;
        // tail bound: sum_{m>n} t^m/m! <= t^{n+1}/(n+1)! / (1 - t/(n+2))
        ExactRational r = t / ExactRational(static_cast<long>(n + 2));
        if (r < kOne) {
            bound = simplex_pow / (kOne - r);
            bound_known = true;
            if (bound <= eps) return {value, bound, terms};
        }
        if (terms >= max_terms) throw_tolerance(what, bound, bound_known, terms);
        simplex_pow *= t / ExactRational(static_cast<long>(n + 2));
        ++n;
    }
}

ExactRational unit_weight(std::size_t) { return kOne; }

struct AlternatingWeight {
    ExactRational operator()(std::size_t n) const { return (n & 1U) ? ExactRational(-1L) : kOne; }
};

}  // namespace

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::binomial: return "binomial";
        case FamilyKind::eulerian: return "eulerian";
        case FamilyKind::bernstein: return "bernstein";
        case FamilyKind::h_bernstein: return "hbernstein";
        case FamilyKind::bspline: return "bspline";
    }
    return "?";
}

std::string to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::column: return "column";
        case IdentityKind::diagonal: return "diagonal";
        case IdentityKind::alternating: return "alternating";
    }
    return "?";
}

Family Family::bernstein(ExactRational t) {
    require_probability_open(t, "Family::bernstein");
    Family f(FamilyKind::bernstein);
    f.t_ = std::move(t);
    return f;
}

Family Family::h_bernstein(ExactRational t, ExactRational h) {
    require_probability_open(t, "Family::h_bernstein");
    if (h.sign() <= 0)
        throw std::domain_error("Family::h_bernstein: h must be > 0 (h = 0 is the bernstein family)");
    Family f(FamilyKind::h_bernstein);
    f.t_ = std::move(t);
    f.h_ = std::move(h);
    return f;
}

Family Family::bspline(ExactRational t) {
    if (t.sign() < 0) throw std::domain_error("Family::bspline: t must be >= 0");
    Family f(FamilyKind::bspline);
    f.t_ = std::move(t);
    return f;
}

SeriesResult column_sum(const Family& f, std::size_t k, const ExactRational& eps,
                        std::size_t max_terms) {
    if (eps.sign() <= 0) throw std::domain_error("column_sum: eps must be positive");
    switch (f.kind()) {
        case FamilyKind::binomial:
            return bernoulli_weighted_sum(k, kHalf, kOne, unit_weight, eps, max_terms,
                                          "column_sum(binomial)");
        case FamilyKind::bernstein:
            return bernoulli_weighted_sum(k, f.t(), kOne, unit_weight, eps, max_terms,
                                          "column_sum(bernstein)");
        case FamilyKind::eulerian:
            return eulerian_weighted_sum(k, kOne, unit_weight, eps, max_terms,
                                         "column_sum(eulerian)");
        case FamilyKind::h_bernstein:
            return hbernstein_column_signed(f, k, /*alternating=*/false, eps, max_terms);
        case FamilyKind::bspline:
            throw std::invalid_argument(
                "column_sum: the bspline column takes a real argument; use bspline_column_sum");
    }
    throw std::logic_error("column_sum: unreachable");
}

SeriesResult alternating_sum(const Family& f, std::size_t k, const ExactRational& eps,
                             std::size_t max_terms) {
    if (eps.sign() <= 0) throw std::domain_error("alternating_sum: eps must be positive");
    switch (f.kind()) {
        case FamilyKind::binomial:
            return bernoulli_weighted_sum(k, kHalf, kOne, AlternatingWeight{}, eps, max_terms,
                                          "alternating_sum(binomial)");
        case FamilyKind::bernstein:
            return bernoulli_weighted_sum(k, f.t(), kOne, AlternatingWeight{}, eps, max_terms,
                                          "alternating_sum(bernstein)");
        case FamilyKind::eulerian:
            return eulerian_weighted_sum(k, kOne, AlternatingWeight{}, eps, max_terms,
                                         "alternating_sum(eulerian)");
        case FamilyKind::h_bernstein:
            return hbernstein_column_signed(f, k, /*alternating=*/true, eps, max_terms);
        case FamilyKind::bspline:
            throw std::invalid_argument(
                "alternating_sum: the bspline column takes a real argument; use "
                "bspline_alternating_sum");
    }
    throw std::logic_error("alternating_sum: unreachable");
}

ExactRational diagonal_sum(const Family& f, std::size_t n) {
    ExactRational s = kZero;
    switch (f.kind()) {
        case FamilyKind::binomial:
            for (std::size_t k = 0; 2 * k <= n; ++k)
                s += ExactRational(ExactInteger::binomial(n - k, k),
                                   ExactInteger::pow(ExactInteger(2L), n - k));
            return s;
        case FamilyKind::bernstein:
            for (std::size_t k = 0; 2 * k <= n; ++k) s += bernstein(n - k, k, f.t());
            return s;
        case FamilyKind::eulerian: {
            const Triangle& tri = shared_eulerian_triangle();
            for (std::size_t k = 0; 2 * k <= n; ++k) {
                const std::size_t m = n - k;
                if (m >= 1 && k >= m) continue;  // <m,k> = 0
                s += ExactRational(tri.entry(m, k), ExactInteger::factorial(m));
            }
            return s;
        }
        case FamilyKind::h_bernstein:
            for (std::size_t k = 0; 2 * k <= n; ++k) s += h_bernstein(n - k, k, f.t(), f.h());
            return s;
        case FamilyKind::bspline: {
            if (f.t().sign() <= 0)
                throw std::domain_error("diagonal_sum(bspline): offset t must be > 0");
            for (std::size_t k = 0; k <= n; ++k) {
                const std::size_t m = n - k;
                ExactRational arg = ExactRational(static_cast<long>(k)) + f.t();
                if (arg > ExactRational(static_cast<long>(m + 1))) break;  // past the support
                s += irwin_hall_density(m, arg);
            }
            return s;
        }
    }
    throw std::logic_error("diagonal_sum: unreachable");
}

SeriesResult contrast_sum(const Family& f, const std::vector<ExactRational>& contrast,
                          std::size_t k, const ExactRational& eps, std::size_t max_terms) {
    if (contrast.empty()) throw std::invalid_argument("contrast_sum: empty contrast vector");
    ExactRational total = kZero;
    for (const auto& c : contrast) total += c;
    if (!total.is_zero())
        throw std::invalid_argument("contrast_sum: entries must sum to exactly zero");
    const std::size_t m = contrast.size();
    const ExactRational cap = contrast_abs_max(contrast);
    auto weight = [&](std::size_t n) { return contrast[n % m]; };
    switch (f.kind()) {
        case FamilyKind::binomial:
            return bernoulli_weighted_sum(k, kHalf, cap, weight, eps, max_terms,
                                          "contrast_sum(binomial)");
        case FamilyKind::eulerian:
            return eulerian_weighted_sum(k, cap, weight, eps, max_terms,
                                         "contrast_sum(eulerian)");
        default:
            throw std::invalid_argument("contrast_sum: supported for binomial and eulerian only");
    }
}

SeriesResult bspline_column_sum(const ExactRational& t, const ExactRational& eps,
                                std::size_t max_terms) {
    if (eps.sign() <= 0) throw std::domain_error("bspline_column_sum: eps must be positive");
    return bspline_weighted_sum(t, unit_weight, eps, max_terms, "bspline_column_sum");
}

SeriesResult bspline_alternating_sum(const ExactRational& t, const ExactRational& eps,
                                     std::size_t max_terms) {
    if (eps.sign() <= 0)
        throw std::domain_error("bspline_alternating_sum: eps must be positive");
    return bspline_weighted_sum(t, AlternatingWeight{}, eps, max_terms,
                                "bspline_alternating_sum");
}

namespace {

// E[p^m (1-p)^j] summed against 2^{-(j+1)}: the shared engine behind the
// h-Bernstein diagonal values. Terms are positive and decay at ratio <= 1/2,
// so the geometric tail bound m_{N+1} 2^{-(N+1)} is immediate.
SeriesResult moment_geometric_sum(const ExactRational& a, const ExactRational& b, long m,
                                  const ExactRational& eps, std::size_t max_terms,
                                  const char* what) {
    ExactRational value = kZero;
    ExactRational moment = beta_mixed_moment(a, b, m, 0);  // E[p^m]
    ExactRational pow2 = kHalf;                            // 2^{-(j+1)}
    std::size_t j = 0;
    while (true) {
        value += moment * pow2;
        // advance moment to E[p^m (1-p)^{j+1}]
        moment *= (b + ExactRational(static_cast<long>(j))) /
                  (a + b + ExactRational(m + static_cast<long>(j)));
        ExactRational bound = moment * pow2;  // m_{j+1} 2^{-(j+1)} >= tail
        if (bound <= eps) return {value, bound, j + 1};
        if (j + 1 >= max_terms) throw_tolerance(what, bound, true, j + 1);
        pow2 *= kHalf;
        ++j;
    }
}

void beta_params_from(const ExactRational& t, const ExactRational& h, ExactRational& a,
                      ExactRational& b) {
    require_probability_open(t, "h_bernstein moments");
    if (h.sign() <= 0) throw std::domain_error("h_bernstein moments: h must be > 0");
    a = t / h;
    b = (kOne - t) / h;
}

}  // namespace

SeriesResult hbernstein_diagonal_limit(const ExactRational& t, const ExactRational& h,
                                       const ExactRational& eps, std::size_t max_terms) {
    ExactRational a, b;
    beta_params_from(t, h, a, b);
    return moment_geometric_sum(a, b, 0, eps, max_terms, "hbernstein_diagonal_limit");
}

SeriesResult hbernstein_diagonal_via_moments(std::size_t n, const ExactRational& t,
                                             const ExactRational& h, const ExactRational& eps,
                                             std::size_t max_terms) {
    ExactRational a, b;
    beta_params_from(t, h, a, b);
    const ExactRational half_eps = eps * kHalf;
    SeriesResult main = moment_geometric_sum(a, b, 0, half_eps, max_terms,
                                             "hbernstein_diagonal_via_moments");
    SeriesResult corr = moment_geometric_sum(a, b, static_cast<long>(n) + 1, half_eps,
                                             max_terms, "hbernstein_diagonal_via_moments");
    SeriesResult out;
    out.value = (n & 1U) ? main.value - corr.value : main.value + corr.value;
    out.truncation_bound = main.truncation_bound + corr.truncation_bound;
    out.terms_used = main.terms_used + corr.terms_used;
    return out;
}

SeriesResult hbernstein_alternating_limitk(const ExactRational& t, const ExactRational& h,
                                           std::size_t k, const ExactRational& eps,
                                           std::size_t max_terms) {
    // Converges geometrically for every a, b > 0, so h < t is not needed
    // here (only the direct alternating series carries that restriction).
    ExactRational a, b;
    beta_params_from(t, h, a, b);
    // term_j = C(k+j,j) 2^{-(k+1+j)} E[p^{k+j}]
    ExactRational term = beta_moment(a, b, k);
    term /= ExactRational(ExactInteger::pow(ExactInteger(2L), k + 1));
    ExactRational value = kZero;
    ExactRational bound = kZero;
    bool bound_known = false;
    std::size_t j = 0;
    while (true) {
        value += term;
        // ratio_j = (k+j+1)/(j+1) * 1/2 * (a+k+j)/(a+b+k+j) <= (k+j+1)/(2(j+1))
        ExactRational next = term;
        next *= ExactRational(static_cast<long>(k + j + 1), static_cast<unsigned long>(j + 1));
        next *= kHalf;
        next *= (a + ExactRational(static_cast<long>(k + j))) /
                (a + b + ExactRational(static_cast<long>(k + j)));
        ExactRational rcap = ExactRational(static_cast<long>(k + j + 2),
                                           static_cast<unsigned long>(2 * (j + 2)));
        if (rcap < kOne) {
            bound = next / (kOne - rcap);
            bound_known = true;
            if (bound <= eps) break;
        }
        if (j + 1 >= max_terms)
            throw_tolerance("hbernstein_alternating_limitk", bound, bound_known, j + 1);
        term = next;
        ++j;
    }
    if (k & 1U) value = -value;
    return {value, bound, j + 1};
}

ClosedFormResult closed_form(const Family& f, IdentityKind id, std::size_t index,
                             const ExactRational& eps) {
    ClosedFormResult out;
    switch (f.kind()) {
        case FamilyKind::binomial: {
            if (id == IdentityKind::column) {
                out.value = kTwo;  // A1*
            } else if (id == IdentityKind::diagonal) {
                // A2*: 2/3 + (1/3)(-1/2)^n
                ExactRational p = ExactRational::pow(-kHalf, index);
                out.value = ExactRational(2L, 3UL) + ExactRational(1L, 3UL) * p;
            } else {
                // A3*: (-1)^k 2/3^{k+1}
                out.value = ExactRational(ExactInteger(2L),
                                          ExactInteger::pow(ExactInteger(3L), index + 1));
                if (index & 1U) out.value = -out.value;
            }
            return out;
        }
        case FamilyKind::bernstein: {
            const ExactRational& t = f.t();
            if (id == IdentityKind::column) {
                out.value = t.reciprocal();  // C1*
            } else if (id == IdentityKind::diagonal) {
                // C2*: (1 - (-t)^{n+1}) / (1 + t)
                out.value = (kOne - ExactRational::pow(-t, index + 1)) / (kOne + t);
            } else {
                // C3*: (-t)^k / (2-t)^{k+1}
                out.value = ExactRational::pow(-t, index) / ExactRational::pow(kTwo - t, index + 1);
            }
            return out;
        }
        case FamilyKind::h_bernstein: {
            if (id == IdentityKind::column) {
                // D1*: (1-h)/(t-h) for 0 < h < t
                require_h_bernstein_column_domain(f);
                out.value = (kOne - f.h()) / (f.t() - f.h());
                return out;
            }
            SeriesResult r = (id == IdentityKind::diagonal)
                                 ? hbernstein_diagonal_via_moments(index, f.t(), f.h(), eps)
                                 : hbernstein_alternating_limitk(f.t(), f.h(), index, eps);
            out.value = std::move(r.value);
            out.exact = false;
            out.truncation_bound = std::move(r.truncation_bound);
            out.terms_used = r.terms_used;
            return out;
        }
        case FamilyKind::eulerian:
        case FamilyKind::bspline:
            throw std::domain_error(
                "closed_form: the eulerian and bspline families have no starred closed form");
    }
    throw std::logic_error("closed_form: unreachable");
}

}  // namespace rsums
