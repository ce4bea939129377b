#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsums/exact.hpp"

namespace rsums {

enum class FamilyKind { binomial, eulerian, bernstein, h_bernstein, bspline };
enum class IdentityKind { column, diagonal, alternating };

std::string to_string(FamilyKind k);
std::string to_string(IdentityKind k);

/// A family of normalized triangle/distribution terms together with its
/// parameters. Parameter domains are validated at construction:
/// bernstein needs t in (0,1); h_bernstein needs t in (0,1) and h > 0
/// (column/alternating sums additionally require h < t, checked per call);
/// bspline carries the real evaluation argument t >= 0.
class Family {
public:
    static Family binomial() { return Family(FamilyKind::binomial); }
    static Family eulerian() { return Family(FamilyKind::eulerian); }
    static Family bernstein(ExactRational t);
    static Family h_bernstein(ExactRational t, ExactRational h);
    static Family bspline(ExactRational t);

    FamilyKind kind() const { return kind_; }
    const ExactRational& t() const { return t_; }
    const ExactRational& h() const { return h_; }
    std::string name() const { return to_string(kind_); }

private:
    explicit Family(FamilyKind k) : kind_(k) {}
    FamilyKind kind_;
    ExactRational t_;
    ExactRational h_;
};

/// Partial sum of an infinite series plus a proven upper bound on the
/// omitted tail. Values stay exact rationals; nothing is rounded.
struct SeriesResult {
    ExactRational value;
    ExactRational truncation_bound;
    std::size_t terms_used = 0;
};

/// Requested tolerance could not be certified within the term budget.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, ExactRational best_bound, bool bound_known,
                   std::size_t terms_used)
        : std::runtime_error(what),
          best_bound_(std::move(best_bound)),
          bound_known_(bound_known),
          terms_used_(terms_used) {}

    /// Tightest tail bound certified before giving up (see bound_known()).
    const ExactRational& best_bound() const { return best_bound_; }
    bool bound_known() const { return bound_known_; }
    std::size_t terms_used() const { return terms_used_; }

private:
    ExactRational best_bound_;
    bool bound_known_;
    std::size_t terms_used_;
};

inline constexpr std::size_t kDefaultMaxTerms = 500000;

/// Column sum over n of the family's (n,k) term, truncated once the proven
/// tail bound drops to eps. Families: binomial (terms C(n,k)/2^n), eulerian
/// (<n,k>/n!), bernstein (B^n_k(t)), h_bernstein (B^n_k(t;h), requires h < t).
/// The B-spline column takes a real argument instead of k; use
/// bspline_column_sum.
SeriesResult column_sum(const Family& f, std::size_t k, const ExactRational& eps,
                        std::size_t max_terms = kDefaultMaxTerms);

/// Alternating counterpart: sum of (-1)^n times the column term.
SeriesResult alternating_sum(const Family& f, std::size_t k, const ExactRational& eps,
                             std::size_t max_terms = kDefaultMaxTerms);

/// Exact finite short-diagonal sum over k of the (n-k, k) term.
/// For the bspline family the terms are N_{0,n-k}(k + t) with the family's
/// offset t > 0.
ExactRational diagonal_sum(const Family& f, std::size_t n);

/// Periodically weighted column sum: sum of c[n mod m] * term_n for a
/// contrast vector c (entries summing to exactly zero). Families: binomial,
/// eulerian.
SeriesResult contrast_sum(const Family& f, const std::vector<ExactRational>& contrast,
                          std::size_t k, const ExactRational& eps,
                          std::size_t max_terms = kDefaultMaxTerms);

/// Column / alternating sums over n of N_{0,n}(t) at a real argument t >= 0.
SeriesResult bspline_column_sum(const ExactRational& t, const ExactRational& eps,
                                std::size_t max_terms = kDefaultMaxTerms);
SeriesResult bspline_alternating_sum(const ExactRational& t, const ExactRational& eps,
                                     std::size_t max_terms = kDefaultMaxTerms);

/// E_{p~Beta(a,b)}[1/(1+p)] with a = t/h, b = (1-t)/h: the limit of the
/// h-Bernstein short-diagonal sums. Evaluated through the geometric moment
/// expansion 1/(1+p) = sum_j (1-p)^j / 2^{j+1}, which converges at ratio
/// <= 1/2 for every a,b > 0, with the exact geometric tail bound.
SeriesResult hbernstein_diagonal_limit(const ExactRational& t, const ExactRational& h,
                                       const ExactRational& eps,
                                       std::size_t max_terms = kDefaultMaxTerms);

/// Finite-n right-hand side of the h-Bernstein short-diagonal identity:
/// E[1/(1+p)] + (-1)^n E[p^{n+1}/(1+p)], via the same moment expansion.
SeriesResult hbernstein_diagonal_via_moments(std::size_t n, const ExactRational& t,
                                             const ExactRational& h, const ExactRational& eps,
                                             std::size_t max_terms = kDefaultMaxTerms);

/// Alternating h-Bernstein column value at fixed k,
///   (-1)^k E[p^k / (2-p)^{k+1}],
/// via 1/(2-p)^{k+1} = 2^{-(k+1)} sum_j C(k+j,j) (p/2)^j; the term ratio is
/// bounded by (1/2)(k+j+1)/(j+1), giving a geometric tail bound once that
/// factor falls below one. Requires 0 < h < t < 1.
SeriesResult hbernstein_alternating_limitk(const ExactRational& t, const ExactRational& h,
                                           std::size_t k, const ExactRational& eps,
                                           std::size_t max_terms = kDefaultMaxTerms);

/// Closed-form right-hand side of a starred identity. `exact` is true for
/// the algebraic forms (binomial and bernstein families, h-bernstein
/// column); the h-bernstein diagonal/alternating forms are beta-moment
/// series evaluated to eps, reported with their bound. Eulerian and bspline
/// families have no closed form and are rejected with std::domain_error.
struct ClosedFormResult {
    ExactRational value;
    bool exact = true;
    ExactRational truncation_bound;  // zero when exact
    std::size_t terms_used = 0;
};

ClosedFormResult closed_form(const Family& f, IdentityKind id, std::size_t index,
                             const ExactRational& eps = ExactRational::pow10(-12));

}  // namespace rsums
