#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmp.h>

namespace rsums {

/// Arbitrary-precision signed integer. Thin value-semantic wrapper over GMP's
/// mpz_t: closed under +, -, *; division is permitted only when exact.
class ExactInteger {
public:
    ExactInteger() { mpz_init(z_); }
    ExactInteger(long v) { mpz_init_set_si(z_, v); }            // NOLINT(google-explicit-constructor)
    ExactInteger(unsigned long v) { mpz_init_set_ui(z_, v); }   // NOLINT(google-explicit-constructor)
    ExactInteger(int v) : ExactInteger(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    explicit ExactInteger(std::string_view decimal);

    ExactInteger(const ExactInteger& o) { mpz_init_set(z_, o.z_); }
    ExactInteger(ExactInteger&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ExactInteger& operator=(const ExactInteger& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ExactInteger& operator=(ExactInteger&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~ExactInteger() { mpz_clear(z_); }

    ExactInteger& operator+=(const ExactInteger& o) { mpz_add(z_, z_, o.z_); return *this; }
    ExactInteger& operator-=(const ExactInteger& o) { mpz_sub(z_, z_, o.z_); return *this; }
    ExactInteger& operator*=(const ExactInteger& o) { mpz_mul(z_, z_, o.z_); return *this; }
    ExactInteger& operator*=(unsigned long v) { mpz_mul_ui(z_, z_, v); return *this; }

    friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
    friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
    friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }
    ExactInteger operator-() const {
        ExactInteger r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }

    /// Exact quotient; throws std::domain_error if `d` does not divide *this.
    ExactInteger div_exact(const ExactInteger& d) const;

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    bool operator==(long v) const { return mpz_cmp_si(z_, v) == 0; }

    int sign() const { return mpz_sgn(z_); }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }
    bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
    unsigned long to_ulong() const { return mpz_get_ui(z_); }
    double to_double() const { return mpz_get_d(z_); }
    std::string to_string() const;
    std::size_t decimal_digits() const { return mpz_sizeinbase(z_, 10); }

    static ExactInteger pow(const ExactInteger& base, unsigned long e) {
        ExactInteger r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }
    static ExactInteger pow10(unsigned long e) { return pow(ExactInteger(10L), e); }
    static ExactInteger factorial(unsigned long n) {
        ExactInteger r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static ExactInteger binomial(unsigned long n, unsigned long k) {
        ExactInteger r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const ExactInteger& v);

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; there is no implicit conversion
/// from binary floating point anywhere in the library.
class ExactRational {
public:
    ExactRational() { mpq_init(q_); }
    ExactRational(long v) {                      // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    ExactRational(int v) : ExactRational(static_cast<long>(v)) {} // NOLINT
    ExactRational(long num, unsigned long den) {
        mpq_init(q_);
        if (den == 0) throw std::domain_error("ExactRational: zero denominator");
        mpq_set_si(q_, num, den);
        mpq_canonicalize(q_);
    }
    ExactRational(const ExactInteger& num, const ExactInteger& den);
    ExactRational(const ExactInteger& v) {       // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }

    ExactRational(const ExactRational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    ExactRational(ExactRational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ExactRational& operator=(const ExactRational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~ExactRational() { mpq_clear(q_); }

    /// Parses "p/q", integers, plain decimals ("0.25") and scientific
    /// decimals ("-4.8e-2"), all converted exactly. Binary floats never enter.
    static ExactRational parse(std::string_view text);

    ExactRational& operator+=(const ExactRational& o) { mpq_add(q_, q_, o.q_); return *this; }
    ExactRational& operator-=(const ExactRational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    ExactRational& operator*=(const ExactRational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    ExactRational& operator/=(const ExactRational& o) {
        if (mpq_sgn(o.q_) == 0) throw std::domain_error("ExactRational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const {
        ExactRational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    bool operator==(long v) const { return mpq_cmp_si(q_, v, 1) == 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    ExactRational abs() const {
        ExactRational r(*this);
        mpq_abs(r.q_, r.q_);
        return r;
    }
    ExactRational reciprocal() const {
        if (is_zero()) throw std::domain_error("ExactRational: reciprocal of zero");
        ExactRational r(*this);
        mpq_inv(r.q_, r.q_);
        return r;
    }
    static ExactRational pow(const ExactRational& base, unsigned long e);

    ExactInteger numerator() const;
    ExactInteger denominator() const;
    /// floor(*this) as a big integer (toward -infinity).
    ExactInteger floor() const;
    long floor_long() const;

    double to_double() const { return mpq_get_d(q_); }
    /// "num/den" in lowest terms, or just "num" when integral.
    std::string to_string() const;
    /// Decimal rendering with `digits` places after the point, rounded
    /// half-away-from-zero. Exact long division, never via binary floats.
    std::string to_decimal_string(std::size_t digits) const;
    /// Scientific rendering with `sig` significant digits ("-4.8e-02").
    std::string to_sci_string(std::size_t sig) const;

    /// 10^-e as an exact rational.
    static ExactRational pow10(long e);

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

}  // namespace rsums
