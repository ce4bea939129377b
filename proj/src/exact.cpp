#include "rsums/exact.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace rsums {

ExactInteger::ExactInteger(std::string_view decimal) {
    std::string s(decimal);
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("ExactInteger: not a decimal integer: '" + s + "'");
    }
}

ExactInteger ExactInteger::div_exact(const ExactInteger& d) const {
    if (mpz_sgn(d.z_) == 0) throw std::domain_error("ExactInteger: division by zero");
    if (!mpz_divisible_p(z_, d.z_))
        throw std::domain_error("ExactInteger: inexact division");
    ExactInteger r;
    mpz_divexact(r.z_, z_, d.z_);
    return r;
}

std::string ExactInteger::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& v) {
    return os << v.to_string();
}

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den) {
    mpq_init(q_);
    if (den.sign() == 0) throw std::domain_error("ExactRational: zero denominator");
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

ExactRational ExactRational::parse(std::string_view text) {
    auto fail = [&] {
        return std::invalid_argument("cannot parse exact rational from '" + std::string(text) + "'");
    };
    std::string s(text);
    if (s.empty()) throw fail();

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        ExactInteger num(std::string_view(s).substr(0, slash));
        ExactInteger den(std::string_view(s).substr(slash + 1));
        if (den.sign() <= 0) throw fail();
        return ExactRational(num, den);
    }

    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) throw fail();
        long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i++] - '0');
            if (e > 1000000) throw fail();
        }
        exp10 = eneg ? -e : e;
    }
    if (i != s.size() || (intpart.empty() && fracpart.empty())) throw fail();

    ExactInteger mantissa(intpart.empty() ? std::string_view("0")
                                          : std::string_view(intpart));
    if (!fracpart.empty()) {
        mantissa *= ExactInteger::pow10(fracpart.size());
        mantissa += ExactInteger(std::string_view(fracpart));
        exp10 -= static_cast<long>(fracpart.size());
    }
    if (neg) mantissa = -mantissa;

    ExactRational r(mantissa);
    if (exp10 > 0)
        r *= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(exp10)));
    else if (exp10 < 0)
        r /= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(-exp10)));
    return r;
}

ExactRational ExactRational::pow(const ExactRational& base, unsigned long e) {
    ExactRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), e);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), e);
    return r;  // lowest terms are preserved under powering
}

ExactInteger ExactRational::numerator() const {
    ExactInteger r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

ExactInteger ExactRational::denominator() const {
    ExactInteger r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

ExactInteger ExactRational::floor() const {
    ExactInteger r;
    mpz_fdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
    return r;
}

long ExactRational::floor_long() const {
    ExactInteger f = floor();
    if (!mpz_fits_slong_p(f.raw()))
        throw std::overflow_error("ExactRational::floor_long: out of range");
    return mpz_get_si(f.raw());
}

std::string ExactRational::to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

namespace {

// |num|/den scaled by 10^digits and rounded half-away-from-zero.
ExactInteger scaled_rounded_magnitude(const ExactRational& v, std::size_t digits) {
    ExactInteger num = v.numerator();
    if (num.sign() < 0) num = -num;
    num *= ExactInteger::pow10(digits);
    ExactInteger den = v.denominator();
    // floor((2*num + den) / (2*den)) == round-half-away for non-negative num
    ExactInteger t = num + num + den;
    ExactInteger r;
    mpz_fdiv_q(r.raw(), t.raw(), (den + den).raw());
    return r;
}

}  // namespace

std::string ExactRational::to_decimal_string(std::size_t digits) const {
    ExactInteger m = scaled_rounded_magnitude(*this, digits);
    std::string s = m.to_string();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (sign() < 0 && !(m == 0L)) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

std::string ExactRational::to_sci_string(std::size_t sig) const {
    if (sig == 0) sig = 1;
    if (is_zero()) return "0";
    // Decimal exponent e with 10^e <= |v| < 10^{e+1}, found by exact comparison.
    ExactInteger num = numerator();
    if (num.sign() < 0) num = -num;
    const ExactInteger den = denominator();
    long e = static_cast<long>(num.decimal_digits()) - static_cast<long>(den.decimal_digits());
    auto magnitude_at_least = [&](long p) {
        // |v| >= 10^p  <=>  num*10^{-min(p,0)} >= den*10^{max(p,0)}
        ExactInteger lhs = num, rhs = den;
        if (p >= 0)
            rhs *= ExactInteger::pow10(static_cast<unsigned long>(p));
        else
            lhs *= ExactInteger::pow10(static_cast<unsigned long>(-p));
        return lhs >= rhs;
    };
    while (!magnitude_at_least(e)) --e;
    while (magnitude_at_least(e + 1)) ++e;

    // mantissa = round(|v| * 10^{sig-1-e}) with sig digits
    ExactRational scaled = this->abs();
    long shift = static_cast<long>(sig) - 1 - e;
    if (shift >= 0)
        scaled *= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(shift)));
    else
        scaled /= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(-shift)));
    ExactInteger m = scaled_rounded_magnitude(scaled, 0);
    std::string ms = m.to_string();
    if (ms.size() > sig) {  // rounding bumped 9.99 -> 10.0
        ++e;
        ms.pop_back();
    }
    std::string out;
    if (sign() < 0) out += '-';
    out += ms.substr(0, 1);
    if (sig > 1) {
        out += '.';
        out += ms.substr(1);
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out += buf;
    return out;
}

ExactRational ExactRational::pow10(long e) {
    ExactRational r(1L);
    if (e >= 0)
        r *= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(e)));
    else
        r /= ExactRational(ExactInteger::pow10(static_cast<unsigned long>(-e)));
    return r;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
    return os << v.to_string();
}

}  // namespace rsums
