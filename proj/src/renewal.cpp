#include "rsums/renewal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rsums {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                         std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
}

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream)
    : key0_(static_cast<std::uint32_t>(seed)),
      key1_(static_cast<std::uint32_t>(seed >> 32)),
      ctr2_(static_cast<std::uint32_t>(stream)),
      ctr3_(static_cast<std::uint32_t>(stream >> 32)) {}

void PhiloxStream::refill() {
    std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = ctr2_, c3 = ctr3_;
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
        philox_round(c0, c1, c2, c3, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    buf_[0] = (static_cast<std::uint64_t>(c1) << 32) | c0;
    buf_[1] = (static_cast<std::uint64_t>(c3) << 32) | c2;
    avail_ = 2;
    if (++ctr0_ == 0) ++ctr1_;  // 64-bit block counter
}

std::uint64_t PhiloxStream::next_u64() {
    if (avail_ == 0) refill();
    return buf_[2 - avail_--];
}

double PhiloxStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

InterarrivalSpec InterarrivalSpec::uniform(double a, double b) {
    if (!(b > a) || a < 0.0)
        throw std::domain_error("InterarrivalSpec::uniform requires b > a >= 0");
    InterarrivalSpec s;
    s.law = LawKind::uniform;
    s.a = a;
    s.b = b;
    return s;
}

InterarrivalSpec InterarrivalSpec::bernoulli(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("InterarrivalSpec::bernoulli requires p in (0,1)");
    InterarrivalSpec s;
    s.law = LawKind::bernoulli;
    s.p = p;
    return s;
}

InterarrivalSpec InterarrivalSpec::beta_mixed_bernoulli(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("InterarrivalSpec::beta_mixed_bernoulli requires a, b > 0");
    InterarrivalSpec s;
    s.law = LawKind::beta_mixed_bernoulli;
    s.a = a;
    s.b = b;
    return s;
}

InterarrivalSpec InterarrivalSpec::shifted_plus_one() const {
    InterarrivalSpec s = *this;
    ++s.shift;
    return s;
}

InterarrivalSpec InterarrivalSpec::with_delay_sum_of_uniforms(unsigned j) const {
    InterarrivalSpec s = *this;
    s.has_delay = true;
    s.delay_uniform_count = j;
    return s;
}

double InterarrivalSpec::mean() const {
    double base = 0.0;
    switch (law) {
        case LawKind::uniform: base = 0.5 * (a + b); break;
        case LawKind::bernoulli: base = p; break;
        case LawKind::beta_mixed_bernoulli: base = a / (a + b); break;
    }
    return base + shift;
}

bool InterarrivalSpec::is_arithmetic() const {
    return law == LawKind::bernoulli || law == LawKind::beta_mixed_bernoulli;
}

std::string InterarrivalSpec::name() const {
    std::ostringstream os;
    for (unsigned i = 0; i < shift; ++i) os << "shift1:";
    switch (law) {
        case LawKind::uniform: os << "uniform:" << a << "," << b; break;
        case LawKind::bernoulli: os << "bernoulli:" << p; break;
        case LawKind::beta_mixed_bernoulli: os << "betabern:" << a << "," << b; break;
    }
    return os.str();
}

double theoretical_blackwell_limit(const InterarrivalSpec& spec, double delta) {
    if (!(delta > 0.0))
        throw std::domain_error("theoretical_blackwell_limit: delta must be > 0");
    if (spec.is_arithmetic() && delta != 1.0)
        throw std::domain_error(
            "theoretical_blackwell_limit: arithmetic law has span 1; delta must equal 1");
    return delta / spec.mean();
}

namespace {

// Marsaglia-Tsang gamma sampling; shapes below one go through the
// boost G(a) = G(a+1) U^{1/a}. Normals come from Box-Muller.
class Sampler {
public:
    explicit Sampler(PhiloxStream& rng) : rng_(rng) {}

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = rng_.next_unit();
        while (u1 <= 0.0) u1 = rng_.next_unit();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double gamma(double shape) {
        if (shape < 1.0) {
            double u = rng_.next_unit();
            while (u <= 0.0) u = rng_.next_unit();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = rng_.next_unit();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        const double g1 = gamma(a);
        const double g2 = gamma(b);
        const double s = g1 + g2;
        return s > 0.0 ? g1 / s : 0.0;
    }

private:
    PhiloxStream& rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// One renewal walk; calls visit(n, S_n) for every S_n <= x+delta (n >= 0).
template <typename Visit>
void run_path(const InterarrivalSpec& spec, double limit, PhiloxStream& rng,
              std::uint64_t max_draws, Visit visit) {
    Sampler sampler(rng);
    double bernoulli_p = spec.p;
    if (spec.law == LawKind::beta_mixed_bernoulli)
        bernoulli_p = sampler.beta(spec.a, spec.b);  // one success probability per path

    double s = 0.0;
    if (spec.has_delay)
        for (unsigned i = 0; i < spec.delay_uniform_count; ++i) s += rng.next_unit();

    std::uint64_t n = 0;
    std::uint64_t draws = 0;
    while (s <= limit) {
        visit(n, s);
        double x = 0.0;
        switch (spec.law) {
            case LawKind::uniform: x = spec.a + (spec.b - spec.a) * rng.next_unit(); break;
            case LawKind::bernoulli:
            case LawKind::beta_mixed_bernoulli:
                x = rng.next_unit() < bernoulli_p ? 1.0 : 0.0;
                break;
        }
        s += x + spec.shift;
        ++n;
        if (++draws > max_draws)
            throw std::runtime_error(
                "simulate: per-path draw budget exhausted; interarrival law is degenerate "
                "at these parameters");
    }
}

RenewalEstimate accumulate_paths(const InterarrivalSpec& spec, double x, double delta,
                                 std::uint64_t paths, std::uint64_t seed,
                                 std::uint64_t max_draws, const std::vector<double>& weights) {
    if (!(delta > 0.0)) throw std::domain_error("simulate: delta must be > 0");
    if (x < 0.0) throw std::domain_error("simulate: x must be >= 0");
    if (paths < 1) throw std::domain_error("simulate: paths must be >= 1");
    const double limit = x + delta;
    const std::size_t m = weights.size();

    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t path = 0; path < paths; ++path) {
        PhiloxStream rng(seed, path);
        double acc = 0.0;
        run_path(spec, limit, rng, max_draws, [&](std::uint64_t n, double s) {
            if (s > x) acc += m == 0 ? 1.0 : weights[n % m];
        });
        sum += acc;
        sumsq += acc * acc;
    }

    RenewalEstimate est;
    est.paths = paths;
    est.x = x;
    est.delta = delta;
    est.mean_count = sum / static_cast<double>(paths);
    if (paths > 1) {
        const double var =
            (sumsq - static_cast<double>(paths) * est.mean_count * est.mean_count) /
            static_cast<double>(paths - 1);
        est.std_error = var > 0.0 ? std::sqrt(var / static_cast<double>(paths)) : 0.0;
    }
    return est;
}

}  // namespace

RenewalEstimate simulate_count(const InterarrivalSpec& spec, double x, double delta,
                               std::uint64_t paths, std::uint64_t seed,
                               std::uint64_t max_draws_per_path) {
    return accumulate_paths(spec, x, delta, paths, seed, max_draws_per_path, {});
}

RenewalEstimate simulate_contrast_sum(const InterarrivalSpec& spec,
                                      const std::vector<ExactRational>& contrast, double x,
                                      double delta, std::uint64_t paths, std::uint64_t seed,
                                      std::uint64_t max_draws_per_path) {
    if (contrast.empty())
        throw std::invalid_argument("simulate_contrast_sum: empty contrast vector");
    ExactRational total(0L);
    for (const auto& c : contrast) total += c;
    if (!total.is_zero())
        throw std::invalid_argument("simulate_contrast_sum: entries must sum to exactly zero");
    std::vector<double> w;
    w.reserve(contrast.size());
    for (const auto& c : contrast) w.push_back(c.to_double());
    return accumulate_paths(spec, x, delta, paths, seed, max_draws_per_path, w);
}

}  // namespace rsums
