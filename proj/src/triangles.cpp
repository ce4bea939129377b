#include "rsums/triangles.hpp"

#include <ostream>

namespace rsums {

void Triangle::ensure_rows(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (rows_.empty()) rows_.push_back({ExactInteger(1L)});
    while (rows_.size() <= n) {
        const std::size_t r = rows_.size();
        const auto& prev = rows_[r - 1];
        std::vector<ExactInteger> cur;
        cur.reserve(r + 1);
        if (kind_ == TriangleKind::pascal) {
            // C(n,k) = C(n-1,k) + C(n-1,k-1)
            for (std::size_t k = 0; k <= r; ++k) {
                ExactInteger v(0L);
                if (k < prev.size()) v += prev[k];
                if (k >= 1) v += prev[k - 1];
                cur.push_back(std::move(v));
            }
        } else {
            // <n,k> = (k+1) <n-1,k> + (n-k) <n-1,k-1>
            for (std::size_t k = 0; k <= r; ++k) {
                ExactInteger v(0L);
                if (k < prev.size()) {
                    ExactInteger a = prev[k];
                    a *= static_cast<unsigned long>(k + 1);
                    v += a;
                }
                if (k >= 1) {
                    ExactInteger b = prev[k - 1];
                    b *= static_cast<unsigned long>(r - k);
                    v += b;
                }
                cur.push_back(std::move(v));
            }
        }
        rows_.push_back(std::move(cur));
    }
}

ExactInteger Triangle::entry(std::size_t n, std::size_t k) const {
    if (k > n) return ExactInteger(0L);
    return row(n)[k];
}

const std::vector<ExactInteger>& Triangle::row(std::size_t n) const {
    ensure_rows(n);
    std::lock_guard<std::mutex> lock(mu_);
    return rows_[n];
}

std::size_t Triangle::rows_cached() const {
    std::lock_guard<std::mutex> lock(mu_);
    return rows_.size();
}

ExactInteger binomial(std::size_t n, std::size_t k) {
    if (k > n) return ExactInteger(0L);
    return ExactInteger::binomial(n, k);
}

const Triangle& shared_eulerian_triangle() {
    static Triangle t(TriangleKind::eulerian);
    return t;
}

ExactInteger eulerian(std::size_t n, std::size_t k) {
    if (k > n) return ExactInteger(0L);
    return shared_eulerian_triangle().entry(n, k);
}

std::vector<ExactRational> normalized_row(const Triangle& t, std::size_t n) {
    const auto& raw = t.row(n);
    ExactInteger den = t.kind() == TriangleKind::pascal
                           ? ExactInteger::pow(ExactInteger(2L), n)
                           : ExactInteger::factorial(n);
    std::vector<ExactRational> out;
    out.reserve(raw.size());
    for (const auto& e : raw) out.emplace_back(e, den);
    return out;
}

ExactInteger short_diagonal_unnormalized(std::size_t n) {
    ExactInteger s(0L);
    for (std::size_t k = 0; 2 * k <= n; ++k) s += ExactInteger::binomial(n - k, k);
    return s;
}

ParityBitmap parity_bitmap(TriangleKind kind, std::size_t levels) {
    if (levels < 1) throw std::domain_error("parity_bitmap: levels must be >= 1");
    ParityBitmap bm;
    bm.width = levels;
    bm.height = levels;
    bm.bits.assign(levels * levels, 0);
    // Work mod 2 directly; the recurrences only need the previous row's bits.
    std::vector<std::uint8_t> prev{1}, cur;
    bm.bits[0] = 1;
    for (std::size_t n = 1; n < levels; ++n) {
        cur.assign(n + 1, 0);
        for (std::size_t k = 0; k <= n; ++k) {
            unsigned v = 0;
            if (kind == TriangleKind::pascal) {
                if (k < prev.size()) v += prev[k];
                if (k >= 1) v += prev[k - 1];
            } else {
                if (k < prev.size()) v += static_cast<unsigned>((k + 1) & 1U) * prev[k];
                if (k >= 1) v += static_cast<unsigned>((n - k) & 1U) * prev[k - 1];
            }
            cur[k] = static_cast<std::uint8_t>(v & 1U);
            bm.bits[n * levels + k] = cur[k];
        }
        prev.swap(cur);
    }
    return bm;
}

void ParityBitmap::write_pbm(std::ostream& os) const {
    os << "P1\n" << width << " " << height << "\n";
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c) os << ' ';
            os << static_cast<int>(bits[r * width + c]);
        }
        os << '\n';
    }
}

void write_triangle_csv(std::ostream& os, TriangleKind kind, std::size_t levels,
                        bool normalized) {
    Triangle t(kind);
    for (std::size_t n = 0; n < levels; ++n) {
        if (normalized) {
            auto row = normalized_row(t, n);
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) os << ',';
                os << row[k];
            }
        } else {
            const auto& row = t.row(n);
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) os << ',';
                os << row[k];
            }
        }
        os << '\n';
    }
}

}  // namespace rsums
