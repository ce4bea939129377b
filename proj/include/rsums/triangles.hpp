#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <mutex>
#include <vector>

#include "rsums/exact.hpp"

namespace rsums {

enum class TriangleKind { pascal, eulerian };

/// Lazily generated triangular array of exact integers, grown row by row
/// from the defining recurrence and memoized.
///
/// Row n of the Pascal triangle holds C(n,0)..C(n,n); row n of the Eulerian
/// triangle holds <n,0>..<n,n> (so <n,n-1> = 1 and the trailing <n,n> is 0
/// for n >= 1).
///
/// Growing the cache is internally synchronized; rows already filled may be
/// read concurrently. Row references stay valid across later growth.
class Triangle {
public:
    explicit Triangle(TriangleKind kind) : kind_(kind) {}

    TriangleKind kind() const { return kind_; }

    /// Entry at (n, k); zero when k > n.
    ExactInteger entry(std::size_t n, std::size_t k) const;

    /// Row n (n+1 entries). The reference remains valid until destruction.
    const std::vector<ExactInteger>& row(std::size_t n) const;

    /// Generates and caches rows 0..n.
    void ensure_rows(std::size_t n) const;

    std::size_t rows_cached() const;

private:
    TriangleKind kind_;
    mutable std::mutex mu_;
    // deque so built rows never relocate when the cache grows
    mutable std::deque<std::vector<ExactInteger>> rows_;
};

/// C(n, k); 0 when k > n. Multiplicative evaluation, independent of the
/// recurrence-built triangle (the unit tests replay one against the other).
ExactInteger binomial(std::size_t n, std::size_t k);

/// Eulerian number <n, k> (permutations of {1..n} with exactly k ascents);
/// 0 when k >= n for n >= 1. Backed by a shared recurrence-built cache.
ExactInteger eulerian(std::size_t n, std::size_t k);

/// Shared process-wide Eulerian triangle (grown on demand).
const Triangle& shared_eulerian_triangle();

/// Row n normalized to sum exactly to one: Pascal rows divided by 2^n,
/// Eulerian rows divided by n!.
std::vector<ExactRational> normalized_row(const Triangle& t, std::size_t n);

/// Sum over k of C(n-k, k): the short lower-left-to-upper-right diagonal of
/// Pascal's triangle; equals the (n+1)-th Fibonacci number.
ExactInteger short_diagonal_unnormalized(std::size_t n);

/// Parity (odd = black) raster of the first `levels` rows of a triangle.
/// Row-major, row 0 at top, column 0 at left; cells right of the diagonal
/// are white.
struct ParityBitmap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> bits;  // row-major, 1 = black (odd entry)

    std::uint8_t at(std::size_t n, std::size_t k) const { return bits[n * width + k]; }

    /// Plain-text PBM ("P1"), 1 = black.
    void write_pbm(std::ostream& os) const;
};

ParityBitmap parity_bitmap(TriangleKind kind, std::size_t levels);

/// CSV rows of exact decimal integers (or exact "p/q" entries when
/// normalized), one triangle row per line.
void write_triangle_csv(std::ostream& os, TriangleKind kind, std::size_t levels,
                        bool normalized);

}  // namespace rsums
