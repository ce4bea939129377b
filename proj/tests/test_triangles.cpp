#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "rsums/triangles.hpp"

using namespace rsums;

TEST_CASE("binomial point values") {
    CHECK(binomial(4, 2) == ExactInteger(6L));
    CHECK(binomial(8, 4) == ExactInteger(70L));
    CHECK(binomial(3, 5) == ExactInteger(0L));
    CHECK(binomial(0, 0) == ExactInteger(1L));
}

TEST_CASE("eulerian point values") {
    CHECK(eulerian(4, 1) == ExactInteger(11L));
    CHECK(eulerian(8, 3) == ExactInteger(15619L));
    CHECK(eulerian(5, 5) == ExactInteger(0L));
    CHECK(eulerian(0, 0) == ExactInteger(1L));
    CHECK(eulerian(6, 2) == ExactInteger(302L));
}

TEST_CASE("pascal triangle rows replay the multiplicative binomial") {
    Triangle t(TriangleKind::pascal);
    for (std::size_t n = 0; n <= 200; ++n) {
        const auto& row = t.row(n);
        REQUIRE(row.size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k) CHECK(row[k] == binomial(n, k));
    }
}

TEST_CASE("row symmetry") {
    Triangle p(TriangleKind::pascal);
    const Triangle& e = shared_eulerian_triangle();
    for (std::size_t n = 0; n <= 200; ++n) {
        for (std::size_t k = 0; k <= n; ++k) CHECK(p.entry(n, k) == p.entry(n, n - k));
        if (n >= 1)
            for (std::size_t k = 0; k <= n - 1; ++k)
                CHECK(e.entry(n, k) == e.entry(n, n - 1 - k));
    }
}

TEST_CASE("eulerian cache replays its recurrence row by row") {
    const Triangle& e = shared_eulerian_triangle();
    for (std::size_t n = 1; n <= 120; ++n) {
        const auto& prev = e.row(n - 1);
        const auto& cur = e.row(n);
        for (std::size_t k = 0; k <= n; ++k) {
            ExactInteger expect(0L);
            if (k < prev.size()) {
                ExactInteger a = prev[k];
                a *= static_cast<unsigned long>(k + 1);
                expect += a;
            }
            if (k >= 1) {
                ExactInteger b = prev[k - 1];
                b *= static_cast<unsigned long>(n - k);
                expect += b;
            }
            CHECK(cur[k] == expect);
        }
    }
}

TEST_CASE("eulerian rows sum to n!") {
    const Triangle& e = shared_eulerian_triangle();
    for (std::size_t n = 0; n <= 200; ++n) {
        ExactInteger s(0L);
        for (const auto& v : e.row(n)) s += v;
        CHECK(s == ExactInteger::factorial(n));
    }
}

TEST_CASE("normalized rows sum exactly to one") {
    Triangle p(TriangleKind::pascal);
    Triangle e(TriangleKind::eulerian);
    for (std::size_t n = 0; n <= 200; ++n) {
        for (const Triangle* t : {&p, &e}) {
            ExactRational s(0L);
            for (const auto& v : normalized_row(*t, n)) s += v;
            CHECK(s == ExactRational(1L));
        }
    }
}

TEST_CASE("normalized row examples") {
    Triangle p(TriangleKind::pascal);
    auto r2 = normalized_row(p, 2);
    CHECK(r2 == std::vector<ExactRational>{{1L, 4UL}, {1L, 2UL}, {1L, 4UL}});
    Triangle e(TriangleKind::eulerian);
    auto r3 = normalized_row(e, 3);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0] == ExactRational(1L, 6UL));
    CHECK(r3[1] == ExactRational(4L, 6UL));
    CHECK(r3[2] == ExactRational(1L, 6UL));
    CHECK(r3[3] == ExactRational(0L));
    CHECK(normalized_row(e, 0) == std::vector<ExactRational>{ExactRational(1L)});
}

TEST_CASE("short diagonals are Fibonacci") {
    CHECK(short_diagonal_unnormalized(0) == ExactInteger(1L));
    CHECK(short_diagonal_unnormalized(1) == ExactInteger(1L));
    CHECK(short_diagonal_unnormalized(2) == ExactInteger(2L));
    CHECK(short_diagonal_unnormalized(6) == ExactInteger(13L));
    CHECK(short_diagonal_unnormalized(30) == ExactInteger(1346269L));
    for (std::size_t n = 2; n <= 300; ++n)
        CHECK(short_diagonal_unnormalized(n) ==
              short_diagonal_unnormalized(n - 1) + short_diagonal_unnormalized(n - 2));
    for (std::size_t n = 0; n <= 300; n += 37)
        CHECK(short_diagonal_unnormalized(n) == oracle::fibonacci(n));
}

TEST_CASE("pascal parity matches the Lucas oracle up to level 512") {
    ParityBitmap bm = parity_bitmap(TriangleKind::pascal, 512);
    REQUIRE(bm.width == 512);
    REQUIRE(bm.height == 512);
    for (std::size_t n = 0; n < 512; ++n)
        for (std::size_t k = 0; k < 512; ++k) {
            const bool expect = k <= n && oracle::pascal_parity(n, k);
            CHECK(bm.at(n, k) == (expect ? 1 : 0));
        }
}

TEST_CASE("parity equals exact entries mod 2 (both kinds)") {
    for (TriangleKind kind : {TriangleKind::pascal, TriangleKind::eulerian}) {
        ParityBitmap bm = parity_bitmap(kind, 64);
        Triangle t(kind);
        for (std::size_t n = 0; n < 64; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(bm.at(n, k) == (t.entry(n, k).is_odd() ? 1 : 0));
    }
}

TEST_CASE("parity patterns of the first levels") {
    ParityBitmap p4 = parity_bitmap(TriangleKind::pascal, 4);
    const std::uint8_t expect_p[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t k = 0; k < 4; ++k) CHECK(p4.at(n, k) == expect_p[n][k]);

    ParityBitmap e3 = parity_bitmap(TriangleKind::eulerian, 3);
    const std::uint8_t expect_e[3][3] = {{1, 0, 0}, {1, 0, 0}, {1, 1, 0}};
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t k = 0; k < 3; ++k) CHECK(e3.at(n, k) == expect_e[n][k]);
}

TEST_CASE("pbm serialization") {
    ParityBitmap bm = parity_bitmap(TriangleKind::pascal, 3);
    std::ostringstream os;
    bm.write_pbm(os);
    CHECK(os.str() == "P1\n3 3\n1 0 0\n1 1 0\n1 0 1\n");
}

TEST_CASE("csv serialization") {
    std::ostringstream os;
    write_triangle_csv(os, TriangleKind::eulerian, 4, false);
    CHECK(os.str() == "1\n1,0\n1,1,0\n1,4,1,0\n");
    std::ostringstream os2;
    write_triangle_csv(os2, TriangleKind::pascal, 3, true);
    CHECK(os2.str() == "1\n1/2,1/2\n1/4,1/2,1/4\n");
}

TEST_CASE("rejects zero levels") {
    CHECK_THROWS_AS(parity_bitmap(TriangleKind::pascal, 0), std::domain_error);
}
