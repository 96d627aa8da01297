#include <doctest.h>

#include <random>

#include "augnewton/intmat.hpp"

using namespace augnewton;

namespace {

IntMatrix random_matrix(std::mt19937& g, std::size_t rows, std::size_t cols, int span) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = static_cast<std::int64_t>(g() % (2 * span + 1)) - span;
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(det_bareiss(IntMatrix::identity(3)) == 1);
    CHECK(det_bareiss(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_bareiss(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(det_bareiss(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative on random inputs") {
    std::mt19937 g(3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(g, 4, 4, 4);
        IntMatrix b = random_matrix(g, 4, 4, 4);
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("hnf fixed points and contract") {
    auto [h1, u1] = hnf(IntMatrix::identity(3));
    CHECK(h1 == IntMatrix::identity(3));
    CHECK(u1 == IntMatrix::identity(3));

    IntMatrix diag{{2, 0}, {0, 3}};
    auto [h2, u2] = hnf(diag);
    CHECK(h2 == diag);
    CHECK(u2 == IntMatrix::identity(2));
}

TEST_CASE("hnf satisfies u * m == h with unimodular u") {
    std::mt19937 g(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 2 + g() % 3, cols = 2 + g() % 3;
        IntMatrix m = random_matrix(g, rows, cols, 6);
        auto [h, u] = hnf(m);
        CHECK(u * m == h);
        CHECK(is_unimodular(u));
        // echelon: each row's leading column strictly to the right of the previous
        std::int64_t prev_lead = -1;
        for (std::size_t r = 0; r < rows; ++r) {
            std::int64_t lead = -1;
            for (std::size_t c = 0; c < cols; ++c)
                if (h.at(r, c) != 0) {
                    lead = static_cast<std::int64_t>(c);
                    break;
                }
            if (lead == -1)
                continue;
            CHECK(lead > prev_lead);
            prev_lead = lead;
            CHECK(h.at(r, static_cast<std::size_t>(lead)) > 0);
            for (std::size_t rr = 0; rr < r; ++rr) {
                CHECK(h.at(rr, static_cast<std::size_t>(lead)) >= 0);
                CHECK(h.at(rr, static_cast<std::size_t>(lead)) <
                      h.at(r, static_cast<std::size_t>(lead)));
            }
        }
    }
}

TEST_CASE("hnf rank of the stated difference vectors") {
    // differences of {(1,-1,0), (n,-n,0), (0,0,-2n)} at n = 2
    IntMatrix diffs{{1, -1, 0}, {-1, 1, -4}};
    auto [h, u] = hnf(diffs);
    int rank = 0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (h.at(r, c) != 0) {
                ++rank;
                break;
            }
    CHECK(rank == 2);
}

TEST_CASE("column echelon: transforms invert, rank is correct") {
    std::mt19937 g(9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + g() % 4, cols = 1 + g() % 4;
        IntMatrix m = random_matrix(g, rows, cols, 5);
        ColumnEchelonResult ce = column_echelon(m);
        CHECK((ce.v * ce.v_inv).is_identity());
        CHECK((ce.v_inv * ce.v).is_identity());
        IntMatrix e = m * ce.v;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = static_cast<std::size_t>(ce.rank); c < cols; ++c)
                CHECK(e.at(r, c) == 0);
    }
}

TEST_CASE("column echelon saturates: primitive direction recovered") {
    // row space spanned by (2,2) and (4,4); the saturation is generated by (1,1)
    IntMatrix m{{2, 2}, {4, 4}};
    ColumnEchelonResult ce = column_echelon(m);
    CHECK(ce.rank == 1);
    const std::int64_t a = ce.v_inv.at(0, 0), b = ce.v_inv.at(0, 1);
    CHECK(a == b);
    CHECK((a == 1 || a == -1));
}
