#include <doctest.h>

#include <algorithm>
#include <random>

#include "augnewton/matrix.hpp"

using namespace augnewton;

namespace {

VariableList xy() { return VariableList::split("x,y"); }

LaurentMatrix from_text(const VariableList& vars,
                        std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<LaurentPoly>> entries;
    for (const auto& row : rows) {
        std::vector<LaurentPoly> r;
        for (const char* t : row)
            r.push_back(parse_poly(t, vars));
        entries.push_back(std::move(r));
    }
    return LaurentMatrix(vars, std::move(entries));
}

LaurentMatrix alpha_matrix() { return from_text(xy(), {{"x + y", "1"}, {"x", "1"}}); }

LaurentPoly random_poly(std::mt19937& g, const VariableList& vars, int max_terms) {
    const int terms = static_cast<int>(g() % (max_terms + 1));
    std::vector<ExponentVector> support;
    for (int t = 0; t < terms; ++t) {
        std::vector<Exponent> e(vars.size());
        for (auto& x : e)
            x = static_cast<Exponent>(g() % 7) - 3;
        support.emplace_back(std::move(e));
    }
    return LaurentPoly(vars, std::move(support));
}

}  // namespace

TEST_CASE("matrix product") {
    VariableList vars = xy();
    LaurentMatrix a = from_text(vars, {{"x", "1"}, {"x", "1"}});
    CHECK(LaurentMatrix::identity(vars, 2) * a == a);
    CHECK(a * a == from_text(vars, {{"x^2 + x", "x + 1"}, {"x^2 + x", "x + 1"}}));
    LaurentMatrix swap = from_text(vars, {{"0", "1"}, {"1", "0"}});
    CHECK((swap * swap).is_identity());
    CHECK_THROWS_AS(a * LaurentMatrix(vars, 3), std::invalid_argument);
}

TEST_CASE("matrix powers of the model monodromy") {
    LaurentMatrix m = alpha_matrix();
    CHECK(pow(m, 0).is_identity());
    CHECK(pow(m, 2).at(0, 0) == parse_poly("x^2 + y^2 + x", xy()));
    CHECK(pow(m, 3).at(0, 0) == parse_poly("x^3 + x^2*y + x*y^2 + y^3 + x", xy()));

    // restricted at x = 0 the power is triangular with y^n in the corner
    LaurentMatrix restricted = from_text(xy(), {{"y", "1"}, {"0", "1"}});
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(pow(restricted, n).at(0, 0) == pow(parse_poly("y", xy()), n));
}

TEST_CASE("pow is additive in the exponent") {
    std::mt19937 g(23);
    VariableList vars = xy();
    for (int trial = 0; trial < 25; ++trial) {
        LaurentMatrix a(vars, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                a.set(r, c, random_poly(g, vars, 3));
        const unsigned m = g() % 5, n = g() % 5;
        CHECK(pow(a, m + n) == pow(a, m) * pow(a, n));
    }
}

TEST_CASE("upper-left entry contains x, x^n, y^n and no smaller y power") {
    LaurentMatrix step = alpha_matrix();
    LaurentMatrix acc = step;
    for (unsigned n = 1; n <= 40; ++n) {
        const auto& support = acc.at(0, 0).support();
        auto contains = [&](Exponent a, Exponent b) {
            ExponentVector e({a, b});
            return std::find(support.begin(), support.end(), e) != support.end();
        };
        CHECK(contains(1, 0));
        CHECK(contains(static_cast<Exponent>(n), 0));
        CHECK(contains(0, static_cast<Exponent>(n)));
        for (Exponent k = 0; k < static_cast<Exponent>(n); ++k)
            CHECK(!contains(0, k));
        acc = acc * step;
    }
}

TEST_CASE("conjugation verifies the inverse and acts as expected") {
    VariableList vars = xy();
    LaurentMatrix a = alpha_matrix();
    LaurentMatrix id = LaurentMatrix::identity(vars, 2);
    CHECK(conjugate(a, id, id) == a);

    LaurentMatrix u = from_text(vars, {{"1", "0"}, {"0", "y"}});
    LaurentMatrix u_inv = from_text(vars, {{"1", "0"}, {"0", "y^-1"}});
    CHECK(conjugate(a, u, u_inv) == from_text(vars, {{"x + y", "y"}, {"x*y^-1", "1"}}));
    CHECK_THROWS_AS(conjugate(a, u, u), VerificationError);
}

TEST_CASE("diagonal entries survive diag(1,u) conjugation of products") {
    std::mt19937 g(29);
    VariableList vars = xy();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Exponent> ue = {static_cast<Exponent>(g() % 7) - 3,
                                    static_cast<Exponent>(g() % 7) - 3};
        ExponentVector u(ue);
        LaurentMatrix plain = LaurentMatrix::identity(vars, 2);
        LaurentMatrix twisted = LaurentMatrix::identity(vars, 2);
        const int factors = 1 + g() % 4;
        for (int f = 0; f < factors; ++f) {
            LaurentMatrix m(vars, 2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    m.set(r, c, random_poly(g, vars, 3));
            LaurentMatrix mt = m;
            mt.set(0, 1, m.at(0, 1).times_monomial(u));
            mt.set(1, 0, m.at(1, 0).times_monomial(-u));
            plain = plain * m;
            twisted = twisted * mt;
        }
        CHECK(plain.at(0, 0) == twisted.at(0, 0));
        CHECK(plain.at(1, 1) == twisted.at(1, 1));
    }
}

TEST_CASE("factor_monomial") {
    VariableList vars = xy();
    LaurentMatrix id = LaurentMatrix::identity(vars, 2);
    MonomialFactorization f1 = factor_monomial(id);
    CHECK(f1.scalar.is_zero());
    CHECK(f1.reduced == id);

    LaurentMatrix m = from_text(vars, {{"x^2", "x^3"}, {"x^4", "x^2"}});
    MonomialFactorization f2 = factor_monomial(m);
    CHECK(f2.scalar == parse_poly("x^2", vars).support().front());
    CHECK(f2.reduced == from_text(vars, {{"1", "x"}, {"x^2", "1"}}));

    CHECK_THROWS_AS(factor_monomial(LaurentMatrix(vars, 2)), std::invalid_argument);
}

TEST_CASE("factor_monomial round-trips on random matrices") {
    std::mt19937 g(31);
    VariableList vars = xy();
    for (int trial = 0; trial < 100; ++trial) {
        LaurentMatrix m(vars, 2);
        bool zero = true;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                LaurentPoly p = random_poly(g, vars, 3);
                zero = zero && p.is_zero();
                m.set(r, c, std::move(p));
            }
        if (zero)
            continue;
        MonomialFactorization f = factor_monomial(m);
        CHECK(f.reduced.times_monomial(f.scalar) == m);
        bool has_one = false;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                for (const auto& e : f.reduced.at(r, c).support())
                    has_one = has_one || e.is_zero();
        CHECK(has_one);
    }
}

TEST_CASE("orbit_value") {
    VariableList vars = VariableList::split("s9,s11,s12,s13");
    LaurentMatrix n_mat = from_text(vars, {{"s11", "1"}, {"s9", "0"}});
    LaurentMatrix m1 = from_text(
        vars, {{"s12*s11^-1 + s11^-1*s9", "s9^-1"}, {"s12", "s9^-1*s11"}});

    // n = 0: the base augmented values
    CHECK(orbit_value(n_mat, m1, 0, 0) == parse_poly("s11", vars));
    CHECK(orbit_value(n_mat, m1, 0, 1) == parse_poly("s9", vars));
    // row 2 at n = 1 is s9 times the upper-left entry of m1
    CHECK(orbit_value(n_mat, m1, 1, 1) == parse_poly("s9", vars) * m1.at(0, 0));
    // stepping once from the n-1 result reproduces the n result
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(orbit_value(n_mat, m1, n, 1) == (n_mat * pow(m1, n)).at(1, 0));
    CHECK_THROWS_AS(orbit_value(n_mat, m1, 1, 2), std::invalid_argument);
}
