#include <doctest.h>

#include <random>

#include "augnewton/scenarios.hpp"

using namespace augnewton;

TEST_CASE("beta11 scenario reproduces its displays") {
    Scenario s = scenario_beta11();
    CHECK(s.vars.names() == std::vector<std::string>{"s9", "s11", "s12", "s13"});
    CHECK((s.base_n * s.base_n_inv).is_identity());
    CHECK(s.step_m1 == s.base_n_inv * s.monodromy * s.base_n);
    CHECK(s.reduced_step.times_monomial(s.scalar) == s.step_m1);
    CHECK(s.scalar == parse_poly("s9^-1*s11", s.vars).support().front());

    // base augmented values: (a11, a9) = N * e1
    CHECK(orbit_value(s.base_n, s.step_m1, 0, 0) == parse_poly("s11", s.vars));
    CHECK(orbit_value(s.base_n, s.step_m1, 0, 1) == parse_poly("s9", s.vars));
}

TEST_CASE("lambda1 scenario reproduces its displays") {
    Scenario s = scenario_lambda1();
    CHECK(s.vars.names() == std::vector<std::string>{"s4", "s9", "s10", "s12", "s13"});
    CHECK((s.base_n * s.base_n_inv).is_identity());
    CHECK(s.reduced_step.times_monomial(s.scalar) == s.step_m1);
    CHECK(s.scalar == parse_poly("s13", s.vars).support().front());

    CHECK(orbit_value(s.base_n, s.step_m1, 0, 0) ==
          parse_poly("s10 + s9*s13^-1", s.vars));
    CHECK(orbit_value(s.base_n, s.step_m1, 0, 1) == parse_poly("s9", s.vars));

    // one loop step: value of a9 becomes x*z*gamma^1 = x*z^-1 + y
    CHECK(orbit_value(s.base_n, s.step_m1, 1, 1) ==
          parse_poly("s9*s13^-1 + s10", s.vars));
    CHECK(orbit_value(s.base_n, s.step_m1, 1, 1).monomial_count() == 2);
}

TEST_CASE("orbit values agree along two evaluation paths") {
    for (const auto* name : {"beta11", "lambda1"}) {
        Scenario s = *scenario_by_name(name);
        // single-step iteration vs. power computation
        LaurentMatrix acca = LaurentMatrix::identity(s.vars, 2);
        for (unsigned n = 0; n <= 10; ++n) {
            CHECK(orbit_value(s.base_n, s.step_m1, n, 1) == (s.base_n * acca).at(1, 0));
            acca = acca * s.step_m1;
        }
        // direct monodromy application to the base column
        LaurentMatrix direct = s.base_n;  // columns (values, *)
        for (unsigned n = 1; n <= 6; ++n) {
            direct = s.monodromy * direct;
            CHECK(orbit_value(s.base_n, s.step_m1, n, 1) == direct.at(1, 0));
        }
    }
}

TEST_CASE("orbit values stay in factored form") {
    for (const auto* name : {"beta11", "lambda1"}) {
        Scenario s = *scenario_by_name(name);
        const LaurentPoly prefix = s.base_n.at(1, 0);  // the a9 base value
        LaurentMatrix reduced_power = LaurentMatrix::identity(s.vars, 2);
        for (unsigned n = 1; n <= 12; ++n) {
            reduced_power = reduced_power * s.reduced_step;
            LaurentPoly expected =
                (prefix * reduced_power.at(0, 0)).times_monomial(s.scalar.scaled(n));
            CHECK(orbit_value(s.base_n, s.step_m1, n, 1) == expected);
        }
    }
}

TEST_CASE("orbit hull vertices are the three stated monomials") {
    for (const auto* name : {"beta11", "lambda1"}) {
        Scenario s = *scenario_by_name(name);
        LaurentMatrix reduced_power = LaurentMatrix::identity(s.vars, 2);
        for (unsigned n = 1; n <= 20; ++n) {
            reduced_power = reduced_power * s.reduced_step;
            if (n < 2)
                continue;
            CHECK(newton_polytope(reduced_power.at(0, 0)).vertices == s.expected_hull(n));
        }
    }
}

TEST_CASE("the eliminated a19 value spans a planar triangle in Z^4") {
    Scenario s = scenario_beta11();
    LaurentPoly a19 = parse_poly("s12*s11^-1 + s11*s9^-1 + s11^-1*s9", s.vars);
    LatticePolytope poly = newton_polytope(a19);
    CHECK(poly.ambient_dim == 4);
    CHECK(poly.dim == 2);
    CHECK(poly.vertices.size() == 3);
}

TEST_CASE("orbit table totals, fingerprints and verdict") {
    Scenario s = scenario_beta11();
    auto rows = orbit_table(s, 8);
    REQUIRE(rows.size() == 8);
    CHECK(orbit_table(s, 1).size() == 1);
    // verified totals: n^2 + 1 for n >= 2 (5, 10, 17, 26, ...)
    CHECK(rows[0].fp.total == 2);
    CHECK(rows[1].fp.total == 5);
    CHECK(rows[2].fp.total == 10);
    CHECK(rows[3].fp.total == 17);
    CHECK(rows[4].fp.total == 26);
    CHECK(rows[1].fp.boundary == 4);
    CHECK(rows[2].fp.boundary == 6);
    CHECK(rows[2].fp.interior == 4);

    Verdict v = distinctness_verdict(rows);
    CHECK(v.distinct);
    CHECK(!v.witness);
    CHECK_THROWS_AS(distinctness_verdict({}), std::invalid_argument);

    auto twice = rows;
    twice.push_back(rows[3]);
    Verdict dup = distinctness_verdict(twice);
    CHECK(!dup.distinct);
    REQUIRE(dup.witness);
    CHECK(dup.witness->first == 3);
    CHECK(dup.witness->second == 8);
}

TEST_CASE("orbit monomial counts follow the model sequence") {
    const auto ref = alpha_sequence(12);
    for (const auto* name : {"beta11", "lambda1"}) {
        Scenario s = *scenario_by_name(name);
        auto rows = orbit_table(s, 12);
        for (unsigned n = 1; n <= 12; ++n)
            CHECK(rows[n - 1].monomials == ref[n - 1]);
    }
}

TEST_CASE("orbit fingerprints survive unimodular preprocessing") {
    std::mt19937 g(59);
    Scenario s = scenario_lambda1();
    const std::size_t k = s.vars.size();
    for (unsigned n : {2u, 5u, 9u}) {
        LaurentPoly value = orbit_value(s.base_n, s.step_m1, n, 1);
        IntMatrix a = IntMatrix::identity(k);
        for (int o = 0; o < 15; ++o) {
            std::size_t i = g() % k, j = g() % k;
            const std::int64_t f = (g() % 2) ? 1 : -1;
            if (i == j)
                continue;
            for (std::size_t c = 0; c < k; ++c)
                a.at(i, c) += f * a.at(j, c);
        }
        std::vector<Exponent> te(k);
        for (auto& x : te)
            x = static_cast<Exponent>(g() % 7) - 3;
        CHECK(fingerprint(apply_unimodular(value, a, ExponentVector(te))) ==
              fingerprint(value));
    }
}

TEST_CASE("scenario aliases share data") {
    CHECK(!scenario_by_name("unknown"));
    Scenario base = *scenario_by_name("beta11");
    Scenario alias = *scenario_by_name("beta11-nonorientable");
    CHECK(alias.name == "beta11-nonorientable");
    CHECK(alias.step_m1 == base.step_m1);
    CHECK(orbit_table(alias, 3)[2].fp == orbit_table(base, 3)[2].fp);
}

TEST_CASE("alpha sequence matches the embedded reference") {
    auto seq = alpha_sequence(40);
    const auto& ref = alpha_reference_sequence();
    REQUIRE(ref.size() == 40);
    CHECK(seq == ref);
    CHECK(seq[0] == 2);
    CHECK(seq[6] == 14);
    CHECK(seq[9] == 14);
    CHECK(seq[30] == 122);
    CHECK(seq[31] == 123);
    CHECK(seq[39] == 98);
    CHECK(alpha_sequence(1) == std::vector<std::size_t>{2});
}

TEST_CASE("torus instances") {
    TorusInstance t32 = torus_value(3, 2);
    CHECK(render(t32.value) == "s1^-1*s3^-1 + s1^-1 + s3^-1");
    CHECK(torus_simplex_check(t32));
    CHECK(t32.s == IntMatrix{{0, 1}, {1, 0}});

    // first-crossing pinch degenerates to the right sum only
    TorusInstance t31 = torus_value(3, 1);
    CHECK(t31.value.monomial_count() == 3);
    CHECK(torus_simplex_check(t31));

    for (unsigned i = 1; i <= 5; ++i) {
        TorusInstance t = torus_value(5, i);
        BigInt det = det_bareiss(t.s);
        CHECK((det == 1 || det == -1));
        CHECK((t.s * t.s_inv).is_identity());
        CHECK(torus_simplex_check(t));
    }

    // doubling one exponent vector breaks standardness (edge det becomes ±2)
    TorusInstance t = torus_value(5, 3);
    std::vector<ExponentVector> bent;
    for (const auto& e : t.value.support())
        bent.push_back(bent.empty() ? e.scaled(2) : e);
    LatticePolytope poly = newton_polytope(LaurentPoly(t.vars, bent));
    REQUIRE(poly.reduced_vertices.size() == static_cast<std::size_t>(poly.dim) + 1);
    CHECK(!is_simplex_unimodular_standard(poly));

    CHECK_THROWS_AS(torus_value(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(torus_value(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(torus_value(5, 0), std::invalid_argument);
}
