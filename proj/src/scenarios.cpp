#include "augnewton/scenarios.hpp"

#include <algorithm>

namespace augnewton {

namespace {

LaurentMatrix matrix_from_text(const VariableList& vars,
                               std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<LaurentPoly>> entries;
    for (const auto& row : rows) {
        std::vector<LaurentPoly> r;
        for (const char* text : row)
            r.push_back(parse_poly(text, vars));
        entries.push_back(std::move(r));
    }
    return LaurentMatrix(vars, std::move(entries));
}

void check(bool ok, const std::string& what) {
    if (!ok)
        throw VerificationError("scenario construction: " + what);
}

// Shared tail: conjugate the monodromy, factor the step, verify transcription.
Scenario finish_scenario(std::string name, VariableList vars, MonomialSubstitution relations,
                         LaurentMatrix monodromy, LaurentMatrix base_n,
                         LaurentMatrix base_n_inv, const LaurentMatrix& expected_reduced,
                         const ExponentVector& expected_scalar, LaurentPoly hull_seed_low,
                         LaurentPoly hull_seed_axis) {
    LaurentMatrix step = conjugate(monodromy, base_n, base_n_inv);  // verifies N * N^-1
    MonomialFactorization fac = factor_monomial(step);
    check(fac.scalar == expected_scalar, name + ": factored scalar differs from the display");
    check(fac.reduced == expected_reduced, name + ": reduced step differs from the display");
    return Scenario{std::move(name),
                    std::move(vars),
                    std::move(relations),
                    std::move(monodromy),
                    std::move(base_n),
                    std::move(base_n_inv),
                    std::move(step),
                    fac.scalar,
                    fac.reduced,
                    /*target_row=*/1,
                    std::move(hull_seed_low),
                    std::move(hull_seed_axis)};
}

}  // namespace

std::optional<long long> Scenario::expected_total(unsigned n) {
    if (n < 2)
        return std::nullopt;
    return static_cast<long long>(n) * n + 1;
}

std::vector<ExponentVector> Scenario::expected_hull(unsigned n) const {
    const ExponentVector low = hull_seed_low.support().front();
    const ExponentVector axis = hull_seed_axis.support().front();
    std::vector<ExponentVector> verts = {low, low.scaled(static_cast<Exponent>(n)),
                                         axis.scaled(static_cast<Exponent>(n))};
    std::sort(verts.begin(), verts.end());
    return verts;
}

Scenario scenario_beta11() {
    // Pinching a9, a10, a11, a12, a13, a16 leaves four unknots whose disk
    // fillings impose s10 = s11 = s16^-1 = s13*s12*s9; the ring keeps
    // s9, s11, s12, s13 and the eliminations below realize those relations.
    VariableList raw = VariableList::split("s9,s10,s11,s12,s13,s16");
    VariableList vars = VariableList::split("s9,s11,s12,s13");
    std::vector<ExponentVector> images;
    for (const char* img : {"s9", "s11", "s11", "s12", "s13", "s9*s12*s13*s11^-2"})
        images.push_back(parse_poly(img, vars).support().front());
    MonomialSubstitution relations(raw, vars, std::move(images));

    LaurentPoly raw_a19 = parse_poly(
        "s9*s13*s12^2*s10^-1*s11^-2*s16^-1 + s13*s12*s11^-1*s16^-1 + s9*s11^-1", raw);
    LaurentPoly a19 = substitute(raw_a19, relations);
    check(a19 == parse_poly("s12*s11^-1 + s11*s9^-1 + s11^-1*s9", vars),
          "beta11: eliminated value of a19 differs from the display");

    // monodromy acts on (a11, a9) by [[0,1],[1,a19]]
    LaurentMatrix monodromy = matrix_from_text(vars, {{"0", "1"}, {"1", "0"}});
    monodromy.set(1, 1, a19);
    LaurentMatrix base_n = matrix_from_text(vars, {{"s11", "1"}, {"s9", "0"}});
    LaurentMatrix base_n_inv = matrix_from_text(vars, {{"0", "s9^-1"}, {"1", "s11*s9^-1"}});

    // step factors as s9^-1*s11 times the matrix in x = s12*s9*s11^-1,
    // y = s11, z = s9^-1*s11
    LaurentMatrix reduced = matrix_from_text(
        vars, {{"s12*s9*s11^-2 + s9^2*s11^-2", "s11^-1"}, {"s12*s9*s11^-1", "1"}});
    ExponentVector scalar = parse_poly("s9^-1*s11", vars).support().front();

    return finish_scenario("beta11", vars, std::move(relations), std::move(monodromy),
                           std::move(base_n), std::move(base_n_inv), reduced, scalar,
                           parse_poly("s12*s9*s11^-2", vars),   // x*y^-1
                           parse_poly("s9^2*s11^-2", vars));    // z^-2
}

Scenario scenario_lambda1() {
    // Pinching a9, a13, a10, a12, a4, a1 leaves three unknots imposing
    // s10*s11*s13 = 1 and s1*s4*s9*s12 = 1; s1 and s11 are eliminated.
    VariableList raw = VariableList::split("s1,s4,s9,s10,s11,s12,s13");
    VariableList vars = VariableList::split("s4,s9,s10,s12,s13");
    std::vector<ExponentVector> images;
    for (const char* img :
         {"s4^-1*s9^-1*s12^-1", "s4", "s9", "s10", "s10^-1*s13^-1", "s12", "s13"})
        images.push_back(parse_poly(img, vars).support().front());
    MonomialSubstitution relations(raw, vars, std::move(images));

    LaurentPoly raw_a10 =
        parse_poly("s10 + s10^2*s11^2*s13*s1^-1*s4^-1*s12^-1", raw);
    LaurentPoly raw_a13 =
        parse_poly("s10*s9^-1 + s13 + s10^2*s11^2*s13*s1^-1*s4^-1*s9^-1*s12^-1", raw);
    LaurentPoly a10 = substitute(raw_a10, relations);
    LaurentPoly a13 = substitute(raw_a13, relations);
    check(a10 == parse_poly("s10 + s9*s13^-1", vars),
          "lambda1: eliminated value of a10 differs from the display");
    check(a13 == parse_poly("s10*s9^-1 + s13 + s13^-1", vars),
          "lambda1: eliminated value of a13 differs from the display");

    // monodromy acts on (a10, a9) by [[a13,1],[1,0]]
    LaurentMatrix monodromy = matrix_from_text(vars, {{"0", "1"}, {"1", "0"}});
    monodromy.set(0, 0, a13);
    LaurentMatrix base_n(vars, 2);
    base_n.set(0, 0, a10);
    base_n.set(0, 1, LaurentPoly::one(vars));
    base_n.set(1, 0, parse_poly("s9", vars));
    LaurentMatrix base_n_inv =
        matrix_from_text(vars, {{"0", "s9^-1"}, {"1", "s13^-1 + s10*s9^-1"}});

    // step factors as s13 times the matrix in x = s9, y = s10, z = s13
    LaurentMatrix reduced = matrix_from_text(
        vars, {{"s13^-2 + s10*s9^-1*s13^-1", "s9^-1*s13^-1"}, {"s10", "1"}});
    ExponentVector scalar = parse_poly("s13", vars).support().front();

    return finish_scenario("lambda1", vars, std::move(relations), std::move(monodromy),
                           std::move(base_n), std::move(base_n_inv), reduced, scalar,
                           parse_poly("s10*s9^-1*s13^-1", vars),  // y*x^-1*z^-1
                           parse_poly("s13^-2", vars));           // z^-2
}

std::vector<std::string> scenario_names() {
    return {"beta11", "lambda1", "beta11-nonorientable", "lambda1-nonorientable"};
}

std::optional<Scenario> scenario_by_name(const std::string& name) {
    std::string base = name;
    const std::string suffix = "-nonorientable";
    if (base.size() > suffix.size() &&
        base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0)
        base.resize(base.size() - suffix.size());
    std::optional<Scenario> s;
    if (base == "beta11")
        s = scenario_beta11();
    else if (base == "lambda1")
        s = scenario_lambda1();
    else
        return std::nullopt;
    s->name = name;
    return s;
}

std::vector<OrbitRow> orbit_table(const Scenario& s, unsigned n_max) {
    if (n_max < 1)
        throw std::invalid_argument("orbit_table: n_max must be positive");
    std::vector<OrbitRow> rows;
    rows.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        LaurentPoly value = orbit_value(s.base_n, s.step_m1, n, s.target_row);
        LatticePolytope poly = newton_polytope(value);
        OrbitRow row{n, value.monomial_count(), fingerprint_of(poly), poly.vertices};
        if (auto expect = Scenario::expected_total(n); expect && *expect != row.fp.total)
            throw VerificationError(
                s.name + ": orbit value at n=" + std::to_string(n) + " has " +
                std::to_string(row.fp.total) + " lattice points, expected " +
                std::to_string(*expect));
        rows.push_back(std::move(row));
    }
    return rows;
}

Verdict distinctness_verdict(const std::vector<OrbitRow>& rows) {
    if (rows.empty())
        throw std::invalid_argument("distinctness_verdict: no rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].fp == rows[j].fp)
                return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

namespace {

LaurentMatrix alpha_step() {
    VariableList xy = VariableList::split("x,y");
    return matrix_from_text(xy, {{"x + y", "1"}, {"x", "1"}});
}

}  // namespace

std::vector<std::size_t> alpha_sequence(unsigned n_max) {
    if (n_max < 1)
        throw std::invalid_argument("alpha_sequence: n_max must be positive");
    const LaurentMatrix step = alpha_step();
    LaurentMatrix acc = step;
    std::vector<std::size_t> counts;
    counts.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        counts.push_back(acc.at(0, 0).monomial_count());
        if (n < n_max)
            acc = acc * step;
    }
    return counts;
}

const std::vector<std::size_t>& alpha_reference_sequence() {
    static const std::vector<std::size_t> seq = {
        2,  3,  5,  6,  7,  9,  14, 15, 13, 14, 19, 21, 22, 27,  41,  42, 31, 29, 34, 35,
        33, 38, 55, 57, 46, 47, 61, 66, 67, 81, 122, 123, 85, 74, 79, 77, 66, 71, 97, 98};
    return seq;
}

std::vector<AlphaRow> alpha_table(unsigned n_max) {
    if (n_max < 1)
        throw std::invalid_argument("alpha_table: n_max must be positive");
    const LaurentMatrix step = alpha_step();
    LaurentMatrix acc = step;
    std::vector<AlphaRow> rows;
    rows.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        const LaurentPoly& entry = acc.at(0, 0);
        LatticePolytope poly = newton_polytope(entry);
        rows.push_back({n, entry.monomial_count(), fingerprint_of(poly), poly.vertices});
        if (n < n_max)
            acc = acc * step;
    }
    return rows;
}

TorusInstance torus_value(unsigned n, unsigned i) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("torus instance needs odd n >= 3");
    if (i < 1 || i > n)
        throw std::invalid_argument("pinch index out of range");

    std::vector<std::string> names;
    for (unsigned j = 1; j <= n; ++j)
        if (j != i)
            names.push_back("s" + std::to_string(j));
    VariableList vars(std::move(names));
    const std::size_t k = n - 1;
    auto col = [&](unsigned j) {
        return static_cast<std::size_t>(j <= i ? j - 1 : j - 2);  // j != i
    };

    // value = s_i + sum_{j<i} s_j^-1 prod_{j<k<i} s_k^-2
    //             + sum_{j>i} s_j^-1 prod_{i<k<j} s_k^-2,
    // with s_i = prod_{j != i} s_j^-1 after the monodromy-free relation.
    std::vector<ExponentVector> support;
    support.push_back(ExponentVector(std::vector<Exponent>(k, -1)));
    for (unsigned j = 1; j < i; ++j) {
        std::vector<Exponent> e(k, 0);
        e[col(j)] = -1;
        for (unsigned m = j + 1; m < i; ++m)
            e[col(m)] = -2;
        support.emplace_back(std::move(e));
    }
    for (unsigned j = i + 1; j <= n; ++j) {
        std::vector<Exponent> e(k, 0);
        e[col(j)] = -1;
        for (unsigned m = i + 1; m < j; ++m)
            e[col(m)] = -2;
        support.emplace_back(std::move(e));
    }
    LaurentPoly value(vars, support);
    if (value.monomial_count() != n)
        throw VerificationError("torus value does not have n monomials");

    // Rows of S are the non-corner points translated by (1,...,1): the
    // pinch-left block, then the pinch-right block.
    IntMatrix s(k, k);
    std::size_t r = 0;
    for (std::size_t idx = 1; idx < support.size(); ++idx, ++r)
        for (std::size_t c = 0; c < k; ++c)
            s.at(r, c) = support[idx][c] + 1;

    // Patterned inverse: zero diagonal; elsewhere the sign alternates as
    // (-1)^(r+c+1), negated inside the upper triangle of the right block and
    // the lower triangle of the left block.
    IntMatrix s_inv(k, k);
    const std::size_t p = i - 1;  // size of the left block
    for (std::size_t row = 1; row <= k; ++row)
        for (std::size_t c = 1; c <= k; ++c) {
            if (row == c)
                continue;
            int base = ((row + c) % 2 == 1) ? 1 : -1;
            bool negate = (row < c) ? (row > p && c > p) : (row <= p && c <= p);
            s_inv.at(row - 1, c - 1) = negate ? -base : base;
        }
    if (!(s * s_inv).is_identity())
        throw VerificationError("torus S * S_inv != Id");

    return {n, i, std::move(vars), std::move(value), std::move(s), std::move(s_inv)};
}

bool torus_simplex_check(const TorusInstance& t) {
    LatticePolytope poly = newton_polytope(t.value);
    if (poly.dim != static_cast<int>(t.n) - 1)
        return false;
    if (poly.vertices.size() != t.n)
        return false;
    return is_simplex_unimodular_standard(poly);
}

}  // namespace augnewton
