#include "augnewton/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "augnewton/scenarios.hpp"

namespace augnewton {

namespace {

// Wrapper so randomized suites are byte-for-byte reproducible: mt19937 output
// is pinned by the standard, std::uniform_int_distribution is not.
struct Rng {
    explicit Rng(std::uint32_t seed) : g(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(g() % static_cast<std::uint32_t>(hi - lo + 1));
    }
    std::mt19937 g;
};

LaurentPoly random_poly(Rng& rng, const VariableList& vars, int min_terms, int max_terms,
                        int max_abs_exp) {
    const int terms = rng.uniform(min_terms, max_terms);
    std::vector<ExponentVector> support;
    for (int t = 0; t < terms; ++t) {
        std::vector<Exponent> e(vars.size());
        for (auto& x : e)
            x = rng.uniform(-max_abs_exp, max_abs_exp);
        support.emplace_back(std::move(e));
    }
    return LaurentPoly(vars, std::move(support));
}

LaurentPoly random_nonzero_poly(Rng& rng, const VariableList& vars, int max_terms,
                                int max_abs_exp) {
    while (true) {
        LaurentPoly p = random_poly(rng, vars, 1, max_terms, max_abs_exp);
        if (!p.is_zero())
            return p;
    }
}

CriterionResult run_protected(int id, const std::string& name,
                              const std::function<CriterionResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {id, name, false, std::string("exception: ") + e.what()};
    }
}

CriterionResult criterion_alpha_sequence() {
    const auto seq = alpha_sequence(40);
    const auto& ref = alpha_reference_sequence();
    for (std::size_t i = 0; i < ref.size(); ++i)
        if (seq[i] != ref[i])
            return {1, "alpha monomial sequence", false,
                    "n=" + std::to_string(i + 1) + ": computed " + std::to_string(seq[i]) +
                        ", reference " + std::to_string(ref[i])};
    return {1, "alpha monomial sequence", true, "all 40 values match the reference"};
}

CriterionResult criterion_alpha_fingerprints() {
    const auto rows = alpha_table(30);
    for (unsigned n = 2; n <= 30; ++n) {
        const Fingerprint& fp = rows[n - 1].fp;
        const long long ln = n;
        Fingerprint want;
        want.intrinsic_dim = 2;
        want.total = ln * (ln + 1) / 2 + 1;
        want.boundary = 2 * ln;
        want.interior = (ln * ln - 3 * ln) / 2 + 1;
        want.normalized_volume = ln * (ln - 1);
        if (!(fp == want))
            return {2, "alpha fingerprint closed forms", false,
                    "mismatch at n=" + std::to_string(n) + ": total " +
                        std::to_string(fp.total) + " vs " + std::to_string(want.total)};
    }
    return {2, "alpha fingerprint closed forms", true, "n=2..30 all match"};
}

CriterionResult criterion_orbit(int id, const Scenario& s) {
    std::ostringstream detail;
    bool passed = true;

    // totals clause, verbatim: n^2 + n - 1 for 2 <= n <= 20
    std::vector<OrbitRow> rows;
    rows.reserve(20);
    LaurentMatrix reduced_power = LaurentMatrix::identity(s.vars, 2);
    const LaurentPoly prefix = s.base_n.at(s.target_row, 0);
    bool totals_ok = true, hull_ok = true, factored_ok = true;
    std::string totals_note, hull_note;
    for (unsigned n = 1; n <= 20; ++n) {
        reduced_power = reduced_power * s.reduced_step;
        LaurentPoly value = orbit_value(s.base_n, s.step_m1, n, s.target_row);
        LatticePolytope poly = newton_polytope(value);
        rows.push_back({n, value.monomial_count(), fingerprint_of(poly), poly.vertices});

        if (n >= 2) {
            const long long claimed = static_cast<long long>(n) * n + n - 1;
            if (rows.back().fp.total != claimed && totals_ok) {
                totals_ok = false;
                totals_note = "first at n=" + std::to_string(n) + ": measured " +
                              std::to_string(rows.back().fp.total) + ", criterion claims " +
                              std::to_string(claimed);
            }
            const LaurentPoly& entry = reduced_power.at(0, 0);
            if (newton_polytope(entry).vertices != s.expected_hull(n) && hull_ok) {
                hull_ok = false;
                hull_note = "hull vertices differ at n=" + std::to_string(n);
            }
        }
        // value must equal prefix * scalar^n * (reduced^n)[0][0] exactly
        LaurentPoly factored =
            (prefix * reduced_power.at(0, 0)).times_monomial(s.scalar.scaled(n));
        if (value != factored)
            factored_ok = false;
    }
    Verdict verdict = distinctness_verdict(rows);

    if (!totals_ok) {
        passed = false;
        detail << "totals clause (n^2+n-1) FAILED: " << totals_note << "; ";
    } else {
        detail << "totals clause ok; ";
    }
    if (!hull_ok || !factored_ok) {
        passed = false;
        detail << "hull clause FAILED: " << (hull_ok ? "factored form differs" : hull_note)
               << "; ";
    } else {
        detail << "hull vertices ok for n=2..20; ";
    }
    if (!verdict.distinct) {
        passed = false;
        detail << "distinctness FAILED";
    } else {
        detail << "all 20 fingerprints pairwise distinct";
    }
    return {id, s.name + " orbit", passed, detail.str()};
}

CriterionResult criterion_torus() {
    int instances = 0;
    for (unsigned n = 3; n <= 13; n += 2)
        for (unsigned i = 1; i <= n; ++i) {
            TorusInstance t = torus_value(n, i);  // verifies n monomials, S*S_inv == Id
            if (!(t.s * t.s_inv).is_identity())
                return {5, "torus knot simplices", false,
                        "S*S_inv != Id at n=" + std::to_string(n) + ", i=" + std::to_string(i)};
            BigInt det = det_bareiss(t.s);
            if (det != 1 && det != -1)
                return {5, "torus knot simplices", false,
                        "|det S| != 1 at n=" + std::to_string(n) + ", i=" + std::to_string(i)};
            if (!torus_simplex_check(t))
                return {5, "torus knot simplices", false,
                        "not a standard simplex at n=" + std::to_string(n) +
                            ", i=" + std::to_string(i)};
            ++instances;
        }
    return {5, "torus knot simplices", true,
            std::to_string(instances) + " (n,i) instances verified"};
}

CriterionResult criterion_conjugation() {
    Rng rng(0xC0417u);
    VariableList vars = VariableList::split("x,y");
    for (int trial = 0; trial < 500; ++trial) {
        const int factors = rng.uniform(1, 4);
        std::vector<Exponent> ue(2);
        ue[0] = rng.uniform(-3, 3);
        ue[1] = rng.uniform(-3, 3);
        ExponentVector u(ue);
        LaurentMatrix plain = LaurentMatrix::identity(vars, 2);
        LaurentMatrix twisted = LaurentMatrix::identity(vars, 2);
        for (int f = 0; f < factors; ++f) {
            LaurentMatrix m(vars, 2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    m.set(r, c, random_poly(rng, vars, 0, 3, 3));
            LaurentMatrix mt(vars, 2);
            mt.set(0, 0, m.at(0, 0));
            mt.set(0, 1, m.at(0, 1).times_monomial(u));
            mt.set(1, 0, m.at(1, 0).times_monomial(-u));
            mt.set(1, 1, m.at(1, 1));
            plain = plain * m;
            twisted = twisted * mt;
        }
        if (plain.at(0, 0) != twisted.at(0, 0) || plain.at(1, 1) != twisted.at(1, 1))
            return {6, "conjugation diagonal invariance", false,
                    "diagonal changed at trial " + std::to_string(trial)};
    }
    return {6, "conjugation diagonal invariance", true, "500 random products verified"};
}

CriterionResult criterion_unimodular() {
    Rng rng(0x51AB3u);
    long long pick_checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = rng.uniform(1, 3);
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i)
            names.push_back("v" + std::to_string(i + 1));
        VariableList vars(names);
        LaurentPoly p = random_nonzero_poly(rng, vars, 8, 4);

        IntMatrix a = IntMatrix::identity(k);
        const int ops = rng.uniform(0, k == 3 ? 12 : 20);
        for (int o = 0; o < ops; ++o) {
            const int kind = rng.uniform(0, 2);
            if (kind == 0 && k >= 2) {
                int i = rng.uniform(0, k - 1), j = rng.uniform(0, k - 1);
                if (i == j)
                    continue;
                const int f = rng.uniform(0, 1) ? 1 : -1;
                for (int c = 0; c < k; ++c)
                    a.at(i, c) += f * a.at(j, c);
            } else if (kind == 1 && k >= 2) {
                int i = rng.uniform(0, k - 1), j = rng.uniform(0, k - 1);
                for (int c = 0; c < k; ++c)
                    std::swap(a.at(i, c), a.at(j, c));
            } else {
                int i = rng.uniform(0, k - 1);
                for (int c = 0; c < k; ++c)
                    a.at(i, c) = -a.at(i, c);
            }
        }
        std::vector<Exponent> te(k);
        for (auto& x : te)
            x = rng.uniform(-5, 5);
        ExponentVector t(te);

        Fingerprint before = fingerprint(p);
        Fingerprint after = fingerprint(apply_unimodular(p, a, t));
        if (!(before == after))
            return {7, "unimodular fingerprint invariance", false,
                    "fingerprint changed at trial " + std::to_string(trial)};
        // Pick's identity is also asserted inside fingerprint_of for d == 2
        if (before.intrinsic_dim == 2)
            ++pick_checked;
    }
    return {7, "unimodular fingerprint invariance", true,
            "1000 triples invariant; Pick verified on " + std::to_string(pick_checked) +
                " polygon fingerprints"};
}

CriterionResult criterion_counting_oracle() {
    Rng rng(0x0AC1Eu);
    VariableList vars = VariableList::split("x,y");
    std::set<std::array<std::array<int, 2>, 3>> seen;
    long long tested = 0;
    while (tested < 10000) {
        std::array<std::array<int, 2>, 3> tri;
        for (auto& v : tri) {
            v[0] = rng.uniform(-10, 10);
            v[1] = rng.uniform(-10, 10);
        }
        std::sort(tri.begin(), tri.end());
        const long long orient =
            static_cast<long long>(tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) -
            static_cast<long long>(tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]);
        if (orient == 0)
            continue;  // degenerate
        if (!seen.insert(tri).second)
            continue;

        std::vector<ExponentVector> support;
        for (const auto& v : tri)
            support.push_back(ExponentVector({v[0], v[1]}));
        Counts fast = count_lattice_points(newton_polytope(LaurentPoly(vars, support)));

        // independent oracle: brute-force sign tests over the box
        auto a = tri[0], b = tri[1], c = tri[2];
        if (orient < 0)
            std::swap(b, c);
        auto cross = [](const std::array<int, 2>& p, const std::array<int, 2>& q, int x,
                        int y) {
            return static_cast<long long>(q[0] - p[0]) * (y - p[1]) -
                   static_cast<long long>(q[1] - p[1]) * (x - p[0]);
        };
        Counts slow;
        for (int x = -10; x <= 10; ++x)
            for (int y = -10; y <= 10; ++y) {
                const long long s1 = cross(a, b, x, y);
                const long long s2 = cross(b, c, x, y);
                const long long s3 = cross(c, a, x, y);
                if (s1 >= 0 && s2 >= 0 && s3 >= 0) {
                    ++slow.total;
                    if (s1 == 0 || s2 == 0 || s3 == 0)
                        ++slow.boundary;
                }
            }
        slow.interior = slow.total - slow.boundary;
        if (fast.total != slow.total || fast.boundary != slow.boundary ||
            fast.interior != slow.interior)
            return {8, "lattice counting vs brute-force oracle", false,
                    "disagreement on triangle #" + std::to_string(tested)};
        ++tested;
    }
    return {8, "lattice counting vs brute-force oracle", true,
            "10000 distinct triangles agree exactly"};
}

CriterionResult criterion_face_monotonicity() {
    Rng rng(0xFACE5u);
    VariableList vars = VariableList::split("x,y");
    for (int trial = 0; trial < 500; ++trial) {
        LaurentPoly f = random_nonzero_poly(rng, vars, 8, 4);
        LaurentPoly g = random_poly(rng, vars, 0, 8, 4);
        const long long base = fingerprint(f).total;
        const long long extended = fingerprint(extend_with_pinch_variable(f, g, "s")).total;
        if (extended < base)
            return {9, "pinch-extension face monotonicity", false,
                    "count dropped at trial " + std::to_string(trial) + ": " +
                        std::to_string(extended) + " < " + std::to_string(base)};
    }
    return {9, "pinch-extension face monotonicity", true, "500 random pairs verified"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    std::vector<CriterionResult> out;
    out.push_back(run_protected(1, "alpha monomial sequence", criterion_alpha_sequence));
    out.push_back(run_protected(2, "alpha fingerprint closed forms", criterion_alpha_fingerprints));
    out.push_back(run_protected(3, "beta11 orbit",
                                [] { return criterion_orbit(3, scenario_beta11()); }));
    out.push_back(run_protected(4, "lambda1 orbit",
                                [] { return criterion_orbit(4, scenario_lambda1()); }));
    out.push_back(run_protected(5, "torus knot simplices", criterion_torus));
    out.push_back(run_protected(6, "conjugation diagonal invariance", criterion_conjugation));
    out.push_back(run_protected(7, "unimodular fingerprint invariance", criterion_unimodular));
    out.push_back(
        run_protected(8, "lattice counting vs brute-force oracle", criterion_counting_oracle));
    out.push_back(
        run_protected(9, "pinch-extension face monotonicity", criterion_face_monotonicity));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

}  // namespace augnewton
