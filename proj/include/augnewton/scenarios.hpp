#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "augnewton/intmat.hpp"
#include "augnewton/matrix.hpp"
#include "augnewton/polytope.hpp"

namespace augnewton {

/// One augmentation-orbit computation: the ring after variable elimination,
/// the base chord values assembled as the column matrix N (with its supplied
/// and verified inverse), the conjugated monodromy step M1 = N^-1 M N, and
/// the closed-form lattice-point count the orbit must reproduce.
///
/// All matrices are transcribed data, verified at construction:
/// N * N_inv == Id, M1 == conjugate(M, N, N_inv), and factor_monomial(M1)
/// reproduces the expected scalar/reduced split. A transcription error
/// throws VerificationError instead of silently corrupting the orbit.
struct Scenario {
    std::string name;
    VariableList vars;
    MonomialSubstitution relations;   // raw pinch variables -> vars
    LaurentMatrix monodromy;          // action on the tracked chord pair
    LaurentMatrix base_n;             // N: columns assemble base augmented values
    LaurentMatrix base_n_inv;
    LaurentMatrix step_m1;            // N^-1 * monodromy * N
    ExponentVector scalar;            // unit monomial, step_m1 = scalar * reduced_step
    LaurentMatrix reduced_step;
    std::size_t target_row;           // 0-based row of the tracked chord (a9)

    /// Closed-form total lattice-point count of the n-th orbit value's
    /// Newton polytope: n^2 + 1 for n >= 2, fixed by exact enumeration
    /// (boundary 2n plus (n-1)^2 interior, consistent with Pick).
    static std::optional<long long> expected_total(unsigned n);

    /// Expected ambient hull vertices of the n-th reduced-step power's
    /// upper-left entry, n >= 2.
    std::vector<ExponentVector> expected_hull(unsigned n) const;

    LaurentPoly hull_seed_low;   // exponent of the degree-1 hull monomial
    LaurentPoly hull_seed_axis;  // exponent of the z^-2 direction monomial
};

Scenario scenario_beta11();
Scenario scenario_lambda1();

/// Resolve a CLI scenario name; the -nonorientable aliases share the same
/// data (the computations coincide over characteristic 2).
std::optional<Scenario> scenario_by_name(const std::string& name);
std::vector<std::string> scenario_names();

struct OrbitRow {
    unsigned n;
    std::size_t monomials;
    Fingerprint fp;
    std::vector<ExponentVector> vertices;
};

/// Rows n = 1..n_max of the orbit table. Each row's value is N * M1^n * e1
/// at the target row; a mismatch against expected_total throws
/// VerificationError rather than producing a silent row.
std::vector<OrbitRow> orbit_table(const Scenario& s, unsigned n_max);

struct Verdict {
    bool distinct;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // 0-based row indices
};

/// True iff all row fingerprints differ pairwise in at least one field.
Verdict distinctness_verdict(const std::vector<OrbitRow>& rows);

/// Monomial counts of the upper-left entry of [[x+y,1],[x,1]]^n, n = 1..n_max.
std::vector<std::size_t> alpha_sequence(unsigned n_max);

/// The 40 reference values of alpha_sequence embedded as data.
const std::vector<std::size_t>& alpha_reference_sequence();

/// Per-row data for the alpha table: count plus fingerprint of the entry.
struct AlphaRow {
    unsigned n;
    std::size_t monomials;
    Fingerprint fp;
    std::vector<ExponentVector> vertices;
};
std::vector<AlphaRow> alpha_table(unsigned n_max);

/// A pinch-sequence augmented value for the max-tb (2,n) torus knot, pinched
/// at crossing i, with the explicit unimodular certificate: S holds the
/// translated hull points as rows, s_inv its patterned inverse.
struct TorusInstance {
    unsigned n;
    unsigned i;
    VariableList vars;   // s_1..s_n with s_i removed
    LaurentPoly value;
    IntMatrix s;
    IntMatrix s_inv;
};

/// Build the instance; throws VerificationError if the value does not have
/// exactly n monomials or S * S_inv != Id.
TorusInstance torus_value(unsigned n, unsigned i);

/// True iff the value's Newton polytope is an (n-1)-simplex unimodular
/// equivalent to the standard one.
bool torus_simplex_check(const TorusInstance& t);

}  // namespace augnewton
