#pragma once

#include <optional>
#include <vector>

#include "augnewton/intmat.hpp"
#include "augnewton/laurent.hpp"

namespace augnewton {

/// Affine change of coordinates identifying the lattice points of the affine
/// hull of a point set with Z^d. `basis` holds d rows spanning the saturated
/// difference lattice; `proj` maps ambient differences to reduced
/// coordinates: reduced(p) = (p - base) * proj, and reduced(p) * basis
/// recovers p - base exactly.
struct AffineReduction {
    ExponentVector base;
    IntMatrix basis;  // d x k
    IntMatrix proj;   // k x d
};

struct LatticeReduction {
    int dim;
    std::vector<std::vector<Exponent>> reduced;  // one row per input point
    AffineReduction map;
};

/// Reduce a nonempty point set of Z^k to intrinsic coordinates. Lattice
/// points of Z^k inside the affine hull correspond bijectively to points of
/// Z^dim in reduced coordinates (the basis is saturated, not merely spanning).
LatticeReduction lattice_reduce(const std::vector<ExponentVector>& points);

/// One facet inequality normal · y <= offset in reduced coordinates, with
/// primitive integer normal; points of the polytope on the hyperplane are
/// boundary points.
struct Facet {
    std::vector<Exponent> normal;
    Exponent offset;
};

/// Newton polytope with reduction data and facet description.
///
/// Dimension policy: hulls, facets and counts are fully supported for
/// intrinsic dimension <= 3; in dimension >= 4 only simplices (support of
/// exactly d+1 points) are handled. Anything else throws
/// UnsupportedDimension. Every polytope of this artifact's domain reduces to
/// dimension <= 2 or is a simplex; the policy keeps failures loud.
struct LatticePolytope {
    std::size_t ambient_dim;
    int dim;
    AffineReduction reduction;
    std::vector<ExponentVector> vertices;             // ambient, sorted lexicographically
    std::vector<std::vector<Exponent>> hull_cycle;    // reduced; boundary order for d == 2
    std::vector<std::vector<Exponent>> reduced_vertices;
    std::vector<Facet> facets;
};

LatticePolytope newton_polytope(const LaurentPoly& p);

struct Counts {
    long long total = 0;
    long long boundary = 0;
    long long interior = 0;
};

/// Exact lattice point counts. Conventions fixed here: a point (d = 0)
/// counts (1, 1, 0); a segment (d = 1) counts its 2 endpoints as boundary
/// and everything between as interior.
Counts count_lattice_points(const LatticePolytope& p);

/// Translation- and GL(k,Z)-invariant summary of a Newton polytope.
/// normalized_volume is d! times the Euclidean volume in reduced
/// coordinates: 2*area for d = 2, 6*volume for d = 3, |det| of the edge
/// matrix for simplices, the lattice length for d = 1 and 0 for a point.
struct Fingerprint {
    int intrinsic_dim = 0;
    long long total = 0;
    long long boundary = 0;
    long long interior = 0;
    std::optional<long long> normalized_volume;

    bool operator==(const Fingerprint& other) const = default;
};

Fingerprint fingerprint_of(const LatticePolytope& p);
Fingerprint fingerprint(const LaurentPoly& p);

/// Push a 2-variable polynomial into 2 + iota.rows() variables along the
/// graph embedding (a, b) -> (a, b, iota * (a, b)). Fingerprints are
/// preserved (the graph of an integer linear map is a saturated sublattice).
LaurentPoly embed(const LaurentPoly& p, const IntMatrix& iota);

/// Monomial-map action of GL(k,Z) plus a translation on exponents:
/// alpha -> a * alpha + t. Requires |det a| = 1.
LaurentPoly apply_unimodular(const LaurentPoly& p, const IntMatrix& a,
                             const ExponentVector& t);

/// True iff the polytope is a d-simplex whose edge vectors from one vertex
/// span the reduced lattice with |det| = 1, i.e. it is unimodular equivalent
/// to the standard simplex (normalized volume 1).
bool is_simplex_unimodular_standard(const LatticePolytope& p);

}  // namespace augnewton
