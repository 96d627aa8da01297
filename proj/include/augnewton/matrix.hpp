#pragma once

#include <vector>

#include "augnewton/laurent.hpp"

namespace augnewton {

/// Small square matrix over the F2 Laurent ring. Entries share one variable
/// list; the size is fixed at construction. Immutable value type.
class LaurentMatrix {
public:
    LaurentMatrix(VariableList vars, std::size_t dim);
    LaurentMatrix(VariableList vars, std::vector<std::vector<LaurentPoly>> entries);

    static LaurentMatrix identity(const VariableList& vars, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const VariableList& vars() const { return vars_; }

    const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    void set(std::size_t r, std::size_t c, LaurentPoly p);

    LaurentMatrix operator*(const LaurentMatrix& other) const;
    bool operator==(const LaurentMatrix& other) const;
    bool operator!=(const LaurentMatrix& other) const { return !(*this == other); }
    bool is_identity() const;
    bool is_zero() const;

    /// Entrywise product with one monomial.
    LaurentMatrix times_monomial(const ExponentVector& e) const;

private:
    VariableList vars_;
    std::size_t dim_;
    std::vector<LaurentPoly> entries_;
};

/// a^n by repeated squaring; a^0 = Id.
LaurentMatrix pow(const LaurentMatrix& a, unsigned n);

/// u_inv * a * u, after verifying u * u_inv == Id.
LaurentMatrix conjugate(const LaurentMatrix& a, const LaurentMatrix& u,
                        const LaurentMatrix& u_inv);

struct MonomialFactorization {
    ExponentVector scalar;  // unit monomial factored out of every entry
    LaurentMatrix reduced;  // reduced.times_monomial(scalar) == original
};

/// Factor a unit monomial out of the matrix so that the reduced matrix
/// contains the constant monomial 1 in at least one entry. The scalar is the
/// last entry (row-major) whose support is a single monomial; if no entry is
/// a monomial, the first monomial of the last nonzero entry. Zero matrices
/// are rejected.
MonomialFactorization factor_monomial(const LaurentMatrix& a);

/// The `row` entry (0-based) of n_mat * m1^n * e1. With n_mat the column
/// assembly of base chord values and m1 the conjugated monodromy step, this
/// is the augmented value of the tracked chord after n loop iterations.
LaurentPoly orbit_value(const LaurentMatrix& n_mat, const LaurentMatrix& m1,
                        unsigned n, std::size_t row);

}  // namespace augnewton
