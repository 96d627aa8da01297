#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augnewton/errors.hpp"

namespace augnewton {

using Exponent = std::int64_t;

/// Ordered list of distinct variable names. The order is the coordinate
/// order of the exponent lattice Z^k.
class VariableList {
public:
    explicit VariableList(std::vector<std::string> names);

    /// Parse a comma-separated list, e.g. "s9,s11,s12,s13".
    static VariableList split(std::string_view csv);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Copy with one fresh name appended; throws on collision.
    VariableList extended(const std::string& fresh_name) const;

    bool operator==(const VariableList& other) const { return names_ == other.names_; }
    bool operator!=(const VariableList& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

/// A point of Z^k: the exponent vector of one Laurent monomial.
/// Arithmetic is overflow-checked; exponents never wrap silently.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {}
    static ExponentVector zero(std::size_t k) { return ExponentVector(std::vector<Exponent>(k, 0)); }

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& entries() const { return e_; }

    bool is_zero() const;

    ExponentVector operator+(const ExponentVector& other) const;
    ExponentVector operator-(const ExponentVector& other) const;
    ExponentVector operator-() const;
    ExponentVector scaled(Exponent factor) const;

    bool operator==(const ExponentVector& other) const { return e_ == other.e_; }
    bool operator!=(const ExponentVector& other) const { return e_ != other.e_; }
    bool operator<(const ExponentVector& other) const { return e_ < other.e_; }

private:
    std::vector<Exponent> e_;
};

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Sparse multivariate Laurent polynomial over the two-element field.
/// The support is a sorted set of exponent vectors; coefficients are
/// implicitly 1 and addition is symmetric difference. Immutable once built.
class LaurentPoly {
public:
    explicit LaurentPoly(VariableList vars) : vars_(std::move(vars)) {}
    LaurentPoly(VariableList vars, std::vector<ExponentVector> support);

    static LaurentPoly zero(VariableList vars) { return LaurentPoly(std::move(vars)); }
    static LaurentPoly one(VariableList vars);
    static LaurentPoly monomial(VariableList vars, ExponentVector e);

    const VariableList& vars() const { return vars_; }
    const std::vector<ExponentVector>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    bool is_one() const { return support_.size() == 1 && support_[0].is_zero(); }
    std::size_t monomial_count() const { return support_.size(); }

    /// Support is exactly one exponent vector.
    std::optional<ExponentVector> as_monomial() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly times_monomial(const ExponentVector& e) const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

private:
    VariableList vars_;
    std::vector<ExponentVector> support_;  // sorted, no duplicates
};

/// p^n by repeated squaring; p^0 = 1.
LaurentPoly pow(const LaurentPoly& p, unsigned n);

/// Ring homomorphism sending each source variable to a single monomial in
/// the target variables. Houses both relation eliminations and the monomial
/// automorphisms used for change of coordinates.
class MonomialSubstitution {
public:
    MonomialSubstitution(VariableList source, VariableList target,
                         std::vector<ExponentVector> images);

    const VariableList& source() const { return source_; }
    const VariableList& target() const { return target_; }
    const ExponentVector& image(std::size_t i) const { return images_[i]; }

private:
    VariableList source_;
    VariableList target_;
    std::vector<ExponentVector> images_;
};

LaurentPoly substitute(const LaurentPoly& p, const MonomialSubstitution& sigma);

/// f + g*s^{-1} in the ring extended by the fresh variable s. The support of
/// f lands in the hyperplane {s = 0}, the support of g in {s = -1}.
LaurentPoly extend_with_pinch_variable(const LaurentPoly& f, const LaurentPoly& g,
                                       const std::string& fresh_name);

// Text grammar (whitespace insignificant):
//   poly    := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := ident ('^' integer)? | '1'
//   ident   := [A-Za-z_][A-Za-z0-9_]*
//   integer := '-'? [0-9]+
// The constant term is written '1'. As an extension, the single token '0'
// denotes the zero polynomial so that render/parse round-trips everything.
LaurentPoly parse_poly(std::string_view text, const VariableList& vars);

/// Canonical text form: terms in support order, factors in variable order,
/// '^' omitted for exponent 1. parse_poly(render(p), p.vars()) == p.
std::string render(const LaurentPoly& p);

}  // namespace augnewton
