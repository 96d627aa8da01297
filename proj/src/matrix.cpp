#include "augnewton/matrix.hpp"

namespace augnewton {

LaurentMatrix::LaurentMatrix(VariableList vars, std::size_t dim)
    : vars_(std::move(vars)), dim_(dim), entries_(dim * dim, LaurentPoly(vars_)) {
    if (dim_ == 0)
        throw std::invalid_argument("matrix dimension must be positive");
}

LaurentMatrix::LaurentMatrix(VariableList vars, std::vector<std::vector<LaurentPoly>> rows)
    : vars_(std::move(vars)), dim_(rows.size()) {
    if (dim_ == 0)
        throw std::invalid_argument("matrix dimension must be positive");
    entries_.reserve(dim_ * dim_);
    for (auto& row : rows) {
        if (row.size() != dim_)
            throw std::invalid_argument("matrix rows must all have the same length");
        for (auto& p : row) {
            if (p.vars() != vars_)
                throw std::invalid_argument("matrix entry over a different variable list");
            entries_.push_back(std::move(p));
        }
    }
}

LaurentMatrix LaurentMatrix::identity(const VariableList& vars, std::size_t dim) {
    LaurentMatrix m(vars, dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.set(i, i, LaurentPoly::one(vars));
    return m;
}

void LaurentMatrix::set(std::size_t r, std::size_t c, LaurentPoly p) {
    if (p.vars() != vars_)
        throw std::invalid_argument("matrix entry over a different variable list");
    entries_[r * dim_ + c] = std::move(p);
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& other) const {
    if (dim_ != other.dim_ || vars_ != other.vars_)
        throw std::invalid_argument("matrix size or variable mismatch in product");
    LaurentMatrix out(vars_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            LaurentPoly acc(vars_);
            for (std::size_t l = 0; l < dim_; ++l)
                acc = acc + at(i, l) * other.at(l, j);
            out.set(i, j, std::move(acc));
        }
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& other) const {
    return dim_ == other.dim_ && vars_ == other.vars_ && entries_ == other.entries_;
}

bool LaurentMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
                return false;
        }
    return true;
}

bool LaurentMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

LaurentMatrix LaurentMatrix::times_monomial(const ExponentVector& e) const {
    LaurentMatrix out(vars_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            out.set(i, j, at(i, j).times_monomial(e));
    return out;
}

LaurentMatrix pow(const LaurentMatrix& a, unsigned n) {
    LaurentMatrix result = LaurentMatrix::identity(a.vars(), a.dim());
    if (n == 0)
        return result;
    LaurentMatrix sq = a;
    while (n) {
        if (n & 1)
            result = result * sq;
        n >>= 1;
        if (n)
            sq = sq * sq;
    }
    return result;
}

LaurentMatrix conjugate(const LaurentMatrix& a, const LaurentMatrix& u,
                        const LaurentMatrix& u_inv) {
    if (!(u * u_inv).is_identity())
        throw VerificationError("conjugation: supplied inverse fails u * u_inv == Id");
    return u_inv * a * u;
}

MonomialFactorization factor_monomial(const LaurentMatrix& a) {
    if (a.is_zero())
        throw std::invalid_argument("cannot factor a monomial out of the zero matrix");
    const std::size_t d = a.dim();
    std::optional<ExponentVector> scalar;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (auto m = a.at(i, j).as_monomial())
                scalar = *m;
    if (!scalar) {
        // no monomial entry: normalize at the last nonzero entry instead
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!a.at(i, j).is_zero())
                    scalar = a.at(i, j).support().front();
    }
    return {*scalar, a.times_monomial(-*scalar)};
}

LaurentPoly orbit_value(const LaurentMatrix& n_mat, const LaurentMatrix& m1,
                        unsigned n, std::size_t row) {
    if (n_mat.dim() != m1.dim() || n_mat.vars() != m1.vars())
        throw std::invalid_argument("orbit_value: matrix size or variable mismatch");
    if (row >= n_mat.dim())
        throw std::invalid_argument("orbit_value: row index out of range");
    LaurentMatrix total = n_mat * pow(m1, n);
    return total.at(row, 0);
}

}  // namespace augnewton
