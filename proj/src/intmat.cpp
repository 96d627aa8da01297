#include "augnewton/intmat.hpp"

#include <limits>
#include <stdexcept>

namespace augnewton {

namespace {

std::int64_t narrow(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer matrix entry exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

using BigMat = std::vector<std::vector<BigInt>>;

BigMat widen(const IntMatrix& m) {
    BigMat a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j);
    return a;
}

IntMatrix shrink(const BigMat& a) {
    IntMatrix m(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m.at(i, j) = narrow(a[i][j]);
    return m;
}

BigMat big_identity(std::size_t n) {
    BigMat u(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = 1;
    return u;
}

// Floor division quotient, so remainders land in [0, |b|).
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged initializer for IntMatrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix shape mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            BigInt acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                acc += BigInt(at(i, k)) * other.at(k, j);
            out.at(i, j) = narrow(acc);
        }
    return out;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

BigInt det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    BigMat a = widen(m);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols())
        return false;
    BigInt d = det_bareiss(m);
    return d == 1 || d == -1;
}

HnfResult hnf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    BigMat h = widen(m);
    BigMat u = big_identity(rows);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(h[a], h[b]);
        std::swap(u[a], u[b]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t j = 0; j < cols; ++j)
            h[dst][j] += q * h[src][j];
        for (std::size_t j = 0; j < rows; ++j)
            u[dst][j] += q * u[src][j];
    };
    auto negate_row = [&](std::size_t r) {
        for (auto& x : h[r])
            x = -x;
        for (auto& x : u[r])
            x = -x;
    };

    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        // gcd the column below pr into one pivot
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pr; r < rows; ++r)
                if (h[r][c] != 0 && (best == rows || abs(h[r][c]) < abs(h[best][c])))
                    best = r;
            if (best == rows)
                break;
            if (best != pr)
                swap_rows(pr, best);
            bool clean = true;
            for (std::size_t r = pr + 1; r < rows; ++r) {
                if (h[r][c] == 0)
                    continue;
                add_row(r, pr, -fdiv(h[r][c], h[pr][c]));
                if (h[r][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h[pr][c] == 0)
            continue;
        if (h[pr][c] < 0)
            negate_row(pr);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t r = 0; r < pr; ++r)
            if (h[r][c] != 0)
                add_row(r, pr, -fdiv(h[r][c], h[pr][c]));
        ++pr;
    }
    return {shrink(h), shrink(u)};
}

ColumnEchelonResult column_echelon(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    BigMat a = widen(m);
    BigMat v = big_identity(cols);
    BigMat vinv = big_identity(cols);

    // column op C_j += q*C_t corresponds to row op (v_inv row_t += -q * ... )
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t i = 0; i < rows; ++i)
            a[i][dst] += q * a[i][src];
        for (std::size_t i = 0; i < cols; ++i)
            v[i][dst] += q * v[i][src];
        for (std::size_t j = 0; j < cols; ++j)
            vinv[src][j] -= q * vinv[dst][j];
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < cols; ++i)
            std::swap(v[i][x], v[i][y]);
        std::swap(vinv[x], vinv[y]);
    };
    auto negate_col = [&](std::size_t x) {
        for (std::size_t i = 0; i < rows; ++i)
            a[i][x] = -a[i][x];
        for (std::size_t i = 0; i < cols; ++i)
            v[i][x] = -v[i][x];
        for (std::size_t j = 0; j < cols; ++j)
            vinv[x][j] = -vinv[x][j];
    };

    std::size_t t = 0;
    for (std::size_t i = 0; i < rows && t < cols; ++i) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == cols || abs(a[i][j]) < abs(a[i][best])))
                    best = j;
            if (best == cols)
                break;
            if (best != t)
                swap_cols(t, best);
            bool clean = true;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[i][j] == 0)
                    continue;
                add_col(j, t, -fdiv(a[i][j], a[i][t]));
                if (a[i][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a[i][t] != 0) {
            if (a[i][t] < 0)
                negate_col(t);
            ++t;
        }
    }
    return {static_cast<int>(t), shrink(v), shrink(vinv)};
}

}  // namespace augnewton
