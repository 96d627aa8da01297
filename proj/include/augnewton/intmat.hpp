#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace augnewton {

using BigInt = boost::multiprecision::cpp_int;

/// Dense rectangular integer matrix. Entries are 64-bit; operations that can
/// blow up intermediates (determinant, normal forms) run over cpp_int
/// internally and narrow back with an overflow check.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& other) const;

    IntMatrix operator*(const IntMatrix& other) const;
    bool is_identity() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::int64_t> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(const IntMatrix& m);

/// True iff m is square with determinant +1 or -1.
bool is_unimodular(const IntMatrix& m);

struct HnfResult {
    IntMatrix h;  // row Hermite normal form
    IntMatrix u;  // unimodular, u * m == h
};

/// Row Hermite normal form: pivots positive, entries above each pivot reduced
/// into [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct ColumnEchelonResult {
    int rank;
    IntMatrix v;      // unimodular column transform, m * v has nonzero entries
                      // only in its first `rank` columns
    IntMatrix v_inv;  // v_inv * v == Id
};

/// Integer column echelon reduction with transform tracking. The first `rank`
/// rows of v_inv are a basis of the saturation of the row space of m, i.e.
/// rowspan_R(m) ∩ Z^cols.
ColumnEchelonResult column_echelon(const IntMatrix& m);

}  // namespace augnewton
