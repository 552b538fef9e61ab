#pragma once

#include <initializer_list>
#include <vector>

#include "logtb/numbers.hpp"

namespace logtb::exact {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    std::vector<Int> row(int r) const;
    std::vector<Int> column(int c) const;

    IntMatrix transposed() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// U * A * V = S with S diagonal, nonnegative, divisibility chain s1 | s2 | ...,
/// U and V unimodular.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;

    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries of s
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Int determinant(const IntMatrix& a);

/// Integer inverse of a unimodular matrix; throws NotUnimodular if |det| != 1.
IntMatrix invert_unimodular(const IntMatrix& a);

}  // namespace logtb::exact
