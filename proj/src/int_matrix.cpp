#include "logtb/int_matrix.hpp"

#include <algorithm>

namespace logtb::exact {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    data_.resize(size_t(rows_) * cols_);
    int r = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != cols_) throw DimensionMismatch("ragged initializer");
        int c = 0;
        for (long long v : row) at(r, c++) = v;
        ++r;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(int r) const {
    std::vector<Int> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Int> IntMatrix::column(int c) const {
    std::vector<Int> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != Int(r == c ? 1 : 0)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape");
    IntMatrix out(x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r)
        for (int k = 0; k < x.cols_; ++k) {
            const Int& xv = x.at(r, k);
            if (xv.is_zero()) continue;
            for (int c = 0; c < y.cols_; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("matrix apply shape");
    std::vector<Int> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    const int k = std::min(s.rows(), s.cols());
    for (int i = 0; i < k; ++i)
        if (!s.at(i, i).is_zero()) out.push_back(s.at(i, i));
    return out;
}

namespace {

// Row/column elementary operations on S mirrored into U (rows) and V (columns)
// so that U * A * V = S stays true throughout.
struct SnfWork {
    IntMatrix s, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const Int& factor) {  // row dst += factor * row src
        for (int c = 0; c < s.cols(); ++c) s.at(dst, c) += factor * s.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += factor * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& factor) {
        for (int r = 0; r < s.rows(); ++r) s.at(r, dst) += factor * s.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += factor * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < s.cols(); ++c) s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    const int limit = std::min(a.rows(), a.cols());

    for (int t = 0; t < limit; ++t) {
        // pivot: smallest nonzero magnitude in the trailing block
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < a.rows(); ++r)
            for (int c = t; c < a.cols(); ++c) {
                const Int& v = w.s.at(r, c);
                if (v.is_zero()) continue;
                Int m = abs(v);
                if (pr < 0 || m < best) { best = m; pr = r; pc = c; }
            }
        if (pr < 0) break;  // trailing block is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < a.rows(); ++r) {
                if (w.s.at(r, t).is_zero()) continue;
                const Int q = w.s.at(r, t) / w.s.at(t, t);
                w.add_row(r, t, -q);
                if (!w.s.at(r, t).is_zero()) {
                    w.swap_rows(t, r);  // remainder is smaller, continue reducing
                    clean = false;
                }
            }
            for (int c = t + 1; c < a.cols(); ++c) {
                if (w.s.at(t, c).is_zero()) continue;
                const Int q = w.s.at(t, c) / w.s.at(t, t);
                w.add_col(c, t, -q);
                if (!w.s.at(t, c).is_zero()) {
                    w.swap_cols(t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            for (int r = t + 1; r < a.rows() && clean; ++r)
                for (int c = t + 1; c < a.cols() && clean; ++c)
                    if (!(w.s.at(r, c) % w.s.at(t, t)).is_zero()) {
                        w.add_row(t, r, 1);
                        clean = false;
                    }
        }
        if (w.s.at(t, t).sign() < 0) w.negate_row(t);
    }
    return {std::move(w.u), std::move(w.s), std::move(w.v)};
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) { swap = r; break; }
            if (swap < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Int v = m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c);
                m.at(r, c) = v / prev;  // Bareiss: division is exact
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix invert_unimodular(const IntMatrix& a) {
    if (!a.is_square()) throw NotUnimodular("non-square matrix");
    const auto snf = smith_normal_form(a);
    if (!snf.s.is_identity())
        throw NotUnimodular("matrix has |det| != 1");
    return snf.v * snf.u;  // U A V = I  =>  A^-1 = V U
}

}  // namespace logtb::exact
