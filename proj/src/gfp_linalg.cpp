#include "lefschetz/gfp_linalg.hpp"

namespace lefschetz {

void gfp_canonicalize(MatrixZ& m, const PrimeField& field) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = field.reduce(m(i, j));
}

int gfp_row_reduce(MatrixZ& m, const PrimeField& field) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index pivot_row = 0;
    for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = pivot_row; r < rows; ++r) {
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) m.row(sel).swap(m.row(pivot_row));
        const std::int64_t inv = field.inv(m(pivot_row, col));
        for (Eigen::Index j = col; j < cols; ++j) m(pivot_row, j) = field.mul(m(pivot_row, j), inv);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const std::int64_t factor = m(r, col);
            if (factor == 0) continue;
            for (Eigen::Index j = col; j < cols; ++j) {
                m(r, j) = field.sub(m(r, j), field.mul(factor, m(pivot_row, j)));
            }
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int gfp_rank(MatrixZ m, const PrimeField& field) {
    gfp_canonicalize(m, field);
    return gfp_row_reduce(m, field);
}

MatrixZ gfp_kernel(const MatrixZ& m, const PrimeField& field) {
    MatrixZ work = m;
    gfp_canonicalize(work, field);
    const int rank = gfp_row_reduce(work, field);
    const Eigen::Index cols = m.cols();

    // Identify pivot columns of the reduced form.
    std::vector<Eigen::Index> pivot_col(rank);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    {
        Eigen::Index col = 0;
        for (int r = 0; r < rank; ++r) {
            while (col < cols && work(r, col) == 0) ++col;
            pivot_col[static_cast<std::size_t>(r)] = col;
            is_pivot[static_cast<std::size_t>(col)] = true;
        }
    }

    const Eigen::Index nullity = cols - rank;
    MatrixZ kernel = MatrixZ::Zero(cols, nullity);
    Eigen::Index k = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        kernel(free_col, k) = 1;
        for (int r = 0; r < rank; ++r) {
            kernel(pivot_col[static_cast<std::size_t>(r)], k) = field.neg(work(r, free_col));
        }
        ++k;
    }
    return kernel;
}

MatrixZ gfp_mul(const MatrixZ& a, const MatrixZ& b, const PrimeField& field) {
    MatrixZ out = MatrixZ::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const std::int64_t av = a(i, k);
            if (av == 0) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                out(i, j) = field.reduce(out(i, j) + av * b(k, j));
            }
        }
    }
    return out;
}

}  // namespace lefschetz
