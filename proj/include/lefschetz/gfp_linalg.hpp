#ifndef LEFSCHETZ_GFP_LINALG_HPP
#define LEFSCHETZ_GFP_LINALG_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// Dense matrices over GF(p), entries kept as canonical representatives in
/// a signed 64-bit word.  All mutation goes through the free functions below.
using MatrixZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VectorZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RowVectorZ = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

/// In-place row echelon form (pivots normalized to 1, entries above pivots
/// cleared as well, i.e. reduced row echelon).  Returns the rank.
int gfp_row_reduce(MatrixZ& m, const PrimeField& field);

int gfp_rank(MatrixZ m, const PrimeField& field);

/// Basis of the right kernel {v : m v = 0}, one column per basis vector.
MatrixZ gfp_kernel(const MatrixZ& m, const PrimeField& field);

/// Matrix product reduced mod p.
MatrixZ gfp_mul(const MatrixZ& a, const MatrixZ& b, const PrimeField& field);

/// Reduce every entry to its canonical representative.
void gfp_canonicalize(MatrixZ& m, const PrimeField& field);

}  // namespace lefschetz

#endif
