#pragma once

#include <cstddef>
#include <vector>

#include "caus/matrix.hpp"
#include "caus/model.hpp"
#include "caus/rational.hpp"

namespace caus {

/// Square complex matrix with rational real and imaginary parts, row-major.
struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<Rational> re;
  std::vector<Rational> im;

  explicit ComplexMatrix(std::size_t d = 0) : dim(d), re(d * d), im(d * d) {}
  bool is_hermitian() const;
};

/// Matrix of a block given its coordinates (length block_dim^2).
ComplexMatrix block_matrix(const Block& block, const RationalVector& coords);
/// Inverse of block_matrix; the input must be Hermitian.
RationalVector block_coordinates(const Block& block, const ComplexMatrix& m);

/// Splits object coordinates into per-block matrices and back.
std::vector<ComplexMatrix> to_blocks(const ModelObject& o, const RationalVector& x);
RationalVector from_blocks(const ModelObject& o, const std::vector<ComplexMatrix>& blocks);

/// Exact PSD test for a real symmetric matrix by diagonally pivoted LDL^T.
bool is_psd_symmetric(RationalMatrix a);
/// PSD test of a Hermitian X + iY through the real embedding [[X, -Y], [Y, X]].
bool is_psd(const ComplexMatrix& m);

}  // namespace caus
