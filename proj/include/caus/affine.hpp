#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "caus/matrix.hpp"
#include "caus/rational.hpp"

namespace caus {

/// H-form of a non-empty affine subspace: { x : equations * x = rhs }.
struct Constraints {
  RationalMatrix equations;
  RationalVector rhs;
};

/// An affine subspace of Q^n, or the empty set.
///
/// Non-empty subspaces are kept in a canonical form: the directions are the
/// rows of a reduced row echelon matrix and the basepoint is zero on every
/// pivot column. Two subspaces are equal iff their canonical forms coincide,
/// so operator== is plain structural comparison.
class AffineSubspace {
 public:
  static AffineSubspace empty(std::size_t ambient);
  static AffineSubspace point(RationalVector p);
  static AffineSubspace full(std::size_t ambient);
  /// Canonicalizes; throws DimensionError when lengths disagree and
  /// InvalidArgument when the directions are dependent.
  static AffineSubspace from_basis(RationalVector basepoint, std::vector<RationalVector> directions);

  std::size_t ambient() const { return ambient_; }
  bool is_empty() const { return empty_; }
  /// Number of directions; -1 for the empty set.
  long dim() const;

  /// Requires !is_empty().
  const RationalVector& basepoint() const;
  const std::vector<RationalVector>& directions() const { return directions_; }

  /// basepoint followed by basepoint + direction_i: dim()+1 affinely independent points.
  std::vector<RationalVector> affine_basis() const;

  bool contains(const RationalVector& x) const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  AffineSubspace() = default;
  std::size_t ambient_ = 0;
  bool empty_ = true;
  RationalVector basepoint_;
  std::vector<RationalVector> directions_;
};

/// Smallest affine subspace containing every point; empty list gives the empty set.
AffineSubspace affine_hull(const std::vector<RationalVector>& points, std::size_t ambient);

/// Equations with independent rows; row count = ambient - dim. Throws on the empty set.
Constraints constraints_of(const AffineSubspace& s);

/// Solution set of equations * x = rhs (empty when inconsistent).
AffineSubspace solve(const RationalMatrix& equations, const RationalVector& rhs);

AffineSubspace affine_intersect(const AffineSubspace& s, const AffineSubspace& t);

bool affine_subset(const AffineSubspace& s, const AffineSubspace& t);
bool affine_equal(const AffineSubspace& s, const AffineSubspace& t);

/// Image { m x : x in s } under a linear map.
AffineSubspace linear_image(const RationalMatrix& m, const AffineSubspace& s);

/// For independent states, returns effects e_j with <state_i, e_j> = delta_ij
/// (plain dot product). The states are first completed to a basis with unit
/// vectors; only the duals of the given states are returned.
std::vector<RationalVector> dual_basis(const std::vector<RationalVector>& states, std::size_t ambient);

/// Index of a constraint row violated by x, if any.
std::optional<std::size_t> violated_constraint(const Constraints& c, const RationalVector& x);

}  // namespace caus
