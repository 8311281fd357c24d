#include "caus/affine.hpp"

#include <utility>

#include "caus/error.hpp"

namespace caus {
namespace {

std::size_t leading_column(const RationalVector& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) return c;
  }
  return row.size();
}

// Subtracts multiples of the echelon rows so that v vanishes on every pivot column.
void reduce_against(RationalVector& v, const std::vector<RationalVector>& echelon) {
  for (const auto& row : echelon) {
    const std::size_t c = leading_column(row);
    if (sgn(v[c]) == 0) continue;
    const Rational f = v[c];
    for (std::size_t j = c; j < v.size(); ++j) {
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
  }
}

}  // namespace

AffineSubspace AffineSubspace::empty(std::size_t ambient) {
  AffineSubspace s;
  s.ambient_ = ambient;
  s.empty_ = true;
  return s;
}

AffineSubspace AffineSubspace::point(RationalVector p) {
  check_ambient(p.size());
  AffineSubspace s;
  s.ambient_ = p.size();
  s.empty_ = false;
  s.basepoint_ = std::move(p);
  return s;
}

AffineSubspace AffineSubspace::full(std::size_t ambient) {
  check_ambient(ambient);
  AffineSubspace s;
  s.ambient_ = ambient;
  s.empty_ = false;
  s.basepoint_ = zeros(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.directions_.push_back(unit_vector(ambient, i));
  return s;
}

AffineSubspace AffineSubspace::from_basis(RationalVector basepoint, std::vector<RationalVector> directions) {
  const std::size_t n = basepoint.size();
  check_ambient(n);
  for (const auto& d : directions) {
    if (d.size() != n) throw DimensionError("affine subspace: direction length differs from basepoint length");
  }
  RationalMatrix m = RationalMatrix::from_rows(directions, n);
  const std::size_t count = directions.size();
  rref(m);
  if (m.rows() != count) throw InvalidArgument("affine subspace: directions are linearly dependent");
  AffineSubspace s;
  s.ambient_ = n;
  s.empty_ = false;
  s.directions_ = m.row_list();
  reduce_against(basepoint, s.directions_);
  s.basepoint_ = std::move(basepoint);
  return s;
}

long AffineSubspace::dim() const { return empty_ ? -1 : static_cast<long>(directions_.size()); }

const RationalVector& AffineSubspace::basepoint() const {
  if (empty_) throw InvalidArgument("the empty subspace has no basepoint");
  return basepoint_;
}

std::vector<RationalVector> AffineSubspace::affine_basis() const {
  std::vector<RationalVector> pts;
  if (empty_) return pts;
  pts.push_back(basepoint_);
  for (const auto& d : directions_) pts.push_back(add(basepoint_, d));
  return pts;
}

bool AffineSubspace::contains(const RationalVector& x) const {
  if (x.size() != ambient_) throw DimensionError("contains: vector length differs from ambient dimension");
  if (empty_) return false;
  RationalVector v = sub(x, basepoint_);
  reduce_against(v, directions_);
  return is_zero(v);
}

AffineSubspace affine_hull(const std::vector<RationalVector>& points, std::size_t ambient) {
  for (const auto& p : points) {
    if (p.size() != ambient) throw DimensionError("affine_hull: point length differs from ambient dimension");
  }
  if (points.empty()) return AffineSubspace::empty(ambient);
  check_ambient(ambient);
  RationalMatrix diffs(0, ambient);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.append_row(sub(points[i], points[0]));
  rref(diffs);
  return AffineSubspace::from_basis(points[0], diffs.row_list());
}

Constraints constraints_of(const AffineSubspace& s) {
  if (s.is_empty()) throw InvalidArgument("constraints_of: the empty set has no equation form");
  const RationalMatrix dirs = RationalMatrix::from_rows(s.directions(), s.ambient());
  Constraints c{null_space(dirs), {}};
  c.rhs = c.equations.apply(s.basepoint());
  return c;
}

AffineSubspace solve(const RationalMatrix& equations, const RationalVector& rhs) {
  const std::size_t n = equations.cols();
  const std::size_t m = equations.rows();
  if (rhs.size() != m) throw DimensionError("solve: right-hand side length differs from equation count");
  check_ambient(n);
  RationalMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = equations(i, j);
    aug(i, n) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return AffineSubspace::empty(n);
  RationalVector particular(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    particular[pivots[i]] = aug(i, n);
    is_pivot[pivots[i]] = true;
  }
  RationalMatrix dirs(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -aug(i, f);
    dirs.append_row(x);
  }
  rref(dirs);
  return AffineSubspace::from_basis(std::move(particular), dirs.row_list());
}

AffineSubspace affine_intersect(const AffineSubspace& s, const AffineSubspace& t) {
  if (s.ambient() != t.ambient()) throw DimensionError("affine_intersect: ambient dimensions differ");
  if (s.is_empty() || t.is_empty()) return AffineSubspace::empty(s.ambient());
  Constraints a = constraints_of(s);
  const Constraints b = constraints_of(t);
  a.equations.append_rows(b.equations);
  a.rhs.insert(a.rhs.end(), b.rhs.begin(), b.rhs.end());
  return solve(a.equations, a.rhs);
}

bool affine_subset(const AffineSubspace& s, const AffineSubspace& t) {
  if (s.ambient() != t.ambient()) throw DimensionError("subset: ambient dimensions differ");
  if (s.is_empty()) return true;
  if (t.is_empty()) return false;
  if (!t.contains(s.basepoint())) return false;
  for (const auto& d : s.directions()) {
    RationalVector v = d;
    reduce_against(v, t.directions());
    if (!is_zero(v)) return false;
  }
  return true;
}

bool affine_equal(const AffineSubspace& s, const AffineSubspace& t) {
  if (s.ambient() != t.ambient()) throw DimensionError("equal: ambient dimensions differ");
  return s == t;
}

AffineSubspace linear_image(const RationalMatrix& m, const AffineSubspace& s) {
  if (m.cols() != s.ambient()) throw DimensionError("linear_image: map does not act on this ambient space");
  std::vector<RationalVector> pts;
  for (const auto& p : s.affine_basis()) pts.push_back(m.apply(p));
  return affine_hull(pts, m.rows());
}

std::vector<RationalVector> dual_basis(const std::vector<RationalVector>& states, std::size_t ambient) {
  for (const auto& s : states) {
    if (s.size() != ambient) throw DimensionError("dual_basis: state length differs from ambient dimension");
  }
  if (states.size() > ambient) throw InvalidArgument("dual_basis: more states than the ambient dimension");
  RationalMatrix basis = RationalMatrix::from_rows(states, ambient);
  if (rank(basis) != states.size()) throw InvalidArgument("dual_basis: states are linearly dependent");
  for (std::size_t i = 0; i < ambient && basis.rows() < ambient; ++i) {
    RationalMatrix trial = basis;
    trial.append_row(unit_vector(ambient, i));
    if (rank(trial) == trial.rows()) basis = std::move(trial);
  }
  // <rho_i, e_j> = delta_ij means the e_j are the columns of basis^{-1}.
  const RationalMatrix inv = inverse(basis);
  std::vector<RationalVector> duals;
  for (std::size_t j = 0; j < states.size(); ++j) {
    RationalVector e(ambient);
    for (std::size_t k = 0; k < ambient; ++k) e[k] = inv(k, j);
    duals.push_back(std::move(e));
  }
  return duals;
}

std::optional<std::size_t> violated_constraint(const Constraints& c, const RationalVector& x) {
  for (std::size_t i = 0; i < c.equations.rows(); ++i) {
    if (dot(c.equations.row(i), x) != c.rhs[i]) return i;
  }
  return std::nullopt;
}

}  // namespace caus
