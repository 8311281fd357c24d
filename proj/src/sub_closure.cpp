#include "caus/sub_closure.hpp"

#include <tuple>
#include <utility>

#include "caus/error.hpp"

namespace caus {

namespace {

void require_shape(const Morphism& f) {
  if (f.matrix.rows() != f.dst.ambient_dim() || f.matrix.cols() != f.src.ambient_dim())
    throw DimensionError("morphism matrix shape does not match its objects");
}

void require_same_type(const Morphism& f, const Morphism& g, const char* what) {
  require_shape(f);
  require_shape(g);
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw DimensionError(std::string(what) + ": morphism types differ");
}

Morphism sum(const Morphism& f, const Morphism& g) {
  require_same_type(f, g, "sum");
  return {f.src, f.dst, f.matrix + g.matrix};
}

bool is_scalar(const FormalDiff& a) { return a.src().ambient_dim() == 1 && a.dst().ambient_dim() == 1; }

}  // namespace

FormalDiff::FormalDiff(Morphism pos, Morphism neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  require_same_type(pos_, neg_, "FormalDiff");
  if (!morphism_cone_member(pos_.src, pos_.dst, pos_.matrix) || !morphism_cone_member(neg_.src, neg_.dst, neg_.matrix))
    throw ConeViolation("FormalDiff: both sides must be processes of the base model");
}

RationalMatrix FormalDiff::value() const { return pos_.matrix - neg_.matrix; }

Morphism zero_morphism(const ModelObject& src, const ModelObject& dst) {
  return {src, dst, RationalMatrix(dst.ambient_dim(), src.ambient_dim())};
}

Morphism identity_morphism(const ModelObject& o) { return {o, o, RationalMatrix::identity(o.ambient_dim())}; }

Morphism compose(const Morphism& f, const Morphism& g) {
  require_shape(f);
  require_shape(g);
  if (!(f.dst == g.src)) throw DimensionError("compose: target of the first differs from source of the second");
  return {f.src, g.dst, g.matrix * f.matrix};
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_shape(f);
  require_shape(g);
  return {tensor_object(f.src, g.src), tensor_object(f.dst, g.dst), kron(f.matrix, g.matrix)};
}

FormalDiff embed(const Morphism& f) { return FormalDiff(f, zero_morphism(f.src, f.dst)); }

bool fd_eq(const FormalDiff& a, const FormalDiff& b) {
  require_same_type(a.pos(), b.pos(), "fd_eq");
  return a.pos().matrix + b.neg().matrix == b.pos().matrix + a.neg().matrix;
}

FormalDiff fd_compose(const FormalDiff& a, const FormalDiff& b) {
  const auto& [f, g] = std::tie(a.pos(), a.neg());
  const auto& [x, y] = std::tie(b.pos(), b.neg());
  return FormalDiff(sum(compose(f, x), compose(g, y)), sum(compose(f, y), compose(g, x)));
}

FormalDiff fd_tensor(const FormalDiff& a, const FormalDiff& b) {
  const auto& [f, g] = std::tie(a.pos(), a.neg());
  const auto& [x, y] = std::tie(b.pos(), b.neg());
  return FormalDiff(sum(tensor(f, x), tensor(g, y)), sum(tensor(f, y), tensor(g, x)));
}

FormalDiff fd_add(const FormalDiff& a, const FormalDiff& b) {
  return FormalDiff(sum(a.pos(), b.pos()), sum(a.neg(), b.neg()));
}

FormalDiff fd_neg(const FormalDiff& a) { return FormalDiff(a.neg(), a.pos()); }

FormalDiff fd_reduce(const FormalDiff& a) {
  const RationalMatrix v = a.value();
  RationalMatrix p(v.rows(), v.cols());
  RationalMatrix n(v.rows(), v.cols());
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c) {
      if (sgn(v(r, c)) > 0) p(r, c) = v(r, c);
      if (sgn(v(r, c)) < 0) n(r, c) = -v(r, c);
    }
  if (a.src().backend() == Backend::QuantumCP && !(a.src().ambient_dim() == 1 && a.dst().ambient_dim() == 1))
    throw BackendError("fd_reduce: entrywise splitting is only defined for classical processes and scalars");
  return FormalDiff({a.src(), a.dst(), std::move(p)}, {a.src(), a.dst(), std::move(n)});
}

FormalDiff fd_scalar_inverse(const FormalDiff& a) {
  if (!is_scalar(a)) throw InvalidArgument("fd_scalar_inverse: not a scalar");
  const Rational v = a.value()(0, 0);
  if (sgn(v) == 0) throw InvalidArgument("fd_scalar_inverse: zero has no inverse");
  RationalMatrix m(1, 1);
  m(0, 0) = 1 / abs(v);
  const Morphism z = zero_morphism(a.src(), a.dst());
  const Morphism inv{a.src(), a.dst(), m};
  return sgn(v) > 0 ? FormalDiff(inv, z) : FormalDiff(z, inv);
}

std::size_t fd_rank(const std::vector<FormalDiff>& states) {
  if (states.empty()) return 0;
  RationalMatrix m(0, states.front().value().rows());
  for (const auto& s : states) {
    const RationalMatrix v = s.value();
    if (v.cols() != 1 || v.rows() != m.cols()) throw DimensionError("fd_rank: states must share one object");
    RationalVector col(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) col[i] = v(i, 0);
    m.append_row(col);
  }
  return rank(m);
}

}  // namespace caus
