#include "caus/causal_set.hpp"

#include <tuple>
#include <utility>

#include "caus/error.hpp"

namespace caus {

CausalSet::CausalSet(ModelObject object, AffineSubspace body) : object_(std::move(object)), body_(std::move(body)) {
  if (body_.ambient() != object_.ambient_dim())
    throw DimensionError("causal set body has ambient " + std::to_string(body_.ambient()) + ", object needs " +
                         std::to_string(object_.ambient_dim()));
}

namespace {

void require_same_object(const CausalSet& c, const CausalSet& d, const char* what) {
  require_same_backend(c.object(), d.object());
  if (!(c.object() == d.object())) throw DimensionError(std::string(what) + ": objects differ");
}

RationalVector weighted(const RationalVector& w, const RationalVector& x) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = w[i] * x[i];
  return out;
}

}  // namespace

std::optional<Rational> scalar_multiple_in(const AffineSubspace& s, const RationalVector& v) {
  if (s.is_empty()) return std::nullopt;
  const Constraints k = constraints_of(s);
  RationalMatrix col(k.equations.rows(), 1);
  for (std::size_t r = 0; r < k.equations.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += k.equations(r, i) * v[i];
    col(r, 0) = acc;
  }
  const AffineSubspace sol = solve(col, k.rhs);
  if (sol.is_empty()) return std::nullopt;
  if (sol.dim() > 0) return sgn(sol.basepoint()[0]) != 0 ? sol.basepoint()[0] : sol.basepoint()[0] + 1;
  if (sgn(sol.basepoint()[0]) == 0) return std::nullopt;
  return sol.basepoint()[0];
}

CausalSet first_order(const ModelObject& o) {
  if (o.is_zero()) return CausalSet(o, AffineSubspace::empty(0));
  RationalMatrix eq(1, o.ambient_dim());
  const auto w = pairing_weights(o);
  const auto disc = discard_vector(o);
  for (std::size_t i = 0; i < o.ambient_dim(); ++i) eq(0, i) = w[i] * disc[i];
  return CausalSet(o, solve(eq, {Rational(1)}));
}

CausalSet unit_type(Backend b) { return CausalSet(ModelObject::unit(b), AffineSubspace::point({Rational(1)})); }
CausalSet zero_type(Backend b) { return CausalSet(ModelObject::zero(b), AffineSubspace::empty(0)); }
CausalSet one_type(Backend b) { return CausalSet(ModelObject::zero(b), AffineSubspace::point({})); }

CausalSet singleton_uniform(const ModelObject& o) {
  if (o.is_zero()) throw InvalidArgument("singleton_uniform: the zero object has no uniform state");
  const auto u = uniform_vector(o);
  const Rational d = pairing(o, discard_vector(o), u);
  return CausalSet(o, AffineSubspace::point(scale(1 / d, u)));
}

CausalSet atomic_type(AtomKind kind, const ModelObject& o) {
  switch (kind) {
    case AtomKind::FirstOrder: return first_order(o);
    case AtomKind::Unit:
      if (o.ambient_dim() != 1) throw InvalidArgument("unit type needs an object of ambient dimension 1");
      return CausalSet(o, AffineSubspace::point({Rational(1)}));
    case AtomKind::Zero:
      if (!o.is_zero()) throw InvalidArgument("zero type lives on the zero object");
      return CausalSet(o, AffineSubspace::empty(0));
    case AtomKind::One:
      if (!o.is_zero()) throw InvalidArgument("one type lives on the zero object");
      return CausalSet(o, AffineSubspace::point({}));
    case AtomKind::SingletonUniform: return singleton_uniform(o);
  }
  throw InvalidArgument("unknown atom kind");
}

CausalSet dual(const CausalSet& c) {
  const std::size_t n = c.ambient();
  if (c.is_empty()) return CausalSet(c.object(), AffineSubspace::full(n));
  const auto w = pairing_weights(c.object());
  RationalMatrix eq(0, n);
  eq.append_row(weighted(w, c.body().basepoint()));
  for (const auto& d : c.body().directions()) eq.append_row(weighted(w, d));
  RationalVector rhs(eq.rows());
  rhs[0] = 1;
  return CausalSet(c.object(), solve(eq, rhs));
}

CausalSet tensor(const CausalSet& c, const CausalSet& d) {
  const ModelObject o = tensor_object(c.object(), d.object());
  if (c.is_empty() || d.is_empty()) return CausalSet(o, AffineSubspace::empty(o.ambient_dim()));
  std::vector<RationalVector> points;
  for (const auto& g : c.body().affine_basis())
    for (const auto& h : d.body().affine_basis()) points.push_back(kron_coords(g, h));
  return CausalSet(o, affine_hull(points, o.ambient_dim()));
}

CausalSet par(const CausalSet& c, const CausalSet& d) { return dual(tensor(dual(c), dual(d))); }

CausalSet lolli(const CausalSet& c, const CausalSet& d) { return par(dual(c), d); }

CausalSet seq(const CausalSet& c, const CausalSet& d) {
  if (c.is_empty() && !c.object().is_zero()) throw InvalidArgument("seq: empty first factor on a non-zero object");
  const CausalSet dd = dual(d);
  if (dd.is_empty() && !d.object().is_zero())
    throw InvalidArgument("seq: second factor has no effects on a non-zero object");
  const CausalSet p = par(c, d);
  if (p.is_empty()) return p;
  if (c.is_empty()) return CausalSet(p.object(), AffineSubspace::empty(p.ambient()));
  if (dd.is_empty()) return p;
  const std::size_t na = c.ambient();
  const std::size_t nb = d.ambient();
  const auto wb = pairing_weights(d.object());

  Constraints k = constraints_of(p.body());
  RationalMatrix& eq = k.equations;
  // partial_right(dir, h) = 0 for every direction of the effect set.
  for (const auto& dir : dd.body().directions()) {
    for (std::size_t a = 0; a < na; ++a) {
      RationalVector row(na * nb);
      for (std::size_t b = 0; b < nb; ++b) row[a * nb + b] = wb[b] * dir[b];
      eq.append_row(row);
      k.rhs.push_back(0);
    }
  }
  // The residual partial_right(pi0, h) lies in c.
  const RationalVector& pi0 = dd.body().basepoint();
  const Constraints kc = constraints_of(c.body());
  for (std::size_t r = 0; r < kc.equations.rows(); ++r) {
    RationalVector row(na * nb);
    for (std::size_t a = 0; a < na; ++a) {
      if (sgn(kc.equations(r, a)) == 0) continue;
      for (std::size_t b = 0; b < nb; ++b) row[a * nb + b] = kc.equations(r, a) * wb[b] * pi0[b];
    }
    eq.append_row(row);
    k.rhs.push_back(kc.rhs[r]);
  }
  if (eq.rows() == 0) return p;
  return CausalSet(p.object(), solve(eq, k.rhs));
}

CausalSet seq_rev(const CausalSet& c, const CausalSet& d) {
  const CausalSet s = seq(d, c);
  const RationalMatrix swap = factor_permutation({d.ambient(), c.ambient()}, {1, 0});
  return transport(s, tensor_object(c.object(), d.object()), swap);
}

CausalSet with_prod(const CausalSet& c, const CausalSet& d) {
  const ModelObject o = biproduct_object(c.object(), d.object());
  if (c.is_empty() || d.is_empty()) return CausalSet(o, AffineSubspace::empty(o.ambient_dim()));
  const RationalVector za = zeros(c.ambient());
  const RationalVector zb = zeros(d.ambient());
  std::vector<RationalVector> dirs;
  for (const auto& x : c.body().directions()) dirs.push_back(concat(x, zb));
  for (const auto& y : d.body().directions()) dirs.push_back(concat(za, y));
  return CausalSet(o, AffineSubspace::from_basis(concat(c.body().basepoint(), d.body().basepoint()), std::move(dirs)));
}

CausalSet plus_coprod(const CausalSet& c, const CausalSet& d) { return dual(with_prod(dual(c), dual(d))); }

CausalSet transport(const CausalSet& c, const ModelObject& target, const RationalMatrix& m) {
  if (m.cols() != c.ambient() || m.rows() != target.ambient_dim())
    throw DimensionError("transport: matrix shape does not match the objects");
  return CausalSet(target, linear_image(m, c.body()));
}

bool member(const CausalSet& c, const RationalVector& x) {
  if (x.size() != c.ambient()) throw DimensionError("member: vector length differs from ambient dimension");
  return cone_member(c.object(), x) && c.body().contains(x);
}

bool set_equal(const CausalSet& c, const CausalSet& d) {
  require_same_object(c, d, "set_equal");
  return c.body() == d.body();
}

bool set_subset(const CausalSet& c, const CausalSet& d) {
  require_same_object(c, d, "set_subset");
  return affine_subset(c.body(), d.body());
}

bool is_flat(const CausalSet& c) {
  if (c.object().is_zero()) return true;
  if (c.is_empty()) return false;
  return scalar_multiple_in(c.body(), uniform_vector(c.object())).has_value() &&
         scalar_multiple_in(dual(c).body(), discard_vector(c.object())).has_value();
}

bool is_first_order(const CausalSet& c) {
  const CausalSet e = dual(c);
  if (e.is_empty() || e.body().dim() != 0) return false;
  if (c.object().is_zero()) return true;
  const RationalVector& p = e.body().basepoint();
  const RationalVector disc = discard_vector(c.object());
  std::size_t lead = 0;
  while (lead < disc.size() && sgn(disc[lead]) == 0) ++lead;
  if (lead == disc.size()) return false;
  const Rational mu = p[lead] / disc[lead];
  return sgn(mu) != 0 && p == scale(mu, disc);
}

CausalSet intersect_sets(const CausalSet& c, const CausalSet& d) {
  require_same_object(c, d, "intersect_sets");
  return CausalSet(c.object(), affine_intersect(c.body(), d.body()));
}

std::string_view verdict_name(CausalVerdict v) {
  switch (v) {
    case CausalVerdict::Causal: return "causal";
    case CausalVerdict::NotCausal: return "not-causal";
    case CausalVerdict::ConeViolation: return "cone-violation";
  }
  return "not-causal";
}

CausalVerdict check_causal(const Morphism& f, const CausalSet& c, const CausalSet& d) {
  require_same_backend(f.src, f.dst);
  if (!(f.src == c.object()) || !(f.dst == d.object()))
    throw DimensionError("check_causal: morphism objects differ from the causal types");
  if (!morphism_cone_member(f.src, f.dst, f.matrix)) return CausalVerdict::ConeViolation;
  if (c.is_empty()) return CausalVerdict::Causal;
  for (const auto& x : c.body().affine_basis()) {
    if (!d.body().contains(f.matrix.apply(x))) return CausalVerdict::NotCausal;
  }
  return CausalVerdict::Causal;
}

namespace {

constexpr std::pair<Structural, std::string_view> kStructuralNames[] = {
    {Structural::Swap, "swap"},
    {Structural::AssocL, "assoc_l"},
    {Structural::AssocR, "assoc_r"},
    {Structural::UnitorL, "unitor_l"},
    {Structural::UnitorR, "unitor_r"},
    {Structural::InterchangeTensor, "interchange_w_tensor"},
    {Structural::InterchangePar, "interchange_w_par"},
    {Structural::LinDistrib, "lin_distrib"},
};

}  // namespace

std::string_view structural_name(Structural s) {
  for (const auto& [k, name] : kStructuralNames) {
    if (k == s) return name;
  }
  return "swap";
}

Structural parse_structural(std::string_view name) {
  for (const auto& [k, n] : kStructuralNames) {
    if (n == name) return k;
  }
  throw InvalidArgument("unknown structural morphism '" + std::string(name) + "'");
}

std::size_t structural_arity(Structural s) {
  switch (s) {
    case Structural::Swap: return 2;
    case Structural::UnitorL:
    case Structural::UnitorR: return 1;
    case Structural::InterchangeTensor:
    case Structural::InterchangePar: return 4;
    default: return 3;
  }
}

Morphism structural_mor(Structural s, const std::vector<ModelObject>& objs) {
  if (objs.size() != structural_arity(s))
    throw InvalidArgument(std::string(structural_name(s)) + " takes " + std::to_string(structural_arity(s)) +
                          " objects, got " + std::to_string(objs.size()));
  for (const auto& o : objs) require_same_backend(objs.front(), o);
  const auto t = [](const ModelObject& a, const ModelObject& b) { return tensor_object(a, b); };
  const auto identity_on = [](const ModelObject& from, const ModelObject& to) {
    return Morphism{from, to, RationalMatrix::identity(from.ambient_dim())};
  };
  switch (s) {
    case Structural::Swap:
      return {t(objs[0], objs[1]), t(objs[1], objs[0]),
              factor_permutation({objs[0].ambient_dim(), objs[1].ambient_dim()}, {1, 0})};
    case Structural::AssocL: return identity_on(t(objs[0], t(objs[1], objs[2])), t(t(objs[0], objs[1]), objs[2]));
    case Structural::AssocR: return identity_on(t(t(objs[0], objs[1]), objs[2]), t(objs[0], t(objs[1], objs[2])));
    case Structural::UnitorL: return identity_on(t(ModelObject::unit(objs[0].backend()), objs[0]), objs[0]);
    case Structural::UnitorR: return identity_on(t(objs[0], ModelObject::unit(objs[0].backend())), objs[0]);
    case Structural::InterchangeTensor: {
      const auto& [r, u, tt, v] = std::tie(objs[0], objs[1], objs[2], objs[3]);
      return {t(t(r, u), t(tt, v)), t(t(r, tt), t(u, v)),
              factor_permutation({r.ambient_dim(), u.ambient_dim(), tt.ambient_dim(), v.ambient_dim()}, {0, 2, 1, 3})};
    }
    case Structural::InterchangePar: {
      const auto& [r, u, tt, v] = std::tie(objs[0], objs[1], objs[2], objs[3]);
      return {t(t(r, tt), t(u, v)), t(t(r, u), t(tt, v)),
              factor_permutation({r.ambient_dim(), tt.ambient_dim(), u.ambient_dim(), v.ambient_dim()}, {0, 2, 1, 3})};
    }
    case Structural::LinDistrib:
      return identity_on(t(objs[0], t(objs[1], objs[2])), t(t(objs[0], objs[1]), objs[2]));
  }
  throw InvalidArgument("unknown structural morphism");
}

}  // namespace caus
