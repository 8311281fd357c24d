#include "caus/model.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "caus/error.hpp"
#include "caus/hermitian.hpp"

namespace caus {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::ClassicalNonneg: return "classical";
    case Backend::ClassicalAffine: return "classical-affine";
    case Backend::QuantumCP: return "quantum";
  }
  return "classical";
}

Backend parse_backend(std::string_view name) {
  if (name == "classical") return Backend::ClassicalNonneg;
  if (name == "classical-affine") return Backend::ClassicalAffine;
  if (name == "quantum") return Backend::QuantumCP;
  throw InvalidArgument("unknown backend '" + std::string(name) + "'");
}

int block_dim(const Block& b) {
  return std::accumulate(b.begin(), b.end(), 1, [](int acc, int d) { return acc * d; });
}

ModelObject ModelObject::classical(std::size_t n, Backend backend) {
  if (backend == Backend::QuantumCP) throw BackendError("classical object requested on the quantum backend");
  check_ambient(n);
  ModelObject o;
  o.backend_ = backend;
  o.ambient_ = n;
  return o;
}

ModelObject ModelObject::quantum(const std::vector<int>& block_dims) {
  std::vector<Block> blocks;
  for (int d : block_dims) {
    if (d < 1) throw InvalidArgument("quantum block dimensions must be positive");
    blocks.push_back(d == 1 ? Block{} : Block{d});
  }
  return quantum_blocks(std::move(blocks));
}

ModelObject ModelObject::quantum_blocks(std::vector<Block> blocks) {
  ModelObject o;
  o.backend_ = Backend::QuantumCP;
  std::size_t ambient = 0;
  for (auto& b : blocks) {
    if (std::any_of(b.begin(), b.end(), [](int d) { return d < 1; }))
      throw InvalidArgument("quantum factor dimensions must be positive");
    std::erase(b, 1);
    const auto d = static_cast<std::size_t>(block_dim(b));
    ambient += d * d;
    check_ambient(ambient);
  }
  std::size_t next = 0;
  for (const auto& b : blocks) {
    const auto d = static_cast<std::size_t>(block_dim(b));
    std::vector<std::size_t> slots(d * d);
    std::iota(slots.begin(), slots.end(), next);
    next += d * d;
    o.slots_.push_back(std::move(slots));
  }
  o.ambient_ = ambient;
  o.blocks_ = std::move(blocks);
  return o;
}

ModelObject ModelObject::with_layout(const ModelObject& o, std::vector<std::vector<std::size_t>> slots) {
  if (!o.is_quantum()) throw InvalidArgument("slot maps apply to quantum objects only");
  if (slots.size() != o.blocks_.size()) throw DimensionError("slot map has the wrong number of blocks");
  std::vector<bool> seen(o.ambient_, false);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].size() != o.slots_[i].size()) throw DimensionError("slot map block has the wrong size");
    for (auto s : slots[i]) {
      if (s >= o.ambient_ || seen[s]) throw InvalidArgument("slot map is not a permutation of the coordinates");
      seen[s] = true;
    }
  }
  ModelObject out = o;
  out.slots_ = std::move(slots);
  return out;
}

ModelObject ModelObject::zero(Backend backend) {
  return backend == Backend::QuantumCP ? quantum_blocks({}) : classical(0, backend);
}

ModelObject ModelObject::unit(Backend backend) {
  return backend == Backend::QuantumCP ? quantum_blocks({Block{}}) : classical(1, backend);
}

std::vector<int> ModelObject::block_dims() const {
  std::vector<int> dims;
  for (const auto& b : blocks_) dims.push_back(block_dim(b));
  return dims;
}

std::string ModelObject::describe() const {
  if (!is_quantum()) return std::to_string(ambient_);
  std::string s = "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    if (blocks_[i].empty()) {
      s += "1";
      continue;
    }
    for (std::size_t t = 0; t < blocks_[i].size(); ++t) {
      if (t) s += "x";
      s += std::to_string(blocks_[i][t]);
    }
  }
  return s + "]";
}

void require_same_backend(const ModelObject& a, const ModelObject& b) {
  if (a.backend() != b.backend()) {
    throw BackendError("cannot combine a " + std::string(backend_name(a.backend())) + " object with a " +
                       std::string(backend_name(b.backend())) + " object");
  }
}

namespace {

// Weights of one d-dimensional factor, slot k = i * d + j.
RationalVector factor_weights(int d) {
  RationalVector w(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w[static_cast<std::size_t>(i * d + j)] = i == j ? 1 : (i < j ? 2 : -2);
  return w;
}

RationalVector factor_identity(int d) {
  RationalVector v(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i * d + i)] = 1;
  return v;
}

// Trace-one fiducial states of one factor: |i><i|, then for i < j the states
// (|i>+|j>)(<i|+<j|)/2 and (|i>+i|j>)(<i|-i<j|)/2.
std::vector<RationalVector> factor_fiducials(int d) {
  const auto n = static_cast<std::size_t>(d * d);
  std::vector<RationalVector> out;
  for (int i = 0; i < d; ++i) out.push_back(unit_vector(n, static_cast<std::size_t>(i * d + i)));
  const Rational half(1, 2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      RationalVector plus(n);
      plus[static_cast<std::size_t>(i * d + i)] = half;
      plus[static_cast<std::size_t>(j * d + j)] = half;
      plus[static_cast<std::size_t>(i * d + j)] = half;
      out.push_back(std::move(plus));
      RationalVector phase(n);
      phase[static_cast<std::size_t>(i * d + i)] = half;
      phase[static_cast<std::size_t>(j * d + j)] = half;
      phase[static_cast<std::size_t>(j * d + i)] = -half;
      out.push_back(std::move(phase));
    }
  return out;
}

template <class PerFactor>
RationalVector block_kron(const Block& b, PerFactor&& per_factor) {
  RationalVector v{Rational(1)};
  for (int d : b) v = kron(v, per_factor(d));
  return v;
}

std::vector<RationalVector> block_fiducials(const Block& b) {
  std::vector<RationalVector> acc{RationalVector{Rational(1)}};
  for (int d : b) {
    std::vector<RationalVector> next;
    const auto fs = factor_fiducials(d);
    for (const auto& a : acc)
      for (const auto& f : fs) next.push_back(kron(a, f));
    acc = std::move(next);
  }
  return acc;
}

void scatter(const ModelObject& o, std::size_t block, const RationalVector& part, RationalVector& out) {
  const auto& slots = o.block_slots()[block];
  for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = part[k];
}

template <class PerBlock>
RationalVector concat_blocks(const ModelObject& o, PerBlock&& per_block) {
  RationalVector v(o.ambient_dim());
  for (std::size_t i = 0; i < o.blocks().size(); ++i) scatter(o, i, per_block(o.blocks()[i]), v);
  return v;
}

}  // namespace

RationalVector pairing_weights(const ModelObject& o) {
  if (!o.is_quantum()) return RationalVector(o.ambient_dim(), Rational(1));
  return concat_blocks(o, [](const Block& b) { return block_kron(b, factor_weights); });
}

RationalVector discard_vector(const ModelObject& o) {
  if (!o.is_quantum()) return RationalVector(o.ambient_dim(), Rational(1));
  return concat_blocks(o, [](const Block& b) { return block_kron(b, factor_identity); });
}

RationalVector uniform_vector(const ModelObject& o) { return discard_vector(o); }

StructureVectors structure_vectors(const ModelObject& o) {
  StructureVectors s;
  s.discard = discard_vector(o);
  s.uniform = uniform_vector(o);
  s.zero_object = o.is_zero();
  if (!s.zero_object) s.dim_scalar = pairing(o, s.discard, s.uniform);
  const std::size_t n = o.ambient_dim();
  if (!o.is_quantum()) {
    for (std::size_t i = 0; i < n; ++i) s.causal_basis.push_back(unit_vector(n, i));
    return s;
  }
  for (std::size_t i = 0; i < o.blocks().size(); ++i) {
    for (const auto& f : block_fiducials(o.blocks()[i])) {
      RationalVector v(n);
      scatter(o, i, f, v);
      s.causal_basis.push_back(std::move(v));
    }
  }
  return s;
}

bool cone_member(const ModelObject& o, const RationalVector& x) {
  if (x.size() != o.ambient_dim()) throw DimensionError("cone_member: vector length differs from ambient dimension");
  switch (o.backend()) {
    case Backend::ClassicalAffine: return true;
    case Backend::ClassicalNonneg:
      return std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) >= 0; });
    case Backend::QuantumCP:
      for (const auto& m : to_blocks(o, x)) {
        if (!is_psd(m)) return false;
      }
      return true;
  }
  return false;
}

ModelObject tensor_object(const ModelObject& a, const ModelObject& b) {
  require_same_backend(a, b);
  if (!a.is_quantum()) return ModelObject::classical(a.ambient_dim() * b.ambient_dim(), a.backend());
  check_ambient(a.ambient_dim() * b.ambient_dim());
  ModelObject o;
  o.backend_ = Backend::QuantumCP;
  o.ambient_ = a.ambient_dim() * b.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  for (std::size_t r = 0; r < a.blocks().size(); ++r)
    for (std::size_t u = 0; u < b.blocks().size(); ++u) {
      Block z = a.blocks()[r];
      z.insert(z.end(), b.blocks()[u].begin(), b.blocks()[u].end());
      o.blocks_.push_back(std::move(z));
      std::vector<std::size_t> slots;
      for (auto i : a.block_slots()[r])
        for (auto j : b.block_slots()[u]) slots.push_back(i * nb + j);
      o.slots_.push_back(std::move(slots));
    }
  return o;
}

TensorStructure tensor_structure(const ModelObject& a, const ModelObject& b) {
  return {tensor_object(a, b), factor_permutation({a.ambient_dim(), b.ambient_dim()}, {1, 0})};
}

RationalVector kron_coords(const RationalVector& x, const RationalVector& y) { return kron(x, y); }

RationalMatrix factor_permutation(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& order) {
  const std::size_t m = sizes.size();
  if (order.size() != m) throw DimensionError("factor_permutation: order length differs from factor count");
  std::vector<bool> seen(m, false);
  for (auto i : order) {
    if (i >= m || seen[i]) throw InvalidArgument("factor_permutation: order is not a permutation");
    seen[i] = true;
  }
  std::size_t total = 1;
  for (auto s : sizes) total *= s;
  check_ambient(total);
  RationalMatrix p(total, total);
  std::vector<std::size_t> idx(m);
  for (std::size_t in = 0; in < total; ++in) {
    std::size_t rest = in;
    for (std::size_t t = m; t > 0; --t) {
      idx[t - 1] = rest % sizes[t - 1];
      rest /= sizes[t - 1];
    }
    std::size_t out = 0;
    for (std::size_t t = 0; t < m; ++t) out = out * sizes[order[t]] + idx[order[t]];
    p(out, in) = 1;
  }
  return p;
}

ModelObject biproduct_object(const ModelObject& a, const ModelObject& b) {
  require_same_backend(a, b);
  if (!a.is_quantum()) return ModelObject::classical(a.ambient_dim() + b.ambient_dim(), a.backend());
  check_ambient(a.ambient_dim() + b.ambient_dim());
  ModelObject o = a;
  o.ambient_ = a.ambient_dim() + b.ambient_dim();
  o.blocks_.insert(o.blocks_.end(), b.blocks().begin(), b.blocks().end());
  for (const auto& slots : b.block_slots()) {
    std::vector<std::size_t> shifted;
    for (auto i : slots) shifted.push_back(i + a.ambient_dim());
    o.slots_.push_back(std::move(shifted));
  }
  return o;
}

BiproductStructure biproduct_structure(const ModelObject& a, const ModelObject& b) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  BiproductStructure s{biproduct_object(a, b), RationalMatrix(na + nb, na), RationalMatrix(na + nb, nb),
                       RationalMatrix(na, na + nb), RationalMatrix(nb, na + nb)};
  for (std::size_t i = 0; i < na; ++i) {
    s.inject1(i, i) = 1;
    s.project1(i, i) = 1;
  }
  for (std::size_t i = 0; i < nb; ++i) {
    s.inject2(na + i, i) = 1;
    s.project2(i, na + i) = 1;
  }
  return s;
}

Rational pairing(const ModelObject& o, const RationalVector& e, const RationalVector& x) {
  const std::size_t n = o.ambient_dim();
  if (e.size() != n || x.size() != n) throw DimensionError("pairing: vector length differs from ambient dimension");
  if (!o.is_quantum()) return dot(e, x);
  const auto w = pairing_weights(o);
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(e[i]) != 0 && sgn(x[i]) != 0) s += w[i] * e[i] * x[i];
  }
  return s;
}

RationalVector partial_right(const ModelObject& a, const ModelObject& b, const RationalVector& e,
                             const RationalVector& h) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  if (e.size() != nb || h.size() != na * nb) throw DimensionError("partial_right: shape mismatch");
  const auto w = pairing_weights(b);
  RationalVector out(na);
  for (std::size_t j = 0; j < nb; ++j) {
    if (sgn(e[j]) == 0) continue;
    const Rational we = w[j] * e[j];
    for (std::size_t i = 0; i < na; ++i) {
      if (sgn(h[i * nb + j]) != 0) out[i] += we * h[i * nb + j];
    }
  }
  return out;
}

RationalVector partial_left(const ModelObject& a, const ModelObject& b, const RationalVector& e,
                            const RationalVector& h) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  if (e.size() != na || h.size() != na * nb) throw DimensionError("partial_left: shape mismatch");
  const auto w = pairing_weights(a);
  RationalVector out(nb);
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(e[i]) == 0) continue;
    const Rational we = w[i] * e[i];
    for (std::size_t j = 0; j < nb; ++j) {
      if (sgn(h[i * nb + j]) != 0) out[j] += we * h[i * nb + j];
    }
  }
  return out;
}

Complement effect_complement(const ModelObject& o, const RationalVector& effect) {
  if (effect.size() != o.ambient_dim()) throw DimensionError("effect_complement: length differs from ambient dimension");
  if (!cone_member(o, effect)) throw ConeViolation("effect_complement: not a valid effect");
  const auto discard = discard_vector(o);
  Rational lambda = 0;
  if (o.is_quantum()) {
    lambda = pairing(o, discard, effect);
  } else {
    for (const auto& v : effect) lambda = std::max(lambda, v);
  }
  if (sgn(lambda) <= 0) lambda = 1;
  return {sub(scale(lambda, discard), effect), lambda};
}

RationalVector bend(const ModelObject& a, const ModelObject& b, const RationalMatrix& f) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  if (f.rows() != nb || f.cols() != na) throw DimensionError("bend: matrix shape does not match A -> B");
  const auto w = pairing_weights(a);
  RationalVector h(na * nb);
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t l = 0; l < nb; ++l) {
      if (sgn(f(l, k)) != 0) h[k * nb + l] = f(l, k) / w[k];
    }
  return h;
}

RationalMatrix unbend(const ModelObject& a, const ModelObject& b, const RationalVector& h) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  if (h.size() != na * nb) throw DimensionError("unbend: length differs from A (x) B");
  const auto w = pairing_weights(a);
  RationalMatrix f(nb, na);
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t l = 0; l < nb; ++l) f(l, k) = w[k] * h[k * nb + l];
  return f;
}

bool morphism_cone_member(const ModelObject& a, const ModelObject& b, const RationalMatrix& f) {
  if (f.rows() != b.ambient_dim() || f.cols() != a.ambient_dim())
    throw DimensionError("morphism matrix shape does not match its source and target");
  switch (a.backend()) {
    case Backend::ClassicalAffine: return true;
    case Backend::ClassicalNonneg:
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) {
          if (sgn(f(r, c)) < 0) return false;
        }
      return true;
    case Backend::QuantumCP: return cone_member(tensor_object(a, b), bend(a, b, f));
  }
  return false;
}

ProcessComplement process_complement(const ModelObject& a, const ModelObject& b, const RationalMatrix& f) {
  require_same_backend(a, b);
  if (!morphism_cone_member(a, b, f)) throw ConeViolation("process_complement: map is not in the morphism cone");
  const ModelObject ab = tensor_object(a, b);
  const Complement c = effect_complement(ab, bend(a, b, f));
  return {unbend(a, b, c.complement), c.lambda};
}

}  // namespace caus
