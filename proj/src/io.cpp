#include "caus/io.hpp"

#include <numeric>

#include "caus/error.hpp"
#include "caus/hermitian.hpp"

namespace caus {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a matrix as an array of rows");
  std::vector<RationalVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("matrix rows have different lengths");
  }
  return RationalMatrix::from_rows(rows, cols);
}

Json to_json(const AffineSubspace& s) {
  if (s.is_empty()) return Json{{"empty", true}, {"ambient", s.ambient()}};
  Json dirs = Json::array();
  for (const auto& d : s.directions()) dirs.push_back(to_json(d));
  return Json{{"basepoint", to_json(s.basepoint())}, {"directions", dirs}};
}

AffineSubspace subspace_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a subspace object");
  if (j.value("empty", false)) return AffineSubspace::empty(j.at("ambient").get<std::size_t>());
  RationalVector p = vector_from_json(j.at("basepoint"));
  std::vector<RationalVector> dirs;
  if (j.contains("directions")) {
    for (const auto& d : j.at("directions")) dirs.push_back(vector_from_json(d));
  }
  return AffineSubspace::from_basis(std::move(p), std::move(dirs));
}

namespace {

bool contiguous(const ModelObject& o) {
  std::size_t next = 0;
  for (const auto& slots : o.block_slots())
    for (auto s : slots) {
      if (s != next++) return false;
    }
  return true;
}

}  // namespace

Json to_json(const ModelObject& o) {
  if (!o.is_quantum()) return Json{{"kind", "classical"}, {"dim", o.ambient_dim()}};
  Json blocks = Json::array();
  for (const auto& b : o.blocks()) blocks.push_back(b);
  Json out{{"kind", "quantum"}, {"blocks", blocks}};
  if (!contiguous(o)) out["slots"] = o.block_slots();
  return out;
}

ModelObject object_from_json(const Json& j, Backend backend) {
  if (j.is_number_integer()) {
    const long n = j.get<long>();
    if (n < 0) throw InvalidArgument("object dimension must be nonnegative");
    if (backend == Backend::QuantumCP) return ModelObject::quantum(std::vector<int>(static_cast<std::size_t>(n), 1));
    return ModelObject::classical(static_cast<std::size_t>(n), backend);
  }
  if (j.is_array()) {
    if (backend != Backend::QuantumCP) throw BackendError("block lists need the quantum backend");
    return ModelObject::quantum(j.get<std::vector<int>>());
  }
  if (!j.is_object()) throw InvalidArgument("cannot read an object from " + j.dump());
  const std::string kind = j.value("kind", backend == Backend::QuantumCP ? "quantum" : "classical");
  if (kind == "classical") {
    if (backend == Backend::QuantumCP) throw BackendError("classical object given for the quantum backend");
    return ModelObject::classical(j.at("dim").get<std::size_t>(), backend);
  }
  if (kind != "quantum") throw InvalidArgument("unknown object kind '" + kind + "'");
  if (backend != Backend::QuantumCP) throw BackendError("quantum object given for a classical backend");
  ModelObject o = ModelObject::quantum_blocks(j.at("blocks").get<std::vector<Block>>());
  if (!j.contains("slots")) return o;
  const auto slots = j.at("slots").get<std::vector<std::vector<std::size_t>>>();
  if (slots == o.block_slots()) return o;
  return ModelObject::with_layout(o, slots);
}

Json to_json(const CausalSet& c) {
  Json out;
  out["backend"] = std::string(backend_name(c.backend()));
  out["object"] = to_json(c.object());
  out["body"] = to_json(c.body());
  out["stats"] = Json{{"ambient", c.ambient()},
                      {"affine_dim", c.body().dim()},
                      {"is_flat", is_flat(c)},
                      {"is_first_order", is_first_order(c)}};
  return out;
}

CausalSet causal_set_from_json(const Json& j) {
  const Backend b = parse_backend(j.at("backend").get<std::string>());
  return CausalSet(object_from_json(j.at("object"), b), subspace_from_json(j.at("body")));
}

Json to_json(const Morphism& f) {
  Json out;
  out["backend"] = std::string(backend_name(f.src.backend()));
  out["src"] = to_json(f.src);
  out["dst"] = to_json(f.dst);
  out["matrix"] = to_json(f.matrix);
  return out;
}

Morphism morphism_from_json(const Json& j) {
  const Backend b = parse_backend(j.value("backend", "classical"));
  Morphism f{object_from_json(j.at("src"), b), object_from_json(j.at("dst"), b), matrix_from_json(j.at("matrix"))};
  if (f.matrix.rows() == 0 && f.dst.ambient_dim() == 0) f.matrix = RationalMatrix(0, f.src.ambient_dim());
  if (f.matrix.rows() != f.dst.ambient_dim() || f.matrix.cols() != f.src.ambient_dim())
    throw DimensionError("morphism matrix must be " + std::to_string(f.dst.ambient_dim()) + " x " +
                         std::to_string(f.src.ambient_dim()));
  return f;
}

RationalVector state_from_json(const Json& j, const ModelObject& o) {
  if (j.contains("vector")) {
    RationalVector v = vector_from_json(j.at("vector"));
    if (v.size() != o.ambient_dim())
      throw DimensionError("state has " + std::to_string(v.size()) + " coordinates, object needs " +
                           std::to_string(o.ambient_dim()));
    return v;
  }
  if (!j.contains("blocks")) throw InvalidArgument("state needs \"vector\" or \"blocks\"");
  if (!o.is_quantum()) throw BackendError("block states need the quantum backend");
  const auto& jb = j.at("blocks");
  if (jb.size() != o.blocks().size()) throw DimensionError("state block count differs from the object");
  std::vector<ComplexMatrix> blocks;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const auto d = static_cast<std::size_t>(block_dim(o.blocks()[i]));
    const RationalMatrix re = matrix_from_json(jb[i].at("re"));
    const RationalMatrix im = jb[i].contains("im") ? matrix_from_json(jb[i].at("im")) : RationalMatrix(d, d);
    if (re.rows() != d || re.cols() != d || im.rows() != d || im.cols() != d)
      throw DimensionError("block " + std::to_string(i) + " must be " + std::to_string(d) + " x " + std::to_string(d));
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        m.re[r * d + c] = re(r, c);
        m.im[r * d + c] = im(r, c);
      }
    if (!m.is_hermitian()) throw InvalidArgument("block " + std::to_string(i) + " is not Hermitian");
    blocks.push_back(std::move(m));
  }
  return from_blocks(o, blocks);
}

}  // namespace caus
