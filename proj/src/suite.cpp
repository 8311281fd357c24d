#include "caus/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <utility>

#include "caus/dsl.hpp"
#include "caus/error.hpp"
#include "caus/hermitian.hpp"
#include "caus/sub_closure.hpp"

namespace caus {

Json to_json(const CheckReport& r, bool with_timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  Json out{{"check", r.check}, {"instances", r.instances}, {"failures", failures}};
  if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

RandomTypeGenerator::RandomTypeGenerator(std::uint64_t seed, Backend backend, std::size_t max_ambient)
    : rng_(seed), backend_(backend), max_ambient_(std::max<std::size_t>(1, max_ambient)) {}

long RandomTypeGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

ModelObject RandomTypeGenerator::object() {
  const auto cap = static_cast<long>(max_ambient_);
  if (backend_ != Backend::QuantumCP) return ModelObject::classical(static_cast<std::size_t>(uniform(1, cap)), backend_);
  std::vector<int> dims;
  long left = cap;
  do {
    long dmax = 1;
    while (dmax < 3 && (dmax + 1) * (dmax + 1) <= left) ++dmax;
    const long d = uniform(1, dmax);
    dims.push_back(static_cast<int>(d));
    left -= d * d;
  } while (left > 0 && dims.size() < 3 && uniform(0, 1) == 1);
  return ModelObject::quantum(dims);
}

namespace {

RationalVector normalized(const ModelObject& o, RationalVector x) {
  const Rational t = pairing(o, discard_vector(o), x);
  return scale(1 / t, std::move(x));
}

// v v^dagger for a random Gaussian-integer vector, placed in block `block`.
ComplexMatrix rank_one(RandomTypeGenerator& g, std::size_t d) {
  std::vector<long> re(d), im(d);
  bool nonzero = false;
  while (!nonzero) {
    for (std::size_t i = 0; i < d; ++i) {
      re[i] = g.uniform(-2, 2);
      im[i] = g.uniform(-2, 2);
      nonzero = nonzero || re[i] != 0 || im[i] != 0;
    }
  }
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      // (a + ib)(c - id) = ac + bd + i(bc - ad)
      m.re[r * d + c] = re[r] * re[c] + im[r] * im[c];
      m.im[r * d + c] = im[r] * re[c] - re[r] * im[c];
    }
  return m;
}

RationalVector random_psd(RandomTypeGenerator& g, const ModelObject& o) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : o.blocks()) blocks.emplace_back(static_cast<std::size_t>(block_dim(b)));
  const long terms = g.uniform(1, 2);
  for (long t = 0; t < terms; ++t) {
    const auto i = static_cast<std::size_t>(g.uniform(0, static_cast<long>(blocks.size()) - 1));
    const ComplexMatrix r = rank_one(g, blocks[i].dim);
    for (std::size_t k = 0; k < r.re.size(); ++k) {
      blocks[i].re[k] += r.re[k];
      blocks[i].im[k] += r.im[k];
    }
  }
  return from_blocks(o, blocks);
}

}  // namespace

RationalVector RandomTypeGenerator::cone_point(const ModelObject& o) {
  const std::size_t n = o.ambient_dim();
  if (n == 0) throw InvalidArgument("cone_point: the zero object has no normalized states");
  if (backend_ == Backend::QuantumCP) return normalized(o, random_psd(*this, o));
  const long lo = backend_ == Backend::ClassicalAffine ? -3 : 0;
  while (true) {
    RationalVector x(n);
    for (auto& v : x) v = uniform(lo, 3);
    if (sgn(pairing(o, discard_vector(o), x)) != 0) return normalized(o, std::move(x));
  }
}

FlatSample RandomTypeGenerator::flat(const ModelObject& o) {
  const std::size_t n = o.ambient_dim();
  std::vector<RationalVector> points{normalized(o, uniform_vector(o))};
  const long extra = uniform(0, static_cast<long>(n) - 1);
  for (long i = 0; i < extra; ++i) points.push_back(cone_point(o));
  CausalSet c(o, affine_hull(points, n));
  return {std::move(c), std::move(points)};
}

RationalMatrix RandomTypeGenerator::process(const ModelObject& a, const ModelObject& b) {
  if (backend_ == Backend::QuantumCP) {
    const ModelObject ab = tensor_object(a, b);
    return unbend(a, b, random_psd(*this, ab));
  }
  const long lo = backend_ == Backend::ClassicalAffine ? -3 : 0;
  RationalMatrix m(b.ambient_dim(), a.ambient_dim());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = uniform(0, 2) == 0 ? 0 : uniform(lo, 3);
  return m;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : salt) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

constexpr Backend kBackends[] = {Backend::ClassicalNonneg, Backend::ClassicalAffine, Backend::QuantumCP};

std::string show(const CausalSet& c) { return to_json(c).dump(); }
std::string show(const RationalVector& v) { return to_string(v); }
std::string show(bool b) { return b ? "true" : "false"; }

template <class... Sets>
std::string show_all(const Sets&... sets) {
  std::string s;
  ((s += (s.empty() ? "" : " ; ") + show(sets)), ...);
  return s;
}

class Run {
 public:
  Run(std::string name, const CheckParams& p) : params(p) { report.check = std::move(name); }

  RandomTypeGenerator gen(Backend b, std::size_t default_ambient) {
    const std::size_t cap = params.max_ambient ? params.max_ambient : default_ambient;
    return RandomTypeGenerator(mix(params.seed, report.check + "/" + std::string(backend_name(b))), b, cap);
  }

  std::size_t count(std::size_t fallback) const { return params.instances ? params.instances : fallback; }

  /// Records one property evaluation.
  template <class Inputs>
  void expect(bool ok, Inputs&& inputs, std::string expected = "true", std::string got = "false") {
    ++report.instances;
    if (!ok) report.failures.push_back({inputs(), std::move(expected), std::move(got)});
  }

  template <class Inputs>
  void expect_equal(const CausalSet& lhs, const CausalSet& rhs, Inputs&& inputs) {
    ++report.instances;
    if (!(lhs.object() == rhs.object()) || !(lhs.body() == rhs.body()))
      report.failures.push_back({inputs(), show(rhs), show(lhs)});
  }

  CheckParams params;
  CheckReport report;
};

// ---------------------------------------------------------------------------

void affine_closure(Run& run) {
  const auto d = run.params.dual_override ? run.params.dual_override : [](const CausalSet& c) { return dual(c); };
  for (Backend b : kBackends) {
    auto g = run.gen(b, b == Backend::QuantumCP ? 9 : 8);
    for (std::size_t i = 0; i < run.count(200); ++i) {
      const CausalSet c = g.flat().set;
      run.expect_equal(d(d(c)), c, [&] { return show(c); });
    }
  }
}

void dimension_laws(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, 4);
    for (std::size_t i = 0; i < run.count(100); ++i) {
      const CausalSet c = g.flat().set;
      const CausalSet e = g.flat().set;
      const long dc = c.body().dim();
      const long de = e.body().dim();
      const auto inputs = [&] { return show_all(c, e); };
      run.expect(dc + dual(c).body().dim() == static_cast<long>(c.ambient()) - 1, inputs);
      run.expect(tensor(c, e).body().dim() == (dc + 1) * (de + 1) - 1, inputs);
      run.expect(with_prod(c, e).body().dim() == dc + de, inputs);
      run.expect(plus_coprod(c, e).body().dim() == dc + de + 1, inputs);
      // Rank of the product points, computed without the hull routine.
      RationalMatrix diffs(0, c.ambient() * e.ambient());
      const auto pc = c.body().affine_basis();
      const auto pe = e.body().affine_basis();
      const RationalVector origin = kron(pc.front(), pe.front());
      for (const auto& x : pc)
        for (const auto& y : pe) diffs.append_row(sub(kron(x, y), origin));
      run.expect(static_cast<long>(rank(diffs)) == tensor(c, e).body().dim(), inputs);
    }
  }
}

struct PairPopulation {
  Backend backend;
  std::size_t count;
  std::size_t max_ambient;
  bool qubits;  ///< factors fixed to a single two-dimensional block
};

std::vector<PairPopulation> pair_populations(const Run& run) {
  return {{Backend::ClassicalNonneg, run.count(50), 4, false},
          {Backend::ClassicalAffine, run.count(20), 4, false},
          {Backend::QuantumCP, run.count(10), 4, true}};
}

std::pair<FlatSample, FlatSample> draw_pair(RandomTypeGenerator& g, bool qubits) {
  if (qubits) {
    const ModelObject q = ModelObject::quantum({2});
    FlatSample a = g.flat(q);
    return {std::move(a), g.flat(q)};
  }
  FlatSample a = g.flat();
  return {std::move(a), g.flat()};
}

void nonsignalling_eq(Run& run) {
  for (const auto& pop : pair_populations(run)) {
    auto g = run.gen(pop.backend, pop.max_ambient);
    for (std::size_t i = 0; i < pop.count; ++i) {
      const auto [a, b] = draw_pair(g, pop.qubits);
      run.expect_equal(intersect_sets(seq(a.set, b.set), seq_rev(a.set, b.set)), tensor(a.set, b.set),
                       [&] { return show_all(a.set, b.set); });
    }
  }
}

void seq_selfdual(Run& run) {
  for (const auto& pop : pair_populations(run)) {
    auto g = run.gen(pop.backend, pop.max_ambient);
    for (std::size_t i = 0; i < pop.count; ++i) {
      const auto [a, b] = draw_pair(g, pop.qubits);
      const CausalSet s = seq(a.set, b.set);
      const auto inputs = [&] { return show_all(a.set, b.set); };
      run.expect_equal(s, dual(seq(dual(a.set), dual(b.set))), inputs);
      // sum_i f_i (x) g_i with g_i in b and sum_i f_i a convex mixture of points of a.
      RationalVector h(s.ambient());
      long total = 0;
      std::vector<long> weights;
      for (std::size_t k = 0; k < a.generators.size(); ++k) {
        weights.push_back(g.uniform(0, 3));
        total += weights.back();
      }
      if (total == 0) {
        weights.front() = 1;
        total = 1;
      }
      for (std::size_t k = 0; k < a.generators.size(); ++k) {
        const auto& gk = b.generators[static_cast<std::size_t>(g.uniform(0, static_cast<long>(b.generators.size()) - 1))];
        h = add(h, kron(scale(make_rational(weights[k], total), a.generators[k]), gk));
      }
      run.expect(member(s, h), [&] { return show_all(a.set, b.set) + " ; h=" + show(h); });
    }
  }
}

void inclusion_chain(Run& run) {
  for (const auto& pop : pair_populations(run)) {
    auto g = run.gen(pop.backend, pop.max_ambient);
    for (std::size_t i = 0; i < pop.count; ++i) {
      const auto [a, b] = draw_pair(g, pop.qubits);
      const CausalSet t = tensor(a.set, b.set);
      const CausalSet s = seq(a.set, b.set);
      const CausalSet r = seq_rev(a.set, b.set);
      const CausalSet p = par(a.set, b.set);
      const auto inputs = [&] { return show_all(a.set, b.set); };
      run.expect(set_subset(t, s) && set_subset(s, p), inputs);
      run.expect(set_subset(t, r) && set_subset(r, p), inputs);
      run.expect(is_flat(s) && is_flat(t) && is_flat(p), inputs);
    }
  }
}

void no_interaction(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, b == Backend::QuantumCP ? 4 : 5);
    for (std::size_t i = 0; i < run.count(50); ++i) {
      const ModelObject a = g.object();
      const Rational mu = make_rational(g.uniform(1, 4), g.uniform(1, 4));
      const RationalVector point = scale(mu, uniform_vector(a));
      const CausalSet ca(a, AffineSubspace::point(point));
      const CausalSet cb = g.flat().set;
      const CausalSet t = tensor(ca, cb);
      const auto inputs = [&] { return show_all(ca, cb); };
      std::vector<RationalVector> dirs;
      for (const auto& d : cb.body().directions()) dirs.push_back(kron(point, d));
      const CausalSet translate(t.object(), AffineSubspace::from_basis(kron(point, cb.body().basepoint()), dirs));
      run.expect_equal(t, translate, inputs);
      // Every element factors as (mu * uniform) (x) g with g recovered by discarding the first factor.
      const Rational scale_back = pairing(a, discard_vector(a), point);
      for (const auto& h : t.body().affine_basis()) {
        const RationalVector gb = scale(1 / scale_back, partial_left(a, cb.object(), discard_vector(a), h));
        run.expect(kron(point, gb) == h && cb.body().contains(gb), inputs);
      }
    }
  }
}

// ---------------------------------------------------------------------------

Morphism reversed(const Morphism& f) { return {f.dst, f.src, f.matrix.transpose()}; }

void bv_interchange(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, 3);
    for (std::size_t i = 0; i < run.count(8); ++i) {
      std::vector<CausalSet> f;
      for (int k = 0; k < 4; ++k) f.push_back(g.flat().set);
      const auto& [r, u, t, v] = std::tie(f[0], f[1], f[2], f[3]);
      const auto inputs = [&] { return show_all(r, u, t, v); };
      const auto causal = [&](const Morphism& m, const CausalSet& src, const CausalSet& dst, const char* what) {
        const CausalVerdict verdict = check_causal(m, src, dst);
        run.expect(verdict == CausalVerdict::Causal, inputs, std::string(what) + ": causal",
                   std::string(verdict_name(verdict)));
      };
      const std::vector<ModelObject> o4{r.object(), u.object(), t.object(), v.object()};
      causal(structural_mor(Structural::InterchangeTensor, o4), tensor(seq(r, u), seq(t, v)),
             seq(tensor(r, t), tensor(u, v)), "interchange_w_tensor");
      causal(structural_mor(Structural::InterchangePar, o4), seq(par(r, t), par(u, v)), par(seq(r, u), seq(t, v)),
             "interchange_w_par");

      const std::vector<ModelObject> o3{r.object(), u.object(), t.object()};
      const Morphism al = structural_mor(Structural::AssocL, o3);
      const Morphism ar = structural_mor(Structural::AssocR, o3);
      using Ctor = CausalSet (*)(const CausalSet&, const CausalSet&);
      for (Ctor op : {static_cast<Ctor>(tensor), static_cast<Ctor>(par), static_cast<Ctor>(seq)}) {
        causal(al, op(r, op(u, t)), op(op(r, u), t), "assoc_l");
        causal(ar, op(op(r, u), t), op(r, op(u, t)), "assoc_r");
      }
      causal(structural_mor(Structural::LinDistrib, o3), tensor(r, par(u, t)), par(tensor(r, u), t), "lin_distrib");
      const Morphism sw = structural_mor(Structural::Swap, {r.object(), u.object()});
      causal(sw, tensor(r, u), tensor(u, r), "swap tensor");
      causal(sw, par(r, u), par(u, r), "swap par");
      causal(sw, seq(r, u), seq_rev(u, r), "swap seq");

      const CausalSet unit = unit_type(b);
      const Morphism ul = structural_mor(Structural::UnitorL, {r.object()});
      const Morphism ur = structural_mor(Structural::UnitorR, {r.object()});
      for (Ctor op : {static_cast<Ctor>(tensor), static_cast<Ctor>(par), static_cast<Ctor>(seq)}) {
        causal(ul, op(unit, r), r, "unitor_l");
        causal(reversed(ul), r, op(unit, r), "unitor_l inverse");
        causal(ur, op(r, unit), r, "unitor_r");
        causal(reversed(ur), r, op(r, unit), "unitor_r inverse");
      }
      const Morphism id{tensor_object(r.object(), u.object()), tensor_object(r.object(), u.object()),
                        RationalMatrix::identity(r.ambient() * u.ambient())};
      causal(id, tensor(r, u), seq(r, u), "tensor to seq");
      causal(id, seq(r, u), par(r, u), "seq to par");
    }
  }
}

// ---------------------------------------------------------------------------

}  // namespace

const std::vector<CatalogueEntry>& first_order_catalogue() {
  static const std::vector<CatalogueEntry> entries = [] {
    const Backend c = Backend::ClassicalNonneg;
    const Backend a = Backend::ClassicalAffine;
    const Backend q = Backend::QuantumCP;
    std::vector<CatalogueEntry> out = {
        {"C[2]", c, true},
        {"C[3]", c, true},
        {"Q[2]", q, true},
        {"C[2]&C[2]", c, false},
        {"C[2]+C[3]", c, true},
        {"C[2]-oC[2]", c, false},
        {"U[2]", c, false},
    };
    const std::vector<std::pair<std::string, bool>> common = {
        {"C[2]", true},           {"C[3]", true},           {"C[2]&C[2]", false},        {"C[2]+C[3]", true},
        {"C[2]-oC[2]", false},    {"U[2]", false},          {"C[2] x C[2]", true},       {"C[2] | C[3]", true},
        {"C[2] < C[2]", true},    {"C[2]*", false},         {"I", true},                 {"ZERO", true},
        {"ONE", false},           {"C[2] x U[2]", false},   {"(C[2]-oC[2]) < C[2]", false},
    };
    for (Backend b : {c, a, q})
      for (const auto& [e, fo] : common) out.push_back({e, b, fo});
    for (const auto& [e, fo] : std::vector<std::pair<std::string, bool>>{{"Q[2]", true},
                                                                          {"Q[3]", true},
                                                                          {"Q[2,1]", true},
                                                                          {"Q[2]&Q[2]", false},
                                                                          {"Q[2]+C[2]", true},
                                                                          {"Q[2]-oQ[2]", false},
                                                                          {"UQ[2]", false},
                                                                          {"Q[2] x Q[2]", true},
                                                                          {"Q[2]*", false}})
      out.push_back({e, q, fo});
    return out;
  }();
  return entries;
}

namespace {

void first_order_char(Run& run) {
  for (const auto& entry : first_order_catalogue()) {
    const CausalSet c = eval(parse(entry.expr), entry.backend);
    const bool by_classify = is_first_order(c);
    const CausalSet cd = dual(c);
    const bool by_equality = set_equal(par(cd, c), seq(cd, c));
    const auto inputs = [&] { return entry.expr + " on " + std::string(backend_name(entry.backend)); };
    run.expect(by_classify == entry.first_order, inputs, "classify " + show(entry.first_order), show(by_classify));
    run.expect(by_equality == entry.first_order, inputs, "par = seq " + show(entry.first_order), show(by_equality));
  }
}

void causality_exception(Run& run) {
  for (const auto& entry : first_order_catalogue()) {
    if (entry.first_order) continue;
    const CausalSet a = eval(parse(entry.expr), entry.backend);
    if (a.object().is_zero()) continue;
    const ModelObject& o = a.object();
    const auto inputs = [&] { return entry.expr + " on " + std::string(backend_name(entry.backend)); };
    const auto effects = dual(a).body().affine_basis();
    if (effects.size() < 2) {
      run.expect(false, inputs, "two distinct effects", "fewer than two");
      continue;
    }
    const RationalVector& pi = effects[0];
    const RationalVector& pi2 = effects[1];
    const StructureVectors sv = structure_vectors(o);
    const RationalVector* f = nullptr;
    for (const auto& x : sv.causal_basis) {
      if (pairing(o, pi, x) != pairing(o, pi2, x)) {
        f = &x;
        break;
      }
    }
    if (!f) {
      run.expect(false, inputs, "a separating basis state", "none");
      continue;
    }
    const ModelObject unit_obj = ModelObject::unit(o.backend());
    RationalMatrix fm(o.ambient_dim(), 1);
    for (std::size_t i = 0; i < o.ambient_dim(); ++i) fm(i, 0) = (*f)[i];
    const ProcessComplement pc = process_complement(unit_obj, o, fm);
    RationalVector fc(o.ambient_dim());
    for (std::size_t i = 0; i < o.ambient_dim(); ++i) fc[i] = pc.complement(i, 0);
    const auto mu_found = scalar_multiple_in(a.body(), uniform_vector(o));
    if (!mu_found) {
      run.expect(false, inputs, "a multiple of uniform in A", "none");
      continue;
    }
    const Rational mu = *mu_found;
    const RationalVector h = scale(mu / pc.lambda, concat(*f, fc));
    const CausalSet two = plus_coprod(unit_type(o.backend()), unit_type(o.backend()));
    run.expect(member(par(two, a), h), inputs, "h in (I+I) | A", "not a member");
    run.expect(!member(seq(two, a), h), inputs, "h outside (I+I) < A", "member");
  }
}

// ---------------------------------------------------------------------------

RationalMatrix column(const RationalVector& v) {
  RationalMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

RationalMatrix row_of(const RationalVector& v) {
  RationalMatrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

// x |-> <discard, x> * mu * q, causal from c into any set containing q when mu * discard is in dual(c).
Morphism discard_then_prepare(const CausalSet& c, const ModelObject& dst, const RationalVector& q) {
  const ModelObject& o = c.object();
  const RationalVector w = pairing_weights(o);
  const RationalVector disc = discard_vector(o);
  RationalVector functional(o.ambient_dim());
  for (std::size_t i = 0; i < functional.size(); ++i) functional[i] = w[i] * disc[i];
  const Rational mu = scalar_multiple_in(dual(c).body(), disc).value();
  return {o, dst, mu * (column(q) * row_of(functional))};
}

void additives(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, 4);
    for (std::size_t i = 0; i < run.count(50); ++i) {
      const FlatSample sa = g.flat();
      const FlatSample sb = g.flat();
      const CausalSet& a = sa.set;
      const CausalSet& c = sb.set;
      const auto inputs = [&] { return show_all(a, c); };
      const CausalSet w = with_prod(a, c);
      const CausalSet p = plus_coprod(a, c);
      run.expect_equal(dual(w), plus_coprod(dual(a), dual(c)), inputs);
      run.expect_equal(dual(p), with_prod(dual(a), dual(c)), inputs);
      // The coproduct is the closure of the union of the two injected sets.
      const BiproductStructure bs = biproduct_structure(a.object(), c.object());
      std::vector<RationalVector> injected;
      for (const auto& x : a.body().affine_basis()) injected.push_back(bs.inject1.apply(x));
      for (const auto& y : c.body().affine_basis()) injected.push_back(bs.inject2.apply(y));
      run.expect_equal(p, CausalSet(bs.object, affine_hull(injected, bs.object.ambient_dim())), inputs);

      const auto causal = [&](const Morphism& m, const CausalSet& src, const CausalSet& dst, const char* what) {
        const CausalVerdict verdict = check_causal(m, src, dst);
        run.expect(verdict == CausalVerdict::Causal, inputs, std::string(what) + ": causal",
                   std::string(verdict_name(verdict)));
      };
      causal({bs.object, a.object(), bs.project1}, w, a, "project1");
      causal({bs.object, c.object(), bs.project2}, w, c, "project2");
      causal({a.object(), bs.object, bs.inject1}, a, p, "inject1");
      causal({c.object(), bs.object, bs.inject2}, c, p, "inject2");
      // Pairing <id, prepare> : a -> a x c and copairing [prepare, prepare'] : a + c -> e.
      const Morphism prep = discard_then_prepare(a, c.object(), sb.generators.back());
      const BiproductStructure aa = biproduct_structure(a.object(), c.object());
      RationalMatrix pairing_m(aa.object.ambient_dim(), a.ambient());
      for (std::size_t r = 0; r < a.ambient(); ++r) pairing_m(r, r) = 1;
      for (std::size_t r = 0; r < c.ambient(); ++r)
        for (std::size_t k = 0; k < a.ambient(); ++k) pairing_m(a.ambient() + r, k) = prep.matrix(r, k);
      causal({a.object(), aa.object, pairing_m}, a, w, "pairing");
      const FlatSample se = g.flat();
      const Morphism fa = discard_then_prepare(a, se.set.object(), se.generators.front());
      const Morphism fc = discard_then_prepare(c, se.set.object(), se.generators.back());
      RationalMatrix copair(se.set.ambient(), bs.object.ambient_dim());
      for (std::size_t r = 0; r < se.set.ambient(); ++r) {
        for (std::size_t k = 0; k < a.ambient(); ++k) copair(r, k) = fa.matrix(r, k);
        for (std::size_t k = 0; k < c.ambient(); ++k) copair(r, a.ambient() + k) = fc.matrix(r, k);
      }
      causal({bs.object, se.set.object(), copair}, p, se.set, "copairing");

      // Units: 0 is initial, 1 is terminal, and they are the units of + and &.
      const CausalSet zero = zero_type(b);
      const CausalSet one = one_type(b);
      causal({zero.object(), a.object(), RationalMatrix(a.ambient(), 0)}, zero, a, "initial");
      causal({a.object(), one.object(), RationalMatrix(0, a.ambient())}, a, one, "terminal");
      run.expect_equal(with_prod(a, one), a, inputs);
      run.expect_equal(plus_coprod(a, zero), a, inputs);
      run.expect_equal(dual(zero), one, inputs);
      run.expect_equal(dual(one), zero, inputs);

      const CausalSet fa1 = first_order(a.object());
      const CausalSet fc1 = first_order(c.object());
      run.expect(is_first_order(plus_coprod(fa1, fc1)), inputs, "A+B first-order", "not first-order");
      run.expect(!is_first_order(with_prod(fa1, fc1)), inputs, "A&B not first-order", "first-order");
    }
  }
}

void zero_tables(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, 4);
    const CausalSet zero = zero_type(b);
    const CausalSet one = one_type(b);
    for (std::size_t i = 0; i < run.count(1); ++i) {
      const CausalSet c = g.flat().set;
      const auto inputs = [&] { return show(c); };
      const std::vector<std::pair<CausalSet, const CausalSet*>> rows = {
          {tensor(zero, zero), &zero}, {par(zero, zero), &zero}, {tensor(zero, one), &zero}, {par(zero, one), &one},
          {tensor(one, one), &one},    {par(one, one), &one},    {tensor(zero, c), &zero},   {par(zero, c), &zero},
          {tensor(one, c), &one},      {par(one, c), &one},      {seq(zero, zero), &zero},   {seq(zero, one), &zero},
          {seq(one, zero), &one},      {seq(one, one), &one},    {seq(zero, c), &zero},      {seq(one, c), &one},
          {seq(c, zero), &zero},       {seq(c, one), &one},
      };
      for (const auto& [got, want] : rows) run.expect_equal(got, *want, inputs);
    }
  }
}

// ---------------------------------------------------------------------------

void apc_axioms(Run& run) {
  for (Backend b : kBackends) {
    auto g = run.gen(b, b == Backend::QuantumCP ? 9 : 6);
    for (std::size_t i = 0; i < run.count(50); ++i) {
      const ModelObject x = g.object();
      const ModelObject y = g.object();
      const auto inputs = [&] { return x.describe() + " ; " + y.describe(); };
      const ModelObject xy = tensor_object(x, y);
      run.expect(kron(discard_vector(x), discard_vector(y)) == discard_vector(xy), inputs);
      run.expect(kron(uniform_vector(x), uniform_vector(y)) == uniform_vector(xy), inputs);
      run.expect(concat(discard_vector(x), discard_vector(y)) == discard_vector(biproduct_object(x, y)), inputs);

      const StructureVectors sv = structure_vectors(x);
      run.expect(sv.dim_scalar && sgn(*sv.dim_scalar) != 0, inputs);
      RationalMatrix basis(0, x.ambient_dim());
      bool normalized_states = true;
      for (const auto& s : sv.causal_basis) {
        basis.append_row(s);
        normalized_states = normalized_states && cone_member(x, s) && pairing(x, sv.discard, s) == 1;
      }
      run.expect(rank(basis) == x.ambient_dim() && normalized_states, inputs);

      const RationalVector effect = scale(Rational(g.uniform(1, 3)), g.cone_point(x));
      const Complement ec = effect_complement(x, effect);
      run.expect(add(effect, ec.complement) == scale(ec.lambda, sv.discard) && sgn(ec.lambda) > 0 &&
                     cone_member(x, ec.complement),
                 [&] { return inputs() + " ; effect " + show(effect); });

      const RationalMatrix f = g.process(x, y);
      const ProcessComplement pc = process_complement(x, y, f);
      const RationalMatrix target = pc.lambda * (column(uniform_vector(y)) * row_of([&] {
                                      RationalVector r(x.ambient_dim());
                                      const auto w = pairing_weights(x);
                                      for (std::size_t k = 0; k < r.size(); ++k) r[k] = w[k] * sv.discard[k];
                                      return r;
                                    }()));
      run.expect(f + pc.complement == target && morphism_cone_member(x, y, pc.complement) && sgn(pc.lambda) > 0,
                 inputs);

      // Cancellativity through formal differences: (f + h, h) ~ (f, 0).
      if (b != Backend::QuantumCP) {
        const Morphism fm{x, y, f};
        const Morphism hm{x, y, g.process(x, y)};
        const FormalDiff lhs({x, y, f + hm.matrix}, hm);
        run.expect(fd_eq(lhs, embed(fm)), inputs);
      }
    }
  }
}

void sub_laws(Run& run) {
  for (Backend b : {Backend::ClassicalNonneg, Backend::ClassicalAffine}) {
    auto g = run.gen(b, 3);
    const auto diff = [&](const ModelObject& s, const ModelObject& t) {
      return FormalDiff({s, t, g.process(s, t)}, {s, t, g.process(s, t)});
    };
    // An equivalent representative: (f + k, g + k).
    const auto shift = [&](const FormalDiff& a) {
      const RationalMatrix k = g.process(a.src(), a.dst());
      return FormalDiff({a.src(), a.dst(), a.pos().matrix + k}, {a.src(), a.dst(), a.neg().matrix + k});
    };
    for (std::size_t i = 0; i < run.count(100); ++i) {
      const ModelObject x = g.object();
      const ModelObject y = g.object();
      const ModelObject z = g.object();
      const auto inputs = [&] { return x.describe() + " ; " + y.describe() + " ; " + z.describe(); };
      const FormalDiff a = diff(x, y);
      const FormalDiff a1 = shift(a);
      const FormalDiff a2 = shift(a1);
      const FormalDiff other = diff(x, y);
      run.expect(fd_eq(a, a) && fd_eq(a, a1) == fd_eq(a1, a) && fd_eq(a, a1) && fd_eq(a1, a2) && fd_eq(a, a2), inputs);
      run.expect(fd_eq(a, other) == (a.value() == other.value()), inputs);

      const FormalDiff c = diff(y, z);
      const FormalDiff c1 = shift(c);
      run.expect(fd_eq(fd_compose(a, c), fd_compose(a1, c1)), inputs);
      run.expect(fd_eq(fd_tensor(a, c), fd_tensor(a1, c1)), inputs);
      run.expect(fd_eq(fd_add(a, other), fd_add(a1, shift(other))), inputs);

      const Morphism f{x, y, g.process(x, y)};
      const Morphism h{y, z, g.process(y, z)};
      run.expect(fd_eq(embed(compose(f, h)), fd_compose(embed(f), embed(h))), inputs);
      run.expect(fd_eq(fd_compose(embed(identity_morphism(x)), embed(f)), embed(f)), inputs);
      run.expect(fd_eq(embed(tensor(f, h)), fd_tensor(embed(f), embed(h))), inputs);
      run.expect(fd_eq(fd_add(a, fd_neg(a)), embed(zero_morphism(x, y))), inputs);
      const Morphism f2{x, y, g.process(x, y)};
      run.expect(fd_eq(embed(f), embed(f2)) == (f.matrix == f2.matrix), inputs);

      // Distinguishing states stay distinguishing after embedding.
      const ModelObject unit = ModelObject::unit(b);
      std::vector<FormalDiff> states;
      RationalMatrix plain(0, x.ambient_dim());
      const long count = g.uniform(1, static_cast<long>(x.ambient_dim()) + 1);
      for (long k = 0; k < count; ++k) {
        const RationalVector s = g.cone_point(x);
        plain.append_row(s);
        states.push_back(embed({unit, x, column(s)}));
      }
      run.expect(rank(plain) == fd_rank(states), inputs);

      // Non-zero scalars are invertible.
      const FormalDiff s = diff(unit, unit);
      if (sgn(s.value()(0, 0)) != 0) {
        const FormalDiff prod = fd_compose(s, fd_scalar_inverse(s));
        run.expect(fd_eq(prod, embed(identity_morphism(unit))), inputs);
      }
    }
  }
}

// ---------------------------------------------------------------------------

}  // namespace

RationalVector pr_box() {
  RationalVector p(16);
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 2; ++y)
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x & y)) p[static_cast<std::size_t>((2 * x + a) * 4 + (2 * y + b))] = Rational(1, 2);
        }
  return p;
}

RationalVector signalling_box() {
  RationalVector p(16);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p[static_cast<std::size_t>((2 * x) * 4 + (2 * y + x))] = 1;
  return p;
}

CausalSet gnst_system(std::size_t n, std::size_t k, Backend backend) {
  if (n == 0 || k == 0) throw InvalidArgument("gnst_system: needs at least one input and one outcome");
  const CausalSet unit = unit_type(backend);
  CausalSet outcomes = unit;
  for (std::size_t i = 1; i < k; ++i) outcomes = plus_coprod(outcomes, unit);
  CausalSet sys = outcomes;
  for (std::size_t i = 1; i < n; ++i) sys = with_prod(sys, outcomes);
  return sys;
}

namespace {

void gnst(Run& run) {
  const CausalSet g = gnst_system(2, 2);
  const CausalSet t = tensor(g, g);
  const CausalSet via_dsl = eval(parse("((I+I)&(I+I)) x ((I+I)&(I+I))"), Backend::ClassicalNonneg);
  run.expect_equal(via_dsl, t, [] { return std::string("(2,2)-system tensor type"); });
  run.expect(t.ambient() == 16, [] { return std::string("ambient of the (2,2) tensor type"); });

  const RationalVector pr = pr_box();
  // Both one-way marginals of the PR box are uniform.
  bool uniform_marginals = true;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a) {
        Rational alice = 0;
        Rational bob = 0;
        for (int o = 0; o < 2; ++o) {
          alice += pr[static_cast<std::size_t>((2 * x + a) * 4 + (2 * y + o))];
          bob += pr[static_cast<std::size_t>((2 * x + o) * 4 + (2 * y + a))];
        }
        uniform_marginals = uniform_marginals && alice == Rational(1, 2) && bob == Rational(1, 2);
      }
  run.expect(uniform_marginals, [] { return std::string("PR box marginals"); });
  run.expect(member(t, pr), [&] { return "PR box in tensor: " + show(pr); });

  const RationalVector sig = signalling_box();
  const auto sig_inputs = [&] { return "signalling box " + show(sig); };
  run.expect(member(par(g, g), sig), sig_inputs, "in par", "not in par");
  run.expect(!member(t, sig), sig_inputs, "not in tensor", "in tensor");
  run.expect(member(seq(g, g), sig), sig_inputs, "in seq", "not in seq");
  run.expect(!member(seq_rev(g, g), sig), sig_inputs, "not in seq_rev", "in seq_rev");

  // Deterministic local boxes lie in the tensor type of every (n,k)-system pair.
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const CausalSet s = gnst_system(n, k);
    const CausalSet st = tensor(s, s);
    RationalVector local(n * k);
    for (std::size_t x = 0; x < n; ++x) local[x * k + (x % k)] = 1;
    RationalVector other(n * k);
    for (std::size_t x = 0; x < n; ++x) other[x * k] = 1;
    const auto inputs = [&] { return "(" + std::to_string(n) + "," + std::to_string(k) + ")-system"; };
    run.expect(s.ambient() == n * k && member(st, kron(local, other)), inputs);
    run.expect(!is_first_order(s) || n == 1, inputs);
  }

  const CausalSet chan = eval(parse("C[2] -o C[2]"), Backend::ClassicalNonneg);
  run.expect(chan.body().dim() == 2, [] { return std::string("C[2] -o C[2]"); }, "2",
             std::to_string(chan.body().dim()));
  const CausalSet qchan = eval(parse("Q[2] -o Q[2]"), Backend::QuantumCP);
  run.expect(qchan.body().dim() == 12, [] { return std::string("Q[2] -o Q[2]"); }, "12",
             std::to_string(qchan.body().dim()));
}

using CheckFn = void (*)(Run&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"additives", additives},
      {"affine_closure", affine_closure},
      {"apc_axioms", apc_axioms},
      {"bv_interchange", bv_interchange},
      {"causality_exception", causality_exception},
      {"dimension_laws", dimension_laws},
      {"first_order_char", first_order_char},
      {"gnst", gnst},
      {"inclusion_chain", inclusion_chain},
      {"no_interaction", no_interaction},
      {"nonsignalling_eq", nonsignalling_eq},
      {"seq_selfdual", seq_selfdual},
      {"sub_laws", sub_laws},
      {"zero_tables", zero_tables},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_check(std::string_view name, const CheckParams& params) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Run run(n, params);
    const auto start = Clock::now();
    fn(run);
    run.report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return run.report;
  }
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

std::vector<CheckReport> run_all(std::uint64_t seed) {
  std::vector<CheckReport> out;
  CheckParams p;
  p.seed = seed;
  for (const auto& name : check_names()) out.push_back(run_check(name, p));
  return out;
}

}  // namespace caus
