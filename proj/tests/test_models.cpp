#include <doctest.h>

#include <random>

#include "caus/error.hpp"
#include "caus/hermitian.hpp"
#include "caus/model.hpp"
#include "caus/suite.hpp"
#include "support.hpp"

using namespace caus;
using caus::testing::pick;

namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

ComplexMatrix real_matrix(std::size_t d, std::initializer_list<Rational> entries) {
  ComplexMatrix m(d);
  std::size_t k = 0;
  for (const auto& e : entries) m.re[k++] = e;
  return m;
}

// PSD test for a 2x2 Hermitian matrix: trace and determinant both nonnegative.
bool psd_2x2(const ComplexMatrix& m) {
  const Rational tr = m.re[0] + m.re[3];
  const Rational det = m.re[0] * m.re[3] - (m.re[1] * m.re[1] + m.im[1] * m.im[1]);
  return sgn(tr) >= 0 && sgn(det) >= 0 && sgn(m.re[0]) >= 0 && sgn(m.re[3]) >= 0;
}

}  // namespace

TEST_CASE("classical structure vectors") {
  const auto o = ModelObject::classical(2);
  const StructureVectors s = structure_vectors(o);
  CHECK(s.discard == vec({1, 1}));
  CHECK(s.uniform == vec({1, 1}));
  REQUIRE(s.dim_scalar);
  CHECK(*s.dim_scalar == 2);
  CHECK(s.causal_basis == std::vector<RationalVector>{vec({1, 0}), vec({0, 1})});

  const StructureVectors z = structure_vectors(ModelObject::classical(0));
  CHECK(z.zero_object);
  CHECK_FALSE(z.dim_scalar);
  CHECK(z.discard.empty());
}

TEST_CASE("quantum fiducial states span the Hermitian matrices") {
  const auto o = ModelObject::quantum({2});
  const StructureVectors s = structure_vectors(o);
  CHECK(*s.dim_scalar == 2);
  REQUIRE(s.causal_basis.size() == 4);
  // The four fiducial matrices written out by hand, as real 8-vectors (re, im).
  const Rational h = make_rational(1, 2);
  const std::vector<std::vector<Rational>> expected = {
      {1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {h, h, h, h, 0, 0, 0, 0},
      {h, 0, 0, h, 0, -h, h, 0},
  };
  RationalMatrix stacked(0, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexMatrix m = to_blocks(o, s.causal_basis[i]).at(0);
    RationalVector flat(m.re.begin(), m.re.end());
    flat.insert(flat.end(), m.im.begin(), m.im.end());
    CHECK(flat == RationalVector(expected[i].begin(), expected[i].end()));
    CHECK(cone_member(o, s.causal_basis[i]));
    CHECK(pairing(o, s.discard, s.causal_basis[i]) == 1);
    stacked.append_row(flat);
  }
  CHECK(rank(stacked) == 4);
}

TEST_CASE("coordinates round-trip through block matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    RandomTypeGenerator g(rng(), Backend::QuantumCP, 9);
    const ModelObject o = g.object();
    RationalVector x(o.ambient_dim());
    for (auto& v : x) v = pick(rng, -5, 5);
    CHECK(from_blocks(o, to_blocks(o, x)) == x);
    for (const auto& m : to_blocks(o, x)) CHECK(m.is_hermitian());
  }
}

TEST_CASE("pairing is the trace of the product") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const ModelObject o = ModelObject::quantum({static_cast<int>(pick(rng, 1, 3))});
    RationalVector x(o.ambient_dim()), y(o.ambient_dim());
    for (auto& v : x) v = pick(rng, -3, 3);
    for (auto& v : y) v = pick(rng, -3, 3);
    const ComplexMatrix a = to_blocks(o, x).at(0);
    const ComplexMatrix b = to_blocks(o, y).at(0);
    // tr(A^T B) = sum_ij A_ij B_ij for the transpose identification of effects.
    Rational tr = 0;
    for (std::size_t k = 0; k < a.re.size(); ++k) tr += a.re[k] * b.re[k] - a.im[k] * b.im[k];
    CHECK(pairing(o, x, y) == tr);
  }
}

TEST_CASE("cone membership") {
  const auto c2 = ModelObject::classical(2);
  CHECK(cone_member(c2, vec({make_rational(1, 2), make_rational(1, 2)})));
  CHECK_FALSE(cone_member(c2, vec({1, make_rational(-1, 3)})));
  CHECK(cone_member(ModelObject::classical(2, Backend::ClassicalAffine), vec({1, make_rational(-1, 3)})));
  CHECK_THROWS_AS(cone_member(c2, vec({1})), DimensionError);

  const auto q = ModelObject::quantum({2});
  const Rational h = make_rational(1, 2);
  const ComplexMatrix good = real_matrix(2, {h, h, h, h});
  const ComplexMatrix bad = real_matrix(2, {h, 1, 1, h});
  CHECK(psd_2x2(good));
  CHECK_FALSE(psd_2x2(bad));
  CHECK(cone_member(q, from_blocks(q, {good})) == psd_2x2(good));
  CHECK(cone_member(q, from_blocks(q, {bad})) == psd_2x2(bad));
}

TEST_CASE("exact PSD agrees with the 2x2 determinant test") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const ComplexMatrix m = caus::testing::random_hermitian(rng, 2);
    CHECK(is_psd(m) == psd_2x2(m));
  }
}

TEST_CASE("PSD test edge cases") {
  CHECK(is_psd(ComplexMatrix(0)));
  CHECK(is_psd(ComplexMatrix(3)));
  // Zero diagonal with a non-zero off-diagonal entry is indefinite.
  CHECK_FALSE(is_psd(real_matrix(2, {0, 1, 1, 0})));
  ComplexMatrix nonherm(2);
  nonherm.re = {1, 1, 0, 1};
  CHECK_FALSE(is_psd(nonherm));
  // [[1, i], [-i, 1]] is PSD and singular.
  ComplexMatrix m(2);
  m.re = {1, 0, 0, 1};
  m.im = {0, 1, -1, 0};
  CHECK(is_psd(m));
  m.re[0] = make_rational(99, 100);
  CHECK_FALSE(is_psd(m));
}

TEST_CASE("tensor structure") {
  const auto c2 = ModelObject::classical(2);
  const TensorStructure ts = tensor_structure(c2, c2);
  CHECK(ts.object.ambient_dim() == 4);
  CHECK(kron_coords(vec({1, 0}), vec({0, 1})) == vec({0, 1, 0, 0}));
  CHECK(kron(discard_vector(c2), discard_vector(c2)) == discard_vector(ts.object));
  CHECK(ts.swap.apply(vec({0, 1, 0, 0})) == vec({0, 0, 1, 0}));

  const auto q = ModelObject::quantum({2});
  const ModelObject qq = tensor_object(q, q);
  CHECK(qq.block_dims() == std::vector<int>{4});
  CHECK(qq.ambient_dim() == 16);
  CHECK(kron(uniform_vector(q), uniform_vector(q)) == uniform_vector(qq));
  CHECK_THROWS_AS(tensor_object(c2, q), BackendError);
}

TEST_CASE("tensor of quantum states is the Kronecker product of their matrices") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    RandomTypeGenerator g(rng(), Backend::QuantumCP, 5);
    const ModelObject a = g.object();
    const ModelObject b = g.object();
    const RationalVector x = g.cone_point(a);
    const RationalVector y = g.cone_point(b);
    const ModelObject ab = tensor_object(a, b);
    const auto xa = to_blocks(a, x);
    const auto yb = to_blocks(b, y);
    const auto xy = to_blocks(ab, kron(x, y));
    REQUIRE(xy.size() == xa.size() * yb.size());
    for (std::size_t i = 0; i < xa.size(); ++i)
      for (std::size_t j = 0; j < yb.size(); ++j) {
        const ComplexMatrix& m = xy[i * yb.size() + j];
        const std::size_t db = yb[j].dim;
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t c = 0; c < m.dim; ++c) {
            const std::size_t ka = (r / db) * xa[i].dim + c / db;
            const std::size_t kb = (r % db) * db + c % db;
            const Rational re = xa[i].re[ka] * yb[j].re[kb] - xa[i].im[ka] * yb[j].im[kb];
            const Rational im = xa[i].re[ka] * yb[j].im[kb] + xa[i].im[ka] * yb[j].re[kb];
            CHECK(m.re[r * m.dim + c] == re);
            CHECK(m.im[r * m.dim + c] == im);
          }
      }
  }
}

TEST_CASE("biproduct structure") {
  const auto one = ModelObject::classical(1);
  const BiproductStructure bs = biproduct_structure(one, one);
  CHECK(bs.object.ambient_dim() == 2);
  CHECK(bs.inject1.apply(vec({1})) == vec({1, 0}));
  CHECK(bs.project2.apply(vec({3, 4})) == vec({4}));
  const ModelObject q = biproduct_object(ModelObject::quantum({2}), ModelObject::quantum({1}));
  CHECK(q.block_dims() == std::vector<int>{2, 1});
  CHECK(q.ambient_dim() == 5);
  const auto c23 = biproduct_object(ModelObject::classical(2), ModelObject::classical(3));
  CHECK(discard_vector(c23) == RationalVector(5, Rational(1)));
}

TEST_CASE("partial pairings") {
  const auto c2 = ModelObject::classical(2);
  const RationalVector e0 = vec({1, 0});
  const RationalVector e1 = vec({0, 1});
  CHECK(pairing(c2, vec({1, 1}), vec({make_rational(1, 2), make_rational(1, 2)})) == 1);
  CHECK(partial_right(c2, c2, vec({1, 1}), kron(e0, e1)) == e0);
  const RationalVector h = scale(make_rational(1, 2), add(kron(e0, e0), kron(e1, e1)));
  // Contracting the second index of h_{ab} against (1, 0) keeps h_{a0} = (1/2, 0).
  CHECK(partial_right(c2, c2, e0, h) == vec({make_rational(1, 2), 0}));
  CHECK(partial_left(c2, c2, e1, h) == vec({0, make_rational(1, 2)}));
}

TEST_CASE("effect complements") {
  const auto c2 = ModelObject::classical(2);
  Complement c = effect_complement(c2, vec({2, 0}));
  CHECK(c.complement == vec({0, 2}));
  CHECK(c.lambda == 2);
  c = effect_complement(c2, vec({0, 0}));
  CHECK(c.complement == vec({1, 1}));
  CHECK(c.lambda == 1);
  CHECK_THROWS_AS(effect_complement(c2, vec({-1, 0})), ConeViolation);

  const auto q = ModelObject::quantum({2});
  const RationalVector proj0 = from_blocks(q, {real_matrix(2, {1, 0, 0, 0})});
  c = effect_complement(q, proj0);
  CHECK(c.lambda == 1);
  CHECK(c.complement == from_blocks(q, {real_matrix(2, {0, 0, 0, 1})}));
}

TEST_CASE("process complements") {
  const auto c2 = ModelObject::classical(2);
  const auto m = [](std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RationalVector> rs;
    for (auto r : rows) {
      RationalVector v;
      for (long x : r) v.emplace_back(x);
      rs.push_back(v);
    }
    return RationalMatrix::from_rows(rs, 2);
  };
  const RationalMatrix all_ones = m({{1, 1}, {1, 1}});
  ProcessComplement p = process_complement(c2, c2, m({{1, 0}, {0, 0}}));
  CHECK(p.lambda == 1);
  CHECK(p.complement == all_ones - m({{1, 0}, {0, 0}}));
  p = process_complement(c2, c2, RationalMatrix(2, 2));
  CHECK(p.lambda == 1);
  CHECK(p.complement == all_ones);
  p = process_complement(c2, c2, RationalMatrix::identity(2));
  CHECK(p.complement == m({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(process_complement(c2, c2, m({{-1, 0}, {0, 0}})), ConeViolation);
}

TEST_CASE("Choi states") {
  const auto q = ModelObject::quantum({2});
  const RationalMatrix id = RationalMatrix::identity(4);
  CHECK(morphism_cone_member(q, q, id));
  CHECK(unbend(q, q, bend(q, q, id)) == id);
  // Transposition is positive but not completely positive.
  RationalMatrix transpose = RationalMatrix::identity(4);
  transpose(2, 2) = -1;
  CHECK_FALSE(morphism_cone_member(q, q, transpose));
  // The identity channel bends to an unnormalized maximally entangled state.
  const ComplexMatrix choi = to_blocks(tensor_object(q, q), bend(q, q, id)).at(0);
  CHECK(choi.re[0] == 1);
  CHECK(choi.re[3] == 1);
  CHECK(choi.re[15] == 1);
  CHECK(choi.re[5] == 0);
}

TEST_CASE("structure axioms hold on random objects") {
  std::mt19937_64 rng(21);
  for (Backend b : {Backend::ClassicalNonneg, Backend::ClassicalAffine, Backend::QuantumCP}) {
    RandomTypeGenerator g(rng(), b, 9);
    for (int t = 0; t < 50; ++t) {
      const ModelObject x = g.object();
      const ModelObject y = g.object();
      CHECK(kron(discard_vector(x), discard_vector(y)) == discard_vector(tensor_object(x, y)));
      CHECK(concat(discard_vector(x), discard_vector(y)) == discard_vector(biproduct_object(x, y)));
      const StructureVectors s = structure_vectors(x);
      CHECK(sgn(*s.dim_scalar) != 0);
      CHECK(pairing(x, s.discard, s.uniform) == *s.dim_scalar);
    }
  }
}
