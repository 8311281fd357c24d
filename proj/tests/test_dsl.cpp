#include <doctest.h>

#include <random>

#include "caus/dsl.hpp"
#include "support.hpp"

using namespace caus;

namespace {

Expr c(int n) { return make_atom(ExprKind::AtomC, {n}); }

std::size_t error_position(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(expr_equal(parse("C[2]* < C[2]"), make_binary(ExprKind::Seq, make_dual(c(2)), c(2))));
  const Expr l = make_binary(ExprKind::Lolli, c(2), c(2));
  CHECK(expr_equal(parse("(C[2] -o C[2]) x (C[2] -o C[2])"), make_binary(ExprKind::Tensor, l, l)));
  CHECK(expr_equal(parse("C[2]-oC[2]-oC[3]"),
                   make_binary(ExprKind::Lolli, c(2), make_binary(ExprKind::Lolli, c(2), c(3)))));
  CHECK(expr_equal(parse("C[1] x C[2] x C[3]"),
                   make_binary(ExprKind::Tensor, make_binary(ExprKind::Tensor, c(1), c(2)), c(3))));
  CHECK(expr_equal(parse("  Q[2, 3]  "), make_atom(ExprKind::AtomQ, {2, 3})));
  CHECK(expr_equal(parse("UQ[2]"), make_atom(ExprKind::AtomUQ, {2})));
  CHECK(expr_equal(parse("IxI"), make_binary(ExprKind::Tensor, make_atom(ExprKind::Unit), make_atom(ExprKind::Unit))));
  CHECK(expr_equal(parse("ZERO&ONE"),
                   make_binary(ExprKind::With, make_atom(ExprKind::Zero), make_atom(ExprKind::One))));
  CHECK(expr_equal(parse("C[2] < C[2] x C[3]"),
                   make_binary(ExprKind::Tensor, make_binary(ExprKind::Seq, c(2), c(2)), c(3))));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("C[2] x C[2] | C[2]") == 12);
  CHECK(error_position("C[2] < C[2] > C[2]") == 12);
  CHECK(error_position("C[2] x") == 6);
  CHECK(error_position("C[2] $ C[2]") == 5);
  CHECK(error_position("C[0]") == 2);
  CHECK(error_position("C[2,3]") == 3);
  CHECK(error_position("(C[2]") == 5);
  CHECK(error_position("C[2])") == 4);
  CHECK(error_position("Q[]") == 2);
  CHECK(error_position("CAT") == 0);
  CHECK(error_position("") == 0);
}

TEST_CASE("rendering") {
  CHECK(render(make_binary(ExprKind::Seq, make_dual(c(2)), c(2))) == "C[2]* < C[2]");
  CHECK(render(make_dual(make_dual(c(3)))) == "C[3]**");
  CHECK(render(parse("(C[2] x C[2])*")) == "(C[2] x C[2])*");
  CHECK(render(parse("C[1] x (C[2] x C[3])")) == "C[1] x (C[2] x C[3])");
  CHECK(render(parse("((C[1] x C[2]) x C[3])")) == "C[1] x C[2] x C[3]");
  CHECK(render(parse("(C[1] -o C[2]) -o C[3]")) == "(C[1] -o C[2]) -o C[3]");
  CHECK(render(parse("C[1] -o (C[2] -o C[3])")) == "C[1] -o C[2] -o C[3]");
  CHECK(render(parse("(C[1] < C[2]) < C[3]")) == "(C[1] < C[2]) < C[3]");
}

TEST_CASE("render and parse are inverse on random trees") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Expr e = caus::testing::random_expr(rng, 5);
    const std::string text = render(e);
    const Expr back = parse(text);
    CHECK_MESSAGE(expr_equal(back, e), text);
    CHECK(render(back) == text);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval(parse("C[2]"), Backend::ClassicalNonneg) == first_order(ModelObject::classical(2)));
  const CausalSet g = eval(parse("((I+I)&(I+I)) x ((I+I)&(I+I))"), Backend::ClassicalNonneg);
  CHECK(g.ambient() == 16);
  const CausalSet u = eval(parse("U[2] x C[3]"), Backend::ClassicalNonneg);
  CHECK(u.body().dim() == 2);
  CHECK(eval(parse("C[2]"), Backend::QuantumCP).object() == ModelObject::quantum({1, 1}));
  CHECK_THROWS_AS(eval(parse("Q[2]"), Backend::ClassicalNonneg), BackendError);
  CHECK_THROWS_AS(eval(parse("UQ[2]"), Backend::ClassicalAffine), BackendError);
}

TEST_CASE("evaluation is compositional") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 120; ++i) {
    const bool quantum = i % 3 == 2;
    const Backend b = quantum ? Backend::QuantumCP : (i % 3 == 0 ? Backend::ClassicalNonneg : Backend::ClassicalAffine);
    const Expr e = caus::testing::random_expr(rng, 4, true, quantum);
    if (e->kind == ExprKind::Dual || !is_binary(e->kind)) continue;
    if (caus::testing::expr_ambient(e, quantum) > 64) continue;
    const CausalSet a = eval(e->lhs, b);
    const CausalSet c2 = eval(e->rhs, b);
    CausalSet expected = a;
    switch (e->kind) {
      case ExprKind::Tensor: expected = tensor(a, c2); break;
      case ExprKind::Par: expected = dual(tensor(dual(a), dual(c2))); break;
      case ExprKind::Seq: expected = seq(a, c2); break;
      case ExprKind::SeqRev: expected = seq_rev(a, c2); break;
      case ExprKind::With: expected = with_prod(a, c2); break;
      case ExprKind::Plus: expected = dual(with_prod(dual(a), dual(c2))); break;
      default: expected = dual(tensor(a, dual(c2))); break;
    }
    CHECK_MESSAGE(eval(e, b) == expected, render(e));
    CHECK(eval(make_dual(e), b) == dual(expected));
    ++checked;
  }
  CHECK(checked >= 100);
}
