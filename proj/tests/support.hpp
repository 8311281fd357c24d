#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "caus/dsl.hpp"
#include "caus/hermitian.hpp"

namespace caus::testing {

inline long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random AST. With `evaluable`, only atoms that have states and effects and
/// fit the backend are used.
inline Expr random_expr(std::mt19937_64& rng, int depth, bool evaluable = false, bool quantum = false) {
  if (depth == 0 || pick(rng, 0, 3) == 0) {
    const long k = pick(rng, 0, evaluable ? (quantum ? 4 : 2) : 7);
    switch (k) {
      case 0: return make_atom(ExprKind::AtomC, {static_cast<int>(pick(rng, 1, 3))});
      case 1: return make_atom(ExprKind::AtomU, {static_cast<int>(pick(rng, 1, 3))});
      case 2: return make_atom(ExprKind::Unit);
      case 3: return make_atom(ExprKind::AtomQ, {static_cast<int>(pick(rng, 1, 2))});
      case 4: return make_atom(ExprKind::AtomUQ, {2});
      case 5: return make_atom(ExprKind::Zero);
      case 6: return make_atom(ExprKind::One);
      default: {
        std::vector<int> dims;
        for (long i = pick(rng, 1, 3); i > 0; --i) dims.push_back(static_cast<int>(pick(rng, 1, 4)));
        return make_atom(pick(rng, 0, 1) ? ExprKind::AtomQ : ExprKind::AtomUQ, dims);
      }
    }
  }
  const long k = pick(rng, 0, 7);
  if (k == 0) return make_dual(random_expr(rng, depth - 1, evaluable, quantum));
  const ExprKind ops[] = {ExprKind::Tensor, ExprKind::Par, ExprKind::Seq,  ExprKind::SeqRev,
                          ExprKind::With,   ExprKind::Plus, ExprKind::Lolli};
  return make_binary(ops[k - 1], random_expr(rng, depth - 1, evaluable, quantum),
                     random_expr(rng, depth - 1, evaluable, quantum));
}

/// Ambient dimension an expression evaluates to, without evaluating it.
inline std::size_t expr_ambient(const Expr& e, bool quantum) {
  switch (e->kind) {
    case ExprKind::AtomC:
    case ExprKind::AtomU: return static_cast<std::size_t>(e->dims[0]);
    case ExprKind::AtomQ:
    case ExprKind::AtomUQ: {
      std::size_t s = 0;
      for (int d : e->dims) s += static_cast<std::size_t>(d * d);
      return s;
    }
    case ExprKind::Unit: return 1;
    case ExprKind::Zero:
    case ExprKind::One: return 0;
    case ExprKind::Dual: return expr_ambient(e->lhs, quantum);
    case ExprKind::With:
    case ExprKind::Plus: return expr_ambient(e->lhs, quantum) + expr_ambient(e->rhs, quantum);
    default: return expr_ambient(e->lhs, quantum) * expr_ambient(e->rhs, quantum);
  }
}

/// Floating-point reference for the exact PSD decision.
inline double min_eigenvalue(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim);
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto k = static_cast<std::size_t>(r * n + c);
      a(r, c) = {m.re[k].get_d(), m.im[k].get_d()};
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Random Hermitian matrix: a mix of PSD sums of rank-one terms (often singular)
/// and unstructured integer matrices.
inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t d) {
  ComplexMatrix m(d);
  if (pick(rng, 0, 1) == 0) {
    for (long t = pick(rng, 1, static_cast<long>(d)); t > 0; --t) {
      std::vector<long> re(d), im(d);
      for (std::size_t i = 0; i < d; ++i) {
        re[i] = pick(rng, -3, 3);
        im[i] = pick(rng, -3, 3);
      }
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          m.re[r * d + c] += re[r] * re[c] + im[r] * im[c];
          m.im[r * d + c] += im[r] * re[c] - re[r] * im[c];
        }
    }
    // Occasionally push just outside the cone.
    if (pick(rng, 0, 3) == 0) {
      const auto i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(d) - 1));
      m.re[i * d + i] -= make_rational(1, pick(rng, 1, 50));
    }
    return m;
  }
  for (std::size_t r = 0; r < d; ++r) {
    m.re[r * d + r] = pick(rng, -4, 6);
    for (std::size_t c = r + 1; c < d; ++c) {
      const long a = pick(rng, -3, 3);
      const long b = pick(rng, -3, 3);
      m.re[r * d + c] = a;
      m.re[c * d + r] = a;
      m.im[r * d + c] = b;
      m.im[c * d + r] = -b;
    }
  }
  return m;
}

}  // namespace caus::testing
