#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "caus/causal_set.hpp"
#include "caus/error.hpp"

namespace caus {

enum class ExprKind {
  AtomC,   ///< C[n]
  AtomQ,   ///< Q[d1,...,dk]
  AtomU,   ///< U[n]
  AtomUQ,  ///< UQ[d1,...,dk]
  Unit,    ///< I
  Zero,    ///< ZERO
  One,     ///< ONE
  Dual,    ///< e*
  Tensor,  ///< a x b
  Par,     ///< a | b
  Seq,     ///< a < b
  SeqRev,  ///< a > b
  With,    ///< a & b
  Plus,    ///< a + b
  Lolli,   ///< a -o b
};

struct TypeExpr;
using Expr = std::shared_ptr<const TypeExpr>;

struct TypeExpr {
  ExprKind kind;
  std::vector<int> dims;  ///< atoms only
  Expr lhs;               ///< operand of Dual, left operand of binary nodes
  Expr rhs;
};

Expr make_atom(ExprKind kind, std::vector<int> dims = {});
Expr make_dual(Expr e);
Expr make_binary(ExprKind kind, Expr lhs, Expr rhs);

bool is_atom(ExprKind k);
bool is_binary(ExprKind k);

/// Deep structural equality.
bool expr_equal(const Expr& a, const Expr& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Throws ParseError for lexical errors, mixed same-level operators without
/// parentheses, chained < / > and missing operands.
Expr parse(std::string_view src);

/// Canonical text with the fewest parentheses that parse back to the same tree.
std::string render(const Expr& e);

CausalSet eval(const Expr& e, Backend backend);

}  // namespace caus
