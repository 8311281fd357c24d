#include "caus/dsl.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace caus {

Expr make_atom(ExprKind kind, std::vector<int> dims) {
  return std::make_shared<const TypeExpr>(TypeExpr{kind, std::move(dims), nullptr, nullptr});
}

Expr make_dual(Expr e) { return std::make_shared<const TypeExpr>(TypeExpr{ExprKind::Dual, {}, std::move(e), nullptr}); }

Expr make_binary(ExprKind kind, Expr lhs, Expr rhs) {
  return std::make_shared<const TypeExpr>(TypeExpr{kind, {}, std::move(lhs), std::move(rhs)});
}

bool is_atom(ExprKind k) { return k <= ExprKind::One; }
bool is_binary(ExprKind k) { return k > ExprKind::Dual; }

bool expr_equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->dims == b->dims && expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

enum class Tok { Word, Number, LBracket, RBracket, Comma, LParen, RParen, Star, Op, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  long value = 0;
};

constexpr std::string_view kWords[] = {"ZERO", "ONE", "UQ", "I", "C", "Q", "U"};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) throw ParseError(start, "number too large");
        ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start, v});
      continue;
    }
    if (s.substr(i, 2) == "-o") {
      out.push_back({Tok::Op, "-o", start});
      i += 2;
      continue;
    }
    switch (ch) {
      case '[': out.push_back({Tok::LBracket, "[", start}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]", start}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case '*': out.push_back({Tok::Star, "*", start}); ++i; continue;
      case 'x':
      case '|':
      case '<':
      case '>':
      case '&':
      case '+': out.push_back({Tok::Op, std::string(1, ch), start}); ++i; continue;
      default: break;
    }
    bool matched = false;
    for (auto w : kWords) {
      if (s.substr(i, w.size()) == w) {
        out.push_back({Tok::Word, std::string(w), start});
        i += w.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(start, std::string("unexpected character '") + ch + "'");
    if (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])) && s[i] != 'x')
      throw ParseError(start, "unknown word starting with '" + out.back().text + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

ExprKind op_kind(const std::string& op) {
  if (op == "x") return ExprKind::Tensor;
  if (op == "|") return ExprKind::Par;
  if (op == "<") return ExprKind::Seq;
  if (op == ">") return ExprKind::SeqRev;
  if (op == "&") return ExprKind::With;
  if (op == "+") return ExprKind::Plus;
  return ExprKind::Lolli;
}

int op_level(ExprKind k) {
  switch (k) {
    case ExprKind::Seq:
    case ExprKind::SeqRev: return 2;
    case ExprKind::Tensor:
    case ExprKind::Par: return 3;
    case ExprKind::With:
    case ExprKind::Plus: return 4;
    case ExprKind::Lolli: return 5;
    default: return 1;
  }
}

const char* op_text(ExprKind k) {
  switch (k) {
    case ExprKind::Tensor: return "x";
    case ExprKind::Par: return "|";
    case ExprKind::Seq: return "<";
    case ExprKind::SeqRev: return ">";
    case ExprKind::With: return "&";
    case ExprKind::Plus: return "+";
    case ExprKind::Lolli: return "-o";
    default: return "";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Expr parse_all() {
    Expr e = parse_lolli();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) throw ParseError(peek().pos, "unmatched ')'");
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }

  std::optional<ExprKind> peek_op(int level) const {
    if (peek().kind != Tok::Op) return std::nullopt;
    const ExprKind k = op_kind(peek().text);
    if (op_level(k) != level) return std::nullopt;
    return k;
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().pos, std::string("expected ") + what);
    ++at_;
  }

  Expr parse_lolli() {
    Expr lhs = parse_additive(4);
    if (peek_op(5)) {
      ++at_;
      return make_binary(ExprKind::Lolli, lhs, parse_lolli());
    }
    return lhs;
  }

  // Left-associative levels 3 and 4; both operators of one level may not mix.
  Expr parse_additive(int level) {
    Expr lhs = level == 3 ? parse_seq() : parse_additive(3);
    std::optional<ExprKind> first;
    while (auto k = peek_op(level)) {
      if (first && *k != *first)
        throw ParseError(peek().pos, std::string("ambiguous mixing of '") + op_text(*first) + "' and '" + op_text(*k) +
                                         "'; add parentheses");
      first = k;
      ++at_;
      Expr rhs = level == 3 ? parse_seq() : parse_additive(3);
      lhs = make_binary(*k, lhs, rhs);
    }
    return lhs;
  }

  Expr parse_seq() {
    Expr lhs = parse_postfix();
    if (auto k = peek_op(2)) {
      ++at_;
      Expr rhs = parse_postfix();
      if (auto k2 = peek_op(2))
        throw ParseError(peek().pos, std::string("'") + op_text(*k) + "' and '" + op_text(*k2) +
                                         "' do not associate; add parentheses");
      return make_binary(*k, lhs, rhs);
    }
    return lhs;
  }

  Expr parse_postfix() {
    Expr e = parse_primary();
    while (peek().kind == Tok::Star) {
      ++at_;
      e = make_dual(e);
    }
    return e;
  }

  std::vector<int> parse_dims(const Token& word, bool single) {
    expect(Tok::LBracket, ("'[' after " + word.text).c_str());
    std::vector<int> dims;
    while (true) {
      const Token& t = peek();
      if (t.kind != Tok::Number) throw ParseError(t.pos, "expected a dimension");
      if (t.value < 1) throw ParseError(t.pos, "dimensions must be positive");
      dims.push_back(static_cast<int>(t.value));
      ++at_;
      if (peek().kind == Tok::Comma) {
        if (single) throw ParseError(peek().pos, word.text + " takes exactly one dimension");
        ++at_;
        continue;
      }
      break;
    }
    expect(Tok::RBracket, "']'");
    return dims;
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++at_;
        Expr e = parse_lolli();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')' to close '(' at " + std::to_string(t.pos));
        ++at_;
        return e;
      }
      case Tok::Word: {
        const Token w = next();
        if (w.text == "I") return make_atom(ExprKind::Unit);
        if (w.text == "ZERO") return make_atom(ExprKind::Zero);
        if (w.text == "ONE") return make_atom(ExprKind::One);
        if (w.text == "C") return make_atom(ExprKind::AtomC, parse_dims(w, true));
        if (w.text == "U") return make_atom(ExprKind::AtomU, parse_dims(w, true));
        if (w.text == "Q") return make_atom(ExprKind::AtomQ, parse_dims(w, false));
        return make_atom(ExprKind::AtomUQ, parse_dims(w, false));
      }
      case Tok::End: throw ParseError(t.pos, "missing operand at end of input");
      case Tok::Op: throw ParseError(t.pos, "missing operand before '" + t.text + "'");
      default: throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

int level_of(const Expr& e) { return op_level(e->kind); }

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

}  // namespace

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string render(const Expr& e) {
  switch (e->kind) {
    case ExprKind::AtomC: return "C" + dims_text(e->dims);
    case ExprKind::AtomQ: return "Q" + dims_text(e->dims);
    case ExprKind::AtomU: return "U" + dims_text(e->dims);
    case ExprKind::AtomUQ: return "UQ" + dims_text(e->dims);
    case ExprKind::Unit: return "I";
    case ExprKind::Zero: return "ZERO";
    case ExprKind::One: return "ONE";
    case ExprKind::Dual: return wrap(e->lhs, level_of(e->lhs) > 1) + "*";
    default: break;
  }
  const int lv = level_of(e);
  bool left = false;
  bool right = false;
  switch (lv) {
    case 2:
      left = level_of(e->lhs) >= 2;
      right = level_of(e->rhs) >= 2;
      break;
    case 3:
    case 4:
      left = level_of(e->lhs) > lv || (level_of(e->lhs) == lv && e->lhs->kind != e->kind);
      right = level_of(e->rhs) >= lv;
      break;
    default:
      left = level_of(e->lhs) >= 5;
      break;
  }
  return wrap(e->lhs, left) + " " + op_text(e->kind) + " " + wrap(e->rhs, right);
}

namespace {

ModelObject classical_or_blocks(int n, Backend backend) {
  if (backend == Backend::QuantumCP) return ModelObject::quantum(std::vector<int>(static_cast<std::size_t>(n), 1));
  return ModelObject::classical(static_cast<std::size_t>(n), backend);
}

ModelObject quantum_only(const TypeExpr& e, Backend backend) {
  if (backend != Backend::QuantumCP)
    throw BackendError(std::string(e.kind == ExprKind::AtomQ ? "Q" : "UQ") + dims_text(e.dims) +
                       " needs the quantum backend");
  return ModelObject::quantum(e.dims);
}

}  // namespace

CausalSet eval(const Expr& e, Backend backend) {
  switch (e->kind) {
    case ExprKind::AtomC: return first_order(classical_or_blocks(e->dims.at(0), backend));
    case ExprKind::AtomU: return singleton_uniform(classical_or_blocks(e->dims.at(0), backend));
    case ExprKind::AtomQ: return first_order(quantum_only(*e, backend));
    case ExprKind::AtomUQ: return singleton_uniform(quantum_only(*e, backend));
    case ExprKind::Unit: return unit_type(backend);
    case ExprKind::Zero: return zero_type(backend);
    case ExprKind::One: return one_type(backend);
    case ExprKind::Dual: return dual(eval(e->lhs, backend));
    default: break;
  }
  const CausalSet a = eval(e->lhs, backend);
  const CausalSet b = eval(e->rhs, backend);
  switch (e->kind) {
    case ExprKind::Tensor: return tensor(a, b);
    case ExprKind::Par: return par(a, b);
    case ExprKind::Seq: return seq(a, b);
    case ExprKind::SeqRev: return seq_rev(a, b);
    case ExprKind::With: return with_prod(a, b);
    case ExprKind::Plus: return plus_coprod(a, b);
    default: return lolli(a, b);
  }
}

}  // namespace caus
