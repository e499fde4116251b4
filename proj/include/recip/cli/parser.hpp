#pragma once
/**
 * @file parser.hpp
 * @brief Recursive-descent parser for rational expressions.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := atom ('^' ['-'] int)?
 *   atom   := '(' expr ')' | var | int | '-' factor
 *
 * Parsing produces an ExprAst with source spans; evaluation into k(t), k(x, y)
 * or a coefficient ring checks which variables the context enables.
 * Products keep the factored form of their operands, so parenthesized factors
 * survive as the factorization hint of the result.
 */

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recip/algebra/bipoly.hpp"
#include "recip/algebra/rational_function.hpp"

namespace recip::cli {

struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class NodeKind { integer, variable, negate, add, subtract, multiply, divide, power };

struct ExprAst {
  NodeKind kind = NodeKind::integer;
  Span span;
  mpz_class value;   // integer literal
  std::string name;  // variable
  long exponent = 0; // power
  std::vector<std::unique_ptr<ExprAst>> children;
};

using ExprPtr = std::unique_ptr<ExprAst>;

namespace detail {

enum class Tok { integer, ident, lparen, rparen, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Span sp{i, 1, line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      sp.length = j - i;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), sp});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      sp.length = j - i;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), sp});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({k, std::string(1, c), sp});
    advance(1);
  }
  out.push_back({Tok::end, "", Span{i, 0, line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Span& s = peek().span;
    throw ParseError(msg, s.line, s.column);
  }

  static ExprPtr binary(NodeKind k, ExprPtr a, ExprPtr b) {
    auto n = std::make_unique<ExprAst>();
    n->kind = k;
    n->span = a->span;
    n->span.length = b->span.offset + b->span.length - a->span.offset;
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const NodeKind k = take().kind == Tok::plus ? NodeKind::add : NodeKind::subtract;
      e = binary(k, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const NodeKind k = take().kind == Tok::star ? NodeKind::multiply : NodeKind::divide;
      e = binary(k, std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek().kind != Tok::caret) return base;
    take();
    bool negative = false;
    if (peek().kind == Tok::minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::integer) fail("exponent must be an integer literal");
    const Token& t = take();
    const mpz_class e(t.text);
    if (!e.fits_slong_p() || e > 1000000) throw ParseError("exponent too large", t.span.line, t.span.column);
    auto n = std::make_unique<ExprAst>();
    n->kind = NodeKind::power;
    n->span = base->span;
    n->span.length = t.span.offset + t.span.length - base->span.offset;
    n->exponent = negative ? -e.get_si() : e.get_si();
    n->children.push_back(std::move(base));
    return n;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        take();
        ExprPtr e = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        take();
        return e;
      }
      case Tok::integer: {
        take();
        auto n = std::make_unique<ExprAst>();
        n->kind = NodeKind::integer;
        n->span = t.span;
        n->value = mpz_class(t.text);
        return n;
      }
      case Tok::ident: {
        take();
        auto n = std::make_unique<ExprAst>();
        n->kind = NodeKind::variable;
        n->span = t.span;
        n->name = t.text;
        return n;
      }
      case Tok::minus: {
        const Span s = take().span;
        ExprPtr inner = factor();
        auto n = std::make_unique<ExprAst>();
        n->kind = NodeKind::negate;
        n->span = s;
        n->span.length = inner->span.offset + inner->span.length - s.offset;
        n->children.push_back(std::move(inner));
        return n;
      }
      case Tok::end: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_ast(std::string_view src) { return detail::Parser(detail::lex(src)).parse_all(); }

inline bool is_known_variable(const std::string& v) {
  static const std::set<std::string> names = {"t", "x", "y", "eps1", "eps2", "eps", "a"};
  return names.count(v) > 0;
}

namespace detail {

[[noreturn]] inline void fail_at(const Span& s, const std::string& msg) { throw ParseError(msg, s.line, s.column); }

/// Field of the coefficients reachable from `ring` that has the generator `a`, if any.
inline FieldPtr extension_in(const FieldPtr& ring) {
  if (ring->kind() == FieldKind::extension) return ring;
  if (ring->kind() == FieldKind::nilpotent && ring->base()->kind() == FieldKind::extension) return ring->base();
  return nullptr;
}

/// Folds an AST into values of type V; `leaf` supplies variables, `constant` embeds scalars.
template <class V, class Leaf, class Const>
V fold(const ExprAst& n, const Leaf& leaf, const Const& constant, const FieldPtr& coeffs) {
  auto sub = [&](std::size_t i) { return fold<V>(*n.children[i], leaf, constant, coeffs); };
  switch (n.kind) {
    case NodeKind::integer: return constant(Scalar::from_int(coeffs, n.value));
    case NodeKind::variable: {
      if (!is_known_variable(n.name)) fail_at(n.span, "unknown variable '" + n.name + "'");
      if (n.name == "a") {
        const FieldPtr ext = extension_in(coeffs);
        if (!ext) fail_at(n.span, "'a' is only available over extension fields");
        return constant(Scalar::embed(coeffs, Scalar::generator(ext)));
      }
      return leaf(n);
    }
    case NodeKind::negate: return -sub(0);
    case NodeKind::add: return sub(0) + sub(1);
    case NodeKind::subtract: return sub(0) - sub(1);
    case NodeKind::multiply: return sub(0) * sub(1);
    case NodeKind::divide: {
      const V num = sub(0), d = sub(1);
      try {
        return num / d;
      } catch (const ZeroFunctionError&) {
        fail_at(n.children[1]->span, "zero denominator");
      } catch (const NonUnitError&) {
        fail_at(n.children[1]->span, "zero denominator");
      }
    }
    case NodeKind::power: {
      const V b = sub(0);
      try {
        return b.pow(n.exponent);
      } catch (const ZeroFunctionError&) {
        fail_at(n.span, "zero denominator");
      } catch (const NonUnitError&) {
        fail_at(n.span, "zero denominator");
      }
    }
  }
  fail_at(n.span, "malformed expression");
}

}  // namespace detail

/// Rational function of one variable over the field k.
inline RationalFunction parse_function(std::string_view src, const FieldPtr& k, const std::string& var = "t") {
  if (!k->is_field()) throw UnsupportedError("rational functions need a field of coefficients");
  const ExprPtr ast = parse_ast(src);
  auto leaf = [&](const ExprAst& n) {
    if (n.name != var) detail::fail_at(n.span, "variable '" + n.name + "' is not available here (expected " + var + ")");
    return variable_function(k);
  };
  auto constant = [](const Scalar& c) { return RationalFunction::constant(c); };
  return detail::fold<RationalFunction>(*ast, leaf, constant, k);
}

/// Rational function of x and y over the field k.
inline RationalFunction2 parse_function2(std::string_view src, const FieldPtr& k) {
  if (!k->is_field()) throw UnsupportedError("rational functions need a field of coefficients");
  const ExprPtr ast = parse_ast(src);
  auto leaf = [&](const ExprAst& n) {
    if (n.name == "x") return RationalFunction2(BiPoly::var_x(k));
    if (n.name == "y") return RationalFunction2(BiPoly::var_y(k));
    detail::fail_at(n.span, "variable '" + n.name + "' is not available here (expected x or y)");
  };
  auto constant = [](const Scalar& c) { return RationalFunction2::constant(c); };
  return detail::fold<RationalFunction2>(*ast, leaf, constant, k);
}

/// Element of a coefficient ring; eps1/eps2 or eps are enabled by nilpotent rings.
inline Scalar parse_scalar(std::string_view src, const FieldPtr& ring) {
  const ExprPtr ast = parse_ast(src);
  auto leaf = [&](const ExprAst& n) -> Scalar {
    if (ring->kind() == FieldKind::nilpotent) {
      if (ring->nil_kind() == NilKind::truncated && n.name == "eps") return Scalar::epsilon(ring, 1);
      if (ring->nil_kind() == NilKind::square_zero) {
        for (unsigned i = 1; i <= ring->nil_size(); ++i) {
          if (n.name == "eps" + std::to_string(i)) return Scalar::epsilon(ring, i);
        }
      }
    }
    detail::fail_at(n.span, "variable '" + n.name + "' is not enabled by the field descriptor");
  };
  auto constant = [](const Scalar& c) { return c; };
  return detail::fold<Scalar>(*ast, leaf, constant, ring);
}

}  // namespace recip::cli
