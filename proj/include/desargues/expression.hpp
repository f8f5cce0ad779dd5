#pragma once

// Expression language over the active skew field.
//
//   expr     := term { ('+' | '-') term }
//   term     := unary { '*' unary }            products associate left
//   unary    := '-' unary | postfix            ('-' glued to a digit is a literal sign)
//   postfix  := primary { '^-1' }
//   primary  := literal
//             | '(' expr ')'
//             | 'r(' expr ':' expr ')'              r(A:B)    = B⁻¹A
//             | 'r(' expr ',' expr ';' expr ')'     r(A,B;C)  = (B−C)⁻¹(A−C)
//             | 'cr(' expr ',' expr ';' expr ',' expr ')'
//             | 'map(' FAMILY ';' expr ',' expr ',' expr ';' expr ')'
//
// The printer emits a fully parenthesized form, so parse(print(e)) == e and
// no product is ever reordered.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "desargues/crossratio_maps.hpp"
#include "desargues/error.hpp"
#include "desargues/field.hpp"
#include "desargues/ratios.hpp"
#include "desargues/text.hpp"

namespace desargues {

enum class NodeKind { Literal, Add, Sub, Mul, Neg, Inv, Ratio2, Ratio3, CrossRatio, Map };

template <SkewScalar S>
struct Expr {
  NodeKind kind = NodeKind::Literal;
  std::optional<S> value;               // Literal only
  MapFamily family = MapFamily::A;      // Map only
  std::vector<Expr> args;               // Map: three base points then X

  static Expr literal(S v) { return {NodeKind::Literal, std::move(v), MapFamily::A, {}}; }
  static Expr node(NodeKind k, std::vector<Expr> args) {
    return {k, std::nullopt, MapFamily::A, std::move(args)};
  }
  static Expr map(MapFamily f, std::vector<Expr> args) {
    return {NodeKind::Map, std::nullopt, f, std::move(args)};
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    if (a.kind == NodeKind::Literal) return *a.value == *b.value;
    if (a.kind == NodeKind::Map && a.family != b.family) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (!(a.args[i] == b.args[i])) return false;
    }
    return true;
  }
};

namespace detail {

template <SkewField F>
class ExpressionParser {
 public:
  using S = scalar_t<F>;
  using E = Expr<S>;

  ExpressionParser(const F& field, std::string_view text) : field_(field), cur_(text) {}

  E parse_all() {
    E e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing text");
    return e;
  }

 private:
  E expr() {
    E lhs = term();
    for (;;) {
      if (cur_.accept('+')) {
        lhs = E::node(NodeKind::Add, {std::move(lhs), term()});
      } else if (cur_.peek() == '-') {
        cur_.accept('-');
        lhs = E::node(NodeKind::Sub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  E term() {
    E lhs = unary();
    while (cur_.accept('*')) lhs = E::node(NodeKind::Mul, {std::move(lhs), unary()});
    return lhs;
  }

  E unary() {
    if (cur_.peek() == '-' && !detail::starts_number(cur_)) {
      cur_.accept('-');
      return E::node(NodeKind::Neg, {unary()});
    }
    return postfix();
  }

  E postfix() {
    E e = primary();
    while (cur_.accept("^-1")) e = E::node(NodeKind::Inv, {std::move(e)});
    return e;
  }

  E primary() {
    if (starts_literal(field_, cur_)) return E::literal(parse_literal(field_, cur_));
    if (cur_.accept('(')) {
      E inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (cur_.accept("cr(")) {
      E a = expr();
      cur_.expect(',');
      E b = expr();
      cur_.expect(';');
      E c = expr();
      cur_.expect(',');
      E d = expr();
      cur_.expect(')');
      return E::node(NodeKind::CrossRatio, {std::move(a), std::move(b), std::move(c), std::move(d)});
    }
    if (cur_.accept("r(")) {
      E a = expr();
      if (cur_.accept(':')) {
        E b = expr();
        cur_.expect(')');
        return E::node(NodeKind::Ratio2, {std::move(a), std::move(b)});
      }
      cur_.expect(',');
      E b = expr();
      cur_.expect(';');
      E c = expr();
      cur_.expect(')');
      return E::node(NodeKind::Ratio3, {std::move(a), std::move(b), std::move(c)});
    }
    if (cur_.accept("map(")) {
      MapFamily family = MapFamily::A;
      if (cur_.accept('A')) {
        family = MapFamily::A;
      } else if (cur_.accept('B')) {
        family = MapFamily::B;
      } else if (cur_.accept('C')) {
        family = MapFamily::C;
      } else if (cur_.accept('D')) {
        family = MapFamily::D;
      } else {
        cur_.fail("expected family A, B, C or D");
      }
      cur_.expect(';');
      std::vector<E> args;
      args.push_back(expr());
      cur_.expect(',');
      args.push_back(expr());
      cur_.expect(',');
      args.push_back(expr());
      cur_.expect(';');
      args.push_back(expr());
      cur_.expect(')');
      return E::map(family, std::move(args));
    }
    cur_.fail("expected a literal, '(' or a function");
  }

  const F& field_;
  Cursor cur_;
};

}  // namespace detail

template <SkewField F>
Expr<scalar_t<F>> parse_expression(const F& field, std::string_view text) {
  return detail::ExpressionParser<F>(field, text).parse_all();
}

template <SkewScalar S>
std::string print_expression(const Expr<S>& e) {
  const auto& a = e.args;
  switch (e.kind) {
    case NodeKind::Literal: return to_string(*e.value);
    case NodeKind::Add: return "(" + print_expression(a[0]) + " + " + print_expression(a[1]) + ")";
    case NodeKind::Sub: return "(" + print_expression(a[0]) + " - " + print_expression(a[1]) + ")";
    case NodeKind::Mul: return "(" + print_expression(a[0]) + " * " + print_expression(a[1]) + ")";
    case NodeKind::Neg: return "-(" + print_expression(a[0]) + ")";
    case NodeKind::Inv: return "(" + print_expression(a[0]) + ")^-1";
    case NodeKind::Ratio2: return "r(" + print_expression(a[0]) + ":" + print_expression(a[1]) + ")";
    case NodeKind::Ratio3:
      return "r(" + print_expression(a[0]) + "," + print_expression(a[1]) + ";" +
             print_expression(a[2]) + ")";
    case NodeKind::CrossRatio:
      return "cr(" + print_expression(a[0]) + "," + print_expression(a[1]) + ";" +
             print_expression(a[2]) + "," + print_expression(a[3]) + ")";
    case NodeKind::Map:
      return std::string("map(") + family_letter(e.family) + "; " + print_expression(a[0]) + "," +
             print_expression(a[1]) + "," + print_expression(a[2]) + "; " + print_expression(a[3]) +
             ")";
  }
  return {};
}

/// Evaluates with the core operations; their errors propagate unchanged.
template <SkewScalar S>
S evaluate_expression(const Expr<S>& e) {
  const auto& a = e.args;
  auto at = [&](std::size_t i) { return evaluate_expression(a[i]); };
  switch (e.kind) {
    case NodeKind::Literal: return *e.value;
    case NodeKind::Add: return at(0) + at(1);
    case NodeKind::Sub: return at(0) - at(1);
    case NodeKind::Mul: return at(0) * at(1);
    case NodeKind::Neg: return -at(0);
    case NodeKind::Inv: return inv(at(0));
    case NodeKind::Ratio2: return ratio2(at(0), at(1));
    case NodeKind::Ratio3: return ratio3(at(0), at(1), at(2));
    case NodeKind::CrossRatio: return cross_ratio(at(0), at(1), at(2), at(3));
    case NodeKind::Map: {
      const auto base = CrossRatioBase<S>::make(e.family, at(0), at(1), at(2));
      return evaluate(base, at(3));
    }
  }
  throw std::logic_error("evaluate_expression: unknown node");
}

}  // namespace desargues
