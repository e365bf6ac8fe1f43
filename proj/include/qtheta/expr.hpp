#pragma once

// A small expression language over the series toolbox, used by the command
// line. Grammar (recursive descent, tokens separated by optional whitespace):
//
//   expression := term (('+' | '-') term)*
//   term       := power (('*' | '/') power)*
//   power      := unary ('^' integer)?
//   unary      := '-' unary | atom
//   atom       := integer | name | 'q' | name '(' args ')' | '(' expression ')'
//
// Names without arguments: q, i, omega, alpha, sqrt2, sqrt3, zeta (use
// zeta^k for powers), phi, psi. Constructors:
//
//   j(c, e, m)          theta j(c q^e; q^m); c is a constant expression
//   J(a, m) / J(m)      j(q^a; q^m) / the product (q^m; q^m)_inf (Jm(m) works too)
//   Jbar(a, m)          j(-q^a; q^m)
//   g(c, e [, base])    universal mock series g(c q^e; q^base)
//   G(c [, e])          rank generating series G(c q^e, q)
//   f(a)                the series f_a(q) for a constant a
//   m(cx, ex, base, cz, ez)   Appell-Lerch m(cx q^ex, q^base, cz q^ez)
//   poch(c, e, step)    infinite Pochhammer (c q^e; q^step)_inf
//   subst(expr, k)      q -> q^k in a subexpression
//   twist(expr, c)      q -> c q in a subexpression (c a constant)
//
// Rationals are spelled with '/', e.g. 1/2. Parse failures raise
// Error(ParseError) with a character position in the message.

#include <memory>
#include <string>
#include <vector>

#include "qtheta/series.hpp"

namespace qtheta {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, Constant, Q, Call, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind = Kind::Number;
    Rational number = 0;        // Number
    std::string name;           // Constant / Call
    std::vector<ExprPtr> args;  // Call arguments or operator children
    long exponent = 0;          // Pow
};

ExprPtr parse_expr(const std::string& text);
std::string expr_to_string(const ExprPtr& node);

// Evaluates with every constructor truncated at `order`; the result can fall
// short of `order` after divisions. expand_expr re-evaluates with padding
// until the requested order is reached, so its result is always exact to
// exactly `order`.
QSeries eval_expr(const ExprPtr& node, long order);
QSeries expand_expr(const std::string& text, long order);

// Parses and evaluates an expression that must collapse to a single monomial
// c*q^e (used for sample-point arguments). Raises BadArgument otherwise.
Monomial monomial_from_expr(const std::string& text);

}  // namespace qtheta
