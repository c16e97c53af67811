#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "solidus/external.hpp"

namespace solidus::cli {

enum class Symbol { Rho, Oslash, Pound, Max };
enum class UnaryOp { Neg, Magnitude, Unity, Inverse, Abs, Shadow };
enum class BinaryOp { Add, Sub, Mul, Div };
enum class Relation { Eq, Lt, Le };

/// Syntax tree of one input expression. `column` is the 1-based position of
/// the token that introduced the node.
struct Expr {
  struct Literal {
    Rational value;
  };
  struct Sym {
    Symbol symbol;
  };
  struct Unary {
    UnaryOp op;
    std::unique_ptr<Expr> operand;
  };
  struct Binary {
    BinaryOp op;
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
  };
  struct Power {
    std::unique_ptr<Expr> base;
    Rational exponent;
  };
  struct Comparison {
    Relation relation;
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
  };

  std::variant<Literal, Sym, Unary, Binary, Power, Comparison> node;
  std::size_t column = 1;
};

/// Parses one expression, optionally followed by `=`, `<` or `<=` and a
/// second expression. Throws SourceError (SyntaxError, UnknownIdentifier).
Expr parse(std::string_view text);

/// Parses a comma-separated list of expressions.
std::vector<Expr> parse_list(std::string_view text);

/// Prefix tree form, e.g. `mul(add(3, o), pow(rho, 1/2))`.
std::string to_string(const Expr& e);

bool is_comparison(const Expr& e);

/// Evaluates a non-comparison expression. Domain errors are rethrown as
/// SourceError pointing at the failing operator.
ExternalNum eval(const Expr& e);

/// Truth value of a comparison expression. Throws EvalError otherwise.
bool eval_relation(const Expr& e);

}  // namespace solidus::cli
