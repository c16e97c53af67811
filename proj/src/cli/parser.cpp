#include "solidus/cli/parser.hpp"

#include <cctype>

#include "solidus/error.hpp"

namespace solidus::cli {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Eq, Lt, Le, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E') && j + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        throw SourceError(ErrorCode::SyntaxError, j + 1, "floating-point literals are not supported; use a fraction");
      }
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok k;
      std::size_t len = 1;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '=': k = Tok::Eq; break;
        case '<':
          if (i + 1 < s.size() && s[i + 1] == '=') {
            k = Tok::Le;
            len = 2;
          } else {
            k = Tok::Lt;
          }
          break;
        default:
          throw SourceError(ErrorCode::SyntaxError, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(s.substr(i, len)), col});
      i += len;
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

std::unique_ptr<Expr> boxed(Expr e) { return std::make_unique<Expr>(std::move(e)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Expr statement() {
    Expr lhs = expr();
    const Token& t = peek();
    if (t.kind == Tok::Eq || t.kind == Tok::Lt || t.kind == Tok::Le) {
      next();
      const Relation r = t.kind == Tok::Eq ? Relation::Eq : (t.kind == Tok::Lt ? Relation::Lt : Relation::Le);
      Expr rhs = expr();
      return {Expr::Comparison{r, boxed(std::move(lhs)), boxed(std::move(rhs))}, t.column};
    }
    return lhs;
  }

  std::vector<Expr> list() {
    std::vector<Expr> out;
    out.push_back(statement());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(statement());
    }
    return out;
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SourceError(ErrorCode::SyntaxError, t.column,
                      t.kind == Tok::End ? what + " at end of input" : what);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      Expr rhs = term();
      lhs = {Expr::Binary{op.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub, boxed(std::move(lhs)), boxed(std::move(rhs))},
             op.column};
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      Expr rhs = factor();
      lhs = {Expr::Binary{op.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div, boxed(std::move(lhs)), boxed(std::move(rhs))},
             op.column};
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& caret = next();
    Rational exponent;
    if (peek().kind == Tok::Int) {
      exponent = Rational::parse(next().text);
    } else if (peek().kind == Tok::LParen) {
      next();
      exponent = signed_rational();
      expect(Tok::RParen, "')'");
    } else {
      fail("expected an exponent");
    }
    return {Expr::Power{boxed(std::move(base)), exponent}, caret.column};
  }

  Rational signed_rational() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    std::string text = expect(Tok::Int, "an integer").text;
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Int, "a denominator");
      if (Rational::parse(den.text).is_zero()) {
        throw SourceError(ErrorCode::SyntaxError, den.column, "zero denominator");
      }
      text += "/" + den.text;
    }
    const Rational r = Rational::parse(text);
    return negative ? -r : r;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        next();
        return {Expr::Literal{Rational::parse(t.text)}, t.column};
      case Tok::Minus: {
        next();
        Expr operand = factor();
        return {Expr::Unary{UnaryOp::Neg, boxed(std::move(operand))}, t.column};
      }
      case Tok::LParen: {
        next();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: return identifier();
      default: fail(t.kind == Tok::End ? "expected an operand" : "unexpected '" + t.text + "'");
    }
  }

  Expr identifier() {
    const Token& t = next();
    if (t.text == "rho") return {Expr::Sym{Symbol::Rho}, t.column};
    if (t.text == "o") return {Expr::Sym{Symbol::Oslash}, t.column};
    if (t.text == "L") return {Expr::Sym{Symbol::Pound}, t.column};
    if (t.text == "M") return {Expr::Sym{Symbol::Max}, t.column};
    UnaryOp op;
    if (t.text == "e") {
      op = UnaryOp::Magnitude;
    } else if (t.text == "u") {
      op = UnaryOp::Unity;
    } else if (t.text == "inv") {
      op = UnaryOp::Inverse;
    } else if (t.text == "abs") {
      op = UnaryOp::Abs;
    } else if (t.text == "shadow") {
      op = UnaryOp::Shadow;
    } else {
      throw SourceError(ErrorCode::UnknownIdentifier, t.column, "unknown identifier '" + t.text + "'");
    }
    expect(Tok::LParen, "'(' after function name");
    Expr arg = expr();
    expect(Tok::RParen, "')'");
    return {Expr::Unary{op, boxed(std::move(arg))}, t.column};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Magnitude: return "e";
    case UnaryOp::Unity: return "u";
    case UnaryOp::Inverse: return "inv";
    case UnaryOp::Abs: return "abs";
    case UnaryOp::Shadow: return "shadow";
  }
  return "?";
}

std::string_view binary_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Div: return "div";
  }
  return "?";
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Eq: return "eq";
    case Relation::Lt: return "lt";
    case Relation::Le: return "le";
  }
  return "?";
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Runs a domain operation, attaching the node's column to any error.
template <class F>
auto at(std::size_t column, F&& f) {
  try {
    return f();
  } catch (const SourceError&) {
    throw;
  } catch (const Error& e) {
    throw SourceError(e.code(), column, e.what());
  }
}

}  // namespace

Expr parse(std::string_view text) {
  Parser p(text);
  Expr e = p.statement();
  p.finish();
  return e;
}

std::vector<Expr> parse_list(std::string_view text) {
  Parser p(text);
  std::vector<Expr> out = p.list();
  p.finish();
  return out;
}

std::string to_string(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const Expr::Literal& n) { return n.value.str(); },
          [](const Expr::Sym& s) -> std::string {
            switch (s.symbol) {
              case Symbol::Rho: return "rho";
              case Symbol::Oslash: return "o";
              case Symbol::Pound: return "L";
              case Symbol::Max: return "M";
            }
            return "?";
          },
          [](const Expr::Unary& u) { return std::string(unary_name(u.op)) + "(" + to_string(*u.operand) + ")"; },
          [](const Expr::Binary& b) {
            return std::string(binary_name(b.op)) + "(" + to_string(*b.lhs) + ", " + to_string(*b.rhs) + ")";
          },
          [](const Expr::Power& p) { return "pow(" + to_string(*p.base) + ", " + p.exponent.str() + ")"; },
          [](const Expr::Comparison& c) {
            return std::string(relation_name(c.relation)) + "(" + to_string(*c.lhs) + ", " + to_string(*c.rhs) + ")";
          },
      },
      e.node);
}

bool is_comparison(const Expr& e) { return std::holds_alternative<Expr::Comparison>(e.node); }

ExternalNum eval(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const Expr::Literal& n) { return ExternalNum(n.value); },
          [](const Expr::Sym& s) -> ExternalNum {
            switch (s.symbol) {
              case Symbol::Rho: return ExternalNum::rho();
              case Symbol::Oslash: return Neutrix::oslash();
              case Symbol::Pound: return Neutrix::pound();
              case Symbol::Max: return Neutrix::max();
            }
            return {};
          },
          [&](const Expr::Unary& u) {
            const ExternalNum x = eval(*u.operand);
            return at(e.column, [&] {
              switch (u.op) {
                case UnaryOp::Neg: return ext_neg(x);
                case UnaryOp::Magnitude: return magnitude(x);
                case UnaryOp::Unity: return unity(x);
                case UnaryOp::Inverse: return ext_inv(x);
                case UnaryOp::Abs: return ext_abs(x);
                case UnaryOp::Shadow: return shadow(x);
              }
              return x;
            });
          },
          [&](const Expr::Binary& b) {
            const ExternalNum x = eval(*b.lhs);
            const ExternalNum y = eval(*b.rhs);
            return at(e.column, [&] {
              switch (b.op) {
                case BinaryOp::Add: return x + y;
                case BinaryOp::Sub: return x - y;
                case BinaryOp::Mul: return x * y;
                case BinaryOp::Div: return x / y;
              }
              return x;
            });
          },
          [&](const Expr::Power& p) {
            const ExternalNum base = eval(*p.base);
            const RhoPoly& num = base.rep().num();
            if (!base.is_precise() || !base.rep().is_polynomial() || !num.is_monomial() ||
                num.leading_coefficient() != Rational(1)) {
              throw SourceError(ErrorCode::EvalError, e.column,
                                "base of '^' must be rho or a power of rho, got " + base.str());
            }
            const Rational exponent = *num.degree() * p.exponent;
            return ExternalNum(PreciseNum::rho_power(exponent));
          },
          [&](const Expr::Comparison&) -> ExternalNum {
            throw SourceError(ErrorCode::EvalError, e.column, "a comparison has no external-number value");
          },
      },
      e.node);
}

bool eval_relation(const Expr& e) {
  const auto* c = std::get_if<Expr::Comparison>(&e.node);
  if (c == nullptr) throw SourceError(ErrorCode::EvalError, e.column, "not a comparison");
  const ExternalNum x = eval(*c->lhs);
  const ExternalNum y = eval(*c->rhs);
  switch (c->relation) {
    case Relation::Eq: return x == y;
    case Relation::Lt: return ext_less(x, y);
    case Relation::Le: return ext_leq(x, y);
  }
  return false;
}

}  // namespace solidus::cli
