#include "eulerop/expr.hpp"

#include <cctype>

#include "eulerop/error.hpp"

namespace eulerop {

bool operator==(const OpExpr& a, const OpExpr& b) {
  return a.kind == b.kind && a.number == b.number && a.name == b.name &&
         a.exponent == b.exponent && a.args == b.args;
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "number '" + t.text + "'";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        default:
          throw SyntaxError(line, col, "unexpected character '" + std::string(1, c) + "'");
      }
    }
    col += t.text.size();
    i += t.text.size();
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  OpExpr parse() {
    OpExpr e = expr();
    if (peek().kind != Tok::End) {
      fail("expected one of: '+', '-', '*', '/', '^', end of input");
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.line, t.column, expected + "; found " + describe(t));
  }

  static OpExpr node(OpExpr::Kind k, const Token& at, std::vector<OpExpr> args = {}) {
    OpExpr e;
    e.kind = k;
    e.args = std::move(args);
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  OpExpr expr() {
    OpExpr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      OpExpr rhs = term();
      lhs = node(op.kind == Tok::Plus ? OpExpr::Kind::Add : OpExpr::Kind::Sub, op,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  OpExpr term() {
    OpExpr lhs = signed_factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      OpExpr rhs = signed_factor();
      lhs = node(op.kind == Tok::Star ? OpExpr::Kind::Mul : OpExpr::Kind::Div, op,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  OpExpr signed_factor() {
    if (peek().kind == Tok::Minus) {
      const Token& op = next();
      Guard g(*this);
      return node(OpExpr::Kind::Neg, op, {signed_factor()});
    }
    return factor();
  }

  OpExpr factor() {
    OpExpr base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& op = next();
      if (peek().kind != Tok::Int) fail("expected a nonnegative integer exponent");
      const Token& lit = next();
      if (lit.text.size() > 4 || std::stoul(lit.text) > kMaxExponent) {
        throw SyntaxError(lit.line, lit.column,
                          "exponent exceeds " + std::to_string(kMaxExponent));
      }
      OpExpr p = node(OpExpr::Kind::Pow, op, {std::move(base)});
      p.exponent = static_cast<unsigned>(std::stoul(lit.text));
      return p;
    }
    return base;
  }

  OpExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        OpExpr e = node(OpExpr::Kind::Number, t);
        e.number = Integer(t.text);
        return e;
      }
      case Tok::Ident: {
        next();
        if (t.text == "x") return node(OpExpr::Kind::X, t);
        if (t.text == "d") return node(OpExpr::Kind::Deriv, t);
        if (t.text == "D") return node(OpExpr::Kind::Euler, t);
        OpExpr e = node(OpExpr::Kind::Param, t);
        e.name = t.text;
        return e;
      }
      case Tok::LParen: {
        next();
        Guard g(*this);
        OpExpr e = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return e;
      }
      default:
        fail("expected one of: x, d, D, number, identifier, '(', '-'");
    }
  }

  struct Guard {
    explicit Guard(Parser& p) : p_(p) {
      if (++p_.depth_ > 400) p_.fail("nesting too deep");
    }
    ~Guard() { --p_.depth_; }
    Parser& p_;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void collect(const OpExpr& e, ParamSet& out) {
  if (e.kind == OpExpr::Kind::Param) out.declare(e.name);
  for (const auto& a : e.args) collect(a, out);
}

int precedence(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::Add:
    case OpExpr::Kind::Sub: return 1;
    case OpExpr::Kind::Mul:
    case OpExpr::Kind::Div: return 2;
    case OpExpr::Kind::Neg: return 3;
    case OpExpr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const OpExpr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

OpExpr parse_expr(std::string_view src) { return Parser(src).parse(); }

ParamSet identifiers(const OpExpr& e) {
  ParamSet out;
  collect(e, out);
  return out;
}

DiffOp lower(const OpExpr& e, const ParamSet& params) {
  using K = OpExpr::Kind;
  switch (e.kind) {
    case K::X: return DiffOp::x();
    case K::Deriv: return DiffOp::d();
    case K::Euler: return DiffOp::euler();
    case K::Number: return DiffOp(RatFun(Rational(e.number)));
    case K::Param: {
      if (!params.contains(e.name)) {
        throw Error(ErrorKind::UnknownParameter,
                    "'" + e.name + "' at line " + std::to_string(e.line) + ", column " +
                        std::to_string(e.column) + " is not a declared parameter");
      }
      return DiffOp(RatFun::parameter(e.name));
    }
    case K::Neg: return -lower(e.args[0], params);
    case K::Add: return lower(e.args[0], params) + lower(e.args[1], params);
    case K::Sub: return lower(e.args[0], params) - lower(e.args[1], params);
    case K::Mul: return lower(e.args[0], params) * lower(e.args[1], params);
    case K::Pow: return lower(e.args[0], params).pow(e.exponent);
    case K::Div: {
      DiffOp num = lower(e.args[0], params);
      DiffOp den = lower(e.args[1], params);
      if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
      if (den.terms().size() != 1 || den.terms().begin()->first.d_order != 0) {
        throw SyntaxError(e.line, e.column,
                          "divisor must be a scalar or a single power of x");
      }
      const auto& [k, c] = *den.terms().begin();
      return DiffOp::term(-k.x_power, 0, c.inverse()) * num;
    }
  }
  return {};
}

DiffOp parse_operator(std::string_view src, const ParamSet& params) {
  return lower(parse_expr(src), params);
}

RatFun parse_scalar(std::string_view src, const ParamSet& params) {
  OpExpr e = parse_expr(src);
  DiffOp op = lower(e, params);
  if (op.is_zero()) return RatFun();
  if (op.terms().size() != 1 || !(op.terms().begin()->first == DiffOp::Key{0, 0})) {
    throw SyntaxError(e.line, e.column, "expected a scalar expression");
  }
  return op.terms().begin()->second;
}

std::string print(const OpExpr& e) {
  using K = OpExpr::Kind;
  switch (e.kind) {
    case K::X: return "x";
    case K::Deriv: return "d";
    case K::Euler: return "D";
    case K::Number: return e.number.get_str();
    case K::Param: return e.name;
    case K::Neg: return "-" + wrap(e.args[0], 3);
    case K::Add: return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case K::Sub: return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case K::Mul: return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case K::Div: return wrap(e.args[0], 2) + "/" + wrap(e.args[1], 3);
    case K::Pow: return wrap(e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::vector<std::pair<DiffOp::Key, RatFun>> terms(op.terms().begin(), op.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.d_order != b.first.d_order) return a.first.d_order > b.first.d_order;
    return a.first.x_power > b.first.x_power;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c0] : terms) {
    const bool neg = leading_negative(c0);
    const RatFun c = neg ? -c0 : c0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;

    std::vector<std::string> parts;
    const bool unit = c.is_one();
    std::string coef = coefficient_factor(c);
    if (k.x_power < 0) {
      std::string den = "x";
      if (k.x_power != -1) den += "^" + std::to_string(-k.x_power);
      parts.push_back(coef + "/" + den);
    } else {
      if (!unit || (k.x_power == 0 && k.d_order == 0)) parts.push_back(coef);
      if (k.x_power > 0) parts.push_back(k.x_power == 1 ? "x" : "x^" + std::to_string(k.x_power));
    }
    if (k.d_order > 0) parts.push_back(k.d_order == 1 ? "d" : "d^" + std::to_string(k.d_order));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
  }
  return out;
}

}  // namespace eulerop
