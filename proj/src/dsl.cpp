#include "mdcalc/dsl.hpp"

#include <cctype>
#include <optional>

#include "mdcalc/errors.hpp"
#include "mdcalc/star.hpp"

namespace mdcalc::dsl {

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {{"adj", 1},  {"adj_wrt", 2},   {"inv", 1},
                                             {"sqrt", 1}, {"unitarize", 1}, {"comm", 2},
                                             {"ad", 2}};
  return table;
}

bool Expr::same_as(const Expr& other) const {
  if (kind != other.kind || text != other.text || index != other.index ||
      is_xi != other.is_xi || exponent != other.exponent || args.size() != other.args.size()) {
    return false;
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!args[k]->same_as(*other.args[k])) return false;
  }
  return true;
}

namespace {

struct Token {
  enum class Kind { Number, Name, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t p = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++p;
    }
  };
  while (p < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[p]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t{Token::Kind::Symbol, "", line, column};
    std::size_t q = p;
    if (std::isdigit(c)) {
      while (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) ++q;
      t.kind = Token::Kind::Number;
    } else if (std::isalpha(c) || c == '_') {
      while (q < src.size() && (std::isalnum(static_cast<unsigned char>(src[q])) || src[q] == '_')) {
        ++q;
      }
      t.kind = Token::Kind::Name;
    } else if (std::string_view("+-*/^(),;").find(static_cast<char>(c)) != std::string_view::npos) {
      q = p + 1;
    } else {
      throw SyntaxError(line, column, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    t.text = std::string(src.substr(p, q - p));
    out.push_back(t);
    advance(q - p);
  }
  out.push_back(Token{Token::Kind::End, "", line, column});
  return out;
}

std::optional<int> variable_index(std::string_view name, bool& is_xi) {
  std::string_view digits;
  if (name.starts_with("xi")) {
    is_xi = true;
    digits = name.substr(2);
  } else if (name.starts_with("x")) {
    is_xi = false;
    digits = name.substr(1);
  } else {
    return std::nullopt;
  }
  if (digits.empty() || digits.size() > 4 || digits[0] == '0') return std::nullopt;
  for (char d : digits) {
    if (!std::isdigit(static_cast<unsigned char>(d))) return std::nullopt;
  }
  return std::stoi(std::string(digits));
}

class Parser {
 public:
  Parser(std::string_view text, int vars) : tokens_(tokenize(text)), vars_(vars) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at(std::string_view symbol) const {
    return peek().kind == Token::Kind::Symbol && peek().text == symbol;
  }
  bool at_name(std::string_view name) const {
    return peek().kind == Token::Kind::Name && peek().text == name;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw SyntaxError(t.line, t.column, t.kind == Token::Kind::End ? "unexpected end of input" : what);
  }
  void expect(std::string_view symbol) {
    if (!at(symbol)) fail(peek(), "expected '" + std::string(symbol) + "'");
    take();
  }

  static ExprPtr node(Expr::Kind kind, const Token& at, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    ExprPtr left = composition();
    while (at("+") || at("-")) {
      const Token& op = take();
      left = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Subtract, op,
                  {left, composition()});
    }
    return left;
  }

  ExprPtr composition() {
    ExprPtr left = product();
    while (at_name("o")) {
      const Token& op = take();
      left = node(Expr::Kind::Compose, op, {left, product()});
    }
    return left;
  }

  ExprPtr product() {
    ExprPtr left = unary();
    while (at("*") || at("/")) {
      const Token& op = take();
      left = node(op.text == "*" ? Expr::Kind::Multiply : Expr::Kind::Divide, op,
                  {left, unary()});
    }
    return left;
  }

  ExprPtr unary() {
    if (at("-")) {
      const Token& op = take();
      return node(Expr::Kind::Negate, op, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!at("^")) return base;
    const Token& op = take();
    bool negative = false;
    if (at("-")) {
      take();
      negative = true;
    }
    if (peek().kind != Token::Kind::Number) fail(peek(), "expected an integer exponent");
    const Token& digits = take();
    if (digits.text.size() > 6) fail(digits, "exponent too large");
    auto e = std::make_shared<Expr>(*node(Expr::Kind::Power, op, {base}));
    e->exponent = std::stoi(digits.text) * (negative ? -1 : 1);
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      take();
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Number, t));
      e->text = t.text;
      return e;
    }
    if (at("(")) {
      take();
      ExprPtr inner = sum();
      expect(")");
      return inner;
    }
    if (t.kind != Token::Kind::Name) fail(t, "unexpected '" + t.text + "'");
    take();
    if (t.text == "i") return node(Expr::Kind::ImaginaryUnit, t);
    for (const Builtin& b : builtins()) {
      if (b.name != t.text) continue;
      if (!at("(")) fail(peek(), "expected '(' after " + t.text);
      take();
      std::vector<ExprPtr> args{sum()};
      if (b.arity == 2) {
        if (b.name == "adj_wrt") {
          expect(";");
        } else {
          expect(",");
        }
        args.push_back(sum());
      }
      expect(")");
      auto e = std::make_shared<Expr>(*node(Expr::Kind::Call, t, std::move(args)));
      e->text = t.text;
      return e;
    }
    bool is_xi = false;
    std::optional<int> index = variable_index(t.text, is_xi);
    if (!index || (vars_ > 0 && *index > vars_)) {
      throw Error(ErrorKind::UnknownVariable,
                  "'" + t.text + "' at line " + std::to_string(t.line) + ", column " +
                      std::to_string(t.column) +
                      (index ? " exceeds " + std::to_string(vars_) + " variables" : ""));
    }
    auto e = std::make_shared<Expr>(*node(Expr::Kind::Variable, t));
    e->index = *index;
    e->is_xi = is_xi;
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int vars_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Subtract: return 1;
    case Expr::Kind::Compose: return 2;
    case Expr::Kind::Multiply:
    case Expr::Kind::Divide: return 3;
    case Expr::Kind::Negate: return 4;
    case Expr::Kind::Power: return 5;
    default: return 6;
  }
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + render(e) + ")" : render(e);
}

}  // namespace

ExprPtr parse_operator(std::string_view text, int vars) { return Parser(text, vars).parse(); }

std::string render(const Expr& e) {
  auto binary = [&](std::string_view op) {
    const int p = precedence(e);
    return wrap(*e.args[0], precedence(*e.args[0]) < p) + std::string(op) +
           wrap(*e.args[1], precedence(*e.args[1]) <= p);
  };
  switch (e.kind) {
    case Expr::Kind::Number: return e.text;
    case Expr::Kind::ImaginaryUnit: return "i";
    case Expr::Kind::Variable: return (e.is_xi ? "xi" : "x") + std::to_string(e.index);
    case Expr::Kind::Negate: return "-" + wrap(*e.args[0], precedence(*e.args[0]) < 4);
    case Expr::Kind::Add: return binary(" + ");
    case Expr::Kind::Subtract: return binary(" - ");
    case Expr::Kind::Compose: return binary(" o ");
    case Expr::Kind::Multiply: return binary("*");
    case Expr::Kind::Divide: return binary("/");
    case Expr::Kind::Power:
      return wrap(*e.args[0], precedence(*e.args[0]) < 6) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Call: {
      std::string s = e.text + "(" + render(*e.args[0]);
      if (e.args.size() == 2) s += (e.text == "adj_wrt" ? "; " : ", ") + render(*e.args[1]);
      return s + ")";
    }
  }
  return "";
}

namespace {

// Thrown once, at the innermost failing node; outer nodes let it pass.
class LocatedError : public Error {
 public:
  LocatedError(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

std::string strip_kind(const Error& e) {
  std::string what = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  return what.starts_with(prefix) ? what.substr(prefix.size()) : what;
}

std::optional<HomogeneousSymbol> single_monomial(const Operator& p) {
  if (!p.is_exact() || p.components().size() != 1) return std::nullopt;
  const HomogeneousSymbol& s = p.components().begin()->second;
  if (s.terms().size() != 1) return std::nullopt;
  return s;
}

Operator reciprocal(const Operator& p, std::string_view what) {
  auto m = single_monomial(p);
  if (!m) {
    throw Error(ErrorKind::NotInvertible,
                std::string(what) + " needs a single exact monomial");
  }
  return Operator::from_symbol(p.context(), m->reciprocal());
}

Operator power(const Operator& base, int exponent) {
  Operator b = exponent < 0 ? reciprocal(base, "a negative power") : base;
  Operator out = Operator::one(base.context());
  for (int k = 0; k < std::abs(exponent); ++k) out = symbol_product(out, b);
  return out;
}

Operator eval(const Expr& e, const EvalConfig& cfg, const TruncationContext& ctx) {
  auto arg = [&](std::size_t k) { return eval(*e.args[k], cfg, ctx); };
  try {
    switch (e.kind) {
      case Expr::Kind::Number: return Operator::constant(ctx, Scalar(mpq_class(e.text)));
      case Expr::Kind::ImaginaryUnit: return Operator::constant(ctx, Scalar::imaginary_unit());
      case Expr::Kind::Variable:
        if (e.index > cfg.vars) {
          throw Error(ErrorKind::UnknownVariable,
                      render(e) + " exceeds " + std::to_string(cfg.vars) + " variables");
        }
        return e.is_xi ? Operator::xi(ctx, e.index) : Operator::x(ctx, e.index);
      case Expr::Kind::Negate: return -arg(0);
      case Expr::Kind::Add: return arg(0) + arg(1);
      case Expr::Kind::Subtract: return arg(0) - arg(1);
      case Expr::Kind::Multiply: return symbol_product(arg(0), arg(1));
      case Expr::Kind::Divide: {
        Operator num = arg(0);
        return symbol_product(num, reciprocal(arg(1), "division"));
      }
      case Expr::Kind::Power: return power(arg(0), e.exponent);
      case Expr::Kind::Compose: return compose(arg(0), arg(1));
      case Expr::Kind::Call: {
        const std::string& f = e.text;
        if (f == "adj") return adjoint(arg(0));
        if (f == "adj_wrt") {
          Operator p = arg(0);
          auto density = single_monomial(arg(1));
          if (!density) throw Error(ErrorKind::SchemaError, "density must be a single monomial");
          return adjoint_wrt(p, VolumeDensity(*density));
        }
        if (f == "inv") return invert(arg(0), cfg.floor);
        if (f == "sqrt") return self_adjoint_sqrt(arg(0), cfg.floor);
        if (f == "unitarize") return unitarize(arg(0), cfg.floor);
        if (f == "comm") return commutator(arg(0), arg(1));
        if (f == "ad") return ad(arg(0), arg(1), cfg.floor);
        throw Error(ErrorKind::SyntaxError, "unknown function " + f);
      }
    }
  } catch (const LocatedError&) {
    throw;
  } catch (const Error& err) {
    throw LocatedError(err.kind(), strip_kind(err) + " (in " + render(e) + " at line " +
                                       std::to_string(e.line) + ", column " +
                                       std::to_string(e.column) + ")");
  }
  return Operator(ctx);
}

}  // namespace

Operator evaluate(const Expr& expr, const EvalConfig& cfg) {
  const TruncationContext ctx{cfg.vars, cfg.floor};
  return eval(expr, cfg, ctx);
}

Operator evaluate(std::string_view text, const EvalConfig& cfg) {
  return evaluate(*parse_operator(text, cfg.vars), cfg);
}

}  // namespace mdcalc::dsl
