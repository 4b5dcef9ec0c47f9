#include "tscalc/exprlang.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <type_traits>

namespace tscalc::expr {

bool equal(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.kind);
        if constexpr (std::is_same_v<T, Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return equal(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
        } else {
          if (x.fn != y.fn || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!equal(*x.args[i], *y.args[i])) return false;
          return true;
        }
      },
      a.kind);
}

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(i) || (c == '.' && digit(i + 1))) {
      while (digit(i)) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (digit(i)) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t k = i + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (digit(k)) {
          i = k;
          while (digit(i)) ++i;
        }
      }
      out.push_back({Tok::Number, start, std::string(src.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Tok::Name, start, std::string(src.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default: throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

NodePtr make(auto&& kind) { return std::make_shared<const Node>(Node{std::forward<decltype(kind)>(kind)}); }

const Literal* as_integer_literal(const NodePtr& n) {
  const auto* lit = std::get_if<Literal>(&n->kind);
  return lit && lit->value.get_den() == 1 ? lit : nullptr;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars)
      : tokens_(lex(src)), vars_(vars) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(peek().pos, std::string("expected ") + what);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      BinaryOp op = take().kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = make(Binary{op, lhs, term()});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool div = take().kind == Tok::Slash;
      NodePtr rhs = unary();
      const Literal* l = as_integer_literal(lhs);
      const Literal* r = as_integer_literal(rhs);
      if (div && l && r && r->value != 0) {
        mpq_class q = l->value / r->value;
        q.canonicalize();
        lhs = make(Literal{q});
      } else {
        lhs = make(Binary{div ? BinaryOp::Div : BinaryOp::Mul, lhs, rhs});
      }
    }
    return lhs;
  }

  NodePtr unary() {
    if (accept(Tok::Minus)) return make(Negate{unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept(Tok::Caret)) return make(Binary{BinaryOp::Pow, base, unary()});
    return base;
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        try {
          return make(Literal{Scalar::parse_rational(t.text)});
        } catch (const Error&) {
          throw SyntaxError(t.pos, "malformed number '" + t.text + "'");
        }
      }
      case Tok::LParen: {
        take();
        NodePtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Name: {
        take();
        if (auto fn = function_named(t.text)) return call(*fn, t);
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) throw Error(Errc::UnknownVariable, "'" + t.text + "' is not declared");
        return make(Variable{t.text, static_cast<std::size_t>(it - vars_.begin())});
      }
      case Tok::End: throw SyntaxError(t.pos, "unexpected end of input");
      default: throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  static std::optional<Function> function_named(std::string_view name) {
    if (name == "sqrt") return Function::Sqrt;
    if (name == "min") return Function::Min;
    if (name == "max") return Function::Max;
    return std::nullopt;
  }

  NodePtr call(Function fn, const Token& name) {
    expect(Tok::LParen, "'(' after function name");
    std::vector<NodePtr> args{expr()};
    while (accept(Tok::Comma)) args.push_back(expr());
    expect(Tok::RParen, "')'");
    const bool ok = fn == Function::Sqrt ? args.size() == 1 : args.size() >= 2;
    if (!ok) throw SyntaxError(name.pos, "wrong number of arguments to " + name.text);
    return make(Call{fn, std::move(args)});
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

Scalar eval_node(const Node& n, std::span<const Scalar> values, Mode mode) {
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return Scalar(x.value).to_mode(mode);
        } else if constexpr (std::is_same_v<T, Variable>) {
          const Scalar& v = values[x.slot];
          if (v.mode() != mode)
            throw Error(Errc::ModeMismatch, "variable '" + x.name + "' bound in the wrong mode");
          return v;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval_node(*x.operand, values, mode);
        } else if constexpr (std::is_same_v<T, Binary>) {
          Scalar l = eval_node(*x.lhs, values, mode);
          Scalar r = eval_node(*x.rhs, values, mode);
          switch (x.op) {
            case BinaryOp::Add: return l + r;
            case BinaryOp::Sub: return l - r;
            case BinaryOp::Mul: return l * r;
            case BinaryOp::Div: return l / r;
            case BinaryOp::Pow: return l.pow(r);
          }
          throw Error(Errc::DomainError, "bad operator");
        } else {
          if (x.fn == Function::Sqrt) return eval_node(*x.args[0], values, mode).sqrt();
          Scalar acc = eval_node(*x.args[0], values, mode);
          for (std::size_t i = 1; i < x.args.size(); ++i) {
            Scalar v = eval_node(*x.args[i], values, mode);
            acc = x.fn == Function::Min ? min(acc, v) : max(acc, v);
          }
          return acc;
        }
      },
      n.kind);
}

// Precedence: 1 additive, 2 multiplicative, 3 unary minus, 4 power, 5 atom.
int precedence(const Node& n) {
  if (const auto* lit = std::get_if<Literal>(&n.kind)) {
    if (sgn(lit->value) < 0) return 3;
    return lit->value.get_den() == 1 ? 5 : 2;  // "p/q" re-reads as a quotient
  }
  if (std::holds_alternative<Negate>(n.kind)) return 3;
  if (const auto* b = std::get_if<Binary>(&n.kind)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return 1;
      case BinaryOp::Mul:
      case BinaryOp::Div: return 2;
      case BinaryOp::Pow: return 4;
    }
  }
  return 5;
}

std::string print_node(const Node& n);

std::string wrapped(const Node& n, bool parens) {
  std::string s = print_node(n);
  return parens ? "(" + s + ")" : s;
}

std::string print_node(const Node& n) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Literal>) {
          if (sgn(x.value) < 0) return "-" + mpq_class(-x.value).get_str();
          return x.value.get_str();
        } else if constexpr (std::is_same_v<T, Variable>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + wrapped(*x.operand, precedence(*x.operand) < 3);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(n);
          const int lp = precedence(*x.lhs);
          const int rp = precedence(*x.rhs);
          if (x.op == BinaryOp::Pow)
            return wrapped(*x.lhs, lp <= p) + "^" + wrapped(*x.rhs, rp < 3);
          const char* sym = x.op == BinaryOp::Add   ? " + "
                            : x.op == BinaryOp::Sub ? " - "
                            : x.op == BinaryOp::Mul ? "*"
                                                    : "/";
          return wrapped(*x.lhs, lp < p) + sym + wrapped(*x.rhs, rp <= p);
        } else {
          std::string s = x.fn == Function::Sqrt ? "sqrt(" : x.fn == Function::Min ? "min(" : "max(";
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (i) s += ", ";
            s += print_node(*x.args[i]);
          }
          return s + ")";
        }
      },
      n.kind);
}

}  // namespace

Expr parse(std::string_view source, std::vector<std::string> variables) {
  NodePtr root = Parser(source, variables).parse_all();
  return Expr(std::move(root), std::move(variables));
}

Scalar Expr::eval(std::span<const Scalar> values, Mode mode) const {
  if (values.size() != variables_.size())
    throw Error(Errc::UnknownVariable, "expected " + std::to_string(variables_.size()) +
                                           " variable values, got " +
                                           std::to_string(values.size()));
  return eval_node(*root_, values, mode);
}

namespace {

void mark_free(const Node& node, std::vector<bool>& used) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          used[n.slot] = true;
        } else if constexpr (std::is_same_v<T, Negate>) {
          mark_free(*n.operand, used);
        } else if constexpr (std::is_same_v<T, Binary>) {
          mark_free(*n.lhs, used);
          mark_free(*n.rhs, used);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& arg : n.args) mark_free(*arg, used);
        }
      },
      node.kind);
}

}  // namespace

Scalar Expr::eval(const std::map<std::string, Scalar>& env, Mode mode) const {
  std::vector<bool> used(variables_.size(), false);
  mark_free(*root_, used);
  std::vector<Scalar> values(variables_.size(), Scalar::zero(mode));
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    if (!used[k]) continue;
    auto it = env.find(variables_[k]);
    if (it == env.end())
      throw Error(Errc::UnknownVariable, "no value bound for '" + variables_[k] + "'");
    values[k] = it->second;
  }
  return eval_node(*root_, values, mode);
}

std::string Expr::print() const { return print_node(*root_); }

}  // namespace tscalc::expr
