#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tscalc/scalar.hpp"

namespace tscalc::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sqrt, Min, Max };

struct Literal {
  mpq_class value;
};
struct Variable {
  std::string name;
  std::size_t slot;
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function fn;
  std::vector<NodePtr> args;
};

struct Node {
  std::variant<Literal, Variable, Negate, Binary, Call> kind;
};

bool equal(const Node& a, const Node& b);

/**
 * Immutable syntax tree over a declared variable list.
 *
 *   expr  := term (('+' | '-') term)*
 *   term  := unary (('*' | '/') unary)*
 *   unary := '-' unary | power
 *   power := atom ('^' unary)?            right-associative
 *   atom  := number | name | fn '(' expr (',' expr)* ')' | '(' expr ')'
 *
 * Numbers are read exactly ("0.25" is 1/4) and a quotient of two integer
 * literals folds into one rational literal, so "1/4" is the literal 1/4.
 */
class Expr {
 public:
  Expr(NodePtr root, std::vector<std::string> variables)
      : root_(std::move(root)), variables_(std::move(variables)) {}

  const Node& root() const noexcept { return *root_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }

  /// Values by variable slot, in declaration order.
  Scalar eval(std::span<const Scalar> values, Mode mode) const;
  Scalar eval(const std::map<std::string, Scalar>& env, Mode mode) const;

  /// Minimal-parenthesis source text that parses back to the same tree.
  std::string print() const;

  bool operator==(const Expr& other) const { return equal(*root_, *other.root_); }

 private:
  NodePtr root_;
  std::vector<std::string> variables_;
};

Expr parse(std::string_view source, std::vector<std::string> variables);

}  // namespace tscalc::expr
