#pragma once

// Expression language for chart components.
//
// Grammar (whitespace-insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)*
//   primary := number | 'pi' | 'x'<k> | func '(' expr ')' | '(' expr ')'
//   func    := 'sin' | 'cos' | 'exp' | 'sqrt'
//
// Every primitive is smooth on the interior of its domain, so evaluated charts
// are C1. Derivatives are exact forward-mode (dual numbers).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace transversal {

class ExprError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kUnknownIdentifier, kArity, kDomain };

  ExprError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  // Byte offset into the source text of the offending token or subexpression.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

enum class Op {
  kLiteral,
  kVariable,
  kPi,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kSin,
  kCos,
  kExp,
  kSqrt,
};

struct ExprNode {
  Op op = Op::kLiteral;
  double literal = 0.0;  // kLiteral
  int index = 0;         // kVariable: 0-based variable; kPow: integer exponent
  int lhs = -1;          // first operand (node index), -1 if none
  int rhs = -1;          // second operand for binary ops
  std::size_t position = 0;

  bool operator==(const ExprNode& other) const;
};

/// Value and gradient of an expression at a point.
struct DualValue {
  double value = 0.0;
  Eigen::VectorXd partials;
};

/// Immutable parsed expression over variables x1..x<dims>.
///
/// Nodes are stored in post-order: every operand precedes its parent and the
/// root is the last node. Evaluation is a single forward sweep.
class Expression {
 public:
  Expression() = default;

  static Expression parse(std::string_view text, int dims);

  int dims() const { return dims_; }
  const std::vector<ExprNode>& nodes() const { return nodes_; }
  const std::string& source() const { return source_; }

  /// Highest variable index referenced (1-based), 0 for constants.
  int max_variable() const;

  double eval(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  DualValue eval_dual(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// Evaluates into caller-owned storage; `partials` must have size dims().
  double eval_dual_into(const Eigen::Ref<const Eigen::VectorXd>& x,
                        Eigen::Ref<Eigen::VectorXd> partials) const;

  /// Canonical text: minimal parentheses, shortest round-trip literals.
  std::string print() const;

  /// Structural equality of the syntax trees (source text is ignored).
  bool same_structure(const Expression& other) const;

 private:
  friend class Parser;

  int dims_ = 0;
  std::vector<ExprNode> nodes_;
  std::string source_;
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace transversal
