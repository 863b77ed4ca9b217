#include "transversal/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

namespace transversal {

ExprError::ExprError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      kind_(kind),
      position_(position) {}

bool ExprNode::operator==(const ExprNode& other) const {
  return op == other.op && literal == other.literal && index == other.index &&
         lhs == other.lhs && rhs == other.rhs;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

class Parser {
 public:
  Parser(std::string_view text, int dims) : text_(text), dims_(dims) {}

  Expression run() {
    if (dims_ < 0) throw std::invalid_argument("Expression::parse: negative dimension");
    skip_space();
    if (at_end()) throw ExprError(ExprError::Kind::kSyntax, 0, "empty expression");
    parse_expr();
    skip_space();
    if (!at_end()) {
      throw ExprError(ExprError::Kind::kSyntax, pos_,
                      std::string("unexpected character '") + text_[pos_] + "'");
    }
    Expression e;
    e.dims_ = dims_;
    e.nodes_ = std::move(nodes_);
    e.source_ = std::string(text_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int push(ExprNode node) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int binary(Op op, int lhs, int rhs, std::size_t at) {
    ExprNode n;
    n.op = op;
    n.lhs = lhs;
    n.rhs = rhs;
    n.position = at;
    return push(n);
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      const int rhs = parse_term();
      lhs = binary(c == '+' ? Op::kAdd : Op::kSub, lhs, rhs, at);
    }
  }

  int parse_term() {
    int lhs = parse_unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      const std::size_t at = pos_++;
      const int rhs = parse_unary();
      lhs = binary(c == '*' ? Op::kMul : Op::kDiv, lhs, rhs, at);
    }
  }

  int parse_unary() {
    skip_space();
    if (peek() == '-') {
      const std::size_t at = pos_++;
      const int operand = parse_unary();
      ExprNode n;
      n.op = Op::kNeg;
      n.lhs = operand;
      n.position = at;
      return push(n);
    }
    return parse_power();
  }

  int parse_power() {
    int base = parse_primary();
    for (;;) {
      skip_space();
      if (peek() != '^') return base;
      const std::size_t at = pos_++;
      skip_space();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
        skip_space();
      }
      const std::size_t digits_at = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (digits_at == pos_ || peek() == '.' || peek() == 'e' || peek() == 'E') {
        throw ExprError(ExprError::Kind::kSyntax, digits_at,
                        "exponent must be an integer literal");
      }
      int exponent = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + digits_at, text_.data() + pos_, exponent);
      if (ec != std::errc() || exponent > 64) {
        throw ExprError(ExprError::Kind::kSyntax, digits_at, "exponent out of range");
      }
      ExprNode n;
      n.op = Op::kPow;
      n.lhs = base;
      n.index = negative ? -exponent : exponent;
      n.position = at;
      base = push(n);
    }
  }

  int parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      throw ExprError(ExprError::Kind::kSyntax, start, "malformed number");
    }
    ExprNode n;
    n.op = Op::kLiteral;
    n.literal = value;
    n.position = start;
    return push(n);
  }

  void reject_call(std::size_t at, const std::string& name) {
    skip_space();
    if (peek() == '(') {
      throw ExprError(ExprError::Kind::kArity, at, "'" + name + "' takes no arguments");
    }
  }

  int parse_primary() {
    skip_space();
    if (at_end()) throw ExprError(ExprError::Kind::kSyntax, pos_, "unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      const std::size_t open = pos_++;
      const int inner = parse_expr();
      skip_space();
      if (peek() != ')') throw ExprError(ExprError::Kind::kSyntax, open, "unbalanced '('");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      return parse_identifier(name, start);
    }
    throw ExprError(ExprError::Kind::kSyntax, pos_,
                    std::string("unexpected character '") + c + "'");
  }

  int parse_identifier(const std::string& name, std::size_t start) {
    if (name == "pi") {
      reject_call(start, name);
      ExprNode n;
      n.op = Op::kPi;
      n.position = start;
      return push(n);
    }
    if (name.size() >= 2 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      int k = 0;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
      if (ec != std::errc() || k < 1 || k > dims_) {
        throw ExprError(ExprError::Kind::kUnknownIdentifier, start,
                        "unknown variable " + name + " (dimension " + std::to_string(dims_) + ")");
      }
      reject_call(start, name);
      ExprNode n;
      n.op = Op::kVariable;
      n.index = k - 1;
      n.position = start;
      return push(n);
    }
    Op op;
    if (name == "sin") {
      op = Op::kSin;
    } else if (name == "cos") {
      op = Op::kCos;
    } else if (name == "exp") {
      op = Op::kExp;
    } else if (name == "sqrt") {
      op = Op::kSqrt;
    } else {
      throw ExprError(ExprError::Kind::kUnknownIdentifier, start, "unknown identifier '" + name + "'");
    }
    skip_space();
    if (peek() != '(') throw ExprError(ExprError::Kind::kSyntax, pos_, "expected '(' after " + name);
    ++pos_;
    skip_space();
    if (peek() == ')') throw ExprError(ExprError::Kind::kArity, start, name + " expects 1 argument, got 0");
    const int arg = parse_expr();
    skip_space();
    if (peek() == ',') throw ExprError(ExprError::Kind::kArity, start, name + " expects 1 argument");
    if (peek() != ')') throw ExprError(ExprError::Kind::kSyntax, pos_, "expected ')'");
    ++pos_;
    ExprNode n;
    n.op = op;
    n.lhs = arg;
    n.position = start;
    return push(n);
  }

  std::string_view text_;
  int dims_;
  std::size_t pos_ = 0;
  std::vector<ExprNode> nodes_;
};

Expression Expression::parse(std::string_view text, int dims) { return Parser(text, dims).run(); }

int Expression::max_variable() const {
  int m = 0;
  for (const auto& n : nodes_) {
    if (n.op == Op::kVariable) m = std::max(m, n.index + 1);
  }
  return m;
}

namespace {

struct Workspace {
  std::vector<double> values;
  std::vector<double> partials;  // node-major, dims entries per node
};

thread_local Workspace tls_workspace;

[[noreturn]] void domain_error(const ExprNode& n, const std::string& what) {
  throw ExprError(ExprError::Kind::kDomain, n.position, what);
}

}  // namespace

double Expression::eval_dual_into(const Eigen::Ref<const Eigen::VectorXd>& x,
                                  Eigen::Ref<Eigen::VectorXd> partials) const {
  if (nodes_.empty()) throw std::logic_error("Expression: evaluating an empty expression");
  if (x.size() < dims_) throw std::invalid_argument("Expression: point has too few coordinates");
  const std::size_t d = static_cast<std::size_t>(dims_);
  Workspace& ws = tls_workspace;
  ws.values.resize(nodes_.size());
  ws.partials.resize(nodes_.size() * d);

  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const ExprNode& n = nodes_[k];
    double* dk = ws.partials.data() + k * d;
    const double a = n.lhs >= 0 ? ws.values[n.lhs] : 0.0;
    const double* da = n.lhs >= 0 ? ws.partials.data() + n.lhs * d : nullptr;
    const double b = n.rhs >= 0 ? ws.values[n.rhs] : 0.0;
    const double* db = n.rhs >= 0 ? ws.partials.data() + n.rhs * d : nullptr;
    double v = 0.0;
    switch (n.op) {
      case Op::kLiteral:
        v = n.literal;
        for (std::size_t j = 0; j < d; ++j) dk[j] = 0.0;
        break;
      case Op::kPi:
        v = std::numbers::pi;
        for (std::size_t j = 0; j < d; ++j) dk[j] = 0.0;
        break;
      case Op::kVariable:
        v = x[n.index];
        for (std::size_t j = 0; j < d; ++j) dk[j] = (static_cast<int>(j) == n.index) ? 1.0 : 0.0;
        break;
      case Op::kNeg:
        v = -a;
        for (std::size_t j = 0; j < d; ++j) dk[j] = -da[j];
        break;
      case Op::kAdd:
        v = a + b;
        for (std::size_t j = 0; j < d; ++j) dk[j] = da[j] + db[j];
        break;
      case Op::kSub:
        v = a - b;
        for (std::size_t j = 0; j < d; ++j) dk[j] = da[j] - db[j];
        break;
      case Op::kMul:
        v = a * b;
        for (std::size_t j = 0; j < d; ++j) dk[j] = da[j] * b + a * db[j];
        break;
      case Op::kDiv: {
        if (b == 0.0) domain_error(n, "division by zero");
        v = a / b;
        for (std::size_t j = 0; j < d; ++j) dk[j] = (da[j] - v * db[j]) / b;
        break;
      }
      case Op::kPow: {
        const int p = n.index;
        if (p == 0) {
          v = 1.0;
          for (std::size_t j = 0; j < d; ++j) dk[j] = 0.0;
          break;
        }
        if (p < 0 && a == 0.0) domain_error(n, "division by zero (negative power of zero)");
        const double lower = std::pow(a, p - 1);
        v = lower * a;
        const double slope = p * lower;
        for (std::size_t j = 0; j < d; ++j) dk[j] = slope * da[j];
        break;
      }
      case Op::kSin: {
        v = std::sin(a);
        const double c = std::cos(a);
        for (std::size_t j = 0; j < d; ++j) dk[j] = c * da[j];
        break;
      }
      case Op::kCos: {
        v = std::cos(a);
        const double s = -std::sin(a);
        for (std::size_t j = 0; j < d; ++j) dk[j] = s * da[j];
        break;
      }
      case Op::kExp:
        v = std::exp(a);
        for (std::size_t j = 0; j < d; ++j) dk[j] = v * da[j];
        break;
      case Op::kSqrt: {
        if (a < 0.0) domain_error(n, "sqrt of negative value");
        if (a == 0.0) domain_error(n, "sqrt is not differentiable at zero");
        v = std::sqrt(a);
        const double s = 0.5 / v;
        for (std::size_t j = 0; j < d; ++j) dk[j] = s * da[j];
        break;
      }
    }
    if (!std::isfinite(v)) domain_error(n, "non-finite value");
    ws.values[k] = v;
  }

  const std::size_t root = nodes_.size() - 1;
  for (std::size_t j = 0; j < d; ++j) {
    const double pj = ws.partials[root * d + j];
    if (!std::isfinite(pj)) domain_error(nodes_[root], "non-finite derivative");
    partials[static_cast<Eigen::Index>(j)] = pj;
  }
  return ws.values[root];
}

DualValue Expression::eval_dual(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  DualValue out;
  out.partials.resize(dims_);
  out.value = eval_dual_into(x, out.partials);
  return out;
}

double Expression::eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return eval_dual(x).value;
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::kAdd:
    case Op::kSub:
      return 1;
    case Op::kMul:
    case Op::kDiv:
      return 2;
    case Op::kNeg:
      return 3;
    case Op::kPow:
      return 4;
    default:
      return 5;
  }
}

void print_node(const std::vector<ExprNode>& nodes, int k, std::string& out) {
  const ExprNode& n = nodes[k];
  auto wrapped = [&](int child, bool parens) {
    if (parens) out += '(';
    print_node(nodes, child, out);
    if (parens) out += ')';
  };
  const int prec = precedence(n.op);
  switch (n.op) {
    case Op::kLiteral:
      out += format_double(n.literal);
      break;
    case Op::kPi:
      out += "pi";
      break;
    case Op::kVariable:
      out += "x" + std::to_string(n.index + 1);
      break;
    case Op::kNeg:
      out += '-';
      wrapped(n.lhs, precedence(nodes[n.lhs].op) < prec);
      break;
    case Op::kAdd:
    case Op::kSub:
    case Op::kMul:
    case Op::kDiv: {
      wrapped(n.lhs, precedence(nodes[n.lhs].op) < prec);
      switch (n.op) {
        case Op::kAdd: out += " + "; break;
        case Op::kSub: out += " - "; break;
        case Op::kMul: out += '*'; break;
        default: out += '/'; break;
      }
      wrapped(n.rhs, precedence(nodes[n.rhs].op) <= prec);
      break;
    }
    case Op::kPow:
      wrapped(n.lhs, precedence(nodes[n.lhs].op) < prec);
      out += '^';
      out += std::to_string(n.index);
      break;
    case Op::kSin:
    case Op::kCos:
    case Op::kExp:
    case Op::kSqrt: {
      static const char* names[] = {"sin", "cos", "exp", "sqrt"};
      out += names[static_cast<int>(n.op) - static_cast<int>(Op::kSin)];
      out += '(';
      print_node(nodes, n.lhs, out);
      out += ')';
      break;
    }
  }
}

}  // namespace

std::string Expression::print() const {
  if (nodes_.empty()) return {};
  std::string out;
  print_node(nodes_, static_cast<int>(nodes_.size()) - 1, out);
  return out;
}

bool Expression::same_structure(const Expression& other) const {
  return nodes_ == other.nodes_;
}

}  // namespace transversal
