#include <cmath>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "transversal/expr.hpp"

using testing_support::vec;
using transversal::Expression;
using transversal::ExprError;
using transversal::Op;

namespace {

ExprError::Kind error_kind(const std::string& text, int dims) {
  try {
    Expression::parse(text, dims);
  } catch (const ExprError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ExprError::Kind::kSyntax;
}

TEST(Expr, ParsesDivisionOfCosine) {
  const Expression e = Expression::parse("cos(x1)/4", 1);
  const auto& nodes = e.nodes();
  ASSERT_EQ(nodes.size(), 4u);
  const auto& root = nodes.back();
  EXPECT_EQ(root.op, Op::kDiv);
  EXPECT_EQ(nodes[root.lhs].op, Op::kCos);
  EXPECT_EQ(nodes[nodes[root.lhs].lhs].op, Op::kVariable);
  EXPECT_EQ(nodes[nodes[root.lhs].lhs].index, 0);
  EXPECT_EQ(nodes[root.rhs].op, Op::kLiteral);
  EXPECT_EQ(nodes[root.rhs].literal, 4.0);
}

TEST(Expr, RejectsVariableOutOfScope) {
  EXPECT_EQ(error_kind("x1 + x2*x2", 1), ExprError::Kind::kUnknownIdentifier);
}

TEST(Expr, ErrorKinds) {
  EXPECT_EQ(error_kind("x1 +", 1), ExprError::Kind::kSyntax);
  EXPECT_EQ(error_kind("(x1", 1), ExprError::Kind::kSyntax);
  EXPECT_EQ(error_kind("tan(x1)", 1), ExprError::Kind::kUnknownIdentifier);
  EXPECT_EQ(error_kind("y", 1), ExprError::Kind::kUnknownIdentifier);
  EXPECT_EQ(error_kind("x0", 1), ExprError::Kind::kUnknownIdentifier);
  EXPECT_EQ(error_kind("sin(x1, x1)", 1), ExprError::Kind::kArity);
  EXPECT_EQ(error_kind("x1^x1", 1), ExprError::Kind::kSyntax);
}

TEST(Expr, ErrorPositionPointsAtToken) {
  try {
    Expression::parse("x1 + foo", 1);
    FAIL();
  } catch (const ExprError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Expr, EvaluatesConstants) {
  EXPECT_DOUBLE_EQ(Expression::parse("sin(pi/2)", 1).eval(vec({0.0})), oracle::kSinHalfPi);
  EXPECT_DOUBLE_EQ(Expression::parse("-2^2", 1).eval(vec({0.0})), -4.0);
  EXPECT_DOUBLE_EQ(Expression::parse("2^-2", 1).eval(vec({0.0})), 0.25);
  EXPECT_DOUBLE_EQ(Expression::parse("8 - 2 - 1", 1).eval(vec({0.0})), 5.0);
  EXPECT_DOUBLE_EQ(Expression::parse("8 / 2 / 2", 1).eval(vec({0.0})), 2.0);
  EXPECT_DOUBLE_EQ(Expression::parse("1.5e1", 1).eval(vec({0.0})), 15.0);
}

TEST(Expr, DualSine) {
  const auto r = Expression::parse("sin(x1)", 1).eval_dual(vec({0.0}));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.partials[0], 1.0);
}

TEST(Expr, DualPolynomial) {
  const auto r = Expression::parse("x1^2 * x2", 2).eval_dual(vec({3.0, 5.0}));
  EXPECT_DOUBLE_EQ(r.value, oracle::kPolyValue);
  EXPECT_DOUBLE_EQ(r.partials[0], oracle::kPolyD1);
  EXPECT_DOUBLE_EQ(r.partials[1], oracle::kPolyD2);
}

TEST(Expr, DomainErrors) {
  const auto kind_at = [](const std::string& text, double x) {
    try {
      Expression::parse(text, 1).eval_dual(vec({x}));
    } catch (const ExprError& e) {
      return e.kind();
    }
    return ExprError::Kind::kSyntax;
  };
  EXPECT_EQ(kind_at("1/x1", 0.0), ExprError::Kind::kDomain);
  EXPECT_EQ(kind_at("sqrt(x1)", -1.0), ExprError::Kind::kDomain);
  EXPECT_EQ(kind_at("sqrt(x1)", 0.0), ExprError::Kind::kDomain);
  EXPECT_EQ(kind_at("exp(x1)", 1000.0), ExprError::Kind::kDomain);
}

TEST(Expr, PartialsMatchCentralDifferences) {
  const std::vector<std::string> texts = {
      "sin(x1)*cos(x2) + exp(x1/3)",      "sqrt(1 + x1^2 + x2^2)",
      "x1/sqrt(1 + x1^2 + x2^2)",        "(x1 - x2)^3 - 2*x1*x2 + pi",
      "exp(-x1^2) * sin(3*x2) / (2 + cos(x1))", "x1^-2 + x2^4"};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  for (const auto& text : texts) {
    const Expression e = Expression::parse(text, 2);
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd x = vec({u(rng), u(rng)});
      const auto r = e.eval_dual(x);
      for (int j = 0; j < 2; ++j) {
        const double h = 1e-5;
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const double fd = (e.eval(xp) - e.eval(xm)) / (2 * h);
        EXPECT_LE(std::abs(r.partials[j] - fd), 1e-6 * std::max(1.0, std::abs(fd))) << text;
      }
    }
  }
}

TEST(Expr, EvalMatchesDualValue) {
  const Expression e = Expression::parse("x1*exp(x2) - cos(x1*x2)", 2);
  const Eigen::VectorXd x = vec({0.3, -0.7});
  EXPECT_EQ(e.eval(x), e.eval_dual(x).value);
}

TEST(Expr, PrintRoundTrips) {
  const std::vector<std::string> texts = {
      "cos(x1)/4",         "x1 - (x2 - 1)",  "-(x1 + x2)*3", "x1/(x2*x3)",  "2^-3 + x1^2^2",
      "-x1^2",             "(-x1)^2",        "0.1 + 1e-300", "sqrt(exp(-x1))", "x1 - -x2",
      "1/3*x1 + pi*x3",   "(x1 + x2)^5",    "x1*(x2/x3)",   "sin(x1)*-1"};
  for (const auto& text : texts) {
    const Expression e = Expression::parse(text, 3);
    const Expression again = Expression::parse(e.print(), 3);
    EXPECT_TRUE(e.same_structure(again)) << text << " -> " << e.print();
    EXPECT_EQ(again.print(), e.print());
  }
}

TEST(Expr, PrintRoundTripsRandomTrees) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> leaves = {"x1", "x2", "pi", "0.5", "3", "1e-7", "2.718281828459045"};
  const std::vector<std::string> binary = {" + ", " - ", "*", "/"};
  const std::vector<std::string> unary = {"sin", "cos", "exp", "sqrt", "-"};
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    const int pick = depth == 0 ? 0 : static_cast<int>(rng() % 4);
    if (pick == 0) return leaves[rng() % leaves.size()];
    if (pick == 1) {
      const auto& f = unary[rng() % unary.size()];
      return f == "-" ? "-(" + gen(depth - 1) + ")" : f + "(" + gen(depth - 1) + ")";
    }
    if (pick == 2) return "(" + gen(depth - 1) + ")^" + std::to_string(static_cast<int>(rng() % 5) - 2);
    return "(" + gen(depth - 1) + binary[rng() % binary.size()] + gen(depth - 1) + ")";
  };
  for (int s = 0; s < 500; ++s) {
    const std::string text = gen(4);
    const Expression e = Expression::parse(text, 2);
    const Expression again = Expression::parse(e.print(), 2);
    EXPECT_TRUE(e.same_structure(again)) << text << " -> " << e.print();
  }
}

TEST(Expr, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 1000; ++s) {
    const double v = std::ldexp(static_cast<double>(rng() >> 11), static_cast<int>(rng() % 200) - 150);
    EXPECT_EQ(std::stod(transversal::format_double(v)), v);
  }
}

TEST(Expr, MaxVariable) {
  EXPECT_EQ(Expression::parse("3 + pi", 2).max_variable(), 0);
  EXPECT_EQ(Expression::parse("x2 * x1", 2).max_variable(), 2);
}

}  // namespace
