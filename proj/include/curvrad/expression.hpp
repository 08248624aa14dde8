#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace curvrad {

// A compiled arithmetic expression over a fixed list of named variables.
//
// Grammar: + - * / ^ (right associative), unary minus, parentheses, numeric
// literals, the constants `pi` and `e`, and the functions
// sin cos tan exp log sqrt abs tanh sinh cosh atan.
// Parse errors throw Error(ErrorKind::Config) with the column of the fault.
class Expression {
 public:
  Expression() = default;
  Expression(const std::string& source, std::vector<std::string> variables);

  double operator()(std::span<const double> values) const;
  double operator()(double value) const { return (*this)(std::span<const double>(&value, 1)); }

  const std::string& source() const { return source_; }
  bool is_constant() const;

  struct Node;

 private:
  std::string source_;
  std::vector<std::string> variables_;
  std::shared_ptr<const Node> root_;
};

}  // namespace curvrad
