#include "curvrad/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "curvrad/errors.hpp"

namespace curvrad {

struct Expression::Node {
  enum class Op { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Call } op;
  double value = 0.0;
  int variable = -1;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Function {
  const char* name;
  double (*fn)(double);
};

double fabs_(double x) { return std::fabs(x); }

constexpr Function kFunctions[] = {
    {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
    {"tan", [](double x) { return std::tan(x); }},   {"exp", [](double x) { return std::exp(x); }},
    {"log", [](double x) { return std::log(x); }},   {"sqrt", [](double x) { return std::sqrt(x); }},
    {"abs", fabs_},                                  {"tanh", [](double x) { return std::tanh(x); }},
    {"sinh", [](double x) { return std::sinh(x); }}, {"cosh", [](double x) { return std::cosh(x); }},
    {"atan", [](double x) { return std::atan(x); }},
};

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  NodePtr parse() {
    auto node = expr();
    skip();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Config,
         "expression '" + src_ + "' column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Node::Op op, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  static NodePtr number(double v) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Number;
    n->value = v;
    return n;
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Node::Op::Add, lhs, term());
      else if (accept('-')) lhs = make(Node::Op::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Node::Op::Mul, lhs, unary());
      else if (accept('/')) lhs = make(Node::Op::Div, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = primary();
    if (accept('^')) return make(Node::Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= src_.size()) error("unexpected end of input");
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      auto [end, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
      if (ec != std::errc()) error("bad number");
      pos_ = static_cast<std::size_t>(end - src_.data());
      return number(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string ident = src_.substr(start, pos_ - start);
      for (const auto& f : kFunctions) {
        if (ident == f.name) {
          if (!accept('(')) error("expected '(' after " + ident);
          auto arg = expr();
          if (!accept(')')) error("expected ')'");
          auto n = std::make_shared<Node>();
          n->op = Node::Op::Call;
          n->fn = f.fn;
          n->lhs = arg;
          return n;
        }
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (ident == vars_[i]) {
          auto n = std::make_shared<Node>();
          n->op = Node::Op::Variable;
          n->variable = static_cast<int>(i);
          return n;
        }
      }
      if (ident == "pi") return number(std::numbers::pi);
      if (ident == "e") return number(std::numbers::e);
      pos_ = start;
      error("unknown identifier '" + ident + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

double eval(const Node& n, std::span<const double> v) {
  switch (n.op) {
    case Node::Op::Number: return n.value;
    case Node::Op::Variable: return v[static_cast<std::size_t>(n.variable)];
    case Node::Op::Neg: return -eval(*n.lhs, v);
    case Node::Op::Add: return eval(*n.lhs, v) + eval(*n.rhs, v);
    case Node::Op::Sub: return eval(*n.lhs, v) - eval(*n.rhs, v);
    case Node::Op::Mul: return eval(*n.lhs, v) * eval(*n.rhs, v);
    case Node::Op::Div: return eval(*n.lhs, v) / eval(*n.rhs, v);
    case Node::Op::Pow: return std::pow(eval(*n.lhs, v), eval(*n.rhs, v));
    case Node::Op::Call: return n.fn(eval(*n.lhs, v));
  }
  return 0.0;
}

bool uses_variable(const Node& n) {
  if (n.op == Node::Op::Variable) return true;
  return (n.lhs && uses_variable(*n.lhs)) || (n.rhs && uses_variable(*n.rhs));
}

}  // namespace

Expression::Expression(const std::string& source, std::vector<std::string> variables)
    : source_(source), variables_(std::move(variables)) {
  root_ = Parser(source_, variables_).parse();
}

double Expression::operator()(std::span<const double> values) const {
  if (!root_) fail(ErrorKind::InvalidArgument, "evaluating an empty expression");
  if (values.size() < variables_.size())
    fail(ErrorKind::InvalidArgument, "expression '" + source_ + "' needs " +
                                         std::to_string(variables_.size()) + " values");
  return eval(*root_, values);
}

bool Expression::is_constant() const { return root_ && !uses_variable(*root_); }

}  // namespace curvrad
