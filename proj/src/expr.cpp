#include "berndual/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <variant>

#include "berndual/errors.hpp"

namespace berndual {

namespace {

enum class Func { sin, cos, tan, sec, exp, ln, sqrt, abs };

constexpr std::array<std::pair<std::string_view, Func>, 8> kFunctions{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"sec", Func::sec},
    {"exp", Func::exp},
    {"ln", Func::ln},
    {"sqrt", Func::sqrt},
    {"abs", Func::abs},
}};

std::string_view func_name(Func f) {
  for (const auto& [name, func] : kFunctions) {
    if (func == f) return name;
  }
  return "?";
}

}  // namespace

struct Expr::Node {
  struct Number {
    double value;
  };
  struct X {};
  struct Y {
    int index;
  };
  struct Negate {
    std::shared_ptr<const Node> operand;
  };
  struct Call {
    Func func;
    std::shared_ptr<const Node> arg;
  };
  struct Binary {
    char op;  // + - * / ^
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  std::variant<Number, X, Y, Negate, Call, Binary> data;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

NodePtr make(Node::Number n) { return std::make_shared<const Node>(Node{n}); }
NodePtr make(Node::X n) { return std::make_shared<const Node>(Node{n}); }
NodePtr make(Node::Y n) { return std::make_shared<const Node>(Node{n}); }
NodePtr make(Node::Negate n) { return std::make_shared<const Node>(Node{std::move(n)}); }
NodePtr make(Node::Call n) { return std::make_shared<const Node>(Node{std::move(n)}); }
NodePtr make(Node::Binary n) { return std::make_shared<const Node>(Node{std::move(n)}); }

[[noreturn]] void domain_error(std::string_view what, double input) {
  throw EvaluationError("domain error in " + std::string(what) + " (input " +
                        std::to_string(input) + ")");
}

double apply(Func f, double v) {
  switch (f) {
    case Func::sin: return std::sin(v);
    case Func::cos: return std::cos(v);
    case Func::tan: {
      if (std::cos(v) == 0.0) domain_error("tan", v);
      return std::tan(v);
    }
    case Func::sec: {
      const double c = std::cos(v);
      if (c == 0.0) domain_error("sec", v);
      return 1.0 / c;
    }
    case Func::exp: return std::exp(v);
    case Func::ln:
      if (!(v > 0.0)) domain_error("ln", v);
      return std::log(v);
    case Func::sqrt:
      if (v < 0.0) domain_error("sqrt", v);
      return std::sqrt(v);
    case Func::abs: return std::abs(v);
  }
  return 0.0;
}

double power(double base, double exponent) {
  if (base < 0.0 && std::trunc(exponent) != exponent) {
    throw EvaluationError("domain error in ^ (negative base " + std::to_string(base) +
                          " with non-integer exponent " + std::to_string(exponent) + ")");
  }
  if (base == 0.0 && exponent < 0.0) {
    throw EvaluationError("domain error in ^ (zero to a negative power)");
  }
  return std::pow(base, exponent);
}

double eval_node(const Node& node, double x, std::span<const double> args) {
  return std::visit(
      overloaded{
          [](const Node::Number& n) { return n.value; },
          [x](const Node::X&) { return x; },
          [args](const Node::Y& y) {
            if (static_cast<std::size_t>(y.index) >= args.size()) {
              throw ArgumentError("missing argument y" + std::to_string(y.index));
            }
            return args[y.index];
          },
          [&](const Node::Negate& n) { return -eval_node(*n.operand, x, args); },
          [&](const Node::Call& c) { return apply(c.func, eval_node(*c.arg, x, args)); },
          [&](const Node::Binary& b) {
            const double lhs = eval_node(*b.lhs, x, args);
            const double rhs = eval_node(*b.rhs, x, args);
            switch (b.op) {
              case '+': return lhs + rhs;
              case '-': return lhs - rhs;
              case '*': return lhs * rhs;
              case '/':
                if (rhs == 0.0) throw EvaluationError("division by zero");
                return lhs / rhs;
              default: return power(lhs, rhs);
            }
          },
      },
      node.data);
}

int max_index(const Node& node) {
  return std::visit(
      overloaded{
          [](const Node::Number&) { return -1; },
          [](const Node::X&) { return -1; },
          [](const Node::Y& y) { return y.index; },
          [](const Node::Negate& n) { return max_index(*n.operand); },
          [](const Node::Call& c) { return max_index(*c.arg); },
          [](const Node::Binary& b) { return std::max(max_index(*b.lhs), max_index(*b.rhs)); },
      },
      node.data);
}

void print_node(const Node& node, std::string& out) {
  std::visit(
      overloaded{
          [&](const Node::Number& n) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += buf;
          },
          [&](const Node::X&) { out += 'x'; },
          [&](const Node::Y& y) { out += 'y' + std::to_string(y.index); },
          [&](const Node::Negate& n) {
            out += "(-";
            print_node(*n.operand, out);
            out += ')';
          },
          [&](const Node::Call& c) {
            out += func_name(c.func);
            out += '(';
            print_node(*c.arg, out);
            out += ')';
          },
          [&](const Node::Binary& b) {
            out += '(';
            print_node(*b.lhs, out);
            out += ' ';
            out += b.op;
            out += ' ';
            print_node(*b.rhs, out);
            out += ')';
          },
      },
      node.data);
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      overloaded{
          [&](const Node::Number& n) { return n.value == std::get<Node::Number>(b.data).value; },
          [](const Node::X&) { return true; },
          [&](const Node::Y& y) { return y.index == std::get<Node::Y>(b.data).index; },
          [&](const Node::Negate& n) {
            return equal_nodes(*n.operand, *std::get<Node::Negate>(b.data).operand);
          },
          [&](const Node::Call& c) {
            const auto& o = std::get<Node::Call>(b.data);
            return c.func == o.func && equal_nodes(*c.arg, *o.arg);
          },
          [&](const Node::Binary& n) {
            const auto& o = std::get<Node::Binary>(b.data);
            return n.op == o.op && equal_nodes(*n.lhs, *o.lhs) && equal_nodes(*n.rhs, *o.rhs);
          },
      },
      a.data);
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_space();
    if (pos_ < src_.size()) {
      fail("unexpected '" + std::string(1, src_[pos_]) + "', expected operator or end of input");
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Binary{'+', lhs, term()});
      } else if (accept('-')) {
        lhs = make(Node::Binary{'-', lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Binary{'*', lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Node::Binary{'/', lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Negate{unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Binary{'^', base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input, expected operand");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected '") + c + "', expected operand");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    const std::string text(src_.substr(start, pos_ - start));
    return make(Node::Number{std::strtod(text.c_str(), nullptr)});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Node::X{});
    if (name.size() == 2 && name[0] == 'y' && std::isdigit(static_cast<unsigned char>(name[1]))) {
      return make(Node::Y{name[1] - '0'});
    }
    for (const auto& [fname, func] : kFunctions) {
      if (name == fname) {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(Node::Call{func, arg});
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

double Expr::evaluate(double x, std::span<const double> args) const {
  return eval_node(*root_, x, args);
}

int Expr::max_variable_index() const { return max_index(*root_); }

std::string Expr::print() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(*a.root_, *b.root_); }

Expr parse(std::string_view source) { return Expr(Parser(source).parse_all()); }

}  // namespace berndual
