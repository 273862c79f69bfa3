#include "harmsum/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/special.hpp"

namespace harmsum {

struct Expr::Node {
  enum class Op { rational, pi, ln2, euler_gamma, gamma, add, sub, mul, div, neg, pow };
  Op op;
  Rational value;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using Node = Expr::Node;
using Op = Node::Op;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf(Op op, Rational v = Rational(0)) { return std::make_shared<Node>(Node{op, std::move(v), {}}); }

NodePtr branch(Op op, std::vector<NodePtr> kids, Rational v = Rational(0)) {
  return std::make_shared<Node>(Node{op, std::move(v), std::move(kids)});
}

std::optional<Rational> fold(const Node& n) {
  switch (n.op) {
    case Op::rational:
      return n.value;
    case Op::neg: {
      auto a = fold(*n.kids[0]);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: {
      auto a = fold(*n.kids[0]);
      auto b = fold(*n.kids[1]);
      if (!a || !b) return std::nullopt;
      if (n.op == Op::add) return *a + *b;
      if (n.op == Op::sub) return *a - *b;
      if (n.op == Op::mul) return *a * *b;
      if (b->is_zero()) throw DomainError("division by zero in expression");
      return *a / *b;
    }
    case Op::pow: {
      auto a = fold(*n.kids[0]);
      if (!a || !n.value.is_integer()) return std::nullopt;
      return pow(*a, n.value.numerator().get_si());
    }
    default:
      return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(s_) + "': " + what + " at offset " + std::to_string(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (eat('+')) n = branch(Op::add, {n, term()});
      else if (eat('-')) n = branch(Op::sub, {n, term()});
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (eat('*')) n = branch(Op::mul, {n, unary()});
      else if (eat('/')) {
        NodePtr d = unary();
        auto v = fold(*d);
        if (v && v->is_zero()) fail("division by zero");
        n = branch(Op::div, {n, d});
      }
      else return n;
    }
  }

  NodePtr unary() {
    if (eat('-')) return branch(Op::neg, {unary()});
    return power();
  }

  Rational constant(const NodePtr& n, const char* what) {
    auto v = fold(*n);
    if (!v) fail(std::string(what) + " must be a rational constant");
    return *v;
  }

  NodePtr power() {
    NodePtr base = primary();
    if (eat('^')) {
      NodePtr e = unary();
      return branch(Op::pow, {base}, constant(e, "exponent"));
    }
    return base;
  }

  NodePtr primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      NodePtr n = expr();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      NodePtr n = leaf(Op::rational, Rational(Integer(std::string(s_.substr(i_, j - i_)))));
      i_ = j;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      const std::string name(s_.substr(i_, j - i_));
      i_ = j;
      if (name == "pi") return leaf(Op::pi);
      if (name == "ln2") return leaf(Op::ln2);
      if (name == "euler_gamma") return leaf(Op::euler_gamma);
      if (name == "Gamma" || name == "sqrt") {
        if (!eat('(')) fail("missing '(' after " + name);
        NodePtr arg = expr();
        if (!eat(')')) fail("missing ')'");
        if (name == "sqrt") return branch(Op::pow, {arg}, Rational(1, 2));
        const Rational x = constant(arg, "Gamma argument");
        if (x.is_nonpositive_integer()) fail("Gamma pole");
        return leaf(Op::gamma, x);
      }
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Real eval_node(const Node& n, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  switch (n.op) {
    case Op::rational:
      return Real(n.value, bits);
    case Op::pi:
      return pi(bits);
    case Op::ln2:
      return ln2(bits);
    case Op::euler_gamma:
      return euler_gamma(bits);
    case Op::gamma:
      return gamma(n.value, ctx);
    case Op::neg:
      return -eval_node(*n.kids[0], ctx);
    case Op::add:
      return eval_node(*n.kids[0], ctx) + eval_node(*n.kids[1], ctx);
    case Op::sub:
      return eval_node(*n.kids[0], ctx) - eval_node(*n.kids[1], ctx);
    case Op::mul:
      return eval_node(*n.kids[0], ctx) * eval_node(*n.kids[1], ctx);
    case Op::div: {
      Real d = eval_node(*n.kids[1], ctx);
      if (d.is_zero()) throw DomainError("division by zero in expression");
      return eval_node(*n.kids[0], ctx) / d;
    }
    case Op::pow: {
      Real b = eval_node(*n.kids[0], ctx);
      if (n.value.is_integer()) return pow(b, n.value.numerator().get_si());
      if (b.sign() < 0) throw DomainError("fractional power of a negative value");
      return pow(b, n.value);
    }
  }
  throw DomainError("unknown expression node");
}

const char* op_name(Op op) {
  switch (op) {
    case Op::rational: return "rational";
    case Op::pi: return "pi";
    case Op::ln2: return "ln2";
    case Op::euler_gamma: return "euler_gamma";
    case Op::gamma: return "gamma";
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::neg: return "neg";
    case Op::pow: return "pow";
  }
  return "?";
}

void collect(const Node& n, std::set<std::string>& out) {
  out.insert(op_name(n.op));
  for (const auto& k : n.kids) collect(*k, out);
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Parser p(text);
  return Expr(p.parse_all(), std::string(text));
}

Real Expr::eval(const PrecisionContext& ctx) const {
  const auto work = ctx.elevated(16);
  return eval_node(*root_, work).rounded(ctx.bits());
}

std::set<std::string> Expr::operations() const {
  std::set<std::string> out;
  collect(*root_, out);
  return out;
}

const std::set<std::string>& expr_vocabulary() {
  static const std::set<std::string> v = {"rational", "pi", "ln2", "euler_gamma", "gamma", "add",
                                          "sub",      "mul", "div", "neg",         "pow"};
  return v;
}

}  // namespace harmsum
