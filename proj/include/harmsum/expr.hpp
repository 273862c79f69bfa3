#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// Closed-form expression over pi, ln2, euler_gamma, Gamma(rational),
/// rational literals, + - * / and powers with rational exponents.
/// sqrt(x) is read as x^(1/2).
///
///   Expr::parse("ln2*Gamma(1/4)^2/(4*pi*sqrt(pi))")
class Expr {
 public:
  struct Node;

  /// Throws DomainError on a syntax error, an unknown name, a Gamma argument
  /// or exponent that is not a rational constant.
  static Expr parse(std::string_view text);

  Real eval(const PrecisionContext& ctx) const;
  const std::string& text() const noexcept { return text_; }
  /// Operation names used by the tree: "rational", "pi", "ln2",
  /// "euler_gamma", "gamma", "add", "sub", "mul", "div", "neg", "pow".
  std::set<std::string> operations() const;

 private:
  Expr(std::shared_ptr<const Node> root, std::string text) : root_(std::move(root)), text_(std::move(text)) {}
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// The operation names an expression may use.
const std::set<std::string>& expr_vocabulary();

}  // namespace harmsum
