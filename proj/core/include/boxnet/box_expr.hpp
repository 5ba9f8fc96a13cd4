#pragma once

#include "boxnet/error.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boxnet {

enum class BoxKind { Action, Seq, Choice, Par, Iter };

/// Immutable box-expression tree; copies share nodes.
class BoxExpr {
 public:
  static BoxExpr action(std::string name);
  static BoxExpr seq(BoxExpr left, BoxExpr right);
  static BoxExpr choice(BoxExpr left, BoxExpr right);
  static BoxExpr par(BoxExpr left, BoxExpr right);
  /// [ init * body * exit ]
  static BoxExpr iter(BoxExpr init, BoxExpr body, BoxExpr exit);

  BoxKind kind() const noexcept;
  /// Action name; empty for operators.
  const std::string& name() const noexcept;
  std::size_t arity() const noexcept;
  const BoxExpr& child(std::size_t i) const;
  const BoxExpr& left() const { return child(0); }
  const BoxExpr& right() const { return child(arity() - 1); }

  /// Action names in left-to-right order, repeats included.
  std::vector<std::string> actions() const;
  std::size_t size() const;

  friend bool operator==(const BoxExpr& l, const BoxExpr& r);

 private:
  struct Node;
  explicit BoxExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest first: `||`, `[]`, `;`, all left-associative; atoms are
/// identifiers [a-zA-Z][a-zA-Z0-9_]*, parenthesised expressions and
/// iterations `[ E * F * G ]`. `#` starts a line comment.
/// Throws ParseError carrying the character offset.
BoxExpr parse_box(std::string_view text);

struct SafetyViolation {
  ErrorKind kind;  ///< DuplicateAction or GrammarViolation
  /// Slash-separated child labels from the root, e.g. "/body/left"; "/" is the root.
  std::string path;
  std::string message;
};

/// Checks uniqueness of actions and derivability from the two-nonterminal
/// grammar in which iteration bodies may not contain a top-level `||`
/// (looking through choices).
std::optional<SafetyViolation> validate_safe(const BoxExpr& expr);

/// Throws Error with the violation's kind.
void require_safe(const BoxExpr& expr);

/// Minimal parentheses; parse_box(render(e)) == e.
std::string render(const BoxExpr& expr);

/// {"kind":"seq","children":[...]} / {"kind":"action","name":"a"}
std::string render_json(const BoxExpr& expr);

std::string_view to_string(BoxKind kind);

}  // namespace boxnet
