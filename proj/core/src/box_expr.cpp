#include "boxnet/box_expr.hpp"

#include <json.hpp>

#include <cctype>
#include <set>

namespace boxnet {

struct BoxExpr::Node {
  BoxKind kind;
  std::string name;
  std::vector<BoxExpr> children;
};

BoxExpr BoxExpr::action(std::string name) {
  return BoxExpr(std::make_shared<const Node>(Node{BoxKind::Action, std::move(name), {}}));
}

BoxExpr BoxExpr::seq(BoxExpr left, BoxExpr right) {
  return BoxExpr(std::make_shared<const Node>(Node{BoxKind::Seq, {}, {std::move(left), std::move(right)}}));
}

BoxExpr BoxExpr::choice(BoxExpr left, BoxExpr right) {
  return BoxExpr(std::make_shared<const Node>(Node{BoxKind::Choice, {}, {std::move(left), std::move(right)}}));
}

BoxExpr BoxExpr::par(BoxExpr left, BoxExpr right) {
  return BoxExpr(std::make_shared<const Node>(Node{BoxKind::Par, {}, {std::move(left), std::move(right)}}));
}

BoxExpr BoxExpr::iter(BoxExpr init, BoxExpr body, BoxExpr exit) {
  return BoxExpr(
      std::make_shared<const Node>(Node{BoxKind::Iter, {}, {std::move(init), std::move(body), std::move(exit)}}));
}

BoxKind BoxExpr::kind() const noexcept { return node_->kind; }
const std::string& BoxExpr::name() const noexcept { return node_->name; }
std::size_t BoxExpr::arity() const noexcept { return node_->children.size(); }

const BoxExpr& BoxExpr::child(std::size_t i) const {
  if (i >= node_->children.size()) throw Error(ErrorKind::InvalidArgument, "child index out of range");
  return node_->children[i];
}

std::vector<std::string> BoxExpr::actions() const {
  std::vector<std::string> out;
  auto rec = [&](auto&& self, const BoxExpr& e) -> void {
    if (e.kind() == BoxKind::Action) {
      out.push_back(e.name());
      return;
    }
    for (const auto& c : e.node_->children) self(self, c);
  };
  rec(rec, *this);
  return out;
}

std::size_t BoxExpr::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

bool operator==(const BoxExpr& l, const BoxExpr& r) {
  if (l.node_ == r.node_) return true;
  if (l.kind() != r.kind() || l.name() != r.name() || l.arity() != r.arity()) return false;
  for (std::size_t i = 0; i < l.arity(); ++i)
    if (!(l.child(i) == r.child(i))) return false;
  return true;
}

std::string_view to_string(BoxKind kind) {
  switch (kind) {
    case BoxKind::Action: return "action";
    case BoxKind::Seq: return "sequence";
    case BoxKind::Choice: return "choice";
    case BoxKind::Par: return "parallel";
    case BoxKind::Iter: return "iteration";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BoxExpr parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    auto e = parse_par();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at(std::string_view token) {
    skip();
    return text_.substr(pos_, token.size()) == token;
  }

  // `[]` is the choice operator; a `[` not directly followed by `]` opens an
  // iteration.
  bool at_choice() { return at("[]"); }

  void expect(std::string_view token) {
    if (!at(token)) {
      if (pos_ == text_.size()) throw ParseError(pos_, "expected '" + std::string(token) + "' at end of input");
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  BoxExpr parse_par() {
    auto e = parse_choice();
    while (at("||")) {
      pos_ += 2;
      e = BoxExpr::par(e, parse_choice());
    }
    return e;
  }

  BoxExpr parse_choice() {
    auto e = parse_seq();
    while (at_choice()) {
      pos_ += 2;
      e = BoxExpr::choice(e, parse_seq());
    }
    return e;
  }

  BoxExpr parse_seq() {
    auto e = parse_primary();
    while (at(";")) {
      pos_ += 1;
      e = BoxExpr::seq(e, parse_primary());
    }
    return e;
  }

  BoxExpr parse_primary() {
    skip();
    if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_par();
      expect(")");
      return e;
    }
    if (c == '[' && !at_choice()) {
      ++pos_;
      auto init = parse_par();
      expect("*");
      auto body = parse_par();
      expect("*");
      auto exit = parse_par();
      expect("]");
      return BoxExpr::iter(init, body, exit);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return BoxExpr::action(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(pos_, "expected an action, '(' or '['");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* child_label(BoxKind kind, std::size_t i) {
  if (kind == BoxKind::Iter) return i == 0 ? "init" : i == 1 ? "body" : "exit";
  return i == 0 ? "left" : "right";
}

// E-derivable when h == false, H-derivable when h == true.
std::optional<SafetyViolation> check_grammar(const BoxExpr& e, bool h, const std::string& path) {
  auto sub = [&](std::size_t i) { return path + (path == "/" ? "" : "/") + child_label(e.kind(), i); };
  switch (e.kind()) {
    case BoxKind::Action:
      return std::nullopt;
    case BoxKind::Par:
      if (h) return SafetyViolation{ErrorKind::GrammarViolation, path, "parallel composition in an iteration body"};
      [[fallthrough]];
    case BoxKind::Seq:
      for (std::size_t i = 0; i < 2; ++i)
        if (auto v = check_grammar(e.child(i), false, sub(i))) return v;
      return std::nullopt;
    case BoxKind::Choice:
      for (std::size_t i = 0; i < 2; ++i)
        if (auto v = check_grammar(e.child(i), h, sub(i))) return v;
      return std::nullopt;
    case BoxKind::Iter:
      for (std::size_t i = 0; i < 3; ++i)
        if (auto v = check_grammar(e.child(i), i == 1, sub(i))) return v;
      return std::nullopt;
  }
  return std::nullopt;
}

int precedence(BoxKind kind) {
  switch (kind) {
    case BoxKind::Par: return 1;
    case BoxKind::Choice: return 2;
    case BoxKind::Seq: return 3;
    default: return 4;
  }
}

void render_into(const BoxExpr& e, std::string& out) {
  auto operand = [&](const BoxExpr& c, bool right) {
    int pc = precedence(c.kind()), pe = precedence(e.kind());
    bool wrap = pc < pe || (right && pc == pe);
    if (wrap) out += '(';
    render_into(c, out);
    if (wrap) out += ')';
  };
  switch (e.kind()) {
    case BoxKind::Action:
      out += e.name();
      return;
    case BoxKind::Iter:
      out += "[ ";
      render_into(e.child(0), out);
      out += " * ";
      render_into(e.child(1), out);
      out += " * ";
      render_into(e.child(2), out);
      out += " ]";
      return;
    case BoxKind::Seq:
      operand(e.left(), false);
      out += ";";
      operand(e.right(), true);
      return;
    case BoxKind::Choice:
      operand(e.left(), false);
      out += " [] ";
      operand(e.right(), true);
      return;
    case BoxKind::Par:
      operand(e.left(), false);
      out += " || ";
      operand(e.right(), true);
      return;
  }
}

}  // namespace

BoxExpr parse_box(std::string_view text) { return Parser(text).parse(); }

std::optional<SafetyViolation> validate_safe(const BoxExpr& expr) {
  std::set<std::string> seen;
  std::optional<SafetyViolation> dup;
  auto rec = [&](auto&& self, const BoxExpr& e, const std::string& path) -> void {
    if (dup) return;
    if (e.kind() == BoxKind::Action) {
      if (!seen.insert(e.name()).second)
        dup = SafetyViolation{ErrorKind::DuplicateAction, path, "action " + e.name() + " occurs more than once"};
      return;
    }
    for (std::size_t i = 0; i < e.arity(); ++i)
      self(self, e.child(i), path + (path == "/" ? "" : "/") + child_label(e.kind(), i));
  };
  rec(rec, expr, "/");
  if (dup) return dup;
  return check_grammar(expr, false, "/");
}

void require_safe(const BoxExpr& expr) {
  if (auto v = validate_safe(expr)) throw Error(v->kind, v->message + " at " + v->path);
}

std::string render(const BoxExpr& expr) {
  std::string out;
  render_into(expr, out);
  return out;
}

std::string render_json(const BoxExpr& expr) {
  auto rec = [](auto&& self, const BoxExpr& e) -> nlohmann::ordered_json {
    static const char* names[] = {"action", "seq", "choice", "par", "iter"};
    nlohmann::ordered_json j;
    j["kind"] = names[static_cast<int>(e.kind())];
    if (e.kind() == BoxKind::Action) {
      j["name"] = e.name();
    } else {
      j["children"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < e.arity(); ++i) j["children"].push_back(self(self, e.child(i)));
    }
    return j;
  };
  return rec(rec, expr).dump(2) + "\n";
}

}  // namespace boxnet
