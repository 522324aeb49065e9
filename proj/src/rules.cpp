#include "coto/rules.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "coto/errors.hpp"

namespace coto {
namespace {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { literal, var_p, var_a, add, sub, mul, div, pow };
  Kind kind = Kind::literal;
  u64 value = 0;
  ExprPtr lhs;
  ExprPtr rhs;
};

u64 eval(const Expr& e, u64 p, u64 a) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.value;
    case Expr::Kind::var_p:
      return p;
    case Expr::Kind::var_a:
      return a;
    default:
      break;
  }
  const u64 x = eval(*e.lhs, p, a);
  const u64 y = eval(*e.rhs, p, a);
  switch (e.kind) {
    case Expr::Kind::add:
      return checked_add(x, y);
    case Expr::Kind::sub:
      if (y > x) throw ArithmeticError("rule: negative intermediate " + std::to_string(x) + " - " + std::to_string(y));
      return x - y;
    case Expr::Kind::mul:
      return checked_mul(x, y);
    case Expr::Kind::div:
      if (y == 0 || x % y != 0) {
        throw ArithmeticError("rule: inexact division " + std::to_string(x) + " / " + std::to_string(y));
      }
      return x / y;
    case Expr::Kind::pow:
      return checked_pow(x, y);
    default:
      throw std::logic_error("rule: bad node");
  }
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("rule table line " + std::to_string(line_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (accept('+')) {
        e = node(Expr::Kind::add, e, product());
      } else if (accept('-')) {
        e = node(Expr::Kind::sub, e, product());
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    ExprPtr e = power();
    for (;;) {
      if (accept('*')) {
        e = node(Expr::Kind::mul, e, power());
      } else if (accept('/')) {
        e = node(Expr::Kind::div, e, power());
      } else {
        return e;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (accept('^')) return node(Expr::Kind::pow, base, power());
    return base;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ == src_.size()) fail("expression ends early");
    const char ch = src_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) fail("missing ')'");
      return e;
    }
    auto e = std::make_shared<Expr>();
    if (ch == 'p' || ch == 'a') {
      ++pos_;
      e->kind = ch == 'p' ? Expr::Kind::var_p : Expr::Kind::var_a;
      return e;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail("unexpected '" + std::string(1, ch) + "'");
    u64 v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, u64(src_[pos_] - '0'), &v)) {
        fail("integer literal too large");
      }
      ++pos_;
    }
    e->value = v;
    return e;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MultiplicativeFunctionSpec parse_rule_table(std::string_view text) {
  std::string name;
  ExprPtr fallback;
  std::map<u64, ExprPtr> overrides;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto bad = [&](const std::string& what) {
      return PreconditionError("rule table line " + std::to_string(line_no) + ": " + what);
    };
    if (line.substr(0, 5) == "name " || line == "name") {
      name = std::string(trim(line.substr(4)));
      if (name.empty()) throw bad("empty name");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw bad("expected '<selector> = <expression>'");
    const std::string_view selector = trim(line.substr(0, eq));
    ExprPtr expr = Parser(line.substr(eq + 1), line_no).parse();
    if (selector == "*") {
      if (fallback) throw bad("duplicate '*' rule");
      fallback = std::move(expr);
      continue;
    }
    u64 prime = 0;
    for (char ch : selector) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad("selector must be '*' or a prime");
      if (__builtin_mul_overflow(prime, 10, &prime) || __builtin_add_overflow(prime, u64(ch - '0'), &prime)) {
        throw bad("selector too large");
      }
    }
    if (selector.empty() || !is_prime(prime)) throw bad("selector must be '*' or a prime");
    if (!overrides.emplace(prime, std::move(expr)).second) throw bad("duplicate rule for p = " + std::to_string(prime));
  }

  if (name.empty()) throw PreconditionError("rule table: missing 'name' line");
  if (!fallback) throw PreconditionError("rule table: missing '*' rule");

  auto rule = [fallback, overrides, name](u64 p, std::uint32_t a) -> u64 {
    const auto it = overrides.find(p);
    const u64 v = eval(it != overrides.end() ? *it->second : *fallback, p, a);
    if (v == 0) {
      throw ArithmeticError("rule " + name + " is 0 at p = " + std::to_string(p) + ", a = " + std::to_string(a));
    }
    return v;
  };
  return {name, rule};
}

MultiplicativeFunctionSpec load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open rule file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rule_table(ss.str());
}

MultiplicativeFunctionSpec resolve_function(const std::string& name_or_file) {
  constexpr std::string_view prefix = "file:";
  if (name_or_file.starts_with(prefix)) return load_rule_file(name_or_file.substr(prefix.size()));
  return builtin_function(name_or_file);
}

}  // namespace coto
