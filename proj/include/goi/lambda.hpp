#pragma once

// Affine lambda terms: syntax, parsing, printing, capture-avoiding
// substitution and leftmost-outermost normalization (full or top-level).

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goi/detail/lexer.hpp"
#include "goi/error.hpp"

namespace goi {

class LambdaTerm {
 public:
  enum class Kind { var, app, abs };

  static LambdaTerm var(std::string name) {
    return LambdaTerm(std::make_shared<const Node>(Node{Kind::var, std::move(name), {}, {}}));
  }
  static LambdaTerm app(LambdaTerm fun, LambdaTerm arg) {
    return LambdaTerm(
        std::make_shared<const Node>(Node{Kind::app, {}, std::move(fun.node_), std::move(arg.node_)}));
  }
  static LambdaTerm abs(std::string binder, LambdaTerm body) {
    return LambdaTerm(
        std::make_shared<const Node>(Node{Kind::abs, std::move(binder), std::move(body.node_), {}}));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::var; }
  bool is_app() const { return kind() == Kind::app; }
  bool is_abs() const { return kind() == Kind::abs; }

  // Variable name for Var, binder for Abs.
  const std::string& name() const { return node_->name; }
  LambdaTerm fun() const { return LambdaTerm(node_->left); }
  LambdaTerm arg() const { return LambdaTerm(node_->right); }
  LambdaTerm body() const { return LambdaTerm(node_->left); }

  // Syntactic (not alpha) equality.
  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::var: return a.name() == b.name();
      case Kind::app: return a.fun() == b.fun() && a.arg() == b.arg();
      case Kind::abs: return a.name() == b.name() && a.body() == b.body();
    }
    return false;
  }

  LambdaTerm() = default;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit LambdaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Parsing and printing

namespace detail {

inline LambdaTerm parse_lambda_term(TokenStream& ts);

inline std::optional<LambdaTerm> parse_lambda_atom(TokenStream& ts) {
  if (ts.at(TokenKind::ident)) return LambdaTerm::var(ts.take().text);
  if (ts.at(TokenKind::lparen)) {
    ts.take();
    LambdaTerm t = parse_lambda_term(ts);
    ts.expect(TokenKind::rparen);
    return t;
  }
  return std::nullopt;
}

inline LambdaTerm parse_lambda_term(TokenStream& ts) {
  if (ts.at(TokenKind::lambda)) {
    ts.take();
    std::string binder = ts.expect(TokenKind::ident).text;
    ts.expect(TokenKind::dot);
    return LambdaTerm::abs(std::move(binder), parse_lambda_term(ts));
  }
  auto head = parse_lambda_atom(ts);
  if (!head) {
    throw ParseError(ts.peek().position,
                     std::string("expected a term, found ") + describe(ts.peek().kind));
  }
  LambdaTerm t = *head;
  for (;;) {
    if (ts.at(TokenKind::lambda)) {
      // trailing abstraction extends to the right: x \y. y  ==  x (\y. y)
      t = LambdaTerm::app(t, parse_lambda_term(ts));
      break;
    }
    auto next = parse_lambda_atom(ts);
    if (!next) break;
    t = LambdaTerm::app(t, *next);
  }
  return t;
}

}  // namespace detail

inline LambdaTerm parse_lambda(std::string_view src) {
  detail::TokenStream ts(src);
  LambdaTerm t = detail::parse_lambda_term(ts);
  ts.expect_end();
  return t;
}

inline std::string to_string(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return t.name();
    case LambdaTerm::Kind::abs: {
      std::string s = "\\" + t.name() + ".";
      if (!t.body().is_abs()) s += " ";
      return s + to_string(t.body());
    }
    case LambdaTerm::Kind::app: {
      std::string f = to_string(t.fun());
      if (t.fun().is_abs()) f = "(" + f + ")";
      std::string a = to_string(t.arg());
      if (!t.arg().is_var()) a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Variables

inline std::size_t occurrence_count(const std::string& x, const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return m.name() == x ? 1 : 0;
    case LambdaTerm::Kind::app: return occurrence_count(x, m.fun()) + occurrence_count(x, m.arg());
    case LambdaTerm::Kind::abs: return m.name() == x ? 0 : occurrence_count(x, m.body());
  }
  return 0;
}

namespace detail {
inline void collect_free(const LambdaTerm& m, std::vector<std::string>& bound,
                         std::set<std::string>& out) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var:
      for (const auto& b : bound)
        if (b == m.name()) return;
      out.insert(m.name());
      return;
    case LambdaTerm::Kind::app:
      collect_free(m.fun(), bound, out);
      collect_free(m.arg(), bound, out);
      return;
    case LambdaTerm::Kind::abs:
      bound.push_back(m.name());
      collect_free(m.body(), bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline std::set<std::string> free_vars(const LambdaTerm& m) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  detail::collect_free(m, bound, out);
  return out;
}

inline bool is_closed(const LambdaTerm& m) { return free_vars(m).empty(); }

inline bool is_affine(const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return true;
    case LambdaTerm::Kind::app: return is_affine(m.fun()) && is_affine(m.arg());
    case LambdaTerm::Kind::abs:
      return occurrence_count(m.name(), m.body()) <= 1 && is_affine(m.body());
  }
  return false;
}

namespace detail {
inline bool binders_linear(const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return true;
    case LambdaTerm::Kind::app: return binders_linear(m.fun()) && binders_linear(m.arg());
    case LambdaTerm::Kind::abs:
      return occurrence_count(m.name(), m.body()) == 1 && binders_linear(m.body());
  }
  return false;
}
}  // namespace detail

inline bool is_linear(const LambdaTerm& m) {
  if (!detail::binders_linear(m)) return false;
  for (const auto& x : free_vars(m))
    if (occurrence_count(x, m) != 1) return false;
  return true;
}

// Affine and additionally no free variable occurs twice. This is the class of
// terms on which the principal typing rules are defined.
inline bool is_strictly_affine(const LambdaTerm& m) {
  if (!is_affine(m)) return false;
  for (const auto& x : free_vars(m))
    if (occurrence_count(x, m) > 1) return false;
  return true;
}

inline std::size_t node_count(const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return 1;
    case LambdaTerm::Kind::app: return 1 + node_count(m.fun()) + node_count(m.arg());
    case LambdaTerm::Kind::abs: return 1 + node_count(m.body());
  }
  return 0;
}

inline std::size_t depth(const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return 1;
    case LambdaTerm::Kind::app: return 1 + std::max(depth(m.fun()), depth(m.arg()));
    case LambdaTerm::Kind::abs: return 1 + depth(m.body());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Substitution

namespace detail {

// First of x', x'', x''', ... that is not in `avoid`.
inline std::string primed_fresh(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  do {
    candidate += '\'';
  } while (avoid.count(candidate) != 0);
  return candidate;
}

inline LambdaTerm substitute_impl(const LambdaTerm& m, const std::string& x, const LambdaTerm& n,
                                  const std::set<std::string>& fv_n) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var:
      return m.name() == x ? n : m;
    case LambdaTerm::Kind::app:
      return LambdaTerm::app(substitute_impl(m.fun(), x, n, fv_n),
                             substitute_impl(m.arg(), x, n, fv_n));
    case LambdaTerm::Kind::abs: {
      if (m.name() == x || occurrence_count(x, m.body()) == 0) return m;
      if (fv_n.count(m.name()) == 0) {
        return LambdaTerm::abs(m.name(), substitute_impl(m.body(), x, n, fv_n));
      }
      std::set<std::string> avoid = fv_n;
      avoid.merge(free_vars(m.body()));
      avoid.insert(x);
      const std::string fresh = primed_fresh(m.name(), avoid);
      const LambdaTerm renamed =
          substitute_impl(m.body(), m.name(), LambdaTerm::var(fresh), {fresh});
      return LambdaTerm::abs(fresh, substitute_impl(renamed, x, n, fv_n));
    }
  }
  return m;
}

}  // namespace detail

// m[n/x], renaming binders that would capture a free variable of n.
inline LambdaTerm substitute(const LambdaTerm& m, const std::string& x, const LambdaTerm& n) {
  return detail::substitute_impl(m, x, n, free_vars(n));
}

// ---------------------------------------------------------------------------
// Reduction

enum class ReductionMode { full, top_level };

namespace detail {

inline std::optional<LambdaTerm> step_leftmost_outermost(const LambdaTerm& m, ReductionMode mode) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var:
      return std::nullopt;
    case LambdaTerm::Kind::abs: {
      if (mode == ReductionMode::top_level) return std::nullopt;
      auto b = step_leftmost_outermost(m.body(), mode);
      if (!b) return std::nullopt;
      return LambdaTerm::abs(m.name(), *b);
    }
    case LambdaTerm::Kind::app: {
      if (m.fun().is_abs()) return substitute(m.fun().body(), m.fun().name(), m.arg());
      if (auto f = step_leftmost_outermost(m.fun(), mode)) return LambdaTerm::app(*f, m.arg());
      if (auto a = step_leftmost_outermost(m.arg(), mode)) return LambdaTerm::app(m.fun(), *a);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool has_redex(const LambdaTerm& m, ReductionMode mode = ReductionMode::full) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return false;
    case LambdaTerm::Kind::abs: return mode == ReductionMode::full && has_redex(m.body(), mode);
    case LambdaTerm::Kind::app:
      return m.fun().is_abs() || has_redex(m.fun(), mode) || has_redex(m.arg(), mode);
  }
  return false;
}

inline bool is_normal_form(const LambdaTerm& m) { return !has_redex(m, ReductionMode::full); }

// Single leftmost-outermost step, or nullopt when `m` is in normal form for `mode`.
inline std::optional<LambdaTerm> reduce_step(const LambdaTerm& m,
                                             ReductionMode mode = ReductionMode::full) {
  return detail::step_leftmost_outermost(m, mode);
}

// Affine terms are strongly normalizing, so this loop terminates; non-affine
// input is refused instead of step-bounded.
inline LambdaTerm normalize(const LambdaTerm& m, ReductionMode mode = ReductionMode::full) {
  if (!is_affine(m)) throw PreconditionError("normalize: term is not affine: " + to_string(m));
  LambdaTerm t = m;
  while (auto next = detail::step_leftmost_outermost(t, mode)) t = *next;
  return t;
}

// ---------------------------------------------------------------------------
// Alpha equivalence (de Bruijn comparison)

namespace detail {
inline std::optional<std::size_t> bound_index(const std::vector<std::string>& env,
                                              const std::string& x) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == x) return env.size() - 1 - i;
  return std::nullopt;
}

inline bool alpha_eq_impl(const LambdaTerm& a, const LambdaTerm& b, std::vector<std::string>& ea,
                          std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LambdaTerm::Kind::var: {
      auto ia = bound_index(ea, a.name());
      auto ib = bound_index(eb, b.name());
      if (ia || ib) return ia == ib;
      return a.name() == b.name();
    }
    case LambdaTerm::Kind::app:
      return alpha_eq_impl(a.fun(), b.fun(), ea, eb) && alpha_eq_impl(a.arg(), b.arg(), ea, eb);
    case LambdaTerm::Kind::abs: {
      ea.push_back(a.name());
      eb.push_back(b.name());
      const bool r = alpha_eq_impl(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b) {
  std::vector<std::string> ea, eb;
  return detail::alpha_eq_impl(a, b, ea, eb);
}

}  // namespace goi
