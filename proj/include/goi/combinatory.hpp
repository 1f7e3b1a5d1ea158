#pragma once

// Affine combinatory logic over B, C, I, K: terms, weak head reduction,
// bracket abstraction and the two translations to and from lambda terms.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goi/detail/lexer.hpp"
#include "goi/error.hpp"
#include "goi/lambda.hpp"

namespace goi {

enum class Combinator { B, C, I, K };

inline char letter(Combinator k) {
  switch (k) {
    case Combinator::B: return 'B';
    case Combinator::C: return 'C';
    case Combinator::I: return 'I';
    case Combinator::K: return 'K';
  }
  return '?';
}

inline std::optional<Combinator> combinator_from(std::string_view s) {
  if (s == "B") return Combinator::B;
  if (s == "C") return Combinator::C;
  if (s == "I") return Combinator::I;
  if (s == "K") return Combinator::K;
  return std::nullopt;
}

class CLTerm {
 public:
  enum class Kind { var, comb, app };

  static CLTerm var(std::string name) {
    return CLTerm(std::make_shared<const Node>(Node{Kind::var, Combinator::I, std::move(name), {}, {}}));
  }
  static CLTerm comb(Combinator k) {
    return CLTerm(std::make_shared<const Node>(Node{Kind::comb, k, {}, {}, {}}));
  }
  static CLTerm app(CLTerm fun, CLTerm arg) {
    return CLTerm(std::make_shared<const Node>(
        Node{Kind::app, Combinator::I, {}, std::move(fun.node_), std::move(arg.node_)}));
  }
  static CLTerm B() { return comb(Combinator::B); }
  static CLTerm C() { return comb(Combinator::C); }
  static CLTerm I() { return comb(Combinator::I); }
  static CLTerm K() { return comb(Combinator::K); }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::var; }
  bool is_comb() const { return kind() == Kind::comb; }
  bool is_app() const { return kind() == Kind::app; }

  const std::string& name() const { return node_->name; }
  Combinator combinator() const { return node_->comb; }
  CLTerm fun() const { return CLTerm(node_->left); }
  CLTerm arg() const { return CLTerm(node_->right); }

  friend bool operator==(const CLTerm& a, const CLTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::var: return a.name() == b.name();
      case Kind::comb: return a.combinator() == b.combinator();
      case Kind::app: return a.fun() == b.fun() && a.arg() == b.arg();
    }
    return false;
  }

  CLTerm() = default;

 private:
  struct Node {
    Kind kind;
    Combinator comb;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit CLTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Left-associated application of a head to a list of arguments.
inline CLTerm apply_all(CLTerm head, const std::vector<CLTerm>& args) {
  for (const auto& a : args) head = CLTerm::app(std::move(head), a);
  return head;
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace detail {

inline CLTerm parse_cl_app(TokenStream& ts);

inline std::optional<CLTerm> parse_cl_atom(TokenStream& ts) {
  if (ts.at(TokenKind::ident)) {
    Token t = ts.take();
    if (auto k = combinator_from(t.text)) return CLTerm::comb(*k);
    return CLTerm::var(t.text);
  }
  if (ts.at(TokenKind::lparen)) {
    ts.take();
    CLTerm t = parse_cl_app(ts);
    ts.expect(TokenKind::rparen);
    return t;
  }
  return std::nullopt;
}

inline CLTerm parse_cl_app(TokenStream& ts) {
  auto head = parse_cl_atom(ts);
  if (!head) {
    throw ParseError(ts.peek().position,
                     std::string("expected a combinatory term, found ") + describe(ts.peek().kind));
  }
  CLTerm t = *head;
  while (auto next = parse_cl_atom(ts)) t = CLTerm::app(t, *next);
  return t;
}

}  // namespace detail

inline CLTerm parse_cl(std::string_view src) {
  detail::TokenStream ts(src);
  CLTerm t = detail::parse_cl_app(ts);
  ts.expect_end();
  return t;
}

inline std::string to_string(const CLTerm& t) {
  switch (t.kind()) {
    case CLTerm::Kind::var: return t.name();
    case CLTerm::Kind::comb: return std::string(1, letter(t.combinator()));
    case CLTerm::Kind::app: {
      std::string a = to_string(t.arg());
      if (t.arg().is_app()) a = "(" + a + ")";
      return to_string(t.fun()) + " " + a;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Variables

inline std::size_t occurrence_count(const std::string& x, const CLTerm& m) {
  switch (m.kind()) {
    case CLTerm::Kind::var: return m.name() == x ? 1 : 0;
    case CLTerm::Kind::comb: return 0;
    case CLTerm::Kind::app: return occurrence_count(x, m.fun()) + occurrence_count(x, m.arg());
  }
  return 0;
}

inline void collect_vars(const CLTerm& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case CLTerm::Kind::var: out.insert(m.name()); return;
    case CLTerm::Kind::comb: return;
    case CLTerm::Kind::app:
      collect_vars(m.fun(), out);
      collect_vars(m.arg(), out);
      return;
  }
}

inline std::set<std::string> free_vars(const CLTerm& m) {
  std::set<std::string> out;
  collect_vars(m, out);
  return out;
}

inline bool is_closed(const CLTerm& m) { return free_vars(m).empty(); }

inline std::size_t node_count(const CLTerm& m) {
  return m.is_app() ? 1 + node_count(m.fun()) + node_count(m.arg()) : 1;
}

// Plain replacement: CL has no binders.
inline CLTerm substitute(const CLTerm& m, const std::string& x, const CLTerm& n) {
  switch (m.kind()) {
    case CLTerm::Kind::var: return m.name() == x ? n : m;
    case CLTerm::Kind::comb: return m;
    case CLTerm::Kind::app:
      return CLTerm::app(substitute(m.fun(), x, n), substitute(m.arg(), x, n));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Bracket abstraction

// lambda* x. m for the affine fragment. Combinator atoms are treated like
// variables other than x (abstracted with K).
inline CLTerm abstract(const std::string& x, const CLTerm& m) {
  if (occurrence_count(x, m) > 1) {
    throw PreconditionError("abstract: " + x + " occurs more than once in " + to_string(m));
  }
  switch (m.kind()) {
    case CLTerm::Kind::var:
      if (m.name() == x) return CLTerm::I();
      return CLTerm::app(CLTerm::K(), m);
    case CLTerm::Kind::comb:
      return CLTerm::app(CLTerm::K(), m);
    case CLTerm::Kind::app:
      if (occurrence_count(x, m.fun()) > 0)
        return apply_all(CLTerm::C(), {abstract(x, m.fun()), m.arg()});
      if (occurrence_count(x, m.arg()) > 0)
        return apply_all(CLTerm::B(), {m.fun(), abstract(x, m.arg())});
      return CLTerm::app(CLTerm::K(), m);
  }
  return m;
}

namespace detail {
inline CLTerm to_cl_impl(const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return CLTerm::var(m.name());
    case LambdaTerm::Kind::app: return CLTerm::app(to_cl_impl(m.fun()), to_cl_impl(m.arg()));
    case LambdaTerm::Kind::abs: return abstract(m.name(), to_cl_impl(m.body()));
  }
  return {};
}
}  // namespace detail

// Innermost abstractions are translated first.
inline CLTerm to_cl(const LambdaTerm& m) {
  if (!is_affine(m)) throw PreconditionError("to_cl: term is not affine: " + to_string(m));
  return detail::to_cl_impl(m);
}

inline LambdaTerm combinator_lambda(Combinator k) {
  switch (k) {
    case Combinator::B: return parse_lambda("\\x.\\y.\\z. x (y z)");
    case Combinator::C: return parse_lambda("\\x.\\y.\\z. x z y");
    case Combinator::I: return parse_lambda("\\x. x");
    case Combinator::K: return parse_lambda("\\x.\\y. x");
  }
  return {};
}

inline LambdaTerm to_lambda(const CLTerm& m) {
  switch (m.kind()) {
    case CLTerm::Kind::var: return LambdaTerm::var(m.name());
    case CLTerm::Kind::comb: return combinator_lambda(m.combinator());
    case CLTerm::Kind::app: return LambdaTerm::app(to_lambda(m.fun()), to_lambda(m.arg()));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Reduction

namespace detail {

inline void unwind(const CLTerm& m, CLTerm& head, std::vector<CLTerm>& args) {
  CLTerm t = m;
  std::vector<CLTerm> rev;
  while (t.is_app()) {
    rev.push_back(t.arg());
    t = t.fun();
  }
  head = t;
  args.assign(rev.rbegin(), rev.rend());
}

inline std::size_t arity(Combinator k) {
  switch (k) {
    case Combinator::B:
    case Combinator::C: return 3;
    case Combinator::K: return 2;
    case Combinator::I: return 1;
  }
  return 0;
}

// Contracts the head redex of head·args if there is one.
inline std::optional<CLTerm> contract_head(const CLTerm& head, const std::vector<CLTerm>& args) {
  if (!head.is_comb() || args.size() < arity(head.combinator())) return std::nullopt;
  const std::size_t n = arity(head.combinator());
  CLTerm r;
  switch (head.combinator()) {
    case Combinator::B: r = CLTerm::app(args[0], CLTerm::app(args[1], args[2])); break;
    case Combinator::C: r = CLTerm::app(CLTerm::app(args[0], args[2]), args[1]); break;
    case Combinator::I: r = args[0]; break;
    case Combinator::K: r = args[0]; break;
  }
  return apply_all(r, std::vector<CLTerm>(args.begin() + static_cast<std::ptrdiff_t>(n), args.end()));
}

}  // namespace detail

// Leftmost-outermost weak reduction to normal form. Every rule strictly
// shrinks the term, so this terminates on all inputs.
inline CLTerm cl_normalize(const CLTerm& m) {
  CLTerm head;
  std::vector<CLTerm> args;
  detail::unwind(m, head, args);
  while (auto r = detail::contract_head(head, args)) detail::unwind(*r, head, args);
  for (auto& a : args) a = cl_normalize(a);
  return apply_all(head, args);
}

}  // namespace goi
