#pragma once

// Linear implicational types, occurrence paths, and the conversions between a
// type and its set of leaf occurrences.

#include <compare>
#include <map>
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

class Type {
 public:
  static Type var(std::string name) {
    return Type(std::make_shared<const Node>(Node{std::move(name), {}, {}}));
  }
  static Type arrow(Type from, Type to) {
    return Type(std::make_shared<const Node>(Node{{}, std::move(from.node_), std::move(to.node_)}));
  }

  bool is_var() const { return !node_->left; }
  bool is_arrow() const { return !is_var(); }
  const std::string& name() const { return node_->name; }
  Type left() const { return Type(node_->left); }
  Type right() const { return Type(node_->right); }

  // Structural order: variables before arrows, then by name / componentwise.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_var() != b.is_var())
      return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_var()) return a.name() <=> b.name();
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
  }
  friend bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

  Type() = default;

 private:
  struct Node {
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Type arrow(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }

// A word over {l, r} addressing a node of a type tree from the root.
class Path {
 public:
  Path() = default;
  explicit Path(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_)
      if (c != 'l' && c != 'r') throw PreconditionError("path letters must be 'l' or 'r'");
  }

  // "e" denotes the empty path.
  static Path parse(std::string_view s) { return s == "e" ? Path() : Path(std::string(s)); }

  const std::string& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  char front() const { return steps_.front(); }

  Path operator+(const Path& o) const { return Path(Raw{}, steps_ + o.steps_); }
  Path prepend(char c) const { return Path(Raw{}, std::string(1, c) + steps_); }
  Path tail() const { return Path(Raw{}, steps_.substr(1)); }

  bool is_prefix_of(const Path& o) const { return o.steps_.compare(0, steps_.size(), steps_) == 0 && steps_.size() <= o.steps_.size(); }
  bool is_proper_prefix_of(const Path& o) const { return size() < o.size() && is_prefix_of(o); }
  bool comparable(const Path& o) const { return is_prefix_of(o) || o.is_prefix_of(*this); }

  // o with this path removed from the front; requires is_prefix_of(o).
  Path suffix_of(const Path& o) const { return Path(Raw{}, o.steps_.substr(steps_.size())); }

  std::string str() const { return steps_.empty() ? "e" : steps_; }

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

 private:
  struct Raw {};
  Path(Raw, std::string steps) : steps_(std::move(steps)) {}
  std::string steps_;
};

struct Occurrence {
  Path path;
  std::string var;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

inline std::string to_string(const Occurrence& o) { return o.path.str() + "[" + o.var + "]"; }

// Deterministic supply of fresh type variables prefix0, prefix1, ...; names in
// `avoid` are skipped.
class FreshSupply {
 public:
  explicit FreshSupply(std::string prefix = "z", std::set<std::string> avoid = {})
      : prefix_(std::move(prefix)), avoid_(std::move(avoid)) {}

  std::string next() {
    for (;;) {
      std::string name = prefix_ + std::to_string(counter_++);
      if (avoid_.count(name) == 0) return name;
    }
  }
  Type fresh() { return Type::var(next()); }

  void avoid(const std::string& name) { avoid_.insert(name); }
  bool issued(const std::string& name) const {
    if (name.compare(0, prefix_.size(), prefix_) != 0 || name.size() == prefix_.size()) return false;
    for (std::size_t i = prefix_.size(); i < name.size(); ++i)
      if (name[i] < '0' || name[i] > '9') return false;
    return std::stoull(name.substr(prefix_.size())) < counter_;
  }

 private:
  std::string prefix_;
  std::set<std::string> avoid_;
  std::size_t counter_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing and printing

namespace detail {
inline Type parse_type_expr(TokenStream& ts) {
  Type lhs;
  if (ts.at(TokenKind::ident)) {
    lhs = Type::var(ts.take().text);
  } else if (ts.at(TokenKind::lparen)) {
    ts.take();
    lhs = parse_type_expr(ts);
    ts.expect(TokenKind::rparen);
  } else {
    throw ParseError(ts.peek().position,
                     std::string("expected a type, found ") + describe(ts.peek().kind));
  }
  if (ts.at(TokenKind::arrow)) {
    ts.take();
    return Type::arrow(lhs, parse_type_expr(ts));
  }
  return lhs;
}
}  // namespace detail

// Arrows associate to the right: a -> b -> c is a -> (b -> c).
inline Type parse_type(std::string_view src) {
  detail::TokenStream ts(src);
  Type t = detail::parse_type_expr(ts);
  ts.expect_end();
  return t;
}

inline std::string to_string(const Type& t) {
  if (t.is_var()) return t.name();
  std::string l = to_string(t.left());
  if (t.left().is_arrow()) l = "(" + l + ")";
  return l + " -> " + to_string(t.right());
}

// ---------------------------------------------------------------------------
// Variables

inline void count_vars(const Type& t, std::map<std::string, int>& counts) {
  if (t.is_var()) {
    ++counts[t.name()];
    return;
  }
  count_vars(t.left(), counts);
  count_vars(t.right(), counts);
}

inline std::map<std::string, int> var_counts(const Type& t) {
  std::map<std::string, int> c;
  count_vars(t, c);
  return c;
}

inline void collect_vars(const Type& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  collect_vars(t.left(), out);
  collect_vars(t.right(), out);
}

inline std::set<std::string> vars_of(const Type& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

inline bool occurs_in(const std::string& v, const Type& t) {
  if (t.is_var()) return t.name() == v;
  return occurs_in(v, t.left()) || occurs_in(v, t.right());
}

// Every variable occurs at most twice.
inline bool is_binary(const Type& t) {
  for (const auto& [v, n] : var_counts(t))
    if (n > 2) return false;
  return true;
}

// Every variable occurs exactly twice.
inline bool is_strictly_binary(const Type& t) {
  for (const auto& [v, n] : var_counts(t))
    if (n != 2) return false;
  return true;
}

inline std::size_t arrow_count(const Type& t) {
  return t.is_var() ? 0 : 1 + arrow_count(t.left()) + arrow_count(t.right());
}

inline std::size_t type_depth(const Type& t) {
  return t.is_var() ? 0 : 1 + std::max(type_depth(t.left()), type_depth(t.right()));
}

// ---------------------------------------------------------------------------
// Occurrences

namespace detail {
inline void collect_occurrences(const Type& t, std::string& path, std::set<Occurrence>& out) {
  if (t.is_var()) {
    out.insert({Path(path), t.name()});
    return;
  }
  path.push_back('l');
  collect_occurrences(t.left(), path, out);
  path.back() = 'r';
  collect_occurrences(t.right(), path, out);
  path.pop_back();
}
}  // namespace detail

// One occurrence per leaf.
inline std::set<Occurrence> occurrences(const Type& t) {
  std::set<Occurrence> out;
  std::string path;
  detail::collect_occurrences(t, path, out);
  return out;
}

// Subtree at `p`, if `p` addresses a node of `t`.
inline std::optional<Type> subtree_at(const Type& t, const Path& p) {
  Type cur = t;
  for (char c : p.steps()) {
    if (cur.is_var()) return std::nullopt;
    cur = c == 'l' ? cur.left() : cur.right();
  }
  return cur;
}

// Checks that no occurrence path is a prefix of a different occurrence's path.
inline void require_prefix_free(const std::set<Occurrence>& s) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    for (auto jt = std::next(it); jt != s.end(); ++jt) {
      if (it->path.comparable(jt->path)) {
        throw PreconditionError("occurrences " + to_string(*it) + " and " + to_string(*jt) +
                                " are not prefix-free");
      }
    }
  }
}

namespace detail {
inline Type build_from_occurrences(const std::vector<Occurrence>& s, FreshSupply& z) {
  if (s.empty()) return z.fresh();
  if (s.size() == 1 && s.front().path.empty()) return Type::var(s.front().var);
  std::vector<Occurrence> left, right;
  for (const auto& o : s) {
    (o.path.front() == 'l' ? left : right).push_back({o.path.tail(), o.var});
  }
  Type l = build_from_occurrences(left, z);
  return Type::arrow(l, build_from_occurrences(right, z));
}
}  // namespace detail

// The least type containing the given leaves; missing leaves become pairwise
// distinct fresh variables drawn from `z`, left to right.
inline Type type_of_occurrences(const std::set<Occurrence>& s, FreshSupply& z) {
  require_prefix_free(s);
  return detail::build_from_occurrences(std::vector<Occurrence>(s.begin(), s.end()), z);
}

// Replaces every maximal subtree whose variables all lie in `theta` by a
// fresh variable. The result is an ancestor of `t`: only fresh variables need
// instantiating to recover it.
inline Type theta_free_ancestor(const Type& t, const std::set<std::string>& theta, FreshSupply& z) {
  bool all_in_theta = true;
  for (const auto& v : vars_of(t))
    if (theta.count(v) == 0) {
      all_in_theta = false;
      break;
    }
  if (all_in_theta) return z.fresh();
  if (t.is_var()) return t;
  Type l = theta_free_ancestor(t.left(), theta, z);
  return Type::arrow(l, theta_free_ancestor(t.right(), theta, z));
}

// ---------------------------------------------------------------------------
// Renaming

namespace detail {
inline bool bijective_match(const Type& a, const Type& b, std::map<std::string, std::string>& fwd,
                            std::map<std::string, std::string>& bwd) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto [fi, fnew] = fwd.emplace(a.name(), b.name());
    auto [bi, bnew] = bwd.emplace(b.name(), a.name());
    return fi->second == b.name() && bi->second == a.name();
  }
  return bijective_match(a.left(), b.left(), fwd, bwd) &&
         bijective_match(a.right(), b.right(), fwd, bwd);
}
}  // namespace detail

// Equal up to an injective renaming of variables applied uniformly to the whole
// sequence.
inline bool equal_up_to_renaming(const std::vector<Type>& a, const std::vector<Type>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, std::string> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!detail::bijective_match(a[i], b[i], fwd, bwd)) return false;
  return true;
}

inline bool equal_up_to_renaming(const Type& a, const Type& b) {
  return equal_up_to_renaming(std::vector<Type>{a}, std::vector<Type>{b});
}

// Renames variables to prefix0, prefix1, ... in order of first occurrence,
// scanning the types left to right. `names` carries the assignment across calls.
inline Type rename_in_order(const Type& t, std::map<std::string, std::string>& names,
                            const std::string& prefix = "t") {
  if (t.is_var()) {
    auto it = names.find(t.name());
    if (it == names.end())
      it = names.emplace(t.name(), prefix + std::to_string(names.size())).first;
    return Type::var(it->second);
  }
  Type l = rename_in_order(t.left(), names, prefix);
  return Type::arrow(l, rename_in_order(t.right(), names, prefix));
}

inline Type canonical(const Type& t) {
  std::map<std::string, std::string> names;
  return rename_in_order(t, names);
}

}  // namespace goi
