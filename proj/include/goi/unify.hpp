#pragma once

// Substitutions, the Martelli-Montanari m.g.u. algorithm, the generality
// order, merging of unifiers, and occurrence unifiers.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goi/types.hpp"

namespace goi {

// Finite map from variables to types; identity outside its domain. Bindings
// that map a variable to itself are never stored.
class Substitution {
 public:
  Substitution() = default;

  static Substitution of(std::initializer_list<std::pair<const std::string, Type>> bindings) {
    Substitution s;
    for (const auto& [v, t] : bindings) s.bind(v, t);
    return s;
  }

  void bind(const std::string& v, const Type& t) {
    if (t.is_var() && t.name() == v) {
      map_.erase(v);
    } else {
      map_.insert_or_assign(v, t);
    }
  }

  Type operator()(const std::string& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? Type::var(v) : it->second;
  }

  Type apply(const Type& t) const {
    if (t.is_var()) return (*this)(t.name());
    Type l = apply(t.left());
    return Type::arrow(l, apply(t.right()));
  }

  std::set<std::string> domain() const {
    std::set<std::string> d;
    for (const auto& [v, t] : map_) d.insert(v);
    return d;
  }
  bool empty() const { return map_.empty(); }
  const std::map<std::string, Type>& bindings() const { return map_; }

  // Drops bindings outside `keep`.
  Substitution restricted(const std::set<std::string>& keep) const {
    Substitution s;
    for (const auto& [v, t] : map_)
      if (keep.count(v) != 0) s.bind(v, t);
    return s;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Type> map_;
};

// (v ∘ u)(t) = v(u(t)).
inline Substitution compose(const Substitution& v, const Substitution& u) {
  Substitution r;
  for (const auto& [x, t] : u.bindings()) r.bind(x, v.apply(t));
  for (const auto& [x, t] : v.bindings())
    if (u.bindings().count(x) == 0) r.bind(x, t);
  return r;
}

inline bool is_idempotent(const Substitution& u) {
  for (const auto& [x, t] : u.bindings())
    if (!(u.apply(t) == t)) return false;
  return true;
}

// Sorted "v := type" lines.
inline std::string to_string(const Substitution& u) {
  std::string s;
  for (const auto& [v, t] : u.bindings()) s += v + " := " + to_string(t) + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Martelli-Montanari

using TypePair = std::pair<Type, Type>;

namespace detail {

inline bool occurs_elsewhere(const std::string& v, const std::vector<TypePair>& e, std::size_t skip) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i == skip) continue;
    if (occurs_in(v, e[i].first) || occurs_in(v, e[i].second)) return true;
  }
  return false;
}

inline void normalize_set(std::vector<TypePair>& e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
}

}  // namespace detail

// Most general unifier of a set of type pairs, or nullopt on failure. The
// rule schedule is fixed: the least pair (in structural order) to which some
// rule applies is rewritten by the first applicable rule.
inline std::optional<Substitution> mgu(std::vector<TypePair> e) {
  detail::normalize_set(e);
  for (;;) {
    bool rewrote = false;
    for (std::size_t i = 0; i < e.size() && !rewrote; ++i) {
      const auto [a, b] = e[i];
      if (a.is_arrow() && b.is_arrow()) {
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
        e.emplace_back(a.left(), b.left());
        e.emplace_back(a.right(), b.right());
        rewrote = true;
      } else if (a.is_var() && b.is_var() && a.name() == b.name()) {
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
        rewrote = true;
      } else if (a.is_arrow() && b.is_var()) {
        e[i] = {b, a};
        rewrote = true;
      } else if (a.is_var()) {
        if (occurs_in(a.name(), b)) return std::nullopt;
        if (detail::occurs_elsewhere(a.name(), e, i)) {
          Substitution s;
          s.bind(a.name(), b);
          for (std::size_t j = 0; j < e.size(); ++j) {
            if (j == i) continue;
            e[j] = {s.apply(e[j].first), s.apply(e[j].second)};
          }
          rewrote = true;
        }
      }
    }
    if (!rewrote) break;
    detail::normalize_set(e);
  }
  Substitution u;
  for (const auto& [a, b] : e) u.bind(a.name(), b);
  return u;
}

inline std::optional<Substitution> mgu(const Type& a, const Type& b) {
  return mgu(std::vector<TypePair>{{a, b}});
}

inline bool unifies(const Substitution& u, const std::vector<TypePair>& e) {
  for (const auto& [a, b] : e)
    if (!(u.apply(a) == u.apply(b))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Matching and the generality order

namespace detail {

// One-sided unification: extends `bind` so that bind(pattern) == target.
// Variables outside `free` are fixed to `fixed(v)`.
template <class Fixed>
bool match_into(const Type& pattern, const Type& target, const std::set<std::string>* free,
                const Fixed& fixed, std::map<std::string, Type>& bind) {
  if (pattern.is_var()) {
    const std::string& v = pattern.name();
    if (free != nullptr && free->count(v) == 0) return fixed(v) == target;
    auto [it, inserted] = bind.emplace(v, target);
    return inserted || it->second == target;
  }
  if (!target.is_arrow()) return false;
  return match_into(pattern.left(), target.left(), free, fixed, bind) &&
         match_into(pattern.right(), target.right(), free, fixed, bind);
}

}  // namespace detail

// Substitution w with w(patterns[i]) == targets[i] for all i, if any.
inline std::optional<Substitution> match(const std::vector<Type>& patterns,
                                         const std::vector<Type>& targets) {
  if (patterns.size() != targets.size()) return std::nullopt;
  std::map<std::string, Type> bind;
  auto none = [](const std::string& v) { return Type::var(v); };
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (!detail::match_into(patterns[i], targets[i], nullptr, none, bind)) return std::nullopt;
  Substitution w;
  for (const auto& [v, t] : bind) w.bind(v, t);
  return w;
}

// Witness w with w ∘ u == v, if u is more general than v.
inline std::optional<Substitution> generality_witness(const Substitution& u, const Substitution& v) {
  const std::set<std::string> free = u.domain();
  auto fixed = [&v](const std::string& x) { return v(x); };
  std::map<std::string, Type> bind;
  for (const auto& [x, t] : u.bindings())
    if (!detail::match_into(t, v(x), &free, fixed, bind)) return std::nullopt;
  Substitution w;
  for (const auto& [x, t] : bind) w.bind(x, t);
  for (const auto& [x, t] : v.bindings())
    if (free.count(x) == 0) w.bind(x, t);
  return w;
}

inline bool more_general(const Substitution& u, const Substitution& v) {
  return generality_witness(u, v).has_value();
}

// u and v agree on `vars` up to an injective renaming of the variables in
// their images.
inline bool equivalent_on(const std::set<std::string>& vars, const Substitution& u,
                          const Substitution& v) {
  std::vector<Type> a, b;
  for (const auto& x : vars) {
    a.push_back(u(x));
    b.push_back(v(x));
  }
  return equal_up_to_renaming(a, b);
}

// u1 ⊕ u2: the least common instance of both, w ∘ u1 where w is the m.g.u. of
// {(u1(x), u2(x)) | x ∈ dom(u1) ∪ dom(u2)}.
inline std::optional<Substitution> merge_unifiers(const Substitution& u1, const Substitution& u2) {
  std::set<std::string> dom = u1.domain();
  dom.merge(u2.domain());
  std::vector<TypePair> pairs;
  for (const auto& x : dom) pairs.emplace_back(u1(x), u2(x));
  auto w = mgu(pairs);
  if (!w) return std::nullopt;
  return compose(*w, u1);
}

// ---------------------------------------------------------------------------
// Occurrence unifiers

struct OccUnifier {
  Substitution unifier;
  Occurrence left;
  Occurrence right;
  std::set<std::string> fresh;  // Z-variables introduced for the ancestor types

  // Image of another occurrence of left.var or right.var under the unifier:
  // the variable is replaced by the unique non-fresh leaf of its image.
  Occurrence transport(const Occurrence& o) const {
    const Type image = unifier(o.var);
    for (const auto& leaf : occurrences(image)) {
      if (fresh.count(leaf.var) == 0) return {o.path + leaf.path, leaf.var};
    }
    return o;
  }
};

// m.g.u. of the single-occurrence ancestor types of u and v; defined only when
// one path is a prefix of the other. The two variables are expected distinct.
inline std::optional<OccUnifier> occ_unifier(const Occurrence& u, const Occurrence& v,
                                             FreshSupply& z) {
  if (!u.path.comparable(v.path)) return std::nullopt;
  std::set<std::string> fresh;
  auto fill = [&](const Occurrence& o) {
    Type t = type_of_occurrences({o}, z);
    for (const auto& leaf : occurrences(t))
      if (leaf.var != o.var) fresh.insert(leaf.var);
    return t;
  };
  const Type tu = fill(u);
  const Type tv = fill(v);
  auto m = mgu(tu, tv);
  if (!m) return std::nullopt;
  return OccUnifier{*m, u, v, std::move(fresh)};
}

inline std::optional<OccUnifier> occ_unifier(const Occurrence& u, const Occurrence& v) {
  FreshSupply z("z", {u.var, v.var});
  return occ_unifier(u, v, z);
}

}  // namespace goi
