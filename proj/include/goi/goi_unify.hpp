#pragma once

// Unification read off the involutions of two types: the GoI-unifiability
// test, an occurrence-driven m.g.u., and the auxiliary outcome construction
// σ[α1,α2] ⊸ α1 ⊸ α2 applied to R(τ).

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goi/error.hpp"
#include "goi/involution.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"

namespace goi {

struct GoiUnification {
  bool unifiable = false;
  bool diverged = false;  // the feedback closure grew past the depth bound
};

namespace detail {

inline void require_goi_pair(const Type& s, const Type& t) {
  if (!is_strictly_binary(s) || !is_strictly_binary(t))
    throw PreconditionError("GoI unification expects every variable to occur exactly twice");
  for (const auto& v : vars_of(s))
    if (occurs_in(v, t)) throw PreconditionError("GoI unification expects disjoint variables (" + v + ")");
}

// a ;̂ (b ;̂ a)*, or nullopt if some path exceeds `bound`.
inline std::optional<Relation> feedback_closure(const Relation& a, const Relation& b, std::size_t bound) {
  Relation out = a;
  std::vector<PathPair> todo(a.begin(), a.end());
  while (!todo.empty()) {
    const PathPair p = todo.back();
    todo.pop_back();
    for (const auto& x : b) {
      auto c = compose_pair(p, x);
      if (!c) continue;
      for (const auto& y : a) {
        auto d = compose_pair(*c, y);
        if (!d) continue;
        if (d->first.size() > bound || d->second.size() > bound) return std::nullopt;
        if (out.insert(*d).second) todo.push_back(*d);
      }
    }
  }
  return out;
}

// ⟨u, v⟩ is matched by some ⟨u w, v w⟩ of the closure.
inline bool covered(const PathPair& p, const Relation& closure) {
  for (const auto& [u, v] : closure) {
    if (p.first.is_prefix_of(u) && p.second.is_prefix_of(v) &&
        p.first.suffix_of(u) == p.second.suffix_of(v))
      return true;
  }
  return false;
}

inline std::size_t depth_bound(const Type& s, const Type& t) { return arrow_count(s) + arrow_count(t); }

}  // namespace detail

// R(σ) ⊆̂ R(τ) ;̂ (R(σ) ;̂ R(τ))* and R(τ) ⊆̂ R(σ) ;̂ (R(τ) ;̂ R(σ))*.
inline GoiUnification goi_unifiable(const Type& s, const Type& t) {
  detail::require_goi_pair(s, t);
  const Relation rs = involution_of_type(s).relation();
  const Relation rt = involution_of_type(t).relation();
  const std::size_t bound = detail::depth_bound(s, t) + 1;
  auto from_t = detail::feedback_closure(rt, rs, bound);
  auto from_s = detail::feedback_closure(rs, rt, bound);
  if (!from_t || !from_s) return {false, true};
  for (const auto& p : rs)
    if (!detail::covered(p, *from_t)) return {false, false};
  for (const auto& p : rt)
    if (!detail::covered(p, *from_s)) return {false, false};
  return {true, false};
}

namespace detail {

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Unifier computed from occurrences alone. The internal nodes of the common
// instance are found by propagating "is an arrow here" across the two
// occurrences of each variable; its leaves are then grouped by the same
// correspondence. Returns nullopt when the propagation exceeds the depth any
// finite common instance could have.
inline std::optional<Substitution> goi_mgu(const Type& s, const Type& t) {
  detail::require_goi_pair(s, t);
  std::map<std::string, std::vector<std::string>> at;
  std::set<std::string> internal;
  for (const Type* ty : {&s, &t}) {
    for (const auto& o : occurrences(*ty)) {
      at[o.var].push_back(o.path.steps());
      for (std::size_t k = 0; k < o.path.size(); ++k) internal.insert(o.path.steps().substr(0, k));
    }
  }
  const std::size_t bound = detail::depth_bound(s, t);

  auto extensions = [&](const std::string& p) {
    std::vector<std::string> out;
    for (auto it = internal.lower_bound(p); it != internal.end() && it->compare(0, p.size(), p) == 0; ++it)
      out.push_back(it->substr(p.size()));
    return out;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [v, ps] : at) {
      if (ps.size() != 2) continue;
      for (int side = 0; side < 2; ++side) {
        const std::string& from = ps[side];
        const std::string& to = ps[1 - side];
        for (const auto& w : extensions(from)) {
          if (to.size() + w.size() >= bound && bound > 0) return std::nullopt;
          if (internal.insert(to + w).second) changed = true;
        }
      }
    }
  }

  std::map<std::string, std::size_t> leaf_id;
  detail::UnionFind uf;
  if (internal.empty()) {
    leaf_id.emplace("", uf.add());
  } else {
    for (const auto& n : internal)
      for (char c : {'l', 'r'})
        if (internal.count(n + c) == 0) leaf_id.emplace(n + c, uf.add());
  }
  for (const auto& [v, ps] : at) {
    if (ps.size() != 2) continue;
    for (const auto& [leaf, id] : leaf_id) {
      if (leaf.compare(0, ps[0].size(), ps[0]) != 0) continue;
      auto other = leaf_id.find(ps[1] + leaf.substr(ps[0].size()));
      if (other == leaf_id.end()) throw InvariantViolation("goi_mgu: unmatched leaf " + leaf);
      uf.unite(id, other->second);
    }
  }

  // A class keeps the least original variable sitting on one of its leaves.
  std::set<std::string> names;
  for (const auto& [v, ps] : at) names.insert(v);
  std::map<std::size_t, std::string> class_name;
  for (const auto& [v, ps] : at) {
    for (const auto& p : ps) {
      auto it = leaf_id.find(p);
      if (it != leaf_id.end()) class_name.emplace(uf.find(it->second), v);
    }
  }
  FreshSupply z("z", names);
  for (const auto& [leaf, id] : leaf_id) {
    const std::size_t c = uf.find(id);
    if (class_name.count(c) == 0) class_name.emplace(c, z.next());
  }

  auto build = [&](auto& self, const std::string& p) -> Type {
    if (internal.count(p) != 0) {
      Type l = self(self, p + 'l');
      return Type::arrow(l, self(self, p + 'r'));
    }
    return Type::var(class_name.at(uf.find(leaf_id.at(p))));
  };

  Substitution w;
  for (const auto& [v, ps] : at) w.bind(v, build(build, ps.front()));
  if (!(w.apply(s) == w.apply(t))) throw InvariantViolation("goi_mgu: result does not unify");
  return w;
}

// Positions w with l w <-> r w in R(σ[α1,α2] ⊸ α1 ⊸ α2) · R(τ), assembled
// into a type with a fresh variable at each position. This is a Z-ancestor
// of U(α) for the m.g.u. U of σ and τ; nullopt on divergence.
inline std::optional<Type> goi_outcome_type(const Type& s, const std::string& alpha, const Type& t) {
  std::set<std::string> avoid = vars_of(s);
  avoid.merge(vars_of(t));
  FreshSupply z("z", avoid);
  const std::string a1 = z.next();
  const std::string a2 = z.next();
  bool first = true;
  auto split = [&](auto& self, const Type& x) -> Type {
    if (x.is_var()) {
      if (x.name() != alpha) return x;
      const std::string n = first ? a1 : a2;
      first = false;
      return Type::var(n);
    }
    Type l = self(self, x.left());
    return Type::arrow(l, self(self, x.right()));
  };
  const Type aux = arrow(split(split, s), arrow(Type::var(a1), Type::var(a2)));
  Involution out;
  try {
    out = linear_apply(involution_of_type(aux), involution_of_type(t));
  } catch (const Diverges&) {
    return std::nullopt;
  }
  std::set<Occurrence> occ;
  for (const auto& [p, q] : out.relation()) {
    if (!p.empty() && !q.empty() && p.front() == 'l' && q.front() == 'r' && p.tail() == q.tail())
      occ.insert({p.tail(), z.next()});
  }
  return type_of_occurrences(occ, z);
}

}  // namespace goi
