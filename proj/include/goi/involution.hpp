#pragma once

// The GoI model of partial involutions: path-pair sets, projections, the
// composition ;̂, linear application by trajectory search, and the
// denotations of combinatory and lambda terms.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goi/combinatory.hpp"
#include "goi/error.hpp"
#include "goi/lambda.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"

namespace goi {

// Directed pair ⟨p, q⟩ and a set of them.
using PathPair = std::pair<Path, Path>;
using Relation = std::set<PathPair>;

inline std::string to_string(const PathPair& p) { return p.first.str() + " -> " + p.second.str(); }

inline Relation inverse(const Relation& r) {
  Relation out;
  for (const auto& [p, q] : r) out.emplace(q, p);
  return out;
}

// A finite partial involution on paths, stored as unordered pairs {p, q}
// with p < q. Irreflexive, each path in at most one pair, and prefix-free.
class Involution {
 public:
  Involution() = default;

  static Involution of(std::initializer_list<std::pair<std::string, std::string>> pairs) {
    Involution f;
    for (const auto& [p, q] : pairs) f.add(Path::parse(p), Path::parse(q));
    f.validate();
    return f;
  }

  // From a symmetric directed relation.
  static Involution from_relation(const Relation& r) {
    Involution f;
    for (const auto& [p, q] : r) {
      if (r.count({q, p}) == 0)
        throw InvariantViolation("relation is not symmetric at " + p.str() + " -> " + q.str());
      if (p < q) f.add(p, q);
      if (p == q) throw InvariantViolation("reflexive pair at " + p.str());
    }
    f.validate();
    return f;
  }

  const std::set<PathPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Both orientations of every pair.
  Relation relation() const {
    Relation r;
    for (const auto& [p, q] : pairs_) {
      r.emplace(p, q);
      r.emplace(q, p);
    }
    return r;
  }

  std::set<Path> carrier() const {
    std::set<Path> c;
    for (const auto& [p, q] : pairs_) {
      c.insert(p);
      c.insert(q);
    }
    return c;
  }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  void add(Path p, Path q) {
    if (q < p) std::swap(p, q);
    pairs_.emplace(std::move(p), std::move(q));
  }

  void validate() const {
    std::vector<Path> all;
    for (const auto& [p, q] : pairs_) {
      if (p == q) throw InvariantViolation("reflexive pair at " + p.str());
      all.push_back(p);
      all.push_back(q);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i] == all[i + 1]) throw InvariantViolation("path " + all[i].str() + " is in two pairs");
    }
    // In sorted order a prefix is immediately followed by one of its extensions.
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].is_prefix_of(all[i + 1]))
        throw InvariantViolation("path " + all[i].str() + " is a prefix of " + all[i + 1].str());
    }
  }

  std::set<PathPair> pairs_;
};

// Sorted "p <-> q" lines.
inline std::string to_string(const Involution& f) {
  std::string s;
  for (const auto& [p, q] : f.pairs()) s += p.str() + " <-> " + q.str() + "\n";
  return s;
}

// One pair per variable occurring twice.
inline Involution involution_of_type(const Type& t) {
  if (!is_binary(t)) throw PreconditionError("involution_of_type: type is not binary: " + to_string(t));
  std::map<std::string, std::vector<Path>> at;
  for (const auto& o : occurrences(t)) at[o.var].push_back(o.path);
  Relation r;
  for (const auto& [v, ps] : at) {
    if (ps.size() == 2) {
      r.emplace(ps[0], ps[1]);
      r.emplace(ps[1], ps[0]);
    }
  }
  return Involution::from_relation(r);
}

// T_Z(O(f)): one variable per pair, fresh variables for the missing leaves.
// Names are drawn from `z` in pair order, then left to right for the gaps.
inline Type type_of_involution(const Involution& f, FreshSupply& z) {
  std::set<Occurrence> occ;
  for (const auto& [p, q] : f.pairs()) {
    const std::string v = z.next();
    occ.insert({p, v});
    occ.insert({q, v});
  }
  return type_of_occurrences(occ, z);
}

inline Type type_of_involution(const Involution& f) {
  FreshSupply z("t");
  return canonical(type_of_involution(f, z));
}

// f_ij = { ⟨u, v⟩ | ⟨i u, j v⟩ ∈ f }.
inline Relation project(const Relation& f, char i, char j) {
  Relation out;
  for (const auto& [p, q] : f) {
    if (!p.empty() && !q.empty() && p.front() == i && q.front() == j) out.emplace(p.tail(), q.tail());
  }
  return out;
}

inline Relation project(const Involution& f, char i, char j) { return project(f.relation(), i, j); }

// Path-level ;̂ of a single pair of pairs: the action of the occurrence unifier
// of u' and v on the outer occurrences u and v'.
inline std::optional<PathPair> compose_pair(const PathPair& a, const PathPair& b) {
  const auto& [u, u1] = a;
  const auto& [v, v1] = b;
  if (v.is_prefix_of(u1)) return PathPair{u, v1 + v.suffix_of(u1)};
  if (u1.is_prefix_of(v)) return PathPair{u + u1.suffix_of(v), v1};
  return std::nullopt;
}

inline Relation compose_hat(const Relation& f, const Relation& g) {
  Relation out;
  for (const auto& a : f)
    for (const auto& b : g)
      if (auto c = compose_pair(a, b)) out.insert(*c);
  return out;
}

// ---------------------------------------------------------------------------
// Linear application

enum class Source { f_rr, f_rl, g, f_ll, f_lr };

inline const char* source_name(Source s) {
  switch (s) {
    case Source::f_rr: return "f_rr";
    case Source::f_rl: return "f_rl";
    case Source::g: return "g";
    case Source::f_ll: return "f_ll";
    case Source::f_lr: return "f_lr";
  }
  return "?";
}

struct TrajectoryStep {
  Source source;
  PathPair pair;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  Substitution unifier;  // m.g.u. of the chained occurrence types, on v1, v2, ...
  PathPair output;
};

namespace detail {

// Number of internal nodes of the least tree containing every carrier path.
inline std::size_t arrows_of_carrier(const std::set<Path>& carrier) {
  std::set<std::string> internal;
  for (const auto& p : carrier)
    for (std::size_t k = 0; k < p.size(); ++k) internal.insert(p.steps().substr(0, k));
  return internal.size();
}

// Chains T_Z(u'_i[v_i]) with T_Z(u_{i+1}[v_{i+1}]) and unifies.
inline Substitution trajectory_unifier(const std::vector<TrajectoryStep>& steps) {
  FreshSupply z("z");
  std::vector<TypePair> pi;
  std::set<std::string> step_vars;
  for (std::size_t i = 0; i < steps.size(); ++i) step_vars.insert("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const std::string vi = "v" + std::to_string(i + 1);
    const std::string vj = "v" + std::to_string(i + 2);
    pi.emplace_back(type_of_occurrences({{steps[i].pair.second, vi}}, z),
                    type_of_occurrences({{steps[i + 1].pair.first, vj}}, z));
  }
  auto u = mgu(pi);
  if (!u) throw InvariantViolation("trajectory occurrences do not unify");
  return u->restricted(step_vars);
}

class TrajectorySearch {
 public:
  TrajectorySearch(const Involution& f, const Involution& g, bool record)
      : g_(g.relation()), record_(record) {
    const Relation fr = f.relation();
    rr_ = project(fr, 'r', 'r');
    rl_ = project(fr, 'r', 'l');
    ll_ = project(fr, 'l', 'l');
    lr_ = project(fr, 'l', 'r');
    bound_ = arrows_of_carrier(f.carrier()) + arrows_of_carrier(g.carrier()) + 2;
  }

  void run() {
    for (const auto& p : rr_) {
      outputs_.insert(p);
      if (record_) trajectories_.push_back({{{Source::f_rr, p}}, Substitution(), p});
    }
    for (const auto& p : rl_) {
      steps_.push_back({Source::f_rl, p});
      visit(Source::f_rl, p);
      steps_.pop_back();
    }
  }

  const Relation& outputs() const { return outputs_; }
  std::vector<Trajectory>& trajectories() { return trajectories_; }

 private:
  // `carried` is the current composite ⟨a, b⟩; `last` says which relation
  // produced it, hence which relations may follow.
  void visit(Source last, const PathPair& carried) {
    if (carried.first.size() > bound_ || carried.second.size() > bound_) {
      throw Diverges("trajectory exceeds the path-length bound " + std::to_string(bound_));
    }
    const State state{last == Source::g, carried};
    if (!seen_.insert(state).second) throw Diverges("trajectory repeats a state");
    if (last == Source::g) {
      follow(lr_, Source::f_lr, carried);
      follow(ll_, Source::f_ll, carried);
    } else {
      follow(g_, Source::g, carried);
    }
    seen_.erase(state);
  }

  void follow(const Relation& rel, Source src, const PathPair& carried) {
    for (const auto& p : rel) {
      auto next = compose_pair(carried, p);
      if (!next) continue;
      steps_.push_back({src, p});
      if (src == Source::f_lr) {
        outputs_.insert(*next);
        if (record_) trajectories_.push_back({steps_, trajectory_unifier(steps_), *next});
      } else {
        visit(src, *next);
      }
      steps_.pop_back();
    }
  }

  using State = std::pair<bool, PathPair>;

  Relation rr_, rl_, ll_, lr_, g_;
  bool record_;
  std::size_t bound_ = 0;
  std::set<State> seen_;
  std::vector<TrajectoryStep> steps_;
  Relation outputs_;
  std::vector<Trajectory> trajectories_;
};

}  // namespace detail

// f · g = f_rr ∪ f_rl ;̂ g ;̂ (f_ll ;̂ g)* ;̂ f_lr. Throws Diverges when a
// trajectory grows without bound.
inline Involution linear_apply(const Involution& f, const Involution& g) {
  detail::TrajectorySearch s(f, g, false);
  s.run();
  return Involution::from_relation(s.outputs());
}

// Every trajectory of f · g, in search order.
inline std::vector<Trajectory> trajectories(const Involution& f, const Involution& g) {
  detail::TrajectorySearch s(f, g, true);
  s.run();
  return std::move(s.trajectories());
}

// "src: u[vi] -> u'[vi]" lines, the output pair, then the unifier.
inline std::string to_string(const Trajectory& t) {
  std::string s;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const std::string v = "[v" + std::to_string(i + 1) + "]";
    const auto& [p, q] = t.steps[i].pair;
    s += std::string(source_name(t.steps[i].source)) + ": " + p.str() + v + " -> " + q.str() + v + "\n";
  }
  s += "output: " + t.output.first.str() + " <-> " + t.output.second.str() + "\n";
  s += to_string(t.unifier);
  return s;
}

// ---------------------------------------------------------------------------
// Denotations

inline Involution base_denotation(Combinator k) {
  switch (k) {
    case Combinator::B: return Involution::of({{"rrr", "lr"}, {"ll", "rlr"}, {"rll", "rrl"}});
    case Combinator::C: return Involution::of({{"ll", "rrl"}, {"lrl", "rl"}, {"lrr", "rrr"}});
    case Combinator::I: return Involution::of({{"l", "r"}});
    case Combinator::K: return Involution::of({{"l", "rr"}});
  }
  return {};
}

inline Involution goi_semantics_cl(const CLTerm& m) {
  switch (m.kind()) {
    case CLTerm::Kind::var:
      throw PreconditionError("goi_semantics: term is not closed (free variable " + m.name() + ")");
    case CLTerm::Kind::comb: return base_denotation(m.combinator());
    case CLTerm::Kind::app: {
      Involution f = goi_semantics_cl(m.fun());
      Involution g = goi_semantics_cl(m.arg());
      try {
        return linear_apply(f, g);
      } catch (const Diverges& e) {
        throw InvariantViolation("denotation of " + to_string(m) + " diverged: " + e.what());
      }
    }
  }
  return {};
}

inline Involution goi_semantics_lambda(const LambdaTerm& m) {
  if (!is_closed(m)) throw PreconditionError("goi_semantics: term is not closed: " + to_string(m));
  return goi_semantics_cl(to_cl(m));
}

}  // namespace goi
