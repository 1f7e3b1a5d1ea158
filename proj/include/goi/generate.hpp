#pragma once

// Seeded random generators for affine and linear terms, binary types and type
// pairs. Identical configurations reproduce identical streams.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "goi/combinatory.hpp"
#include "goi/lambda.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"

namespace goi {

enum class GenMode { affine, linear, binary_type, strictly_binary_pair };

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_depth = 5;
  GenMode mode = GenMode::affine;
};

// Two types with the substitution that was used to make them equal.
struct SkeletonPair {
  Type left;
  Type right;
  Substitution instance;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  // Closed affine term of depth at most `max_depth` (at least 2).
  LambdaTerm affine_term(std::size_t max_depth) {
    max_depth = std::max<std::size_t>(max_depth, 2);
    for (;;) {
      std::vector<std::string> pool;
      counter_ = 0;
      if (auto t = affine(max_depth, pool)) return *t;
    }
  }

  // Closed linear term of depth at most `max_depth` (at least 2).
  LambdaTerm linear_term(std::size_t max_depth) {
    max_depth = std::max<std::size_t>(max_depth, 2);
    counter_ = 0;
    return linear(max_depth, {});
  }

  // Random CL term over B, C, I, K and the given variables; every variable in
  // `once` is used at most once.
  CLTerm cl_term(std::size_t max_depth, const std::vector<std::string>& vars,
                 const std::vector<std::string>& once = {}) {
    std::set<std::string> used;
    return cl(max_depth, vars, once, used);
  }

  // Binary type: every variable occurs at most twice. Variables are
  // prefix0, prefix1, ...
  Type binary_type(std::size_t max_depth, const std::string& prefix = "a") {
    Type shape = random_shape(max_depth);
    return label(shape, prefix, false);
  }

  // Every variable occurs exactly twice.
  Type strictly_binary_type(std::size_t max_depth, const std::string& prefix = "a") {
    for (;;) {
      Type shape = random_shape(max_depth);
      if (count_leaves(shape) % 2 == 0) return label(shape, prefix, true);
    }
  }

  // Strictly binary pair with disjoint variables. One third each: independent
  // random types, a renamed copy with a variable pair expanded (always
  // unifiable), and a copy with a pair of subtrees swapped.
  std::pair<Type, Type> strictly_binary_pair(std::size_t max_depth) {
    const Type s = strictly_binary_type(max_depth, "a");
    switch (below(3)) {
      case 0: return {s, strictly_binary_type(max_depth, "b")};
      case 1: {
        Type t = rename_vars(s, "b");
        const std::set<std::string> tv = vars_of(t);
        std::vector<std::string> vs(tv.begin(), tv.end());
        const std::string v = vs[below(vs.size())];
        // Distinct leaves, placed at both occurrences of v: each occurs twice.
        Type e = rename_vars(distinct_leaves(random_shape(std::max<std::size_t>(1, max_depth / 2))), "c");
        Substitution sub;
        sub.bind(v, e);
        return {s, sub.apply(t)};
      }
      default: {
        Type t = rename_vars(s, "b");
        return {s, relabel_swapped(t)};
      }
    }
  }

  // Arbitrary skeleton cut in two different ways; `instance` maps the cut
  // variables back to the subtrees they replaced.
  SkeletonPair skeleton_pair(std::size_t max_depth) {
    Type skel = random_type(max_depth, 3, "s");
    if (skel.is_var()) skel = Type::arrow(skel, random_type(max_depth, 3, "s"));
    Substitution inst;
    std::size_t k = 0;
    Type l = cut(skel, "p", k, inst);
    k = 0;
    Type r = cut(skel, "q", k, inst);
    return {l, r, inst};
  }

  // Pair whose unification must fail the occurs check: a chain x0 = T(x1),
  // x1 = T(x2), ..., x(k-1) = T(x0) with each T a proper context.
  std::pair<Type, Type> occurs_check_pair(std::size_t max_depth) {
    const std::size_t k = 1 + below(3);
    std::vector<Type> left, right;
    for (std::size_t i = 0; i < k; ++i) {
      left.push_back(Type::var("x" + std::to_string(i)));
      Type ctx = random_type(std::max<std::size_t>(1, max_depth), 4, "f" + std::to_string(i) + "_");
      if (ctx.is_var()) ctx = Type::arrow(ctx, Type::var("g" + std::to_string(i)));
      right.push_back(plant(ctx, Type::var("x" + std::to_string((i + 1) % k))));
    }
    auto fold = [](const std::vector<Type>& ts) {
      Type t = ts.back();
      for (std::size_t i = ts.size() - 1; i-- > 0;) t = Type::arrow(ts[i], t);
      return t;
    };
    return {fold(left), fold(right)};
  }

  // Binary σ1 ⊸ σ2 and τ, variables disjoint from τ, with σ1 and τ unifiable:
  // both are cut from differently renamed copies of one binary skeleton, and
  // σ2 reuses some variables that occur once in σ1.
  std::pair<Type, Type> resolution_instance(std::size_t max_depth) {
    Type skel = binary_type(max_depth, "s");
    while (skel.is_var()) skel = binary_type(max_depth, "s");
    Substitution ignore;
    std::size_t k = 0;
    const Type s1 = cut(rename_vars(skel, "a"), "p", k, ignore);
    k = 0;
    const Type t = cut(rename_vars(skel, "b"), "q", k, ignore);
    std::vector<std::string> once;
    for (const auto& [v, n] : var_counts(s1))
      if (n == 1) once.push_back(v);
    Type s2 = label(random_shape(std::max<std::size_t>(1, max_depth / 2)), "d", false);
    Substitution reuse;
    for (const auto& [v, n] : var_counts(s2)) {
      if (n == 1 && !once.empty() && chance(0.6)) {
        const std::size_t i = below(once.size());
        reuse.bind(v, Type::var(once[i]));
        once.erase(once.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return {Type::arrow(s1, reuse.apply(s2)), t};
  }

  // Arbitrary type over `nvars` variables named prefix0, ...
  Type random_type(std::size_t max_depth, std::size_t nvars, const std::string& prefix) {
    if (max_depth == 0 || chance(0.3)) return Type::var(prefix + std::to_string(below(nvars)));
    Type l = random_type(max_depth - 1, nvars, prefix);
    return Type::arrow(l, random_type(max_depth - 1, nvars, prefix));
  }

  // Tree shape of depth at most `max_depth`, leaves all named "_".
  Type random_shape(std::size_t max_depth) {
    if (max_depth == 0 || chance(0.25)) return Type::var("_");
    Type l = random_shape(max_depth - 1);
    return Type::arrow(l, random_shape(max_depth - 1));
  }

 private:
  std::string fresh_name() { return "x" + std::to_string(counter_++); }

  // Leaves are unlikely while there is depth to spend; applications lean
  // towards redexes so that reduction has something to do.
  std::optional<LambdaTerm> affine(std::size_t budget, std::vector<std::string>& pool) {
    const bool can_var = !pool.empty();
    const bool can_grow = budget >= 2;
    if (!can_var && !can_grow) return std::nullopt;
    if (can_var && (!can_grow || chance(budget <= 2 ? 0.6 : 0.15))) {
      const std::size_t i = below(pool.size());
      std::string x = pool[i];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      return LambdaTerm::var(x);
    }
    if (chance(pool.empty() ? 0.5 : 0.35)) return affine_abs(budget, pool);
    auto f = budget >= 3 && chance(0.3) ? affine_abs(budget - 1, pool) : affine(budget - 1, pool);
    if (!f) return std::nullopt;
    auto a = affine(budget - 1, pool);
    if (!a) return std::nullopt;
    return LambdaTerm::app(*f, *a);
  }

  std::optional<LambdaTerm> affine_abs(std::size_t budget, std::vector<std::string>& pool) {
    std::string x = fresh_name();
    pool.push_back(x);
    auto body = affine(budget - 1, pool);
    pool.erase(std::remove(pool.begin(), pool.end(), x), pool.end());
    if (!body) return std::nullopt;
    return LambdaTerm::abs(x, *body);
  }

  // A linear term with k given free variables fits in depth `budget`.
  static bool linear_fits(std::size_t budget, std::size_t k) {
    if (k == 0) return budget >= 2;
    if (k == 1) return budget >= 1;
    return budget >= 2 && (budget - 1 >= 63 || k <= (std::size_t{1} << (budget - 1)));
  }

  // Term whose free variables are exactly `vars`, each once. Only feasible
  // choices are offered, so this never dead-ends (retries would favour small
  // terms).
  LambdaTerm linear(std::size_t budget, std::vector<std::string> vars) {
    const std::size_t k = vars.size();
    if (k == 1 && (budget == 1 || chance(budget <= 2 ? 0.7 : 0.15))) return LambdaTerm::var(vars.front());
    const bool can_abs = linear_fits(budget - 1, k + 1);
    std::vector<std::string> a, b;
    bool can_app = false;
    if (budget >= 2) {
      for (auto& v : vars) (chance(0.5) ? a : b).push_back(v);
      if (a.empty()) std::swap(a, b);
      if (!linear_fits(budget - 1, a.size()) || !linear_fits(budget - 1, b.size())) {
        a.assign(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>((k + 1) / 2));
        b.assign(vars.begin() + static_cast<std::ptrdiff_t>((k + 1) / 2), vars.end());
      }
      can_app = !a.empty() && linear_fits(budget - 1, a.size()) && linear_fits(budget - 1, b.size());
    }
    if (!can_app && !can_abs) return LambdaTerm::var(vars.front());  // k == 1, budget == 1
    const double p_abs = k == 0 ? 0.8 : k == 1 ? 0.5 : 0.2;
    if (can_abs && (!can_app || chance(p_abs))) return linear_abs(budget, vars);
    LambdaTerm f = budget >= 3 && linear_fits(budget - 2, a.size() + 1) && chance(0.3)
                       ? linear_abs(budget - 1, a)
                       : linear(budget - 1, a);
    return LambdaTerm::app(f, linear(budget - 1, b));
  }

  LambdaTerm linear_abs(std::size_t budget, std::vector<std::string> vars) {
    std::string x = fresh_name();
    vars.push_back(x);
    return LambdaTerm::abs(x, linear(budget - 1, vars));
  }

  CLTerm cl(std::size_t budget, const std::vector<std::string>& vars,
            const std::vector<std::string>& once, std::set<std::string>& used) {
    if (budget <= 1 || chance(0.35)) {
      std::vector<std::string> avail;
      for (const auto& v : vars)
        if (std::find(once.begin(), once.end(), v) == once.end() || used.count(v) == 0) avail.push_back(v);
      if (!avail.empty() && chance(0.5)) {
        const std::string v = avail[below(avail.size())];
        used.insert(v);
        return CLTerm::var(v);
      }
      static const Combinator ks[] = {Combinator::B, Combinator::C, Combinator::I, Combinator::K};
      return CLTerm::comb(ks[below(4)]);
    }
    CLTerm f = cl(budget - 1, vars, once, used);
    return CLTerm::app(f, cl(budget - 1, vars, once, used));
  }

  static std::size_t count_leaves(const Type& t) {
    return t.is_var() ? 1 : count_leaves(t.left()) + count_leaves(t.right());
  }

  // Names the leaves of `shape`. Leaves are shuffled and consumed in pairs
  // (sharing a variable) or singly (only when !strict).
  Type label(const Type& shape, const std::string& prefix, bool strict) {
    const std::size_t n = count_leaves(shape);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    std::vector<std::string> names(n);
    std::size_t v = 0;
    for (std::size_t i = 0; i < n;) {
      const std::string name = prefix + std::to_string(v++);
      names[order[i++]] = name;
      if (i < n && (strict || chance(0.7))) names[order[i++]] = name;
    }
    std::size_t pos = 0;
    Type out = fill(shape, names, pos);
    return rename_vars(out, prefix);
  }

  static Type distinct_leaves(const Type& shape) {
    std::vector<std::string> names(count_leaves(shape));
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = "_" + std::to_string(i);
    std::size_t pos = 0;
    return fill(shape, names, pos);
  }

  static Type fill(const Type& shape, const std::vector<std::string>& names, std::size_t& pos) {
    if (shape.is_var()) return Type::var(names[pos++]);
    Type l = fill(shape.left(), names, pos);
    return Type::arrow(l, fill(shape.right(), names, pos));
  }

  // Canonical left-to-right renaming with the given prefix.
  static Type rename_vars(const Type& t, const std::string& prefix) {
    std::map<std::string, std::string> names;
    return rename_in_order(t, names, prefix);
  }

  // Swaps the two children of a random arrow node.
  Type relabel_swapped(const Type& t) {
    if (t.is_var()) return t;
    if (chance(0.4)) return Type::arrow(t.right(), t.left());
    if (chance(0.5)) return Type::arrow(relabel_swapped(t.left()), t.right());
    return Type::arrow(t.left(), relabel_swapped(t.right()));
  }

  Type cut(const Type& t, const std::string& prefix, std::size_t& k, Substitution& inst, bool root = true) {
    if (!root && chance(0.2)) {
      const std::string v = prefix + std::to_string(k++);
      inst.bind(v, t);
      return Type::var(v);
    }
    if (t.is_var()) return t;
    Type l = cut(t.left(), prefix, k, inst, false);
    return Type::arrow(l, cut(t.right(), prefix, k, inst, false));
  }

  // Replaces a random leaf of `ctx` (which is an arrow) by `x`.
  Type plant(const Type& ctx, const Type& x) {
    if (ctx.is_var()) return x;
    if (chance(0.5)) return Type::arrow(plant(ctx.left(), x), ctx.right());
    return Type::arrow(ctx.left(), plant(ctx.right(), x));
  }

  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
};

namespace detail {

inline void enumerate_nf(std::size_t n, std::vector<std::string>& scope, std::vector<LambdaTerm>& out);

// Neutral terms y N1 ... Nk with exactly n nodes.
inline void enumerate_neutral(std::size_t n, std::vector<std::string>& scope, std::vector<LambdaTerm>& out) {
  if (n == 1) {
    for (const auto& x : scope) out.push_back(LambdaTerm::var(x));
    return;
  }
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    std::vector<LambdaTerm> heads, args;
    enumerate_neutral(k, scope, heads);
    if (heads.empty()) continue;
    enumerate_nf(n - 1 - k, scope, args);
    for (const auto& h : heads)
      for (const auto& a : args) out.push_back(LambdaTerm::app(h, a));
  }
}

inline void enumerate_nf(std::size_t n, std::vector<std::string>& scope, std::vector<LambdaTerm>& out) {
  if (n == 0) return;
  enumerate_neutral(n, scope, out);
  if (n >= 2) {
    scope.push_back("x" + std::to_string(scope.size()));
    std::vector<LambdaTerm> bodies;
    enumerate_nf(n - 1, scope, bodies);
    for (const auto& b : bodies) out.push_back(LambdaTerm::abs(scope.back(), b));
    scope.pop_back();
  }
}

}  // namespace detail

// Every closed affine beta-normal form with at most `max_nodes` nodes, one per
// alpha class (binders are named by nesting depth).
inline std::vector<LambdaTerm> closed_affine_normal_forms(std::size_t max_nodes) {
  std::vector<LambdaTerm> all, out;
  std::vector<std::string> scope;
  for (std::size_t n = 1; n <= max_nodes; ++n) detail::enumerate_nf(n, scope, all);
  for (const auto& t : all)
    if (is_affine(t)) out.push_back(t);
  return out;
}

using Sample = std::variant<LambdaTerm, Type, std::pair<Type, Type>>;

inline std::vector<Sample> generate(const GenConfig& cfg) {
  Generator g(cfg.seed);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    switch (cfg.mode) {
      case GenMode::affine: out.emplace_back(g.affine_term(cfg.max_depth)); break;
      case GenMode::linear: out.emplace_back(g.linear_term(cfg.max_depth)); break;
      case GenMode::binary_type: out.emplace_back(g.binary_type(cfg.max_depth)); break;
      case GenMode::strictly_binary_pair: out.emplace_back(g.strictly_binary_pair(cfg.max_depth)); break;
    }
  }
  return out;
}

}  // namespace goi
