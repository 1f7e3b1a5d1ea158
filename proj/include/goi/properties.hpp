#pragma once

// Seeded property checks tying the modules together. Each property draws
// cfg.count samples of depth at most cfg.max_depth from a generator keyed by
// cfg.seed; cfg.mode is not consulted (every property knows what it samples).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goi/combinatory.hpp"
#include "goi/error.hpp"
#include "goi/generate.hpp"
#include "goi/goi_unify.hpp"
#include "goi/inference.hpp"
#include "goi/involution.hpp"
#include "goi/lambda.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"

namespace goi {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string property;
  std::size_t samples = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

// Result of one sample: nullopt when it holds.
using Outcome = std::optional<Failure>;

inline Outcome failed(std::string input, std::string expected, std::string actual) {
  return Failure{std::move(input), std::move(expected), std::move(actual)};
}

inline std::string judgement_types(const Judgement& j) {
  std::string c = to_string(j.ctx);
  return (c.empty() ? "" : c + " |- ") + to_string(j.type);
}

// Principal type invariance along a reduction sequence.
inline Outcome conversion_sample(const LambdaTerm& m, ReductionMode mode) {
  const Judgement j = principal_type(m);
  LambdaTerm t = m;
  while (auto next = reduce_step(t, mode)) {
    t = *next;
    const Judgement k = principal_type(t);
    if (!equal_up_to_renaming(j, k)) return failed(to_string(m) + "  ~>  " + to_string(t), judgement_types(j), judgement_types(k));
  }
  return std::nullopt;
}

inline Outcome main_theorem(Generator& g, std::size_t depth) {
  const LambdaTerm m = g.affine_term(depth);
  const Involution expected = involution_of_type(principal_type(m).type);
  const Involution actual = goi_semantics_lambda(m);
  if (expected == actual) return std::nullopt;
  return failed(to_string(m), to_string(expected), to_string(actual));
}

inline Outcome abstraction(Generator& g, std::size_t depth) {
  const CLTerm m = g.cl_term(depth, {"x", "y", "z"}, {"x"});
  const CLTerm n = g.cl_term(std::max<std::size_t>(1, depth / 2), {});
  const CLTerm lhs = cl_normalize(CLTerm::app(abstract("x", m), n));
  const CLTerm rhs = cl_normalize(substitute(m, "x", n));
  if (lhs == rhs) return std::nullopt;
  return failed("x = " + to_string(n) + ", M = " + to_string(m), to_string(rhs), to_string(lhs));
}

inline Outcome bck_laws(Generator& g, std::size_t depth) {
  const LambdaTerm tx = g.affine_term(depth), ty = g.affine_term(depth), tz = g.affine_term(depth);
  const Involution x = goi_semantics_lambda(tx), y = goi_semantics_lambda(ty), z = goi_semantics_lambda(tz);
  const std::string input = "x = " + to_string(tx) + ", y = " + to_string(ty) + ", z = " + to_string(tz);
  auto app = [](const Involution& f, const Involution& a) { return linear_apply(f, a); };
  const Involution b = base_denotation(Combinator::B), c = base_denotation(Combinator::C);
  const Involution i = base_denotation(Combinator::I), k = base_denotation(Combinator::K);
  struct Law {
    const char* name;
    Involution lhs, rhs;
  };
  const Law laws[] = {
      {"B x y z = x (y z)", app(app(app(b, x), y), z), app(x, app(y, z))},
      {"C x y z = x z y", app(app(app(c, x), y), z), app(app(x, z), y)},
      {"I x = x", app(i, x), x},
      {"K x y = x", app(app(k, x), y), x},
  };
  for (const auto& law : laws)
    if (!(law.lhs == law.rhs)) return failed(std::string(law.name) + " with " + input, to_string(law.rhs), to_string(law.lhs));
  return std::nullopt;
}

inline Outcome unif_equivalence(Generator& g, std::size_t depth) {
  const auto [s, t] = g.strictly_binary_pair(depth);
  const std::string input = to_string(s) + "  =?=  " + to_string(t);
  const auto m = mgu(s, t);
  const GoiUnification gu = goi_unifiable(s, t);
  if (gu.unifiable != m.has_value())
    return failed(input, m ? "unifiable" : "not unifiable", gu.unifiable ? "GoI unifiable" : "not GoI unifiable");
  const auto w = goi_mgu(s, t);
  if (w.has_value() != m.has_value()) return failed(input, m ? "unifier" : "FAIL", w ? to_string(*w) : "FAIL");
  if (!m) return std::nullopt;
  std::set<std::string> vars = vars_of(s);
  vars.merge(vars_of(t));
  if (!equivalent_on(vars, *m, *w)) return failed(input, to_string(*m), to_string(*w));
  return std::nullopt;
}

inline Outcome resolution_lemma(Generator& g, std::size_t depth) {
  const auto [st, t] = g.resolution_instance(depth);
  const std::string input = to_string(st) + "  .  " + to_string(t);
  const auto u = mgu(st.left(), t);
  if (!u) return failed(input, "unifiable operands", "mgu failed");
  const Involution expected = involution_of_type(u->apply(st.right()));
  const Involution actual = linear_apply(involution_of_type(st), involution_of_type(t));
  if (expected == actual) return std::nullopt;
  return failed(input, to_string(expected), to_string(actual));
}

inline std::size_t total_count(const Judgement& j, std::map<std::string, int>& counts) {
  for (const auto& [x, t] : j.ctx) count_vars(t, counts);
  count_vars(j.type, counts);
  return counts.size();
}

inline LambdaTerm random_subterm(Generator& g, const LambdaTerm& m) {
  std::vector<LambdaTerm> all;
  std::function<void(const LambdaTerm&)> walk = [&](const LambdaTerm& t) {
    all.push_back(t);
    if (t.is_abs()) walk(t.body());
    if (t.is_app()) {
      walk(t.fun());
      walk(t.arg());
    }
  };
  walk(m);
  return all[g.below(all.size())];
}

inline Outcome binary_judgements(Generator& g, std::size_t depth) {
  const LambdaTerm m = g.affine_term(depth);
  for (const LambdaTerm& t : {m, random_subterm(g, m)}) {
    const Judgement j = principal_type(t);
    std::map<std::string, int> counts;
    total_count(j, counts);
    for (const auto& [v, n] : counts)
      if (n > 2) return failed(to_string(t), "every variable at most twice", to_string(j));
  }
  return std::nullopt;
}

inline Outcome translation_invariance(Generator& g, std::size_t depth) {
  const LambdaTerm m = g.affine_term(depth);
  const Judgement a = principal_type(m);
  const Judgement b = principal_type_cl(to_cl(m));
  if (equal_up_to_renaming(a, Judgement{b.ctx, a.subject, b.type})) return std::nullopt;
  return failed(to_string(m), judgement_types(a), judgement_types(b));
}

inline Outcome mgu_oracle(Generator& g, std::size_t depth) {
  const SkeletonPair p = g.skeleton_pair(depth);
  const std::string input = to_string(p.left) + "  =?=  " + to_string(p.right);
  const auto u = mgu(p.left, p.right);
  if (!u) return failed(input, "a unifier", "FAIL");
  if (!(u->apply(p.left) == u->apply(p.right))) return failed(input, "a unifier", to_string(*u));
  if (!is_idempotent(*u)) return failed(input, "idempotent", to_string(*u));
  if (!more_general(*u, p.instance)) return failed(input, "more general than\n" + to_string(p.instance), to_string(*u));
  return std::nullopt;
}

inline Outcome occurs_check(Generator& g, std::size_t depth) {
  const auto [s, t] = g.occurs_check_pair(depth);
  const auto u = mgu(s, t);
  if (!u) return std::nullopt;
  return failed(to_string(s) + "  =?=  " + to_string(t), "FAIL", to_string(*u));
}

// Instances of principal judgements of normal forms pass the direct checker.
inline Outcome simple_soundness(Generator& g, std::size_t depth) {
  const LambdaTerm m = normalize(g.affine_term(depth));
  const Judgement j = principal_type(m);
  std::set<std::string> vars = vars_of(j.type);
  for (const auto& [x, t] : j.ctx) vars.merge(vars_of(t));
  Substitution u;
  for (const auto& v : vars)
    if (g.chance(0.5)) u.bind(v, g.random_type(2, 3, "u"));
  const Judgement k = apply(u, j);
  if (derives_simple(k.ctx, k.subject, k.type)) return std::nullopt;
  return failed(to_string(m), "derivable: " + judgement_types(k), "rejected");
}

inline const std::map<std::string, std::function<Outcome(Generator&, std::size_t)>>& samplers() {
  static const std::map<std::string, std::function<Outcome(Generator&, std::size_t)>> table = {
      {"main-theorem", main_theorem},
      {"abstraction", abstraction},
      {"toplevel-conversion",
       [](Generator& g, std::size_t d) { return conversion_sample(g.affine_term(d), ReductionMode::top_level); }},
      {"linear-conversion",
       [](Generator& g, std::size_t d) { return conversion_sample(g.linear_term(d), ReductionMode::full); }},
      {"affine-full-reduction",
       [](Generator& g, std::size_t d) { return conversion_sample(g.affine_term(d), ReductionMode::full); }},
      {"bck-laws", bck_laws},
      {"unif-equivalence", unif_equivalence},
      {"resolution-lemma", resolution_lemma},
      {"binary-judgements", binary_judgements},
      {"translation-invariance", translation_invariance},
      {"mgu-oracle", mgu_oracle},
      {"occurs-check", occurs_check},
      {"simple-soundness", simple_soundness},
  };
  return table;
}

// Canonical principal types of all closed affine normal forms up to
// `max_nodes` nodes are pairwise distinct.
inline CheckReport nf_determination(std::size_t max_nodes) {
  CheckReport r{"nf-determination", 0, {}};
  std::map<std::string, LambdaTerm> seen;
  for (const auto& m : closed_affine_normal_forms(max_nodes)) {
    ++r.samples;
    const std::string key = to_string(principal_type(m).type);
    auto [it, inserted] = seen.emplace(key, m);
    if (!inserted) r.failures.push_back({to_string(it->second) + "  vs  " + to_string(m), "distinct principal types", key});
  }
  return r;
}

}  // namespace detail

// The fixed witness against full subject conversion in the affine calculus.
inline LambdaTerm affine_reduction_witness() { return parse_lambda("\\x.\\y.\\z. (\\w. x) (y z)"); }

inline std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& [n, f] : detail::samplers()) names.push_back(n);
  names.push_back("nf-determination");
  std::sort(names.begin(), names.end());
  return names;
}

// Runs a named property. For nf-determination the depth is the node bound and
// seed and count are unused. affine-full-reduction is expected to fail: its
// first sample is the fixed witness.
inline CheckReport run_property(const std::string& name, const GenConfig& cfg) {
  if (name == "nf-determination") return detail::nf_determination(cfg.max_depth);
  const auto& table = detail::samplers();
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown property: " + name);
  CheckReport r{name, 0, {}};
  Generator g(cfg.seed);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    ++r.samples;
    detail::Outcome o;
    try {
      if (name == "affine-full-reduction" && i == 0) {
        o = detail::conversion_sample(affine_reduction_witness(), ReductionMode::full);
      } else {
        o = it->second(g, cfg.max_depth);
      }
    } catch (const Error& e) {
      o = Failure{"sample " + std::to_string(i), "no error", e.what()};
    }
    if (o) r.failures.push_back(*o);
  }
  std::sort(r.failures.begin(), r.failures.end(),
            [](const Failure& a, const Failure& b) { return a.input < b.input; });
  return r;
}

}  // namespace goi
