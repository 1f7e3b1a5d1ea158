#pragma once

// Principal type inference for affine terms, combinator types, judgement
// comparison and a direct checker for simple typings of normal forms.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goi/combinatory.hpp"
#include "goi/error.hpp"
#include "goi/lambda.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"

namespace goi {

using Context = std::map<std::string, Type>;

struct Judgement {
  Context ctx;
  LambdaTerm subject;
  Type type;
};

inline std::string to_string(const Context& ctx) {
  std::string s;
  for (const auto& [x, t] : ctx) {
    if (!s.empty()) s += ", ";
    s += x + ": " + to_string(t);
  }
  return s;
}

// "x1: T1, x2: T2 |- M : T"
inline std::string to_string(const Judgement& j) {
  std::string c = to_string(j.ctx);
  return (c.empty() ? "" : c + " ") + "|- " + to_string(j.subject) + " : " + to_string(j.type);
}

// Type variables renamed t0, t1, ... in order of first occurrence, scanning the
// context (sorted by term variable) and then the type.
inline Judgement canonical_rename(const Judgement& j) {
  std::map<std::string, std::string> names;
  Judgement out{{}, j.subject, Type()};
  for (const auto& [x, t] : j.ctx) out.ctx.emplace(x, rename_in_order(t, names));
  out.type = rename_in_order(j.type, names);
  return out;
}

// Some U with U(j1.ctx) = j2.ctx and U(j1.type) = j2.type.
inline std::optional<Substitution> instance_witness(const Judgement& j1, const Judgement& j2) {
  if (j1.ctx.size() != j2.ctx.size()) return std::nullopt;
  std::vector<Type> pats, targets;
  for (auto a = j1.ctx.begin(), b = j2.ctx.begin(); a != j1.ctx.end(); ++a, ++b) {
    if (a->first != b->first) return std::nullopt;
    pats.push_back(a->second);
    targets.push_back(b->second);
  }
  pats.push_back(j1.type);
  targets.push_back(j2.type);
  return match(pats, targets);
}

inline bool is_instance(const Judgement& j1, const Judgement& j2) {
  return instance_witness(j1, j2).has_value();
}

inline bool equal_up_to_renaming(const Judgement& j1, const Judgement& j2) {
  if (j1.ctx.size() != j2.ctx.size()) return false;
  std::vector<Type> a, b;
  for (auto x = j1.ctx.begin(), y = j2.ctx.begin(); x != j1.ctx.end(); ++x, ++y) {
    if (x->first != y->first) return false;
    a.push_back(x->second);
    b.push_back(y->second);
  }
  a.push_back(j1.type);
  b.push_back(j2.type);
  return equal_up_to_renaming(a, b);
}

inline Type combinator_principal_type(Combinator k) {
  switch (k) {
    case Combinator::B: return canonical(parse_type("(a -> b) -> (c -> a) -> c -> b"));
    case Combinator::C: return canonical(parse_type("(a -> b -> c) -> b -> a -> c"));
    case Combinator::I: return canonical(parse_type("a -> a"));
    case Combinator::K: return canonical(parse_type("a -> b -> a"));
  }
  return {};
}

// ---------------------------------------------------------------------------
// The system ⊩

namespace detail {

struct Typing {
  Context ctx;
  Type type;
};

// Internal names cannot be produced by the type parser, so they never clash
// with user-supplied types.
inline FreshSupply internal_supply() { return FreshSupply("#"); }

inline Type freshen(const Type& t, std::map<std::string, std::string>& names, FreshSupply& z) {
  if (t.is_var()) {
    auto it = names.find(t.name());
    if (it == names.end()) it = names.emplace(t.name(), z.next()).first;
    return Type::var(it->second);
  }
  Type l = freshen(t.left(), names, z);
  return Type::arrow(l, freshen(t.right(), names, z));
}

inline Typing var_rule(const std::string& x, FreshSupply& z) {
  Type a = z.fresh();
  return {{{x, a}}, a};
}

// (app): U' = MGU(σ, α ⊸ β), U = MGU(U'(α), τ); result U∘U'(Γ, Δ) ⊩ MN : U∘U'(β).
inline Typing app_rule(const Typing& f, const Typing& a, FreshSupply& z, const std::string& what) {
  for (const auto& [x, t] : a.ctx) {
    if (f.ctx.count(x) != 0)
      throw PreconditionError("free variable " + x + " occurs more than once in " + what);
  }
  const Type alpha = z.fresh();
  const Type beta = z.fresh();
  auto u1 = mgu(f.type, Type::arrow(alpha, beta));
  if (!u1) throw PreconditionError("not typable: " + what);
  auto u2 = mgu(u1->apply(alpha), a.type);
  if (!u2) throw PreconditionError("not typable: " + what);
  const Substitution u = compose(*u2, *u1);
  Typing out;
  for (const auto& [x, t] : f.ctx) out.ctx.emplace(x, u.apply(t));
  for (const auto& [x, t] : a.ctx) out.ctx.emplace(x, u.apply(t));
  out.type = u.apply(beta);
  return out;
}

inline Typing infer(const LambdaTerm& m, FreshSupply& z) {
  switch (m.kind()) {
    case LambdaTerm::Kind::var: return var_rule(m.name(), z);
    case LambdaTerm::Kind::abs: {
      Typing b = infer(m.body(), z);
      auto it = b.ctx.find(m.name());
      if (it != b.ctx.end()) {  // (abs)
        Type from = it->second;
        b.ctx.erase(it);
        return {std::move(b.ctx), Type::arrow(from, b.type)};
      }
      return {std::move(b.ctx), Type::arrow(z.fresh(), b.type)};  // (abs_∅)
    }
    case LambdaTerm::Kind::app: {
      Typing f = infer(m.fun(), z);
      Typing a = infer(m.arg(), z);
      return app_rule(f, a, z, to_string(m));
    }
  }
  return {};
}

inline Typing infer_cl(const CLTerm& m, FreshSupply& z) {
  switch (m.kind()) {
    case CLTerm::Kind::var: return var_rule(m.name(), z);
    case CLTerm::Kind::comb: {
      std::map<std::string, std::string> names;
      return {{}, freshen(combinator_principal_type(m.combinator()), names, z)};
    }
    case CLTerm::Kind::app: {
      Typing f = infer_cl(m.fun(), z);
      Typing a = infer_cl(m.arg(), z);
      return app_rule(f, a, z, to_string(m));
    }
  }
  return {};
}

}  // namespace detail

// Principal judgement of an affine term, canonically renamed. Free variables
// must occur at most once.
inline Judgement principal_type(const LambdaTerm& m) {
  if (!is_affine(m)) throw PreconditionError("principal_type: term is not affine: " + to_string(m));
  FreshSupply z = detail::internal_supply();
  detail::Typing t = detail::infer(m, z);
  return canonical_rename({std::move(t.ctx), m, std::move(t.type)});
}

// Principal judgement computed on combinator structure; the subject is the
// lambda image of `m`.
inline Judgement principal_type_cl(const CLTerm& m) {
  FreshSupply z = detail::internal_supply();
  detail::Typing t = detail::infer_cl(m, z);
  return canonical_rename({std::move(t.ctx), to_lambda(m), std::move(t.type)});
}

// ---------------------------------------------------------------------------
// Direct checker for Γ ⊢ M : τ on normal forms

namespace detail {

inline Context restrict_ctx(const Context& ctx, const std::set<std::string>& keep) {
  Context out;
  for (const auto& x : keep) {
    auto it = ctx.find(x);
    if (it != ctx.end()) out.emplace(x, it->second);
  }
  return out;
}

inline bool check_nf(const Context& ctx, const LambdaTerm& m, const Type& t);

// Type of a neutral term y N1 ... Nk, checking the arguments on the way.
inline std::optional<Type> synth_nf(const Context& ctx, const LambdaTerm& m) {
  if (m.is_var()) {
    auto it = ctx.find(m.name());
    if (it == ctx.end()) return std::nullopt;
    return it->second;
  }
  if (!m.is_app() || m.fun().is_abs()) return std::nullopt;
  const auto ff = free_vars(m.fun());
  const auto fa = free_vars(m.arg());
  for (const auto& x : fa)
    if (ff.count(x) != 0) return std::nullopt;
  auto f = synth_nf(restrict_ctx(ctx, ff), m.fun());
  if (!f || f->is_var()) return std::nullopt;
  if (!check_nf(restrict_ctx(ctx, fa), m.arg(), f->left())) return std::nullopt;
  return f->right();
}

inline bool check_nf(const Context& ctx, const LambdaTerm& m, const Type& t) {
  if (m.is_abs()) {
    if (t.is_var()) return false;
    Context inner = ctx;
    inner.erase(m.name());
    if (occurrence_count(m.name(), m.body()) > 0) inner.insert_or_assign(m.name(), t.left());
    return check_nf(inner, m.body(), t.right());
  }
  auto s = synth_nf(ctx, m);
  return s && *s == t;
}

}  // namespace detail

// Γ ⊢ M : τ for an affine normal form M, with dom(Γ) = FV(M). Independent of
// principal type inference.
inline bool derives_simple(const Context& ctx, const LambdaTerm& m, const Type& t) {
  if (!is_affine(m) || !is_normal_form(m)) {
    throw PreconditionError("derives_simple: expects an affine normal form: " + to_string(m));
  }
  const auto fv = free_vars(m);
  if (ctx.size() != fv.size()) return false;
  for (const auto& x : fv)
    if (ctx.count(x) == 0) return false;
  return detail::check_nf(ctx, m, t);
}

inline Judgement apply(const Substitution& u, const Judgement& j) {
  Judgement out{{}, j.subject, u.apply(j.type)};
  for (const auto& [x, t] : j.ctx) out.ctx.emplace(x, u.apply(t));
  return out;
}

}  // namespace goi
