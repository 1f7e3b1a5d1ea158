// Command-line front end: parsing, translation, principal types, GoI
// denotations, trajectories, unification and the property harness.
//
// Exit status: 0 success, 1 failed check or semantic error, 2 usage or parse
// error.

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goi.hpp"

namespace {

bool use_color() {
  const char* env = std::getenv("GOI_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string styled(const std::string& s, bool ok) {
  if (!use_color()) return s;
  return (ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

bool looks_like_lambda(const std::string& src) {
  return src.find('\\') != std::string::npos;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_parse(const std::string& src) {
  if (looks_like_lambda(src)) {
    const goi::LambdaTerm m = goi::parse_lambda(src);
    std::cout << goi::to_string(m) << "\n";
    std::cout << "closed: " << yes_no(goi::is_closed(m)) << ", affine: " << yes_no(goi::is_affine(m))
              << ", linear: " << yes_no(goi::is_linear(m)) << "\n";
  } else {
    const goi::CLTerm m = goi::parse_cl(src);
    std::cout << goi::to_string(m) << "\n";
    std::cout << "closed: " << yes_no(goi::is_closed(m)) << "\n";
  }
  return 0;
}

int cmd_abstract(const std::string& src) {
  std::cout << goi::to_string(goi::to_cl(goi::parse_lambda(src))) << "\n";
  return 0;
}

int cmd_ptype(const std::string& src) {
  goi::Context ctx;
  goi::Type type;
  std::string subject;
  if (looks_like_lambda(src)) {
    const goi::Judgement j = goi::principal_type(goi::parse_lambda(src));
    ctx = j.ctx;
    type = j.type;
    subject = goi::to_string(j.subject);
  } else {
    const goi::CLTerm m = goi::parse_cl(src);
    const goi::Judgement j = goi::principal_type_cl(m);
    ctx = j.ctx;
    type = j.type;
    subject = goi::to_string(m);
  }
  if (ctx.empty()) {
    std::cout << goi::to_string(type) << "\n";
  } else {
    std::cout << goi::to_string(ctx) << " |- " << subject << " : " << goi::to_string(type) << "\n";
  }
  return 0;
}

goi::Involution denotation(const std::string& src) {
  if (looks_like_lambda(src)) return goi::goi_semantics_lambda(goi::parse_lambda(src));
  return goi::goi_semantics_cl(goi::parse_cl(src));
}

int cmd_goi(const std::string& src) {
  std::cout << goi::to_string(denotation(src));
  return 0;
}

int cmd_traj(const std::string& f, const std::string& g) {
  const auto ts = goi::trajectories(denotation(f), denotation(g));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) std::cout << "\n";
    std::cout << goi::to_string(ts[i]);
  }
  return 0;
}

int cmd_unify(const std::string& a, const std::string& b) {
  const auto u = goi::mgu(goi::parse_type(a), goi::parse_type(b));
  if (!u) {
    std::cout << "FAIL\n";
    return 1;
  }
  std::cout << goi::to_string(*u);
  return 0;
}

int cmd_goi_unify(const std::string& a, const std::string& b) {
  const goi::Type s = goi::parse_type(a);
  const goi::Type t = goi::parse_type(b);
  const goi::GoiUnification r = goi::goi_unifiable(s, t);
  if (!r.unifiable) {
    std::cout << "not unifiable" << (r.diverged ? " (diverged)" : "") << "\n";
    return 1;
  }
  std::cout << "unifiable\n";
  if (auto w = goi::goi_mgu(s, t)) std::cout << goi::to_string(*w);
  return 0;
}

int cmd_check(const std::string& src) {
  const goi::LambdaTerm m = goi::parse_lambda(src);
  const goi::Judgement j = goi::principal_type(m);
  const goi::Involution from_type = goi::involution_of_type(j.type);
  const goi::Involution from_goi = goi::goi_semantics_lambda(m);
  const bool ok = from_type == from_goi;
  std::cout << styled(ok ? "PASS" : "FAIL", ok) << "\n";
  std::cout << "principal type: " << goi::to_string(j.type) << "\n";
  std::cout << "involution of type:\n" << goi::to_string(from_type);
  std::cout << "denotation:\n" << goi::to_string(from_goi);
  return ok ? 0 : 1;
}

int cmd_fuzz(const std::string& property, std::uint64_t seed, std::size_t count, std::size_t depth) {
  const auto names = goi::property_names();
  if (std::find(names.begin(), names.end(), property) == names.end()) {
    std::cerr << "goi: unknown property: " << property << "\n";
    return 2;
  }
  const goi::CheckReport r = goi::run_property(property, goi::GenConfig{seed, count, depth, goi::GenMode::affine});
  std::cout << styled(r.passed() ? "PASS" : "FAIL", r.passed()) << " " << r.property << " (" << r.samples
            << " samples, " << r.failures.size() << " failures)\n";
  for (const auto& f : r.failures) {
    std::cout << "input:    " << f.input << "\n";
    std::cout << "expected: " << f.expected << "\n";
    std::cout << "actual:   " << f.actual << "\n";
  }
  return r.passed() ? 0 : 1;
}

std::string property_list() {
  std::string s;
  for (const auto& n : goi::property_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine lambda calculus, principal types and the GoI algebra of partial involutions"};
  app.require_subcommand(1);

  std::string a, b;
  int status = 0;

  auto* parse = app.add_subcommand("parse", "Parse and print a lambda or combinatory term");
  parse->add_option("term", a, "term")->required();
  parse->callback([&] { status = cmd_parse(a); });

  auto* abstr = app.add_subcommand("abstract", "Translate a lambda term to B, C, I, K");
  abstr->add_option("term", a, "lambda term")->required();
  abstr->callback([&] { status = cmd_abstract(a); });

  auto* ptype = app.add_subcommand("ptype", "Principal type of a lambda or combinatory term");
  ptype->add_option("term", a, "term")->required();
  ptype->callback([&] { status = cmd_ptype(a); });

  auto* goi_cmd = app.add_subcommand("goi", "Partial involution denoting a closed term");
  goi_cmd->add_option("term", a, "closed term")->required();
  goi_cmd->callback([&] { status = cmd_goi(a); });

  auto* traj = app.add_subcommand("traj", "Trajectories of the application of two closed terms");
  traj->add_option("fun", a, "operator")->required();
  traj->add_option("arg", b, "operand")->required();
  traj->callback([&] { status = cmd_traj(a, b); });

  auto* unify = app.add_subcommand("unify", "Most general unifier of two types");
  unify->add_option("left", a, "type")->required();
  unify->add_option("right", b, "type")->required();
  unify->callback([&] { status = cmd_unify(a, b); });

  auto* gunify = app.add_subcommand("goi-unify", "Unification through involutions (every variable twice)");
  gunify->add_option("left", a, "type")->required();
  gunify->add_option("right", b, "type")->required();
  gunify->callback([&] { status = cmd_goi_unify(a, b); });

  auto* check = app.add_subcommand("check", "Compare the denotation of a term with the involution of its principal type");
  check->add_option("term", a, "closed affine lambda term")->required();
  check->callback([&] { status = cmd_check(a); });

  std::string property;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t depth = 5;
  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded property check");
  fuzz->add_option("--property", property, "one of: " + property_list())->required();
  fuzz->add_option("--seed", seed, "generator seed")->capture_default_str();
  fuzz->add_option("--count", count, "number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  fuzz->add_option("--depth", depth, "maximum depth (node bound for nf-determination)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->callback([&] { status = cmd_fuzz(property, seed, count, depth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const goi::ParseError& e) {
    std::cerr << "goi: " << e.what() << "\n";
    return 2;
  } catch (const goi::Error& e) {
    std::cerr << "goi: " << e.what() << "\n";
    return 1;
  }
  return status;
}
