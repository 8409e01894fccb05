#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "bindlog/demos.hpp"
#include "bindlog/lterm_io.hpp"
#include "bindlog/precook.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/proof_io.hpp"
#include "bindlog/sigma.hpp"
#include "bindlog/sigma_model.hpp"
#include "bindlog/syntax_io.hpp"
#include "bindlog/table_model.hpp"

using namespace bindlog;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string sig_path;
  std::size_t step_budget = 1'000'000;
  std::size_t probe_budget = 300;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool json = false;
};

/// What a command reports: text lines, a machine summary, and an exit code.
struct Outcome {
  int code = 0;
  std::vector<std::string> lines;
  json summary = json::object();

  void say(std::string s) { lines.push_back(std::move(s)); }
};

Signature signature(const RunConfig& cfg) {
  return cfg.sig_path.empty() ? Signature{} : load_signature(cfg.sig_path);
}

/// "@path" reads the argument from a file.
std::string text_arg(const std::string& s) {
  if (!s.empty() && s[0] == '@') {
    std::string t = read_file(s.substr(1));
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
    return t;
  }
  return s;
}

BindingModel model_by_name(const std::string& name, const RunConfig& cfg) {
  if (name == "ext") return ext_counter_model();
  if (name == "delta") return delta_model(cfg.probe_budget);
  if (name == "delta-doubling") return delta_model(cfg.probe_budget, DeltaCoding::Doubling);
  if (name.rfind("fullfn:", 0) == 0) {
    std::string n = name.substr(7);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoul(n) == 0)
      throw Error(ErrorCode::ParseError, "fullfn needs a positive size, got '" + n + "'");
    return full_function_model(static_cast<unsigned>(std::stoul(n)));
  }
  return load_model_table(name);
}

Outcome cmd_parse(const RunConfig& cfg, const std::string& lang, const std::string& prop, const std::string& term) {
  Outcome o;
  Signature sig = signature(cfg);
  const bool lprime = lang == "lprime";
  if (!term.empty()) {
    if (lprime) {
      LTerm t = parse_lterm(sig, text_arg(term));
      Sort s = sort_of(sig, t);
      o.say(print(t));
      o.say("sort " + s.str());
      o.summary["printed"] = print(t);
      o.summary["sort"] = s.str();
    } else {
      Term t = parse_term(sig, text_arg(term));
      auto wf = well_formed(sig, t);
      if (!wf) throw Error(wf.error().code, wf.error().detail, wf.error().path);
      o.say(print(t));
      o.say("nameless " + to_debruijn(t).repr);
      o.summary["printed"] = print(t);
      o.summary["nameless"] = to_debruijn(t).repr;
    }
    return o;
  }
  if (lprime) {
    LProp a = parse_lprop(sig, text_arg(prop));
    auto ok = sort_check(sig, a);
    if (!ok) throw Error(ok.error().code, ok.error().detail, ok.error().path);
    o.say(print(a));
    o.summary["printed"] = print(a);
  } else {
    Prop a = parse_prop(sig, text_arg(prop));
    auto wf = well_formed(sig, a);
    if (!wf) throw Error(wf.error().code, wf.error().detail, wf.error().path);
    o.say(print(a));
    o.say("nameless " + to_debruijn(a).repr);
    o.summary["printed"] = print(a);
    o.summary["nameless"] = to_debruijn(a).repr;
  }
  return o;
}

Congruence congruence_for(const Signature& sig, const std::string& modulo, std::size_t budget) {
  if (modulo == "sigma") return Congruence(sigma_system(sig), budget);
  if (modulo == "none") return Congruence();
  return Congruence(load_rules(sig, modulo), budget);
}

Outcome cmd_check(const RunConfig& cfg, const std::string& path, const std::string& modulo) {
  Outcome o;
  Signature sig = signature(cfg);
  CheckResult r;
  std::size_t nodes = 0, height = 0;
  if (modulo.empty()) {
    ProofTree p = load_proof(sig, path);
    nodes = p.node_count();
    height = p.height();
    r = check_binding_proof(sig, p);
  } else {
    LProofTree p = load_lproof(sig, path);
    nodes = p.node_count();
    height = p.height();
    r = check_modulo_proof(sig, congruence_for(sig, modulo, cfg.step_budget), p);
  }
  o.summary["nodes"] = nodes;
  o.summary["height"] = height;
  if (r) {
    o.say(path + ": ok (" + std::to_string(nodes) + " nodes, height " + std::to_string(height) + ")");
  } else {
    o.code = 1;
    o.say(path + ": invalid: " + r.error().str());
    o.summary["error"] = r.error().str();
  }
  return o;
}

Outcome cmd_normalize(const RunConfig& cfg, const std::string& system, const std::string& strategy,
                      const std::string& term, const std::string& prop) {
  Outcome o;
  Signature sig = signature(cfg);
  RewriteSystem rs = system == "sigma" ? sigma_system(sig) : load_rules(sig, system);
  NormalizeOptions opts{cfg.step_budget, strategy == "outermost" ? Strategy::Outermost : Strategy::Innermost, false};
  if (!prop.empty()) {
    LProp in = parse_lprop(sig, text_arg(prop));
    if (CheckResult r = sort_check(sig, in); !r) throw Error(r.error().code, r.error().detail, r.error().path);
    LProp a = normalize(rs, in, opts);
    o.say(print(a));
    o.summary["normal_form"] = print(a);
    return o;
  }
  LTerm in = parse_lterm(sig, text_arg(term));
  sort_of(sig, in);
  Normalized n = normalize_counted(rs, in, opts);
  o.say(print(n.term));
  o.say("steps " + std::to_string(n.steps));
  o.summary["normal_form"] = print(n.term);
  o.summary["steps"] = n.steps;
  return o;
}

Outcome cmd_precook(const RunConfig& cfg, const std::string& prop, const std::string& term, const std::string& ctx) {
  Outcome o;
  Signature sig = signature(cfg);
  if (!term.empty()) {
    VarContext l;
    std::stringstream ss(ctx);
    for (std::string v; std::getline(ss, v, ',');)
      if (!v.empty()) l.push_back(v);
    LTerm t = precook(sig, parse_term(sig, text_arg(term)), l);
    o.say(print(t));
    o.summary["lprime"] = print(t);
    return o;
  }
  LProp a = precook_prop(sig, parse_prop(sig, text_arg(prop)));
  o.say(print(a));
  o.summary["lprime"] = print(a);
  return o;
}

Outcome cmd_translate(const RunConfig& cfg, const std::string& path, const std::string& out) {
  Outcome o;
  Signature sig = signature(cfg);
  LProofTree t = translate_proof(sig, load_proof(sig, path));
  std::string text = print(t);
  if (out.empty()) {
    std::string s = text;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    o.say(s);
  } else {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out);
    f << text;
    o.say("wrote " + out);
  }
  o.summary["nodes"] = t.node_count();
  o.summary["height"] = t.height();
  return o;
}

Outcome cmd_eval(const RunConfig& cfg, const std::string& model, const std::string& prop, const std::string& term,
                 bool exact) {
  Outcome o;
  BindingModel m = model_by_name(model, cfg);
  if (!term.empty()) {
    Element e = eval_term(m, parse_term(m.sig, text_arg(term)), {}, {});
    o.say("⟦" + text_arg(term) + "⟧ = " + m.ifs->show(e, 0));
    o.summary["value"] = m.ifs->show(e, 0);
    return o;
  }
  Prop a = parse_prop(m.sig, text_arg(prop));
  auto wf = well_formed(m.sig, a);
  if (!wf) throw Error(wf.error().code, wf.error().detail, wf.error().path);
  Truth t = eval_prop(m, a, {}, {.require_exact = exact});
  o.say(print(a) + ": " + t.str());
  o.summary["verdict"] = t.str();
  o.code = t.value ? 0 : 1;
  return o;
}

Outcome cmd_verify(const RunConfig& cfg, const std::string& model, const std::string& bounds, bool sampled) {
  Outcome o;
  BindingModel m = model_by_name(model, cfg);
  unsigned b[3] = {2, 2, 2};
  {
    std::stringstream ss(bounds);
    std::string v;
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(ss, v, ',') || v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::ParseError, "--bounds expects n,p,q, got '" + bounds + "'");
      b[i] = static_cast<unsigned>(std::stoul(v));
    }
  }
  SweepOptions so{sampled ? SweepMode::Sampled : SweepMode::Exhaustive, cfg.samples, cfg.seed};
  bool ok = true;
  auto report = [&](const std::string& what, const SweepReport& r) {
    ok = ok && r.ok();
    std::string s = r.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    o.say(what + ": " + s);
    o.summary[what] = {{"instances", r.instances}, {"violations", r.violation_count}, {"exact", r.exact}};
  };
  report("ifs", check_ifs(*m.ifs, b[0], b[1], b[2], so));
  for (const auto& [f, ar] : m.sig.functions()) {
    unsigned mk = 0;
    for (unsigned k : ar) mk = std::max(mk, k);
    unsigned p = b[1], q = b[2];
    if (!sampled) {
      // Keep every touched level within the enumerated carriers.
      while (m.ifs->carrier(p + mk + (ar == BindingArity{1} ? 1 : 0)) == std::nullopt && p > 0) --p;
      while (m.ifs->carrier(q + mk) == std::nullopt && q > 0) --q;
    }
    report("coherence " + f, check_coherence(m, f, p, q, so));
    if (ar == BindingArity{1}) report("absorption " + f, check_absorption(m, f, q, so));
  }
  auto n = sigma_model_from_binding(m);
  unsigned level = 4;
  if (auto top = m.ifs->max_level()) {
    unsigned mk = 0;
    for (const auto& [f, ar] : m.sig.functions())
      for (unsigned k : ar) mk = std::max(mk, k);
    level = std::min(level, *top > mk ? *top - mk : 0u);
  }
  report("sigma rules", check_sigma_rules(*n, std::max<std::size_t>(cfg.samples / 10, 1), cfg.seed, level));
  o.code = ok ? 0 : 1;
  return o;
}

Outcome cmd_demo(const RunConfig& cfg, const std::string& which) {
  Outcome o;
  DemoReport r;
  if (which == "extensionality") r = extensionality_demo(ext_counter_model());
  else if (which == "disjoint-sum") r = disjoint_sum_demo(delta_model(cfg.probe_budget), cfg.samples, cfg.seed);
  else throw Error(ErrorCode::ParseError, "unknown demo '" + which + "'");
  o.lines = r.lines;
  o.summary["lines"] = r.lines;
  o.code = r.ok ? 0 : 1;
  return o;
}

Outcome cmd_probe(const RunConfig& cfg) {
  Outcome o;
  Signature sig = signature(cfg);
  RewriteSystem rs = sigma_system(sig);
  ProbeOptions po{cfg.samples, 40, cfg.seed, cfg.step_budget};
  TerminationReport t = termination_probe(rs, po);
  ConfluenceReport c = local_confluence_probe(rs, po);
  for (const std::string& s : {t.str(), c.str()}) {
    std::stringstream ss(s);
    for (std::string line; std::getline(ss, line);) o.say(line);
  }
  o.summary["termination_ok"] = t.ok();
  o.summary["confluence_ok"] = c.ok();
  o.code = t.ok() && c.ok() ? 0 : 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bindlog: binding logic, explicit substitutions and binding models"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--sig", cfg.sig_path, "signature file (.sig)");
  app.add_option("--seed", cfg.seed, "random seed (BINDLOG_SEED overrides)");
  app.add_option("--step-budget", cfg.step_budget, "rewrite step budget")->check(CLI::PositiveNumber);
  app.add_option("--probe-budget", cfg.probe_budget, "probe tuples for computable elements")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "machine-readable summary");

  std::string lang = "binding", prop, term, modulo, system = "sigma", strategy = "innermost", ctx, out, model,
              bounds = "2,2,2", which, proof;
  bool exact = false, sampled = false;

  auto* parse = app.add_subcommand("parse", "parse and print a term or proposition");
  parse->add_option("--lang", lang, "binding | lprime")->check(CLI::IsMember({"binding", "lprime"}));
  auto* pg = parse->add_option_group("input")->require_option(1);
  pg->add_option("--prop", prop, "proposition text or @file");
  pg->add_option("--term", term, "term text or @file");

  auto* check = app.add_subcommand("check-proof", "check a proof file");
  check->add_option("proof", proof, "proof file (.prf)")->required();
  check->add_option("--modulo", modulo, "sigma | none | rules file (.rw); the proof is then in L' syntax");

  auto* norm = app.add_subcommand("normalize", "normalize an L' term or proposition");
  norm->add_option("--system", system, "sigma | rules file (.rw)");
  norm->add_option("--strategy", strategy)->check(CLI::IsMember({"innermost", "outermost"}));
  auto* ng = norm->add_option_group("input")->require_option(1);
  ng->add_option("--term", term, "L' term text or @file");
  ng->add_option("--prop", prop, "L' proposition text or @file");

  auto* pre = app.add_subcommand("precook", "translate into L'");
  auto* prg = pre->add_option_group("input")->require_option(1);
  prg->add_option("--prop", prop, "proposition text or @file");
  prg->add_option("--term", term, "term text or @file");
  pre->add_option("--context", ctx, "bound variables for --term, innermost first, comma separated");

  auto* tr = app.add_subcommand("translate-proof", "translate a binding-logic proof into a proof modulo sigma");
  tr->add_option("proof", proof, "proof file (.prf)")->required();
  tr->add_option("-o,--output", out, "output file");

  auto* ev = app.add_subcommand("eval", "evaluate in a model");
  ev->add_option("--model", model, "ext | delta | delta-doubling | fullfn:<size> | table file (.mdl)")->required();
  auto* eg = ev->add_option_group("input")->require_option(1);
  eg->add_option("--prop", prop, "closed proposition text or @file");
  eg->add_option("--term", term, "closed term text or @file");
  ev->add_flag("--exact", exact, "refuse sampled quantifiers");

  auto* vm = app.add_subcommand("verify-model", "check the structure, coherence and sigma laws of a model");
  vm->add_option("--model", model, "ext | delta | delta-doubling | fullfn:<size> | table file (.mdl)")->required();
  vm->add_option("--bounds", bounds, "n,p,q");
  vm->add_flag("--sampled", sampled, "random instances instead of exhaustive enumeration");

  auto* demo = app.add_subcommand("demo", "independence demonstrations");
  demo->add_option("which", which, "extensionality | disjoint-sum")
      ->required()
      ->check(CLI::IsMember({"extensionality", "disjoint-sum"}));

  auto* probe = app.add_subcommand("probe", "termination and local confluence probes for sigma");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("BINDLOG_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: BINDLOG_SEED is not a number\n";
      return 2;
    }
  }

  Outcome o;
  std::string name = app.get_subcommands().front()->get_name();
  try {
    if (parse->parsed()) o = cmd_parse(cfg, lang, prop, term);
    else if (check->parsed()) o = cmd_check(cfg, proof, modulo);
    else if (norm->parsed()) o = cmd_normalize(cfg, system, strategy, term, prop);
    else if (pre->parsed()) o = cmd_precook(cfg, prop, term, ctx);
    else if (tr->parsed()) o = cmd_translate(cfg, proof, out);
    else if (ev->parsed()) o = cmd_eval(cfg, model, prop, term, exact);
    else if (vm->parsed()) o = cmd_verify(cfg, model, bounds, sampled);
    else if (demo->parsed()) o = cmd_demo(cfg, which);
    else if (probe->parsed()) o = cmd_probe(cfg);
  } catch (const Error& e) {
    if (cfg.json) {
      json j{{"command", name}, {"ok", false}, {"exit", 2}, {"error", e.diagnostic().str()}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.diagnostic().str() << '\n';
    }
    return 2;
  }
  if (cfg.json) {
    json j{{"command", name}, {"ok", o.code == 0}, {"exit", o.code}};
    for (auto& [k, v] : o.summary.items()) j[k] = v;
    j["output"] = o.lines;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& l : o.lines) std::cout << l << '\n';
  }
  return o.code;
}
