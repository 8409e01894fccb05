#include "bindlog/probes.hpp"

#include <algorithm>
#include <sstream>

#include "bindlog/sigma.hpp"

namespace bindlog {

LTermGenerator::LTermGenerator(Signature sig, std::uint64_t seed, GenOptions opts)
    : sig_(std::move(sig)), rng_(seed), opts_(std::move(opts)) {
  for (const auto& [f, ar] : sig_.functions()) fnames_.push_back(f);
  if (opts_.var_names.empty()) opts_.var_names.push_back("x");
}

unsigned LTermGenerator::pick(unsigned lo, unsigned hi) {
  if (hi <= lo) return lo;
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
}

bool LTermGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

LTerm LTermGenerator::small_term(unsigned n) {
  if (n == 0) return LTerm::var(opts_.var_names[pick(0, unsigned(opts_.var_names.size() - 1))]);
  return LTerm::index(pick(1, n), n);
}

LTerm LTermGenerator::small_subst(unsigned n, unsigned p) {
  if (n == p) return LTerm::id(n);
  if (n > p) return shifts(p, n - p);
  return LTerm::cons(small_term(n), small_subst(n, p - 1));
}

LTerm LTermGenerator::term(unsigned n, std::size_t budget) {
  if (budget <= 1 || coin(0.15)) return small_term(n);
  std::vector<const std::string*> usable;
  for (const auto& f : fnames_) {
    const BindingArity& ar = *sig_.function(f);
    bool ok = true;
    for (unsigned k : ar) ok = ok && n + k <= opts_.max_level + 1;
    if (ok) usable.push_back(&f);
  }
  if (!usable.empty() && coin(0.45)) {
    const std::string& f = *usable[pick(0, unsigned(usable.size() - 1))];
    const BindingArity& ar = *sig_.function(f);
    std::vector<LTerm> args;
    std::size_t share = ar.empty() ? 0 : (budget - 1) / ar.size();
    for (unsigned k : ar) args.push_back(term(n + k, share));
    return LTerm::fapp(f, n, std::move(args));
  }
  unsigned p = pick(0, opts_.max_level);
  std::size_t left = pick(1, unsigned(std::max<std::size_t>(1, budget - 1)));
  std::size_t right = budget > left + 1 ? budget - 1 - left : 1;
  return LTerm::closure(term(p, left), subst(n, p, right));
}

LTerm LTermGenerator::subst(unsigned n, unsigned p, std::size_t budget) {
  if (budget <= 1) return small_subst(n, p);
  std::size_t left = pick(1, unsigned(std::max<std::size_t>(1, budget - 1)));
  std::size_t right = budget > left + 1 ? budget - 1 - left : 1;
  switch (pick(0, 3)) {
    case 0:
      if (p >= 1) return LTerm::cons(term(n, left), subst(n, p - 1, right));
      break;
    case 1: {
      unsigned r = pick(0, opts_.max_level);
      return LTerm::comp(subst(r, p, left), subst(n, r, right));
    }
    default:
      break;
  }
  if (n == p && coin(0.5)) return LTerm::id(n);
  if (n == p + 1 && coin(0.5)) return LTerm::shift(p);
  if (p >= 1) return LTerm::cons(term(n, left), subst(n, p - 1, right));
  unsigned r = pick(0, opts_.max_level);
  return LTerm::comp(subst(r, p, left), subst(n, r, right));
}

LTerm LTermGenerator::any() {
  for (;;) {
    std::size_t budget = pick(1, unsigned(opts_.max_size));
    LTerm t = coin(0.8) ? term(pick(0, opts_.max_level), budget)
                        : subst(pick(0, opts_.max_level), pick(0, opts_.max_level), budget);
    if (t.size() <= opts_.max_size) return t;
  }
}

LTerm LTermGenerator::redex(const std::string& rule) {
  const unsigned L = opts_.max_level;
  const std::size_t b = std::max<std::size_t>(1, opts_.max_size / 4);
  if (rule == "Index") {
    unsigned n = pick(2, std::max(2u, L));
    return LTerm::index(pick(2, n), n);
  }
  if (rule == "VarCons") {
    unsigned n = pick(0, L), p = pick(0, L);
    return LTerm::closure(LTerm::index(1, p + 1), LTerm::cons(term(n, b), subst(n, p, b)));
  }
  if (rule == "Id") {
    unsigned n = pick(0, L);
    return LTerm::closure(term(n, b), LTerm::id(n));
  }
  if (rule == "Clos") {
    unsigned p = pick(0, L), q = pick(0, L), n = pick(0, L);
    return LTerm::closure(LTerm::closure(term(p, b), subst(q, p, b)), subst(n, q, b));
  }
  if (rule == "IdL") {
    unsigned n = pick(0, L), p = pick(0, L);
    return LTerm::comp(LTerm::id(p), subst(n, p, b));
  }
  if (rule == "ShiftCons") {
    unsigned n = pick(0, L), p = pick(0, L);
    return LTerm::comp(LTerm::shift(p), LTerm::cons(term(n, b), subst(n, p, b)));
  }
  if (rule == "AssEnv") {
    unsigned a = pick(0, L), c = pick(0, L), d = pick(0, L), e = pick(0, L);
    return LTerm::comp(LTerm::comp(subst(a, c, b), subst(d, a, b)), subst(e, d, b));
  }
  if (rule == "MapEnv") {
    unsigned m = pick(0, L), p = pick(0, L), n = pick(0, L);
    return LTerm::comp(LTerm::cons(term(m, b), subst(m, p, b)), subst(n, m, b));
  }
  if (rule == "IdR") {
    unsigned n = pick(0, L), p = pick(0, L);
    return LTerm::comp(subst(n, p, b), LTerm::id(n));
  }
  if (rule == "VarId") {
    unsigned n = pick(0, L);
    return LTerm::cons(LTerm::index(1, n + 1), LTerm::shift(n));
  }
  if (rule == "SCons") {
    unsigned n = pick(0, L), p = pick(0, L);
    LTerm s = subst(n, p + 1, b);
    return LTerm::cons(LTerm::closure(LTerm::index(1, p + 1), s), LTerm::comp(LTerm::shift(p), s));
  }
  if (rule.starts_with("App[") && rule.ends_with("]")) {
    std::string f = rule.substr(4, rule.size() - 5);
    const BindingArity* ar = sig_.function(f);
    if (!ar) throw Error(ErrorCode::UnknownSymbol, "no function symbol " + f);
    unsigned p = pick(0, L), q = pick(0, L);
    std::vector<LTerm> args;
    for (unsigned k : *ar) args.push_back(term(p + k, b));
    return LTerm::closure(LTerm::fapp(f, p, std::move(args)), subst(q, p, b));
  }
  throw Error(ErrorCode::InvalidRule, "no sigma rule named " + rule);
}

namespace {

LTermGenerator make_gen(const RewriteSystem& rs, const ProbeOptions& opts) {
  GenOptions g;
  g.max_size = opts.max_size;
  return LTermGenerator(rs.signature(), opts.seed, g);
}

}  // namespace

std::string ConfluenceReport::str() const {
  std::ostringstream os;
  os << "samples " << samples << ", peaks " << peaks << ", divergent " << divergent << '\n';
  for (const auto& w : witnesses) os << "  divergent: " << w << '\n';
  return os.str();
}

ConfluenceReport local_confluence_probe(const RewriteSystem& rs, const ProbeOptions& opts) {
  ConfluenceReport rep;
  LTermGenerator gen = make_gen(rs, opts);
  NormalizeOptions nopts;
  nopts.budget = opts.budget;
  for (std::size_t i = 0; i < opts.samples; ++i) {
    LTerm t = gen.any();
    ++rep.samples;
    std::vector<Redex> rx = redexes(rs, t);
    if (rx.size() < 2) continue;
    ++rep.peaks;
    std::optional<LTerm> first;
    for (const Redex& r : rx) {
      LTerm nf = normalize(rs, rewrite_at(rs, t, r), nopts);
      if (!first) {
        first = nf;
      } else if (!(nf == *first)) {
        ++rep.divergent;
        if (rep.witnesses.size() < 10)
          rep.witnesses.push_back(print(t) + " via " + rs.rules()[r.rule].name + " at " +
                                  format_path(r.path) + ": " + print(*first) + " vs " + print(nf));
        break;
      }
    }
  }
  return rep;
}

std::string TerminationReport::str() const {
  std::ostringstream os;
  os << "samples " << samples << ", max steps innermost " << max_steps_innermost
     << ", max steps outermost " << max_steps_outermost << ", budget failures " << budget_failures
     << ", strategy disagreements " << strategy_disagreements << ", sort violations "
     << sort_violations << '\n';
  for (const auto& w : witnesses) os << "  " << w << '\n';
  return os.str();
}

TerminationReport termination_probe(const RewriteSystem& rs, const ProbeOptions& opts) {
  TerminationReport rep;
  LTermGenerator gen = make_gen(rs, opts);
  auto note = [&](std::string w) {
    if (rep.witnesses.size() < 10) rep.witnesses.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < opts.samples; ++i) {
    LTerm t = gen.any();
    ++rep.samples;
    std::optional<LTerm> results[2];
    for (int s = 0; s < 2; ++s) {
      NormalizeOptions nopts;
      nopts.budget = opts.budget;
      nopts.check_sorts = true;
      nopts.strategy = s == 0 ? Strategy::Innermost : Strategy::Outermost;
      try {
        Normalized n = normalize_counted(rs, t, nopts);
        auto& mx = s == 0 ? rep.max_steps_innermost : rep.max_steps_outermost;
        mx = std::max(mx, n.steps);
        results[s] = n.term;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::StepBudgetExceeded) {
          ++rep.budget_failures;
        } else if (e.code() == ErrorCode::SortMismatch) {
          ++rep.sort_violations;
        } else {
          throw;
        }
        note(std::string(to_string(e.code())) + ": " + print(t));
      }
    }
    if (results[0] && results[1] && !(*results[0] == *results[1])) {
      ++rep.strategy_disagreements;
      note("strategies disagree on " + print(t) + ": " + print(*results[0]) + " vs " + print(*results[1]));
    }
  }
  return rep;
}

RuleSortReport sigma_rule_sort_check(const Signature& sig, std::size_t per_rule, std::uint64_t seed) {
  RuleSortReport rep;
  RewriteSystem rs = sigma_system(sig);
  GenOptions g;
  g.max_size = 16;
  LTermGenerator gen(sig, seed, g);
  for (const Rule& r : rs.rules()) {
    for (std::size_t i = 0; i < per_rule; ++i) {
      LTerm t = gen.redex(r.name);
      ++rep.instances;
      Sort before = sort_of(sig, t);
      auto out = r.apply(t);
      if (!out) {
        rep.failures.push_back(r.name + " did not fire on " + print(t));
        break;
      }
      auto after = try_sort_of(sig, *out);
      if (!after || *after != before) {
        rep.failures.push_back(r.name + " changed the sort of " + print(t));
        break;
      }
    }
  }
  return rep;
}

}  // namespace bindlog

namespace bindlog {

BindingTermGenerator::BindingTermGenerator(Signature sig, std::uint64_t seed, BindingGenOptions opts)
    : sig_(std::move(sig)), rng_(seed), opts_(std::move(opts)) {
  for (const auto& [f, ar] : sig_.functions()) fns_.emplace_back(f, ar);
  for (const auto& [P, ar] : sig_.predicates()) preds_.emplace_back(P, ar);
}

std::string BindingTermGenerator::name() {
  return opts_.names[std::uniform_int_distribution<std::size_t>(0, opts_.names.size() - 1)(rng_)];
}

std::vector<Arg> BindingTermGenerator::args(const BindingArity& ar, std::size_t budget) {
  std::vector<Arg> out;
  const std::size_t share = ar.empty() ? 0 : budget / ar.size();
  for (unsigned k : ar) {
    std::vector<std::string> pool = opts_.names;
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(std::min<std::size_t>(k, pool.size()));
    for (std::size_t i = pool.size(); i < k; ++i) pool.push_back(default_fresh_name("b", i));
    out.push_back(Arg{std::move(pool), term(share)});
  }
  return out;
}

Term BindingTermGenerator::term() { return term(opts_.max_size); }

Term BindingTermGenerator::term(std::size_t budget) {
  if (fns_.empty() || budget <= 1 || std::uniform_int_distribution<int>(0, 3)(rng_) == 0) {
    // A constant now and then keeps leaves from being all variables.
    std::vector<std::size_t> consts;
    for (std::size_t i = 0; i < fns_.size(); ++i)
      if (fns_[i].second.empty()) consts.push_back(i);
    if (!consts.empty() && std::uniform_int_distribution<int>(0, 2)(rng_) == 0)
      return Term::app(fns_[consts[std::uniform_int_distribution<std::size_t>(0, consts.size() - 1)(rng_)]].first);
    return Term::var(name());
  }
  const auto& [f, ar] = fns_[std::uniform_int_distribution<std::size_t>(0, fns_.size() - 1)(rng_)];
  return Term::app(f, args(ar, budget - 1));
}

Prop BindingTermGenerator::prop() { return prop(opts_.max_size); }

Prop BindingTermGenerator::prop(std::size_t budget) {
  int pick = std::uniform_int_distribution<int>(0, budget < 6 ? 0 : 6)(rng_);
  if (pick == 0 || preds_.empty()) {
    if (preds_.empty()) return Prop::bottom();
    const auto& [P, ar] = preds_[std::uniform_int_distribution<std::size_t>(0, preds_.size() - 1)(rng_)];
    return Prop::atom(P, args(ar, std::max<std::size_t>(budget, 2)));
  }
  switch (pick) {
    case 1: return Prop::imp(prop(budget / 2), prop(budget / 2));
    case 2: return Prop::conj(prop(budget / 2), prop(budget / 2));
    case 3: return Prop::disj(prop(budget / 2), prop(budget / 2));
    case 4: return Prop::forall(name(), prop(budget - 1));
    case 5: return Prop::exists(name(), prop(budget - 1));
    default: return Prop::atom(preds_.front().first, args(preds_.front().second, budget - 1));
  }
}

}  // namespace bindlog
