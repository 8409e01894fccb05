#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "bindlog/proof_io.hpp"
#include "bindlog/proofs.hpp"
#include "bindlog/syntax_io.hpp"
#include "oracles.hpp"

using namespace bindlog;
namespace fs = std::filesystem;

namespace {

const Signature& logic() {
  static const Signature s = load_signature(BINDLOG_TEST_DATA "/logic.sig");
  return s;
}

std::vector<fs::path> corpus(const char* dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(BINDLOG_TEST_DATA) / dir))
    if (e.path().extension() == ".prf") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Single-node checker written from the rule table, on elaborated nodes.
using Props = std::vector<Prop>;

bool take(Props& ms, const Prop& a) {
  for (auto it = ms.begin(); it != ms.end(); ++it)
    if (oracle::alpha(*it, a)) {
      ms.erase(it);
      return true;
    }
  return false;
}

// side == context + extras, as multisets up to alpha
bool is_ctx_plus(const Props& side, const Props& ctx, const Props& extras) {
  Props rest = side;
  for (const auto& c : ctx)
    if (!take(rest, c)) return false;
  for (const auto& e : extras)
    if (!take(rest, e)) return false;
  return rest.empty();
}

bool free_in(const std::string& x, const Props& ps) {
  for (const auto& p : ps)
    if (free_vars(p).count(x)) return true;
  return false;
}

bool node_ok(const ProofTree& n) {
  const auto& c = n.conclusion;
  const auto& ps = n.premises;
  if (ps.size() != premise_count(n.rule)) return false;
  if (n.rule == RuleKind::Axiom)
    return c.left.size() == 1 && c.right.size() == 1 && oracle::alpha(c.left[0], c.right[0]);
  if (n.rule == RuleKind::Cut) {
    const auto& a = ps[0].conclusion;
    const auto& b = ps[1].conclusion;
    for (const auto& f : a.left)
      if (is_ctx_plus(a.left, c.left, {f}) && is_ctx_plus(a.right, c.right, {}) && is_ctx_plus(b.left, c.left, {}) &&
          is_ctx_plus(b.right, c.right, {f}))
        return true;
    return false;
  }
  const bool left = principal_on_left(n.rule);
  const Props& side = left ? c.left : c.right;
  if (!n.principal || *n.principal >= side.size()) return false;
  const Prop& C = side[*n.principal];
  Props G = c.left, D = c.right;
  (left ? G : D).erase((left ? G : D).begin() + static_cast<long>(*n.principal));
  auto prem = [&](std::size_t i, const Props& l, const Props& r) {
    return is_ctx_plus(ps[i].conclusion.left, G, l) && is_ctx_plus(ps[i].conclusion.right, D, r);
  };
  auto kind = [&](Prop::Kind k) { return C.kind() == k; };
  switch (n.rule) {
    case RuleKind::ContrL: return prem(0, {C, C}, {});
    case RuleKind::ContrR: return prem(0, {}, {C, C});
    case RuleKind::WeakL:
    case RuleKind::WeakR: return prem(0, {}, {});
    case RuleKind::ImpL: return kind(Prop::Kind::Imp) && prem(0, {}, {C.lhs()}) && prem(1, {C.rhs()}, {});
    case RuleKind::ImpR: return kind(Prop::Kind::Imp) && prem(0, {C.lhs()}, {C.rhs()});
    case RuleKind::AndL: return kind(Prop::Kind::And) && prem(0, {C.lhs(), C.rhs()}, {});
    case RuleKind::AndR: return kind(Prop::Kind::And) && prem(0, {}, {C.lhs()}) && prem(1, {}, {C.rhs()});
    case RuleKind::OrL: return kind(Prop::Kind::Or) && prem(0, {C.lhs()}, {}) && prem(1, {C.rhs()}, {});
    case RuleKind::OrR: return kind(Prop::Kind::Or) && prem(0, {}, {C.lhs(), C.rhs()});
    case RuleKind::BotL: return kind(Prop::Kind::Bottom);
    default: break;
  }
  const bool all = n.rule == RuleKind::AllL || n.rule == RuleKind::AllR;
  if (!kind(all ? Prop::Kind::Forall : Prop::Kind::Exists)) return false;
  if (!n.params.x || !n.params.A) return false;
  const std::string& x = *n.params.x;
  const Prop& A = *n.params.A;
  if (!oracle::alpha(C, all ? Prop::forall(x, A) : Prop::exists(x, A))) return false;
  if (takes_witness(n.rule)) {
    if (!n.params.t) return false;
    Prop inst = substitute({{x, *n.params.t}}, A);
    return left ? prem(0, {inst}, {}) : prem(0, {}, {inst});
  }
  if (free_in(x, G) || free_in(x, D)) return false;
  return left ? prem(0, {A}, {}) : prem(0, {}, {A});
}

bool tree_ok(const ProofTree& p) {
  if (!node_ok(p)) return false;
  for (const auto& q : p.premises)
    if (!tree_ok(q)) return false;
  return true;
}

ProofTree* nth_node(ProofTree& p, std::size_t& k) {
  if (k == 0) return &p;
  --k;
  for (auto& q : p.premises)
    if (ProofTree* r = nth_node(q, k)) return r;
  return nullptr;
}

ErrorCode code_of(const std::string& file) {
  CheckResult r = check_binding_proof(logic(), load_proof(logic(), file));
  EXPECT_FALSE(r) << file;
  return r ? ErrorCode::ParseError : r.error().code;
}

}  // namespace

TEST(Proofs, CorpusChecks) {
  auto files = corpus("proofs");
  ASSERT_GE(files.size(), 10u);
  std::set<RuleKind> used;
  for (const auto& f : files) {
    ProofTree p = load_proof(logic(), f.string());
    CheckResult r = check_binding_proof(logic(), p);
    EXPECT_TRUE(r) << f << ": " << (r ? "" : r.error().str());
    ProofTree e = elaborate_binding_proof(logic(), p);
    EXPECT_TRUE(check_modulo_proof(logic(), e)) << f;
    EXPECT_TRUE(tree_ok(e)) << f;
    EXPECT_TRUE(check_binding_proof(logic(), e)) << f;
    std::function<void(const ProofTree&)> walk = [&](const ProofTree& n) {
      used.insert(n.rule);
      for (const auto& q : n.premises) walk(q);
    };
    walk(p);
  }
  for (int k = 0; k <= static_cast<int>(RuleKind::ExR); ++k)
    EXPECT_TRUE(used.count(static_cast<RuleKind>(k))) << to_string(static_cast<RuleKind>(k));
}

TEST(Proofs, EqualityDerivation) {
  ProofTree p = load_proof(logic(), BINDLOG_TEST_DATA "/proofs/equality.prf");
  EXPECT_EQ(p.node_count(), 7u);
  EXPECT_EQ(p.height(), 5u);
  EXPECT_TRUE(check_binding_proof(logic(), p));
}

TEST(Proofs, Failures) {
  EXPECT_EQ(code_of(BINDLOG_TEST_DATA "/invalid/mismatch.prf"), ErrorCode::RuleMismatch);
  EXPECT_EQ(code_of(BINDLOG_TEST_DATA "/invalid/eigenvariable.prf"), ErrorCode::SideConditionViolated);
  EXPECT_EQ(code_of(BINDLOG_TEST_DATA "/invalid/capture.prf"), ErrorCode::RuleMismatch);
  CheckResult r = check_binding_proof(logic(), parse_proof(logic(), "rule axiom P(c) |- P(c)\n  rule axiom P(c) |- P(c)\n"));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().path, "/");
}

TEST(Proofs, FailurePathsPointAtTheNode) {
  const char* text =
      "rule and-right P(c) |- P(c) /\\ Q(c)\n"
      "  rule axiom P(c) |- P(c)\n"
      "  rule axiom P(c) |- Q(c)\n";
  CheckResult r = check_binding_proof(logic(), parse_proof(logic(), text));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().path, "/1");
}

TEST(Proofs, ParseErrors) {
  EXPECT_THROW(parse_proof(logic(), "rule frobnicate P(c) |- P(c)\n"), Error);
  EXPECT_THROW(parse_proof(logic(), "rule axiom P(c) P(c)\n"), Error);
  EXPECT_THROW(parse_proof(logic(), "rule axiom P(c) |- P(c)\n    rule axiom P(c) |- P(c)\n"), Error);
}

TEST(Proofs, PrintParseRoundTrip) {
  for (const auto& f : corpus("proofs")) {
    ProofTree p = elaborate_binding_proof(logic(), load_proof(logic(), f.string()));
    EXPECT_EQ(parse_proof(logic(), print(p)), p) << f;
  }
}

TEST(Proofs, ModuloArithmetic) {
  Signature a = load_signature(BINDLOG_TEST_DATA "/arith.sig");
  Congruence arith(load_rules(a, BINDLOG_TEST_DATA "/arith.rw"));
  LProofTree p = load_lproof(a, BINDLOG_TEST_DATA "/even4.lprf");
  EXPECT_EQ(p.node_count(), 3u);
  EXPECT_TRUE(check_modulo_proof(a, arith, p));
  CheckResult none = check_modulo_proof(a, Congruence(), p);
  ASSERT_FALSE(none);
  EXPECT_EQ(none.error().code, ErrorCode::RuleMismatch);

  LProofTree ax = parse_lproof(a, "rule axiom S(S(S(S(0)))) = S(S(S(S(0)))) |- times(S(S(0)), S(S(0))) = S(S(S(S(0))))\n");
  EXPECT_TRUE(check_modulo_proof(a, arith, ax));
  EXPECT_EQ(check_modulo_proof(a, Congruence(), ax).error().code, ErrorCode::RuleMismatch);
}

TEST(Proofs, ModuloQuantifierNeedsParameters) {
  Signature a = load_signature(BINDLOG_TEST_DATA "/arith.sig");
  LProofTree p = parse_lproof(a,
                              "rule forall-left forall x. x = x |- 0 = 0\n"
                              "  rule axiom 0 = 0 |- 0 = 0\n");
  EXPECT_FALSE(check_modulo_proof(a, Congruence(), p));
}

TEST(ProofsProperty, MutantsAgreeWithNodeOracle) {
  std::mt19937_64 rng(17);
  const Prop extra = parse_prop(logic(), "Q(c)");
  const RuleKind kinds[] = {RuleKind::Axiom, RuleKind::Cut, RuleKind::ContrL, RuleKind::ContrR, RuleKind::WeakL,
                            RuleKind::WeakR, RuleKind::ImpL, RuleKind::ImpR, RuleKind::AndL, RuleKind::AndR,
                            RuleKind::OrL, RuleKind::OrR, RuleKind::BotL, RuleKind::AllL, RuleKind::AllR,
                            RuleKind::ExL, RuleKind::ExR};
  std::size_t rejected = 0, total = 0;
  for (const auto& f : corpus("proofs")) {
    const ProofTree base = elaborate_binding_proof(logic(), load_proof(logic(), f.string()));
    for (int k = 0; k < 60; ++k) {
      ProofTree m = base;
      std::size_t idx = rng() % base.node_count();
      ProofTree* n = nth_node(m, idx);
      switch (rng() % 4) {
        case 0: n->conclusion.left.push_back(extra); break;
        case 1: n->conclusion.right.insert(n->conclusion.right.begin(), extra); break;
        case 2: {
          auto& side = n->conclusion.left.empty() ? n->conclusion.right : n->conclusion.left;
          if (!side.empty()) side.erase(side.begin() + static_cast<long>(rng() % side.size()));
          break;
        }
        default: {
          RuleKind r = kinds[rng() % std::size(kinds)];
          if (premise_count(r) != premise_count(n->rule)) break;
          n->rule = r;
          if (!takes_witness(r)) n->params.t.reset();
          if (!takes_witness(r) && !takes_eigenvariable(r)) n->params = {};
          break;
        }
      }
      const bool lib = static_cast<bool>(check_binding_proof(logic(), m));
      // parameters dropped by a rule change are inferred by the library
      bool oracle_ok = tree_ok(m);
      if (!oracle_ok && lib) oracle_ok = tree_ok(elaborate_binding_proof(logic(), m));
      EXPECT_EQ(lib, oracle_ok) << f << "\n" << print(m);
      rejected += !lib;
      ++total;
    }
  }
  EXPECT_GT(rejected, total / 2);
}
