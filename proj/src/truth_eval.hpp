#pragma once

#include <functional>
#include <optional>

#include "bindlog/models.hpp"

namespace bindlog::detail {

/// Classical connectives and quantifiers over a (possibly sampled) domain.
/// A verdict stays exact when it is settled by an exact sub-verdict.
template <class P>
struct TruthEval {
  std::function<Truth(const P&, const Assignment&)> atom;
  std::function<const Elements&()> domain;
  const bool* domain_exact;

  Truth run(const P& a, Assignment& phi) {
    using PK = Prop::Kind;
    switch (a.kind()) {
      case PK::Atom: return atom(a, phi);
      case PK::Bottom: return {false, true};
      case PK::Imp:
      case PK::And:
      case PK::Or: {
        const bool imp = a.kind() == PK::Imp, conj = a.kind() == PK::And;
        const bool l_stop = !imp && !conj, r_stop = !conj, result = !conj;
        Truth l = run(a.lhs(), phi);
        if (l.value == l_stop && l.exact) return {result, true};
        Truth r = run(a.rhs(), phi);
        if (r.value == r_stop && r.exact) return {result, true};
        const bool v = imp ? (!l.value || r.value) : conj ? (l.value && r.value) : (l.value || r.value);
        return {v, l.exact && r.exact};
      }
      case PK::Forall:
      case PK::Exists: {
        const bool all = a.kind() == PK::Forall;
        const Elements& d = domain();
        std::optional<Element> saved;
        if (auto it = phi.find(a.name()); it != phi.end()) saved = it->second;
        bool exact = *domain_exact;
        bool decided = false;
        for (const Element& e : d) {
          phi[a.name()] = e;
          Truth t = run(a.body(), phi);
          exact = exact && t.exact;
          if (t.value != all) {
            decided = true;
            exact = t.exact;
            break;
          }
        }
        if (saved) phi[a.name()] = *saved;
        else phi.erase(a.name());
        return {decided ? !all : all, exact};
      }
    }
    return {false, true};
  }
};

}  // namespace bindlog::detail
