#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabclass/cen_tilde.hpp"
#include "stabclass/check.hpp"
#include "stabclass/group.hpp"
#include "stabclass/homsets.hpp"
#include "stabclass/modcmp.hpp"

namespace stabclass {

/// One module comparison between the two groups for a fixed Q.
struct ModuleComparison {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  ModuleVerdict verdict;
};

struct QComparison {
  GroupPtr q;
  std::string name;
  /// Q is a subgroup type of one of the Sylows, so Inj is compared.
  bool inj_range = false;
  std::optional<ModuleComparison> inj;
  ModuleComparison rep;
  std::size_t cen_a = 0;
  std::size_t cen_b = 0;
};

struct Witness {
  std::string q;
  std::string diff;
};

struct Verdict {
  bool equivalent = false;
  unsigned prime = 0;
  std::vector<Witness> witnesses;
  std::vector<QComparison> per_q;
  /// All Rep comparisons on the tested range agree.
  bool rep_equivalent = false;
  /// rep_equivalent == equivalent.
  bool rep_inj_consistent = true;
};

/// Shared state across decisions: one abstract object per isomorphism type
/// of Q, and memoized class sets, automorphism groups and tilde tables.
class ClassifyContext {
 public:
  /// The registered representative isomorphic to q, registering q if new.
  GroupPtr canonical_q(const GroupPtr& q);
  const AutomorphismGroup& aut(const GroupPtr& q);
  /// Inj(Q,G) with the Out(Q) action attached.
  const ClassSet& inj(const GroupPtr& q, const GroupPtr& g);
  const ClassSet& rep(const GroupPtr& q, const GroupPtr& g);
  const TildeClassTable& tilde(const GroupPtr& g, unsigned p);
  /// Test family of the image of the actors, keyed by its generators.
  const std::vector<Subgroup>& family(const GroupPtr& gamma, unsigned p);

 private:
  using Key = std::pair<const FiniteGroup*, const FiniteGroup*>;
  std::vector<GroupPtr> registry_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_invariants_;
  std::map<const FiniteGroup*, GroupPtr> keep_alive_;
  std::map<const FiniteGroup*, AutomorphismGroup> aut_;
  std::map<Key, ClassSet> inj_;
  std::map<Key, ClassSet> rep_;
  std::map<std::pair<const FiniteGroup*, unsigned>, TildeClassTable> tilde_;
  std::map<std::pair<std::vector<Permutation>, unsigned>, std::vector<Subgroup>> family_;

  void hold(const GroupPtr& g) { keep_alive_.emplace(g.get(), g); }
};

/// One group per isomorphism type among subgroups of both Sylow p-subgroups,
/// ordered by (order, invariants, first appearance).
std::vector<GroupPtr> q_candidates(const GroupPtr& g, const GroupPtr& g_prime, unsigned p,
                                   ClassifyContext* ctx = nullptr);

/// Quotient types Q/N over nontrivial normal N, as regular permutation groups.
std::vector<GroupPtr> quotient_types(const GroupPtr& q);

/// Compares two class sets with the same actors as modules over the image
/// of the actors.
ModuleVerdict compare_class_sets(const ClassSet& a, const ClassSet& b, unsigned p, ClassifyContext* ctx = nullptr);

Verdict decide(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx = nullptr);

/// Cen comparison and the Inj = Cen + nCen decomposition for each candidate.
CheckReport check_prop2(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx = nullptr);

/// Matches tilde representatives across the groups and compares Cen of each
/// tilde and the self-relative Cen sets.
CheckReport check_prop6(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx = nullptr);

/// "order 2 <(0 1)>: 1 vs 2; ..." listing differing profile entries.
std::string profile_diff(const ModuleVerdict& v);

}  // namespace stabclass
