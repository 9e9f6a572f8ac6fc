#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "stabclass/check.hpp"
#include "stabclass/group.hpp"
#include "stabclass/homomorphism.hpp"
#include "stabclass/homsets.hpp"

namespace stabclass {

/// A p-subgroup H of G together with a Sylow p-subgroup H~ of H*C_G(H)
/// containing H. `tilde_group` is H~ as a group of its own and `marked` is
/// H inside it; `inclusion` embeds tilde_group into G.
struct TildePair {
  GroupPtr ambient;
  unsigned prime = 0;
  Subgroup base;
  Subgroup tilde;
  GroupPtr tilde_group;
  Subgroup marked;
  GroupHom inclusion;
  /// Isomorphism invariants of (tilde_group, marked) used to skip searches.
  std::vector<std::size_t> signature;
};

/// True when p divides |C_G(H)| / |Z(H)|.
bool qualifies(const Subgroup& h, unsigned p);

TildePair make_tilde(const GroupPtr& g, const Subgroup& h, unsigned p);

/// An isomorphism s: a -> b with s(a_marked) == b_marked, if any.
std::optional<GroupHom> marked_isomorphism(const GroupPtr& a, const Subgroup& a_marked, const GroupPtr& b,
                                           const Subgroup& b_marked);
/// Equivalence of pairs: isomorphism of tildes carrying base onto base.
std::optional<GroupHom> equivalent_pairs(const TildePair& a, const TildePair& b);

/// Representatives of the equivalence classes of tilde pairs over all
/// qualifying p-subgroups of G.
struct TildeClassTable {
  GroupPtr ambient;
  unsigned prime = 0;
  /// One pair per qualifying p-subgroup, ordered by base subgroup.
  std::vector<TildePair> pairs;
  /// pairs[i] belongs to class membership[i].
  std::vector<std::size_t> membership;
  /// Index into `pairs` of each class representative; sorted by decreasing
  /// |tilde|, then by pair order. reps[0] has maximum order.
  std::vector<std::size_t> reps;
  std::map<std::vector<Element>, std::size_t> by_base;

  std::size_t size() const noexcept { return reps.size(); }
  const TildePair& rep(std::size_t j) const { return pairs[reps[j]]; }
  std::size_t tilde_order(std::size_t j) const { return rep(j).tilde.order(); }
  /// Class of the pair built on `base`, or empty when `base` does not qualify.
  std::optional<std::size_t> classify(const Subgroup& base) const;
};

TildeClassTable tilde_class_table(const GroupPtr& g, unsigned p);

/// Cen(Q,G): injective classes whose image has C_G(Im)/Z(Im) a p'-group.
ClassSet cen_classes(const GroupPtr& q, const GroupPtr& g, unsigned p, const AutomorphismGroup* aut = nullptr);
ClassSet ncen_classes(const GroupPtr& q, const GroupPtr& g, unsigned p, const AutomorphismGroup* aut = nullptr);
/// Splits an injective class set into (Cen, nCen).
std::pair<ClassSet, ClassSet> split_cen(const ClassSet& inj, unsigned p);
bool in_cen(const GroupHom& f, unsigned p);

/// Table class of the pair built on beta(marked), for beta with source
/// containing `marked`.
std::optional<std::size_t> pair_class(const GroupHom& beta, const Subgroup& marked, const TildeClassTable& table);

/// Cen_{Q}(Q~, Q~_k, G) for a source pair (marked <= source) and table class k,
/// filtered from a precomputed Cen(source, G).
ClassSet cen_sub(const ClassSet& cen_source, const Subgroup& marked, const TildeClassTable& table, std::size_t k);
/// Cen_{Q_j}(Q~_j, Q~_k, G) for table classes j and k. When `actors` is
/// given (automorphisms of Q~_j preserving Q_j) the action is attached.
ClassSet cen_sub(const TildeClassTable& table, std::size_t j, std::size_t k,
                 const std::vector<GroupHom>* actors = nullptr);

/// Checks the five items of the Cen_{Q_j} lemma on a table.
CheckReport verify_lemma3(const TildeClassTable& table);
CheckReport verify_lemma3(const GroupPtr& g, unsigned p);

/// Test fixture: swaps the class labels a and b in `membership`.
TildeClassTable corrupt_table_for_testing(TildeClassTable table, std::size_t a, std::size_t b);

/// Human-readable generator images of f, e.g. "[(0 1), (2 3)]".
std::string describe_hom(const GroupHom& f, const std::vector<Element>& generators);

}  // namespace stabclass
