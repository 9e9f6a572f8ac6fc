#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabclass/group.hpp"
#include "stabclass/homomorphism.hpp"

namespace stabclass {

/// Automorphisms of the source acting on a ClassSet by precomposition:
/// [a] . phi = [a o phi]. This is a right action; table[k][i] is the index
/// of [items[i] o actors[k]].
struct ClassAction {
  std::string label;
  std::vector<GroupHom> actors;
  std::vector<std::vector<std::size_t>> table;
};

/// Homomorphisms source -> target up to conjugation in the target, one
/// canonical representative per class. The canonical representative has the
/// lexicographically least image tuple on the generating sequence.
class ClassSet {
 public:
  ClassSet() = default;
  ClassSet(GroupPtr source, GroupPtr target, std::vector<Element> generators);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<GroupHom>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::optional<ClassAction>& action() const noexcept { return action_; }

  /// Generator images of the least conjugate of `f`.
  std::vector<Element> canonical_key(const GroupHom& f) const;
  std::optional<std::size_t> find(const GroupHom& f) const;
  /// Adds the class of `f` (appended; subset() yields canonical order).
  /// Returns false when already present.
  bool insert(const GroupHom& f);
  /// Number of homomorphisms in the class of items()[i].
  std::size_t class_size(std::size_t i) const;

  /// Computes the action of `actors` and attaches it. Throws
  /// ActionIllDefined if some image class is missing from the set.
  void attach_action(std::string label, std::vector<GroupHom> actors);
  void detach_action() noexcept { action_.reset(); }
  /// The classes satisfying `keep`, with the induced action. Throws
  /// ActionIllDefined when the subset is not invariant.
  ClassSet subset(const std::function<bool(const GroupHom&)>& keep) const;
  /// Index of [items()[i] o phi] for an automorphism phi of the source.
  std::size_t act(std::size_t i, const GroupHom& phi) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> generators_;
  std::vector<GroupHom> items_;
  std::map<std::vector<Element>, std::size_t> index_;
  std::optional<ClassAction> action_;
};

/// Aut(Q) with the inner automorphisms and the Inn-cosets marked.
struct AutomorphismGroup {
  GroupPtr base;
  /// Identity first, the rest in order of generator images.
  std::vector<GroupHom> automorphisms;
  std::vector<std::size_t> inner;
  /// Inn-cosets as index lists; class 0 is Inn itself. Each list is sorted
  /// and its first entry is the coset representative.
  std::vector<std::vector<std::size_t>> outer_classes;
  /// Representatives of classes generating Out(Q), chosen greedily.
  std::vector<std::size_t> outer_generators;

  std::vector<GroupHom> outer_representatives() const;
  std::vector<GroupHom> outer_generator_maps() const;
  std::size_t outer_order() const noexcept { return outer_classes.size(); }
};

/// Every homomorphism source -> target, each verified on all element pairs.
std::vector<GroupHom> all_homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                        const std::vector<Element>& generators = {});

/// Hom(Q,G)/G. When `aut` is given the Out(Q)-action is attached.
ClassSet rep_classes(const GroupPtr& q, const GroupPtr& g, const AutomorphismGroup* aut = nullptr);
/// Classes of injective homomorphisms; enumerated directly with injective pruning.
ClassSet inj_classes(const GroupPtr& q, const GroupPtr& g, const AutomorphismGroup* aut = nullptr);

AutomorphismGroup automorphism_group(const GroupPtr& q);

/// Attaches the Out(Q)-action with generators of Out(Q) as actors, checking
/// that Inn(Q) acts trivially (ActionIllDefined otherwise).
ClassSet out_action(const AutomorphismGroup& aut, ClassSet classes);

}  // namespace stabclass
