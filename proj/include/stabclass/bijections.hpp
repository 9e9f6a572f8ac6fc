#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "stabclass/cen_tilde.hpp"
#include "stabclass/check.hpp"
#include "stabclass/homsets.hpp"

namespace stabclass {

/// Monomorphisms source -> tilde whose image is exactly `marked`.
struct RSet {
  GroupPtr source;
  GroupPtr tilde;
  Subgroup marked;
  std::vector<GroupHom> monos;
  std::map<std::vector<Element>, std::size_t> index;

  std::optional<std::size_t> find(const GroupHom& f) const;
};

RSet r_set(const GroupPtr& source, const GroupPtr& tilde, const Subgroup& marked);
/// Monomorphisms tilde_i -> tilde_k carrying marked_i onto marked_k.
RSet r_set_relative(const GroupPtr& tilde_i, const Subgroup& marked_i, const GroupPtr& tilde_k,
                    const Subgroup& marked_k);

/// Aut(Q~|Q): automorphisms of tilde preserving marked setwise. Identity first.
struct AutRel {
  GroupPtr tilde;
  Subgroup marked;
  std::vector<GroupHom> elements;
};

AutRel aut_rel(const GroupPtr& tilde, const Subgroup& marked);

/// Orbits of left x right under a . (gamma, [delta]) = (a o gamma, [delta o a^-1]),
/// i.e. the identification (a o gamma, [delta]) ~ (gamma, [delta o a]).
struct BalancedProduct {
  RSet left;
  AutRel group;
  ClassSet right;
  /// One (left index, right index) pair per orbit, the least in each orbit.
  std::vector<std::pair<std::size_t, std::size_t>> orbits;
  /// orbit_of[l * right.size() + r]
  std::vector<std::size_t> orbit_of;

  std::size_t orbit(std::size_t l, std::size_t r) const { return orbit_of[l * right.size() + r]; }
};

BalancedProduct balanced_product(RSet left, AutRel group, ClassSet right);

/// delta o gamma; throws SourceMismatch unless gamma lands in delta's source.
GroupHom psi(const GroupHom& gamma, const GroupHom& delta);

/// An embedding G -> G+ used to probe naturality in G.
struct Embedding {
  GroupPtr super;
  GroupHom inclusion;
};

/// Embedding of g into g x C2 realized on disjoint supports.
Embedding product_embedding(const GroupPtr& g);
/// g inside `super` by extending each permutation with fixed points.
/// Throws NotNested when some element is missing from `super`.
Embedding extension_embedding(const GroupPtr& g, const GroupPtr& super);

/// Per-rep data shared by the nCen and relative Cen verifiers for one (G, p).
class LemmaWorkspace {
 public:
  explicit LemmaWorkspace(TildeClassTable table);

  const TildeClassTable& table() const noexcept { return table_; }
  const AutRel& aut(std::size_t k);
  /// Cen(Q~_k, G), no action.
  const ClassSet& cen(std::size_t k);
  /// Cen_{Q_k}(Q~_k, Q~_k, G) with the Aut(Q~_k|Q_k)-action.
  const ClassSet& cen_self(std::size_t k);

 private:
  TildeClassTable table_;
  std::map<std::size_t, AutRel> aut_;
  std::map<std::size_t, ClassSet> cen_;
  std::map<std::size_t, ClassSet> cen_self_;
};

/// Checks that composition gives an Out(Q)-equivariant bijection from the
/// coproduct of balanced products onto nCen(Q,G). `aut_q` must be
/// automorphism_group(q). With `embedding`, composition with G -> G+ is
/// checked to commute with psi.
CheckReport verify_lemma4(const GroupPtr& q, LemmaWorkspace& ws, const AutomorphismGroup& aut_q,
                          const Embedding* embedding = nullptr);
CheckReport verify_lemma4(const GroupPtr& q, const GroupPtr& g, unsigned p, const Embedding* embedding = nullptr);

/// Checks that composition gives an Aut(Q~_i|Q_i)-equivariant bijection onto
/// Cen_{Q_i}(Q~_i, Q~_k, G).
CheckReport verify_lemma5(std::size_t i, std::size_t k, LemmaWorkspace& ws);
CheckReport verify_lemma5(std::size_t i, std::size_t k, const GroupPtr& g, unsigned p);

}  // namespace stabclass
