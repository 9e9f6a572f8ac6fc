#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stabclass/permutation.hpp"

namespace stabclass {

/// Size bounds for exhaustive group constructions.
struct Limits {
  std::size_t max_order = 400;
  std::size_t max_degree = 32;
  std::size_t max_subgroups = 20000;
};

/// Index of an element inside its FiniteGroup's sorted element list.
using Element = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A permutation group stored with its full element closure and Cayley
/// table. Elements are sorted lexicographically by image sequence, so the
/// identity is always element 0.
class FiniteGroup {
 public:
  /// Throws OrderBoundExceeded when the closure or degree exceeds `limits`.
  static GroupPtr closure(std::vector<Permutation> generators, std::size_t degree,
                          const Limits& limits = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(Element e) const { return elements_[static_cast<std::size_t>(e)]; }

  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  /// g h g^-1
  Element conj(Element g, Element h) const noexcept { return mul(mul(g, h), inv(g)); }
  std::size_t element_order(Element a) const noexcept { return orders_[static_cast<std::size_t>(a)]; }
  std::optional<Element> find(const Permutation& p) const;
  bool is_abelian() const noexcept;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend class Subgroup;
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::vector<Permutation> sorted_elements, std::vector<Element> table);
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
};

/// True when both pointers denote the same group (identical element sets).
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subset of a parent group's elements that is closed under the group law.
/// Equality is set equality inside the same parent; conjugacy is separate.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, std::span<const Element> generators);
  /// Throws NotASubgroup when `elements` is not closed.
  static Subgroup from_elements(GroupPtr parent, std::vector<Element> elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  bool contains(Element e) const noexcept { return mask_[static_cast<std::size_t>(e)]; }
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  /// The subgroup as a group in its own right. Element i of the result is
  /// elements()[i] of the parent.
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_ && same_group(a.parent_, b.parent_);
  }
  /// Orders by size, then by element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  Subgroup(GroupPtr parent, std::vector<Element> sorted_elements, std::vector<Element> generators);

  GroupPtr parent_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::vector<bool> mask_;
};

/// Closure of `generators` inside `parent`; empty result when the closure
/// would exceed `cap` elements.
std::optional<Subgroup> generated_capped(const GroupPtr& parent, std::span<const Element> generators,
                                         std::size_t cap);

Subgroup centralizer(const Subgroup& h);
Subgroup center(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// g H g^-1
Subgroup conjugate(const Subgroup& h, Element g);

/// H*C as a subgroup; throws NotASubgroup when the product set is not closed.
Subgroup product_subgroup(const Subgroup& h, const Subgroup& c);

/// A Sylow p-subgroup of `ambient` containing the p-subgroup `start`, grown
/// greedily from `start` under canonical element order.
Subgroup sylow_containing(const Subgroup& ambient, const Subgroup& start, unsigned p);
Subgroup sylow(const GroupPtr& g, unsigned p);

/// Every subgroup exactly once, sorted by (order, elements). Throws
/// OrderBoundExceeded when more than limits.max_subgroups are found.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits = {});

/// Some g with g H1 g^-1 == H2.
std::optional<Element> conjugating_element(const Subgroup& h1, const Subgroup& h2);
std::optional<Permutation> are_conjugate(const Subgroup& h1, const Subgroup& h2);

/// True iff p does not divide |C|/|Z|. Throws NotNested unless Z <= C.
bool is_p_prime_quotient(const Subgroup& c, const Subgroup& z, unsigned p);

/// A short generating sequence: each step adds the element that enlarges the
/// generated subgroup most, ties broken by canonical order. Elements of
/// `prefix` come first when given (generators of a marked subgroup).
std::vector<Element> generating_sequence(const GroupPtr& g, std::span<const Element> prefix_pool = {});

bool is_prime(unsigned n);
bool is_p_power(std::size_t n, unsigned p);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);
std::vector<unsigned> prime_divisors(std::size_t n);

}  // namespace stabclass
