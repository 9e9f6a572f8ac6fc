#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stabclass/group.hpp"

namespace stabclass {

/// A homomorphism stored as a total element-to-element table.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> map);

  static GroupHom identity(const GroupPtr& g);
  /// Inclusion of h.as_group() into h.parent(); `as_group` must come from h.
  static GroupHom inclusion(const Subgroup& h, const GroupPtr& as_group);
  /// x -> g x g^-1 on g's group.
  static GroupHom conjugation(const GroupPtr& group, Element g);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element x) const { return map_[static_cast<std::size_t>(x)]; }

  bool is_injective() const;
  bool is_bijective() const;
  /// Image as a subgroup of the target.
  Subgroup image() const;
  /// Image of a subgroup of the source.
  Subgroup image_of(const Subgroup& h) const;
  /// Inverse of a bijective map.
  GroupHom inverse() const;
  /// Same map with a different (equal) target or a target containing the image.
  GroupHom with_target(const GroupPtr& new_target) const;
  /// Checks multiplicativity on every pair.
  bool is_homomorphism() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.map_ == b.map_ && same_group(a.source_, b.source_) && same_group(a.target_, b.target_);
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> map_;
};

/// after o before. Throws SourceMismatch when before.target != after.source.
GroupHom compose(const GroupHom& after, const GroupHom& before);

/// Parameters of the backtracking search over generator images.
struct HomSearch {
  /// Generating sequence of the source; empty means generating_sequence(source).
  std::vector<Element> generators;
  /// Optional candidate images per generator position; empty means all.
  std::vector<std::vector<Element>> candidates;
  bool injective = false;
  /// Cap on the product of per-generator candidate counts.
  double max_volume = 1e10;
};

/// Calls `visit` with every homomorphism map (indexed by source element).
/// Stops early when `visit` returns false. Throws SearchBoundExceeded when
/// the projected volume exceeds the cap.
void for_each_homomorphism(const GroupPtr& source, const GroupPtr& target, const HomSearch& search,
                           const std::function<bool(const std::vector<Element>&)>& visit);

/// An isomorphism a -> b if one exists.
std::optional<GroupHom> isomorphism(const GroupPtr& a, const GroupPtr& b);

}  // namespace stabclass
