#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabclass/group.hpp"

namespace stabclass {

/// A left action of a permutation group on points 0..points-1;
/// table[e][x] is the image of x under element e.
struct FiniteAction {
  GroupPtr group;
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> table;

  /// Throws std::invalid_argument unless `table` is a group action.
  static FiniteAction from_table(GroupPtr group, std::size_t points, std::vector<std::vector<std::size_t>> table);
};

/// Fixed-point counts |X^H| over a family of subgroups of the acting group.
struct FixedPointProfile {
  unsigned prime = 0;
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> counts;
};

struct ModuleVerdict {
  bool isomorphic = false;
  FixedPointProfile x;
  FixedPointProfile y;
  /// Positions in the family where the counts differ.
  std::vector<std::size_t> differing;
};

std::size_t fixed_points(const FiniteAction& x, const Subgroup& h);

/// H has a normal Sylow p-subgroup P with H/P cyclic.
bool is_p_hypoelementary(const Subgroup& h, unsigned p);
/// One subgroup per conjugacy class of p-hypoelementary subgroups, in
/// all_subgroups order (so the trivial subgroup comes first).
std::vector<Subgroup> test_family(const GroupPtr& gamma, unsigned p);

FixedPointProfile profile(const FiniteAction& x, const std::vector<Subgroup>& family, unsigned p);

/// Compares F_p[X] and F_p[Y] through fixed points on the p-hypoelementary
/// family. Throws ActorMismatch when the acting groups differ.
ModuleVerdict modules_isomorphic(const FiniteAction& x, const FiniteAction& y, unsigned p);

/// Exhaustive search for an invertible intertwining matrix over F_p.
/// Throws SearchBoundExceeded when p^(n*n) exceeds `max_volume`.
bool brute_force_iso(const FiniteAction& x, const FiniteAction& y, unsigned p, double max_volume = 5e7);

/// Compares X and Y given the actions on X+Z and Y+Z and on the common
/// summand Z, by subtracting Z's counts. Throws NegativeCount when Z is not
/// a summand of the counts on either side.
ModuleVerdict cancel(const FiniteAction& xz, const FiniteAction& yz, const FiniteAction& z, unsigned p);

/// Disjoint union of two actions of the same group.
FiniteAction disjoint_union(const FiniteAction& a, const FiniteAction& b);

/// Realizes actors given by per-part permutation tables (parts[s][a][i] on
/// sizes[s] points) as one permutation group on the disjoint union of the
/// parts, and returns the action on each part.
std::vector<FiniteAction> joint_actions(const std::vector<std::size_t>& sizes,
                                        const std::vector<std::vector<std::vector<std::size_t>>>& parts,
                                        const Limits& limits = {});

/// Same comparison as modules_isomorphic over a precomputed test family.
ModuleVerdict compare_profiles(const FiniteAction& x, const FiniteAction& y, const std::vector<Subgroup>& family,
                               unsigned p);

/// "order 2 <(0 1)>" style label of a subgroup of the acting group.
std::string describe_subgroup(const Subgroup& h);

}  // namespace stabclass
