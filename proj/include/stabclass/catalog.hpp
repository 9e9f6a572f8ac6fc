#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stabclass/group.hpp"

namespace stabclass {

/// Largest order accepted by corpus().
inline constexpr std::size_t kCorpusCeiling = 32;

struct GroupSpec {
  std::string text;
  GroupPtr resolved;
};

/// Grammar:
///   spec    := "perm:" gens | factor ("x" factor)*
///   factor  := "C" n | "D" n | "Q" n | "S" n | "A" n
///   gens    := cycles (";" cycles)*
///   cycles  := "()" | ("(" point (" " point)* ")")+
/// D<n> is dihedral of order n (n even), Q<n> generalized quaternion of
/// order n (a power of two, at least 8). Factors of a product act on
/// disjoint point ranges.
GroupPtr parse_group(std::string_view text, const Limits& limits = {});

/// "perm:" form listing the stored generators.
std::string canonical_form(const GroupPtr& g);

/// The curated test corpus: groups of order <= max_order, sorted by order
/// and then by listing order. Throws std::invalid_argument above
/// kCorpusCeiling.
std::vector<GroupSpec> corpus(std::size_t max_order);

/// A preset or corpus spec isomorphic to g, else canonical_form(g).
std::string name_of(const GroupPtr& g);

/// Cheap isomorphism invariants: order, element-order histogram, centre size.
std::vector<std::size_t> group_invariants(const GroupPtr& g);

bool isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace stabclass
