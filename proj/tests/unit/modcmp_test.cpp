#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stabclass/catalog.hpp"
#include "stabclass/errors.hpp"
#include "stabclass/modcmp.hpp"

using namespace stabclass;

namespace {

// Every action of g on n points, one per homomorphism into S_n.
std::vector<FiniteAction> all_actions(const GroupPtr& g, std::size_t n) {
  std::vector<FiniteAction> out;
  if (n == 0) {
    out.push_back(FiniteAction::from_table(g, 0, std::vector<std::vector<std::size_t>>(g->order())));
    return out;
  }
  const auto sn = parse_group(n == 1 ? "C1" : "S" + std::to_string(n));
  for (const auto& map : oracle::homs(g, sn)) {
    std::vector<std::vector<std::size_t>> table(g->order(), std::vector<std::size_t>(n));
    for (std::size_t e = 0; e < g->order(); ++e) {
      for (std::size_t x = 0; x < n; ++x) table[e][x] = x < sn->degree() ? sn->element(map[e])(x) : x;
    }
    out.push_back(FiniteAction::from_table(g, n, std::move(table)));
  }
  return out;
}

FiniteAction coset_action(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<std::vector<Element>> cosets;
  std::vector<std::size_t> which(g->order(), SIZE_MAX);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (which[x] != SIZE_MAX) continue;
    std::vector<Element> c;
    for (Element y : h.elements()) {
      const Element xy = g->mul(static_cast<Element>(x), y);
      which[static_cast<std::size_t>(xy)] = cosets.size();
      c.push_back(xy);
    }
    cosets.push_back(c);
  }
  std::vector<std::vector<std::size_t>> table(g->order(), std::vector<std::size_t>(cosets.size()));
  for (std::size_t e = 0; e < g->order(); ++e) {
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      table[e][c] = which[static_cast<std::size_t>(g->mul(static_cast<Element>(e), cosets[c][0]))];
    }
  }
  return FiniteAction::from_table(g, cosets.size(), std::move(table));
}

FiniteAction copies(const FiniteAction& a, std::size_t k) {
  FiniteAction out = FiniteAction::from_table(a.group, 0, std::vector<std::vector<std::size_t>>(a.group->order()));
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, a);
  return out;
}

bool naive_hypoelementary(const Subgroup& h, unsigned p) {
  const auto& g = h.parent();
  std::vector<Element> pe;
  for (Element e : h.elements()) {
    if (is_p_power(g->element_order(e), p)) pe.push_back(e);
  }
  if (pe.size() != p_part(h.order(), p)) return false;
  const Subgroup sp = Subgroup::from_elements(g, pe);
  for (Element e : h.elements()) {
    std::vector<Element> gens = sp.generators();
    gens.push_back(e);
    if (Subgroup::generated(g, gens).order() == h.order()) return true;
  }
  return false;
}

}  // namespace

TEST(FiniteAction, RejectsNonActions) {
  const auto c2 = parse_group("C2");
  EXPECT_THROW(FiniteAction::from_table(c2, 2, {{0, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(FiniteAction::from_table(c2, 2, {{1, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(FiniteAction::from_table(c2, 2, {{0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(FiniteAction::from_table(c2, 2, {{0, 1}, {1, 0}}));
}

TEST(FixedPoints, MatchesElementScan) {
  for (const char* gs : {"S3", "D8", "C4xC2", "A4"}) {
    const auto g = parse_group(gs);
    for (const auto& k : all_subgroups(g)) {
      const auto x = coset_action(k);
      for (const auto& h : all_subgroups(g)) {
        std::size_t naive = 0;
        for (std::size_t pt = 0; pt < x.points; ++pt) {
          bool fixed = true;
          for (Element e : h.elements()) fixed = fixed && x.table[static_cast<std::size_t>(e)][pt] == pt;
          naive += fixed;
        }
        EXPECT_EQ(fixed_points(x, h), naive);
      }
    }
  }
}

TEST(Hypoelementary, MatchesDefinition) {
  for (const char* gs : {"S3", "D8", "A4", "S4", "C3xC3", "D12", "Q8xC3"}) {
    const auto g = parse_group(gs);
    for (unsigned p : {2u, 3u, 5u}) {
      for (const auto& h : all_subgroups(g)) EXPECT_EQ(is_p_hypoelementary(h, p), naive_hypoelementary(h, p)) << gs;
    }
  }
  const auto v4 = parse_group("C2xC2");
  EXPECT_TRUE(is_p_hypoelementary(Subgroup::whole(v4), 2));
  EXPECT_FALSE(is_p_hypoelementary(Subgroup::whole(v4), 3));
}

TEST(TestFamily, OnePerConjugacyClass) {
  for (const char* gs : {"S3", "D8", "A4", "S4", "C3xC3"}) {
    const auto g = parse_group(gs);
    for (unsigned p : {2u, 3u}) {
      const auto fam = test_family(g, p);
      ASSERT_FALSE(fam.empty());
      EXPECT_TRUE(fam.front().is_trivial());
      for (std::size_t i = 0; i < fam.size(); ++i) {
        EXPECT_TRUE(is_p_hypoelementary(fam[i], p));
        for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_FALSE(are_conjugate(fam[i], fam[j]).has_value());
      }
      for (const auto& h : all_subgroups(g)) {
        if (!is_p_hypoelementary(h, p)) continue;
        std::size_t hits = 0;
        for (const auto& f : fam) hits += are_conjugate(h, f).has_value();
        EXPECT_EQ(hits, 1u);
      }
    }
  }
}

TEST(ModulesIsomorphic, AgreesWithBruteForceOnSmallActions) {
  for (const char* gs : {"C2", "C3", "C4", "C2xC2", "S3"}) {
    const auto g = parse_group(gs);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto acts = all_actions(g, n);
      for (unsigned p : {2u, 3u}) {
        for (const auto& x : acts) {
          for (const auto& y : acts) {
            EXPECT_EQ(modules_isomorphic(x, y, p).isomorphic, brute_force_iso(x, y, p)) << gs << " n=" << n;
          }
        }
      }
    }
  }
}

TEST(ModulesIsomorphic, SpecExamples) {
  const auto c2 = parse_group("C2");
  const auto regular = FiniteAction::from_table(c2, 2, {{0, 1}, {1, 0}});
  const auto trivial = FiniteAction::from_table(c2, 2, {{0, 1}, {0, 1}});
  const auto v = modules_isomorphic(regular, trivial, 2);
  EXPECT_FALSE(v.isomorphic);
  EXPECT_FALSE(v.differing.empty());
  EXPECT_FALSE(brute_force_iso(regular, trivial, 2));
  EXPECT_TRUE(modules_isomorphic(regular, regular, 2).isomorphic);
  EXPECT_THROW(modules_isomorphic(regular, FiniteAction::from_table(parse_group("C3"), 1, {{0}, {0}, {0}}), 2),
               ActorMismatch);
}

// Over F_2 the four order-3 cosets of C3xC3 match one regular orbit plus
// three fixed points, although the two sets are not isomorphic.
TEST(ModulesIsomorphic, LinearButNotPermutationIsomorphic) {
  const auto g = parse_group("C3xC3");
  FiniteAction x = copies(coset_action(Subgroup::whole(g)), 0);
  for (const auto& h : all_subgroups(g)) {
    if (h.order() == 3) x = disjoint_union(x, coset_action(h));
  }
  const FiniteAction y = disjoint_union(coset_action(Subgroup::trivial(g)), copies(coset_action(Subgroup::whole(g)), 3));
  ASSERT_EQ(x.points, 12u);
  ASSERT_EQ(y.points, 12u);
  EXPECT_TRUE(modules_isomorphic(x, y, 2).isomorphic);
  EXPECT_FALSE(modules_isomorphic(x, y, 3).isomorphic);
  EXPECT_NE(fixed_points(x, Subgroup::whole(g)), fixed_points(y, Subgroup::whole(g)));
}

TEST(BruteForce, BoundIsEnforced) {
  const auto g = parse_group("C3xC3");
  const auto x = coset_action(Subgroup::trivial(g));
  EXPECT_THROW(brute_force_iso(x, x, 2), SearchBoundExceeded);
}

TEST(Cancel, SubtractsCommonSummand) {
  const auto g = parse_group("S3");
  const auto fam = all_subgroups(g);
  for (const auto& a : fam) {
    for (const auto& b : fam) {
      for (const auto& c : fam) {
        const auto x = coset_action(a);
        const auto y = coset_action(b);
        const auto z = coset_action(c);
        for (unsigned p : {2u, 3u}) {
          const auto direct = modules_isomorphic(x, y, p);
          const auto via = cancel(disjoint_union(x, z), disjoint_union(y, z), z, p);
          EXPECT_EQ(direct.isomorphic, via.isomorphic);
          EXPECT_EQ(direct.x.counts, via.x.counts);
        }
      }
    }
  }
  const auto big = copies(coset_action(Subgroup::whole(g)), 3);
  const auto one = coset_action(Subgroup::whole(g));
  EXPECT_THROW(cancel(one, one, big, 2), NegativeCount);
}

TEST(JointActions, RealizesActorsOnEachPart) {
  // Part 0: a transposition and a 3-cycle on 3 points; part 1: sign on 2 points.
  const std::vector<std::size_t> sizes{3, 2};
  const std::vector<std::vector<std::vector<std::size_t>>> parts{{{1, 0, 2}, {1, 2, 0}}, {{1, 0}, {0, 1}}};
  const auto acts = joint_actions(sizes, parts);
  ASSERT_EQ(acts.size(), 2u);
  const auto& gamma = acts[0].group;
  EXPECT_EQ(gamma->order(), 6u);
  EXPECT_EQ(acts[1].group, gamma);
  for (std::size_t a = 0; a < 2; ++a) {
    const Element e = *gamma->find(gamma->generators()[a]);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t i = 0; i < sizes[s]; ++i) EXPECT_EQ(acts[s].table[static_cast<std::size_t>(e)][i], parts[s][a][i]);
    }
  }
  EXPECT_EQ(describe_subgroup(Subgroup::trivial(gamma)), "order 1 <>");
}
