#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stabclass/catalog.hpp"
#include "stabclass/classify.hpp"

using namespace stabclass;

namespace {

bool has_witness(const Verdict& v, const std::string& q) {
  for (const auto& w : v.witnesses) {
    if (w.q == q) return true;
  }
  return false;
}

std::set<std::string> names(const std::vector<GroupPtr>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(name_of(g));
  return out;
}

}  // namespace

TEST(Decide, SpecExamples) {
  ClassifyContext ctx;
  EXPECT_TRUE(decide(parse_group("C12"), parse_group("C4"), 2, &ctx).equivalent);
  const auto s3c3 = decide(parse_group("S3"), parse_group("C3"), 3, &ctx);
  EXPECT_FALSE(s3c3.equivalent);
  EXPECT_TRUE(has_witness(s3c3, "C3"));
  EXPECT_FALSE(decide(parse_group("C4"), parse_group("C2xC2"), 2, &ctx).equivalent);
  const auto dq = decide(parse_group("D8"), parse_group("Q8"), 2, &ctx);
  EXPECT_FALSE(dq.equivalent);
  EXPECT_TRUE(has_witness(dq, "C2xC2"));
  EXPECT_TRUE(decide(parse_group("S3"), parse_group("C2"), 2, &ctx).equivalent);
}

TEST(Decide, VerdictConsistency) {
  ClassifyContext ctx;
  const auto all = corpus(12);
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (unsigned p : prime_divisors(a.resolved->order() * b.resolved->order())) {
        const auto v = decide(a.resolved, b.resolved, p, &ctx);
        bool all_iso = true;
        for (const auto& q : v.per_q) {
          EXPECT_EQ(q.inj_range, q.inj.has_value());
          if (q.inj) all_iso = all_iso && q.inj->verdict.isomorphic;
        }
        EXPECT_EQ(v.equivalent, all_iso);
        EXPECT_EQ(v.equivalent, v.witnesses.empty());
        EXPECT_EQ(v.rep_inj_consistent, v.rep_equivalent == v.equivalent);
        EXPECT_EQ(v.prime, p);
      }
    }
  }
}

TEST(Decide, ReflexiveSymmetricAndRelabelingInvariant) {
  ClassifyContext ctx;
  const auto all = corpus(16);
  for (const auto& a : all) {
    for (unsigned p : prime_divisors(a.resolved->order())) EXPECT_TRUE(decide(a.resolved, a.resolved, p, &ctx).equivalent);
  }
  const auto d8 = parse_group("D8");
  const auto d8b = parse_group("perm:(0 1 2 3);(0 2)");
  const auto q8b = parse_group("perm:(0 1 2 3)(4 5 6 7);(0 4 2 6)(1 7 3 5)");
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 1; j < all.size(); j += 4) {
      const auto& a = all[i].resolved;
      const auto& b = all[j].resolved;
      for (unsigned p : {2u, 3u}) {
        EXPECT_EQ(decide(a, b, p, &ctx).equivalent, decide(b, a, p, &ctx).equivalent) << all[i].text << all[j].text;
      }
    }
  }
  for (const auto& a : all) {
    EXPECT_EQ(decide(a.resolved, d8, 2, &ctx).equivalent, decide(a.resolved, d8b, 2, &ctx).equivalent);
    EXPECT_EQ(decide(a.resolved, parse_group("Q8"), 2, &ctx).equivalent, decide(a.resolved, q8b, 2, &ctx).equivalent);
  }
}

TEST(Decide, NonIsomorphicSylowsAreNotEquivalent) {
  ClassifyContext ctx;
  const auto all = corpus(24);
  std::size_t tested = 0;
  for (std::size_t i = 0; i < all.size(); i += 2) {
    for (std::size_t j = i + 1; j < all.size(); j += 3) {
      for (unsigned p : {2u, 3u}) {
        const auto sa = sylow(all[i].resolved, p).as_group();
        const auto sb = sylow(all[j].resolved, p).as_group();
        if (isomorphic(sa, sb)) continue;
        ++tested;
        EXPECT_FALSE(decide(all[i].resolved, all[j].resolved, p, &ctx).equivalent) << all[i].text << all[j].text;
      }
    }
  }
  EXPECT_GT(tested, 20u);
}

TEST(Candidates, SubgroupTypesOfSylows) {
  ClassifyContext ctx;
  EXPECT_EQ(names(q_candidates(parse_group("D8"), parse_group("D8"), 2, &ctx)),
            (std::set<std::string>{"C1", "C2", "C4", "C2xC2", "D8"}));
  EXPECT_EQ(names(q_candidates(parse_group("D8"), parse_group("Q8"), 2, &ctx)),
            (std::set<std::string>{"C1", "C2", "C4", "C2xC2", "D8", "Q8"}));
  EXPECT_EQ(names(q_candidates(parse_group("S3"), parse_group("C12"), 3, &ctx)), (std::set<std::string>{"C1", "C3"}));
  const auto cs = q_candidates(parse_group("S4"), parse_group("C8"), 2, &ctx);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) EXPECT_LE(cs[i]->order(), cs[i + 1]->order());
}

TEST(Candidates, QuotientTypes) {
  EXPECT_EQ(names(quotient_types(parse_group("D8"))), (std::set<std::string>{"C1", "C2", "C2xC2"}));
  EXPECT_EQ(quotient_types(parse_group("D8")).size(), 5u);
  EXPECT_EQ(names(quotient_types(parse_group("Q8"))), (std::set<std::string>{"C1", "C2", "C2xC2"}));
  EXPECT_EQ(names(quotient_types(parse_group("C4"))), (std::set<std::string>{"C1", "C2"}));
  EXPECT_EQ(quotient_types(parse_group("C1")).size(), 0u);
}

TEST(PerQ, InjCountsMatchOracle) {
  ClassifyContext ctx;
  const auto g = parse_group("D8");
  const auto h = parse_group("S4");
  const auto v = decide(g, h, 2, &ctx);
  for (const auto& q : v.per_q) {
    if (!q.inj) continue;
    std::vector<std::vector<Element>> ia, ib;
    for (const auto& m : oracle::homs(q.q, g)) {
      if (oracle::injective(m)) ia.push_back(m);
    }
    for (const auto& m : oracle::homs(q.q, h)) {
      if (oracle::injective(m)) ib.push_back(m);
    }
    EXPECT_EQ(q.inj->size_a, oracle::conjugation_orbits(g, ia)) << q.name;
    EXPECT_EQ(q.inj->size_b, oracle::conjugation_orbits(h, ib)) << q.name;
  }
}

TEST(CompareClassSets, AgreesWithBruteForce) {
  ClassifyContext ctx;
  const auto all = corpus(12);
  std::size_t confirmed = 0;
  for (const char* qs : {"C2", "C4", "C2xC2", "C3"}) {
    const auto q = ctx.canonical_q(parse_group(qs));
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto& x = ctx.inj(q, a.resolved);
        const auto& y = ctx.inj(q, b.resolved);
        if (x.size() != y.size() || x.size() == 0 || x.size() > 4) continue;
        const auto& actors = x.action()->actors;
        std::vector<std::vector<std::vector<std::size_t>>> parts(2);
        for (const auto& phi : actors) {
          std::vector<std::size_t> tx, ty;
          for (std::size_t i = 0; i < x.size(); ++i) tx.push_back(x.act(i, phi));
          for (std::size_t i = 0; i < y.size(); ++i) ty.push_back(y.act(i, phi));
          parts[0].push_back(tx);
          parts[1].push_back(ty);
        }
        const auto acts = joint_actions({x.size(), y.size()}, parts);
        for (unsigned p : {2u, 3u}) {
          EXPECT_EQ(compare_class_sets(x, y, p, &ctx).isomorphic, brute_force_iso(acts[0], acts[1], p));
          ++confirmed;
        }
      }
    }
  }
  EXPECT_GT(confirmed, 50u);
}

TEST(Props, HoldOnEquivalentPairsAndSkipOtherwise) {
  ClassifyContext ctx;
  const auto r2 = check_prop2(parse_group("S3"), parse_group("C2"), 2, &ctx);
  EXPECT_TRUE(r2.passed());
  EXPECT_FALSE(r2.items.empty());
  EXPECT_TRUE(check_prop6(parse_group("S3"), parse_group("C2"), 2, &ctx).passed());
  EXPECT_TRUE(check_prop2(parse_group("C12"), parse_group("C4"), 2, &ctx).passed());
  EXPECT_TRUE(check_prop6(parse_group("A4xC2"), parse_group("C2xC2xC2"), 3, &ctx).passed() ||
              !decide(parse_group("A4xC2"), parse_group("C2xC2xC2"), 3, &ctx).equivalent);
  const auto skipped = check_prop2(parse_group("D8"), parse_group("Q8"), 2, &ctx);
  EXPECT_FALSE(skipped.skipped.empty());
  EXPECT_FALSE(skipped.passed());
}

TEST(ProfileDiff, ListsDifferingEntries) {
  ClassifyContext ctx;
  const auto v = decide(parse_group("S3"), parse_group("C3"), 3, &ctx);
  ASSERT_FALSE(v.witnesses.empty());
  EXPECT_NE(v.witnesses.front().diff.find(" vs "), std::string::npos);
  for (const auto& q : v.per_q) {
    if (q.inj && q.inj->verdict.isomorphic) EXPECT_EQ(profile_diff(q.inj->verdict), "");
  }
}
