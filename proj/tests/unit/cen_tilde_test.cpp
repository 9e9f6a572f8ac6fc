#include <gtest/gtest.h>

#include "stabclass/catalog.hpp"
#include "stabclass/cen_tilde.hpp"

using namespace stabclass;

namespace {

Subgroup gen(const GroupPtr& g, std::vector<std::vector<Permutation::Point>> cycles) {
  const Element e = *g->find(Permutation::from_cycles(g->degree(), cycles));
  return Subgroup::generated(g, std::vector<Element>{e});
}

// Oracle: some isomorphism A -> B composed with an automorphism of B carries
// the marked subgroup onto the other.
bool naive_marked_equivalent(const GroupPtr& a, const Subgroup& am, const GroupPtr& b, const Subgroup& bm) {
  auto iso = isomorphism(a, b);
  if (!iso) return false;
  const Subgroup image = iso->image_of(am);
  for (const auto& alpha : automorphism_group(b).automorphisms) {
    if (alpha.image_of(image) == bm) return true;
  }
  return false;
}

}  // namespace

TEST(MakeTilde, SpecExamples) {
  const auto v4 = parse_group("C2xC2");
  const auto h = gen(v4, {{0, 1}, {2, 3}});
  const auto t = make_tilde(v4, h, 2);
  EXPECT_EQ(t.tilde.order(), 4u);
  EXPECT_EQ(t.base.order(), 2u);

  const auto s3 = parse_group("S3");
  const auto tr = gen(s3, {{0, 1}});
  EXPECT_EQ(make_tilde(s3, tr, 2).tilde, tr);

  const auto c4 = parse_group("C4");
  EXPECT_EQ(make_tilde(c4, Subgroup::trivial(c4), 2).tilde, Subgroup::whole(c4));
}

TEST(MakeTilde, InvariantsOnCorpus) {
  for (const auto& spec : corpus(24)) {
    const auto& g = spec.resolved;
    for (unsigned p : prime_divisors(g->order())) {
      for (const auto& h : all_subgroups(g)) {
        if (!is_p_power(h.order(), p)) continue;
        const auto t = make_tilde(g, h, p);
        const auto hc = product_subgroup(h, centralizer(h));
        EXPECT_TRUE(h.is_subgroup_of(t.tilde));
        EXPECT_TRUE(t.tilde.is_subgroup_of(hc));
        EXPECT_EQ(t.tilde.order(), p_part(hc.order(), p));
        EXPECT_EQ(t.marked.order(), h.order());
        if (qualifies(h, p)) EXPECT_LT(h.order(), t.tilde.order()) << spec.text;
      }
    }
  }
}

TEST(MakeTilde, SylowChoiceDoesNotMatterUpToEquivalence) {
  for (const char* spec : {"S4", "D12", "A4", "D8xC3", "S3xC4", "Q8xC3", "D24"}) {
    const auto g = parse_group(spec);
    for (unsigned p : prime_divisors(g->order())) {
      for (const auto& h : all_subgroups(g)) {
        if (!is_p_power(h.order(), p)) continue;
        const auto chosen = make_tilde(g, h, p);
        const auto hc = product_subgroup(h, centralizer(h));
        for (const auto& s : all_subgroups(g)) {
          if (s.order() != chosen.tilde.order() || !h.is_subgroup_of(s) || !s.is_subgroup_of(hc)) continue;
          const auto sg = s.as_group();
          std::vector<Element> local;
          for (std::size_t i = 0; i < s.order(); ++i) {
            if (h.contains(s.elements()[i])) local.push_back(static_cast<Element>(i));
          }
          const auto marked = Subgroup::from_elements(sg, local);
          EXPECT_TRUE(marked_isomorphism(chosen.tilde_group, chosen.marked, sg, marked)) << spec;
        }
      }
    }
  }
}

TEST(Equivalence, SpecExamples) {
  const auto v4 = parse_group("C2xC2");
  const auto a = make_tilde(v4, gen(v4, {{0, 1}}), 2);
  const auto b = make_tilde(v4, gen(v4, {{2, 3}}), 2);
  EXPECT_TRUE(equivalent_pairs(a, a));
  auto s = equivalent_pairs(a, b);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->is_bijective());
  EXPECT_EQ(s->image_of(a.marked), b.marked);
  const auto c4 = parse_group("C4");
  const auto c = make_tilde(c4, gen(c4, {{0, 2}, {1, 3}}), 2);
  EXPECT_FALSE(equivalent_pairs(a, c));
}

TEST(Equivalence, AgreesWithAutomorphismOracle) {
  for (const char* spec : {"C2xC2", "D8", "Q8", "C4xC2", "S4", "D16", "C2xC2xC2", "Q8xC2", "D8xC2"}) {
    const auto g = parse_group(spec);
    std::vector<TildePair> pairs;
    for (const auto& h : all_subgroups(g)) {
      if (is_p_power(h.order(), 2)) pairs.push_back(make_tilde(g, h, 2));
    }
    for (std::size_t i = 0; i < pairs.size(); i += 2) {
      for (std::size_t j = 0; j < pairs.size(); j += 3) {
        const bool fast = equivalent_pairs(pairs[i], pairs[j]).has_value();
        const bool slow = naive_marked_equivalent(pairs[i].tilde_group, pairs[i].marked, pairs[j].tilde_group,
                                                  pairs[j].marked);
        ASSERT_EQ(fast, slow) << spec << " " << i << " " << j;
      }
    }
  }
}

TEST(TildeTable, SpecExamples) {
  const auto c2 = tilde_class_table(parse_group("C2"), 2);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_TRUE(c2.rep(0).base.is_trivial());
  EXPECT_EQ(c2.tilde_order(0), 2u);
  const auto s3 = tilde_class_table(parse_group("S3"), 2);
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_TRUE(s3.rep(0).base.is_trivial());
  EXPECT_EQ(s3.tilde_order(0), 2u);
  const auto empty = tilde_class_table(parse_group("S3"), 5);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_TRUE(verify_lemma3(empty).passed());
}

TEST(TildeTable, InvariantsOnCorpus) {
  for (const auto& spec : corpus(24)) {
    for (unsigned p : prime_divisors(spec.resolved->order())) {
      const auto t = tilde_class_table(spec.resolved, p);
      for (std::size_t j = 0; j + 1 < t.size(); ++j) EXPECT_GE(t.tilde_order(j), t.tilde_order(j + 1));
      for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t k = j + 1; k < t.size(); ++k) EXPECT_FALSE(equivalent_pairs(t.rep(j), t.rep(k)));
      }
      for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        EXPECT_TRUE(equivalent_pairs(t.pairs[i], t.rep(t.membership[i])));
        EXPECT_EQ(t.classify(t.pairs[i].base), t.membership[i]);
      }
      if (t.size()) EXPECT_EQ(t.tilde_order(0), p_part(spec.resolved->order(), p)) << spec.text;
    }
  }
}

TEST(Cen, SpecExamples) {
  const auto c2 = parse_group("C2");
  const auto v4 = parse_group("C2xC2");
  const auto c4 = parse_group("C4");
  EXPECT_EQ(cen_classes(c2, c2, 2).size(), 1u);
  EXPECT_EQ(inj_classes(c2, c2).size(), 1u);
  EXPECT_EQ(cen_classes(c2, v4, 2).size(), 0u);
  EXPECT_EQ(inj_classes(c2, v4).size(), 3u);
  EXPECT_EQ(cen_classes(c4, c4, 2).size(), 2u);
  EXPECT_EQ(ncen_classes(c2, v4, 2).size(), 3u);
  EXPECT_EQ(ncen_classes(c2, c2, 2).size(), 0u);
}

TEST(Cen, MaximalRepHasEmptyNCen) {
  for (const auto& spec : corpus(24)) {
    for (unsigned p : prime_divisors(spec.resolved->order())) {
      const auto t = tilde_class_table(spec.resolved, p);
      for (std::size_t j = 0; j < t.size() && t.tilde_order(j) == t.tilde_order(0); ++j) {
        EXPECT_TRUE(ncen_classes(t.rep(j).tilde_group, spec.resolved, p).empty()) << spec.text;
      }
    }
  }
}

TEST(Cen, MembershipInvariantUnderConjugationAndOut) {
  for (const char* qs : {"C2", "C4", "C2xC2", "C3", "D8"}) {
    const auto q = parse_group(qs);
    const auto aut = automorphism_group(q);
    for (const char* gs : {"S4", "D8xC3", "Q8xC3", "A4xC2", "D12"}) {
      const auto g = parse_group(gs);
      const unsigned p = prime_divisors(q->order()).front();
      const auto inj = inj_classes(q, g, &aut);
      const auto [cen, ncen] = split_cen(inj, p);
      EXPECT_EQ(cen.size() + ncen.size(), inj.size());
      for (const auto& f : inj.items()) {
        const bool base = in_cen(f, p);
        for (std::size_t x = 0; x < g->order(); x += 3) {
          EXPECT_EQ(in_cen(compose(GroupHom::conjugation(g, static_cast<Element>(x)), f), p), base);
        }
        for (const auto& phi : aut.automorphisms) EXPECT_EQ(in_cen(compose(f, phi), p), base);
      }
    }
  }
}

TEST(CenSub, SpecExamples) {
  const auto c2 = parse_group("C2");
  const auto t = tilde_class_table(c2, 2);
  EXPECT_EQ(cen_sub(t, 0, 0).size(), cen_classes(c2, c2, 2).size());
  EXPECT_EQ(cen_sub(t, 0, 0).size(), 1u);
  for (const char* spec : {"C4", "D8", "S4", "C2xC2", "Q8xC3"}) {
    const auto g = parse_group(spec);
    const auto tt = tilde_class_table(g, 2);
    for (std::size_t j = 0; j < tt.size(); ++j) {
      for (std::size_t k = 0; k < tt.size(); ++k) {
        if (j != k && tt.tilde_order(j) == tt.tilde_order(k)) EXPECT_TRUE(cen_sub(tt, j, k).empty());
      }
      if (tt.tilde_order(j) == tt.tilde_order(0)) {
        EXPECT_EQ(cen_sub(tt, j, j).size(), cen_classes(tt.rep(j).tilde_group, g, 2).size());
      }
    }
  }
}

TEST(Lemma3Verifier, PassesOnCorpus) {
  for (const auto& spec : corpus(16)) {
    for (unsigned p : prime_divisors(spec.resolved->order())) {
      const auto r = verify_lemma3(spec.resolved, p);
      EXPECT_TRUE(r.passed()) << spec.text << " p=" << p;
      EXPECT_EQ(r.items.size(), 5u);
    }
  }
}

TEST(Lemma3Verifier, CorruptedTableFailsWithWitness) {
  const auto t = tilde_class_table(parse_group("C4"), 2);
  ASSERT_GE(t.size(), 2u);
  const auto r = verify_lemma3(corrupt_table_for_testing(t, 0, 1));
  EXPECT_FALSE(r.passed());
  const CheckItem* five = nullptr;
  for (const auto& item : r.items) {
    if (item.name.rfind("(5)", 0) == 0) five = &item;
  }
  ASSERT_NE(five, nullptr);
  EXPECT_FALSE(five->passed);
  EXPECT_FALSE(five->witnesses.empty());
}
