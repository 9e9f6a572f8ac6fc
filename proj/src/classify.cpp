#include "stabclass/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stabclass/bijections.hpp"
#include "stabclass/catalog.hpp"
#include "stabclass/errors.hpp"

namespace stabclass {

namespace {

const Limits kActionLimits{2000, 4096, 20000};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<FiniteAction> joint(const std::vector<const ClassSet*>& sets) {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::vector<std::size_t>>> parts;
  for (const ClassSet* s : sets) {
    if (!s->action()) throw ActorMismatch("class set has no action attached");
    sizes.push_back(s->size());
    parts.push_back(s->action()->table);
  }
  return joint_actions(sizes, parts, kActionLimits);
}

std::size_t count_cen(const ClassSet& set, unsigned p) {
  return static_cast<std::size_t>(
      std::count_if(set.items().begin(), set.items().end(), [p](const GroupHom& f) { return in_cen(f, p); }));
}

struct ContextHolder {
  explicit ContextHolder(ClassifyContext* given) : ctx(given ? given : &local) {}
  ClassifyContext local;
  ClassifyContext* ctx;
};

}  // namespace

GroupPtr ClassifyContext::canonical_q(const GroupPtr& q) {
  for (const auto& r : registry_) {
    if (r == q) return r;
  }
  const auto inv = group_invariants(q);
  auto& bucket = by_invariants_[inv];
  for (std::size_t idx : bucket) {
    if (isomorphism(q, registry_[idx])) return registry_[idx];
  }
  bucket.push_back(registry_.size());
  registry_.push_back(q);
  return q;
}

const AutomorphismGroup& ClassifyContext::aut(const GroupPtr& q) {
  auto it = aut_.find(q.get());
  if (it == aut_.end()) {
    hold(q);
    it = aut_.emplace(q.get(), automorphism_group(q)).first;
  }
  return it->second;
}

const ClassSet& ClassifyContext::inj(const GroupPtr& q, const GroupPtr& g) {
  const Key key{q.get(), g.get()};
  auto it = inj_.find(key);
  if (it == inj_.end()) {
    hold(q);
    hold(g);
    it = inj_.emplace(key, inj_classes(q, g, &aut(q))).first;
  }
  return it->second;
}

const ClassSet& ClassifyContext::rep(const GroupPtr& q, const GroupPtr& g) {
  const Key key{q.get(), g.get()};
  auto it = rep_.find(key);
  if (it == rep_.end()) {
    hold(q);
    hold(g);
    it = rep_.emplace(key, rep_classes(q, g, &aut(q))).first;
  }
  return it->second;
}

const TildeClassTable& ClassifyContext::tilde(const GroupPtr& g, unsigned p) {
  const auto key = std::make_pair(g.get(), p);
  auto it = tilde_.find(key);
  if (it == tilde_.end()) {
    hold(g);
    it = tilde_.emplace(key, tilde_class_table(g, p)).first;
  }
  return it->second;
}

const std::vector<Subgroup>& ClassifyContext::family(const GroupPtr& gamma, unsigned p) {
  // Equal generator lists give equal closures with the same element order.
  auto key = std::make_pair(gamma->generators(), p);
  auto it = family_.find(key);
  if (it == family_.end()) it = family_.emplace(std::move(key), test_family(gamma, p)).first;
  return it->second;
}

std::vector<GroupPtr> quotient_types(const GroupPtr& q) {
  std::vector<GroupPtr> out;
  for (const auto& n : all_subgroups(q)) {
    if (n.is_trivial()) continue;
    if (!(normalizer(n) == Subgroup::whole(q))) continue;
    std::vector<int> coset(q->order(), -1);
    std::size_t cosets = 0;
    for (std::size_t x = 0; x < q->order(); ++x) {
      if (coset[x] >= 0) continue;
      for (Element m : n.elements()) coset[static_cast<std::size_t>(q->mul(static_cast<Element>(x), m))] = static_cast<int>(cosets);
      ++cosets;
    }
    std::vector<Element> reps(cosets);
    for (std::size_t x = q->order(); x-- > 0;) reps[static_cast<std::size_t>(coset[x])] = static_cast<Element>(x);
    std::vector<Permutation> gens;
    for (const auto& s : q->generators()) {
      const Element se = *q->find(s);
      std::vector<Permutation::Point> images(cosets);
      for (std::size_t c = 0; c < cosets; ++c) {
        images[c] = static_cast<Permutation::Point>(coset[static_cast<std::size_t>(q->mul(se, reps[c]))]);
      }
      gens.emplace_back(std::move(images));
    }
    out.push_back(FiniteGroup::closure(std::move(gens), cosets, Limits{400, 400, 20000}));
  }
  return out;
}

std::vector<GroupPtr> q_candidates(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx) {
  ContextHolder holder(ctx);
  std::vector<GroupPtr> found;
  for (const GroupPtr& side : {g, g_prime}) {
    const Subgroup s = sylow(side, p);
    const GroupPtr sg = s.as_group();
    for (const auto& h : all_subgroups(sg)) {
      GroupPtr q = holder.ctx->canonical_q(h.as_group());
      if (std::find(found.begin(), found.end(), q) == found.end()) found.push_back(q);
    }
  }
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keys;
  for (std::size_t i = 0; i < found.size(); ++i) keys.emplace_back(group_invariants(found[i]), i);
  std::stable_sort(keys.begin(), keys.end());
  std::vector<GroupPtr> out;
  for (const auto& [inv, i] : keys) out.push_back(found[i]);
  return out;
}

ModuleVerdict compare_class_sets(const ClassSet& a, const ClassSet& b, unsigned p, ClassifyContext* ctx) {
  const auto acts = joint({&a, &b});
  if (ctx) return compare_profiles(acts[0], acts[1], ctx->family(acts[0].group, p), p);
  return modules_isomorphic(acts[0], acts[1], p);
}

std::string profile_diff(const ModuleVerdict& v) {
  std::vector<std::string> parts;
  for (std::size_t i : v.differing) {
    parts.push_back("fixed points of " + describe_subgroup(v.x.subgroups[i]) + ": " + std::to_string(v.x.counts[i]) +
                    " vs " + std::to_string(v.y.counts[i]));
  }
  return join(parts, "; ");
}

Verdict decide(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  ContextHolder holder(ctx);
  ClassifyContext& c = *holder.ctx;
  const auto candidates = q_candidates(g, g_prime, p, &c);

  std::vector<GroupPtr> range = candidates;
  for (const auto& q : candidates) {
    for (const auto& quotient : quotient_types(q)) {
      GroupPtr r = c.canonical_q(quotient);
      if (std::find(range.begin(), range.end(), r) == range.end()) range.push_back(r);
    }
  }
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keys;
  for (std::size_t i = 0; i < range.size(); ++i) keys.emplace_back(group_invariants(range[i]), i);
  std::stable_sort(keys.begin(), keys.end());

  Verdict v;
  v.prime = p;
  v.rep_equivalent = true;
  for (const auto& [inv, i] : keys) {
    const GroupPtr& q = range[i];
    QComparison row;
    row.q = q;
    row.name = name_of(q);
    row.inj_range = std::find(candidates.begin(), candidates.end(), q) != candidates.end();
    if (row.inj_range) {
      const ClassSet& ia = c.inj(q, g);
      const ClassSet& ib = c.inj(q, g_prime);
      ModuleComparison mc{ia.size(), ib.size(), compare_class_sets(ia, ib, p, &c)};
      row.cen_a = count_cen(ia, p);
      row.cen_b = count_cen(ib, p);
      if (!mc.verdict.isomorphic) {
        v.witnesses.push_back({row.name, "|Inj(Q,G)| = " + std::to_string(mc.size_a) + " vs |Inj(Q,G')| = " +
                                             std::to_string(mc.size_b) + "; " + profile_diff(mc.verdict)});
      }
      row.inj = std::move(mc);
    }
    const ClassSet& ra = c.rep(q, g);
    const ClassSet& rb = c.rep(q, g_prime);
    row.rep = ModuleComparison{ra.size(), rb.size(), compare_class_sets(ra, rb, p, &c)};
    if (!row.rep.verdict.isomorphic) v.rep_equivalent = false;
    v.per_q.push_back(std::move(row));
  }
  v.equivalent = v.witnesses.empty();
  v.rep_inj_consistent = v.rep_equivalent == v.equivalent;
  return v;
}

CheckReport check_prop2(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx) {
  ContextHolder holder(ctx);
  ClassifyContext& c = *holder.ctx;
  CheckReport report;
  report.title = "prop2";
  if (!decide(g, g_prime, p, &c).equivalent) {
    report.skipped = "groups are not equivalent; no claim made";
    return report;
  }
  CheckItem cen_iso("Cen(Q,G) and Cen(Q,G') match as Out(Q)-modules");
  CheckItem additive("Inj = Cen + nCen entrywise on both sides");
  CheckItem ncen_iso("nCen(Q,G) and nCen(Q,G') match as Out(Q)-modules");
  CheckItem cancelled("cancelling nCen from matched Inj gives matching Cen");
  for (const auto& q : q_candidates(g, g_prime, p, &c)) {
    const std::string name = name_of(q);
    const ClassSet& ia = c.inj(q, g);
    const ClassSet& ib = c.inj(q, g_prime);
    const auto [ca, na] = split_cen(ia, p);
    const auto [cb, nb] = split_cen(ib, p);
    const auto acts = joint({&ia, &ib, &ca, &cb, &na, &nb});
    const auto& family = c.family(acts[0].group, p);

    ++cen_iso.checked;
    const auto cen_v = compare_profiles(acts[2], acts[3], family, p);
    if (!cen_v.isomorphic) cen_iso.fail("Q = " + name + ": " + profile_diff(cen_v));

    for (std::size_t side = 0; side < 2; ++side) {
      ++additive.checked;
      const auto inj_p = profile(acts[side], family, p);
      const auto cen_p = profile(acts[2 + side], family, p);
      const auto ncen_p = profile(acts[4 + side], family, p);
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (inj_p.counts[k] != cen_p.counts[k] + ncen_p.counts[k]) {
          additive.fail("Q = " + name + (side ? ", G'" : ", G") + " at " + describe_subgroup(family[k]));
        }
      }
    }

    ++ncen_iso.checked;
    const auto ncen_v = compare_profiles(acts[4], acts[5], family, p);
    if (!ncen_v.isomorphic) ncen_iso.fail("Q = " + name + ": " + profile_diff(ncen_v));

    ++cancelled.checked;
    try {
      const auto cv = cancel(acts[0], acts[1], acts[4], p);
      if (cv.isomorphic != cen_v.isomorphic || !cv.isomorphic) {
        cancelled.fail("Q = " + name + ": " + profile_diff(cv));
      }
    } catch (const NegativeCount& e) {
      cancelled.fail("Q = " + name + ": " + e.what());
    }
  }
  report.items = {cen_iso, additive, ncen_iso, cancelled};
  return report;
}

CheckReport check_prop6(const GroupPtr& g, const GroupPtr& g_prime, unsigned p, ClassifyContext* ctx) {
  ContextHolder holder(ctx);
  ClassifyContext& c = *holder.ctx;
  CheckReport report;
  report.title = "prop6";
  if (!decide(g, g_prime, p, &c).equivalent) {
    report.skipped = "groups are not equivalent; no claim made";
    return report;
  }
  const TildeClassTable& ta = c.tilde(g, p);
  const TildeClassTable& tb = c.tilde(g_prime, p);
  CheckItem matched("tilde representatives match across the groups");
  CheckItem out_item("Cen(Q~_j,G) and Cen(Q~_j,G') match as Out(Q~_j)-modules");
  CheckItem rel_item("Cen_{Q_j}(Q~_j,Q~_j,G) and its G' counterpart match as Aut(Q~_j|Q_j)-modules");

  std::vector<bool> used(tb.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < ta.size(); ++j) {
    ++matched.checked;
    bool found = false;
    for (std::size_t k = 0; k < tb.size() && !found; ++k) {
      if (used[k] || !equivalent_pairs(ta.rep(j), tb.rep(k))) continue;
      used[k] = true;
      found = true;
      pairs.emplace_back(j, k);
    }
    if (!found) {
      matched.fail("G rep " + std::to_string(j) + " (" + name_of(ta.rep(j).base.as_group()) + " in " +
                   name_of(ta.rep(j).tilde_group) + ") has no partner");
    }
  }
  for (std::size_t k = 0; k < tb.size(); ++k) {
    if (used[k]) continue;
    matched.fail("G' rep " + std::to_string(k) + " (" + name_of(tb.rep(k).base.as_group()) + " in " +
                 name_of(tb.rep(k).tilde_group) + ") has no partner");
  }

  for (const auto& [j, k] : pairs) {
    const TildePair& src = ta.rep(j);
    const GroupPtr& tilde = src.tilde_group;
    const std::string label = "j = " + std::to_string(j) + " (" + name_of(tilde) + ")";
    const ClassSet ca = split_cen(c.inj(tilde, g), p).first;
    const ClassSet cb = split_cen(c.inj(tilde, g_prime), p).first;
    ++out_item.checked;
    const auto v = compare_class_sets(ca, cb, p, &c);
    if (!v.isomorphic) out_item.fail(label + ": " + profile_diff(v));

    const auto rel = aut_rel(tilde, src.marked).elements;
    ClassSet plain_a = ca;
    ClassSet plain_b = cb;
    plain_a.detach_action();
    plain_b.detach_action();
    ClassSet sa = cen_sub(plain_a, src.marked, ta, j);
    ClassSet sb = cen_sub(plain_b, src.marked, tb, k);
    sa.attach_action("Aut(Q~|Q)", rel);
    sb.attach_action("Aut(Q~|Q)", rel);
    ++rel_item.checked;
    const auto w = compare_class_sets(sa, sb, p, &c);
    if (!w.isomorphic) rel_item.fail(label + ": " + profile_diff(w));
  }
  report.items = {matched, out_item, rel_item};
  return report;
}

}  // namespace stabclass
