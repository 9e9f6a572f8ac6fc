#include "stabclass/cen_tilde.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stabclass/errors.hpp"

namespace stabclass {

namespace {

std::vector<std::size_t> marked_signature(const GroupPtr& t, const Subgroup& m) {
  std::vector<std::size_t> sig{t->order(), m.order()};
  std::vector<std::size_t> orders;
  for (std::size_t x = 0; x < t->order(); ++x) orders.push_back(t->element_order(static_cast<Element>(x)));
  std::sort(orders.begin(), orders.end());
  sig.insert(sig.end(), orders.begin(), orders.end());
  orders.clear();
  for (Element e : m.elements()) orders.push_back(t->element_order(e));
  std::sort(orders.begin(), orders.end());
  sig.insert(sig.end(), orders.begin(), orders.end());
  const Subgroup whole = Subgroup::whole(t);
  const Subgroup z = center(whole);
  sig.push_back(z.order());
  sig.push_back(centralizer(m).order());
  sig.push_back(intersection(m, z).order());
  sig.push_back(normalizer(m).order());
  return sig;
}

}  // namespace

bool qualifies(const Subgroup& h, unsigned p) {
  return !is_p_prime_quotient(centralizer(h), center(h), p);
}

TildePair make_tilde(const GroupPtr& g, const Subgroup& h, unsigned p) {
  if (!same_group(h.parent(), g)) throw std::invalid_argument("subgroup of a different group");
  if (!is_p_power(h.order(), p)) throw std::invalid_argument("base is not a p-subgroup");
  TildePair pair;
  pair.ambient = g;
  pair.prime = p;
  pair.base = h;
  const Subgroup hc = product_subgroup(h, centralizer(h));
  pair.tilde = sylow_containing(hc, h, p);
  pair.tilde_group = pair.tilde.as_group();
  std::vector<Element> local;
  for (std::size_t i = 0; i < pair.tilde.order(); ++i) {
    if (h.contains(pair.tilde.elements()[i])) local.push_back(static_cast<Element>(i));
  }
  pair.marked = Subgroup::from_elements(pair.tilde_group, std::move(local));
  pair.inclusion = GroupHom::inclusion(pair.tilde, pair.tilde_group);
  pair.signature = marked_signature(pair.tilde_group, pair.marked);
  return pair;
}

namespace {

std::optional<GroupHom> marked_search(const GroupPtr& a, const Subgroup& a_marked, const GroupPtr& b,
                                      const Subgroup& b_marked) {
  if (a->order() != b->order() || a_marked.order() != b_marked.order()) return std::nullopt;
  HomSearch search;
  search.injective = true;
  search.generators = generating_sequence(a, a_marked.elements());
  for (Element s : search.generators) {
    if (!a_marked.contains(s)) break;
    search.candidates.push_back(b_marked.elements());
  }
  std::optional<GroupHom> found;
  for_each_homomorphism(a, b, search, [&](const std::vector<Element>& map) {
    found = GroupHom(a, b, map);
    return false;
  });
  return found;
}

}  // namespace

std::optional<GroupHom> marked_isomorphism(const GroupPtr& a, const Subgroup& a_marked, const GroupPtr& b,
                                           const Subgroup& b_marked) {
  if (a->order() != b->order() || a_marked.order() != b_marked.order()) return std::nullopt;
  if (marked_signature(a, a_marked) != marked_signature(b, b_marked)) return std::nullopt;
  return marked_search(a, a_marked, b, b_marked);
}

std::optional<GroupHom> equivalent_pairs(const TildePair& a, const TildePair& b) {
  if (a.prime != b.prime) throw std::invalid_argument("pairs for different primes");
  if (a.signature != b.signature) return std::nullopt;
  return marked_search(a.tilde_group, a.marked, b.tilde_group, b.marked);
}

std::optional<std::size_t> TildeClassTable::classify(const Subgroup& base) const {
  auto it = by_base.find(base.elements());
  if (it == by_base.end()) return std::nullopt;
  return membership[it->second];
}

TildeClassTable tilde_class_table(const GroupPtr& g, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  TildeClassTable table;
  table.ambient = g;
  table.prime = p;
  for (const Subgroup& h : all_subgroups(g)) {
    if (!is_p_power(h.order(), p) || !qualifies(h, p)) continue;
    table.by_base.emplace(h.elements(), table.pairs.size());
    table.pairs.push_back(make_tilde(g, h, p));
  }
  // First member of each class, in pair order.
  std::vector<std::size_t> firsts;
  std::vector<std::size_t> cls(table.pairs.size());
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < firsts.size(); ++c) {
      if (equivalent_pairs(table.pairs[i], table.pairs[firsts[c]])) {
        cls[i] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cls[i] = firsts.size();
      firsts.push_back(i);
    }
  }
  std::vector<std::size_t> order(firsts.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return table.pairs[firsts[x]].tilde.order() > table.pairs[firsts[y]].tilde.order();
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    table.reps.push_back(firsts[order[r]]);
  }
  table.membership.resize(table.pairs.size());
  for (std::size_t i = 0; i < table.pairs.size(); ++i) table.membership[i] = rank[cls[i]];
  return table;
}

bool in_cen(const GroupHom& f, unsigned p) {
  const Subgroup im = f.image();
  return is_p_prime_quotient(centralizer(im), center(im), p);
}

std::pair<ClassSet, ClassSet> split_cen(const ClassSet& inj, unsigned p) {
  return {inj.subset([p](const GroupHom& f) { return in_cen(f, p); }),
          inj.subset([p](const GroupHom& f) { return !in_cen(f, p); })};
}

ClassSet cen_classes(const GroupPtr& q, const GroupPtr& g, unsigned p, const AutomorphismGroup* aut) {
  return split_cen(inj_classes(q, g, aut), p).first;
}

ClassSet ncen_classes(const GroupPtr& q, const GroupPtr& g, unsigned p, const AutomorphismGroup* aut) {
  return split_cen(inj_classes(q, g, aut), p).second;
}

std::optional<std::size_t> pair_class(const GroupHom& beta, const Subgroup& marked, const TildeClassTable& table) {
  if (!same_group(beta.target(), table.ambient)) throw SourceMismatch("map does not land in the table's group");
  return table.classify(beta.image_of(marked));
}

ClassSet cen_sub(const ClassSet& cen_source, const Subgroup& marked, const TildeClassTable& table, std::size_t k) {
  return cen_source.subset([&](const GroupHom& beta) { return pair_class(beta, marked, table) == k; });
}

ClassSet cen_sub(const TildeClassTable& table, std::size_t j, std::size_t k, const std::vector<GroupHom>* actors) {
  const TildePair& src = table.rep(j);
  ClassSet out = cen_sub(cen_classes(src.tilde_group, table.ambient, table.prime), src.marked, table, k);
  if (actors) out.attach_action("Aut(Q~|Q)", *actors);
  return out;
}

std::string describe_hom(const GroupHom& f, const std::vector<Element>& generators) {
  std::string out = "[";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += f.target()->element(f(generators[i])).to_cycle_string();
  }
  return out + "]";
}

CheckReport verify_lemma3(const TildeClassTable& table) {
  CheckReport report;
  report.title = "lemma3";
  CheckItem item1{"(1) pair equivalent to its own rep implies Cen"};
  CheckItem item2{"(2) Cen = Inj at maximal reps"};
  CheckItem item3{"(3) Cen_sub(m,m) = Cen at maximal reps"};
  CheckItem item4{"(4) equal-order distinct reps give empty Cen_sub"};
  CheckItem item5{"(5) Cen is the disjoint union over j and larger k"};
  const std::size_t n = table.size();
  const std::size_t max_order = n ? table.tilde_order(0) : 0;
  auto rep_name = [&](std::size_t j) {
    return "rep " + std::to_string(j) + " (|Q|=" + std::to_string(table.rep(j).base.order()) +
           ", |Q~|=" + std::to_string(table.tilde_order(j)) + ")";
  };
  for (std::size_t j = 0; j < n; ++j) {
    const TildePair& src = table.rep(j);
    const ClassSet inj = inj_classes(src.tilde_group, table.ambient);
    std::vector<bool> cen_flag(inj.size());
    std::vector<std::optional<std::size_t>> label(inj.size());
    for (std::size_t i = 0; i < inj.size(); ++i) {
      cen_flag[i] = in_cen(inj.items()[i], table.prime);
      label[i] = pair_class(inj.items()[i], src.marked, table);
    }
    const std::size_t cen_size = static_cast<std::size_t>(std::count(cen_flag.begin(), cen_flag.end(), true));
    auto witness = [&](std::size_t i) { return rep_name(j) + " class " + describe_hom(inj.items()[i], inj.generators()); };

    for (std::size_t i = 0; i < inj.size(); ++i) {
      if (label[i] != j) continue;
      ++item1.checked;
      if (!cen_flag[i]) item1.fail(witness(i) + " has its own pair class but is not in Cen");
    }

    // Per-k sizes of the Cen_sub sets, computed as separate subsets.
    std::vector<std::size_t> sub_size(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < inj.size(); ++i) {
        if (cen_flag[i] && label[i] == k) ++sub_size[k];
      }
    }

    if (table.tilde_order(j) == max_order) {
      ++item2.checked;
      if (cen_size != inj.size()) {
        for (std::size_t i = 0; i < inj.size(); ++i) {
          if (!cen_flag[i]) item2.fail(witness(i) + " is injective but not in Cen");
        }
      }
      ++item3.checked;
      if (sub_size[j] != cen_size) {
        for (std::size_t i = 0; i < inj.size(); ++i) {
          if (cen_flag[i] && label[i] != j) item3.fail(witness(i) + " lies in Cen but not in Cen_sub(m,m)");
        }
      }
    }

    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || table.tilde_order(k) != table.tilde_order(j)) continue;
      ++item4.checked;
      if (sub_size[k] != 0) {
        item4.fail(rep_name(j) + " -> " + rep_name(k) + ": Cen_sub has " + std::to_string(sub_size[k]) +
                   " classes");
      }
    }

    ++item5.checked;
    std::size_t covered = sub_size[j];
    for (std::size_t k = 0; k < n; ++k) {
      if (table.tilde_order(k) > table.tilde_order(j)) covered += sub_size[k];
    }
    for (std::size_t i = 0; i < inj.size(); ++i) {
      if (!cen_flag[i]) continue;
      if (!label[i]) {
        item5.fail(witness(i) + ": image of Q does not give a qualifying pair");
      } else if (*label[i] != j && table.tilde_order(*label[i]) <= table.tilde_order(j)) {
        item5.fail(witness(i) + " falls in Cen_sub with " + rep_name(*label[i]));
      }
    }
    if (covered != cen_size && item5.passed) {
      item5.fail(rep_name(j) + ": union of Cen_sub sets has " + std::to_string(covered) + " classes, Cen has " +
                 std::to_string(cen_size));
    }
  }
  report.items = {item1, item2, item3, item4, item5};
  return report;
}

CheckReport verify_lemma3(const GroupPtr& g, unsigned p) { return verify_lemma3(tilde_class_table(g, p)); }

TildeClassTable corrupt_table_for_testing(TildeClassTable table, std::size_t a, std::size_t b) {
  for (auto& m : table.membership) {
    if (m == a) {
      m = b;
    } else if (m == b) {
      m = a;
    }
  }
  return table;
}

}  // namespace stabclass
