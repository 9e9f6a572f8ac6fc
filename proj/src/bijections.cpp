#include "stabclass/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stabclass/errors.hpp"

namespace stabclass {

std::optional<std::size_t> RSet::find(const GroupHom& f) const {
  auto it = index.find(f.map());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

RSet collect_monos(const GroupPtr& source, const Subgroup& source_marked, const GroupPtr& tilde,
                   const Subgroup& marked) {
  RSet out;
  out.source = source;
  out.tilde = tilde;
  out.marked = marked;
  if (source_marked.order() != marked.order() || source->order() > tilde->order()) return out;
  HomSearch search;
  search.injective = true;
  search.generators = generating_sequence(source, source_marked.elements());
  for (Element s : search.generators) {
    if (!source_marked.contains(s)) break;
    search.candidates.push_back(marked.elements());
  }
  for_each_homomorphism(source, tilde, search, [&](const std::vector<Element>& map) {
    GroupHom f(source, tilde, map);
    if (!f.is_homomorphism()) throw std::logic_error("search produced a non-homomorphism");
    out.monos.push_back(std::move(f));
    return true;
  });
  std::sort(out.monos.begin(), out.monos.end(), [](const GroupHom& a, const GroupHom& b) { return a.map() < b.map(); });
  for (std::size_t i = 0; i < out.monos.size(); ++i) out.index.emplace(out.monos[i].map(), i);
  return out;
}

}  // namespace

RSet r_set(const GroupPtr& source, const GroupPtr& tilde, const Subgroup& marked) {
  if (!same_group(marked.parent(), tilde)) throw NotNested("marked subgroup is not inside tilde");
  return collect_monos(source, Subgroup::whole(source), tilde, marked);
}

RSet r_set_relative(const GroupPtr& tilde_i, const Subgroup& marked_i, const GroupPtr& tilde_k,
                    const Subgroup& marked_k) {
  if (!same_group(marked_i.parent(), tilde_i) || !same_group(marked_k.parent(), tilde_k)) {
    throw NotNested("marked subgroup is not inside its tilde group");
  }
  return collect_monos(tilde_i, marked_i, tilde_k, marked_k);
}

AutRel aut_rel(const GroupPtr& tilde, const Subgroup& marked) {
  RSet monos = r_set_relative(tilde, marked, tilde, marked);
  AutRel out{tilde, marked, {}};
  const GroupHom id = GroupHom::identity(tilde);
  out.elements.push_back(id);
  for (auto& f : monos.monos) {
    if (f.map() != id.map()) out.elements.push_back(std::move(f));
  }
  return out;
}

BalancedProduct balanced_product(RSet left, AutRel group, ClassSet right) {
  if (!same_group(left.tilde, group.tilde) || !same_group(right.source(), group.tilde)) {
    throw SourceMismatch("balanced product factors do not share the tilde group");
  }
  const std::size_t nl = left.monos.size();
  const std::size_t nr = right.size();
  std::vector<std::vector<std::size_t>> on_left;
  std::vector<std::vector<std::size_t>> on_right;
  for (const auto& a : group.elements) {
    std::vector<std::size_t> row(nl);
    for (std::size_t l = 0; l < nl; ++l) {
      auto idx = left.find(compose(a, left.monos[l]));
      if (!idx) throw ActionIllDefined("Aut(Q~|Q) does not preserve the R set");
      row[l] = *idx;
    }
    on_left.push_back(std::move(row));
    const GroupHom a_inv = a.inverse();
    std::vector<std::size_t> rrow(nr);
    for (std::size_t r = 0; r < nr; ++r) rrow[r] = right.act(r, a_inv);
    on_right.push_back(std::move(rrow));
  }
  BalancedProduct bp{std::move(left), std::move(group), std::move(right), {}, {}};
  bp.orbit_of.assign(nl * nr, SIZE_MAX);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (bp.orbit_of[l * nr + r] != SIZE_MAX) continue;
      const std::size_t id = bp.orbits.size();
      bp.orbits.emplace_back(l, r);
      std::vector<std::pair<std::size_t, std::size_t>> stack{{l, r}};
      bp.orbit_of[l * nr + r] = id;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < on_left.size(); ++a) {
          const std::size_t nx = on_left[a][x];
          const std::size_t ny = on_right[a][y];
          if (bp.orbit_of[nx * nr + ny] == SIZE_MAX) {
            bp.orbit_of[nx * nr + ny] = id;
            stack.emplace_back(nx, ny);
          }
        }
      }
    }
  }
  return bp;
}

GroupHom psi(const GroupHom& gamma, const GroupHom& delta) { return compose(delta, gamma); }

Embedding product_embedding(const GroupPtr& g) {
  const std::size_t d = g->degree();
  std::vector<Permutation> gens;
  for (const auto& s : g->generators()) gens.push_back(s.shifted(0, d + 2));
  gens.push_back(Permutation::from_cycles(d + 2, {{static_cast<Permutation::Point>(d), static_cast<Permutation::Point>(d + 1)}}));
  Limits limits;
  limits.max_degree = d + 2;
  limits.max_order = 2 * g->order();
  GroupPtr super = FiniteGroup::closure(std::move(gens), d + 2, limits);
  std::vector<Element> map;
  for (const auto& x : g->elements()) map.push_back(*super->find(x.shifted(0, d + 2)));
  return Embedding{super, GroupHom(g, super, std::move(map))};
}

Embedding extension_embedding(const GroupPtr& g, const GroupPtr& super) {
  if (super->degree() < g->degree()) throw NotNested("target has smaller degree");
  std::vector<Element> map;
  for (const auto& x : g->elements()) {
    auto e = super->find(x.shifted(0, super->degree()));
    if (!e) throw NotNested("group is not contained in the target");
    map.push_back(*e);
  }
  return Embedding{super, GroupHom(g, super, std::move(map))};
}

LemmaWorkspace::LemmaWorkspace(TildeClassTable table) : table_(std::move(table)) {}

const AutRel& LemmaWorkspace::aut(std::size_t k) {
  auto it = aut_.find(k);
  if (it == aut_.end()) it = aut_.emplace(k, aut_rel(table_.rep(k).tilde_group, table_.rep(k).marked)).first;
  return it->second;
}

const ClassSet& LemmaWorkspace::cen(std::size_t k) {
  auto it = cen_.find(k);
  if (it == cen_.end()) {
    it = cen_.emplace(k, cen_classes(table_.rep(k).tilde_group, table_.ambient, table_.prime)).first;
  }
  return it->second;
}

const ClassSet& LemmaWorkspace::cen_self(std::size_t k) {
  auto it = cen_self_.find(k);
  if (it == cen_self_.end()) {
    ClassSet c = cen_sub(cen(k), table_.rep(k).marked, table_, k);
    c.attach_action("Aut(Q~|Q)", aut(k).elements);
    it = cen_self_.emplace(k, std::move(c)).first;
  }
  return it->second;
}

namespace {

// Restricts f to a map into `sub_group`, where sub_group = sub.as_group().
GroupHom corestrict(const GroupHom& f, const Subgroup& sub, const GroupPtr& sub_group) {
  std::vector<Element> map;
  map.reserve(f.map().size());
  for (Element y : f.map()) {
    auto it = std::lower_bound(sub.elements().begin(), sub.elements().end(), y);
    if (it == sub.elements().end() || *it != y) throw SourceMismatch("map leaves the subgroup");
    map.push_back(static_cast<Element>(it - sub.elements().begin()));
  }
  return GroupHom(f.source(), sub_group, std::move(map));
}

std::string rep_label(const TildeClassTable& t, std::size_t k) {
  return "rep " + std::to_string(k) + " (|Q|=" + std::to_string(t.rep(k).base.order()) +
         ", |Q~|=" + std::to_string(t.tilde_order(k)) + ")";
}

}  // namespace

CheckReport verify_lemma4(const GroupPtr& q, LemmaWorkspace& ws, const AutomorphismGroup& aut_q,
                          const Embedding* embedding) {
  const TildeClassTable& table = ws.table();
  const GroupPtr& g = table.ambient;
  const unsigned p = table.prime;
  CheckReport report;
  report.title = "lemma4";
  CheckItem lands{"(a) psi lands in nCen(Q,G)"};
  CheckItem well{"psi constant on balanced orbits"};
  CheckItem inj_item{"(b) psi injective on orbits"};
  CheckItem count{"orbit count equals |nCen(Q,G)|"};
  CheckItem surj{"(c) preimages from the factorization"};
  CheckItem equiv{"(d) Out(Q)-equivariance"};
  CheckItem natural{"(e) naturality in G"};

  const ClassSet inj = inj_classes(q, g, &aut_q);
  std::vector<bool> is_cen(inj.size());
  std::size_t ncen_size = 0;
  for (std::size_t i = 0; i < inj.size(); ++i) {
    is_cen[i] = in_cen(inj.items()[i], p);
    if (!is_cen[i]) ++ncen_size;
  }

  struct Part {
    std::size_t k;
    BalancedProduct bp;
    std::vector<std::optional<std::size_t>> image;
  };
  std::vector<Part> parts;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const TildePair& rep = table.rep(k);
    if (rep.base.order() != q->order()) continue;
    RSet r = r_set(q, rep.tilde_group, rep.marked);
    if (r.monos.empty()) continue;
    parts.push_back(Part{k, balanced_product(std::move(r), ws.aut(k), ws.cen_self(k)), {}});
  }

  std::map<std::size_t, std::string> hit;
  std::size_t total_orbits = 0;
  for (auto& part : parts) {
    const auto& bp = part.bp;
    for (std::size_t o = 0; o < bp.orbits.size(); ++o) {
      auto [l, r] = bp.orbits[o];
      const GroupHom f = psi(bp.left.monos[l], bp.right.items()[r]);
      auto idx = inj.find(f);
      part.image.push_back(idx);
      ++lands.checked;
      const std::string where = rep_label(table, part.k) + " orbit " + std::to_string(o);
      if (!idx) {
        lands.fail(where + ": composite is not injective");
        continue;
      }
      if (is_cen[*idx]) lands.fail(where + ": composite " + describe_hom(f, inj.generators()) + " is in Cen");
      ++inj_item.checked;
      auto [it, fresh] = hit.emplace(*idx, where);
      if (!fresh) inj_item.fail(where + " and " + it->second + " have the same image");
    }
    total_orbits += bp.orbits.size();
    for (std::size_t l = 0; l < bp.left.monos.size(); ++l) {
      for (std::size_t r = 0; r < bp.right.size(); ++r) {
        ++well.checked;
        auto idx = inj.find(psi(bp.left.monos[l], bp.right.items()[r]));
        if (idx != part.image[bp.orbit(l, r)]) {
          well.fail(rep_label(table, part.k) + " pair (" + std::to_string(l) + "," + std::to_string(r) +
                    ") disagrees with its orbit representative");
        }
      }
    }
  }
  ++count.checked;
  if (total_orbits != ncen_size) {
    count.fail(std::to_string(total_orbits) + " orbits vs " + std::to_string(ncen_size) + " nCen classes");
  }

  // Surjectivity through f = i o pi, an equivalence u, gamma = u pi, delta = i u^-1.
  for (std::size_t c = 0; c < inj.size(); ++c) {
    if (is_cen[c]) continue;
    ++surj.checked;
    const GroupHom& f = inj.items()[c];
    const std::string what = "nCen class " + describe_hom(f, inj.generators());
    auto pair_idx = table.by_base.find(f.image().elements());
    if (pair_idx == table.by_base.end()) {
      surj.fail(what + ": image does not qualify");
      continue;
    }
    const TildePair& pair = table.pairs[pair_idx->second];
    const std::size_t j = table.membership[pair_idx->second];
    auto u = equivalent_pairs(pair, table.rep(j));
    if (!u) {
      surj.fail(what + ": no equivalence to its table class");
      continue;
    }
    const GroupHom pi = corestrict(f, pair.tilde, pair.tilde_group);
    const GroupHom gamma = compose(*u, pi);
    const GroupHom delta = compose(pair.inclusion, u->inverse());
    auto part = std::find_if(parts.begin(), parts.end(), [&](const Part& pt) { return pt.k == j; });
    if (part == parts.end()) {
      surj.fail(what + ": class " + std::to_string(j) + " contributes no summand");
      continue;
    }
    auto l = part->bp.left.find(gamma);
    auto r = part->bp.right.find(delta);
    if (!l || !r) {
      surj.fail(what + ": constructed gamma or delta lies outside its factor");
      continue;
    }
    if (inj.find(psi(gamma, delta)) != c || part->image[part->bp.orbit(*l, *r)] != c) {
      surj.fail(what + ": constructed preimage maps elsewhere");
    }
  }

  // Out(Q) acts on the left factor by precomposition.
  const auto& action = *inj.action();
  for (auto& part : parts) {
    const auto& bp = part.bp;
    for (std::size_t o = 0; o < bp.orbits.size(); ++o) {
      if (!part.image[o]) continue;
      auto [l, r] = bp.orbits[o];
      for (std::size_t a = 0; a < action.actors.size(); ++a) {
        ++equiv.checked;
        auto moved = bp.left.find(compose(bp.left.monos[l], action.actors[a]));
        if (!moved) {
          equiv.fail(rep_label(table, part.k) + ": R set not closed under Out(Q)");
          continue;
        }
        const auto lhs = part.image[bp.orbit(*moved, r)];
        if (!lhs || *lhs != action.table[a][*part.image[o]]) {
          equiv.fail(rep_label(table, part.k) + " orbit " + std::to_string(o) + " outer class " + std::to_string(a));
        }
      }
    }
  }

  if (embedding) {
    if (!same_group(embedding->inclusion.source(), g)) throw SourceMismatch("embedding of a different group");
    const ClassSet plus(q, embedding->super, inj.generators());
    for (auto& part : parts) {
      const auto& bp = part.bp;
      for (std::size_t l = 0; l < bp.left.monos.size(); ++l) {
        for (std::size_t r = 0; r < bp.right.size(); ++r) {
          ++natural.checked;
          const GroupHom& gamma = bp.left.monos[l];
          const GroupHom& delta = bp.right.items()[r];
          const GroupHom after = compose(embedding->inclusion, psi(gamma, delta));
          const GroupHom before = psi(gamma, compose(embedding->inclusion, delta));
          if (plus.canonical_key(after) != plus.canonical_key(before) || !after.is_injective()) {
            natural.fail(rep_label(table, part.k) + " pair (" + std::to_string(l) + "," + std::to_string(r) + ")");
          }
        }
      }
    }
    // Conjugate maps stay conjugate after composing with the inclusion.
    for (std::size_t c = 0; c < inj.size(); ++c) {
      const auto key = plus.canonical_key(compose(embedding->inclusion, inj.items()[c]));
      for (std::size_t x = 0; x < g->order(); ++x) {
        ++natural.checked;
        const GroupHom moved = compose(GroupHom::conjugation(g, static_cast<Element>(x)), inj.items()[c]);
        if (plus.canonical_key(compose(embedding->inclusion, moved)) != key) {
          natural.fail("class " + describe_hom(inj.items()[c], inj.generators()) + " splits in G+");
          break;
        }
      }
    }
  }

  report.items = {lands, well, inj_item, count, surj, equiv};
  if (embedding) report.items.push_back(natural);
  return report;
}

CheckReport verify_lemma4(const GroupPtr& q, const GroupPtr& g, unsigned p, const Embedding* embedding) {
  LemmaWorkspace ws(tilde_class_table(g, p));
  const AutomorphismGroup aut = automorphism_group(q);
  return verify_lemma4(q, ws, aut, embedding);
}

CheckReport verify_lemma5(std::size_t i, std::size_t k, LemmaWorkspace& ws) {
  const TildeClassTable& table = ws.table();
  const GroupPtr& g = table.ambient;
  CheckReport report;
  report.title = "lemma5";
  CheckItem lands{"psi lands in Cen_{Q_i}(Q~_i, Q~_k, G)"};
  CheckItem well{"psi constant on balanced orbits"};
  CheckItem inj_item{"psi injective on orbits"};
  CheckItem count{"orbit count equals |Cen_{Q_i}(Q~_i, Q~_k, G)|"};
  CheckItem surj{"preimages from the factorization and conjugation"};
  CheckItem equiv{"Aut(Q~_i|Q_i)-equivariance"};

  const TildePair& src = table.rep(i);
  const TildePair& dst = table.rep(k);
  const AutRel& aut_i = ws.aut(i);
  ClassSet target = cen_sub(ws.cen(i), src.marked, table, k);
  target.attach_action("Aut(Q~|Q)", aut_i.elements);
  const std::string where = rep_label(table, i) + " -> " + rep_label(table, k);

  RSet r = r_set_relative(src.tilde_group, src.marked, dst.tilde_group, dst.marked);
  const BalancedProduct bp = balanced_product(std::move(r), ws.aut(k), ws.cen_self(k));

  // Every class of Cen(Q~_i, G), so that landing outside Cen_sub(i,k) is detectable.
  const ClassSet& cen_i = ws.cen(i);
  std::vector<std::optional<std::size_t>> image;
  std::map<std::size_t, std::size_t> hit;
  for (std::size_t o = 0; o < bp.orbits.size(); ++o) {
    auto [l, rr] = bp.orbits[o];
    const GroupHom f = psi(bp.left.monos[l], bp.right.items()[rr]);
    auto idx = target.find(f);
    image.push_back(idx);
    ++lands.checked;
    if (!idx) {
      const bool in_cen_i = cen_i.find(f).has_value();
      lands.fail(where + " orbit " + std::to_string(o) + (in_cen_i ? ": wrong pair class" : ": not in Cen"));
      continue;
    }
    ++inj_item.checked;
    auto [it, fresh] = hit.emplace(*idx, o);
    if (!fresh) inj_item.fail(where + " orbits " + std::to_string(it->second) + " and " + std::to_string(o));
  }
  for (std::size_t l = 0; l < bp.left.monos.size(); ++l) {
    for (std::size_t rr = 0; rr < bp.right.size(); ++rr) {
      ++well.checked;
      if (target.find(psi(bp.left.monos[l], bp.right.items()[rr])) != image[bp.orbit(l, rr)]) {
        well.fail(where + " pair (" + std::to_string(l) + "," + std::to_string(rr) + ")");
      }
    }
  }
  ++count.checked;
  if (bp.orbits.size() != target.size()) {
    count.fail(where + ": " + std::to_string(bp.orbits.size()) + " orbits vs " + std::to_string(target.size()) +
               " classes");
  }

  for (std::size_t c = 0; c < target.size(); ++c) {
    ++surj.checked;
    const GroupHom& f = target.items()[c];
    const std::string what = where + " class " + describe_hom(f, target.generators());
    const Subgroup h = f.image_of(src.marked);
    auto pair_idx = table.by_base.find(h.elements());
    if (pair_idx == table.by_base.end()) {
      surj.fail(what + ": f(Q) does not qualify");
      continue;
    }
    const TildePair& pair = table.pairs[pair_idx->second];
    const Subgroup fq = f.image();
    const Subgroup hc = product_subgroup(h, centralizer(h));
    std::optional<Element> conj;
    for (Element x : hc.elements()) {
      bool inside = std::all_of(fq.generators().begin(), fq.generators().end(),
                                [&](Element s) { return pair.tilde.contains(g->conj(x, s)); });
      if (inside) {
        conj = x;
        break;
      }
    }
    auto u = equivalent_pairs(pair, dst);
    if (!conj || !u) {
      surj.fail(what + ": no conjugation into the tilde of f(Q) or no equivalence");
      continue;
    }
    const GroupHom cg = GroupHom::conjugation(g, *conj);
    const GroupHom pi = corestrict(compose(cg, f), pair.tilde, pair.tilde_group);
    const GroupHom gamma = compose(*u, pi);
    const GroupHom delta = compose(GroupHom::conjugation(g, g->inv(*conj)), compose(pair.inclusion, u->inverse()));
    auto l = bp.left.find(gamma);
    auto rr = bp.right.find(delta);
    if (!l || !rr) {
      surj.fail(what + ": constructed gamma or delta lies outside its factor");
      continue;
    }
    if (psi(gamma, delta) != f || image[bp.orbit(*l, *rr)] != c) surj.fail(what + ": constructed preimage maps elsewhere");
  }

  const auto& action = *target.action();
  for (std::size_t o = 0; o < bp.orbits.size(); ++o) {
    if (!image[o]) continue;
    auto [l, rr] = bp.orbits[o];
    for (std::size_t b = 0; b < aut_i.elements.size(); ++b) {
      ++equiv.checked;
      auto moved = bp.left.find(compose(bp.left.monos[l], aut_i.elements[b]));
      if (!moved) {
        equiv.fail(where + ": R set not closed under Aut(Q~_i|Q_i)");
        continue;
      }
      if (image[bp.orbit(*moved, rr)] != action.table[b][*image[o]]) {
        equiv.fail(where + " orbit " + std::to_string(o) + " automorphism " + std::to_string(b));
      }
    }
  }

  report.items = {lands, well, inj_item, count, surj, equiv};
  return report;
}

CheckReport verify_lemma5(std::size_t i, std::size_t k, const GroupPtr& g, unsigned p) {
  LemmaWorkspace ws(tilde_class_table(g, p));
  return verify_lemma5(i, k, ws);
}

}  // namespace stabclass
