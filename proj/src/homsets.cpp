#include "stabclass/homsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stabclass/errors.hpp"

namespace stabclass {

ClassSet::ClassSet(GroupPtr source, GroupPtr target, std::vector<Element> generators)
    : source_(std::move(source)), target_(std::move(target)), generators_(std::move(generators)) {
  if (generators_.empty() && source_->order() > 1) generators_ = generating_sequence(source_);
}

std::vector<Element> ClassSet::canonical_key(const GroupHom& f) const {
  const auto& g = *target_;
  std::vector<Element> best;
  std::vector<Element> cur(generators_.size());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < generators_.size(); ++i) cur[i] = g.conj(static_cast<Element>(x), f(generators_[i]));
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::optional<std::size_t> ClassSet::find(const GroupHom& f) const {
  if (!same_group(f.source(), source_) || !same_group(f.target(), target_)) {
    throw SourceMismatch("homomorphism does not match the class set");
  }
  auto it = index_.find(canonical_key(f));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ClassSet::insert(const GroupHom& f) {
  const auto& g = *target_;
  std::vector<Element> best;
  Element best_g = 0;
  std::vector<Element> cur(generators_.size());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < generators_.size(); ++i) cur[i] = g.conj(static_cast<Element>(x), f(generators_[i]));
    if (x == 0 || cur < best) {
      best = cur;
      best_g = static_cast<Element>(x);
    }
  }
  if (index_.count(best)) return false;
  index_.emplace(best, items_.size());
  items_.push_back(compose(GroupHom::conjugation(target_, best_g), f));
  action_.reset();
  return true;
}

std::size_t ClassSet::class_size(std::size_t i) const {
  const auto& g = *target_;
  std::set<std::vector<Element>> conjugates;
  std::vector<Element> cur(generators_.size());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < generators_.size(); ++k) cur[k] = g.conj(static_cast<Element>(x), items_[i](generators_[k]));
    conjugates.insert(cur);
  }
  return conjugates.size();
}

std::size_t ClassSet::act(std::size_t i, const GroupHom& phi) const {
  auto idx = find(compose(items_[i], phi));
  if (!idx) throw ActionIllDefined("class image under automorphism is outside the set");
  return *idx;
}

void ClassSet::attach_action(std::string label, std::vector<GroupHom> actors) {
  ClassAction action{std::move(label), std::move(actors), {}};
  for (const auto& phi : action.actors) {
    if (!same_group(phi.source(), source_) || !same_group(phi.target(), source_)) {
      throw SourceMismatch("actor is not an automorphism of the source");
    }
    std::vector<std::size_t> row(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) row[i] = act(i, phi);
    action.table.push_back(std::move(row));
  }
  action_ = std::move(action);
}

ClassSet ClassSet::subset(const std::function<bool(const GroupHom&)>& keep) const {
  ClassSet out(source_, target_, generators_);
  std::vector<std::size_t> new_index(items_.size(), SIZE_MAX);
  for (const auto& [key, idx] : index_) {
    if (!keep(items_[idx])) continue;
    new_index[idx] = out.items_.size();
    out.index_.emplace(key, out.items_.size());
    out.items_.push_back(items_[idx]);
  }
  if (action_) {
    ClassAction induced{action_->label, action_->actors, {}};
    for (const auto& row : action_->table) {
      std::vector<std::size_t> new_row(out.items_.size());
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (new_index[i] == SIZE_MAX) continue;
        if (new_index[row[i]] == SIZE_MAX) throw ActionIllDefined("subset is not invariant under the action");
        new_row[new_index[i]] = new_index[row[i]];
      }
      induced.table.push_back(std::move(new_row));
    }
    out.action_ = std::move(induced);
  }
  return out;
}

std::vector<GroupHom> AutomorphismGroup::outer_generator_maps() const {
  std::vector<GroupHom> out;
  for (std::size_t g : outer_generators) out.push_back(automorphisms[g]);
  return out;
}

std::vector<GroupHom> AutomorphismGroup::outer_representatives() const {
  std::vector<GroupHom> reps;
  reps.reserve(outer_classes.size());
  for (const auto& cls : outer_classes) reps.push_back(automorphisms[cls.front()]);
  return reps;
}

std::vector<GroupHom> all_homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                        const std::vector<Element>& generators) {
  HomSearch search;
  search.generators = generators;
  std::vector<GroupHom> out;
  for_each_homomorphism(source, target, search, [&](const std::vector<Element>& map) {
    GroupHom f(source, target, map);
    if (!f.is_homomorphism()) throw std::logic_error("search produced a non-homomorphism");
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

namespace {

ClassSet collect_classes(const GroupPtr& q, const GroupPtr& g, bool injective, const AutomorphismGroup* aut) {
  ClassSet classes(q, g, {});
  HomSearch search;
  search.generators = classes.generators();
  search.injective = injective;
  for_each_homomorphism(q, g, search, [&](const std::vector<Element>& map) {
    GroupHom f(q, g, map);
    if (!f.is_homomorphism()) throw std::logic_error("search produced a non-homomorphism");
    classes.insert(f);
    return true;
  });
  // subset() walks the key index, so the copy is in canonical order.
  ClassSet sorted = classes.subset([](const GroupHom&) { return true; });
  if (aut) return out_action(*aut, std::move(sorted));
  return sorted;
}

}  // namespace

ClassSet rep_classes(const GroupPtr& q, const GroupPtr& g, const AutomorphismGroup* aut) {
  return collect_classes(q, g, false, aut);
}

ClassSet inj_classes(const GroupPtr& q, const GroupPtr& g, const AutomorphismGroup* aut) {
  return collect_classes(q, g, true, aut);
}

AutomorphismGroup automorphism_group(const GroupPtr& q) {
  AutomorphismGroup out;
  out.base = q;
  const auto gens = q->order() > 1 ? generating_sequence(q) : std::vector<Element>{};
  HomSearch search;
  search.generators = gens;
  search.injective = true;
  std::vector<std::pair<std::vector<Element>, GroupHom>> found;
  for_each_homomorphism(q, q, search, [&](const std::vector<Element>& map) {
    GroupHom f(q, q, map);
    if (!f.is_homomorphism()) throw std::logic_error("search produced a non-homomorphism");
    std::vector<Element> key;
    for (Element s : gens) key.push_back(f(s));
    found.emplace_back(std::move(key), std::move(f));
    return true;
  });
  std::vector<Element> id_key(gens.begin(), gens.end());
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    const bool ai = a.first == id_key;
    const bool bi = b.first == id_key;
    if (ai != bi) return ai;
    return a.first < b.first;
  });
  std::map<std::vector<Element>, std::size_t> index;
  for (auto& [key, f] : found) {
    index.emplace(key, out.automorphisms.size());
    out.automorphisms.push_back(std::move(f));
  }
  auto key_of = [&](const GroupHom& f) {
    std::vector<Element> key;
    for (Element s : gens) key.push_back(f(s));
    return key;
  };
  std::set<std::size_t> inner;
  std::vector<GroupHom> inner_maps;
  for (std::size_t x = 0; x < q->order(); ++x) {
    GroupHom c = GroupHom::conjugation(q, static_cast<Element>(x));
    if (inner.insert(index.at(key_of(c))).second) inner_maps.push_back(std::move(c));
  }
  out.inner.assign(inner.begin(), inner.end());
  std::vector<bool> assigned(out.automorphisms.size(), false);
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> coset;
    for (const auto& c : inner_maps) {
      std::size_t j = index.at(key_of(compose(out.automorphisms[i], c)));
      if (!assigned[j]) {
        assigned[j] = true;
        coset.push_back(j);
      }
    }
    std::sort(coset.begin(), coset.end());
    out.outer_classes.push_back(std::move(coset));
  }
  // Greedy generators of Out(Q), one representative per chosen class.
  std::vector<std::size_t> class_of(out.automorphisms.size());
  for (std::size_t c = 0; c < out.outer_classes.size(); ++c) {
    for (std::size_t m : out.outer_classes[c]) class_of[m] = c;
  }
  std::vector<bool> reached(out.outer_classes.size(), false);
  std::vector<std::size_t> elements{0};
  reached[0] = true;
  for (std::size_t c = 1; c < out.outer_classes.size(); ++c) {
    if (reached[c]) continue;
    out.outer_generators.push_back(out.outer_classes[c].front());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const std::size_t x = out.outer_classes[elements[i]].front();
      for (std::size_t g : out.outer_generators) {
        const std::size_t y = class_of[index.at(key_of(compose(out.automorphisms[x], out.automorphisms[g])))];
        if (!reached[y]) {
          reached[y] = true;
          elements.push_back(y);
        }
      }
    }
  }
  return out;
}

ClassSet out_action(const AutomorphismGroup& aut, ClassSet classes) {
  if (!same_group(aut.base, classes.source())) throw SourceMismatch("automorphisms of a different group");
  // Members of an Inn-coset act alike exactly when Inn acts trivially.
  for (std::size_t member : aut.inner) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes.act(i, aut.automorphisms[member]) != i) {
        throw ActionIllDefined("members of one Inn-coset act differently");
      }
    }
  }
  classes.attach_action("Out", aut.outer_generator_maps());
  return classes;
}

}  // namespace stabclass
