#include "stabclass/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stabclass/errors.hpp"

namespace stabclass {

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_->order()) throw std::invalid_argument("map size differs from source order");
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Element> map(g->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(i);
  return GroupHom(g, g, std::move(map));
}

GroupHom GroupHom::inclusion(const Subgroup& h, const GroupPtr& as_group) {
  if (as_group->order() != h.order()) throw SourceMismatch("inclusion source is not the subgroup");
  return GroupHom(as_group, h.parent(), h.elements());
}

GroupHom GroupHom::conjugation(const GroupPtr& group, Element g) {
  std::vector<Element> map(group->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = group->conj(g, static_cast<Element>(i));
  return GroupHom(group, group, std::move(map));
}

bool GroupHom::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Element y : map_) {
    if (seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

bool GroupHom::is_bijective() const { return source_->order() == target_->order() && is_injective(); }

Subgroup GroupHom::image() const { return Subgroup::from_elements(target_, map_); }

Subgroup GroupHom::image_of(const Subgroup& h) const {
  if (!same_group(h.parent(), source_)) throw SourceMismatch("subgroup is not inside the source");
  std::vector<Element> out;
  out.reserve(h.order());
  for (Element e : h.elements()) out.push_back(map_[static_cast<std::size_t>(e)]);
  return Subgroup::from_elements(target_, std::move(out));
}

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("inverse of a non-bijective map");
  std::vector<Element> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<Element>(i);
  return GroupHom(target_, source_, std::move(inv));
}

GroupHom GroupHom::with_target(const GroupPtr& new_target) const {
  std::vector<Element> out;
  out.reserve(map_.size());
  for (Element y : map_) {
    auto e = new_target->find(target_->element(y));
    if (!e) throw SourceMismatch("image leaves the new target");
    out.push_back(*e);
  }
  return GroupHom(source_, new_target, std::move(out));
}

bool GroupHom::is_homomorphism() const {
  const auto& s = *source_;
  const auto& t = *target_;
  if (map_[0] != FiniteGroup::identity()) return false;
  for (std::size_t a = 0; a < s.order(); ++a) {
    for (std::size_t b = 0; b < s.order(); ++b) {
      const Element ab = s.mul(static_cast<Element>(a), static_cast<Element>(b));
      if (map_[static_cast<std::size_t>(ab)] != t.mul(map_[a], map_[b])) return false;
    }
  }
  return true;
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
  if (!same_group(before.target(), after.source())) throw SourceMismatch("composition of incompatible maps");
  std::vector<Element> map(before.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = after(before.map()[i]);
  return GroupHom(before.source(), after.target(), std::move(map));
}

namespace {

class Backtracker {
 public:
  Backtracker(const FiniteGroup& src, const FiniteGroup& tgt, const HomSearch& search,
              const std::vector<Element>& gens,
              const std::function<bool(const std::vector<Element>&)>& visit)
      : src_(src), tgt_(tgt), search_(search), gens_(gens), visit_(visit),
        map_(src.order(), -1), used_(tgt.order(), false), images_(gens.size(), -1) {
    map_[0] = FiniteGroup::identity();
    used_[0] = true;
    defined_.push_back(FiniteGroup::identity());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      std::vector<Element> cands;
      const std::size_t gen_order = src_.element_order(gens_[k]);
      auto admissible = [&](Element t) {
        const std::size_t o = tgt_.element_order(t);
        return search_.injective ? o == gen_order : gen_order % o == 0;
      };
      if (k < search_.candidates.size() && !search_.candidates[k].empty()) {
        for (Element t : search_.candidates[k]) {
          if (admissible(t)) cands.push_back(t);
        }
      } else {
        for (std::size_t t = 0; t < tgt_.order(); ++t) {
          if (admissible(static_cast<Element>(t))) cands.push_back(static_cast<Element>(t));
        }
      }
      candidates_.push_back(std::move(cands));
    }
  }

  bool run(std::size_t level) {
    if (level == gens_.size()) {
      if (defined_.size() != src_.order()) throw std::logic_error("generating sequence does not generate");
      return visit_(map_);
    }
    const Element g = gens_[level];
    for (Element t : candidates_[level]) {
      const std::size_t mark = defined_.size();
      images_[level] = t;
      if (extend(level, g, t)) {
        if (!run(level + 1)) return false;
      }
      rollback(mark);
    }
    return true;
  }

 private:
  // Assigns g -> t and closes the defined set under right multiplication by
  // generators 0..level, checking consistency on every edge.
  bool extend(std::size_t level, Element g, Element t) {
    if (map_[static_cast<std::size_t>(g)] >= 0) return map_[static_cast<std::size_t>(g)] == t;
    for (std::size_t i = 0; i < defined_.size(); ++i) {
      for (std::size_t k = 0; k <= level; ++k) {
        const Element x = defined_[i];
        const Element y = src_.mul(x, gens_[k]);
        const Element fy = tgt_.mul(map_[static_cast<std::size_t>(x)], images_[k]);
        const Element cur = map_[static_cast<std::size_t>(y)];
        if (cur < 0) {
          if (search_.injective && used_[static_cast<std::size_t>(fy)]) return false;
          map_[static_cast<std::size_t>(y)] = fy;
          used_[static_cast<std::size_t>(fy)] = true;
          defined_.push_back(y);
        } else if (cur != fy) {
          return false;
        }
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (defined_.size() > mark) {
      const Element y = defined_.back();
      defined_.pop_back();
      used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(y)])] = false;
      map_[static_cast<std::size_t>(y)] = -1;
    }
  }

  const FiniteGroup& src_;
  const FiniteGroup& tgt_;
  const HomSearch& search_;
  const std::vector<Element>& gens_;
  const std::function<bool(const std::vector<Element>&)>& visit_;
  std::vector<Element> map_;
  std::vector<bool> used_;
  std::vector<Element> images_;
  std::vector<Element> defined_;
  std::vector<std::vector<Element>> candidates_;
};

}  // namespace

void for_each_homomorphism(const GroupPtr& source, const GroupPtr& target, const HomSearch& search,
                           const std::function<bool(const std::vector<Element>&)>& visit) {
  const std::vector<Element> gens = search.generators.empty() ? generating_sequence(source) : search.generators;
  if (search.injective && source->order() > target->order()) return;
  Backtracker bt(*source, *target, search, gens, visit);
  double volume = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t options = (k < search.candidates.size() && !search.candidates[k].empty())
                                    ? search.candidates[k].size()
                                    : target->order();
    volume *= static_cast<double>(options);
  }
  if (volume > search.max_volume) {
    throw SearchBoundExceeded("projected homomorphism search volume " + std::to_string(volume) +
                              " exceeds cap");
  }
  bt.run(0);
}

std::optional<GroupHom> isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  std::optional<GroupHom> found;
  HomSearch search;
  search.injective = true;
  for_each_homomorphism(a, b, search, [&](const std::vector<Element>& map) {
    found = GroupHom(a, b, map);
    return false;
  });
  return found;
}

}  // namespace stabclass
