#include "stabclass/modcmp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "stabclass/errors.hpp"

namespace stabclass {

FiniteAction FiniteAction::from_table(GroupPtr group, std::size_t points,
                                      std::vector<std::vector<std::size_t>> table) {
  if (table.size() != group->order()) throw std::invalid_argument("action table needs one row per element");
  for (const auto& row : table) {
    if (row.size() != points) throw std::invalid_argument("action row has wrong length");
  }
  for (std::size_t x = 0; x < points; ++x) {
    if (table[0][x] != x) throw std::invalid_argument("identity moves a point");
  }
  for (std::size_t a = 0; a < group->order(); ++a) {
    for (std::size_t b = 0; b < group->order(); ++b) {
      const auto ab = static_cast<std::size_t>(group->mul(static_cast<Element>(a), static_cast<Element>(b)));
      for (std::size_t x = 0; x < points; ++x) {
        if (table[ab][x] != table[a][table[b][x]]) throw std::invalid_argument("table is not a group action");
      }
    }
  }
  return FiniteAction{std::move(group), points, std::move(table)};
}

std::size_t fixed_points(const FiniteAction& x, const Subgroup& h) {
  std::size_t count = 0;
  for (std::size_t pt = 0; pt < x.points; ++pt) {
    bool fixed = std::all_of(h.generators().begin(), h.generators().end(),
                             [&](Element e) { return x.table[static_cast<std::size_t>(e)][pt] == pt; });
    if (fixed) ++count;
  }
  return count;
}

bool is_p_hypoelementary(const Subgroup& h, unsigned p) {
  const auto& g = *h.parent();
  std::vector<Element> p_elements;
  for (Element e : h.elements()) {
    if (is_p_power(g.element_order(e), p)) p_elements.push_back(e);
  }
  if (p_elements.size() != p_part(h.order(), p)) return false;  // Sylow not normal
  const Subgroup sylow_p = Subgroup::from_elements(h.parent(), p_elements);
  for (Element e : h.elements()) {
    std::vector<Element> gens = sylow_p.generators();
    gens.push_back(e);
    if (Subgroup::generated(h.parent(), gens).order() == h.order()) return true;
  }
  return false;
}

namespace {

// Least conjugate of h's element list, and the set of all its conjugates.
std::vector<Element> least_conjugate(const Subgroup& h, std::set<std::vector<Element>>* all = nullptr) {
  const auto& g = *h.parent();
  std::vector<Element> best;
  std::vector<Element> c(h.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < h.order(); ++i) c[i] = g.conj(static_cast<Element>(x), h.elements()[i]);
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) best = c;
    if (all) all->insert(c);
  }
  return best;
}

}  // namespace

std::vector<Subgroup> test_family(const GroupPtr& gamma, unsigned p) {
  const auto& g = *gamma;
  std::vector<Element> p_elements, p_prime_elements;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    if (is_p_power(g.element_order(e), p)) p_elements.push_back(e);
    if (g.element_order(e) % p != 0) p_prime_elements.push_back(e);
  }
  // p-subgroups up to conjugacy: each is a normal index-p extension of a
  // smaller one.
  std::set<std::vector<Element>> p_seen;
  std::vector<Subgroup> p_reps{Subgroup::trivial(gamma)};
  p_seen.insert(p_reps.front().elements());
  for (std::size_t i = 0; i < p_reps.size(); ++i) {
    const Subgroup base = p_reps[i];
    const Subgroup n = normalizer(base);
    std::set<std::vector<Element>> local;
    for (Element c : p_elements) {
      if (!n.contains(c) || base.contains(c)) continue;
      Element cp = c;
      for (unsigned k = 1; k < p; ++k) cp = g.mul(cp, c);
      if (!base.contains(cp)) continue;
      std::vector<Element> gens = base.generators();
      gens.push_back(c);
      Subgroup ext = Subgroup::generated(gamma, gens);
      if (!local.insert(ext.elements()).second) continue;
      auto key = least_conjugate(ext);
      if (p_seen.insert(key).second) p_reps.push_back(Subgroup::from_elements(gamma, std::move(key)));
    }
  }
  // Hypoelementary subgroups P<c> with c a p'-element normalizing P.
  std::set<std::vector<Element>> covered;
  std::vector<Subgroup> family;
  for (const Subgroup& base : p_reps) {
    const Subgroup n = normalizer(base);
    for (Element c : p_prime_elements) {
      if (!n.contains(c)) continue;
      std::vector<Element> gens = base.generators();
      gens.push_back(c);
      Subgroup h = Subgroup::generated(gamma, gens);
      if (covered.count(h.elements())) continue;
      auto key = least_conjugate(h, &covered);
      family.push_back(Subgroup::from_elements(gamma, std::move(key)));
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

FixedPointProfile profile(const FiniteAction& x, const std::vector<Subgroup>& family, unsigned p) {
  FixedPointProfile out;
  out.prime = p;
  out.subgroups = family;
  for (const auto& h : family) out.counts.push_back(fixed_points(x, h));
  return out;
}

ModuleVerdict modules_isomorphic(const FiniteAction& x, const FiniteAction& y, unsigned p) {
  if (!same_group(x.group, y.group)) throw ActorMismatch("actions of different groups");
  return compare_profiles(x, y, test_family(x.group, p), p);
}

ModuleVerdict compare_profiles(const FiniteAction& x, const FiniteAction& y, const std::vector<Subgroup>& family,
                               unsigned p) {
  if (!same_group(x.group, y.group)) throw ActorMismatch("actions of different groups");
  ModuleVerdict v;
  v.x = profile(x, family, p);
  v.y = profile(y, family, p);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (v.x.counts[i] != v.y.counts[i]) v.differing.push_back(i);
  }
  v.isomorphic = v.differing.empty();
  return v;
}

namespace {

class IntertwinerSearch {
 public:
  IntertwinerSearch(const FiniteAction& x, const FiniteAction& y, unsigned p)
      : x_(x), y_(y), p_(p), n_(x.points), m_(n_ * n_, 0) {
    for (const auto& s : x.group->generators()) gens_.push_back(static_cast<std::size_t>(*x.group->find(s)));
  }

  bool run(std::size_t row) {
    if (row == n_) return invertible();
    const std::size_t combos = static_cast<std::size_t>(std::pow(p_, n_));
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (std::size_t col = 0; col < n_; ++col) {
        m_[row * n_ + col] = static_cast<unsigned>(c % p_);
        c /= p_;
      }
      if (consistent(row) && run(row + 1)) return true;
    }
    return false;
  }

 private:
  // M maps F_p[X] -> F_p[Y]; commuting with the actions means
  // M[g y][g x] == M[y][x] for every generator g. Rows 0..row are assigned.
  bool consistent(std::size_t row) const {
    for (std::size_t g : gens_) {
      for (std::size_t yr = 0; yr <= row; ++yr) {
        const std::size_t gy = y_.table[g][yr];
        if (gy > row) continue;
        for (std::size_t xc = 0; xc < n_; ++xc) {
          if (m_[gy * n_ + x_.table[g][xc]] != m_[yr * n_ + xc]) return false;
        }
      }
    }
    return true;
  }

  bool invertible() const {
    std::vector<unsigned> a = m_;
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
      if (pivot == n_) return false;
      for (std::size_t k = 0; k < n_; ++k) std::swap(a[col * n_ + k], a[pivot * n_ + k]);
      unsigned inv = 1;
      while ((a[col * n_ + col] * inv) % p_ != 1) ++inv;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || a[r * n_ + col] == 0) continue;
        const unsigned f = (a[r * n_ + col] * inv) % p_;
        for (std::size_t k = 0; k < n_; ++k) {
          a[r * n_ + k] = (a[r * n_ + k] + p_ * p_ - (f * a[col * n_ + k]) % p_) % p_;
        }
      }
    }
    return true;
  }

  const FiniteAction& x_;
  const FiniteAction& y_;
  unsigned p_;
  std::size_t n_;
  std::vector<unsigned> m_;
  std::vector<std::size_t> gens_;
};

}  // namespace

bool brute_force_iso(const FiniteAction& x, const FiniteAction& y, unsigned p, double max_volume) {
  if (!same_group(x.group, y.group)) throw ActorMismatch("actions of different groups");
  if (x.points != y.points) return false;
  const double volume = std::pow(static_cast<double>(p), static_cast<double>(x.points * x.points));
  if (volume > max_volume) throw SearchBoundExceeded("intertwiner search volume exceeds cap");
  if (x.points == 0) return true;
  return IntertwinerSearch(x, y, p).run(0);
}

ModuleVerdict cancel(const FiniteAction& xz, const FiniteAction& yz, const FiniteAction& z, unsigned p) {
  if (!same_group(xz.group, yz.group) || !same_group(xz.group, z.group)) {
    throw ActorMismatch("actions of different groups");
  }
  const auto family = test_family(xz.group, p);
  ModuleVerdict v;
  v.x = profile(xz, family, p);
  v.y = profile(yz, family, p);
  const auto zp = profile(z, family, p);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (v.x.counts[i] < zp.counts[i] || v.y.counts[i] < zp.counts[i]) {
      throw NegativeCount("common summand has more fixed points than a side at " + describe_subgroup(family[i]));
    }
    v.x.counts[i] -= zp.counts[i];
    v.y.counts[i] -= zp.counts[i];
    if (v.x.counts[i] != v.y.counts[i]) v.differing.push_back(i);
  }
  v.isomorphic = v.differing.empty();
  return v;
}

FiniteAction disjoint_union(const FiniteAction& a, const FiniteAction& b) {
  if (!same_group(a.group, b.group)) throw ActorMismatch("actions of different groups");
  FiniteAction out{a.group, a.points + b.points, {}};
  for (std::size_t e = 0; e < a.table.size(); ++e) {
    std::vector<std::size_t> row = a.table[e];
    for (std::size_t pt : b.table[e]) row.push_back(pt + a.points);
    out.table.push_back(std::move(row));
  }
  return out;
}

namespace {

// Actors that are not products of earlier ones, kept in input order.
std::vector<Permutation> generating_subset(const std::vector<Permutation>& actors, const Limits& limits) {
  std::vector<Permutation> chosen;
  if (actors.empty()) return chosen;
  std::unordered_set<Permutation, PermutationHash> seen{Permutation(actors.front().degree())};
  std::vector<Permutation> elements{Permutation(actors.front().degree())};
  for (const auto& a : actors) {
    if (seen.count(a)) continue;
    chosen.push_back(a);
    // Existing elements only need the new generator; new ones need all.
    const std::size_t old = elements.size();
    for (std::size_t i = 0; i < old; ++i) {
      Permutation y = elements[i] * a;
      if (seen.insert(y).second) elements.push_back(std::move(y));
    }
    for (std::size_t done = old; done < elements.size(); ++done) {
      for (const auto& g : chosen) {
        Permutation y = elements[done] * g;
        if (seen.insert(y).second) elements.push_back(std::move(y));
      }
      if (elements.size() > limits.max_order) {
        throw OrderBoundExceeded("group order exceeds bound " + std::to_string(limits.max_order));
      }
    }
  }
  return chosen;
}

}  // namespace

std::vector<FiniteAction> joint_actions(const std::vector<std::size_t>& sizes,
                                        const std::vector<std::vector<std::vector<std::size_t>>>& parts,
                                        const Limits& limits) {
  if (sizes.size() != parts.size()) throw std::invalid_argument("one size per part");
  std::size_t total = 0;
  std::size_t actors = parts.empty() ? 0 : parts.front().size();
  std::vector<std::size_t> offsets;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s].size() != actors) throw ActorMismatch("parts have different actor lists");
    for (const auto& row : parts[s]) {
      if (row.size() != sizes[s]) throw std::invalid_argument("actor row has wrong length");
    }
    offsets.push_back(total);
    total += sizes[s];
  }
  std::vector<Permutation> gens;
  for (std::size_t a = 0; a < actors; ++a) {
    std::vector<Permutation::Point> images(total);
    for (std::size_t s = 0; s < parts.size(); ++s) {
      for (std::size_t i = 0; i < parts[s][a].size(); ++i) {
        images[offsets[s] + i] = static_cast<Permutation::Point>(offsets[s] + parts[s][a][i]);
      }
    }
    gens.emplace_back(std::move(images));
  }
  Limits lim = limits;
  lim.max_degree = std::max(lim.max_degree, total);
  GroupPtr gamma = FiniteGroup::closure(generating_subset(gens, lim), total, lim);
  std::vector<FiniteAction> out;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const std::size_t size = sizes[s];
    FiniteAction act{gamma, size, {}};
    for (const auto& perm : gamma->elements()) {
      std::vector<std::size_t> row(size);
      for (std::size_t i = 0; i < size; ++i) row[i] = perm(static_cast<Permutation::Point>(offsets[s] + i)) - offsets[s];
      act.table.push_back(std::move(row));
    }
    out.push_back(std::move(act));
  }
  return out;
}

std::string describe_subgroup(const Subgroup& h) {
  std::string out = "order " + std::to_string(h.order()) + " <";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out += ", ";
    out += h.parent()->element(h.generators()[i]).to_cycle_string();
  }
  return out + ">";
}

}  // namespace stabclass
