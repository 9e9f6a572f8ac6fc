#include "stabclass/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "stabclass/errors.hpp"

namespace stabclass {

namespace {

// BFS closure inside a parent group; stops once more than `cap` elements.
std::optional<std::vector<Element>> close_in(const FiniteGroup& g, std::span<const Element> gens,
                                             std::size_t cap) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(out[i], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
        if (out.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<bool> covered(g.order(), false);
  covered[0] = true;
  for (Element e : elements) {
    if (covered[static_cast<std::size_t>(e)]) continue;
    gens.push_back(e);
    auto span = close_in(g, gens, g.order());
    for (Element x : *span) covered[static_cast<std::size_t>(x)] = true;
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                         std::vector<Permutation> sorted_elements, std::vector<Element> table)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(sorted_elements)),
      table_(std::move(table)) {
  finish();
}

void FiniteGroup::finish() {
  const std::size_t n = elements_.size();
  inverse_.assign(n, 0);
  orders_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == identity()) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
    std::size_t k = 1;
    for (Element x = static_cast<Element>(a); x != identity(); x = mul(x, static_cast<Element>(a))) ++k;
    orders_[a] = a == 0 ? 1 : k;
  }
}

GroupPtr FiniteGroup::closure(std::vector<Permutation> generators, std::size_t degree,
                              const Limits& limits) {
  if (degree > limits.max_degree) {
    throw OrderBoundExceeded("degree " + std::to_string(degree) + " exceeds bound " +
                             std::to_string(limits.max_degree));
  }
  for (const auto& s : generators) {
    if (s.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  // Breadth-first closure; each element is recorded as parent * generator.
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(degree)};
  std::vector<std::pair<std::size_t, std::size_t>> word{{0, 0}};
  seen.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Permutation y = found[i] * generators[g];
      if (seen.emplace(y, found.size()).second) {
        found.push_back(std::move(y));
        word.emplace_back(i, g);
        if (found.size() > limits.max_order) {
          throw OrderBoundExceeded("group order exceeds bound " + std::to_string(limits.max_order));
        }
      }
    }
  }
  const std::size_t n = found.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<Element> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<Element>(r);
  // right[x][g] = x * generator g, in discovery indices.
  std::vector<std::size_t> right(n * generators.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t g = 0; g < generators.size(); ++g) right[x * generators.size() + g] = seen.at(found[x] * generators[g]);
  }
  // a * b = (a * parent(b)) * g, filled in discovery order of b.
  std::vector<std::size_t> prod(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    prod[a * n] = a;
    for (std::size_t b = 1; b < n; ++b) {
      const auto [parent, g] = word[b];
      prod[a * n + b] = right[prod[a * n + parent] * generators.size() + g];
    }
  }
  std::vector<Permutation> elements(n);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    elements[static_cast<std::size_t>(rank[a])] = found[a];
    for (std::size_t b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(rank[a]) * n + static_cast<std::size_t>(rank[b])] = rank[prod[a * n + b]];
    }
  }
  return GroupPtr(new FiniteGroup(degree, std::move(generators), std::move(elements), std::move(table)));
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

bool FiniteGroup::is_abelian() const noexcept {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (table_[a * n + b] != table_[b * n + a]) return false;
    }
  }
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> sorted_elements, std::vector<Element> generators)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {
  mask_.assign(parent_->order(), false);
  for (Element e : elements_) mask_[static_cast<std::size_t>(e)] = true;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {FiniteGroup::identity()}, {});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  auto gens = greedy_generators(*parent, all);
  return Subgroup(std::move(parent), std::move(all), std::move(gens));
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Element> generators) {
  auto elements = close_in(*parent, generators, parent->order());
  std::vector<Element> gens(generators.begin(), generators.end());
  return Subgroup(std::move(parent), std::move(*elements), std::move(gens));
}

std::optional<Subgroup> generated_capped(const GroupPtr& parent, std::span<const Element> generators,
                                         std::size_t cap) {
  auto elements = close_in(*parent, generators, cap);
  if (!elements) return std::nullopt;
  return Subgroup::from_elements(parent, std::move(*elements));
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> mask(parent->order(), false);
  for (Element e : elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= parent->order()) throw NotASubgroup("element out of range");
    mask[static_cast<std::size_t>(e)] = true;
  }
  if (elements.empty() || !mask[0]) throw NotASubgroup("identity missing");
  for (Element a : elements) {
    for (Element b : elements) {
      if (!mask[static_cast<std::size_t>(parent->mul(a, b))]) throw NotASubgroup("set not closed under product");
    }
  }
  auto gens = greedy_generators(*parent, elements);
  return Subgroup(std::move(parent), std::move(elements), std::move(gens));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!same_group(parent_, other.parent_)) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Element e) { return other.contains(e); });
}

GroupPtr Subgroup::as_group() const {
  const std::size_t n = elements_.size();
  std::vector<int> local(parent_->order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
  std::vector<Permutation> perms;
  perms.reserve(n);
  for (Element e : elements_) perms.push_back(parent_->element(e));
  std::vector<Permutation> gens;
  for (Element e : generators_) gens.push_back(parent_->element(e));
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local[static_cast<std::size_t>(parent_->mul(elements_[a], elements_[b]))];
  }
  return GroupPtr(new FiniteGroup(parent_->degree(), std::move(gens), std::move(perms), std::move(table)));
}

Subgroup centralizer(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](Element s) { return g.mul(e, s) == g.mul(s, e); });
    if (ok) out.push_back(e);
  }
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup center(const Subgroup& h) { return intersection(h, centralizer(h)); }

Subgroup normalizer(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](Element s) { return h.contains(g.conj(e, s)); });
    if (ok) out.push_back(e);
  }
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  for (Element e : a.elements()) {
    if (b.contains(e)) out.push_back(e);
  }
  return Subgroup::from_elements(a.parent(), std::move(out));
}

Subgroup conjugate(const Subgroup& h, Element g) {
  const auto& grp = *h.parent();
  std::vector<Element> out;
  out.reserve(h.order());
  for (Element e : h.elements()) out.push_back(grp.conj(g, e));
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup product_subgroup(const Subgroup& h, const Subgroup& c) {
  const auto& g = *h.parent();
  std::vector<Element> out;
  for (Element x : h.elements()) {
    for (Element y : c.elements()) out.push_back(g.mul(x, y));
  }
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup sylow_containing(const Subgroup& ambient, const Subgroup& start, unsigned p) {
  if (!start.is_subgroup_of(ambient)) throw NotNested("start is not inside the ambient subgroup");
  if (!is_p_power(start.order(), p)) throw std::invalid_argument("start is not a p-subgroup");
  const std::size_t target = p_part(ambient.order(), p);
  const auto& g = *ambient.parent();
  Subgroup current = start;
  while (current.order() < target) {
    bool grown = false;
    for (Element e : ambient.elements()) {
      if (current.contains(e) || !is_p_power(g.element_order(e), p)) continue;
      std::vector<Element> gens = current.generators();
      gens.push_back(e);
      auto next = generated_capped(ambient.parent(), gens, target);
      if (next && is_p_power(next->order(), p)) {
        current = std::move(*next);
        grown = true;
        break;
      }
    }
    if (!grown) throw std::logic_error("p-subgroup could not be extended toward a Sylow subgroup");
  }
  return current;
}

Subgroup sylow(const GroupPtr& g, unsigned p) {
  return sylow_containing(Subgroup::whole(g), Subgroup::trivial(g), p);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits) {
  const std::size_t n = g->order();
  // One generator per cyclic subgroup: the least element generating it.
  std::vector<Element> cyclic_gens;
  {
    std::set<std::vector<Element>> cyclic;
    for (std::size_t x = 0; x < n; ++x) {
      const Element e = static_cast<Element>(x);
      std::vector<Element> powers{FiniteGroup::identity()};
      for (Element y = e; y != FiniteGroup::identity(); y = g->mul(y, e)) powers.push_back(y);
      std::sort(powers.begin(), powers.end());
      if (cyclic.insert(powers).second) cyclic_gens.push_back(e);
    }
  }
  std::map<std::vector<Element>, std::size_t> index;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  index.emplace(found.front().elements(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (found[i].contains(c)) continue;
      std::vector<Element> gens = found[i].generators();
      gens.push_back(c);
      // A subgroup with more than half the elements is the whole group.
      auto elems = close_in(*g, gens, n / 2);
      std::vector<Element> key;
      if (elems) {
        key = std::move(*elems);
      } else {
        key.resize(n);
        std::iota(key.begin(), key.end(), 0);
      }
      if (index.count(key)) continue;
      index.emplace(key, found.size());
      found.push_back(elems ? Subgroup::generated(g, gens) : Subgroup::whole(g));
      if (found.size() > limits.max_subgroups) {
        throw OrderBoundExceeded("subgroup count exceeds bound " + std::to_string(limits.max_subgroups));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<Element> conjugating_element(const Subgroup& h1, const Subgroup& h2) {
  if (!same_group(h1.parent(), h2.parent())) throw std::invalid_argument("subgroups of different groups");
  if (h1.order() != h2.order()) return std::nullopt;
  const auto& g = *h1.parent();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool ok = std::all_of(h1.generators().begin(), h1.generators().end(),
                          [&](Element s) { return h2.contains(g.conj(e, s)); });
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<Permutation> are_conjugate(const Subgroup& h1, const Subgroup& h2) {
  auto e = conjugating_element(h1, h2);
  if (!e) return std::nullopt;
  return h1.parent()->element(*e);
}

bool is_p_prime_quotient(const Subgroup& c, const Subgroup& z, unsigned p) {
  if (!z.is_subgroup_of(c)) throw NotNested("Z is not contained in C");
  return (c.order() / z.order()) % p != 0;
}

std::vector<Element> generating_sequence(const GroupPtr& g, std::span<const Element> prefix_pool) {
  std::vector<Element> gens;
  std::size_t current = 1;
  auto extend = [&](std::span<const Element> pool, std::size_t goal) {
    while (current < goal) {
      Element best = -1;
      std::size_t best_size = current;
      for (Element e : pool) {
        gens.push_back(e);
        std::size_t size = close_in(*g, gens, g->order())->size();
        gens.pop_back();
        if (size > best_size) {
          best_size = size;
          best = e;
        }
      }
      if (best < 0) throw std::logic_error("generating pool does not generate");
      gens.push_back(best);
      current = best_size;
    }
  };
  if (!prefix_pool.empty()) {
    auto pool_group = close_in(*g, prefix_pool, g->order());
    extend(prefix_pool, pool_group->size());
  }
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  extend(all, g->order());
  return gens;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_p_power(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

}  // namespace stabclass
