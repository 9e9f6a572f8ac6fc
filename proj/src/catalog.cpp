#include "stabclass/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "stabclass/errors.hpp"
#include "stabclass/homomorphism.hpp"

namespace stabclass {

namespace {

using Point = Permutation::Point;

struct Factor {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

Permutation cycle_perm(std::size_t degree, std::vector<Point> cycle) {
  return Permutation::from_cycles(degree, {std::move(cycle)});
}

Factor cyclic(std::size_t n) {
  Factor f{std::max<std::size_t>(n, 1), {}};
  if (n > 1) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
    f.generators.push_back(cycle_perm(n, c));
  }
  return f;
}

Factor dihedral(std::size_t order) {
  const std::size_t n = order / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) return {4, {cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})}};
  Factor f = cyclic(n);
  std::vector<Point> flip(n);
  for (std::size_t i = 0; i < n; ++i) flip[i] = static_cast<Point>((n - i) % n);
  f.generators.emplace_back(flip);
  return f;
}

// Regular representation on a^i b^j, point i + m*j.
Factor quaternion(std::size_t order) {
  const std::size_t m = order / 2;
  std::vector<Point> a(order), b(order);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      a[i + m * j] = static_cast<Point>((i + 1) % m + m * j);
      const std::size_t neg = (m - i) % m;
      b[i + m * j] = static_cast<Point>(j == 0 ? neg + m : (neg + m / 2) % m);
    }
  }
  return {order, {Permutation(a), Permutation(b)}};
}

Factor symmetric(std::size_t n) {
  Factor f{std::max<std::size_t>(n, 1), {}};
  if (n < 2) return f;
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
  f.generators.push_back(cycle_perm(n, c));
  f.generators.push_back(cycle_perm(n, {0, 1}));
  return f;
}

Factor alternating(std::size_t n) {
  Factor f{std::max<std::size_t>(n, 1), {}};
  for (std::size_t i = 0; i + 2 < n; ++i) {
    f.generators.push_back(
        cycle_perm(n, {static_cast<Point>(i), static_cast<Point>(i + 1), static_cast<Point>(i + 2)}));
  }
  return f;
}

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  GroupPtr parse() {
    if (text_.starts_with("perm:")) {
      pos_ = 5;
      return parse_perm();
    }
    std::vector<Factor> factors{parse_factor()};
    while (pos_ < text_.size()) {
      expect('x');
      factors.push_back(parse_factor());
    }
    std::size_t degree = 0;
    for (const auto& f : factors) degree += f.degree;
    if (degree > limits_.max_degree) throw OrderBoundExceeded("degree " + std::to_string(degree) + " exceeds bound");
    std::vector<Permutation> gens;
    std::size_t offset = 0;
    for (const auto& f : factors) {
      for (const auto& g : f.generators) gens.push_back(g.shifted(offset, degree));
      offset += f.degree;
    }
    return FiniteGroup::closure(std::move(gens), degree, limits_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 100000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  Factor parse_factor() {
    if (pos_ >= text_.size()) fail("expected a group name");
    const std::size_t start = pos_;
    const char kind = text_[pos_++];
    const std::size_t n = number();
    auto bad = [&](const std::string& what) {
      pos_ = start;
      fail(what);
    };
    if (n > limits_.max_degree * 2 + 2) bad("size out of range");
    switch (kind) {
      case 'C':
        if (n == 0) bad("C needs n >= 1");
        return cyclic(n);
      case 'D':
        if (n < 2 || n % 2) bad("D needs an even order");
        return dihedral(n);
      case 'Q':
        if (n < 8 || !is_p_power(n, 2)) bad("Q needs a power of two >= 8");
        return quaternion(n);
      case 'S':
        if (n == 0) bad("S needs n >= 1");
        return symmetric(n);
      case 'A':
        if (n == 0) bad("A needs n >= 1");
        return alternating(n);
      default:
        bad("unknown group name");
    }
    return {};
  }

  GroupPtr parse_perm() {
    std::vector<std::vector<std::vector<Point>>> gens;
    std::size_t degree = 1;
    for (;;) {
      std::vector<std::vector<Point>> cycles;
      if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
      while (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        std::vector<Point> cycle;
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
        while (pos_ < text_.size() && text_[pos_] != ')') {
          const std::size_t at = pos_;
          const std::size_t x = number();
          if (x >= limits_.max_degree) {
            pos_ = at;
            fail("point exceeds degree bound");
          }
          if (std::find(cycle.begin(), cycle.end(), x) != cycle.end()) {
            pos_ = at;
            fail("point repeated in cycle");
          }
          cycle.push_back(static_cast<Point>(x));
          degree = std::max(degree, x + 1);
          while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
        }
        expect(')');
        cycles.push_back(std::move(cycle));
      }
      gens.push_back(std::move(cycles));
      if (pos_ == text_.size()) break;
      expect(';');
    }
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(Permutation::from_cycles(degree, g));
    return FiniteGroup::closure(std::move(perms), degree, limits_);
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

struct CorpusEntry {
  const char* spec;
  std::size_t order;
};

// C2^4, C2^5, C4xC2^3 and C3^3 are left out: their automorphism groups
// exceed the order bound. D8xC2xC2 is left out because its Sylow subgroup
// contains C2^4.
constexpr CorpusEntry kCorpus[] = {
    {"C1", 1},
    {"C2", 2},
    {"C3", 3},
    {"C4", 4}, {"C2xC2", 4},
    {"C5", 5},
    {"C6", 6}, {"S3", 6},
    {"C7", 7},
    {"C8", 8}, {"C4xC2", 8}, {"C2xC2xC2", 8}, {"D8", 8}, {"Q8", 8},
    {"C9", 9}, {"C3xC3", 9},
    {"C10", 10}, {"D10", 10},
    {"C11", 11},
    {"C12", 12}, {"C6xC2", 12}, {"D12", 12}, {"A4", 12}, {"perm:(0 1 2);(1 2)(3 4 5 6)", 12},
    {"C13", 13},
    {"C14", 14}, {"D14", 14},
    {"C15", 15},
    {"C16", 16}, {"C8xC2", 16}, {"C4xC4", 16}, {"C4xC2xC2", 16}, {"D16", 16}, {"Q16", 16},
    {"D8xC2", 16}, {"Q8xC2", 16},
    {"C17", 17},
    {"C18", 18}, {"C6xC3", 18}, {"D18", 18}, {"S3xC3", 18},
    {"C19", 19},
    {"C20", 20}, {"C10xC2", 20}, {"D20", 20},
    {"C21", 21},
    {"C22", 22}, {"D22", 22},
    {"C23", 23},
    {"C24", 24}, {"C12xC2", 24}, {"C6xC2xC2", 24}, {"S4", 24}, {"D24", 24}, {"A4xC2", 24},
    {"S3xC4", 24}, {"D8xC3", 24}, {"Q8xC3", 24},
    {"C25", 25}, {"C5xC5", 25},
    {"C26", 26}, {"D26", 26},
    {"C27", 27}, {"C9xC3", 27},
    {"C28", 28}, {"C14xC2", 28}, {"D28", 28},
    {"C29", 29},
    {"C30", 30}, {"D30", 30}, {"S3xC5", 30}, {"D10xC3", 30},
    {"C31", 31},
    {"C32", 32}, {"C16xC2", 32}, {"C8xC4", 32}, {"C8xC2xC2", 32}, {"C4xC4xC2", 32}, {"D32", 32},
    {"Q32", 32}, {"D16xC2", 32}, {"Q16xC2", 32}, {"D8xC4", 32}, {"Q8xC4", 32},
};

const std::vector<GroupSpec>& full_corpus() {
  static const std::vector<GroupSpec> all = [] {
    std::vector<GroupSpec> out;
    for (const auto& e : kCorpus) {
      GroupPtr g = parse_group(e.spec);
      if (g->order() != e.order) throw std::logic_error(std::string("corpus order mismatch for ") + e.spec);
      out.push_back({e.spec, std::move(g)});
    }
    return out;
  }();
  return all;
}

}  // namespace

GroupPtr parse_group(std::string_view text, const Limits& limits) {
  if (text.empty()) throw ParseError("empty group spec", 0);
  return Parser(text, limits).parse();
}

std::string canonical_form(const GroupPtr& g) {
  std::string out = "perm:";
  if (g->generators().empty()) return out + "()";
  for (std::size_t i = 0; i < g->generators().size(); ++i) {
    if (i) out += ';';
    out += g->generators()[i].to_cycle_string();
  }
  return out;
}

std::vector<GroupSpec> corpus(std::size_t max_order) {
  if (max_order > kCorpusCeiling) throw std::invalid_argument("corpus order above ceiling");
  std::vector<GroupSpec> out;
  for (const auto& spec : full_corpus()) {
    if (spec.resolved->order() <= max_order) out.push_back(spec);
  }
  return out;
}

std::vector<std::size_t> group_invariants(const GroupPtr& g) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t e = 0; e < g->order(); ++e) ++hist[g->element_order(static_cast<Element>(e))];
  std::vector<std::size_t> out{g->order(), center(Subgroup::whole(g)).order()};
  for (const auto& [ord, count] : hist) {
    out.push_back(ord);
    out.push_back(count);
  }
  return out;
}

bool isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (group_invariants(a) != group_invariants(b)) return false;
  return isomorphism(a, b).has_value();
}

std::string name_of(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<std::vector<Permutation>, std::string> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(g->elements()); it != cache.end()) return it->second;

  std::vector<std::string> names;
  if (g->order() <= kCorpusCeiling) {
    for (const auto& spec : full_corpus()) {
      if (spec.resolved->order() == g->order()) names.push_back(spec.text);
    }
  } else {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::size_t fact = 1;
      for (std::size_t k = 2; k <= n; ++k) fact *= k;
      if (fact == g->order()) names.push_back("S" + std::to_string(n));
      if (n >= 2 && fact / 2 == g->order()) names.push_back("A" + std::to_string(n));
    }
  }
  std::string name = canonical_form(g);
  const auto inv = group_invariants(g);
  for (const auto& candidate : names) {
    GroupPtr h;
    try {
      h = parse_group(candidate, Limits{400, 64, 20000});
    } catch (const Error&) {
      continue;
    }
    if (group_invariants(h) == inv && isomorphism(g, h)) {
      name = candidate;
      break;
    }
  }
  cache.emplace(g->elements(), name);
  return name;
}

}  // namespace stabclass
