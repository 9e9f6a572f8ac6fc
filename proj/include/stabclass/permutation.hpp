#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stabclass {

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) == a(b(x)).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  /// Builds from disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Points moved are shifted by `offset`, and the degree grows to
  /// `new_degree`. Used for disjoint-support direct products.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  /// Cycle notation such as "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace stabclass
