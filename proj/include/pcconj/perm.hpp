#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pcconj {

/// An element of the symmetric group on {1,...,n}.
///
/// Products act left to right: `compose(p, q)` first applies p, then q, so
/// `compose(p, q).image(i) == q.image(p.image(i))`. This matches the reading
/// order of braid words, which is what makes `mu` a homomorphism.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of degree n.
  explicit Permutation(std::size_t n);

  /// From 1-based images; throws PreconditionError unless a bijection.
  static Permutation from_images(std::vector<int> images);

  /// From 0-based images without validation; for callers that already hold
  /// a bijection.
  static Permutation from_raw(std::vector<int> zero_based) {
    Permutation p;
    p.img_ = std::move(zero_based);
    return p;
  }
  const std::vector<int>& raw() const { return img_; }

  /// Transposition (i i+1), 1-based i.
  static Permutation adjacent_transposition(std::size_t n, std::size_t i);

  /// Parses "[2,1,3]" (image list) or "(1 2)(3 4)" (cycles, needs degree).
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return img_.size(); }

  /// 1-based image of a 1-based point.
  int image(int point) const;

  /// 0-based access for the hot loops in the braid engine.
  int operator[](std::size_t i) const { return img_[i]; }

  std::vector<int> images() const;
  bool is_identity() const;

  /// Sorted cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);
  friend struct std::hash<Permutation>;

  std::vector<int> img_;  // 0-based images
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// True iff p fixes every point of `points` (1-based).
bool fixes(const Permutation& p, const std::set<int>& points);

/// All permutations of degree n fixing `points` pointwise, in lexicographic
/// order of their image lists.
std::vector<Permutation> enumerate_sigma_X(std::size_t n,
                                           const std::set<int>& points);

/// Every permutation of degree n, lexicographic.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace pcconj

template <>
struct std::hash<pcconj::Permutation> {
  std::size_t operator()(const pcconj::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p.img_) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
