#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcconj/perm.hpp"

namespace pcconj {

/// A word over a labelled generator list. Letter k > 0 stands for generator
/// k-1, letter -k for its inverse.
using LabelWord = std::vector<int>;

LabelWord inverse(const LabelWord& w);

/// Concatenation with free cancellation at the seam.
LabelWord concat(const LabelWord& u, const LabelWord& v);

struct LabeledPermutation {
  std::string label;
  Permutation perm;
};

/// Stabilizer chain for <generators> with word tracking (deterministic
/// Schreier-Sims). Every transversal element carries a LabelWord over the
/// caller's generators, so membership queries return words that can be
/// lifted back to whatever the labels stand for.
class PermGroupChain {
 public:
  PermGroupChain(std::size_t degree, std::vector<LabeledPermutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<LabeledPermutation>& generators() const { return gens_; }

  /// 1-based base points.
  std::vector<int> base() const;

  std::uint64_t order() const;

  bool contains(const Permutation& target) const;

  /// A word over the generator labels evaluating to target, or nullopt when
  /// target lies outside the group.
  std::optional<LabelWord> constructive_membership(
      const Permutation& target) const;

  Permutation evaluate(const LabelWord& w) const;

  /// "g1*g2^-1" style rendering using the caller's labels; "1" when empty.
  std::string render(const LabelWord& w) const;

  /// Every group element with a word for it. Intended for small groups.
  std::vector<std::pair<Permutation, LabelWord>> elements() const;

  /// Transversal words stored at level i, keyed by 1-based orbit point.
  std::vector<std::pair<int, LabelWord>> transversal(std::size_t level) const;
  std::size_t depth() const { return levels_.size(); }

 private:
  struct Element {
    Permutation perm;
    LabelWord word;
  };
  struct Level {
    int base_point = 0;  // 0-based
    std::vector<Element> gens;
    std::vector<std::optional<Element>> transversal;  // by 0-based point
    std::vector<int> orbit;                            // discovery order
  };

  void rebuild_orbit(Level& level) const;
  std::pair<Element, std::size_t> sift(Element g, std::size_t from) const;
  void add_strong_generator(const Element& r, std::size_t first,
                            std::size_t last);
  void complete(std::size_t start);

  std::size_t degree_;
  std::vector<LabeledPermutation> gens_;
  std::vector<Level> levels_;
};

PermGroupChain build_chain(std::size_t degree,
                           std::vector<LabeledPermutation> generators);

}  // namespace pcconj
