#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "pcconj/braid.hpp"

namespace pcconj {

/// `result == input.conjugate_by(conjugator)`.
struct ConjugationStep {
  NormalForm result;
  NormalForm conjugator;
};

/// Conjugation by tau^inf(f_1). Canonical length zero is a fixed point with
/// identity conjugator.
ConjugationStep cycling(const NormalForm& a);

/// Conjugation by f_l^-1.
ConjugationStep decycling(const NormalForm& a);

/// Cycles until inf is maximal, then decycles until sup is minimal. A repeat
/// in either trajectory without progress certifies the extreme value.
ConjugationStep summit_representative(const NormalForm& a);

/// (source, s, target) with source.conjugate_by_simple(s) == target; vertex
/// indices refer to SummitSet::vertices().
struct SummitArrow {
  std::size_t source;
  Permutation simple;
  std::size_t target;
};

/// The super summit set of an element, with a BFS spanning tree rooted at
/// the representative and every simple-element arrow inside the set.
class SummitSet {
 public:
  /// Conjugator x with input.conjugate_by(x) == base().
  const NormalForm& from_input() const { return from_input_; }
  const NormalForm& base() const { return vertices_.front(); }

  /// BFS discovery order; vertices()[0] is the base.
  const std::vector<NormalForm>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::optional<std::size_t> index_of(const NormalForm& v) const;
  bool contains(const NormalForm& v) const { return index_of(v).has_value(); }

  /// Conjugator c with base().conjugate_by(c) == vertices()[i], following
  /// the BFS tree.
  const NormalForm& to_vertex(std::size_t i) const { return to_vertex_[i]; }

  /// BFS tree parent arrow of vertex i (absent for the root).
  std::optional<std::size_t> tree_arrow(std::size_t i) const {
    return tree_arrow_[i];
  }

  const std::vector<SummitArrow>& arrows() const { return arrows_; }

  std::set<NormalForm> vertex_set() const {
    return {vertices_.begin(), vertices_.end()};
  }

 private:
  friend SummitSet summit_set(const NormalForm& a);

  NormalForm from_input_;
  std::vector<NormalForm> vertices_;
  std::vector<NormalForm> to_vertex_;
  std::vector<std::optional<std::size_t>> tree_arrow_;
  std::unordered_map<NormalForm, std::size_t> index_;
  std::vector<SummitArrow> arrows_;
};

/// Every proper simple element of B_n (all permutations but the identity),
/// lexicographic by image list.
const std::vector<Permutation>& candidate_simples(std::size_t n);

SummitSet summit_set(const NormalForm& a);

/// Witness that conjugator^-1 * a * conjugator == b.
struct ConjugacyCertificate {
  NormalForm a;
  NormalForm b;
  BraidWord conjugator;

  /// Re-checks the defining equation with the word problem.
  bool verify() const;
};

/// Decides conjugacy in B_n. Exponent sum and the cycle type of mu give fast
/// negatives; otherwise both sides are taken to their summit sets.
std::optional<ConjugacyCertificate> conjugate_in_G(const BraidWord& a,
                                                   const BraidWord& b);

}  // namespace pcconj
