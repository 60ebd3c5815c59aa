#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pcconj/braid.hpp"
#include "pcconj/errors.hpp"

namespace pcconj {

/// Alternating product x y x y ... of m factors.
template <typename Word>
Word prod_n(const Word& x, const Word& y, int m) {
  if (m < 2) throw PreconditionError("prod_n needs m >= 2");
  Word out = x;
  for (int k = 1; k < m; ++k) out = out * (k % 2 == 0 ? x : y);
  return out;
}

/// Artin presentation given by a Coxeter matrix. Entries are m_ij for the
/// 0-based generator pair; `infinity` marks a missing relation.
class ArtinPresentation {
 public:
  static constexpr int infinity = 0;

  ArtinPresentation(std::size_t rank, std::vector<std::vector<int>> coxeter);

  std::size_t rank() const { return rank_; }
  int m(std::size_t i, std::size_t j) const { return coxeter_[i][j]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const {
    return coxeter_;
  }

  /// One (lhs, rhs) pair per i < j with m_ij finite, as words of 1-based
  /// generator indices: prod_m(s_i, s_j) = prod_m(s_j, s_i).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations() const;

 private:
  std::size_t rank_;
  std::vector<std::vector<int>> coxeter_;
};

/// A_{n-1}: the Artin presentation of B_n on sigma_1..sigma_{n-1}.
ArtinPresentation braid_presentation(int strands);

/// B_n: chain b_1 - ... - b_{n-1} with the m = 4 bond between b_{n-1}, b_n.
ArtinPresentation type_b_presentation(int n);

/// Affine A~_{n-1}: the n-cycle a_1 - a_2 - ... - a_n - a_1 (n >= 3).
ArtinPresentation affine_a_presentation(int n);

/// A presentation together with braid images of its generators.
struct RealizedPresentation {
  ArtinPresentation presentation;
  std::vector<BraidWord> images;

  /// Maps a word in the presentation generators (signed, 1-based) to braids.
  BraidWord realize(std::span<const int> letters) const;
};

}  // namespace pcconj
