#include "pcconj/presentation.hpp"

#include <cstdlib>

namespace pcconj {

namespace {

struct Letters {
  std::vector<int> v;
  Letters operator*(const Letters& o) const {
    Letters out = *this;
    out.v.insert(out.v.end(), o.v.begin(), o.v.end());
    return out;
  }
};

}  // namespace

ArtinPresentation::ArtinPresentation(std::size_t rank,
                                     std::vector<std::vector<int>> coxeter)
    : rank_(rank), coxeter_(std::move(coxeter)) {
  if (coxeter_.size() != rank_) throw PreconditionError("Coxeter matrix size");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (coxeter_[i].size() != rank_) {
      throw PreconditionError("Coxeter matrix is not square");
    }
    if (coxeter_[i][i] != 1) {
      throw PreconditionError("Coxeter matrix diagonal must be 1");
    }
    for (std::size_t j = 0; j < rank_; ++j) {
      if (coxeter_[i][j] != coxeter_[j][i]) {
        throw PreconditionError("Coxeter matrix must be symmetric");
      }
      if (i != j && coxeter_[i][j] != infinity && coxeter_[i][j] < 2) {
        throw PreconditionError("off-diagonal Coxeter entries must be >= 2");
      }
    }
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
ArtinPresentation::relations() const {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const int m = coxeter_[i][j];
      if (m == infinity) continue;
      Letters si{{static_cast<int>(i) + 1}};
      Letters sj{{static_cast<int>(j) + 1}};
      out.emplace_back(prod_n(si, sj, m).v, prod_n(sj, si, m).v);
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> commuting_matrix(std::size_t rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

void bond(std::vector<std::vector<int>>& m, std::size_t i, std::size_t j,
          int value) {
  m[i][j] = m[j][i] = value;
}

}  // namespace

ArtinPresentation braid_presentation(int strands) {
  if (strands < 2) throw PreconditionError("B_n needs n >= 2");
  const auto rank = static_cast<std::size_t>(strands - 1);
  auto m = commuting_matrix(rank);
  for (std::size_t i = 0; i + 1 < rank; ++i) bond(m, i, i + 1, 3);
  return ArtinPresentation(rank, std::move(m));
}

ArtinPresentation type_b_presentation(int n) {
  if (n < 2) throw PreconditionError("type B_n needs n >= 2");
  const auto rank = static_cast<std::size_t>(n);
  auto m = commuting_matrix(rank);
  for (std::size_t i = 0; i + 2 < rank; ++i) bond(m, i, i + 1, 3);
  bond(m, rank - 2, rank - 1, 4);
  return ArtinPresentation(rank, std::move(m));
}

ArtinPresentation affine_a_presentation(int n) {
  if (n < 3) throw PreconditionError("affine A~_{n-1} needs n >= 3");
  const auto rank = static_cast<std::size_t>(n);
  auto m = commuting_matrix(rank);
  for (std::size_t i = 0; i < rank; ++i) bond(m, i, (i + 1) % rank, 3);
  return ArtinPresentation(rank, std::move(m));
}

BraidWord RealizedPresentation::realize(std::span<const int> letters) const {
  if (images.size() != presentation.rank()) {
    throw PreconditionError("one image per generator required");
  }
  if (images.empty()) throw PreconditionError("empty presentation");
  BraidWord out(images.front().strands());
  for (int x : letters) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (x == 0 || k > images.size()) {
      throw PreconditionError("generator index out of range");
    }
    out = out * (x > 0 ? images[k - 1] : images[k - 1].inverse());
  }
  return out;
}

}  // namespace pcconj
