#pragma once

#include <set>
#include <span>
#include <vector>

#include "pcconj/braid.hpp"
#include "pcconj/pc.hpp"
#include "pcconj/presentation.hpp"

namespace pcconj {

/// True iff every image lies in `target` and every defining relation of `p`
/// holds among the images (word problem in the ambient braid group).
bool verify_homomorphism(const ArtinPresentation& p,
                         const std::vector<BraidWord>& images,
                         const GroupContext& target);

/// B_n(X) = mu^-1(S_n(X)): braids pure on every strand in X.
GroupContext bn_x_context(int n, const std::set<int>& fixed_points);

/// The pure braid group, kernel of mu.
GroupContext colored_context(int n);

/// An Artin group realized by braid images inside an ambient context.
struct RealizedGroup {
  RealizedPresentation presentation;
  GroupContext ambient;

  BraidWord realize(std::span<const int> letters) const {
    return presentation.realize(letters);
  }
};

/// A(B_n) as B_{n+1}({1}): b_i -> sigma_{n+1-i} for i < n, b_n -> sigma_1^2.
/// Construction fails with PreconditionError if a relation does not hold.
RealizedGroup type_b_context(int n);

/// The homomorphism A(B_n) -> Z with b_n -> 1 and b_i -> 0, read off a braid
/// in B_{n+1}({1}) as the winding of strand 1 around the other strands.
long type_b_winding(const BraidWord& w);

/// Braid images of a_1..a_n under A(A~_{n-1}) -> A(B_n) -> B_{n+1}({1}).
std::vector<BraidWord> affine_a_images(int n);

/// A(A~_{n-1}) as the kernel of type_b_winding inside the type-B context.
/// The A~ presentation with its images is attached; centralizers are
/// unsupported whenever the index is infinite.
GroupContext affine_a_context(int n);

/// A(C~_{n-1}) identified with B_n({1,2}); elements are braid words.
GroupContext affine_c_context(int n);

/// pi_X for X = {1,2}: B_n({1,2}) -> CB_2 = Z, the linking number of strands
/// 1 and 2 (sigma_1^2 -> 1). Only m = 2 is supported.
long strand_deletion(const BraidWord& w, int m = 2);

/// IB_n({1..m}), the kernel of pi_X. m = 1 gives B_n({1}) itself; m = 2 is
/// stacked over B_n({1,2}); larger m is refused with UnsupportedError.
GroupContext ib_context(int n, int m);

}  // namespace pcconj
