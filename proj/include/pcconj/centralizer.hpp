#pragma once

#include <vector>

#include "pcconj/braid.hpp"

namespace pcconj {

/// Generators of C(a) in B_n from loops in the super summit graph.
///
/// a is conjugated to its summit representative r by x. Each arrow (u, s, v)
/// of the summit graph closes a loop path(r->u) * s * path(r->v)^-1 through
/// the BFS spanning tree; the loops generate C(r), and x * loop * x^-1
/// generates C(a). Identity and duplicate generators are dropped.
std::vector<NormalForm> centralizer_elements(const NormalForm& a);

std::vector<BraidWord> centralizer_generators(const BraidWord& a);

}  // namespace pcconj
