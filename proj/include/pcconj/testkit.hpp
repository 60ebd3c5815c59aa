#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "pcconj/braid.hpp"

namespace pcconj::testkit {

/// Exhaustive, deliberately naive oracles. They normalize plain words and
/// never touch the summit-set or stabilizer-chain code, so they can check
/// those paths. Each refuses (PreconditionError) searches above a fixed size.

using PermPredicate = std::function<bool(const Permutation&)>;

/// Every word of length in [min_length, max_length]; when `reduced_only`,
/// only freely reduced ones. Ordered by length, then lexicographically with
/// letters ranked -(n-1) < ... < -1 < 1 < ... < n-1.
std::vector<BraidWord> enumerate_words(int strands, int min_length,
                                       int max_length, bool reduced_only);

/// First freely reduced c with |c| <= max_length (and constraint(mu(c)) when
/// given) such that c^-1 a c = b. nullopt only means "no witness that short".
std::optional<BraidWord> brute_conjugator(const BraidWord& a,
                                          const BraidWord& b, int max_length,
                                          const PermPredicate& constraint = {});

/// Closure of the summit representative of a under conjugation by every
/// simple element, keeping results with the same inf and sup.
std::set<NormalForm> brute_summit_closure(const BraidWord& a);

/// All words c with 1 <= |c| <= max_length and c^-1 a c = a.
std::vector<BraidWord> brute_commuting_words(const BraidWord& a,
                                             int max_length);

}  // namespace pcconj::testkit
