#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcconj/braid.hpp"
#include "pcconj/perm.hpp"
#include "pcconj/perm_chain.hpp"
#include "pcconj/presentation.hpp"

namespace pcconj {

// ---------------------------------------------------------------------------
// The target group K
// ---------------------------------------------------------------------------

enum class TargetKind { FinitePerm, Integers };

/// An element of K: a permutation, or an integer written additively.
using TargetElement = std::variant<Permutation, long>;

TargetElement target_identity(TargetKind kind, std::size_t degree);
TargetElement target_multiply(const TargetElement& x, const TargetElement& y);
TargetElement target_inverse(const TargetElement& x);
std::string to_string(const TargetElement& x);

/// Constructive membership in the subgroup of K generated by a labelled list
/// of images. Returned words evaluate to their targets exactly.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;

  virtual TargetKind kind() const = 0;
  virtual std::optional<LabelWord> express(const TargetElement& target) const = 0;
  virtual TargetElement evaluate(const LabelWord& w) const = 0;

  /// Size of the generated subgroup; nullopt when infinite.
  virtual std::optional<std::uint64_t> order() const = 0;

  /// Every element with a word. Throws UnsupportedError when infinite.
  virtual std::vector<std::pair<TargetElement, LabelWord>> elements() const = 0;

  bool contains(const TargetElement& target) const {
    return express(target).has_value();
  }
};

/// FinitePerm: stabilizer chain on the images. Integers: extended gcd.
std::unique_ptr<MembershipOracle> make_membership_oracle(
    TargetKind kind, std::size_t degree, std::vector<TargetElement> images);

// ---------------------------------------------------------------------------
// Condition PC data
// ---------------------------------------------------------------------------

/// (K, K', phi): H = phi^-1(K') with K' finite and membership solvable in K.
class PCTriple {
 public:
  using Homomorphism = std::function<TargetElement(const BraidWord&)>;

  /// K = S_degree; K' must contain the identity and be closed under
  /// products and inverses.
  static PCTriple finite_perm(std::string name, std::size_t degree,
                              Homomorphism phi, std::vector<Permutation> kprime);

  /// K = Z with K' the trivial subgroup {0}.
  static PCTriple integers(std::string name, Homomorphism phi);

  const std::string& name() const { return name_; }
  TargetKind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }

  TargetElement phi(const BraidWord& w) const { return phi_(w); }
  const std::vector<TargetElement>& kprime() const { return kprime_; }
  bool in_kprime(const TargetElement& x) const;
  TargetElement identity() const { return target_identity(kind_, degree_); }

 private:
  PCTriple() = default;

  std::string name_;
  TargetKind kind_ = TargetKind::FinitePerm;
  std::size_t degree_ = 0;
  Homomorphism phi_;
  std::vector<TargetElement> kprime_;
  std::set<Permutation> kprime_lookup_;
};

/// The triple (S_n, S_n(X), mu) cutting out B_n(X).
PCTriple mu_triple(int strands, const std::set<int>& fixed_points);

// ---------------------------------------------------------------------------
// Group contexts
// ---------------------------------------------------------------------------

/// Outcome of a conjugacy decision. `stage` records where it was settled:
/// Ambient for the conjugacy test in G, Lift for the coset search.
struct Decision {
  enum class Stage { Ambient, Lift };

  std::optional<BraidWord> conjugator;
  Stage stage = Stage::Ambient;

  bool conjugate() const { return conjugator.has_value(); }
};

/// A group realized inside some B_n, bundled with what Condition PC needs of
/// an ambient group: a conjugacy solver and a centralizer generator. Any
/// context can be the G of a further PC construction.
class GroupContext {
 public:
  using Membership = std::function<bool(const BraidWord&)>;
  using Solver = std::function<Decision(const BraidWord&, const BraidWord&)>;
  using Centralizer = std::function<std::vector<BraidWord>(const BraidWord&)>;

  GroupContext(std::string name, int strands, Membership membership,
               Solver solver, Centralizer centralizer,
               std::optional<RealizedPresentation> presentation = std::nullopt);

  const std::string& name() const { return name_; }
  int strands() const { return strands_; }

  bool contains(const BraidWord& w) const;

  /// Throws PreconditionError unless both inputs lie in the group.
  Decision solve(const BraidWord& a, const BraidWord& b) const;

  /// Every output commutes with a and lies in the group. May throw
  /// UnsupportedError (infinite index).
  std::vector<BraidWord> centralizer(const BraidWord& a) const;

  const std::optional<RealizedPresentation>& presentation() const {
    return presentation_;
  }
  GroupContext with_presentation(RealizedPresentation p) const;
  GroupContext renamed(std::string name) const;

 private:
  std::string name_;
  int strands_;
  Membership membership_;
  Solver solver_;
  Centralizer centralizer_;
  std::optional<RealizedPresentation> presentation_;
};

/// B_n itself: summit-set conjugacy and summit-graph centralizers.
GroupContext braid_group_context(int strands);

// ---------------------------------------------------------------------------
// The algorithms
// ---------------------------------------------------------------------------

/// Which side of phi(C_G(a) h) ∩ K' to enumerate. Both give the same answer
/// set; Auto picks the smaller finite side.
enum class CosetSearch { Auto, OverKprime, OverImage };

/// Turns a G-conjugator h (h^-1 a h = b) into an H-conjugator, or nullopt when
/// a and b are not conjugate in H. Throws PreconditionError when h does not
/// conjugate a to b or a, b are not in H.
std::optional<BraidWord> algorithm_3_1(const GroupContext& ctx,
                                       const PCTriple& triple,
                                       const BraidWord& a, const BraidWord& b,
                                       const BraidWord& h,
                                       CosetSearch search = CosetSearch::Auto);

/// Conjugacy in H: decide in G first, then lift with algorithm_3_1.
Decision algorithm_3_2(const GroupContext& ctx, const PCTriple& triple,
                       const BraidWord& a, const BraidWord& b);

/// Generators of C_H(a) = C_G(a) ∩ H by Schreier's lemma over the cosets of
/// Q ∩ K' in Q = phi(C_G(a)). Throws UnsupportedError when that index is
/// infinite.
std::vector<BraidWord> subgroup_centralizer(const GroupContext& ctx,
                                            const PCTriple& triple,
                                            const BraidWord& a);

/// The context of H = phi^-1(K') inside ctx. Validates phi on ctx's
/// presentation when one is attached.
GroupContext make_subgroup_context(const GroupContext& ctx, PCTriple triple,
                                   std::string name = {});

}  // namespace pcconj
