#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pcconj/perm.hpp"

namespace pcconj {

/// A word in the Artin generators of B_n. Letter i > 0 is sigma_i, letter -i
/// is its inverse; every |letter| lies in [1, n-1].
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  /// Whitespace-separated signed integers, e.g. "1 2 -1".
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Reversed with every letter negated.
  BraidWord inverse() const;

  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& rhs) const;

  std::string str() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 0;
  std::vector<int> letters_;
};

/// Helpers on simple elements (permutation braids). A simple element is
/// stored as the permutation sending the starting position of each strand to
/// its final position.
namespace simple {

Permutation delta(std::size_t n);
Permutation generator(std::size_t n, std::size_t i);

/// Indices i (1-based) with s = sigma_i * s'.
std::vector<int> starting_set(const Permutation& s);
/// Indices i (1-based) with s = s' * sigma_i.
std::vector<int> finishing_set(const Permutation& s);

/// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Permutation tau(const Permutation& s);
/// The simple x with s * x = Delta.
Permutation right_complement(const Permutation& s);
/// The simple x with x * s = Delta.
Permutation left_complement(const Permutation& s);

/// A positive word for s, of length equal to its number of crossings.
std::vector<int> word(const Permutation& s);

/// Rewrites (a, b) in place so that a*b is unchanged and the pair is
/// left-weighted. Returns true when anything moved.
bool make_left_weighted(Permutation& a, Permutation& b);

}  // namespace simple

/// Left normal form Delta^inf * f_1 * ... * f_l with every factor a proper
/// simple element and each adjacent pair left-weighted. Two braids are equal
/// iff their normal forms are equal, so this doubles as the canonical key.
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(int strands);

  static NormalForm delta_power(int strands, long power);
  static NormalForm from_simple(const Permutation& s);

  int strands() const { return strands_; }
  long inf() const { return inf_; }
  long sup() const { return inf_ + static_cast<long>(factors_.size()); }
  std::size_t canonical_length() const { return factors_.size(); }
  const std::vector<Permutation>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  NormalForm operator*(const NormalForm& rhs) const;
  NormalForm& operator*=(const NormalForm& rhs);
  NormalForm inverse() const;

  /// c^-1 * this * c.
  NormalForm conjugate_by(const NormalForm& c) const;
  /// s^-1 * this * s for a simple s, without building intermediate forms.
  NormalForm conjugate_by_simple(const Permutation& s) const;

  void right_multiply_simple(const Permutation& s);
  void right_multiply_delta_inverse();

  /// Delta powers followed by the factor words.
  BraidWord word() const;

  /// "D^p . f1 | f2 | ..." with factors as image lists.
  std::string str() const;

  auto operator<=>(const NormalForm&) const = default;
  bool operator==(const NormalForm&) const = default;

 private:
  void apply_tau_to_factors();
  void normalize_ends();

  int strands_ = 0;
  long inf_ = 0;
  std::vector<Permutation> factors_;
};

NormalForm normal_form(const BraidWord& w);

/// Word problem. Throws PreconditionError on strand mismatch.
bool equals(const BraidWord& u, const BraidWord& v);

/// The canonical epimorphism B_n -> S_n, sigma_i -> (i i+1).
Permutation mu(const BraidWord& w);

long exponent_sum(const BraidWord& w);

/// Conjugate c^-1 * w * c as a word.
BraidWord conjugate_word(const BraidWord& w, const BraidWord& c);

}  // namespace pcconj

template <>
struct std::hash<pcconj::NormalForm> {
  std::size_t operator()(const pcconj::NormalForm& nf) const noexcept {
    std::size_t h = std::hash<long>{}(nf.inf()) * 0x9e3779b97f4a7c15ULL;
    for (const auto& f : nf.factors()) {
      h ^= std::hash<pcconj::Permutation>{}(f) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};
