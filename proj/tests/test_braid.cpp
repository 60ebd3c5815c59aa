#include <algorithm>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "pcconj/braid.hpp"
#include "pcconj/errors.hpp"
#include "support.hpp"

using namespace pcconj;

namespace {

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

// One random relation-preserving rewrite somewhere in the word.
std::vector<int> rewrite(std::mt19937& rng, int n, std::vector<int> v) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const std::size_t pos = v.empty() ? 0 : rng() % (v.size() + 1);
    switch (rng() % 3) {
      case 0: {
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const int s = rng() % 2 ? g : -g;
        v.insert(v.begin() + static_cast<long>(pos), {s, -s});
        return v;
      }
      case 1:
        if (pos + 1 < v.size() && std::abs(std::abs(v[pos]) - std::abs(v[pos + 1])) >= 2) {
          std::swap(v[pos], v[pos + 1]);
          return v;
        }
        break;
      default:
        if (pos + 2 < v.size() && v[pos] == v[pos + 2] &&
            std::abs(std::abs(v[pos]) - std::abs(v[pos + 1])) == 1 &&
            (v[pos] > 0) == (v[pos + 1] > 0)) {
          std::swap(v[pos], v[pos + 1]);
          v[pos + 2] = v[pos];
          return v;
        }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("braid words") {
  CHECK_THROWS_AS(W(1, {}), PreconditionError);
  CHECK_THROWS_AS(W(3, {3}), PreconditionError);
  CHECK_THROWS_AS(W(3, {0}), PreconditionError);
  CHECK(BraidWord::parse(3, " 1 -2  1 ") == W(3, {1, -2, 1}));
  CHECK(BraidWord::parse(3, "").empty());
  CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), PreconditionError);
  CHECK(W(3, {1, -2}).inverse() == W(3, {2, -1}));
  CHECK((W(3, {1}) * W(3, {2})) == W(3, {1, 2}));
  CHECK_THROWS_AS(W(3, {1}) * W(4, {2}), PreconditionError);
}

TEST_CASE("normal form examples") {
  const auto d = normal_form(W(3, {1, 2, 1}));
  CHECK(d.inf() == 1);
  CHECK(d.canonical_length() == 0);
  CHECK(d.str() == "D^1");

  CHECK(normal_form(W(3, {1, -1})).is_identity());

  const auto sq = normal_form(W(3, {1, 1}));
  CHECK(sq.inf() == 0);
  REQUIRE(sq.canonical_length() == 2);
  CHECK(sq.factors()[0] == simple::generator(3, 1));
  CHECK(sq.factors()[1] == simple::generator(3, 1));
  CHECK(sq.sup() == 2);
  CHECK(sq.str() == "D^0 . [2,1,3] | [2,1,3]");
}

TEST_CASE("simple elements") {
  const auto d = simple::delta(4);
  CHECK(d == Permutation::from_images({4, 3, 2, 1}));
  CHECK(simple::starting_set(d) == std::vector<int>{1, 2, 3});
  CHECK(simple::finishing_set(simple::generator(4, 2)) == std::vector<int>{2});
  for (const auto& s : all_permutations(4)) {
    CHECK(compose(s, simple::right_complement(s)) == d);
    CHECK(compose(simple::left_complement(s), s) == d);
    CHECK(simple::tau(simple::tau(s)) == s);
    // The positive word of s is a permutation braid of the right length.
    const BraidWord w(4, simple::word(s));
    CHECK(mu(w) == s);
    CHECK(normal_form(w) == NormalForm::from_simple(s));
  }
}

TEST_CASE("equals") {
  CHECK(equals(W(3, {1, 2, 1}), W(3, {2, 1, 2})));
  CHECK(equals(W(4, {1, 3}), W(4, {3, 1})));
  CHECK_FALSE(equals(W(3, {1}), W(3, {2})));
  CHECK_THROWS_AS(equals(W(3, {1}), W(4, {1})), PreconditionError);
}

TEST_CASE("mu and exponent sum") {
  CHECK(mu(W(3, {1})) == Permutation::parse("(1 2)", 3));
  CHECK(mu(W(3, {1, -1})).is_identity());
  // Left-to-right product of (1 2) then (2 3).
  CHECK(mu(W(3, {1, 2})) == compose(Permutation::parse("(1 2)", 3),
                                    Permutation::parse("(2 3)", 3)));
  CHECK(mu(W(3, {1, 2})) == Permutation::from_images({3, 1, 2}));
  CHECK(exponent_sum(W(3, {1, 2, -1})) == 1);
  CHECK(exponent_sum(W(3, {1, 2, 1})) == 3);
  CHECK(exponent_sum(W(3, {})) == 0);
}

TEST_CASE("normal form is invariant under relation rewrites") {
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 3;
    const auto w = support::random_word(rng, n, 0, 12);
    auto v = w.letters();
    for (int k = 0; k < 6; ++k) v = rewrite(rng, n, v);
    const BraidWord u(n, v);
    CHECK(normal_form(w) == normal_form(u));
    CHECK(support::free_equal(w, u));
  }
}

TEST_CASE("normal form agrees with the free group action") {
  std::mt19937 rng(2);
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + t % 3;
    const auto u = support::random_word(rng, n, 0, 7);
    const auto v = support::random_word(rng, n, 0, 7);
    CHECK(equals(u, v) == support::free_equal(u, v));
    // The normal form's word represents the same element.
    CHECK(support::free_equal(u, normal_form(u).word()));
    CHECK(normal_form(normal_form(u).word()) == normal_form(u));
  }
}

TEST_CASE("normal form invariants") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 4;
    const auto w = support::random_word(rng, n, 0, 15);
    const auto nf = normal_form(w);
    CHECK(nf.canonical_length() <= w.length());
    CHECK(equals(w * w.inverse(), BraidWord(n, {})));
    CHECK(mu(nf.word()) == mu(w));
    CHECK(exponent_sum(nf.word()) == exponent_sum(w));
    const auto d = simple::delta(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < nf.factors().size(); ++i) {
      const auto& f = nf.factors()[i];
      CHECK_FALSE(f.is_identity());
      CHECK(f != d);
      if (i + 1 < nf.factors().size()) {
        const auto fin = simple::finishing_set(f);
        for (int s : simple::starting_set(nf.factors()[i + 1])) {
          CHECK(std::find(fin.begin(), fin.end(), s) != fin.end());
        }
      }
    }
    CHECK(nf.inverse() == normal_form(w.inverse()));
    const auto c = support::random_word(rng, n, 0, 6);
    CHECK(normal_form(w) * normal_form(c) == normal_form(w * c));
    CHECK(nf.conjugate_by(normal_form(c)) == normal_form(conjugate_word(w, c)));
    const auto perms = all_permutations(static_cast<std::size_t>(n));
    const auto s = perms[rng() % perms.size()];
    CHECK(nf.conjugate_by_simple(s) ==
          normal_form(conjugate_word(w, BraidWord(n, simple::word(s)))));
  }
}

TEST_CASE("conjugation by Delta flips generators") {
  for (int n = 2; n <= 6; ++n) {
    const BraidWord delta(n, simple::word(simple::delta(static_cast<std::size_t>(n))));
    for (int i = 1; i < n; ++i) {
      CHECK(equals(conjugate_word(W(n, {i}), delta), W(n, {n - i})));
    }
    const auto d2 = NormalForm::delta_power(n, 2);
    CHECK(d2.inf() == 2);
    CHECK(normal_form(delta * delta) == d2);
  }
}
