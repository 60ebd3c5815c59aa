#include <random>

#include "doctest.h"
#include "pcconj/conjugacy.hpp"
#include "pcconj/errors.hpp"
#include "pcconj/testkit.hpp"
#include "support.hpp"

using namespace pcconj;

namespace {

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }
NormalForm N(int n, std::vector<int> letters) { return normal_form(W(n, std::move(letters))); }

void check_step(const NormalForm& input, const ConjugationStep& step) {
  CHECK(input.conjugate_by(step.conjugator) == step.result);
}

}  // namespace

TEST_CASE("cycling") {
  const auto d = NormalForm::delta_power(3, 1);
  const auto c = cycling(d);
  CHECK(c.result == d);
  CHECK(c.conjugator.is_identity());

  const auto s1 = N(3, {1});
  const auto cs = cycling(s1);
  CHECK(cs.result == s1);
  CHECK(cs.conjugator == N(3, {1}));

  const auto x = N(3, {-1, 2, 1});
  const auto cx = cycling(x);
  check_step(x, cx);
  CHECK(cx.result.inf() >= x.inf());
}

TEST_CASE("decycling") {
  const auto d = NormalForm::delta_power(3, 1);
  CHECK(decycling(d).result == d);
  CHECK(decycling(d).conjugator.is_identity());

  const auto sq = N(3, {1, 1});
  const auto ds = decycling(sq);
  check_step(sq, ds);
  CHECK(ds.result.sup() <= 2);

  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto w = normal_form(support::random_word(rng, 3 + t % 3, 0, 10));
    const auto c = cycling(w);
    const auto dc = decycling(w);
    check_step(w, c);
    check_step(w, dc);
    CHECK(c.result.inf() >= w.inf());
    CHECK(dc.result.sup() <= w.sup());
  }
}

TEST_CASE("summit representative") {
  const auto x = N(3, {1, 2, -1});
  const auto r = summit_representative(x);
  check_step(x, r);
  CHECK(r.result.inf() == 0);
  CHECK(r.result.canonical_length() == 1);

  const auto d2 = NormalForm::delta_power(3, 2);
  CHECK(summit_representative(d2).result == d2);
  CHECK(summit_representative(d2).conjugator.is_identity());
  CHECK(summit_representative(NormalForm(3)).result.is_identity());
}

TEST_CASE("summit set examples") {
  const auto s = summit_set(N(3, {1}));
  CHECK(s.vertex_set() == std::set<NormalForm>{N(3, {1}), N(3, {2})});

  const auto d2 = NormalForm::delta_power(3, 2);
  const auto sd = summit_set(d2);
  CHECK(sd.size() == 1);
  CHECK(sd.arrows().size() == candidate_simples(3).size());
  for (const auto& a : sd.arrows()) {
    CHECK(a.source == 0);
    CHECK(a.target == 0);
  }

  const auto s12 = summit_set(N(3, {1, 2}));
  CHECK(s12.vertex_set() == testkit::brute_summit_closure(W(3, {1, 2})));
  for (const auto& v : s12.vertices()) CHECK(v.canonical_length() == 1);
}

TEST_CASE("summit set invariants") {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto w = support::random_word(rng, 3 + t % 2, 0, 8);
    const auto a = normal_form(w);
    const auto s = summit_set(a);
    // The recorded conjugator takes the input to the base vertex.
    CHECK(a.conjugate_by(s.from_input()) == s.base());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& v = s.vertices()[i];
      CHECK(v.inf() == s.base().inf());
      CHECK(v.sup() == s.base().sup());
      CHECK(s.base().conjugate_by(s.to_vertex(i)) == v);
      CHECK(s.index_of(v) == i);
    }
    for (const auto& arrow : s.arrows()) {
      REQUIRE(arrow.target < s.size());
      CHECK(s.vertices()[arrow.source].conjugate_by_simple(arrow.simple) ==
            s.vertices()[arrow.target]);
    }
    CHECK(s.vertex_set() == testkit::brute_summit_closure(w));
  }
}

TEST_CASE("conjugate_in_G examples") {
  const auto c = conjugate_in_G(W(3, {1}), W(3, {2}));
  REQUIRE(c);
  CHECK(c->verify());
  CHECK(equals(conjugate_word(W(3, {1}), c->conjugator), W(3, {2})));
  CHECK_FALSE(conjugate_in_G(W(3, {1}), W(3, {-1})));
  CHECK_FALSE(conjugate_in_G(W(3, {1, 1}), W(3, {1, 2})));  // mu cycle types differ
  CHECK_THROWS_AS(conjugate_in_G(W(3, {1}), W(4, {1})), PreconditionError);
}

TEST_CASE("conjugate_in_G on random conjugate pairs") {
  std::mt19937 rng(12);
  for (int t = 0; t < 150; ++t) {
    const int n = 3 + t % 3;
    const auto w = support::random_word(rng, n, 0, 7);
    const auto c = support::random_word(rng, n, 0, 5);
    const auto b = conjugate_word(w, c);
    const auto cert = conjugate_in_G(w, b);
    REQUIRE(cert);
    CHECK(cert->verify());
    CHECK(support::free_equal(conjugate_word(w, cert->conjugator), b));
    CHECK(exponent_sum(w) == exponent_sum(b));
    CHECK(mu(w).cycle_type() == mu(b).cycle_type());
    // Symmetry and reflexivity.
    CHECK(conjugate_in_G(b, w));
    CHECK(conjugate_in_G(w, w));
  }
}

TEST_CASE("conjugate_in_G agrees with the brute-force conjugator search") {
  const auto words = testkit::enumerate_words(3, 0, 3, true);
  int witnessed = 0, negatives = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); j += 3) {
      const auto& a = words[i];
      const auto& b = words[j];
      const auto cert = conjugate_in_G(a, b);
      if (cert) CHECK(cert->verify());
      if (exponent_sum(a) != exponent_sum(b)) continue;
      if (testkit::brute_conjugator(a, b, 3)) {
        ++witnessed;
        CHECK(cert.has_value());
      } else if (!cert) {
        ++negatives;
      }
    }
  }
  CHECK(witnessed > 0);
  CHECK(negatives > 0);
}
