#include "pcconj/instances.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pcconj/errors.hpp"

namespace pcconj {

namespace {

// Signed crossings between strand pairs accepted by `counts`, tracking which
// strand sits at each position as the word is read.
template <typename Pred>
long signed_crossings(const BraidWord& w, Pred counts) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  long total = 0;
  for (int x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x)) - 1;
    if (counts(at[i], at[i + 1])) total += x > 0 ? 1 : -1;
    std::swap(at[i], at[i + 1]);
  }
  return total;
}

std::string set_str(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : s) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

bool verify_homomorphism(const ArtinPresentation& p,
                         const std::vector<BraidWord>& images,
                         const GroupContext& target) {
  if (images.size() != p.rank()) {
    throw PreconditionError("an image is needed for every generator");
  }
  for (const auto& img : images) {
    if (!target.contains(img)) return false;
  }
  const RealizedPresentation rp{p, images};
  for (const auto& [lhs, rhs] : p.relations()) {
    if (!equals(rp.realize(lhs), rp.realize(rhs))) return false;
  }
  return true;
}

GroupContext bn_x_context(int n, const std::set<int>& fixed_points) {
  return make_subgroup_context(braid_group_context(n),
                               mu_triple(n, fixed_points),
                               "B" + std::to_string(n) + set_str(fixed_points));
}

GroupContext colored_context(int n) {
  std::set<int> all;
  for (int i = 1; i <= n; ++i) all.insert(i);
  return bn_x_context(n, all).renamed("CB" + std::to_string(n));
}

RealizedGroup type_b_context(int n) {
  if (n < 2) throw PreconditionError("A(B_n) needs n >= 2");
  const int strands = n + 1;
  std::vector<BraidWord> images;
  for (int i = 1; i < n; ++i) images.emplace_back(strands, std::vector<int>{strands - i});
  images.emplace_back(strands, std::vector<int>{1, 1});

  auto pres = type_b_presentation(n);
  auto ambient = bn_x_context(strands, {1});
  if (!verify_homomorphism(pres, images, ambient)) {
    throw PreconditionError("type-B realization violates a defining relation");
  }
  RealizedPresentation rp{std::move(pres), std::move(images)};
  auto ctx = ambient.with_presentation(rp).renamed("A(B" + std::to_string(n) + ")");
  return RealizedGroup{std::move(rp), std::move(ctx)};
}

long type_b_winding(const BraidWord& w) {
  if (mu(w).image(1) != 1) {
    throw PreconditionError("winding of strand 1 needs a braid pure on strand 1");
  }
  return signed_crossings(w, [](int s, int t) { return s == 0 || t == 0; }) / 2;
}

std::vector<BraidWord> affine_a_images(int n) {
  if (n < 3) throw PreconditionError("A(A~_{n-1}) needs n >= 3");
  const auto tb = type_b_context(n);
  std::vector<BraidWord> images(tb.presentation.images.begin(),
                                tb.presentation.images.end() - 1);
  // a_n -> b_n^-1 ... b_2^-1 b_1 b_2 ... b_n
  std::vector<int> letters;
  for (int i = n; i >= 2; --i) letters.push_back(-i);
  for (int i = 1; i <= n; ++i) letters.push_back(i);
  images.push_back(tb.realize(letters));
  return images;
}

GroupContext affine_a_context(int n) {
  auto tb = type_b_context(n);
  auto ctx = make_subgroup_context(
      tb.ambient,
      PCTriple::integers("winding",
                         [](const BraidWord& w) -> TargetElement {
                           return type_b_winding(w);
                         }),
      "A(A~" + std::to_string(n - 1) + ")");
  auto images = affine_a_images(n);
  auto pres = affine_a_presentation(n);
  if (!verify_homomorphism(pres, images, ctx)) {
    throw PreconditionError("A~ images violate a relation or leave the kernel");
  }
  return ctx.with_presentation(RealizedPresentation{std::move(pres), std::move(images)});
}

GroupContext affine_c_context(int n) {
  if (n < 3) throw PreconditionError("A(C~_{n-1}) needs n >= 3");
  return bn_x_context(n, {1, 2}).renamed("A(C~" + std::to_string(n - 1) + ")");
}

namespace {

void refuse_projection(int m) {
  if (m >= 5) {
    throw UnsupportedError(
        "IB_n(X) with |X| = " + std::to_string(m) +
        " >= 5: no PC triple (K, K', phi) exists with K having solvable "
        "membership and phi^-1(K') = IB_n(X); the framework cannot apply");
  }
  if (m == 3 || m == 4) {
    throw UnsupportedError("IB_n(X) with |X| = " + std::to_string(m) +
                           ": no known method for the conjugacy problem");
  }
}

}  // namespace

long strand_deletion(const BraidWord& w, int m) {
  refuse_projection(m);
  if (m != 2) {
    throw UnsupportedError("strand deletion is implemented for m = 2 only");
  }
  const auto p = mu(w);
  if (p.image(1) != 1 || p.image(2) != 2) {
    throw PreconditionError("strand deletion needs a braid in B_n({1,2})");
  }
  return signed_crossings(w, [](int s, int t) { return s + t == 1; }) / 2;
}

GroupContext ib_context(int n, int m) {
  if (m < 1 || m > n) throw PreconditionError("need 1 <= m <= n");
  refuse_projection(m);
  const std::string name =
      "IB" + std::to_string(n) + "({1.." + std::to_string(m) + "})";
  if (m == 1) return bn_x_context(n, {1}).renamed(name);
  return make_subgroup_context(
      bn_x_context(n, {1, 2}),
      PCTriple::integers("pi_X",
                         [](const BraidWord& w) -> TargetElement {
                           return strand_deletion(w, 2);
                         }),
      name);
}

}  // namespace pcconj
