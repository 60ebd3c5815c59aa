#include "pcconj/pc.hpp"

#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include "pcconj/centralizer.hpp"
#include "pcconj/conjugacy.hpp"
#include "pcconj/errors.hpp"

namespace pcconj {

TargetElement target_identity(TargetKind kind, std::size_t degree) {
  if (kind == TargetKind::Integers) return 0L;
  return Permutation(degree);
}

TargetElement target_multiply(const TargetElement& x, const TargetElement& y) {
  if (x.index() != y.index()) throw PreconditionError("mixed target kinds");
  if (const auto* p = std::get_if<Permutation>(&x)) {
    return compose(*p, std::get<Permutation>(y));
  }
  return std::get<long>(x) + std::get<long>(y);
}

TargetElement target_inverse(const TargetElement& x) {
  if (const auto* p = std::get_if<Permutation>(&x)) return inverse(*p);
  return -std::get<long>(x);
}

std::string to_string(const TargetElement& x) {
  if (const auto* p = std::get_if<Permutation>(&x)) return p->str();
  return std::to_string(std::get<long>(x));
}

namespace {

class PermOracle final : public MembershipOracle {
 public:
  PermOracle(std::size_t degree, const std::vector<TargetElement>& images)
      : chain_(degree, label(images)) {}

  TargetKind kind() const override { return TargetKind::FinitePerm; }

  std::optional<LabelWord> express(const TargetElement& t) const override {
    return chain_.constructive_membership(std::get<Permutation>(t));
  }
  TargetElement evaluate(const LabelWord& w) const override {
    return chain_.evaluate(w);
  }
  std::optional<std::uint64_t> order() const override { return chain_.order(); }
  std::vector<std::pair<TargetElement, LabelWord>> elements() const override {
    std::vector<std::pair<TargetElement, LabelWord>> out;
    for (auto& [p, w] : chain_.elements()) out.emplace_back(p, std::move(w));
    return out;
  }

 private:
  static std::vector<LabeledPermutation> label(
      const std::vector<TargetElement>& images) {
    std::vector<LabeledPermutation> out;
    for (std::size_t k = 0; k < images.size(); ++k) {
      out.push_back({"d" + std::to_string(k + 1),
                     std::get<Permutation>(images[k])});
    }
    return out;
  }

  PermGroupChain chain_;
};

class IntegerOracle final : public MembershipOracle {
 public:
  explicit IntegerOracle(const std::vector<TargetElement>& images) {
    for (const auto& x : images) values_.push_back(std::get<long>(x));
    coeffs_.assign(values_.size(), 0);
    // Bezout coefficients for gcd_ = sum coeffs_[i] * values_[i].
    for (std::size_t i = 0; i < values_.size(); ++i) {
      auto [g, s, t] = extended_gcd(gcd_, values_[i]);
      for (auto& c : coeffs_) c *= s;
      coeffs_[i] += t;
      gcd_ = g;
    }
  }

  TargetKind kind() const override { return TargetKind::Integers; }

  std::optional<LabelWord> express(const TargetElement& target) const override {
    const long t = std::get<long>(target);
    if (gcd_ == 0) {
      if (t == 0) return LabelWord{};
      return std::nullopt;
    }
    if (t % gcd_ != 0) return std::nullopt;
    const long scale = t / gcd_;
    LabelWord w;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const long c = coeffs_[i] * scale;
      if (std::labs(c) > kMaxLetters) {
        throw UnsupportedError("integer membership word too long");
      }
      const int letter = static_cast<int>(i) + 1;
      for (long k = 0; k < std::labs(c); ++k) w.push_back(c > 0 ? letter : -letter);
    }
    return w;
  }

  TargetElement evaluate(const LabelWord& w) const override {
    long s = 0;
    for (int x : w) {
      const auto k = static_cast<std::size_t>(std::abs(x)) - 1;
      s += x > 0 ? values_.at(k) : -values_.at(k);
    }
    return s;
  }

  std::optional<std::uint64_t> order() const override {
    if (gcd_ == 0) return 1;
    return std::nullopt;
  }

  std::vector<std::pair<TargetElement, LabelWord>> elements() const override {
    if (gcd_ != 0) throw UnsupportedError("infinite subgroup of Z");
    return {{0L, LabelWord{}}};
  }

 private:
  static constexpr long kMaxLetters = 1'000'000;

  static std::tuple<long, long, long> extended_gcd(long a, long b) {
    // returns (g, s, t) with g = s*a + t*b, g >= 0
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
  }

  std::vector<long> values_;
  std::vector<long> coeffs_;
  long gcd_ = 0;
};

}  // namespace

std::unique_ptr<MembershipOracle> make_membership_oracle(
    TargetKind kind, std::size_t degree, std::vector<TargetElement> images) {
  for (const auto& x : images) {
    const bool is_perm = std::holds_alternative<Permutation>(x);
    if (is_perm != (kind == TargetKind::FinitePerm)) {
      throw PreconditionError("generator image of the wrong kind");
    }
  }
  if (kind == TargetKind::FinitePerm) {
    return std::make_unique<PermOracle>(degree, images);
  }
  return std::make_unique<IntegerOracle>(images);
}

PCTriple PCTriple::finite_perm(std::string name, std::size_t degree,
                               Homomorphism phi,
                               std::vector<Permutation> kprime) {
  PCTriple t;
  t.name_ = std::move(name);
  t.kind_ = TargetKind::FinitePerm;
  t.degree_ = degree;
  t.phi_ = std::move(phi);
  for (const auto& p : kprime) {
    if (p.degree() != degree) throw PreconditionError("K' element degree");
    t.kprime_lookup_.insert(p);
  }
  if (!t.kprime_lookup_.contains(Permutation(degree))) {
    throw PreconditionError("K' must contain the identity");
  }
  for (const auto& p : t.kprime_lookup_) {
    if (!t.kprime_lookup_.contains(inverse(p))) {
      throw PreconditionError("K' must be closed under inverses");
    }
    for (const auto& q : t.kprime_lookup_) {
      if (!t.kprime_lookup_.contains(compose(p, q))) {
        throw PreconditionError("K' must be closed under products");
      }
    }
  }
  for (const auto& p : t.kprime_lookup_) t.kprime_.emplace_back(p);
  return t;
}

PCTriple PCTriple::integers(std::string name, Homomorphism phi) {
  PCTriple t;
  t.name_ = std::move(name);
  t.kind_ = TargetKind::Integers;
  t.phi_ = std::move(phi);
  t.kprime_.emplace_back(0L);
  return t;
}

bool PCTriple::in_kprime(const TargetElement& x) const {
  if (kind_ == TargetKind::Integers) return std::get<long>(x) == 0;
  return kprime_lookup_.contains(std::get<Permutation>(x));
}

PCTriple mu_triple(int strands, const std::set<int>& fixed_points) {
  const auto n = static_cast<std::size_t>(strands);
  return PCTriple::finite_perm(
      "mu", n,
      [n](const BraidWord& w) -> TargetElement {
        if (w.strands() != static_cast<int>(n)) {
          throw PreconditionError("strand mismatch");
        }
        return mu(w);
      },
      enumerate_sigma_X(n, fixed_points));
}

GroupContext::GroupContext(std::string name, int strands, Membership membership,
                           Solver solver, Centralizer centralizer,
                           std::optional<RealizedPresentation> presentation)
    : name_(std::move(name)),
      strands_(strands),
      membership_(std::move(membership)),
      solver_(std::move(solver)),
      centralizer_(std::move(centralizer)),
      presentation_(std::move(presentation)) {}

bool GroupContext::contains(const BraidWord& w) const {
  return w.strands() == strands_ && membership_(w);
}

Decision GroupContext::solve(const BraidWord& a, const BraidWord& b) const {
  if (!contains(a) || !contains(b)) {
    throw PreconditionError("inputs must lie in " + name_);
  }
  return solver_(a, b);
}

std::vector<BraidWord> GroupContext::centralizer(const BraidWord& a) const {
  if (!contains(a)) throw PreconditionError("input must lie in " + name_);
  return centralizer_(a);
}

GroupContext GroupContext::with_presentation(RealizedPresentation p) const {
  GroupContext out = *this;
  out.presentation_ = std::move(p);
  return out;
}

GroupContext GroupContext::renamed(std::string name) const {
  GroupContext out = *this;
  out.name_ = std::move(name);
  return out;
}

GroupContext braid_group_context(int strands) {
  RealizedPresentation pres{braid_presentation(strands), {}};
  for (int i = 1; i < strands; ++i) pres.images.emplace_back(strands, std::vector<int>{i});
  return GroupContext(
      "B" + std::to_string(strands), strands,
      [](const BraidWord&) { return true; },
      [](const BraidWord& a, const BraidWord& b) {
        Decision d;
        if (auto cert = conjugate_in_G(a, b)) d.conjugator = cert->conjugator;
        return d;
      },
      [](const BraidWord& a) { return centralizer_generators(a); },
      std::move(pres));
}

namespace {

NormalForm lift(const LabelWord& w, const std::vector<NormalForm>& gens,
                const std::vector<NormalForm>& gens_inv, int strands) {
  NormalForm out(strands);
  for (int x : w) {
    const auto k = static_cast<std::size_t>(std::abs(x)) - 1;
    out *= x > 0 ? gens[k] : gens_inv[k];
  }
  return out;
}

struct LiftedGenerators {
  std::vector<NormalForm> forward;
  std::vector<NormalForm> backward;
  std::vector<TargetElement> images;
};

LiftedGenerators centralizer_data(const GroupContext& ctx,
                                  const PCTriple& triple, const BraidWord& a) {
  LiftedGenerators out;
  for (const auto& d : ctx.centralizer(a)) {
    out.images.push_back(triple.phi(d));
    out.forward.push_back(normal_form(d));
    out.backward.push_back(out.forward.back().inverse());
  }
  return out;
}

void require_in_subgroup(const GroupContext& ctx, const PCTriple& triple,
                         const BraidWord& x, const char* what) {
  if (!ctx.contains(x) || !triple.in_kprime(triple.phi(x))) {
    throw PreconditionError(std::string(what) + " is not in the subgroup");
  }
}

}  // namespace

std::optional<BraidWord> algorithm_3_1(const GroupContext& ctx,
                                       const PCTriple& triple,
                                       const BraidWord& a, const BraidWord& b,
                                       const BraidWord& h, CosetSearch search) {
  require_in_subgroup(ctx, triple, a, "a");
  require_in_subgroup(ctx, triple, b, "b");
  if (!ctx.contains(h)) throw PreconditionError("h is not in the ambient group");
  if (!equals(conjugate_word(a, h), b)) {
    throw PreconditionError("h does not conjugate a to b");
  }

  const auto gens = centralizer_data(ctx, triple, a);
  const auto oracle =
      make_membership_oracle(triple.kind(), triple.degree(), gens.images);
  const auto phi_h = triple.phi(h);

  if (search == CosetSearch::Auto) {
    const auto order = oracle->order();
    search = order && *order < triple.kprime().size() ? CosetSearch::OverImage
                                                      : CosetSearch::OverKprime;
  }

  std::optional<LabelWord> found;
  if (triple.in_kprime(phi_h)) {
    found = LabelWord{};  // p = phi(h), empty d-word
  } else if (search == CosetSearch::OverKprime) {
    const auto phi_h_inv = target_inverse(phi_h);
    for (const auto& p : triple.kprime()) {
      found = oracle->express(target_multiply(p, phi_h_inv));
      if (found) break;
    }
  } else {
    for (auto& [q, w] : oracle->elements()) {
      if (triple.in_kprime(target_multiply(q, phi_h))) {
        found = std::move(w);
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  auto h_prime = lift(*found, gens.forward, gens.backward, a.strands());
  h_prime *= normal_form(h);
  return h_prime.word();
}

Decision algorithm_3_2(const GroupContext& ctx, const PCTriple& triple,
                       const BraidWord& a, const BraidWord& b) {
  require_in_subgroup(ctx, triple, a, "a");
  require_in_subgroup(ctx, triple, b, "b");
  const auto in_g = ctx.solve(a, b);
  if (!in_g.conjugate()) return Decision{std::nullopt, Decision::Stage::Ambient};
  return Decision{algorithm_3_1(ctx, triple, a, b, *in_g.conjugator),
                  Decision::Stage::Lift};
}

std::vector<BraidWord> subgroup_centralizer(const GroupContext& ctx,
                                            const PCTriple& triple,
                                            const BraidWord& a) {
  require_in_subgroup(ctx, triple, a, "a");
  const auto gens = centralizer_data(ctx, triple, a);
  const auto n = a.strands();

  if (triple.kind() == TargetKind::Integers) {
    for (const auto& x : gens.images) {
      if (std::get<long>(x) != 0) {
        throw UnsupportedError(
            "infinite index: the centralizer image in Z is nonzero while K' "
            "is trivial");
      }
    }
    std::vector<BraidWord> out;
    for (const auto& g : gens.forward) out.push_back(g.word());
    return out;
  }

  // Right cosets (Q ∩ K') t of Q = <phi(D)>, explored from the identity. Each
  // representative carries a word over D so it lifts into C_G(a).
  struct Coset {
    TargetElement rep;
    LabelWord word;
  };
  std::vector<Coset> cosets{{triple.identity(), {}}};
  auto find_coset = [&](const TargetElement& x) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < cosets.size(); ++k) {
      if (triple.in_kprime(target_multiply(x, target_inverse(cosets[k].rep)))) {
        return k;
      }
    }
    return std::nullopt;
  };

  std::vector<BraidWord> out;
  std::unordered_set<NormalForm> seen;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = 0; j < gens.images.size(); ++j) {
      const auto x = target_multiply(cosets[i].rep, gens.images[j]);
      const int letter = static_cast<int>(j) + 1;
      auto k = find_coset(x);
      if (!k) {
        cosets.push_back({x, concat(cosets[i].word, LabelWord{letter})});
        continue;  // t_i d_j t_k^-1 is trivial for the new tree edge
      }
      // Schreier generator t_i * d_j * t_k^-1
      auto w = concat(concat(cosets[i].word, LabelWord{letter}),
                      inverse(cosets[*k].word));
      auto g = lift(w, gens.forward, gens.backward, n);
      if (g.is_identity() || !seen.insert(g).second) continue;
      out.push_back(g.word());
    }
  }
  return out;
}

GroupContext make_subgroup_context(const GroupContext& ctx, PCTriple triple,
                                   std::string name) {
  if (triple.phi(BraidWord(ctx.strands())) != triple.identity()) {
    throw PreconditionError("phi must send the identity to the identity");
  }
  if (const auto& pres = ctx.presentation()) {
    for (const auto& [lhs, rhs] : pres->presentation.relations()) {
      if (triple.phi(pres->realize(lhs)) != triple.phi(pres->realize(rhs))) {
        throw PreconditionError("phi does not respect a defining relation of " +
                                ctx.name());
      }
    }
  }
  if (name.empty()) name = ctx.name() + "/" + triple.name();

  auto shared = std::make_shared<const PCTriple>(std::move(triple));
  return GroupContext(
      std::move(name), ctx.strands(),
      [ctx, shared](const BraidWord& w) {
        return ctx.contains(w) && shared->in_kprime(shared->phi(w));
      },
      [ctx, shared](const BraidWord& a, const BraidWord& b) {
        return algorithm_3_2(ctx, *shared, a, b);
      },
      [ctx, shared](const BraidWord& a) {
        return subgroup_centralizer(ctx, *shared, a);
      });
}

}  // namespace pcconj
