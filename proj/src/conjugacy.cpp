#include "pcconj/conjugacy.hpp"

#include <map>
#include <mutex>
#include <unordered_set>

#include "pcconj/errors.hpp"

namespace pcconj {

ConjugationStep cycling(const NormalForm& a) {
  if (a.canonical_length() == 0) return {a, NormalForm(a.strands())};
  auto c = a.factors().front();
  if (a.inf() % 2 != 0) c = simple::tau(c);
  return {a.conjugate_by_simple(c), NormalForm::from_simple(c)};
}

ConjugationStep decycling(const NormalForm& a) {
  if (a.canonical_length() == 0) return {a, NormalForm(a.strands())};
  auto c = NormalForm::from_simple(a.factors().back()).inverse();
  return {a.conjugate_by(c), c};
}

ConjugationStep summit_representative(const NormalForm& a) {
  NormalForm x = a;
  NormalForm conj(a.strands());
  std::unordered_set<NormalForm> seen;
  while (x.canonical_length() > 0 && seen.insert(x).second) {
    auto step = cycling(x);
    conj *= step.conjugator;
    if (step.result.inf() > x.inf()) seen.clear();
    x = std::move(step.result);
  }
  seen.clear();
  while (x.canonical_length() > 0 && seen.insert(x).second) {
    auto step = decycling(x);
    conj *= step.conjugator;
    if (step.result.sup() < x.sup()) seen.clear();
    x = std::move(step.result);
  }
  return {x, conj};
}

std::optional<std::size_t> SummitSet::index_of(const NormalForm& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Permutation>& candidate_simples(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto all = all_permutations(n);
    all.erase(all.begin());  // identity comes first lexicographically
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

SummitSet summit_set(const NormalForm& a) {
  const auto n = static_cast<std::size_t>(a.strands());
  auto rep = summit_representative(a);

  SummitSet set;
  set.from_input_ = std::move(rep.conjugator);
  set.vertices_.push_back(rep.result);
  set.to_vertex_.emplace_back(a.strands());
  set.tree_arrow_.push_back(std::nullopt);
  set.index_.emplace(rep.result, 0);

  const auto& simples = candidate_simples(n);
  for (std::size_t head = 0; head < set.vertices_.size(); ++head) {
    for (const auto& s : simples) {
      const NormalForm& u = set.vertices_[head];
      NormalForm v = u.conjugate_by_simple(s);
      if (v.inf() != u.inf() || v.sup() != u.sup()) continue;
      auto [it, fresh] = set.index_.emplace(v, set.vertices_.size());
      if (fresh) {
        set.to_vertex_.push_back(set.to_vertex_[head] *
                                 NormalForm::from_simple(s));
        set.tree_arrow_.push_back(set.arrows_.size());
        set.vertices_.push_back(std::move(v));
      }
      set.arrows_.push_back({head, s, it->second});
    }
  }
  return set;
}

bool ConjugacyCertificate::verify() const {
  const auto lhs = normal_form(conjugator.inverse() * a.word() * conjugator);
  return lhs == b;
}

std::optional<ConjugacyCertificate> conjugate_in_G(const BraidWord& a,
                                                   const BraidWord& b) {
  if (a.strands() != b.strands()) throw PreconditionError("strand mismatch");
  if (exponent_sum(a) != exponent_sum(b)) return std::nullopt;
  if (mu(a).cycle_type() != mu(b).cycle_type()) return std::nullopt;

  const auto na = normal_form(a);
  const auto nb = normal_form(b);
  const auto rb = summit_representative(nb);
  const auto ra = summit_representative(na);
  if (ra.result.inf() != rb.result.inf() || ra.result.sup() != rb.result.sup()) {
    return std::nullopt;
  }
  const auto sa = summit_set(na);
  auto idx = sa.index_of(rb.result);
  if (!idx) return std::nullopt;
  // a -> base -> vertex == rb.result -> b
  auto h = sa.from_input() * sa.to_vertex(*idx) * rb.conjugator.inverse();
  return ConjugacyCertificate{na, nb, h.word()};
}

}  // namespace pcconj
