#include "pcconj/perm_chain.hpp"

#include <sstream>

#include "pcconj/errors.hpp"

namespace pcconj {

LabelWord inverse(const LabelWord& w) {
  LabelWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

LabelWord concat(const LabelWord& u, const LabelWord& v) {
  LabelWord out = u;
  for (int x : v) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

PermGroupChain::PermGroupChain(std::size_t degree,
                               std::vector<LabeledPermutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k].perm.degree() != degree_) {
      throw PreconditionError("generator '" + gens_[k].label +
                              "' has the wrong degree");
    }
  }
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    Element g{gens_[k].perm, LabelWord{static_cast<int>(k) + 1}};
    auto [residue, level] = sift(std::move(g), 0);
    if (residue.perm.is_identity()) continue;
    add_strong_generator(residue, 0, level);
    complete(level);
  }
}

void PermGroupChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  const auto b = static_cast<std::size_t>(level.base_point);
  level.transversal[b] = Element{Permutation(degree_), {}};
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const auto beta = static_cast<std::size_t>(level.orbit[head]);
    for (const auto& s : level.gens) {
      const auto gamma = static_cast<std::size_t>(s.perm[beta]);
      if (level.transversal[gamma]) continue;
      const auto& u = *level.transversal[beta];
      level.transversal[gamma] =
          Element{compose(u.perm, s.perm), concat(u.word, s.word)};
      level.orbit.push_back(static_cast<int>(gamma));
    }
  }
}

std::pair<PermGroupChain::Element, std::size_t> PermGroupChain::sift(
    Element g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& level = levels_[i];
    const auto beta =
        static_cast<std::size_t>(g.perm[static_cast<std::size_t>(level.base_point)]);
    const auto& u = level.transversal[beta];
    if (!u) return {std::move(g), i};
    g.perm = compose(g.perm, inverse(u->perm));
    g.word = concat(g.word, inverse(u->word));
  }
  return {std::move(g), levels_.size()};
}

void PermGroupChain::add_strong_generator(const Element& r, std::size_t first,
                                          std::size_t last) {
  if (last == levels_.size()) {
    Level level;
    for (std::size_t p = 0; p < degree_; ++p) {
      if (r.perm[p] != static_cast<int>(p)) {
        level.base_point = static_cast<int>(p);
        break;
      }
    }
    levels_.push_back(std::move(level));
  }
  for (std::size_t l = first; l <= last; ++l) {
    levels_[l].gens.push_back(r);
    rebuild_orbit(levels_[l]);
  }
}

// Levels deeper than `start` are already complete. Walk upward checking
// Schreier generators; a non-sifting one is added and the walk restarts from
// the level where its sift stopped.
void PermGroupChain::complete(std::size_t start) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  if (i >= static_cast<std::ptrdiff_t>(levels_.size())) {
    i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  }
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    const auto orbit = levels_[li].orbit;
    const auto gens = levels_[li].gens;
    for (int beta : orbit) {
      for (const auto& s : gens) {
        const auto& level = levels_[li];
        const auto& ub = *level.transversal[static_cast<std::size_t>(beta)];
        const auto gamma = static_cast<std::size_t>(
            s.perm[static_cast<std::size_t>(beta)]);
        const auto& ug = *level.transversal[gamma];
        Element g{compose(compose(ub.perm, s.perm), inverse(ug.perm)),
                  concat(concat(ub.word, s.word), inverse(ug.word))};
        if (g.perm.is_identity()) continue;
        auto [residue, stop] = sift(std::move(g), li + 1);
        if (residue.perm.is_identity()) continue;
        add_strong_generator(residue, li + 1, stop);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
      if (restarted) break;
    }
    if (!restarted) --i;
  }
}

std::vector<int> PermGroupChain::base() const {
  std::vector<int> out;
  for (const auto& l : levels_) out.push_back(l.base_point + 1);
  return out;
}

std::uint64_t PermGroupChain::order() const {
  std::uint64_t n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

bool PermGroupChain::contains(const Permutation& target) const {
  return constructive_membership(target).has_value();
}

std::optional<LabelWord> PermGroupChain::constructive_membership(
    const Permutation& target) const {
  if (target.degree() != degree_) {
    throw PreconditionError("permutation degree mismatch");
  }
  Permutation g = target;
  std::vector<const LabelWord*> used;
  for (const auto& level : levels_) {
    const auto beta =
        static_cast<std::size_t>(g[static_cast<std::size_t>(level.base_point)]);
    const auto& u = level.transversal[beta];
    if (!u) return std::nullopt;
    g = compose(g, inverse(u->perm));
    used.push_back(&u->word);
  }
  if (!g.is_identity()) return std::nullopt;
  // target = u_k ... u_1 u_0 in left-to-right product order.
  LabelWord w;
  for (auto it = used.rbegin(); it != used.rend(); ++it) w = concat(w, **it);
  return w;
}

Permutation PermGroupChain::evaluate(const LabelWord& w) const {
  Permutation p(degree_);
  for (int x : w) {
    const auto k = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    if (x == 0 || k >= gens_.size()) {
      throw PreconditionError("label index out of range");
    }
    p = compose(p, x > 0 ? gens_[k].perm : inverse(gens_[k].perm));
  }
  return p;
}

std::string PermGroupChain::render(const LabelWord& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '*';
    const auto k = static_cast<std::size_t>(w[i] > 0 ? w[i] : -w[i]) - 1;
    os << gens_.at(k).label;
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

std::vector<std::pair<Permutation, LabelWord>> PermGroupChain::elements()
    const {
  std::vector<std::pair<Permutation, LabelWord>> out{
      {Permutation(degree_), LabelWord{}}};
  // Every element is uniquely u_k ... u_1 u_0, one transversal element per
  // level, so deeper levels are prepended.
  for (const auto& level : levels_) {
    std::vector<std::pair<Permutation, LabelWord>> next;
    next.reserve(out.size() * level.orbit.size());
    for (const auto& [p, w] : out) {
      for (int beta : level.orbit) {
        const auto& u = *level.transversal[static_cast<std::size_t>(beta)];
        next.emplace_back(compose(u.perm, p), concat(u.word, w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::pair<int, LabelWord>> PermGroupChain::transversal(
    std::size_t level) const {
  std::vector<std::pair<int, LabelWord>> out;
  for (int beta : levels_.at(level).orbit) {
    out.emplace_back(beta + 1,
                     levels_[level].transversal[static_cast<std::size_t>(beta)]->word);
  }
  return out;
}

PermGroupChain build_chain(std::size_t degree,
                           std::vector<LabeledPermutation> generators) {
  return PermGroupChain(degree, std::move(generators));
}

}  // namespace pcconj
