#include "pcconj/testkit.hpp"

#include <cmath>
#include <deque>

#include "pcconj/conjugacy.hpp"
#include "pcconj/errors.hpp"

namespace pcconj::testkit {

namespace {

constexpr double kMaxWords = 5e6;

std::vector<int> alphabet(int strands) {
  std::vector<int> out;
  for (int i = strands - 1; i >= 1; --i) out.push_back(-i);
  for (int i = 1; i < strands; ++i) out.push_back(i);
  return out;
}

void guard(int strands, int max_length) {
  const double letters = 2.0 * (strands - 1);
  double total = 0;
  for (int k = 0; k <= max_length; ++k) total += std::pow(letters, k);
  if (total > kMaxWords) {
    throw PreconditionError("brute-force search too large (" +
                            std::to_string(static_cast<long long>(total)) +
                            " words)");
  }
}

void extend(std::vector<int>& prefix, int remaining, int min_length,
            const std::vector<int>& letters, bool reduced_only, int strands,
            std::vector<BraidWord>& out) {
  if (static_cast<int>(prefix.size()) >= min_length && remaining == 0) {
    out.emplace_back(strands, prefix);
    return;
  }
  for (int x : letters) {
    if (reduced_only && !prefix.empty() && prefix.back() == -x) continue;
    prefix.push_back(x);
    extend(prefix, remaining - 1, min_length, letters, reduced_only, strands,
           out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BraidWord> enumerate_words(int strands, int min_length,
                                       int max_length, bool reduced_only) {
  guard(strands, max_length);
  const auto letters = alphabet(strands);
  std::vector<BraidWord> out;
  for (int len = std::max(min_length, 0); len <= max_length; ++len) {
    std::vector<int> prefix;
    extend(prefix, len, len, letters, reduced_only, strands, out);
  }
  return out;
}

std::optional<BraidWord> brute_conjugator(const BraidWord& a,
                                          const BraidWord& b, int max_length,
                                          const PermPredicate& constraint) {
  if (a.strands() != b.strands()) throw PreconditionError("strand mismatch");
  const auto target = normal_form(b);
  for (const auto& c : enumerate_words(a.strands(), 0, max_length, true)) {
    if (constraint && !constraint(mu(c))) continue;
    if (normal_form(c.inverse() * a * c) == target) return c;
  }
  return std::nullopt;
}

std::set<NormalForm> brute_summit_closure(const BraidWord& a) {
  const auto n = static_cast<std::size_t>(a.strands());
  if (n > 6) throw PreconditionError("brute summit closure is limited to n <= 6");

  std::vector<BraidWord> simples;
  for (const auto& p : all_permutations(n)) {
    simples.emplace_back(a.strands(), simple::word(p));
  }
  const auto start = summit_representative(normal_form(a)).result;
  std::set<NormalForm> closure{start};
  std::deque<NormalForm> queue{start};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    const auto vw = v.word();
    for (const auto& s : simples) {
      auto u = normal_form(s.inverse() * vw * s);
      if (u.inf() != start.inf() || u.sup() != start.sup()) continue;
      if (closure.insert(u).second) queue.push_back(std::move(u));
    }
  }
  return closure;
}

std::vector<BraidWord> brute_commuting_words(const BraidWord& a,
                                             int max_length) {
  const auto target = normal_form(a);
  std::vector<BraidWord> out;
  for (auto& c : enumerate_words(a.strands(), 1, max_length, false)) {
    if (normal_form(c.inverse() * a * c) == target) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pcconj::testkit
