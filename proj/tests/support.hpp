#pragma once

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "pcconj/braid.hpp"

namespace support {

using pcconj::BraidWord;

inline BraidWord random_word(std::mt19937& rng, int strands, int min_len,
                             int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (auto& x : letters) x = neg(rng) ? -gen(rng) : gen(rng);
  return BraidWord(strands, letters);
}

// Free group words: letter k > 0 is x_k, -k its inverse.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

// Action of a braid on the free group F_n (Artin's faithful representation):
// sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i. Returns the images
// of x_1..x_n. Independent of the Garside machinery.
inline std::vector<FreeWord> artin_action(const BraidWord& w,
                                          std::size_t max_total = 2'000'000) {
  const int n = w.strands();
  std::vector<FreeWord> img(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) img[static_cast<std::size_t>(k)] = {k};
  auto substitute = [&](const FreeWord& pattern, FreeWord& out) {
    for (int x : pattern) {
      const auto& part = img[static_cast<std::size_t>(std::abs(x))];
      if (x > 0) {
        for (int y : part) push_reduced(out, y);
      } else {
        for (auto it = part.rbegin(); it != part.rend(); ++it) push_reduced(out, -*it);
      }
    }
  };
  for (int s : w.letters()) {
    const int i = std::abs(s);
    FreeWord a, b;
    if (s > 0) {
      substitute({i, i + 1, -i}, a);
      substitute({i}, b);
    } else {
      substitute({i + 1}, a);
      substitute({-(i + 1), i, i + 1}, b);
    }
    img[static_cast<std::size_t>(i)] = std::move(a);
    img[static_cast<std::size_t>(i) + 1] = std::move(b);
    std::size_t total = 0;
    for (const auto& x : img) total += x.size();
    if (total > max_total) throw std::length_error("free group images too long");
  }
  return img;
}

inline bool free_equal(const BraidWord& u, const BraidWord& v) {
  return artin_action(u) == artin_action(v);
}

}  // namespace support
