#include "pcconj/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pcconj/errors.hpp"

namespace pcconj {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw PreconditionError("bad integer '" + token + "' in permutation");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      token.push_back(c);
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw PreconditionError(std::string("unexpected character '") + c +
                              "' in permutation");
    }
  }
  flush();
  return out;
}

}  // namespace

Permutation::Permutation(std::size_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const auto n = images.size();
  std::vector<bool> seen(n, false);
  Permutation p;
  p.img_.reserve(n);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw PreconditionError("image list is not a permutation of 1..n");
    }
    seen[v - 1] = true;
    p.img_.push_back(v - 1);
  }
  return p;
}

Permutation Permutation::adjacent_transposition(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) {
    throw PreconditionError("transposition index out of range");
  }
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    if (degree == 0) throw PreconditionError("empty permutation");
    return Permutation(degree);
  }
  text.remove_prefix(first);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (text.front() == '[') {
    if (text.back() != ']') throw PreconditionError("unterminated image list");
    auto p = from_images(parse_int_list(text.substr(1, text.size() - 2)));
    if (degree != 0 && p.degree() != degree) {
      throw PreconditionError("permutation degree mismatch");
    }
    return p;
  }
  if (text.front() != '(') {
    throw PreconditionError("permutation must be '[..]' or cycle notation");
  }

  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  while (!text.empty()) {
    if (std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
      continue;
    }
    if (text.front() != '(') throw PreconditionError("malformed cycle notation");
    auto close = text.find(')');
    if (close == std::string_view::npos) {
      throw PreconditionError("unterminated cycle");
    }
    cycles.push_back(parse_int_list(text.substr(1, close - 1)));
    for (int v : cycles.back()) max_point = std::max(max_point, v);
    text.remove_prefix(close + 1);
  }
  std::size_t n = degree == 0 ? static_cast<std::size_t>(max_point) : degree;
  if (static_cast<std::size_t>(max_point) > n) {
    throw PreconditionError("cycle point exceeds degree");
  }
  // Cycles are composed left to right like every other product here.
  Permutation result(n);
  for (const auto& cyc : cycles) {
    Permutation c(n);
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || used[from - 1]) {
        throw PreconditionError("bad cycle");
      }
      used[from - 1] = true;
      c.img_[from - 1] = to - 1;
    }
    result = compose(result, c);
  }
  return result;
}

int Permutation::image(int point) const {
  if (point < 1 || static_cast<std::size_t>(point) > img_.size()) {
    throw PreconditionError("point out of range");
  }
  return img_[point - 1] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  std::transform(img_.begin(), img_.end(), out.begin(),
                 [](int v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) os << ',';
    os << img_[i] + 1;
  }
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("permutation degree mismatch");
  }
  Permutation r;
  r.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) {
    r.img_[i] = q.img_[static_cast<std::size_t>(p.img_[i])];
  }
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) {
    r.img_[static_cast<std::size_t>(p.img_[i])] = static_cast<int>(i);
  }
  return r;
}

bool fixes(const Permutation& p, const std::set<int>& points) {
  for (int x : points) {
    if (p.image(x) != x) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_sigma_X(std::size_t n,
                                           const std::set<int>& points) {
  for (int x : points) {
    if (x < 1 || static_cast<std::size_t>(x) > n) {
      throw PreconditionError("point out of range");
    }
  }
  std::vector<int> moving;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    if (!points.contains(i)) moving.push_back(i);
  }
  std::vector<Permutation> out;
  std::vector<int> arrangement = moving;
  do {
    std::vector<int> images(n);
    for (int i = 1; i <= static_cast<int>(n); ++i) images[i - 1] = i;
    for (std::size_t k = 0; k < moving.size(); ++k) {
      images[moving[k] - 1] = arrangement[k];
    }
    out.push_back(Permutation::from_images(std::move(images)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  return enumerate_sigma_X(n, {});
}

}  // namespace pcconj
