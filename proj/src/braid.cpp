#include "pcconj/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "pcconj/errors.hpp"

namespace pcconj {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw PreconditionError("a braid needs at least 2 strands");
  for (int x : letters_) {
    if (x == 0 || std::abs(x) >= strands_) {
      throw PreconditionError("letter " + std::to_string(x) +
                              " out of range for " + std::to_string(strands_) +
                              " strands");
    }
  }
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw PreconditionError("cannot parse braid letter '" + token + "'");
    }
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  BraidWord out = *this;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : out.letters_) x = -x;
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw PreconditionError("strand mismatch");
  BraidWord out = *this;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(),
                      rhs.letters_.end());
  return out;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i];
  }
  return os.str();
}

namespace simple {

Permutation delta(std::size_t n) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(n - 1 - i);
  return Permutation::from_raw(std::move(img));
}

Permutation generator(std::size_t n, std::size_t i) {
  return Permutation::adjacent_transposition(n, i);
}

std::vector<int> starting_set(const Permutation& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < s.degree(); ++i) {
    if (s[i] > s[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::vector<int> finishing_set(const Permutation& s) {
  return starting_set(inverse(s));
}

Permutation tau(const Permutation& s) {
  const auto n = s.degree();
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = static_cast<int>(n - 1) - s[n - 1 - i];
  }
  return Permutation::from_raw(std::move(img));
}

Permutation right_complement(const Permutation& s) {
  return compose(inverse(s), delta(s.degree()));
}

Permutation left_complement(const Permutation& s) {
  return compose(delta(s.degree()), inverse(s));
}

std::vector<int> word(const Permutation& s) {
  std::vector<int> img = s.raw();
  std::vector<int> out;
  // Peel off a starting letter until nothing crosses.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      if (img[i] > img[i + 1]) {
        out.push_back(static_cast<int>(i) + 1);
        std::swap(img[i], img[i + 1]);
        moved = true;
        break;
      }
    }
  }
  return out;
}

bool make_left_weighted(Permutation& a, Permutation& b) {
  std::vector<int> av = a.raw();
  std::vector<int> bv = b.raw();
  const auto n = av.size();
  std::vector<int> a_inv(n);
  for (std::size_t i = 0; i < n; ++i) a_inv[static_cast<std::size_t>(av[i])] = static_cast<int>(i);

  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      // i in S(b) and a * sigma_i still simple (i not in F(a)).
      if (bv[i] > bv[i + 1] && a_inv[i] < a_inv[i + 1]) {
        std::swap(bv[i], bv[i + 1]);
        std::swap(a_inv[i], a_inv[i + 1]);
        av[static_cast<std::size_t>(a_inv[i])] = static_cast<int>(i);
        av[static_cast<std::size_t>(a_inv[i + 1])] = static_cast<int>(i + 1);
        moved = changed = true;
      }
    }
  }
  if (changed) {
    a = Permutation::from_raw(std::move(av));
    b = Permutation::from_raw(std::move(bv));
  }
  return changed;
}

}  // namespace simple

NormalForm::NormalForm(int strands) : strands_(strands) {
  if (strands_ < 2) throw PreconditionError("a braid needs at least 2 strands");
}

NormalForm NormalForm::delta_power(int strands, long power) {
  NormalForm nf(strands);
  nf.inf_ = power;
  return nf;
}

NormalForm NormalForm::from_simple(const Permutation& s) {
  NormalForm nf(static_cast<int>(s.degree()));
  nf.right_multiply_simple(s);
  return nf;
}

void NormalForm::apply_tau_to_factors() {
  for (auto& f : factors_) f = simple::tau(f);
}

void NormalForm::normalize_ends() {
  const auto d = simple::delta(static_cast<std::size_t>(strands_));
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead] == d) ++lead;
  if (lead) {
    inf_ += static_cast<long>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
  }
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalForm::right_multiply_simple(const Permutation& s) {
  if (s.degree() != static_cast<std::size_t>(strands_)) {
    throw PreconditionError("strand mismatch");
  }
  if (s.is_identity()) return;
  if (s == simple::delta(s.degree())) {
    ++inf_;
    apply_tau_to_factors();
    return;
  }
  factors_.push_back(s);
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    if (!simple::make_left_weighted(factors_[j - 1], factors_[j])) break;
  }
  normalize_ends();
}

void NormalForm::right_multiply_delta_inverse() {
  --inf_;
  apply_tau_to_factors();
}

NormalForm& NormalForm::operator*=(const NormalForm& rhs) {
  if (strands_ != rhs.strands_) throw PreconditionError("strand mismatch");
  // X * Delta^q * G = Delta^q * tau^q(X) * G
  inf_ += rhs.inf_;
  if (rhs.inf_ % 2 != 0) apply_tau_to_factors();
  for (const auto& g : rhs.factors_) right_multiply_simple(g);
  return *this;
}

NormalForm NormalForm::operator*(const NormalForm& rhs) const {
  NormalForm out = *this;
  out *= rhs;
  return out;
}

NormalForm NormalForm::inverse() const {
  // f^-1 = Delta^-1 * tau(right_complement(f))
  NormalForm out(strands_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    out.right_multiply_delta_inverse();
    out.right_multiply_simple(simple::tau(simple::right_complement(*it)));
  }
  out *= delta_power(strands_, -inf_);
  return out;
}

NormalForm NormalForm::conjugate_by(const NormalForm& c) const {
  NormalForm out = c.inverse();
  out *= *this;
  out *= c;
  return out;
}

NormalForm NormalForm::conjugate_by_simple(const Permutation& s) const {
  // s^-1 * Delta^p * F * s = Delta^(p-1) * tau^(p+1)(right_complement(s)) * F * s
  NormalForm out(strands_);
  out.inf_ = inf_ - 1;
  auto head = simple::right_complement(s);
  if ((inf_ + 1) % 2 != 0) head = simple::tau(head);
  out.right_multiply_simple(head);
  for (const auto& f : factors_) out.right_multiply_simple(f);
  out.right_multiply_simple(s);
  return out;
}

BraidWord NormalForm::word() const {
  std::vector<int> letters;
  const auto d = simple::word(simple::delta(static_cast<std::size_t>(strands_)));
  for (long k = 0; k < (inf_ < 0 ? -inf_ : inf_); ++k) {
    if (inf_ > 0) {
      letters.insert(letters.end(), d.begin(), d.end());
    } else {
      for (auto it = d.rbegin(); it != d.rend(); ++it) letters.push_back(-*it);
    }
  }
  // Only the seam after a negative Delta power can cancel.
  for (const auto& f : factors_) {
    for (int x : simple::word(f)) {
      if (!letters.empty() && letters.back() == -x) {
        letters.pop_back();
      } else {
        letters.push_back(x);
      }
    }
  }
  return BraidWord(strands_, std::move(letters));
}

std::string NormalForm::str() const {
  std::ostringstream os;
  os << "D^" << inf_;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    os << (i == 0 ? " . " : " | ") << factors_[i].str();
  }
  return os.str();
}

NormalForm normal_form(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  NormalForm nf(w.strands());
  const auto d = simple::delta(n);
  for (int x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x));
    auto t = simple::generator(n, i);
    if (x > 0) {
      nf.right_multiply_simple(t);
    } else {
      // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1)
      nf.right_multiply_delta_inverse();
      nf.right_multiply_simple(compose(d, t));
    }
  }
  return nf;
}

bool equals(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw PreconditionError("strand mismatch");
  return normal_form(u) == normal_form(v);
}

Permutation mu(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  std::vector<int> img(n);
  std::vector<int> at(n);  // strand currently at each position
  for (std::size_t i = 0; i < n; ++i) at[i] = static_cast<int>(i);
  for (int x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x)) - 1;
    std::swap(at[i], at[i + 1]);
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    img[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  }
  return Permutation::from_raw(std::move(img));
}

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int x : w.letters()) s += x > 0 ? 1 : -1;
  return s;
}

BraidWord conjugate_word(const BraidWord& w, const BraidWord& c) {
  return c.inverse() * w * c;
}

}  // namespace pcconj
