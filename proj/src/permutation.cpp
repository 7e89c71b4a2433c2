#include "bip/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bip/errors.hpp"

namespace bip {

namespace {

void check_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw std::invalid_argument("empty permutation word");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n) throw std::invalid_argument("word value out of range 1..n");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("repeated value in word");
    seen[static_cast<size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  check_word(word_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation string");
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad entry in one-line notation: " + item);
      w.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("one-line digit string may contain only 1..9");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) == value) return i;
  throw std::invalid_argument("value not in permutation");
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int count = 0;
  for (size_t i = 0; i < word_.size(); ++i)
    for (size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++count;
  return count;
}

Permutation Permutation::swap_values(int a, int b) const {
  if (a < 1 || a > n() || b < 1 || b > n() || a == b)
    throw std::invalid_argument("transposition values must be distinct and in 1..n");
  std::vector<int> w = word_;
  for (int& v : w) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string out;
  if (n() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: mismatched ranks");
  const int n = v.n();
  // cv[j] (resp. cw[j]) = |{k <= i : v(k) >= j}|, updated as i advances.
  std::vector<int> cv(static_cast<size_t>(n) + 2, 0), cw(cv);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= v(i); ++j) ++cv[static_cast<size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++cw[static_cast<size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cv[static_cast<size_t>(j)] > cw[static_cast<size_t>(j)]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BruhatInterval interval(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("interval: mismatched ranks");
  if (v.n() > 8) throw GuardError("interval enumeration guarded to n <= 8");
  if (!bruhat_leq(v, w)) throw std::invalid_argument("interval: lower is not <= upper in Bruhat order");
  BruhatInterval iv{v, w, {}};
  for (const Permutation& u : all_permutations(v.n()))
    if (bruhat_leq(v, u) && bruhat_leq(u, w)) iv.members.push_back(u);
  return iv;
}

}  // namespace bip
