#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bip {

// Element of the symmetric group S_n in one-line notation.
// word()[i] = u(i+1) with 1-based mathematical indexing; values are 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0 = n, n-1, ..., 1

  // Digit string for n <= 9 ("4231"), comma-separated for n >= 10
  // ("10,3,2,...").
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // u(i), 1-based.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  // u^{-1}(v), 1-based: the position of value v.
  int position_of(int value) const;

  Permutation inverse() const;

  // Number of inversions |{(i,j) : i<j, u(i)>u(j)}|.
  int length() const;

  // t_{a,b} * u: the word with the values a and b swapped wherever they occur.
  Permutation swap_values(int a, int b) const;

  bool is_identity() const;

  std::string str() const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  auto operator<=>(const Permutation& o) const { return word_ <=> o.word_; }

 private:
  std::vector<int> word_;
};

// Bruhat order via the rank-matrix (dot) criterion:
// v <= w  iff  for all i,j: |{k<=i : v(k)>=j}| <= |{k<=i : w(k)>=j}|.
// Throws std::invalid_argument on mismatched n.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct BruhatInterval {
  Permutation lower;
  Permutation upper;
  std::vector<Permutation> members;  // sorted, includes both endpoints
};

// Enumerates {u : v <= u <= w} by exhaustive filter of S_n.
// Guard: n <= 8. Throws std::invalid_argument if v is not <= w.
BruhatInterval interval(const Permutation& v, const Permutation& w);

}  // namespace bip
