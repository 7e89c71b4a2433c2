#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bip/errors.hpp"
#include "bip/permutation.hpp"

using namespace bip;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// Independent Bruhat-order oracle: reachability through length-increasing
// transposition moves, i.e. the cover-relation closure. No rank matrices.
struct BruhatClosureOracle {
  explicit BruhatClosureOracle(int n) {
    const std::vector<Permutation> all = all_permutations(n);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    leq.assign(all.size(), std::vector<char>(all.size(), 0));
    // order elements by length, then propagate upward
    std::vector<int> by_len(all.size());
    for (size_t i = 0; i < all.size(); ++i) by_len[i] = static_cast<int>(i);
    std::sort(by_len.begin(), by_len.end(), [&](int a, int b) {
      return all[static_cast<size_t>(a)].length() < all[static_cast<size_t>(b)].length();
    });
    for (size_t i = 0; i < all.size(); ++i) leq[i][i] = 1;
    for (int ui : by_len) {
      const Permutation& u = all[static_cast<size_t>(ui)];
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          const Permutation v = u.swap_values(a, b);
          if (v.length() == u.length() + 1) {
            const int vi = index[v];
            for (size_t k = 0; k < all.size(); ++k)
              if (leq[k][static_cast<size_t>(ui)]) leq[k][static_cast<size_t>(vi)] = 1;
          }
        }
    }
    for (size_t i = 0; i < all.size(); ++i) index_of[all[i]] = static_cast<int>(i);
  }
  bool operator()(const Permutation& v, const Permutation& w) const {
    return leq[static_cast<size_t>(index_of.at(v))][static_cast<size_t>(index_of.at(w))] != 0;
  }
  std::vector<std::vector<char>> leq;
  std::map<Permutation, int> index_of;
};

}  // namespace

TEST_CASE("one-line parsing and printing") {
  CHECK(P("4231").word() == std::vector<int>{4, 2, 3, 1});
  CHECK(P("4231").str() == "4231");
  const Permutation big = P("10,3,2,4,5,6,7,8,9,1");
  CHECK(big.n() == 10);
  CHECK(big(1) == 10);
  CHECK(big.str() == "10,3,2,4,5,6,7,8,9,1");
  CHECK_THROWS_AS(P("4232"), std::invalid_argument);
  CHECK_THROWS_AS(P("120"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("1,2,x"), std::invalid_argument);
}

TEST_CASE("length is the inversion count") {
  CHECK(P("1234").length() == 0);
  CHECK(P("4231").length() == 5);
  CHECK(Permutation::longest(4).length() == 6);  // n(n-1)/2
  // brute-force cross-check over S_4
  for (const Permutation& u : all_permutations(4)) {
    int inv = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (u(i) > u(j)) ++inv;
    CHECK(u.length() == inv);
  }
}

TEST_CASE("inverse is an involution") {
  CHECK(P("4132").inverse().word() == std::vector<int>{2, 4, 3, 1});
  for (const Permutation& u : all_permutations(4)) CHECK(u.inverse().inverse() == u);
  std::mt19937 rng(7);
  std::vector<Permutation> s5 = all_permutations(5);
  std::shuffle(s5.begin(), s5.end(), rng);
  for (size_t i = 0; i < 20; ++i) CHECK(s5[i].inverse().inverse() == s5[i]);
}

TEST_CASE("transposition action on values") {
  CHECK(P("2143").swap_values(1, 4) == P("2413"));
  CHECK(P("1234").swap_values(1, 2) == P("2134"));
  CHECK(P("2143").swap_values(1, 4).swap_values(1, 4) == P("2143"));  // involution
  CHECK_THROWS_AS(P("2143").swap_values(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("2143").swap_values(2, 2), std::invalid_argument);
  // parity: a transposition changes length by an odd amount
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(1, 5);
  std::vector<Permutation> s5 = all_permutations(5);
  std::shuffle(s5.begin(), s5.end(), rng);
  for (size_t i = 0; i < 30; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const int diff = s5[i].swap_values(a, b).length() - s5[i].length();
    CHECK(diff % 2 != 0);
  }
}

TEST_CASE("bruhat_leq matches the cover-closure oracle on S_4") {
  const BruhatClosureOracle oracle(4);
  for (const Permutation& v : all_permutations(4))
    for (const Permutation& w : all_permutations(4))
      CHECK(bruhat_leq(v, w) == oracle(v, w));
}

TEST_CASE("bruhat_leq anchors") {
  CHECK(bruhat_leq(P("1324"), P("4231")));
  CHECK(bruhat_leq(P("2143"), P("3412")));
  CHECK_FALSE(bruhat_leq(P("4321"), P("4231")));
  CHECK_THROWS_AS(bruhat_leq(P("123"), P("4231")), std::invalid_argument);
}

TEST_CASE("bruhat antisymmetry and inverse-compatibility") {
  for (const Permutation& v : all_permutations(4)) {
    for (const Permutation& w : all_permutations(4)) {
      if (bruhat_leq(v, w) && bruhat_leq(w, v)) CHECK(v == w);
      CHECK(bruhat_leq(v, w) == bruhat_leq(v.inverse(), w.inverse()));
    }
  }
  std::mt19937 rng(23);
  std::vector<Permutation> s5 = all_permutations(5);
  std::shuffle(s5.begin(), s5.end(), rng);
  for (size_t i = 0; i + 1 < 40; i += 2)
    CHECK(bruhat_leq(s5[i], s5[i + 1]) == bruhat_leq(s5[i].inverse(), s5[i + 1].inverse()));
}

TEST_CASE("interval enumeration") {
  CHECK(interval(P("1234"), P("4231")).members.size() == 20);
  CHECK(interval(P("1234"), P("3412")).members.size() == 14);
  const Permutation u = P("2413");
  const BruhatInterval single = interval(u, u);
  REQUIRE(single.members.size() == 1);
  CHECK(single.members[0] == u);
  for (int n = 2; n <= 5; ++n) {
    const BruhatInterval full = interval(Permutation::identity(n), Permutation::longest(n));
    size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<size_t>(k);
    CHECK(full.members.size() == fact);
  }
  CHECK_THROWS_AS(interval(P("4231"), P("1234")), std::invalid_argument);
  const Permutation big = Permutation::identity(9);
  CHECK_THROWS_AS(interval(big, big), GuardError);
}

TEST_CASE("interval members are exactly the comparable elements") {
  const Permutation w = P("4231");
  const BruhatInterval iv = interval(P("1234"), w);
  std::set<Permutation> members(iv.members.begin(), iv.members.end());
  for (const Permutation& u : all_permutations(4))
    CHECK(members.count(u) == (bruhat_leq(u, w) ? 1u : 0u));
  CHECK(members.count(iv.lower) == 1);
  CHECK(members.count(iv.upper) == 1);
}
