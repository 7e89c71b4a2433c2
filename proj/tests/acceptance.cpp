// Acceptance suite: one pass/fail line per criterion, each with its stated
// exactness requirement and wall-clock budget. Exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "bip/edge_set.hpp"
#include "bip/intpoly.hpp"
#include "bip/poincare.hpp"
#include "bip/polytope.hpp"
#include "bip/retraction.hpp"
#include "bip/verify.hpp"

using namespace bip;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double seconds, double budget,
            const std::string& detail) {
  const bool in_budget = seconds <= budget;
  const bool ok = pass && in_budget;
  if (!ok) ++g_failures;
  std::ostringstream line;
  line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << "  ("
       << static_cast<long long>(seconds * 1000.0) << " ms, budget "
       << static_cast<long long>(budget * 1000.0) << " ms)";
  if (!pass && !detail.empty()) line << "  -- " << detail;
  if (pass && !in_budget) line << "  -- over time budget";
  std::cout << line.str() << "\n";
}

template <typename F>
void criterion(int number, const std::string& name, double budget_seconds, F body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body();
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, pass, seconds, budget_seconds, detail);
}

Permutation P(const std::string& s) { return Permutation::parse(s); }

struct TableRow {
  const char* u;
  ZVec mu;
  long long h;
  int a;
};

// Per-u triples (mu(u), h(mu(u)) with a = (12,2,-1,-2), a_w(u)), in h order.
const std::vector<TableRow> kTable4231 = {
    {"1234", {1, 2, 3, 4}, 5, 3},  {"1243", {1, 2, 4, 3}, 6, 2},
    {"1324", {1, 3, 2, 4}, 8, 2},  {"1423", {1, 3, 4, 2}, 10, 2},
    {"1342", {1, 4, 2, 3}, 12, 2}, {"1432", {1, 4, 3, 2}, 13, 1},
    {"2134", {2, 1, 3, 4}, 15, 2}, {"2143", {2, 1, 4, 3}, 16, 1},
    {"3124", {2, 3, 1, 4}, 21, 2}, {"4123", {2, 3, 4, 1}, 24, 2},
    {"3142", {2, 4, 1, 3}, 25, 2}, {"4132", {2, 4, 3, 1}, 27, 1},
    {"2314", {3, 1, 2, 4}, 28, 2}, {"2413", {3, 1, 4, 2}, 30, 2},
    {"3214", {3, 2, 1, 4}, 31, 1}, {"4213", {3, 2, 4, 1}, 34, 1},
    {"2341", {4, 1, 2, 3}, 42, 2}, {"2431", {4, 1, 3, 2}, 43, 1},
    {"3241", {4, 2, 1, 3}, 45, 1}, {"4231", {4, 2, 3, 1}, 47, 0},
};

const std::vector<TableRow> kTable3412 = {
    {"1234", {1, 2, 3, 4}, 5, 3},  {"1243", {1, 2, 4, 3}, 6, 2},
    {"1324", {1, 3, 2, 4}, 8, 2},  {"1423", {1, 3, 4, 2}, 10, 2},
    {"1342", {1, 4, 2, 3}, 12, 2}, {"1432", {1, 4, 3, 2}, 13, 1},
    {"2134", {2, 1, 3, 4}, 15, 2}, {"2143", {2, 1, 4, 3}, 16, 1},
    {"3124", {2, 3, 1, 4}, 21, 2}, {"3142", {2, 4, 1, 3}, 25, 1},
    {"2314", {3, 1, 2, 4}, 28, 2}, {"2413", {3, 1, 4, 2}, 30, 1},
    {"3214", {3, 2, 1, 4}, 31, 1}, {"3412", {3, 4, 1, 2}, 39, 0},
};

std::string compare_table(const Permutation& w, const std::vector<TableRow>& want) {
  const ZVec a = {12, 2, -1, -2};
  struct Row {
    Permutation u;
    ZVec mu;
    long long h;
    int aw;
  };
  std::vector<Row> got;
  for (const Permutation& u : interval(Permutation::identity(4), w).members) {
    Row r{u, moment_point(u), 0, ascent_count(u, w)};
    for (size_t c = 0; c < 4; ++c) r.h += a[c] * r.mu[c];
    got.push_back(std::move(r));
  }
  std::sort(got.begin(), got.end(), [](const Row& x, const Row& y) { return x.h < y.h; });
  if (got.size() != want.size())
    return "row count " + std::to_string(got.size()) + " != " + std::to_string(want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    if (got[i].u != P(want[i].u) || got[i].mu != want[i].mu || got[i].h != want[i].h ||
        got[i].aw != want[i].a)
      return "row " + std::to_string(i) + " mismatch at u = " + got[i].u.str();
  }
  return "";
}

// Deterministic pairs u <= w via downward random walks from random w.
std::vector<std::pair<Permutation, Permutation>> sample_pairs(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Permutation> all = all_permutations(n);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::vector<std::pair<Permutation, Permutation>> out;
  while (static_cast<int>(out.size()) < count) {
    const Permutation w = all[pick(rng)];
    Permutation u = w;
    std::uniform_int_distribution<int> steps(0, u.length());
    for (int s = steps(rng); s > 0; --s) {
      std::vector<Permutation> down;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          Permutation v = u.swap_values(a, b);
          if (v.length() < u.length()) down.push_back(std::move(v));
        }
      if (down.empty()) break;
      std::uniform_int_distribution<size_t> d(0, down.size() - 1);
      u = down[d(rng)];
    }
    out.emplace_back(std::move(u), w);
  }
  return out;
}

std::string skeleton_check(const Permutation& w) {
  const CheckResult r = check_skeleton_oracle(w);
  if (!r.pass) return r.name + ": " + r.detail;
  const CheckResult e = check_points_extremal(w);
  if (!e.pass) return e.name + ": " + e.detail;
  return "";
}

}  // namespace

int main() {
  criterion(1, "exact Poincare polynomials of Y_4231 and Y_3412", 1.0, [] {
    if (poincare_polynomial(P("4231")) != IntPolynomial({1, 0, 7, 0, 11, 0, 1}))
      return std::string("P(Y_4231) wrong: ") + poincare_polynomial(P("4231")).str();
    if (poincare_polynomial(P("3412")) != IntPolynomial({1, 0, 5, 0, 7, 0, 1}))
      return std::string("P(Y_3412) wrong: ") + poincare_polynomial(P("3412")).str();
    return std::string();
  });

  criterion(2, "per-u tables for [id,4231] and [id,3412] with a = (12,2,-1,-2)", 1.0, [] {
    std::string err = compare_table(P("4231"), kTable4231);
    if (!err.empty()) return "w=4231: " + err;
    err = compare_table(P("3412"), kTable3412);
    if (!err.empty()) return "w=3412: " + err;
    // spot anchors
    const ZVec mu4132 = moment_point(P("4132"));
    long long h = 12 * mu4132[0] + 2 * mu4132[1] - mu4132[2] - 2 * mu4132[3];
    if (h != 27) return std::string("h(mu(4132)) != 27");
    if (ascent_count(P("1234"), P("4231")) != 3) return std::string("a_4231(1234) != 3");
    if (ascent_count(P("2143"), P("3412")) != 1) return std::string("a_3412(2143) != 1");
    return std::string();
  });

  criterion(3, "worked raw/reduced edge sets for (u,w) = (2143, 3412)", 1.0, [] {
    const BruhatEdgeSet es = edge_set(P("2143"), P("3412"));
    const std::vector<ValuePair> raw = {{1, 4}, {2, 1}, {2, 3}, {4, 3}};
    const std::vector<ValuePair> reduced = {{1, 4}, {2, 1}, {4, 3}};
    if (es.raw != raw) return std::string("raw edge set differs");
    if (es.reduced != reduced) return std::string("reduced edge set differs");
    return std::string();
  });

  criterion(4, "pyramid pipeline with a = (-2,-1,3)", 1.0, [] {
    const LatticePolytope pyr = LatticePolytope::hull(
        {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, 0, -1}, {0, 0, 1}});
    const OrientedSkeleton sk = orient_by_h(pyr, {-2, -1, 3});
    std::multiset<int> asc;
    for (const auto& nbrs : sk.ascending) asc.insert(static_cast<int>(nbrs.size()));
    if (asc != std::multiset<int>{0, 1, 2, 2, 3}) return std::string("asc multiset differs");
    const RetractionSequence rs = h_retraction(pyr, {-2, -1, 3});
    validate_sequence(pyr, rs);
    if (poincare_from_retraction(rs) != IntPolynomial({1, 0, 1, 0, 2, 0, 1}))
      return std::string("pyramid Poincare polynomial differs: ") +
             poincare_from_retraction(rs).str();
    return std::string();
  });

  criterion(5, "Q_{1324,4231}: no retraction sequence, 8 of 16 vertices simple", 60.0, [] {
    const LatticePolytope Q = bruhat_interval_polytope(P("1324"), P("4231"));
    if (Q.vertices().size() != 16)
      return "vertex count " + std::to_string(Q.vertices().size());
    int simple = 0;
    for (size_t v = 0; v < Q.vertices().size(); ++v)
      if (classify_vertex(Q, static_cast<int>(v)).is_simple) ++simple;
    if (simple != 8) return "simple vertices: " + std::to_string(simple);
    if (search_retraction(Q).has_value())
      return std::string("search unexpectedly found a retraction sequence");
    return std::string();
  });

  criterion(6, "A_{w0}(t) equals the Eulerian polynomial for n = 3,4,5", 10.0, [] {
    for (int n = 3; n <= 5; ++n) {
      const IntPolynomial via_interval = a_polynomial(Permutation::longest(n));
      const IntPolynomial via_descents = eulerian_polynomial(n);
      if (via_interval != via_descents)
        return "n=" + std::to_string(n) + ": " + via_interval.str() +
               " != " + via_descents.str();
    }
    return std::string();
  });

  criterion(7, "combinatorial skeleton = hull skeleton (all of S_4, 10 sampled S_5)", 300.0, [] {
    for (const Permutation& w : all_permutations(4)) {
      const std::string err = skeleton_check(w);
      if (!err.empty()) return err;
    }
    std::mt19937 rng(20260810);
    std::vector<Permutation> s5 = all_permutations(5);
    std::shuffle(s5.begin(), s5.end(), rng);
    for (size_t i = 0; i < 10; ++i) {
      const std::string err = skeleton_check(s5[i]);
      if (!err.empty()) return err;
    }
    return std::string();
  });

  criterion(8, "retraction route equals A_w(t^2) with smooth steps (all of S_4)", 120.0, [] {
    for (const Permutation& w : all_permutations(4)) {
      const LatticePolytope Q = bip_polytope(w);
      const RetractionSequence rs = h_retraction(Q, default_hvec(4));
      validate_sequence(Q, rs);
      if (poincare_from_retraction(rs) != poincare_polynomial(w))
        return "w=" + w.str() + ": polynomials differ";
      if (!smooth_step_certificate(Q, rs))
        return "w=" + w.str() + ": a step vertex is not smooth in its face";
    }
    return std::string();
  });

  criterion(9, "Betti formula equals A_w(t^2) on the all-smooth S_4 cases", 60.0, [] {
    int applicable = 0;
    for (const Permutation& w : all_permutations(4)) {
      const LatticePolytope Q = bip_polytope(w);
      bool all_smooth = true;
      for (size_t v = 0; v < Q.vertices().size() && all_smooth; ++v)
        all_smooth = classify_vertex(Q, static_cast<int>(v)).is_smooth;
      if (!all_smooth) continue;
      ++applicable;
      if (betti_from_fvector(Q.fvector(), Q.dim()) != poincare_polynomial(w))
        return "w=" + w.str() + ": Betti formula disagrees";
    }
    if (applicable == 0) return std::string("no all-smooth cases found");
    return std::string();
  });

  criterion(10, "lemma property suite (exhaustive S_4, 200 random S_5/S_6 pairs)", 300.0, [] {
    for (const Permutation& w : all_permutations(4))
      for (const Permutation& u : interval(Permutation::identity(4), w).members) {
        const std::string err = edge_lemma_failure(u, w);
        if (!err.empty()) return "(u,w)=(" + u.str() + "," + w.str() + "): " + err;
      }
    for (const auto& [u, w] : sample_pairs(5, 100, 101)) {
      const std::string err = edge_lemma_failure(u, w);
      if (!err.empty()) return "(u,w)=(" + u.str() + "," + w.str() + "): " + err;
    }
    for (const auto& [u, w] : sample_pairs(6, 100, 202)) {
      const std::string err = edge_lemma_failure(u, w);
      if (!err.empty()) return "(u,w)=(" + u.str() + "," + w.str() + "): " + err;
    }
    return std::string();
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
