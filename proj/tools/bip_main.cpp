// bip: Poincare polynomials of generic torus orbit closures in Schubert
// varieties, computed through Bruhat interval polytope combinatorics and
// cross-checked against an exact convex-hull oracle.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bip/edge_set.hpp"
#include "bip/errors.hpp"
#include "bip/json_io.hpp"
#include "bip/poincare.hpp"
#include "bip/retraction.hpp"
#include "bip/verify.hpp"

namespace {

using bip::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

ordered_json make_report(const std::string& command) {
  ordered_json j;
  j["schema"] = "bip-report/1";
  j["command"] = command;
  j["inputs"] = ordered_json::object();
  j["results"] = ordered_json::object();
  j["verification"] = ordered_json::array();
  return j;
}

void emit(const OutputOptions& opt, const ordered_json& report, const std::string& text) {
  std::string payload;
  if (opt.format == "json")
    payload = report.dump(2) + "\n";
  else
    payload = text;
  if (opt.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << payload;
  }
}

bip::ZVec parse_hvec(const std::string& s, int n) {
  bip::ZVec a;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(std::stoll(item));
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("--hvec needs exactly " + std::to_string(n) + " integers");
  return a;
}

std::string point_str(const bip::ZVec& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// --- poincare --------------------------------------------------------------

struct PoincareRow {
  bip::Permutation u;
  bip::ZVec mu;
  long long h;
  int a;
};

int run_poincare(const std::string& wtext, const std::string& hvec_text,
                 const OutputOptions& opt, int max_n) {
  const auto start = std::chrono::steady_clock::now();
  const bip::Permutation w = bip::Permutation::parse(wtext);
  if (w.n() > max_n)
    throw bip::GuardError("poincare: n exceeds --max-n (" + std::to_string(max_n) + ")");
  const bip::ZVec a =
      hvec_text.empty() ? bip::default_hvec(w.n()) : parse_hvec(hvec_text, w.n());

  const bip::BruhatInterval iv = bip::interval(bip::Permutation::identity(w.n()), w);
  std::vector<PoincareRow> rows;
  for (const bip::Permutation& u : iv.members) {
    PoincareRow row{u, bip::moment_point(u), 0, bip::ascent_count(u, w)};
    for (size_t c = 0; c < row.mu.size(); ++c) row.h += a[c] * row.mu[c];
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const PoincareRow& x, const PoincareRow& y) {
    if (x.h != y.h) return x.h < y.h;
    return x.u < y.u;
  });

  const bip::IntPolynomial A = bip::a_polynomial(w);
  const bip::IntPolynomial poincare = A.stretch(2);

  ordered_json report = make_report("poincare");
  report["inputs"]["w"] = w.str();
  report["inputs"]["hvec"] = a;
  report["results"]["n"] = w.n();
  report["results"]["interval_size"] = iv.members.size();
  report["results"]["A"] = bip::polynomial_to_json(A);
  report["results"]["poincare"] = bip::polynomial_to_json(poincare);
  ordered_json table = ordered_json::array();
  for (const PoincareRow& r : rows)
    table.push_back(ordered_json{{"u", r.u.str()}, {"mu", r.mu}, {"h", r.h}, {"a", r.a}});
  report["results"]["table"] = std::move(table);
  report["timing_ms"] = elapsed_ms(start);

  std::ostringstream text;
  if (opt.format == "csv") {
    text << "u,mu,h,a\n";
    for (const PoincareRow& r : rows)
      text << r.u.str() << ",\"" << point_str(r.mu) << "\"," << r.h << "," << r.a << "\n";
  } else {
    text << "w = " << w.str() << "  (" << iv.members.size() << " elements in [id, w])\n";
    text << "A_w(t)   = " << A.str() << "\n";
    text << "P(Y_w,t) = " << poincare.str() << "\n\n";
    text << "u          mu(u)            h      a_w(u)\n";
    for (const PoincareRow& r : rows) {
      std::string us = r.u.str(), ps = point_str(r.mu), hs = std::to_string(r.h);
      us.resize(std::max<size_t>(us.size() + 2, 11), ' ');
      ps.resize(std::max<size_t>(ps.size() + 2, 17), ' ');
      hs.resize(std::max<size_t>(hs.size() + 2, 7), ' ');
      text << us << ps << hs << r.a << "\n";
    }
  }
  emit(opt, report, text.str());
  return kExitOk;
}

// --- retraction ------------------------------------------------------------

int run_retraction(const std::string& vtext, const std::string& wtext,
                   const std::string& hvec_text, bool use_search, const OutputOptions& opt,
                   int max_n) {
  const auto start = std::chrono::steady_clock::now();
  const bip::Permutation v = bip::Permutation::parse(vtext);
  const bip::Permutation w = bip::Permutation::parse(wtext);
  if (v.n() != w.n()) throw std::invalid_argument("retraction: v and w must have the same n");
  if (w.n() > max_n)
    throw bip::GuardError("retraction: n exceeds --max-n (" + std::to_string(max_n) + ")");
  bip::HullLimits lim;
  lim.max_ambient_dim = max_n;

  // Q_{v^{-1}, w^{-1}}: hull of the moment points of [v, w].
  const bip::BruhatInterval iv = bip::interval(v, w);
  const bip::LatticePolytope P = bip::LatticePolytope::hull(bip::moment_points(iv), lim);
  const bip::ZVec a =
      hvec_text.empty() ? bip::default_hvec(w.n()) : parse_hvec(hvec_text, w.n());

  ordered_json report = make_report("retraction");
  report["inputs"]["v"] = v.str();
  report["inputs"]["w"] = w.str();
  report["inputs"]["mode"] = use_search ? "search" : "h";
  if (!use_search) report["inputs"]["hvec"] = a;
  report["results"]["polytope"] =
      ordered_json{{"vertices", P.vertices().size()}, {"dim", P.dim()}};

  std::ostringstream text;
  text << "Q_{" << v.str() << "^-1," << w.str() << "^-1}: " << P.vertices().size()
       << " vertices, dim " << P.dim() << "\n";

  if (use_search) {
    const auto rs = bip::search_retraction(P);
    report["results"]["exists"] = rs.has_value();
    if (!rs) {
      report["timing_ms"] = elapsed_ms(start);
      text << "no retraction sequence exists\n";
      emit(opt, report, text.str());
      return kExitHypothesis;
    }
    bip::validate_sequence(P, *rs);
    report["results"]["sequence"] = bip::retraction_to_json(P, *rs);
    report["results"]["smooth_steps"] = bip::smooth_step_certificate(P, *rs);
    report["timing_ms"] = elapsed_ms(start);
    const bip::IntPolynomial poly = bip::poincare_from_retraction(*rs);
    text << "retraction sequence found (" << rs->steps.size() << " steps)\n";
    text << "P(t) = " << poly.str() << "\n";
    emit(opt, report, text.str());
    return kExitOk;
  }

  const bip::OrientedSkeleton sk = bip::orient_by_h(P, a);
  const bip::RetractionSequence rs = bip::h_retraction(P, a);
  bip::validate_sequence(P, rs);
  report["results"]["exists"] = true;
  report["results"]["sequence"] = bip::retraction_to_json(P, rs);
  report["results"]["smooth_steps"] = bip::smooth_step_certificate(P, rs);
  report["timing_ms"] = elapsed_ms(start);

  const bip::IntPolynomial poly = bip::poincare_from_retraction(rs);
  text << "h-induced retraction sequence (" << rs.steps.size() << " steps)\n\n";
  text << "vertex           h       dim Q\n";
  for (const bip::RetractionStep& s : rs.steps) {
    std::string ps = point_str(P.vertices()[static_cast<size_t>(s.vertex)]);
    std::string hs = std::to_string(sk.h[static_cast<size_t>(s.vertex)]);
    ps.resize(std::max<size_t>(ps.size() + 2, 17), ' ');
    hs.resize(std::max<size_t>(hs.size() + 2, 8), ' ');
    text << ps << hs << s.dim << "\n";
  }
  text << "\nP(t) = " << poly.str() << "\n";
  emit(opt, report, text.str());
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int run_verify(const std::string& scope_w, bool scope_s4, const std::string& polytope_file,
               const std::string& hvec_text, bool richardson_s4, const OutputOptions& opt,
               int max_n) {
  const auto start = std::chrono::steady_clock::now();
  ordered_json report = make_report("verify");
  std::ostringstream text;
  std::vector<bip::CheckResult> checks;
  bip::HullLimits lim;
  lim.max_ambient_dim = max_n;

  if (scope_s4) {
    report["inputs"]["scope"] = "s4";
    checks = bip::verify_s4();
  } else if (!scope_w.empty()) {
    const bip::Permutation w = bip::Permutation::parse(scope_w);
    if (w.n() > max_n)
      throw bip::GuardError("verify: n exceeds --max-n (" + std::to_string(max_n) + ")");
    report["inputs"]["scope"] = "w";
    report["inputs"]["w"] = w.str();
    checks = bip::verify_w(w, lim);
  } else if (!polytope_file.empty()) {
    report["inputs"]["scope"] = "polytope";
    report["inputs"]["file"] = polytope_file;
    std::ifstream in(polytope_file);
    if (!in) throw std::invalid_argument("cannot read polytope file: " + polytope_file);
    ordered_json pj;
    in >> pj;
    const bip::LatticePolytope P = bip::polytope_from_json(pj, lim);
    report["results"]["polytope"] = ordered_json{
        {"vertices", P.vertices().size()}, {"dim", P.dim()}, {"fvector", P.fvector()}};
    checks.push_back({"euler_relation", P.euler_ok(), ""});
    if (!hvec_text.empty()) {
      const bip::ZVec a = parse_hvec(hvec_text, P.ambient_dim());
      try {
        const bip::RetractionSequence rs = bip::h_retraction(P, a);
        bip::validate_sequence(P, rs);
        const bip::IntPolynomial poly = bip::poincare_from_retraction(rs);
        report["results"]["h_retraction"] = bip::retraction_to_json(P, rs);
        checks.push_back({"h_retraction", true, poly.str()});
      } catch (const bip::HypothesisError& e) {
        checks.push_back({"h_retraction", false, e.what()});
      }
    }
    const auto rs = bip::search_retraction(P);
    if (rs) {
      bip::validate_sequence(P, *rs);
      const bip::IntPolynomial poly = bip::poincare_from_retraction(*rs);
      report["results"]["search"] = bip::retraction_to_json(P, *rs);
      checks.push_back({"retraction_exists", true, poly.str()});
    } else {
      checks.push_back({"retraction_exists", false, "no retraction sequence exists"});
    }
  } else if (!richardson_s4) {
    throw std::invalid_argument("verify: choose a scope (--s4, --w, --polytope, --richardson-s4)");
  }

  if (richardson_s4) {
    ordered_json census = ordered_json::array();
    int admitting = 0;
    for (const bip::RetractionCensusRow& row : bip::retraction_census(4)) {
      census.push_back(ordered_json{{"v", row.v.str()},
                                    {"w", row.w.str()},
                                    {"retraction_exists", row.exists},
                                    {"simple_vertices", row.simple_vertices},
                                    {"vertices", row.total_vertices}});
      if (row.exists) ++admitting;
    }
    report["results"]["richardson_census"] =
        ordered_json{{"pairs", census.size()}, {"admitting", admitting}, {"rows", census}};
    text << "richardson census over S_4: " << admitting << "/" << census.size()
         << " comparable pairs admit a retraction sequence\n";
  }

  bool all_pass = true;
  for (const bip::CheckResult& c : checks) {
    all_pass = all_pass && c.pass;
    report["verification"].push_back(
        ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) text << "  (" << c.detail << ")";
    text << "\n";
  }
  report["results"]["all_pass"] = all_pass;
  report["timing_ms"] = elapsed_ms(start);
  emit(opt, report, text.str());
  return all_pass ? kExitOk : kExitHypothesis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat interval polytopes: Poincare polynomials of generic "
               "torus orbit closures, retraction sequences, and an exact "
               "convex-hull cross-check"};
  app.require_subcommand(1);

  OutputOptions opt;

  std::string poincare_w, poincare_hvec;
  int poincare_max_n = 8;
  CLI::App* cmd_poincare =
      app.add_subcommand("poincare", "A_w(t), P(Y_w,t) and the per-u table for [id, w]");
  cmd_poincare->add_option("w", poincare_w, "upper permutation, one-line notation")->required();
  cmd_poincare->add_option("--hvec", poincare_hvec, "height vector a_1,...,a_n (default 2^(n-i))");
  cmd_poincare->add_option("--max-n", poincare_max_n, "rank guard (default 8)");

  std::string ret_v, ret_w, ret_hvec;
  bool ret_search = false;
  int ret_max_n = 6;
  CLI::App* cmd_retraction = app.add_subcommand(
      "retraction", "retraction sequence of the interval polytope Q_{v^-1,w^-1}");
  cmd_retraction->add_option("v", ret_v, "lower permutation")->required();
  cmd_retraction->add_option("w", ret_w, "upper permutation")->required();
  cmd_retraction->add_option("--hvec", ret_hvec, "height vector a_1,...,a_n");
  cmd_retraction->add_flag("--search", ret_search,
                           "backtracking search instead of the h-induced construction");
  cmd_retraction->add_option("--max-n", ret_max_n,
                             "rank guard for hull-backed commands (default 6)");

  std::string verify_w_text, verify_polytope, verify_hvec;
  bool verify_s4_flag = false, verify_richardson = false;
  int verify_max_n = 6;
  CLI::App* cmd_verify = app.add_subcommand("verify", "cross-module invariant suites");
  cmd_verify->add_flag("--s4", verify_s4_flag, "run every suite over all w in S_4");
  cmd_verify->add_option("--w", verify_w_text, "run the suites for a single w");
  cmd_verify->add_option("--polytope", verify_polytope, "polytope JSON file to check");
  cmd_verify->add_option("--hvec", verify_hvec, "height vector for --polytope");
  cmd_verify->add_flag("--richardson-s4", verify_richardson,
                       "census: which (v,w) pairs in S_4 admit a retraction sequence");
  cmd_verify->add_option("--max-n", verify_max_n,
                         "rank guard for hull-backed commands (default 6)");

  for (CLI::App* sub : {cmd_poincare, cmd_retraction, cmd_verify}) {
    sub->add_option("--format", opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", opt.out_path, "write the report to a file");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_poincare->parsed())
      return run_poincare(poincare_w, poincare_hvec, opt, poincare_max_n);
    if (cmd_retraction->parsed()) {
      if (opt.format == "csv") throw std::invalid_argument("csv is limited to per-u tables");
      return run_retraction(ret_v, ret_w, ret_hvec, ret_search, opt, ret_max_n);
    }
    if (cmd_verify->parsed()) {
      if (opt.format == "csv") throw std::invalid_argument("csv is limited to per-u tables");
      return run_verify(verify_w_text, verify_s4_flag, verify_polytope, verify_hvec,
                        verify_richardson, opt, verify_max_n);
    }
  } catch (const bip::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const bip::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
